"""Bit-packed symplectic linear algebra over the two-element field.

The central object is the 2k-dimensional F2 vector space V_k = L_k x L_k*
carrying the alternating form E((x,x*),(y,y*)) = y*(x) + x*(y).  Vectors are
packed into a single 2k-bit word with the x part in the high k bits and
coordinate 1 most significant, so that the text form "abc:def" reads off the
bits directly.  Everything downstream (Heisenberg elements, quadratic form
labels, root images) indexes into this space.

Matrices act on column vectors (x;x*).  Group closures are delegated to the
qe7._kernel backends, which work on the same packed encodings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from qe7._kernel import closure_u64

MAX_RANK = 4


def _parity(word: int) -> int:
    return bin(word).count("1") & 1


def _check_rank(k: int) -> None:
    if not 1 <= k <= MAX_RANK:
        raise ValueError(f"rank must be in 1..{MAX_RANK}, got {k}")


class RankMismatch(ValueError):
    """Operands live in symplectic spaces of different rank."""


def _same_rank(a, b) -> int:
    if a.k != b.k:
        raise RankMismatch(f"rank mismatch: {a.k} != {b.k}")
    return a.k


@dataclass(frozen=True)
class SympVector:
    """Element (x, x*) of V_k, bit-packed with coordinate 1 most significant."""

    k: int
    x: int
    xstar: int

    def __post_init__(self):
        _check_rank(self.k)
        top = 1 << self.k
        if not (0 <= self.x < top and 0 <= self.xstar < top):
            raise ValueError("coordinate bits out of range for rank")

    @classmethod
    def from_string(cls, text: str) -> "SympVector":
        """Parse the "abc:def" form (k bits, colon, k bits)."""
        left, sep, right = text.partition(":")
        if not sep or len(left) != len(right) or not left:
            raise ValueError(f"malformed vector string {text!r}")
        if set(left + right) - {"0", "1"}:
            raise ValueError(f"malformed vector string {text!r}")
        return cls(len(left), int(left, 2), int(right, 2))

    @classmethod
    def from_packed(cls, k: int, word: int) -> "SympVector":
        mask = (1 << k) - 1
        return cls(k, (word >> k) & mask, word & mask)

    @classmethod
    def zero(cls, k: int) -> "SympVector":
        return cls(k, 0, 0)

    @property
    def packed(self) -> int:
        return (self.x << self.k) | self.xstar

    def is_zero(self) -> bool:
        return self.x == 0 and self.xstar == 0

    def __add__(self, other: "SympVector") -> "SympVector":
        _same_rank(self, other)
        return SympVector(self.k, self.x ^ other.x, self.xstar ^ other.xstar)

    def __str__(self) -> str:
        return f"{self.x:0{self.k}b}:{self.xstar:0{self.k}b}"

    def __repr__(self) -> str:
        return f"SympVector({self})"


def basis_vectors(k: int) -> list[SympVector]:
    """The 2k basis vectors, x-part units first, coordinate 1 first."""
    _check_rank(k)
    return [SympVector.from_packed(k, 1 << (2 * k - 1 - j)) for j in range(2 * k)]


def all_vectors(k: int) -> list[SympVector]:
    _check_rank(k)
    return [SympVector.from_packed(k, w) for w in range(1 << (2 * k))]


def symplectic_form(v: SympVector, w: SympVector) -> int:
    """E(v, w) = w*(x) + v*(y) over F2; alternating and nondegenerate."""
    _same_rank(v, w)
    return _parity(w.xstar & v.x) ^ _parity(v.xstar & w.x)


def transvection_apply(v: SympVector, w: SympVector) -> SympVector:
    """t_v(w) = w + E(w, v) v; an involution fixing the E-orthogonal of v."""
    if symplectic_form(w, v):
        return w + v
    return w


class SympMatrix:
    """2k x 2k matrix over F2, acting on packed column vectors (x;x*).

    Rows are stored as 2k-bit ints with the same bit layout as SympVector,
    so M.apply(v) is a parity of row & packed per row.
    """

    __slots__ = ("k", "rows")

    def __init__(self, k: int, rows: Sequence[int]):
        _check_rank(k)
        n = 2 * k
        if len(rows) != n:
            raise ValueError("wrong number of rows")
        mask = (1 << n) - 1
        if any(not 0 <= r <= mask for r in rows):
            raise ValueError("row bits out of range")
        self.k = k
        self.rows = tuple(rows)

    @classmethod
    def identity(cls, k: int) -> "SympMatrix":
        n = 2 * k
        return cls(k, [1 << (n - 1 - i) for i in range(n)])

    @classmethod
    def from_columns(cls, k: int, cols: Sequence[SympVector]) -> "SympMatrix":
        """Build from the images of the 2k basis vectors (column action)."""
        n = 2 * k
        if len(cols) != n:
            raise ValueError("need 2k columns")
        rows = [0] * n
        for j, c in enumerate(cols):
            if c.k != k:
                raise RankMismatch("column rank mismatch")
            p = c.packed
            for i in range(n):
                if (p >> (n - 1 - i)) & 1:
                    rows[i] |= 1 << (n - 1 - j)
        return cls(k, rows)

    @classmethod
    def from_entries(cls, k: int, entries: Sequence[Sequence[int]]) -> "SympMatrix":
        n = 2 * k
        rows = []
        for row in entries:
            if len(row) != n:
                raise ValueError("wrong row length")
            word = 0
            for j, e in enumerate(row):
                if e & 1:
                    word |= 1 << (n - 1 - j)
            rows.append(word)
        return cls(k, rows)

    def entry(self, i: int, j: int) -> int:
        n = 2 * self.k
        return (self.rows[i] >> (n - 1 - j)) & 1

    def entries(self) -> list[list[int]]:
        n = 2 * self.k
        return [[self.entry(i, j) for j in range(n)] for i in range(n)]

    def apply(self, v: SympVector) -> SympVector:
        _same_rank(self, v)
        n = 2 * self.k
        p = v.packed
        out = 0
        for i, row in enumerate(self.rows):
            if _parity(row & p):
                out |= 1 << (n - 1 - i)
        return SympVector.from_packed(self.k, out)

    def __mul__(self, other: "SympMatrix") -> "SympMatrix":
        _same_rank(self, other)
        n = 2 * self.k
        rows = []
        for arow in self.rows:
            acc = 0
            for j in range(n):
                if (arow >> (n - 1 - j)) & 1:
                    acc ^= other.rows[j]
            rows.append(acc)
        return SympMatrix(self.k, rows)

    def transpose(self) -> "SympMatrix":
        n = 2 * self.k
        rows = [0] * n
        for i, row in enumerate(self.rows):
            for j in range(n):
                if (row >> (n - 1 - j)) & 1:
                    rows[j] |= 1 << (n - 1 - i)
        return SympMatrix(self.k, rows)

    def inverse(self) -> "SympMatrix":
        """Exact inverse by Gauss-Jordan elimination; raises if singular."""
        n = 2 * self.k
        aug = [(self.rows[i] << n) | (1 << (n - 1 - i)) for i in range(n)]
        for col in range(n):
            bit = 1 << (2 * n - 1 - col)
            pivot = next((r for r in range(col, n) if aug[r] & bit), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            for r in range(n):
                if r != col and aug[r] & bit:
                    aug[r] ^= aug[col]
        mask = (1 << n) - 1
        return SympMatrix(self.k, [row & mask for row in aug])

    def is_invertible(self) -> bool:
        try:
            self.inverse()
            return True
        except ValueError:
            return False

    def is_symplectic(self) -> bool:
        """Check E(Mu, Mv) = E(u, v) on all basis pairs."""
        basis = basis_vectors(self.k)
        images = [self.apply(e) for e in basis]
        for i, u in enumerate(basis):
            for j, v in enumerate(basis):
                if symplectic_form(images[i], images[j]) != symplectic_form(u, v):
                    return False
        return True

    def encode(self) -> int:
        """Canonical encoding: row bit patterns concatenated, row 0 first."""
        n = 2 * self.k
        word = 0
        for row in self.rows:
            word = (word << n) | row
        return word

    @classmethod
    def decode(cls, k: int, word: int) -> "SympMatrix":
        n = 2 * k
        mask = (1 << n) - 1
        rows = [(word >> (n * (n - 1 - i))) & mask for i in range(n)]
        return cls(k, rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SympMatrix)
            and self.k == other.k
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.k, self.rows))

    def __repr__(self) -> str:
        n = 2 * self.k
        body = ",".join(f"{r:0{n}b}" for r in self.rows)
        return f"SympMatrix(k={self.k}, rows=[{body}])"


def transvection_matrix(v: SympVector) -> SympMatrix:
    """Matrix of t_v in column action; the identity when v = 0."""
    cols = [transvection_apply(v, e) for e in basis_vectors(v.k)]
    return SympMatrix.from_columns(v.k, cols)


@dataclass(frozen=True)
class QuadLabel:
    """Quadratic form q_w(v) = x*(x) + E(v, w), labelled by w = (eps, eps').

    The parity eps'(eps) of the label splits the 4^k forms into the even and
    odd classes; it is recomputed and checked against any stored value.
    """

    k: int
    w: SympVector
    parity: int

    def __init__(self, w: SympVector, parity: int | None = None):
        computed = _parity(w.x & w.xstar)
        if parity is not None and parity != computed:
            raise ValueError("stored parity contradicts label")
        object.__setattr__(self, "k", w.k)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "parity", computed)

    @property
    def is_even(self) -> bool:
        return self.parity == 0

    def __str__(self) -> str:
        tag = "Q" if self.is_even else "A"
        return f"{tag}[{self.w}]"

    @classmethod
    def from_string(cls, text: str) -> "QuadLabel":
        if len(text) < 4 or text[0] not in "QA" or text[1] != "[" or text[-1] != "]":
            raise ValueError(f"malformed form label {text!r}")
        label = cls(SympVector.from_string(text[2:-1]))
        expected = 0 if text[0] == "Q" else 1
        if label.parity != expected:
            raise ValueError(f"label {text!r} has the wrong parity tag")
        return label


def quad_eval(q: QuadLabel, v: SympVector) -> int:
    """q_w(v) = x*(x) + E(v, w); homogeneous of degree two over F2."""
    _same_rank(q.w, v)
    return _parity(v.x & v.xstar) ^ symplectic_form(v, q.w)


def quad_transform(v: SympVector, q: QuadLabel) -> QuadLabel:
    """Action of t_v on labels: fixes q_w when q_w(v) = 1, else w -> v + w."""
    _same_rank(q.w, v)
    if quad_eval(q, v):
        return q
    return QuadLabel(v + q.w)


def enumerate_quad_forms(k: int, parity: int) -> list[tuple[QuadLabel, int]]:
    """All labels of the given parity with their zero counts, in packed order.

    Even forms number 2^(k-1)(2^k+1) and each vanishes at that many points;
    odd forms number 2^(k-1)(2^k-1) likewise.
    """
    _check_rank(k)
    if parity not in (0, 1):
        raise ValueError("parity must be 0 (even) or 1 (odd)")
    out = []
    vectors = all_vectors(k)
    for w in vectors:
        if _parity(w.x & w.xstar) != parity:
            continue
        q = QuadLabel(w)
        zeros = sum(1 for v in vectors if quad_eval(q, v) == 0)
        out.append((q, zeros))
    return out


class IsotropicSubspace:
    """Subspace of V_k on which E vanishes identically.

    The basis is kept in reduced echelon form over the packed words; the
    point set lists every nonzero element sorted by packed value, which is
    also the canonical comparison key.  Lagrangian means dimension k.
    """

    __slots__ = ("k", "basis", "points")

    def __init__(self, k: int, basis: Iterable[SympVector]):
        _check_rank(k)
        vecs = list(basis)
        if any(b.k != k for b in vecs):
            raise RankMismatch("basis rank mismatch")
        for i, u in enumerate(vecs):
            for v in vecs[i:]:
                if symplectic_form(u, v):
                    raise ValueError("basis is not isotropic")
        echelon: list[int] = []
        for b in vecs:
            word = b.packed
            for e in echelon:
                word = min(word, word ^ e)
            if word:
                echelon.append(word)
                echelon.sort(reverse=True)
        if len(echelon) != len(vecs):
            raise ValueError("basis is not independent")
        # full reduction for a canonical basis
        for i in range(len(echelon)):
            lead = echelon[i].bit_length() - 1
            for j in range(i):
                if (echelon[j] >> lead) & 1:
                    echelon[j] ^= echelon[i]
        self.k = k
        self.basis = tuple(SympVector.from_packed(k, w) for w in echelon)
        pts = set()
        for m in range(1, 1 << len(echelon)):
            word = 0
            for i in range(len(echelon)):
                if (m >> i) & 1:
                    word ^= echelon[i]
            pts.add(word)
        self.points = tuple(SympVector.from_packed(k, w) for w in sorted(pts))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_lagrangian(self) -> bool:
        return self.dim == self.k

    def contains(self, v: SympVector) -> bool:
        return v.is_zero() or any(v.packed == p.packed for p in self.points)

    def point_key(self) -> tuple[int, ...]:
        return tuple(p.packed for p in self.points)

    def subspaces_codim1(self) -> list["IsotropicSubspace"]:
        """All subspaces of dimension dim-1, sorted by point key."""
        if self.dim == 0:
            return []
        subs = {}
        pts = self.points
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                s = IsotropicSubspace(self.k, [pts[i], pts[j]])
                if s.dim == self.dim - 1:
                    subs[s.point_key()] = s
        return [subs[key] for key in sorted(subs)]

    def __str__(self) -> str:
        return ",".join(str(b) for b in self.basis)

    @classmethod
    def from_string(cls, k: int, text: str) -> "IsotropicSubspace":
        return cls(k, [SympVector.from_string(p) for p in text.split(",")])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IsotropicSubspace)
            and self.k == other.k
            and self.point_key() == other.point_key()
        )

    def __hash__(self) -> int:
        return hash((self.k, self.point_key()))

    def __repr__(self) -> str:
        return f"IsotropicSubspace({self})"


def standard_lagrangian(k: int) -> IsotropicSubspace:
    """L_k x {0}: all (x, 0)."""
    return IsotropicSubspace(
        k, [SympVector(k, 1 << (k - 1 - i), 0) for i in range(k)]
    )


def enumerate_lagrangians(k: int) -> list[IsotropicSubspace]:
    """All maximal isotropic subspaces, sorted by point key.

    Builds isotropic flags by brute force and deduplicates by point set;
    fine for k <= 3 where there are at most 135.
    """
    if not 1 <= k <= 3:
        raise ValueError("lagrangian enumeration supports k in 1..3")
    nonzero = [v for v in all_vectors(k) if not v.is_zero()]
    found: dict[tuple[int, ...], IsotropicSubspace] = {}

    def extend(basis: list[SympVector]):
        if len(basis) == k:
            sub = IsotropicSubspace(k, basis)
            found.setdefault(sub.point_key(), sub)
            return
        span = IsotropicSubspace(k, basis) if basis else None
        for v in nonzero:
            if span is not None and span.contains(v):
                continue
            if any(symplectic_form(v, b) for b in basis):
                continue
            extend(basis + [v])

    extend([])
    return [found[key] for key in sorted(found)]


class GroupCatalog:
    """Closure of matrix generators: order, membership, canonical enumeration.

    Elements are stored as the canonical integer encodings of SympMatrix in
    breadth-first discovery order (identity first, then generator products in
    word-length order, first occurrence wins).  The order is independent of
    the backend computing it.
    """

    def __init__(self, k: int, encodings: "np.ndarray", generators: tuple[SympMatrix, ...]):
        self.k = k
        self.encodings = encodings
        self.generators = generators
        self._sorted = np.sort(encodings)

    @property
    def order(self) -> int:
        return int(self.encodings.size)

    def contains(self, m: SympMatrix) -> bool:
        if m.k != self.k:
            return False
        enc = m.encode()
        i = int(np.searchsorted(self._sorted, enc))
        return i < self._sorted.size and int(self._sorted[i]) == enc

    def element(self, i: int) -> SympMatrix:
        return SympMatrix.decode(self.k, int(self.encodings[i]))

    def __iter__(self):
        return (self.element(i) for i in range(self.order))

    def __len__(self) -> int:
        return self.order


def generate_group(generators: Sequence[SympMatrix]) -> GroupCatalog:
    """Breadth-first closure of the generators under multiplication."""
    if not generators:
        raise ValueError("need at least one generator")
    k = generators[0].k
    if any(g.k != k for g in generators):
        raise RankMismatch("generator rank mismatch")
    for g in generators:
        if not g.is_invertible():
            raise ValueError("non-invertible generator")
    gen_rows = [g.rows for g in generators]
    codes = closure_u64(gen_rows, 2 * k)
    encodings = _codes_to_encodings(codes, 2 * k)
    return GroupCatalog(k, encodings, tuple(generators))


def _codes_to_encodings(codes: "np.ndarray", n: int) -> "np.ndarray":
    """Convert kernel codes (row i in byte i) to row-concatenated encodings."""
    rows = codes.reshape(-1, 1).view(np.uint8)[:, :n].astype(np.uint64)
    out = np.zeros(len(codes), dtype=np.uint64)
    for i in range(n):
        out = (out << np.uint64(n)) | rows[:, i]
    return out


def orthogonal_group_order(q: QuadLabel) -> int:
    """Order of O(q_w), generated by the transvections t_v with q_w(v) = 1."""
    if q.k > 3:
        raise ValueError("orthogonal group closure supports k in 1..3")
    gens = [
        transvection_matrix(v)
        for v in all_vectors(q.k)
        if not v.is_zero() and quad_eval(q, v) == 1
    ]
    return generate_group(gens).order


# Labels above the E7 diagram nodes alpha_1..alpha_7, plus the one above the
# highest root; these satisfy E(v_i, v_j) = (alpha_i, alpha_j) mod 2.
DIAGRAM_LABELS: tuple[SympVector, ...] = tuple(
    SympVector.from_string(s)
    for s in (
        "101:100",
        "011:000",
        "111:111",
        "101:001",
        "001:111",
        "101:011",
        "010:111",
    )
)
HIGHEST_ROOT_LABEL = SympVector.from_string("100:111")

# k=2 chain whose transvections realize the Coxeter presentation of S6.
S6_CHAIN_LABELS: tuple[SympVector, ...] = tuple(
    SympVector.from_string(s)
    for s in ("00:10", "10:10", "01:11", "00:01", "01:01")
)
