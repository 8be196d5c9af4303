"""The E7 root system in the Picard lattice of a degree-two Del Pezzo surface.

The lattice Z^8 with pairing diag(-1, 1, ..., 1) (the sign-flipped
intersection form) contains the canonical class K = -3e0 + e1 + ... + e7
with [K,K] = -2.  Its orthogonal complement is the E7 root lattice: 63
positive roots split 21 + 35 + 7 into the families e_i - e_j,
e0 - e_i - e_j - e_k and 2e0 - (e1+...+e7) + e_i, while the 56 exceptional
classes l with [l,K] = 1 = [l,l] realize the weights of the 56-dimensional
representation in 28 opposite pairs.

Reduction mod two sends the root lattice onto the three-qubit symplectic
space V_3, matching reflections with transvections, seven-orthogonal-root
sets with Lagrangian subspaces, and weight pairs with odd quadratic forms.
The 56-dimensional representation restricted to the seven commuting sl(2)'s
of such a root set splits into one 8-dimensional block per Fano line; the
block data is assembled here entirely from integer pairings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from qe7._kernel import closure_i8
from qe7.f2sym import (
    DIAGRAM_LABELS,
    IsotropicSubspace,
    QuadLabel,
    SympVector,
    all_vectors,
    enumerate_lagrangians,
    quad_eval,
)


@dataclass(frozen=True)
class PicVector:
    """Integer vector n0 e0 + ... + n7 e7 with the signature (1,7) pairing."""

    coeffs: tuple

    def __init__(self, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != 8:
            raise ValueError("need 8 coefficients")
        object.__setattr__(self, "coeffs", coeffs)

    def __add__(self, other: "PicVector") -> "PicVector":
        return PicVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "PicVector") -> "PicVector":
        return PicVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "PicVector":
        return PicVector(tuple(-a for a in self.coeffs))

    def scaled(self, n: int) -> "PicVector":
        return PicVector(tuple(n * a for a in self.coeffs))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


def pic_pairing(a: PicVector, b: PicVector) -> int:
    """[a, b] = -a0 b0 + a1 b1 + ... + a7 b7."""
    s = -a.coeffs[0] * b.coeffs[0]
    for i in range(1, 8):
        s += a.coeffs[i] * b.coeffs[i]
    return s


def basis_e(i: int) -> PicVector:
    return PicVector(tuple(1 if j == i else 0 for j in range(8)))


CANONICAL_CLASS = PicVector((-3, 1, 1, 1, 1, 1, 1, 1))

# Simple roots in the Picard basis; node 2 is the branch node of the diagram.
SIMPLE_ROOTS: tuple[PicVector, ...] = (
    PicVector((0, 1, -1, 0, 0, 0, 0, 0)),
    PicVector((1, -1, -1, -1, 0, 0, 0, 0)),
    PicVector((0, 0, 1, -1, 0, 0, 0, 0)),
    PicVector((0, 0, 0, 1, -1, 0, 0, 0)),
    PicVector((0, 0, 0, 0, 1, -1, 0, 0)),
    PicVector((0, 0, 0, 0, 0, 1, -1, 0)),
    PicVector((0, 0, 0, 0, 0, 0, 1, -1)),
)

HIGHEST_ROOT_COORDS = (2, 2, 3, 4, 3, 2, 1)
# gamma = alpha2 + alpha5 + alpha7 pairs evenly with the whole root lattice
GAMMA_COORDS = (0, 1, 0, 0, 1, 0, 1)
# omega7 = (2a1 + 3a2 + 4a3 + 6a4 + 5a5 + 4a6 + 3a7) / 2
OMEGA7_NUMERATORS = (2, 3, 4, 6, 5, 4, 3)


@lru_cache(maxsize=1)
def cartan_matrix() -> tuple:
    """Gram matrix [d_i, d_j] of the simple roots (determinant 2)."""
    return tuple(
        tuple(pic_pairing(a, b) for b in SIMPLE_ROOTS) for a in SIMPLE_ROOTS
    )


@dataclass(frozen=True)
class RootLabel:
    """A root R_I named by its index set I, with a sign for the negative."""

    indices: tuple
    sign: int = 1

    def __init__(self, indices, sign: int = 1):
        idx = tuple(sorted(int(i) for i in indices))
        if sign not in (1, -1):
            raise ValueError("sign must be +-1")
        if len(idx) == 2:
            ok = 1 <= idx[0] < idx[1] <= 8
        elif len(idx) == 4:
            ok = idx[3] == 8 and 1 <= idx[0] < idx[1] < idx[2] <= 7
        else:
            ok = False
        if not ok:
            raise ValueError(f"no root has index set {idx}")
        object.__setattr__(self, "indices", idx)
        object.__setattr__(self, "sign", sign)

    @property
    def name(self) -> str:
        body = "R" + "".join(str(i) for i in self.indices)
        return body if self.sign == 1 else "-" + body

    @classmethod
    def from_name(cls, name: str) -> "RootLabel":
        sign = 1
        if name.startswith("-"):
            sign, name = -1, name[1:]
        if not name.startswith("R") or not name[1:].isdigit():
            raise ValueError(f"malformed root name {name!r}")
        return cls(tuple(int(c) for c in name[1:]), sign)

    def vector(self) -> PicVector:
        idx = self.indices
        if len(idx) == 2 and idx[1] <= 7:
            v = basis_e(idx[0]) - basis_e(idx[1])
        elif len(idx) == 2:
            v = PicVector((2, -1, -1, -1, -1, -1, -1, -1)) + basis_e(idx[0])
        else:
            v = basis_e(0) - basis_e(idx[0]) - basis_e(idx[1]) - basis_e(idx[2])
        return v if self.sign == 1 else -v

    def negated(self) -> "RootLabel":
        return RootLabel(self.indices, -self.sign)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class WeightLabel:
    """A weight +-Omega_S of the 56-dimensional representation, |S| = 2."""

    pair: tuple
    sign: int = 1

    def __init__(self, pair, sign: int = 1):
        s = tuple(sorted(int(i) for i in pair))
        if len(s) != 2 or not (1 <= s[0] < s[1] <= 8):
            raise ValueError(f"no weight has index pair {s}")
        if sign not in (1, -1):
            raise ValueError("sign must be +-1")
        object.__setattr__(self, "pair", s)
        object.__setattr__(self, "sign", sign)

    @property
    def name(self) -> str:
        body = "W" + "".join(str(i) for i in self.pair)
        return body if self.sign == 1 else "-" + body

    @classmethod
    def from_name(cls, name: str) -> "WeightLabel":
        sign = 1
        if name.startswith("-"):
            sign, name = -1, name[1:]
        if not name.startswith("W") or not name[1:].isdigit():
            raise ValueError(f"malformed weight name {name!r}")
        return cls(tuple(int(c) for c in name[1:]), sign)

    def vector(self) -> PicVector:
        """The exceptional-curve class; the two signs sum to -K."""
        i, j = self.pair
        if j <= 7:
            pos = PicVector((2, -1, -1, -1, -1, -1, -1, -1)) + basis_e(i) + basis_e(j)
        else:
            pos = PicVector((3, -1, -1, -1, -1, -1, -1, -1)) - basis_e(i)
        if self.sign == 1:
            return pos
        return (-CANONICAL_CLASS) - pos

    def negated(self) -> "WeightLabel":
        return WeightLabel(self.pair, -self.sign)

    def __str__(self) -> str:
        return self.name


def enumerate_roots() -> list[RootLabel]:
    """The 63 positive roots: 21 R_ij, then 35 R_ijk8, then 7 R_i8."""
    out = [RootLabel((i, j)) for i, j in combinations(range(1, 8), 2)]
    out += [RootLabel((i, j, k, 8)) for i, j, k in combinations(range(1, 8), 3)]
    out += [RootLabel((i, 8)) for i in range(1, 8)]
    return out


def enumerate_weights() -> list[WeightLabel]:
    """The 28 positive weights: 21 Omega_ij then 7 Omega_i8."""
    out = [WeightLabel((i, j)) for i, j in combinations(range(1, 8), 2)]
    out += [WeightLabel((i, 8)) for i in range(1, 8)]
    return out


def all_weight_classes() -> list[WeightLabel]:
    """All 56 signed weights, positives first."""
    pos = enumerate_weights()
    return pos + [w.negated() for w in pos]


def weight_root_pairing(weight: WeightLabel, root: RootLabel) -> int:
    """[Omega_S, R_J], always in {-1, 0, 1}.

    The projection of the weight to the K-orthogonal complement differs from
    the raw class by a multiple of K, which pairs to zero with any root, so
    the raw Picard pairing already computes the weight/root pairing.
    """
    val = pic_pairing(weight.vector(), root.vector())
    if val not in (-1, 0, 1):
        raise AssertionError("weight/root pairing outside {-1,0,1}")
    return val


@dataclass(frozen=True)
class SimpleRootCoords:
    """Integer coordinates n1..n7 over the simple-root basis."""

    coords: tuple

    def __init__(self, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != 7:
            raise ValueError("need 7 coordinates")
        object.__setattr__(self, "coords", coords)

    def to_pic(self) -> PicVector:
        v = PicVector((0,) * 8)
        for n, d in zip(self.coords, SIMPLE_ROOTS):
            v = v + d.scaled(n)
        return v

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


class InternalInconsistencyError(RuntimeError):
    """An exact solve produced a non-integral answer; must never happen."""


def _solve_simple_coords(v: PicVector) -> list[Fraction]:
    """Solve C n = ([d_i, v]) over Q for the Cartan matrix C."""
    c = [[Fraction(x) for x in row] for row in cartan_matrix()]
    b = [Fraction(pic_pairing(d, v)) for d in SIMPLE_ROOTS]
    n = 7
    for col in range(n):
        pivot = next(r for r in range(col, n) if c[r][col])
        c[col], c[pivot] = c[pivot], c[col]
        b[col], b[pivot] = b[pivot], b[col]
        inv = 1 / c[col][col]
        c[col] = [e * inv for e in c[col]]
        b[col] *= inv
        for r in range(n):
            if r != col and c[r][col]:
                f = c[r][col]
                c[r] = [e - f * p for e, p in zip(c[r], c[col])]
                b[r] -= f * b[col]
    return b


def root_in_simple_coords(root: RootLabel) -> SimpleRootCoords:
    """Expand a root over d_1..d_7; the solution is always integral."""
    sol = _solve_simple_coords(root.vector())
    if any(x.denominator != 1 for x in sol):
        raise InternalInconsistencyError(f"non-integral coordinates for {root}")
    coords = SimpleRootCoords(tuple(int(x) for x in sol))
    if coords.to_pic() != root.vector():
        raise InternalInconsistencyError(f"reconstruction failed for {root}")
    return coords


def pi_map(coords: SimpleRootCoords) -> SympVector:
    """Reduction Q(E7) -> V_3 sending the i-th simple root to v_i."""
    acc = SympVector.zero(3)
    for n, v in zip(coords.coords, DIAGRAM_LABELS):
        if n & 1:
            acc = acc + v
    return acc


def pi_of_root(root: RootLabel) -> SympVector:
    return pi_map(root_in_simple_coords(root))


@lru_cache(maxsize=1)
def root_of_point_map() -> dict:
    """The inverse bijection: nonzero points of V_3 -> positive roots."""
    table = {}
    for r in enumerate_roots():
        table[pi_of_root(r).packed] = r
    if len(table) != 63:
        raise InternalInconsistencyError("pi is not 2-to-1 on the roots")
    return table


def reflect(d: PicVector, x: PicVector) -> PicVector:
    """Reflection s_d(x) = x - [x, d] d for a norm-two vector d."""
    if pic_pairing(d, d) != 2:
        raise ValueError("reflection vector must have self-pairing 2")
    return x - d.scaled(pic_pairing(x, d))


def odd_form_of_weight(weight: WeightLabel) -> QuadLabel:
    """The odd quadratic form q with q(pi(alpha)) = 1 iff [omega, alpha] = 0.

    The roots orthogonal to a weight of the 56-dimensional representation
    form an E6 subsystem; its 36 positive members map onto the support of a
    unique odd form, and weight pairs to odd forms is a bijection.
    """
    support = {
        pi_of_root(r).packed
        for r in enumerate_roots()
        if weight_root_pairing(weight, r) == 0
    }
    matches = []
    for w in all_vectors(3):
        if not (w.x & w.xstar).bit_count() & 1:
            continue
        q = QuadLabel(w)
        if {v.packed for v in all_vectors(3) if quad_eval(q, v) == 1} == support:
            matches.append(q)
    if len(matches) != 1:
        raise InternalInconsistencyError(f"no unique odd form for {weight}")
    return matches[0]


@dataclass(frozen=True)
class OrthogonalRootSet:
    """Seven pairwise-orthogonal positive roots over a Lagrangian subspace."""

    lagrangian: IsotropicSubspace
    roots: tuple  # aligned with lagrangian.points

    def root_of_point(self, v: SympVector) -> RootLabel:
        for p, r in zip(self.lagrangian.points, self.roots):
            if p == v:
                return r
        raise KeyError(str(v))


def orthogonal_root_set(lagrangian: IsotropicSubspace) -> OrthogonalRootSet:
    """The seven positive roots whose images are the points of a Lagrangian."""
    if not (lagrangian.k == 3 and lagrangian.is_lagrangian):
        raise ValueError("need a Lagrangian subspace of the three-qubit space")
    table = root_of_point_map()
    roots = tuple(table[p.packed] for p in lagrangian.points)
    for a, b in combinations(roots, 2):
        if pic_pairing(a.vector(), b.vector()) != 0:
            raise InternalInconsistencyError("root set is not orthogonal")
    return OrthogonalRootSet(lagrangian, roots)


def orthogonal_root_sets() -> list[OrthogonalRootSet]:
    """All 135 sets of seven perpendicular positive roots."""
    return [orthogonal_root_set(L) for L in enumerate_lagrangians(3)]


@dataclass(frozen=True)
class FanoLine:
    """A line of the Fano plane with its roots and the weights it carries."""

    a: int | None
    points: tuple  # three nonzero SympVectors
    roots: tuple  # the three matching positive roots
    weights: tuple  # the four positive weights supported on the line


@dataclass(frozen=True)
class FanoDecomposition:
    """Restriction data of the 56-dimensional representation over a Lagrangian.

    Every line M of the Fano plane P(L) contributes one 8-dimensional block:
    the three sl(2)'s of the line act by their defining representation and
    the other four trivially, so the four weight pairs attached to M supply
    the 8 = 2^3 states.  The 7 x 4 positive weights partition all 28.
    """

    lagrangian: IsotropicSubspace
    points: tuple  # (SympVector, RootLabel) pairs
    lines: tuple  # FanoLine entries

    def to_json(self) -> dict:
        lines = []
        for ln in self.lines:
            entry = {
                "points": [str(p) for p in ln.points],
                "roots": [r.name for r in ln.roots],
                "weights": [w.name for w in ln.weights],
            }
            if ln.a is not None:
                entry["a"] = ln.a
            lines.append(entry)
        return {
            "lagrangian": str(self.lagrangian),
            "points": [{"v": str(v), "root": r.name} for v, r in self.points],
            "lines": lines,
        }


def _line_index(roots) -> int | None:
    """The common index of three R_{a..8} roots, if the line has that shape."""
    sets = [set(r.indices) for r in roots]
    if any(8 not in s or len(s) != 4 for s in sets):
        return None
    common = (sets[0] & sets[1] & sets[2]) - {8}
    if len(common) != 1:
        return None
    return common.pop()


def restriction_decomposition(lagrangian: IsotropicSubspace) -> FanoDecomposition:
    """Split the 56 weights across the seven lines of P(L).

    For each codimension-one subspace M of L, a positive weight belongs to M
    exactly when it pairs nonzero with the three roots over M and zero with
    the four others; each line receives four weights and the 28 positive
    weights are partitioned.
    """
    oset = orthogonal_root_set(lagrangian)
    root_at = {p.packed: r for p, r in zip(lagrangian.points, oset.roots)}
    positives = enumerate_weights()

    lines = []
    for sub in lagrangian.subspaces_codim1():
        in_roots = [root_at[p.packed] for p in sub.points]
        out_roots = [
            root_at[p.packed] for p in lagrangian.points if not sub.contains(p)
        ]
        carried = [
            w
            for w in positives
            if all(weight_root_pairing(w, r) != 0 for r in in_roots)
            and all(weight_root_pairing(w, r) == 0 for r in out_roots)
        ]
        if len(carried) != 4:
            raise InternalInconsistencyError("a line does not carry 4 weights")
        carried.sort(key=lambda w: (w.pair[1] == 8, w.pair))
        lines.append(
            FanoLine(
                _line_index(in_roots),
                tuple(sub.points),
                tuple(sorted(in_roots, key=lambda r: r.name)),
                tuple(carried),
            )
        )

    seen = [w.name for ln in lines for w in ln.weights]
    if sorted(seen) != sorted(w.name for w in positives):
        raise InternalInconsistencyError("weights do not partition across lines")

    if all(ln.a is not None for ln in lines):
        lines.sort(key=lambda ln: ln.a)
    else:
        lines.sort(key=lambda ln: tuple(p.packed for p in ln.points))
    return FanoDecomposition(
        lagrangian,
        tuple((p, root_at[p.packed]) for p in lagrangian.points),
        tuple(lines),
    )


def sl2_multiplicities(root: RootLabel) -> tuple[int, int]:
    """(n0, n1): counts of signed weights pairing 0 and +1 with the root."""
    vals = [weight_root_pairing(w, root) for w in all_weight_classes()]
    return vals.count(0), vals.count(1)


# ---------------------------------------------------------------------------
# The Weyl group in simple-root coordinates.


def simple_reflection_matrices() -> np.ndarray:
    """Column-action matrices of the 7 simple reflections on Q(E7)."""
    c = np.array(cartan_matrix(), dtype=np.int8)
    eye = np.eye(7, dtype=np.int8)
    return np.array([eye - np.outer(eye[i], c[i]) for i in range(7)], dtype=np.int8)


class WeylCatalog:
    """Closure of the simple reflections: order, membership, mod-2 kernel."""

    def __init__(self, elements: np.ndarray):
        self.elements = elements

    @property
    def order(self) -> int:
        return int(self.elements.shape[0])

    def contains(self, mat) -> bool:
        m = np.asarray(mat, dtype=np.int8)
        return bool((self.elements == m).all(axis=(1, 2)).any())

    def symplectic_kernel_indices(self) -> np.ndarray:
        """Indices of elements acting trivially on V_3.

        An element fixes every pi(alpha_j) exactly when V M = V mod 2, where
        the columns of V are the diagram labels v_1..v_7.
        """
        v = np.zeros((6, 7), dtype=np.uint8)
        for j, lab in enumerate(DIAGRAM_LABELS):
            p = lab.packed
            for r in range(6):
                v[r, j] = (p >> (5 - r)) & 1
        hits = []
        chunk = 1 << 16
        for lo in range(0, self.order, chunk):
            block = (self.elements[lo : lo + chunk] & 1).astype(np.uint8)
            prod = np.einsum("rk,nkj->nrj", v, block) & 1
            mask = (prod == v).all(axis=(1, 2))
            hits.append(np.nonzero(mask)[0] + lo)
        return np.concatenate(hits)


@lru_cache(maxsize=1)
def weyl_group() -> WeylCatalog:
    """Breadth-first closure of the simple reflections (2,903,040 elements)."""
    return WeylCatalog(closure_i8(simple_reflection_matrices()))
