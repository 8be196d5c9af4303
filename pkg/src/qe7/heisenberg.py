"""The Heisenberg group of k qubits and its exact Schroedinger representation.

Group elements are (i^s, x, x*) with the twisted product
(s,x,x*)(t,y,y*) = (s t (-1)^{y*(x)}, x+y, x*+y*).  The representation sends
(s,x,x*) to the signed monomial matrix  delta_a -> s (-1)^{x*(x+a)}
delta_{x+a}  on the 2^k delta functions, indexed with qubit 1 most
significant so that the x-part acts as a tensor power of the bit flip.

All matrices live over the ring Z[zeta8, 1/2], which contains both scalar
normalizations (1-i)/2 and 1/sqrt(2) used for normalizer elements, so no
floating point appears anywhere.  Conjugation data (the symplectic image
phi_M and the phase exponents f_M on basis vectors) is extracted exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from qe7.f2sym import (
    RankMismatch,
    SympMatrix,
    SympVector,
    basis_vectors,
    transvection_matrix,
    _parity,
)


class SingularError(ValueError):
    """Matrix has no inverse over the fraction field of Z[zeta8, 1/2]."""


class NotInNormalizerError(ValueError):
    """Conjugation by the operator does not preserve the Heisenberg group."""


def _is_dyadic(q: Fraction) -> bool:
    d = q.denominator
    return d & (d - 1) == 0


class CycloDyadic:
    """Element a0 + a1 z + a2 z^2 + a3 z^3 of Z[z, 1/2] with z = zeta8.

    z^2 = i and z^4 = -1.  Coefficients are dyadic rationals (power-of-two
    denominators), kept reduced by Fraction; equality is exact.
    """

    __slots__ = ("coeffs",)

    def __init__(self, a0=0, a1=0, a2=0, a3=0):
        coeffs = tuple(Fraction(a) for a in (a0, a1, a2, a3))
        if not all(_is_dyadic(c) for c in coeffs):
            raise ValueError("coefficients must be dyadic rationals")
        self.coeffs = coeffs

    @classmethod
    def zero(cls) -> "CycloDyadic":
        return cls()

    @classmethod
    def one(cls) -> "CycloDyadic":
        return cls(1)

    @classmethod
    def i(cls) -> "CycloDyadic":
        return cls(0, 0, 1)

    @classmethod
    def zeta8(cls) -> "CycloDyadic":
        return cls(0, 1)

    @classmethod
    def i_power(cls, m: int) -> "CycloDyadic":
        return (cls.one(), cls.i(), cls(-1), cls(0, 0, -1))[m % 4]

    @classmethod
    def inv_sqrt2(cls) -> "CycloDyadic":
        """1/sqrt(2) = (z - z^3)/2."""
        return cls(0, Fraction(1, 2), 0, Fraction(-1, 2))

    @classmethod
    def _coerce(cls, value):
        if isinstance(value, CycloDyadic):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        return None

    def __add__(self, other) -> "CycloDyadic":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        return CycloDyadic(*(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __sub__(self, other) -> "CycloDyadic":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        return CycloDyadic(*(x - y for x, y in zip(a, b)))

    def __rsub__(self, other) -> "CycloDyadic":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> "CycloDyadic":
        return CycloDyadic(*(-x for x in self.coeffs))

    def __mul__(self, other) -> "CycloDyadic":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * 4
        for r in range(4):
            if not a[r]:
                continue
            for s in range(4):
                if not b[s]:
                    continue
                t = r + s
                if t < 4:
                    out[t] += a[r] * b[s]
                else:
                    out[t - 4] -= a[r] * b[s]
        return CycloDyadic(*out)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, CycloDyadic) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_strings(self) -> list[str]:
        """The four coefficients as "num/2^e" strings with minimal e."""
        out = []
        for c in self.coeffs:
            e = c.denominator.bit_length() - 1
            out.append(f"{c.numerator}/2^{e}")
        return out

    @classmethod
    def from_strings(cls, parts) -> "CycloDyadic":
        coeffs = []
        for p in parts:
            num, sep, den = p.partition("/2^")
            if not sep:
                raise ValueError(f"malformed dyadic string {p!r}")
            coeffs.append(Fraction(int(num), 1 << int(den)))
        return cls(*coeffs)

    def __str__(self) -> str:
        names = ("", "z", "i", "z^3")
        terms = [
            f"{c}{('*' + n) if n else ''}" for c, n in zip(self.coeffs, names) if c
        ]
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"CycloDyadic{self.coeffs}"


_ZERO = CycloDyadic.zero()
_ONE = CycloDyadic.one()
_HALF_ONE_MINUS_I = CycloDyadic(Fraction(1, 2), 0, Fraction(-1, 2), 0)
_HALF_ONE_PLUS_I = CycloDyadic(Fraction(1, 2), 0, Fraction(1, 2), 0)

# mu4 values as coefficient quadruples, for exact phase recognition
_MU4 = {
    (Fraction(1), Fraction(0), Fraction(0), Fraction(0)): 0,
    (Fraction(0), Fraction(0), Fraction(1), Fraction(0)): 1,
    (Fraction(-1), Fraction(0), Fraction(0), Fraction(0)): 2,
    (Fraction(0), Fraction(0), Fraction(-1), Fraction(0)): 3,
}


class PhasedOperator:
    """2^k x 2^k matrix over Z[zeta8, 1/2], with exact algebra throughout."""

    __slots__ = ("k", "entries")

    def __init__(self, k: int, entries):
        dim = 1 << k
        rows = tuple(tuple(row) for row in entries)
        if len(rows) != dim or any(len(r) != dim for r in rows):
            raise ValueError("entry grid has the wrong shape")
        self.k = k
        self.entries = rows

    @property
    def dim(self) -> int:
        return 1 << self.k

    @classmethod
    def identity(cls, k: int) -> "PhasedOperator":
        dim = 1 << k
        return cls(
            k,
            [[_ONE if r == c else _ZERO for c in range(dim)] for r in range(dim)],
        )

    def __mul__(self, other: "PhasedOperator") -> "PhasedOperator":
        if self.k != other.k:
            raise RankMismatch("operator rank mismatch")
        dim = self.dim
        cols = list(zip(*other.entries))
        out = []
        for r in range(dim):
            row = self.entries[r]
            out.append(
                [
                    sum(
                        (row[m] * cols[c][m] for m in range(dim) if row[m]),
                        _ZERO,
                    )
                    for c in range(dim)
                ]
            )
        return PhasedOperator(self.k, out)

    def __add__(self, other: "PhasedOperator") -> "PhasedOperator":
        if self.k != other.k:
            raise RankMismatch("operator rank mismatch")
        return PhasedOperator(
            self.k,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def scaled(self, s: CycloDyadic) -> "PhasedOperator":
        return PhasedOperator(
            self.k, [[s * e for e in row] for row in self.entries]
        )

    def __neg__(self) -> "PhasedOperator":
        return PhasedOperator(self.k, [[-e for e in row] for row in self.entries])

    def transpose(self) -> "PhasedOperator":
        return PhasedOperator(self.k, list(zip(*self.entries)))

    def inverse(self) -> "PhasedOperator":
        """Exact inverse; raises SingularError, or ValueError if the inverse
        leaves the dyadic ring (possible only for non-normalizer inputs)."""
        inv = _mat_inv(_mat_from_op(self))
        entries = []
        for row in inv:
            line = []
            for q in row:
                if not all(_is_dyadic(c) for c in q):
                    raise ValueError("inverse has non-dyadic entries")
                line.append(CycloDyadic(*q))
            entries.append(line)
        return PhasedOperator(self.k, entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PhasedOperator)
            and self.k == other.k
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.k, self.entries))

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "entries": [[e.to_strings() for e in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PhasedOperator":
        return cls(
            data["k"],
            [
                [CycloDyadic.from_strings(e) for e in row]
                for row in data["entries"]
            ],
        )

    def __repr__(self) -> str:
        return f"PhasedOperator(k={self.k}, dim={self.dim})"


@dataclass(frozen=True)
class HeisenbergElement:
    """Group element i^s U_v with s an exponent mod 4 and v in V_k."""

    s: int
    v: SympVector

    def __post_init__(self):
        object.__setattr__(self, "s", self.s % 4)

    @property
    def k(self) -> int:
        return self.v.k

    @classmethod
    def identity(cls, k: int) -> "HeisenbergElement":
        return cls(0, SympVector.zero(k))

    def __str__(self) -> str:
        return f"i^{self.s}·U[{self.v}]"

    @classmethod
    def from_string(cls, text: str) -> "HeisenbergElement":
        head, sep, tail = text.partition("·U[")
        if not sep or not head.startswith("i^") or not tail.endswith("]"):
            raise ValueError(f"malformed Heisenberg element {text!r}")
        return cls(int(head[2:]), SympVector.from_string(tail[:-1]))


def h_mul(a: HeisenbergElement, b: HeisenbergElement) -> HeisenbergElement:
    """(s,x,x*)(t,y,y*) = (s t (-1)^{y*(x)}, x+y, x*+y*)."""
    if a.k != b.k:
        raise RankMismatch("rank mismatch")
    s = a.s + b.s + 2 * _parity(b.v.xstar & a.v.x)
    return HeisenbergElement(s, a.v + b.v)


def h_inv(a: HeisenbergElement) -> HeisenbergElement:
    """(s,x,x*)^{-1} = (s^{-1} (-1)^{x*(x)}, x, x*)."""
    return HeisenbergElement(-a.s + 2 * _parity(a.v.x & a.v.xstar), a.v)


def schrodinger_matrix(h: HeisenbergElement) -> PhasedOperator:
    """Signed monomial matrix of i^s U_v; a faithful homomorphism."""
    k = h.k
    dim = 1 << k
    x, xstar = h.v.x, h.v.xstar
    rows = [[_ZERO] * dim for _ in range(dim)]
    for a in range(dim):
        m = (h.s + 2 * _parity(xstar & (x ^ a))) % 4
        rows[x ^ a][a] = CycloDyadic.i_power(m)
    return PhasedOperator(k, rows)


def pauli_operator(v: SympVector) -> PhasedOperator:
    """U_v with trivial phase."""
    return schrodinger_matrix(HeisenbergElement(0, v))


def lift_transvection(v: SympVector) -> PhasedOperator:
    """Normalizer element M_v with phi_{M_v} = t_v.

    M_v = (1-i)/2 (I + i U_v) when U_v^2 = I (x*(x) = 0), and
    (1-i)/2 (I + U_v) when U_v^2 = -I; for v = 0 this is the identity.
    """
    if v.is_zero():
        return PhasedOperator.identity(v.k)
    u = pauli_operator(v)
    if _parity(v.x & v.xstar) == 0:
        body = PhasedOperator.identity(v.k) + u.scaled(CycloDyadic.i())
    else:
        body = PhasedOperator.identity(v.k) + u
    return body.scaled(_HALF_ONE_MINUS_I)


def lift_transvection_inverse(v: SympVector) -> PhasedOperator:
    """Exact inverse of lift_transvection: (1+i)/2 (I -/+ ... U_v)."""
    if v.is_zero():
        return PhasedOperator.identity(v.k)
    u = pauli_operator(v)
    if _parity(v.x & v.xstar) == 0:
        body = PhasedOperator.identity(v.k) + (-u).scaled(CycloDyadic.i())
    else:
        body = PhasedOperator.identity(v.k) + (-u)
    return body.scaled(_HALF_ONE_PLUS_I)


def hadamard_lift() -> PhasedOperator:
    """(1-i)/2 [[1,1],[1,-1]]: the k=1 normalizer element swapping X and Z."""
    one, m = _ONE, -_ONE
    return PhasedOperator(1, [[one, one], [one, m]]).scaled(_HALF_ONE_MINUS_I)


def cnot_operator(control: int, target: int, k: int) -> PhasedOperator:
    """Permutation sending delta_a to delta_a' with a'_t = a_t + a_c."""
    if not (1 <= control <= k and 1 <= target <= k):
        raise ValueError("qubit index out of range")
    if control == target:
        raise ValueError("control and target must differ")
    dim = 1 << k
    cbit = 1 << (k - control)
    tbit = 1 << (k - target)
    rows = [[_ZERO] * dim for _ in range(dim)]
    for a in range(dim):
        out = a ^ tbit if a & cbit else a
        rows[out][a] = _ONE
    return PhasedOperator(k, rows)


@dataclass(frozen=True)
class NormalizerImage:
    """Conjugation data of a normalizer element: M U_e M^-1 = i^f(e) U_phi(e)."""

    phi: SympMatrix
    f: dict

    def __iter__(self):
        yield self.phi
        yield self.f


# ---------------------------------------------------------------------------
# Exact arithmetic over the fraction field Q(zeta8), used for inversion and
# conjugation pattern matching.  Elements are 4-tuples of Fractions.

_QZERO = (Fraction(0),) * 4


def _qt(e: CycloDyadic):
    return e.coeffs


def _qadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _qsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _qmul(a, b):
    out = [Fraction(0)] * 4
    for r in range(4):
        if not a[r]:
            continue
        for s in range(4):
            if not b[s]:
                continue
            t = r + s
            if t < 4:
                out[t] += a[r] * b[s]
            else:
                out[t - 4] -= a[r] * b[s]
    return tuple(out)


def _qconj(a, j):
    """Galois map zeta8 -> zeta8^j for odd j."""
    out = [Fraction(0)] * 4
    for t in range(4):
        if not a[t]:
            continue
        e = (j * t) % 8
        if e < 4:
            out[e] += a[t]
        else:
            out[e - 4] -= a[t]
    return tuple(out)


def _qinv(a):
    """Inverse in Q(zeta8) via the product of Galois conjugates."""
    if not any(a):
        raise ZeroDivisionError("zero has no inverse")
    num = _qmul(_qconj(a, 3), _qmul(_qconj(a, 5), _qconj(a, 7)))
    norm = _qmul(a, num)
    assert norm[1] == norm[2] == norm[3] == 0, "field norm must be rational"
    n = norm[0]
    return tuple(c / n for c in num)


def _mat_from_op(op: PhasedOperator):
    return [[_qt(e) for e in row] for row in op.entries]


def _mat_mul(a, b):
    n = len(a)
    bt = list(zip(*b))
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            acc = _QZERO
            for m in range(n):
                if any(a[r][m]) and any(bt[c][m]):
                    acc = _qadd(acc, _qmul(a[r][m], bt[c][m]))
            row.append(acc)
        out.append(row)
    return out


def _mat_inv(a):
    n = len(a)
    work = [list(row) for row in a]
    inv = [[_QZERO] * n for _ in range(n)]
    for i in range(n):
        inv[i][i] = (Fraction(1), Fraction(0), Fraction(0), Fraction(0))
    for col in range(n):
        pivot = next((r for r in range(col, n) if any(work[r][col])), None)
        if pivot is None:
            raise SingularError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = _qinv(work[col][col])
        work[col] = [_qmul(scale, e) for e in work[col]]
        inv[col] = [_qmul(scale, e) for e in inv[col]]
        for r in range(n):
            if r == col or not any(work[r][col]):
                continue
            factor = work[r][col]
            work[r] = [_qsub(e, _qmul(factor, p)) for e, p in zip(work[r], work[col])]
            inv[r] = [_qsub(e, _qmul(factor, p)) for e, p in zip(inv[r], inv[col])]
    return inv


def _match_heisenberg(mat, k: int):
    """Match an exact matrix to i^s U_(x,x*); None when no match exists."""
    dim = 1 << k
    support = [[r for r in range(dim) if any(mat[r][c])] for c in range(dim)]
    if any(len(s) != 1 for s in support):
        return None
    x = support[0][0]
    phases = []
    for c in range(dim):
        if support[c][0] != (x ^ c):
            return None
        m = _MU4.get(mat[x ^ c][c])
        if m is None:
            return None
        phases.append(m)
    xstar = 0
    for j in range(k):
        bit = 1 << (k - 1 - j)
        d = (phases[bit] - phases[0]) % 4
        if d not in (0, 2):
            return None
        if d == 2:
            xstar |= bit
    s = (phases[0] - 2 * _parity(xstar & x)) % 4
    for c in range(dim):
        if phases[c] != (s + 2 * _parity(xstar & (x ^ c))) % 4:
            return None
    return HeisenbergElement(s, SympVector(k, x, xstar))


def normalizer_image(m: PhasedOperator) -> NormalizerImage:
    """Extract (phi_M, f_M) from M U_e M^-1 = i^{f(e)} U_{phi(e)}.

    Raises SingularError when M is not invertible and NotInNormalizerError
    when some conjugate is not a mu4 multiple of a Heisenberg matrix.
    """
    k = m.k
    mm = _mat_from_op(m)
    minv = _mat_inv(mm)
    cols = []
    f: dict = {}
    for e in basis_vectors(k):
        u = _mat_from_op(pauli_operator(e))
        conj = _mat_mul(_mat_mul(mm, u), minv)
        match = _match_heisenberg(conj, k)
        if match is None:
            raise NotInNormalizerError(
                f"conjugate of U_{e} is not a phased Heisenberg matrix"
            )
        cols.append(match.v)
        f[e] = match.s
    phi = SympMatrix.from_columns(k, cols)
    if not phi.is_symplectic():
        raise NotInNormalizerError("induced map does not preserve the form")
    return NormalizerImage(phi, f)


def conjugation_phase(m: PhasedOperator, v: SympVector) -> tuple[int, SympVector]:
    """Exact (l, w) with M U_v M^-1 = i^l U_w; a pointwise normalizer probe."""
    mm = _mat_from_op(m)
    conj = _mat_mul(_mat_mul(mm, _mat_from_op(pauli_operator(v))), _mat_inv(mm))
    match = _match_heisenberg(conj, m.k)
    if match is None:
        raise NotInNormalizerError("conjugate is not a phased Heisenberg matrix")
    return match.s, match.v


def _projective_key(op: PhasedOperator):
    flat = [q for row in _mat_from_op(op) for q in row]
    lead = next(q for q in flat if any(q))
    inv = _qinv(lead)
    return tuple(_qmul(inv, q) for q in flat)


def generated_order(
    generators, projective: bool = False, limit: int = 1 << 20
) -> int:
    """Order of the group generated by exact operators under multiplication.

    With projective=True, elements are identified up to scalars by dividing
    all entries by the first nonzero one.
    """
    key = _projective_key if projective else (lambda op: op.entries)
    gens = list(generators)
    seen = {key(PhasedOperator.identity(gens[0].k))}
    frontier = [PhasedOperator.identity(gens[0].k)]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a * g
                kb = key(b)
                if kb not in seen:
                    seen.add(kb)
                    nxt.append(b)
                    if len(seen) > limit:
                        raise RuntimeError("group closure exceeded limit")
        frontier = nxt
    return len(seen)


def verify_transvection_lift(v: SympVector) -> bool:
    """Check M_v's inverse formula and that conjugation realizes t_v."""
    m = lift_transvection(v)
    minv = lift_transvection_inverse(v)
    if m * minv != PhasedOperator.identity(v.k):
        return False
    return normalizer_image(m).phi == transvection_matrix(v)
