"""Exact polynomial realizations of the Heisenberg eigenforms.

For each label w = (eps, eps') in V_k there is a symmetric form
Q[eps,eps'] = sum_sigma (-1)^{eps'(sigma)} X_sigma X_{sigma+eps} (even
labels) or an alternating form A[eps,eps'] = sum_sigma (-1)^{eps'(sigma)}
X_sigma Y_{sigma+eps} (odd labels).  These equal the bilinear forms of the
Heisenberg matrices U_w, are permuted up to fourth roots of unity by the
normalizer lifts M_v, and satisfy sum-of-squares identities realizing sphere
maps S^{2^k-1} -> S^{2^{k-1}}.  All arithmetic is exact: integer
coefficients for the named forms, ring coefficients for transformed ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from qe7.f2sym import (
    QuadLabel,
    RankMismatch,
    SympVector,
    all_vectors,
    quad_transform,
    symplectic_form,
    _parity,
)
from qe7.heisenberg import (
    CycloDyadic,
    NotInNormalizerError,
    PhasedOperator,
    _mat_from_op,
    _match_heisenberg,
    lift_transvection,
    normalizer_image,
    pauli_operator,
)


class WrongParityError(ValueError):
    """A form of the other parity class was requested; it vanishes identically."""


class ExactPolynomial:
    """Multivariate polynomial in X_sigma (and Y_sigma), sigma in L_k.

    Terms map a dense exponent tuple (X variables first, then Y) to a
    nonzero coefficient.  Coefficients are arbitrary-precision integers for
    the named forms; any exact ring with +, * and truth testing works, which
    lets transformed forms carry Z[zeta8, 1/2] coefficients.
    """

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: dict | None = None):
        self.k = k
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @property
    def nvars(self) -> int:
        return 2 << self.k

    @classmethod
    def zero(cls, k: int) -> "ExactPolynomial":
        return cls(k)

    @classmethod
    def constant(cls, k: int, c) -> "ExactPolynomial":
        return cls(k, {(0,) * (2 << k): c})

    @classmethod
    def variable(cls, k: int, group: str, sigma: int) -> "ExactPolynomial":
        """The variable X_sigma or Y_sigma as a polynomial."""
        dim = 1 << k
        if group not in ("X", "Y") or not 0 <= sigma < dim:
            raise ValueError("no such variable")
        idx = sigma if group == "X" else dim + sigma
        mono = tuple(1 if i == idx else 0 for i in range(2 * dim))
        return cls(k, {mono: 1})

    def _binop(self, other, fn):
        if self.k != other.k:
            raise RankMismatch("polynomial rank mismatch")
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = fn(terms.get(m), c)
        return ExactPolynomial(self.k, terms)

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return self._binop(other, lambda a, c: c if a is None else a + c)

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return self._binop(other, lambda a, c: -c if a is None else a - c)

    def __neg__(self) -> "ExactPolynomial":
        return ExactPolynomial(self.k, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        if self.k != other.k:
            raise RankMismatch("polynomial rank mismatch")
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                if m in terms:
                    terms[m] = terms[m] + c
                else:
                    terms[m] = c
        return ExactPolynomial(self.k, terms)

    def scaled(self, c) -> "ExactPolynomial":
        return ExactPolynomial(self.k, {m: c * v for m, v in self.terms.items()})

    def __pow__(self, n: int) -> "ExactPolynomial":
        if n < 0:
            raise ValueError("negative power")
        out = ExactPolynomial.constant(self.k, 1)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactPolynomial)
            and self.k == other.k
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.k, frozenset(self.terms.items())))

    def monomial_string(self, mono: tuple) -> str:
        dim = 1 << self.k
        parts = []
        for idx, e in enumerate(mono):
            if not e:
                continue
            group = "X" if idx < dim else "Y"
            sigma = idx if idx < dim else idx - dim
            parts.extend([f"{group}_{{{sigma:0{self.k}b}}}"] * e)
        return "·".join(parts) if parts else "1"

    def to_json(self) -> dict:
        items = sorted(self.terms.items())
        return {
            "k": self.k,
            "terms": [f"{c} * {self.monomial_string(m)}" for m, c in items],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ExactPolynomial":
        k = data["k"]
        dim = 1 << k
        out = cls.zero(k)
        for text in data["terms"]:
            coef_s, sep, mono_s = text.partition(" * ")
            if not sep:
                raise ValueError(f"malformed term {text!r}")
            mono = [0] * (2 * dim)
            if mono_s != "1":
                for factor in mono_s.split("·"):
                    group, bits = factor[0], factor[3:-1]
                    idx = int(bits, 2) + (0 if group == "X" else dim)
                    mono[idx] += 1
            out = out + cls(k, {tuple(mono): int(coef_s)})
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{c}*{self.monomial_string(m)}" for m, c in sorted(self.terms.items())
        )

    def __repr__(self) -> str:
        return f"ExactPolynomial(k={self.k}, {len(self.terms)} terms)"


def form_polynomial(label: QuadLabel, kind: str | None = None) -> ExactPolynomial:
    """The symmetric form Q[label] (even) or alternating form A[label] (odd).

    Requesting the wrong kind raises WrongParityError: that polynomial is
    identically zero.
    """
    expected = "Q" if label.is_even else "A"
    if kind is not None and kind != expected:
        raise WrongParityError(f"label {label} only defines a {expected}-form")
    k = label.k
    dim = 1 << k
    eps, epsp = label.w.x, label.w.xstar
    terms: dict = {}
    for sigma in range(dim):
        sign = -1 if _parity(epsp & sigma) else 1
        mono = [0] * (2 * dim)
        mono[sigma] += 1
        if label.is_even:
            mono[sigma ^ eps] += 1
        else:
            mono[dim + (sigma ^ eps)] += 1
        key = tuple(mono)
        terms[key] = terms.get(key, 0) + sign
    return ExactPolynomial(k, terms)


def bilinear_polynomial(op: PhasedOperator, alternating: bool) -> ExactPolynomial:
    """tX M X (or tX M Y), the bilinear form of an exact matrix.

    Coefficients are CycloDyadic; an independent route to the named forms.
    """
    k = op.k
    dim = 1 << k
    terms: dict = {}
    for r in range(dim):
        for c in range(dim):
            e = op.entries[r][c]
            if not e:
                continue
            mono = [0] * (2 * dim)
            mono[r] += 1
            if alternating:
                mono[dim + c] += 1
            else:
                mono[c] += 1
            key = tuple(mono)
            terms[key] = terms[key] + e if key in terms else e
    return ExactPolynomial(k, terms)


def with_ring_coefficients(p: ExactPolynomial) -> ExactPolynomial:
    """Lift integer coefficients into CycloDyadic for mixed comparisons."""
    return ExactPolynomial(
        p.k,
        {
            m: (c if isinstance(c, CycloDyadic) else CycloDyadic(c))
            for m, c in p.terms.items()
        },
    )


def heisenberg_eigenvalue(u: SympVector, label: QuadLabel) -> int:
    """Eigenvalue (-1)^{x*(eps)+eps'(x)} of U_u on the form of the label.

    The exponent equals E(u, w), so the Heisenberg action on forms is read
    off the symplectic form directly.
    """
    if u.k != label.k:
        raise RankMismatch("rank mismatch")
    return -1 if symplectic_form(u, label.w) else 1


def substitute_operator(p: ExactPolynomial, op: PhasedOperator) -> ExactPolynomial:
    """Variable substitution X -> tM X (and Y -> tM Y), exactly.

    For a bilinear form tX B X this realizes B -> M B tM, i.e. the action of
    M on twofold tensors.
    """
    k = p.k
    dim = 1 << k
    lin: list[ExactPolynomial] = []
    for idx in range(2 * dim):
        group, sigma = ("X", idx) if idx < dim else ("Y", idx - dim)
        acc = ExactPolynomial.zero(k)
        for tau in range(dim):
            e = op.entries[tau][sigma]
            if e:
                acc = acc + ExactPolynomial.variable(k, group, tau).scaled(e)
        lin.append(acc)
    out = ExactPolynomial.zero(k)
    for mono, c in p.terms.items():
        term = ExactPolynomial.constant(
            k, c if isinstance(c, CycloDyadic) else CycloDyadic(c)
        )
        for idx, e in enumerate(mono):
            for _ in range(e):
                term = term * lin[idx]
        out = out + term
    return out


@dataclass(frozen=True)
class FormAction:
    """Result of a lift M_v acting on a form: M_v F_w tM_v = i^l F_{w'}."""

    input_label: QuadLabel
    output_label: QuadLabel
    phase: int


def act_on_form(v: SympVector, label: QuadLabel) -> FormAction:
    """Action of M_v on the form of the label, with its exact i^l phase.

    The label moves by quad_transform; the phase comes from the matrix
    identity M_v U_w tM_v = i^l U_{w'} and is reported, not asserted.
    """
    if v.k != label.k:
        raise RankMismatch("rank mismatch")
    out_label = quad_transform(v, label)
    m = lift_transvection(v)
    conj = m * pauli_operator(label.w) * m.transpose()
    match = _match_heisenberg(_mat_from_op(conj), v.k)
    if match is None or match.v != out_label.w:
        raise AssertionError("tensor action disagrees with the label transform")
    return FormAction(label, out_label, match.s)


@dataclass(frozen=True)
class HopfRelation:
    """A verified identity Q[lhs]^2 = sum of Q[rhs_i]^2."""

    k: int
    lhs: QuadLabel
    rhs: tuple

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "lhs": {"label": str(self.lhs), "sign": 1},
            "rhs": [{"label": str(lab), "sign": 1} for lab in self.rhs],
        }


_HOPF_LABELS = {
    1: ("0:0", ("0:1", "1:0")),
    2: ("00:00", ("00:10", "11:00", "10:01")),
    3: ("000:000", ("000:100", "100:000", "101:101", "110:111", "111:110")),
    4: (
        "0000:0000",
        (
            "0000:1000",
            "1000:0000",
            "1001:1001",
            "1010:1011",
            "1011:1110",
            "1100:1111",
            "1101:1100",
            "1110:1101",
            "1111:1010",
        ),
    ),
}


def hopf_relation(k: int) -> HopfRelation:
    """The sum-of-squares identity for rank k, verified by exact expansion."""
    if k not in _HOPF_LABELS:
        raise ValueError("relation available for k in 1..4")
    lhs_s, rhs_s = _HOPF_LABELS[k]
    lhs = QuadLabel(SympVector.from_string(lhs_s))
    rhs = tuple(QuadLabel(SympVector.from_string(s)) for s in rhs_s)
    total = ExactPolynomial.zero(k)
    for lab in rhs:
        total = total + form_polynomial(lab) ** 2
    if total != form_polynomial(lhs) ** 2:
        raise RuntimeError(f"sum-of-squares identity failed at k={k}")
    return HopfRelation(k, lhs, rhs)


def _int_matrix(op: PhasedOperator) -> list[list[int]]:
    out = []
    for row in op.entries:
        line = []
        for e in row:
            a0, a1, a2, a3 = e.coeffs
            if a1 or a2 or a3 or a0.denominator != 1:
                raise ValueError("matrix is not integral")
            line.append(a0.numerator)
        out.append(line)
    return out


def _pfaffian(mat: list[list[int]]) -> int:
    n = len(mat)
    if n == 0:
        return 1
    if n % 2:
        return 0
    idx = list(range(n))

    def rec(active: tuple) -> int:
        if not active:
            return 1
        a = active[0]
        rest = active[1:]
        total = 0
        for pos, b in enumerate(rest):
            coef = mat[a][b]
            if coef:
                sub = rest[:pos] + rest[pos + 1 :]
                sign = -1 if pos % 2 else 1
                total += sign * coef * rec(sub)
        return total

    return rec(tuple(idx))


def pfaffian(label: QuadLabel) -> int:
    """Pfaffian of the antisymmetric Heisenberg matrix of an odd label."""
    if label.is_even:
        raise WrongParityError("pfaffian requires an odd label")
    return _pfaffian(_int_matrix(pauli_operator(label.w)))


def determinant(op: PhasedOperator) -> Fraction:
    """Exact determinant over Q (entries must be rational)."""
    mat = [[Fraction(int(c)) for c in row] for row in _int_matrix(op)]
    n = len(mat)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        mat[col] = [e * inv for e in mat[col]]
        for r in range(col + 1, n):
            if mat[r][col]:
                f = mat[r][col]
                mat[r] = [e - f * p for e, p in zip(mat[r], mat[col])]
    return det


def even_labels(k: int) -> list[QuadLabel]:
    return [
        QuadLabel(w) for w in all_vectors(k) if _parity(w.x & w.xstar) == 0
    ]


def odd_labels(k: int) -> list[QuadLabel]:
    return [
        QuadLabel(w) for w in all_vectors(k) if _parity(w.x & w.xstar) == 1
    ]


def span_dimension_of_squares(k: int) -> int:
    """Rank over Q of the span of the squared even forms."""
    if not 1 <= k <= 3:
        raise ValueError("square-span dimension supported for k in 1..3")
    polys = [form_polynomial(lab) ** 2 for lab in even_labels(k)]
    monomials = sorted({m for p in polys for m in p.terms})
    col = {m: j for j, m in enumerate(monomials)}
    rows = []
    for p in polys:
        row = [Fraction(0)] * len(monomials)
        for m, c in p.terms.items():
            row[col[m]] = Fraction(c)
        rows.append(row)
    rank = 0
    ncols = len(monomials)
    pivot_col = 0
    r = 0
    while r < len(rows) and pivot_col < ncols:
        pivot = next((i for i in range(r, len(rows)) if rows[i][pivot_col]), None)
        if pivot is None:
            pivot_col += 1
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][pivot_col]
        rows[r] = [e / lead for e in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][pivot_col]:
                f = rows[i][pivot_col]
                rows[i] = [e - f * p for e, p in zip(rows[i], rows[r])]
        rank += 1
        r += 1
        pivot_col += 1
    return rank


def hamming_weight_enumerator_identity() -> ExactPolynomial:
    """Verify 2 (X^8 + 14 X^4 Y^4 + Y^8) as a sum of three fourth powers.

    Returns the degree-8 invariant (the doubled weight enumerator of the
    extended [8,4] Hamming code) expressed in the k=1 variables.
    """
    labels = [QuadLabel(SympVector.from_string(s)) for s in ("0:0", "1:0", "0:1")]
    total = ExactPolynomial.zero(1)
    for lab in labels:
        total = total + form_polynomial(lab) ** 4
    x = ExactPolynomial.variable(1, "X", 0)
    y = ExactPolynomial.variable(1, "X", 1)
    expect = (x**8 + (x**4 * y**4).scaled(14) + y**8).scaled(2)
    if total != expect:
        raise RuntimeError("weight-enumerator identity failed")
    return total


@dataclass(frozen=True)
class QuarticReport:
    """Per-generator label permutations plus the invariance verdict."""

    k: int
    permutations: tuple
    sum_invariant: bool
    weight_enumerator_checked: bool


def quartic_invariance_check(generators, k: int) -> QuarticReport:
    """Verify that normalizer generators permute the fourth powers Q^4.

    For each generator M and even label w the tensor action M U_w tM is
    matched exactly to i^l U_{w'}; the label map must be a permutation, and
    the sum of the fourth powers of the transformed polynomials must equal
    sum Q^4 exactly (the i^l phases are killed by the fourth power).
    """
    labels = even_labels(k)
    target = ExactPolynomial.zero(k)
    for lab in labels:
        target = target + form_polynomial(lab) ** 4
    target = with_ring_coefficients(target)

    perms = []
    for m in generators:
        normalizer_image(m)  # raises NotInNormalizerError when outside
        mapping = {}
        transformed_sum = ExactPolynomial.zero(k)
        for lab in labels:
            conj = m * pauli_operator(lab.w) * m.transpose()
            match = _match_heisenberg(_mat_from_op(conj), k)
            if match is None:
                raise NotInNormalizerError(
                    "tensor action does not preserve the form family"
                )
            mapping[str(lab)] = (str(QuadLabel(match.v)), match.s)
            transformed_sum = transformed_sum + bilinear_polynomial(
                conj, alternating=False
            ) ** 4
        images = {out for out, _ in mapping.values()}
        if len(images) != len(labels):
            raise NotInNormalizerError("label map is not a permutation")
        if transformed_sum != target:
            return QuarticReport(k, tuple(perms), False, False)
        perms.append(mapping)
    weight_checked = False
    if k == 1:
        hamming_weight_enumerator_identity()
        weight_checked = True
    return QuarticReport(k, tuple(perms), True, weight_checked)
