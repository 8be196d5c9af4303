"""Named verification suites aggregating the library's exact invariants.

Every suite runs a list of checks and reports expected/actual pairs; the
CLI renders reports as text or JSON and sets the exit code.  All checks are
exact (integer or ring equality); the only tolerances are group orders and
counts, which must match exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
import json

import numpy as np

from qe7 import e7_delpezzo as e7
from qe7 import f2sym, heisenberg as hb, tensor_forms as tf
from qe7.f2sym import (
    DIAGRAM_LABELS,
    HIGHEST_ROOT_LABEL,
    S6_CHAIN_LABELS,
    QuadLabel,
    SympMatrix,
    SympVector,
    all_vectors,
    basis_vectors,
    enumerate_lagrangians,
    enumerate_quad_forms,
    generate_group,
    orthogonal_group_order,
    quad_eval,
    quad_transform,
    standard_lagrangian,
    symplectic_form,
    transvection_apply,
    transvection_matrix,
)

SUITES = (
    "heisenberg",
    "normalizer",
    "coxeter",
    "quadforms",
    "tensors",
    "hopf",
    "e7",
    "restriction",
    "orders",
    "all",
)


@dataclass
class CheckResult:
    check_id: str
    passed: bool
    expected: str
    actual: str


@dataclass
class VerificationReport:
    suite: str
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "kind": "verification-report",
            "suite": self.suite,
            "passed": self.passed,
            "checks": [
                {
                    "id": c.check_id,
                    "status": "pass" if c.passed else "fail",
                    "expected": c.expected,
                    "actual": c.actual,
                }
                for c in self.checks
            ],
        }

    def to_text(self) -> str:
        width = max((len(c.check_id) for c in self.checks), default=10)
        lines = [f"suite: {self.suite}"]
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            lines.append(
                f"  {c.check_id:<{width}}  {status}  expected={c.expected} actual={c.actual}"
            )
        lines.append(f"overall: {'pass' if self.passed else 'FAIL'}")
        return "\n".join(lines)


class _Collector:
    def __init__(self):
        self.checks: list[CheckResult] = []

    def add(self, check_id: str, expected, actual):
        self.checks.append(
            CheckResult(check_id, str(expected) == str(actual), str(expected), str(actual))
        )


def _heisenberg_elements(k: int):
    return [
        hb.HeisenbergElement(s, v) for s in range(4) for v in all_vectors(k)
    ]


@lru_cache(maxsize=1)
def sp6_catalog() -> f2sym.GroupCatalog:
    """Sp(6,F2) as the closure of the seven diagram transvections."""
    return generate_group([transvection_matrix(v) for v in DIAGRAM_LABELS])


def _suite_heisenberg(c: _Collector):
    for k in (1, 2):
        els = _heisenberg_elements(k)
        ident = hb.HeisenbergElement.identity(k)
        bad = sum(1 for h in els if hb.h_mul(h, hb.h_inv(h)) != ident)
        c.add(f"inverse_identity_k{k}", 0, bad)
        bad = 0
        for a in els:
            for b in els:
                comm = hb.h_mul(
                    hb.h_mul(a, b), hb.h_mul(hb.h_inv(a), hb.h_inv(b))
                )
                want = hb.HeisenbergElement(
                    2 * symplectic_form(a.v, b.v), SympVector.zero(k)
                )
                if comm != want:
                    bad += 1
        c.add(f"commutator_form_k{k}", 0, bad)

    for k in (1, 2, 3):
        els = _heisenberg_elements(k)
        images = {hb.schrodinger_matrix(h).entries for h in els}
        c.add(f"faithful_k{k}", len(els), len(images))

    els1 = _heisenberg_elements(1)
    bad = sum(
        1
        for a in els1
        for b in els1
        if hb.schrodinger_matrix(a) * hb.schrodinger_matrix(b)
        != hb.schrodinger_matrix(hb.h_mul(a, b))
    )
    c.add("representation_homomorphism_k1", 0, bad)

    one, zero = hb.CycloDyadic.one(), hb.CycloDyadic.zero()
    x = hb.pauli_operator(SympVector.from_string("1:0"))
    z = hb.pauli_operator(SympVector.from_string("0:1"))
    c.add("bitflip_matrix", ((zero, one), (one, zero)), x.entries)
    c.add("sign_matrix", ((one, zero), (zero, -one)), z.entries)

    for k in (1, 2, 3):
        bad_t = bad_ord = 0
        ident = hb.PhasedOperator.identity(k)
        for v in all_vectors(k):
            u = hb.pauli_operator(v)
            sign = f2sym._parity(v.x & v.xstar)
            want = u if sign == 0 else -u
            if u.transpose() != want or u.transpose() * u != ident:
                bad_t += 1
            if not v.is_zero():
                sq = u * u
                if sign == 0 and sq != ident:
                    bad_ord += 1
                if sign == 1 and sq != -ident:
                    bad_ord += 1
        c.add(f"transpose_law_k{k}", 0, bad_t)
        c.add(f"order_dichotomy_k{k}", 0, bad_ord)


def _suite_normalizer(c: _Collector):
    h = hb._HALF_ONE_MINUS_I
    one, zero, i_ = hb.CycloDyadic.one(), hb.CycloDyadic.zero(), hb.CycloDyadic.i()
    ms = hb.hadamard_lift()
    mt = hb.lift_transvection(SympVector.from_string("1:0"))
    c.add("hadamard_lift_matrix", ((h, h), (h, -h)), ms.entries)
    c.add("shear_lift_matrix", ((h, h * i_), (h * i_, h)), mt.entries)
    m1s = hb.lift_transvection(SympVector.from_string("0:1"))
    c.add("diag_lift_matrix", ((one, zero), (zero, -i_)), m1s.entries)

    s_mat = SympMatrix.from_entries(1, [[0, 1], [1, 0]])
    t_mat = SympMatrix.from_entries(1, [[1, 1], [0, 1]])
    c.add("phi_of_hadamard", s_mat.rows, hb.normalizer_image(ms).phi.rows)
    c.add("phi_of_shear", t_mat.rows, hb.normalizer_image(mt).phi.rows)

    for k in (1, 2, 3):
        bad = sum(
            1 for v in all_vectors(k) if not hb.verify_transvection_lift(v)
        )
        c.add(f"lifts_realize_transvections_k{k}", 0, bad)

    c12 = hb.cnot_operator(1, 2, 3)
    c.add("cnot_involution", hb.PhasedOperator.identity(3).entries, (c12 * c12).entries)
    img = hb.normalizer_image(c12)
    # conjugation adds the control bit into the target on the x side and the
    # target bit into the control on the x* side
    b_block = [[1, 0, 0], [1, 1, 0], [0, 0, 1]]
    bt_block = [list(row) for row in zip(*b_block)]  # = inverse transpose: B is an involution
    expect = SympMatrix.from_entries(
        3,
        [row + [0, 0, 0] for row in b_block] + [[0, 0, 0] + row for row in bt_block],
    )
    c.add("cnot_phi_block", expect.rows, img.phi.rows)
    got_xstar = [row[3:] for row in img.phi.entries()[3:]]
    c.add("cnot_phi_block_consistency", bt_block, got_xstar)

    bad = 0
    for w in all_vectors(2):
        img = hb.normalizer_image(hb.pauli_operator(w))
        if img.phi != SympMatrix.identity(2):
            bad += 1
            continue
        for e in basis_vectors(2):
            if img.f[e] != (2 * symplectic_form(e, w)) % 4:
                bad += 1
    c.add("pauli_conjugation_data_k2", 0, bad)

    rng = random.Random(7)
    vecs = [v for v in all_vectors(2) if not v.is_zero()]
    bad = 0
    for _ in range(6):
        m = hb.lift_transvection(rng.choice(vecs))
        n = hb.lift_transvection(rng.choice(vecs))
        if hb.normalizer_image(m * n).phi != hb.normalizer_image(m).phi * hb.normalizer_image(n).phi:
            bad += 1
    m = hb.cnot_operator(1, 3, 3)
    n = hb.lift_transvection(SympVector.from_string("101:100"))
    if hb.normalizer_image(m * n).phi != hb.normalizer_image(m).phi * hb.normalizer_image(n).phi:
        bad += 1
    c.add("phi_functoriality_samples", 0, bad)

    c.add("projective_order", 24, hb.generated_order([ms, mt], projective=True))
    mp = hb.PhasedOperator(1, [[one, one], [one, -one]]).scaled(
        hb.CycloDyadic.inv_sqrt2()
    )
    mpp = mp * mt * mp
    c.add("renormalized_order", 192, hb.generated_order([mp, mpp]))
    c.add("raw_lift_pair_order", 96, hb.generated_order([ms, mt]))


def _suite_coxeter(c: _Collector):
    for k in (1, 2, 3):
        ident = SympMatrix.identity(k)
        bad = 0
        vecs = [v for v in all_vectors(k) if not v.is_zero()]
        mats = {v.packed: transvection_matrix(v) for v in vecs}
        for v in vecs:
            if mats[v.packed] * mats[v.packed] != ident:
                bad += 1
            if not mats[v.packed].is_symplectic():
                bad += 1
        c.add(f"involutions_k{k}", 0, bad)
        bad = 0
        for v in vecs:
            for w in vecs:
                prod = mats[v.packed] * mats[w.packed]
                if symplectic_form(v, w) == 0:
                    if prod * prod != ident:
                        bad += 1
                else:
                    if prod * prod * prod != ident:
                        bad += 1
                    if mats[v.packed] * mats[w.packed] * mats[v.packed] != mats[(v + w).packed]:
                        bad += 1
        c.add(f"braid_relations_k{k}", 0, bad)

    cartan = e7.cartan_matrix()
    bad = 0
    for i in range(7):
        for j in range(7):
            if symplectic_form(DIAGRAM_LABELS[i], DIAGRAM_LABELS[j]) != cartan[i][j] % 2:
                bad += 1
    for i in range(7):
        want = 1 if i == 0 else 0
        if symplectic_form(HIGHEST_ROOT_LABEL, DIAGRAM_LABELS[i]) != want:
            bad += 1
    c.add("diagram_adjacency", 0, bad)

    chain = S6_CHAIN_LABELS
    bad = 0
    for i in range(5):
        for j in range(5):
            want = 1 if abs(i - j) == 1 else 0
            if i != j and symplectic_form(chain[i], chain[j]) != want:
                bad += 1
    c.add("s6_chain_pattern", 0, bad)
    cat = generate_group([transvection_matrix(v) for v in chain])
    c.add("s6_chain_order", 720, cat.order)
    count = sum(
        1
        for v in all_vectors(2)
        if not v.is_zero() and cat.contains(transvection_matrix(v))
    )
    c.add("s6_transvection_count", 15, count)


def _suite_quadforms(c: _Collector):
    for k in (1, 2, 3, 4):
        even = enumerate_quad_forms(k, 0)
        odd = enumerate_quad_forms(k, 1)
        ne = (1 << (k - 1)) * ((1 << k) + 1)
        no = (1 << (k - 1)) * ((1 << k) - 1)
        c.add(f"even_count_k{k}", ne, len(even))
        c.add(f"odd_count_k{k}", no, len(odd))
        c.add(f"even_zero_counts_k{k}", {ne}, {z for _, z in even})
        c.add(f"odd_zero_counts_k{k}", {no}, {z for _, z in odd})

    for k in (1, 2):
        bad = 0
        for w in all_vectors(k):
            q = QuadLabel(w)
            for v in all_vectors(k):
                moved = quad_transform(v, q)
                if any(
                    quad_eval(moved, u) != quad_eval(q, transvection_apply(v, u))
                    for u in all_vectors(k)
                ):
                    bad += 1
                for u in all_vectors(k):
                    if quad_eval(q, u + v) != (
                        quad_eval(q, u) ^ quad_eval(q, v) ^ symplectic_form(u, v)
                    ):
                        bad += 1
        c.add(f"transform_and_polarization_k{k}", 0, bad)

    rng = random.Random(11)
    vecs3 = all_vectors(3)
    bad = 0
    for _ in range(500):
        v, w, u = rng.choice(vecs3), rng.choice(vecs3), rng.choice(vecs3)
        q = QuadLabel(w)
        moved = quad_transform(v, q)
        if quad_eval(moved, u) != quad_eval(q, transvection_apply(v, u)):
            bad += 1
        if quad_eval(QuadLabel(u + w), v) != quad_eval(q, v) ^ symplectic_form(v, u):
            bad += 1
    c.add("transform_sampled_k3", 0, bad)

    for k in (2, 3):
        bad = 0
        for parity in (0, 1):
            labels = [q for q, _ in enumerate_quad_forms(k, parity)]
            for qa in labels:
                for qb in labels:
                    v = qa.w + qb.w
                    if quad_eval(qa, v) != 0 or quad_transform(v, qa) != qb:
                        bad += 1
        c.add(f"transitivity_k{k}", 0, bad)


def _suite_tensors(c: _Collector):
    x = tf.ExactPolynomial.variable(1, "X", 0)
    y = tf.ExactPolynomial.variable(1, "X", 1)
    y0 = tf.ExactPolynomial.variable(1, "Y", 0)
    y1 = tf.ExactPolynomial.variable(1, "Y", 1)
    golden1 = {
        "Q[0:0]": x * x + y * y,
        "Q[0:1]": x * x - y * y,
        "Q[1:0]": (x * y).scaled(2),
        "A[1:1]": x * y1 - y * y0,
    }
    bad = sum(
        1
        for name, poly in golden1.items()
        if tf.form_polynomial(QuadLabel.from_string(name)) != poly
    )
    c.add("named_forms_k1", 0, bad)

    for k in (1, 2, 3):
        bad = 0
        for w in all_vectors(k):
            lab = QuadLabel(w)
            direct = tf.with_ring_coefficients(tf.form_polynomial(lab))
            via_matrix = tf.bilinear_polynomial(
                hb.pauli_operator(w), alternating=not lab.is_even
            )
            if direct != via_matrix:
                bad += 1
        c.add(f"matrix_polynomial_agreement_k{k}", 0, bad)

    bad = 0
    for k in (1, 2):
        for u in all_vectors(k):
            for w in all_vectors(k):
                lab = QuadLabel(w)
                ev = tf.heisenberg_eigenvalue(u, lab)
                sub = tf.substitute_operator(
                    tf.form_polynomial(lab), hb.pauli_operator(u)
                )
                if sub != tf.with_ring_coefficients(tf.form_polynomial(lab).scaled(ev)):
                    bad += 1
    c.add("heisenberg_eigenvalues", 0, bad)

    bad = 0
    for k in (1, 2):
        for v in all_vectors(k):
            for w in all_vectors(k):
                fa = tf.act_on_form(v, QuadLabel(w))
                if fa.output_label != quad_transform(v, QuadLabel(w)):
                    bad += 1
                if fa.output_label.parity != fa.input_label.parity:
                    bad += 1
    c.add("form_action_labels", 0, bad)

    for k in (1, 2, 3):
        pfs = [tf.pfaffian(lab) for lab in tf.odd_labels(k)]
        c.add(f"pfaffians_nonzero_k{k}", 0, sum(1 for p in pfs if p == 0))
        bad = sum(
            1
            for lab in tf.odd_labels(k)
            if tf.pfaffian(lab) ** 2 != tf.determinant(hb.pauli_operator(lab.w))
        )
        c.add(f"pfaffian_squares_k{k}", 0, bad)

    c.add("square_span_dims", (2, 5, 15), tuple(tf.span_dimension_of_squares(k) for k in (1, 2, 3)))

    for k in (1, 2, 3):
        total = len(tf.even_labels(k)) + len(tf.odd_labels(k))
        c.add(f"form_family_total_k{k}", 4**k, total)

    ms = hb.hadamard_lift()
    mt = hb.lift_transvection(SympVector.from_string("1:0"))
    rep = tf.quartic_invariance_check([ms, mt], 1)
    c.add("quartic_invariance_k1", (True, True), (rep.sum_invariant, rep.weight_enumerator_checked))
    gens2 = [hb.lift_transvection(v) for v in S6_CHAIN_LABELS]
    rep2 = tf.quartic_invariance_check(gens2, 2)
    c.add("quartic_invariance_k2", True, rep2.sum_invariant)


def _suite_hopf(c: _Collector):
    sizes = {1: 2, 2: 3, 3: 5, 4: 9}
    for k in (1, 2, 3, 4):
        rel = tf.hopf_relation(k)
        c.add(f"sum_of_squares_k{k}", sizes[k], len(rel.rhs))


def _census_scan() -> tuple[int, int]:
    """Brute-force the root and weight censuses over a small window."""
    rng = np.arange(-3, 4, dtype=np.int16)
    grids = np.meshgrid(*([rng] * 7), indexing="ij")
    b = np.stack([g.ravel() for g in grids], axis=1)
    sq = (b * b).sum(axis=1)
    sm = b.sum(axis=1)
    roots = weights = 0
    for n0 in range(-3, 4):
        roots += int(((-n0 * n0 + sq == 2) & (3 * n0 + sm == 0)).sum())
        weights += int(((-n0 * n0 + sq == 1) & (3 * n0 + sm == 1)).sum())
    return roots, weights


def _suite_e7(c: _Collector):
    roots = e7.enumerate_roots()
    c.add("positive_roots", 63, len(roots))
    fams = (
        sum(1 for r in roots if len(r.indices) == 2 and r.indices[1] <= 7),
        sum(1 for r in roots if len(r.indices) == 4),
        sum(1 for r in roots if len(r.indices) == 2 and r.indices[1] == 8),
    )
    c.add("root_families", (21, 35, 7), fams)
    weights = e7.all_weight_classes()
    c.add("weight_classes", 56, len(weights))
    neg = [w.negated() for w in e7.enumerate_weights()]
    fams = (
        sum(1 for w in neg if w.pair[1] == 8),
        sum(1 for w in neg if w.pair[1] <= 7),
        sum(1 for w in e7.enumerate_weights() if w.pair[1] <= 7),
        sum(1 for w in e7.enumerate_weights() if w.pair[1] == 8),
    )
    c.add("weight_families", (7, 21, 21, 7), fams)
    scan = _census_scan()
    c.add("census_scan_roots", 126, scan[0])
    c.add("census_scan_weights", 56, scan[1])

    bad = 0
    for r in roots:
        v = r.vector()
        if e7.pic_pairing(v, v) != 2 or e7.pic_pairing(v, e7.CANONICAL_CLASS) != 0:
            bad += 1
    for w in weights:
        v = w.vector()
        if e7.pic_pairing(v, v) != 1 or e7.pic_pairing(v, e7.CANONICAL_CLASS) != 1:
            bad += 1
    c.add("pairing_normalizations", 0, bad)

    bad = 0
    for w in e7.enumerate_weights():
        for r in roots:
            val = e7.weight_root_pairing(w, r)
            su = len(set(w.pair) | set(r.indices))
            si = len(set(w.pair) & set(r.indices))
            if (abs(val) == 1) != ((su - si) % 4 == 2):
                bad += 1
    c.add("weight_root_parity_rule", 0, bad)

    r12 = e7.RootLabel.from_name("R12")
    zero_count = sum(1 for w in weights if e7.weight_root_pairing(w, r12) == 0)
    c.add("weights_orthogonal_to_R12", 32, zero_count)

    c.add(
        "simple_coords_R2568",
        (1, 1, 1, 2, 2, 1, 0),
        e7.root_in_simple_coords(e7.RootLabel.from_name("R2568")).coords,
    )
    c.add(
        "simple_coords_highest",
        e7.HIGHEST_ROOT_COORDS,
        e7.root_in_simple_coords(e7.RootLabel.from_name("R18")).coords,
    )
    c.add(
        "pi_of_highest",
        "100:111",
        str(e7.pi_of_root(e7.RootLabel.from_name("R18"))),
    )
    c.add(
        "pi_of_R2568", "100:000", str(e7.pi_of_root(e7.RootLabel.from_name("R2568")))
    )
    c.add(
        "pi_of_gamma",
        "000:000",
        str(e7.pi_map(e7.SimpleRootCoords(e7.GAMMA_COORDS))),
    )
    c.add("pi_bijection", 63, len(e7.root_of_point_map()))

    coords = {r.name: e7.root_in_simple_coords(r) for r in roots}
    pim = {r.name: e7.pi_map(coords[r.name]) for r in roots}
    bad = trans = 0
    for a in roots:
        va = a.vector()
        for b in roots:
            pair = e7.pic_pairing(va, b.vector())
            if pair % 2 != symplectic_form(pim[a.name], pim[b.name]):
                bad += 1
            if a.name != b.name and (pair == 0) != (
                symplectic_form(pim[a.name], pim[b.name]) == 0
            ):
                trans += 1
    c.add("pi_compatibility", 0, bad)
    c.add("orthogonality_transfer", 0, trans)

    bad = 0
    for a in roots:
        ca = np.array(coords[a.name].coords)
        pa = pim[a.name]
        for b in roots:
            cb = np.array(coords[b.name].coords)
            refl = cb - e7.pic_pairing(a.vector(), b.vector()) * ca
            img = e7.pi_map(e7.SimpleRootCoords(tuple(int(t) for t in refl)))
            if img != transvection_apply(pa, pim[b.name]):
                bad += 1
    c.add("reflection_transvection_equivariance", 0, bad)

    cartan = e7.cartan_matrix()
    gamma_even = all(
        sum(g * cartan[i][j] for j, g in enumerate(e7.GAMMA_COORDS)) % 2 == 0
        for i in range(7)
    )
    c.add("gamma_pairs_evenly", True, gamma_even)
    kernel = [
        m
        for m in range(128)
        if e7.pi_map(
            e7.SimpleRootCoords(tuple((m >> i) & 1 for i in range(7)))
        ).is_zero()
    ]
    gamma_mask = sum(g << i for i, g in enumerate(e7.GAMMA_COORDS))
    c.add("mod2_kernel_of_pi", [0, gamma_mask], kernel)

    c.add(
        "odd_form_of_omega7",
        "A[101:110]",
        str(e7.odd_form_of_weight(e7.WeightLabel((7, 8)))),
    )
    forms = {str(e7.odd_form_of_weight(w)) for w in e7.enumerate_weights()}
    c.add("odd_form_bijection", 28, len(forms))
    q7 = e7.odd_form_of_weight(e7.WeightLabel((7, 8)))
    support = sum(1 for v in all_vectors(3) if quad_eval(q7, v) == 1)
    c.add("orthogonal_subsystem_size", 36, support)

    osets = e7.orthogonal_root_sets()
    c.add("orthogonal_root_sets", 135, len(osets))

    std = e7.orthogonal_root_set(standard_lagrangian(3))
    prod = np.eye(7, dtype=int)
    for r in std.roots:
        ca = np.array(e7.root_in_simple_coords(r).coords)
        refl = np.eye(7, dtype=int) - np.outer(
            ca, [e7.pic_pairing(r.vector(), d) for d in e7.SIMPLE_ROOTS]
        )
        prod = refl @ prod
    c.add("seven_reflections_product", True, bool((prod == -np.eye(7, dtype=int)).all()))

    acc = e7.PicVector((0,) * 8)
    for n, d in zip(e7.OMEGA7_NUMERATORS, e7.SIMPLE_ROOTS):
        acc = acc + d.scaled(n)
    c.add(
        "omega7_expansion",
        str(e7.WeightLabel((7, 8)).vector().scaled(2) + e7.CANONICAL_CLASS),
        str(acc),
    )

    forms28 = {w.name: e7.odd_form_of_weight(w) for w in e7.enumerate_weights()}
    bad = 0
    for lag in enumerate_lagrangians(3):
        for q in forms28.values():
            vals = [quad_eval(q, p) for p in lag.points]
            if sorted(vals) != [0, 0, 0, 1, 1, 1, 1]:
                bad += 1
    c.add("restriction_is_linear_surjective", 0, bad)


def load_golden_tables() -> dict:
    with resources.files("qe7.data").joinpath("fano_tables.json").open() as fh:
        return json.load(fh)


def _suite_restriction(c: _Collector):
    golden = load_golden_tables()
    dec = e7.restriction_decomposition(standard_lagrangian(3))

    got_points = sorted((str(v), r.name) for v, r in dec.points)
    want_points = sorted((p["v"], p["root"]) for p in golden["points"])
    c.add("points_table", want_points, got_points)

    letter = {p["v"]: p["letter"] for p in golden["points"]}
    got_lines = sorted(
        (
            ln.a,
            "".join(sorted(letter[str(p)] for p in ln.points)),
            tuple(sorted(r.name for r in ln.roots)),
            tuple(sorted(w.name for w in ln.weights)),
        )
        for ln in dec.lines
    )
    want_lines = sorted(
        (
            ln["a"],
            "".join(sorted(ln["name"])),
            tuple(sorted(ln["roots"])),
            tuple(sorted(ln["weights"])),
        )
        for ln in golden["lines"]
    )
    c.add("lines_table", want_lines, got_lines)

    c.add("line_count", 7, len(dec.lines))
    bad = sum(
        1
        for ln in dec.lines
        if (ln.points[0] + ln.points[1] + ln.points[2]).packed != 0
    )
    c.add("line_points_sum_zero", 0, bad)
    names = sorted(w.name for ln in dec.lines for w in ln.weights)
    c.add("weights_partition", sorted(w.name for w in e7.enumerate_weights()), names)
    c.add("dimension_count", 56, 8 * len(dec.lines))

    mults = {e7.sl2_multiplicities(r) for r in e7.enumerate_roots()}
    c.add("sl2_multiplicities_all_roots", {(32, 12)}, mults)


def _suite_orders(c: _Collector):
    for k, want in ((1, 6), (2, 720)):
        gens = [
            transvection_matrix(v) for v in all_vectors(k) if not v.is_zero()
        ]
        c.add(f"sp{2*k}_order", want, generate_group(gens).order)
    cat = sp6_catalog()
    c.add("sp6_order", 1451520, cat.order)
    missing = sum(
        1
        for v in all_vectors(3)
        if not v.is_zero() and not cat.contains(transvection_matrix(v))
    )
    c.add("sp6_contains_all_transvections", 0, missing)

    c.add(
        "orthogonal_even_order",
        40320,
        orthogonal_group_order(QuadLabel(SympVector.from_string("000:000"))),
    )
    c.add(
        "orthogonal_odd_order",
        51840,
        orthogonal_group_order(QuadLabel(SympVector.from_string("101:110"))),
    )
    c.add(
        "orthogonal_odd_k2_order",
        120,
        orthogonal_group_order(QuadLabel(SympVector.from_string("10:10"))),
    )
    c.add("lagrangian_count", 135, len(enumerate_lagrangians(3)))

    weyl = e7.weyl_group()
    c.add("weyl_order", 2903040, weyl.order)
    c.add("weyl_contains_minus_identity", True, weyl.contains(-np.eye(7, dtype=np.int8)))
    kernel = weyl.symplectic_kernel_indices()
    mats = {weyl.elements[i].tobytes() for i in kernel}
    want = {
        np.eye(7, dtype=np.int8).tobytes(),
        (-np.eye(7, dtype=np.int8)).tobytes(),
    }
    c.add("weyl_kernel_size", 2, len(kernel))
    c.add("weyl_kernel_is_plus_minus_identity", True, mats == want)
    c.add("weyl_to_sp6_index", 2, weyl.order // sp6_catalog().order)


_SUITE_FUNCS = {
    "heisenberg": _suite_heisenberg,
    "normalizer": _suite_normalizer,
    "coxeter": _suite_coxeter,
    "quadforms": _suite_quadforms,
    "tensors": _suite_tensors,
    "hopf": _suite_hopf,
    "e7": _suite_e7,
    "restriction": _suite_restriction,
    "orders": _suite_orders,
}


def run_verify(suite: str) -> VerificationReport:
    """Run a named suite (or `all`) and collect its report."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    collector = _Collector()
    if suite == "all":
        for name in SUITES[:-1]:
            sub = _Collector()
            _SUITE_FUNCS[name](sub)
            for chk in sub.checks:
                chk.check_id = f"{name}.{chk.check_id}"
            collector.checks.extend(sub.checks)
    else:
        _SUITE_FUNCS[suite](collector)
    return VerificationReport(suite, collector.checks)
