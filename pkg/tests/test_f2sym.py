"""Bit-packed symplectic space: forms, transvections, quadrics, subspaces."""

import pytest
from hypothesis import given, strategies as st

from qe7.f2sym import (
    DIAGRAM_LABELS,
    HIGHEST_ROOT_LABEL,
    S6_CHAIN_LABELS,
    IsotropicSubspace,
    QuadLabel,
    RankMismatch,
    SympMatrix,
    SympVector,
    all_vectors,
    basis_vectors,
    enumerate_lagrangians,
    enumerate_quad_forms,
    generate_group,
    quad_eval,
    quad_transform,
    standard_lagrangian,
    symplectic_form,
    transvection_apply,
    transvection_matrix,
)


def vectors(k):
    return st.builds(
        lambda x, s: SympVector(k, x, s),
        st.integers(0, (1 << k) - 1),
        st.integers(0, (1 << k) - 1),
    )


class TestSympVector:
    def test_string_round_trip(self):
        for k in (1, 2, 3, 4):
            for v in all_vectors(k):
                assert SympVector.from_string(str(v)) == v

    def test_string_form_reads_bits(self):
        v = SympVector.from_string("101:100")
        assert (v.k, v.x, v.xstar) == (3, 0b101, 0b100)

    @pytest.mark.parametrize("bad", ["", "10", "1:01", "12:00", "0:0:0"])
    def test_malformed_strings(self, bad):
        with pytest.raises(ValueError):
            SympVector.from_string(bad)

    def test_rank_bound(self):
        with pytest.raises(ValueError):
            SympVector(5, 0, 0)

    def test_packed_round_trip(self):
        for v in all_vectors(3):
            assert SympVector.from_packed(3, v.packed) == v


class TestSymplecticForm:
    def test_dual_basis_pairing(self):
        assert symplectic_form(
            SympVector.from_string("100:000"), SympVector.from_string("000:100")
        ) == 1

    def test_diagram_edge_value(self):
        # v1 and v3 sit on adjacent diagram nodes
        assert symplectic_form(
            SympVector.from_string("101:100"), SympVector.from_string("111:111")
        ) == 1

    def test_alternating(self):
        assert all(symplectic_form(v, v) == 0 for v in all_vectors(3))

    def test_nondegenerate(self):
        for k in (1, 2, 3):
            for v in all_vectors(k):
                if not v.is_zero():
                    assert any(
                        symplectic_form(v, w) == 1 for w in basis_vectors(k)
                    )

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatch):
            symplectic_form(SympVector.zero(1), SympVector.zero(2))

    @given(st.data())
    def test_bilinear(self, data):
        k = data.draw(st.integers(1, 3))
        u = data.draw(vectors(k))
        v = data.draw(vectors(k))
        w = data.draw(vectors(k))
        assert symplectic_form(u + v, w) == symplectic_form(u, w) ^ symplectic_form(v, w)
        assert symplectic_form(w, u + v) == symplectic_form(w, u) ^ symplectic_form(w, v)


class TestTransvections:
    def test_fixes_orthogonal(self):
        for v in all_vectors(2):
            for w in all_vectors(2):
                if symplectic_form(w, v) == 0:
                    assert transvection_apply(v, w) == w

    def test_k1_matrix_is_shear(self):
        v = SympVector.from_string("1:0")
        assert transvection_apply(v, SympVector.from_string("0:1")) == SympVector.from_string("1:1")
        assert transvection_matrix(v) == SympMatrix.from_entries(1, [[1, 1], [0, 1]])

    def test_fixes_itself(self):
        for v in all_vectors(3):
            assert transvection_apply(v, v) == v

    def test_zero_vector_gives_identity(self):
        assert transvection_matrix(SympVector.zero(2)) == SympMatrix.identity(2)

    def test_all_nonzero_symplectic_involutions_k3(self):
        # brute-force oracle: check M^2 = I and E-preservation on all pairs
        ident = SympMatrix.identity(3)
        for v in all_vectors(3):
            if v.is_zero():
                continue
            m = transvection_matrix(v)
            assert m * m == ident
            assert m.is_symplectic()

    @given(st.data())
    def test_preserves_form(self, data):
        k = data.draw(st.integers(1, 3))
        v = data.draw(vectors(k))
        w = data.draw(vectors(k))
        z = data.draw(vectors(k))
        assert symplectic_form(
            transvection_apply(v, w), transvection_apply(v, z)
        ) == symplectic_form(w, z)

    def test_matrix_matches_apply(self):
        for k in (1, 2, 3):
            for v in all_vectors(k):
                m = transvection_matrix(v)
                for w in all_vectors(k):
                    assert m.apply(w) == transvection_apply(v, w)


class TestCoxeterRelations:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_braid_and_commutation(self, k):
        ident = SympMatrix.identity(k)
        vecs = [v for v in all_vectors(k) if not v.is_zero()]
        mats = {v.packed: transvection_matrix(v) for v in vecs}
        for v in vecs:
            for w in vecs:
                prod = mats[v.packed] * mats[w.packed]
                if symplectic_form(v, w):
                    assert prod * prod * prod == ident
                    assert (
                        mats[v.packed] * mats[w.packed] * mats[v.packed]
                        == mats[(v + w).packed]
                    )
                else:
                    assert prod * prod == ident

    def test_diagram_matches_e7_adjacency(self):
        edges = {(1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7)}
        for i in range(1, 8):
            for j in range(i + 1, 8):
                want = 1 if (i, j) in edges else 0
                assert symplectic_form(DIAGRAM_LABELS[i - 1], DIAGRAM_LABELS[j - 1]) == want

    def test_highest_root_label_pairings(self):
        assert symplectic_form(HIGHEST_ROOT_LABEL, DIAGRAM_LABELS[0]) == 1
        for i in range(1, 7):
            assert symplectic_form(HIGHEST_ROOT_LABEL, DIAGRAM_LABELS[i]) == 0


class TestQuadraticForms:
    def test_direct_evaluation_example(self):
        q = QuadLabel(SympVector.from_string("000:000"))
        # oracle: x*(x) for x=101, x*=100 is 1*1 + 0*0 + 0*1
        assert quad_eval(q, SympVector.from_string("101:100")) == 1

    def test_odd_diagram_form(self):
        q = QuadLabel(SympVector.from_string("101:110"))
        for v in DIAGRAM_LABELS[:6]:
            assert quad_eval(q, v) == 1

    def test_zero_at_origin(self):
        for k in (1, 2, 3):
            for w in all_vectors(k):
                assert quad_eval(QuadLabel(w), SympVector.zero(k)) == 0

    @given(st.data())
    def test_polarization(self, data):
        k = data.draw(st.integers(1, 3))
        u, v, w = (data.draw(vectors(k)) for _ in range(3))
        q = QuadLabel(w)
        assert quad_eval(q, u + v) == quad_eval(q, u) ^ quad_eval(q, v) ^ symplectic_form(u, v)

    @given(st.data())
    def test_label_shift(self, data):
        k = data.draw(st.integers(1, 3))
        u, v, w = (data.draw(vectors(k)) for _ in range(3))
        assert quad_eval(QuadLabel(u + w), v) == quad_eval(QuadLabel(w), v) ^ symplectic_form(v, u)

    def test_transform_fixed_when_nonzero(self):
        for v in all_vectors(2):
            for w in all_vectors(2):
                q = QuadLabel(w)
                if quad_eval(q, v) == 1:
                    assert quad_transform(v, q) == q

    def test_transform_pointwise_oracle(self):
        # independent oracle: compare with u -> q(t_v(u)) over all u
        v = SympVector.from_string("110:000")
        q0 = QuadLabel(SympVector.zero(3))
        assert quad_eval(q0, v) == 0
        moved = quad_transform(v, q0)
        assert moved.w == v
        for u in all_vectors(3):
            assert quad_eval(moved, u) == quad_eval(q0, transvection_apply(v, u))

    def test_transform_identity_for_zero(self):
        for w in all_vectors(2):
            assert quad_transform(SympVector.zero(2), QuadLabel(w)) == QuadLabel(w)

    def test_transform_preserves_parity_exhaustive_k2(self):
        for v in all_vectors(2):
            for w in all_vectors(2):
                q = QuadLabel(w)
                moved = quad_transform(v, q)
                assert moved.parity == q.parity
                for u in all_vectors(2):
                    assert quad_eval(moved, u) == quad_eval(q, transvection_apply(v, u))

    def test_transitivity_within_parity(self):
        for parity in (0, 1):
            labels = [q for q, _ in enumerate_quad_forms(3, parity)]
            for qa in labels:
                for qb in labels:
                    v = qa.w + qb.w
                    assert quad_eval(qa, v) == 0
                    assert quad_transform(v, qa) == qb

    def test_label_string_round_trip(self):
        for k in (1, 2, 3):
            for w in all_vectors(k):
                q = QuadLabel(w)
                assert QuadLabel.from_string(str(q)) == q

    def test_wrong_parity_tag_rejected(self):
        with pytest.raises(ValueError):
            QuadLabel.from_string("A[0:0]")
        with pytest.raises(ValueError):
            QuadLabel.from_string("Q[1:1]")


class TestQuadFormCensus:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_counts_and_zero_counts(self, k):
        even = enumerate_quad_forms(k, 0)
        odd = enumerate_quad_forms(k, 1)
        ne = (1 << (k - 1)) * ((1 << k) + 1)
        no = (1 << (k - 1)) * ((1 << k) - 1)
        assert len(even) == ne
        assert len(odd) == no
        assert all(z == ne for _, z in even)
        assert all(z == no for _, z in odd)

    def test_k1_odd_form_vanishes_only_at_zero(self):
        # brute force over the four vectors of the plane
        ((q, zeros),) = enumerate_quad_forms(1, 1)
        assert str(q) == "A[1:1]"
        values = {str(v): quad_eval(q, v) for v in all_vectors(1)}
        assert values == {"0:0": 0, "1:0": 1, "0:1": 1, "1:1": 1}
        assert zeros == 1


class TestIsotropicSubspaces:
    def test_standard_lagrangian(self):
        sub = standard_lagrangian(3)
        assert sub.is_lagrangian
        assert [str(p) for p in sub.points] == [
            "001:000", "010:000", "011:000", "100:000", "101:000", "110:000", "111:000",
        ]

    def test_rejects_non_isotropic(self):
        with pytest.raises(ValueError):
            IsotropicSubspace(1, [SympVector.from_string("1:0"), SympVector.from_string("0:1")])

    def test_rejects_dependent(self):
        v = SympVector.from_string("10:00")
        with pytest.raises(ValueError):
            IsotropicSubspace(2, [v, v])

    def test_point_count(self):
        for lag in enumerate_lagrangians(2):
            assert len(lag.points) == 3

    def test_string_round_trip(self):
        for lag in enumerate_lagrangians(2):
            assert IsotropicSubspace.from_string(2, str(lag)) == lag

    @pytest.mark.parametrize("k,count", [(1, 3), (2, 15), (3, 135)])
    def test_lagrangian_counts(self, k, count):
        subs = enumerate_lagrangians(k)
        assert len(subs) == count
        assert len({s.point_key() for s in subs}) == count
        keys = [s.point_key() for s in subs]
        assert keys == sorted(keys)

    def test_k2_count_against_basis_oracle(self):
        # ordered isotropic bases / |GL(2,F2)| = 15
        nonzero = [v for v in all_vectors(2) if not v.is_zero()]
        bases = sum(
            1
            for v1 in nonzero
            for v2 in nonzero
            if v2 not in (v1,) and symplectic_form(v1, v2) == 0 and v2 != v1
        )
        assert bases // 6 == len(enumerate_lagrangians(2))

    def test_codim1_subspaces_of_lagrangian(self):
        sub = standard_lagrangian(3)
        lines = sub.subspaces_codim1()
        assert len(lines) == 7
        for line in lines:
            assert line.dim == 2
            a, b, c = line.points
            assert (a + b + c).packed == 0


class TestGroupClosure:
    def test_sp2_order(self):
        gens = [transvection_matrix(v) for v in all_vectors(1) if not v.is_zero()]
        assert generate_group(gens).order == 6

    def test_sp4_order(self):
        gens = [transvection_matrix(v) for v in all_vectors(2) if not v.is_zero()]
        cat = generate_group(gens)
        assert cat.order == 720

    def test_sp6_order(self, sp6):
        assert sp6.order == 1451520
        assert sp6.order == 2**9 * 3**4 * 5 * 7

    def test_generator_order_independence(self):
        vecs = [v for v in all_vectors(2) if not v.is_zero()]
        gens = [transvection_matrix(v) for v in vecs]
        a = generate_group(gens)
        b = generate_group(list(reversed(gens)))
        assert a.order == b.order
        assert set(map(int, a.encodings)) == set(map(int, b.encodings))

    def test_catalog_contract(self):
        gens = [transvection_matrix(v) for v in S6_CHAIN_LABELS]
        cat = generate_group(gens)
        assert cat.order == 720
        assert cat.element(0) == SympMatrix.identity(2)
        # closed under product and inverse on a sample
        sample = [cat.element(i) for i in range(0, cat.order, 97)]
        for m in sample:
            assert cat.contains(m.inverse())
            assert cat.contains(m * sample[0])
        outside = SympMatrix.identity(3)
        assert not cat.contains(outside)

    def test_rejects_singular_generator(self):
        singular = SympMatrix(1, [0b10, 0b10])
        with pytest.raises(ValueError):
            generate_group([singular])

    def test_s6_chain(self):
        cat = generate_group([transvection_matrix(v) for v in S6_CHAIN_LABELS])
        assert cat.order == 720
        transvections = [
            v
            for v in all_vectors(2)
            if not v.is_zero() and cat.contains(transvection_matrix(v))
        ]
        assert len(transvections) == 15


class TestSympMatrix:
    def test_inverse(self):
        for v in all_vectors(2):
            m = transvection_matrix(v)
            assert m * m.inverse() == SympMatrix.identity(2)

    def test_encode_decode(self):
        for v in all_vectors(2):
            m = transvection_matrix(v)
            assert SympMatrix.decode(2, m.encode()) == m

    def test_singular_raises(self):
        with pytest.raises(ValueError):
            SympMatrix(1, [0b11, 0b11]).inverse()
