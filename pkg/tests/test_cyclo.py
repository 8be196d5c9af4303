"""The exact scalar ring Z[zeta8, 1/2]."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qe7.heisenberg import CycloDyadic


def dyadics():
    return st.builds(
        Fraction, st.integers(-64, 64), st.sampled_from([1, 2, 4, 8, 16])
    )


def ring_elements():
    return st.builds(CycloDyadic, dyadics(), dyadics(), dyadics(), dyadics())


class TestConstruction:
    def test_rejects_non_dyadic(self):
        with pytest.raises(ValueError):
            CycloDyadic(Fraction(1, 3))

    def test_normalized_coefficients(self):
        c = CycloDyadic(Fraction(2, 4))
        assert c.coeffs[0] == Fraction(1, 2)

    def test_powers_of_i(self):
        i = CycloDyadic.i()
        assert i * i == CycloDyadic(-1)
        assert CycloDyadic.i_power(3) == -i
        assert CycloDyadic.i_power(7) == CycloDyadic.i_power(3)

    def test_zeta8_is_primitive(self):
        z = CycloDyadic.zeta8()
        assert z * z == CycloDyadic.i()
        p4 = z * z * z * z
        assert p4 == CycloDyadic(-1)

    def test_inv_sqrt2_squares_to_half(self):
        s = CycloDyadic.inv_sqrt2()
        assert s * s == CycloDyadic(Fraction(1, 2))


class TestRingAxioms:
    @given(ring_elements(), ring_elements(), ring_elements())
    def test_mul_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(ring_elements(), ring_elements(), ring_elements())
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(ring_elements(), ring_elements())
    def test_commutative(self, a, b):
        assert a * b == b * a
        assert a + b == b + a

    @given(ring_elements())
    def test_units(self, a):
        assert a + CycloDyadic.zero() == a
        assert a * CycloDyadic.one() == a
        assert a - a == CycloDyadic.zero()

    @given(ring_elements())
    def test_int_coercion(self, a):
        assert 2 * a == a + a
        assert 1 + a == a + CycloDyadic.one()


class TestSerialization:
    @given(ring_elements())
    def test_string_round_trip(self, a):
        assert CycloDyadic.from_strings(a.to_strings()) == a

    def test_strings_are_reduced(self):
        c = CycloDyadic(Fraction(1, 2), 0, Fraction(-1, 2), 0)
        assert c.to_strings() == ["1/2^1", "0/2^0", "-1/2^1", "0/2^0"]

    def test_malformed(self):
        with pytest.raises(ValueError):
            CycloDyadic.from_strings(["1/3", "0/2^0", "0/2^0", "0/2^0"])
