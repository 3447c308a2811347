"""
Tests de los anillos Z y Z/m.
"""
import pytest
from hypothesis import given, strategies as st

from condensation_kit.ring import (
    ZZ,
    ModularRing,
    NotAnIntegralDomainError,
    RingDivisionByZeroError,
    RingError,
    RingMismatchError,
    RingSpecError,
    exact_divide,
    is_prime,
    product,
    ring_from_spec,
)
from tests.strategies import big_ints, int_rings, small_ints


class TestIntegerRing:

    def test_operators_coerce_python_ints(self, zz):
        a = zz.from_int(3)
        assert a + 4 == 7
        assert 10 - a == 7
        assert a * -2 == -6
        assert -a == -3
        assert a ** 3 == 27

    def test_arbitrary_precision(self, zz):
        big = zz.from_int(2) ** 200
        assert str(big) == str(2 ** 200)

    def test_exact_divide(self, zz):
        assert zz.exact_divide(zz.from_int(-12), zz.from_int(4)) == -3
        assert zz.exact_divide(zz.from_int(7), zz.from_int(2)) is None

    def test_divide_by_zero(self, zz):
        with pytest.raises(RingDivisionByZeroError):
            zz.exact_divide(zz.one, zz.zero)

    def test_negative_exponent_rejected(self, zz):
        with pytest.raises(RingError):
            zz.from_int(2) ** -1

    def test_empty_product_is_one(self, zz):
        assert product([], zz) == 1

    def test_describe(self, zz):
        assert zz.describe() == "Z"
        assert zz.is_integral_domain


class TestModularRing:

    def test_reduces_representatives(self, mod7):
        assert mod7.from_int(10) == 3
        assert mod7.from_int(-1) == 6
        assert str(mod7.from_int(-1)) == "6"

    def test_arithmetic(self, mod7):
        assert mod7.from_int(3) * 5 == 1
        assert mod7.from_int(4) + 5 == 2

    def test_exact_divide_uses_inverse(self, mod7):
        q = exact_divide(mod7.from_int(3), mod7.from_int(5))
        assert q == 2
        assert q * 5 == 3

    def test_composite_modulus_is_not_a_domain(self):
        z6 = ModularRing(6)
        assert not z6.is_integral_domain
        with pytest.raises(NotAnIntegralDomainError):
            z6.exact_divide(z6.from_int(4), z6.from_int(2))

    def test_zero_divisors_exist_mod_6(self):
        z6 = ModularRing(6)
        assert (z6.from_int(2) * 3).is_zero()

    @pytest.mark.parametrize("modulus", [0, 1, -5])
    def test_invalid_modulus(self, modulus):
        with pytest.raises(RingSpecError):
            ModularRing(modulus)

    def test_mixing_rings_fails(self, mod7):
        with pytest.raises(RingMismatchError):
            ZZ.from_int(1) + mod7.from_int(1)

    def test_equal_rings_compare_by_modulus(self):
        assert ModularRing(7).from_int(3) == ModularRing(7).from_int(10)


@pytest.mark.parametrize("m, expected", [(2, True), (3, True), (4, False), (91, False), (97, True), (1, False)])
def test_is_prime(m, expected):
    assert is_prime(m) is expected


class TestRingFromSpec:

    def test_int(self):
        assert ring_from_spec("int") is ZZ

    def test_mod(self):
        ring = ring_from_spec("mod:13")
        assert ring.describe() == "Z/13"
        assert ring.is_integral_domain

    def test_poly(self):
        ring = ring_from_spec("poly", ["t", "u"])
        assert ring.describe() == "Z[t,u]"

    @pytest.mark.parametrize("spec", ["mod:x", "mod:1", "real", "mod:", ""])
    def test_invalid(self, spec):
        with pytest.raises(RingSpecError):
            ring_from_spec(spec)


class TestRingAxioms:

    @given(int_rings, small_ints, small_ints, small_ints)
    def test_commutative_ring_axioms(self, ring, a, b, c):
        x, y, z = ring.from_int(a), ring.from_int(b), ring.from_int(c)
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + ring.zero == x
        assert x * ring.one == x
        assert x - x == ring.zero

    @given(int_rings, small_ints, st.integers(min_value=0, max_value=12))
    def test_pow_matches_repeated_product(self, ring, a, k):
        x = ring.from_int(a)
        assert x ** k == product([x] * k, ring)

    @given(big_ints, big_ints)
    def test_integer_division_roundtrip(self, a, b):
        if b == 0:
            return
        x, y = ZZ.from_int(a), ZZ.from_int(b)
        assert ZZ.exact_divide(x * y, y) == x

    @given(int_rings, small_ints, small_ints)
    def test_equal_values_hash_equal(self, ring, a, b):
        x, y = ring.from_int(a), ring.from_int(b)
        if x == y:
            assert hash(x) == hash(y)

    @given(int_rings, small_ints)
    def test_hash_agrees_with_python_int(self, ring, a):
        x = ring.from_int(a)
        canonical = a % ring.modulus if isinstance(ring, ModularRing) else a
        assert x == canonical
        assert hash(x) == hash(canonical)


def test_values_and_ints_share_set_slots(zz, mod7):
    assert len({zz.from_int(5), 5}) == 1
    assert len({mod7.from_int(12), 5}) == 1
    assert {zz.from_int(-3): "a"}[-3] == "a"
