import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from l2sig.exactnum import (
    CycNumber,
    DomainError,
    Sign,
    UsageError,
    cyclotomic_polynomial,
    euler_phi,
    lift_to_common,
)

CONDUCTORS = [1, 2, 3, 4, 5, 6, 8, 9, 12]


def cyc_strategy(conductors=CONDUCTORS, coeff_bound=4):
    def build(e, nums, dens):
        coeffs = [Fraction(n, d) for n, d in zip(nums, dens)]
        return CycNumber.from_coeffs(e, coeffs[:euler_phi(e)])

    return st.sampled_from(conductors).flatmap(
        lambda e: st.builds(
            build,
            st.just(e),
            st.lists(st.integers(-coeff_bound, coeff_bound),
                     min_size=euler_phi(e), max_size=euler_phi(e)),
            st.lists(st.integers(1, 3),
                     min_size=euler_phi(e), max_size=euler_phi(e)),
        ))


class TestCyclotomicPolynomials:
    def test_small_cases(self):
        assert cyclotomic_polynomial(1) == (-1, 1)
        assert cyclotomic_polynomial(2) == (1, 1)
        assert cyclotomic_polynomial(3) == (1, 1, 1)
        assert cyclotomic_polynomial(4) == (1, 0, 1)
        assert cyclotomic_polynomial(6) == (1, -1, 1)
        assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)

    def test_degree_is_phi(self):
        for e in range(1, 40):
            assert len(cyclotomic_polynomial(e)) == euler_phi(e) + 1


class TestArithmetic:
    def test_zeta4_squared(self):
        z = CycNumber.zeta(4)
        assert z * z == -1

    def test_cube_roots_sum(self):
        z = CycNumber.zeta(3)
        assert z + z * z == -1

    def test_conductor_five_product(self):
        # (1 + z)(1 + z^4) = 1 + z + z^4 + z^5 = 2 + z + z^4
        z1 = CycNumber.zeta(5, 1)
        z4 = CycNumber.zeta(5, 4)
        assert (1 + z1) * (1 + z4) == 2 + z1 + z4

    def test_conductor_mismatch_is_usage_error(self):
        with pytest.raises(UsageError):
            CycNumber.zeta(3) + CycNumber.zeta(4)

    def test_lift_and_cross_conductor_equality(self):
        assert CycNumber.zeta(6, 2) == CycNumber.zeta(3)
        assert CycNumber.zeta(3).lift(6) == CycNumber.zeta(6, 2)
        with pytest.raises(UsageError):
            CycNumber.zeta(3).lift(4)

    def test_monomial_reduction_is_canonical(self):
        # zeta_5^7 = zeta_5^2 and high powers reduce into the power basis
        assert CycNumber.zeta(5, 7) == CycNumber.zeta(5, 2)
        z = CycNumber.zeta(5, 4)
        assert CycNumber.from_coeffs(5, z.coefficients()) == z

    @given(cyc_strategy(), cyc_strategy())
    def test_addition_commutes_after_lift(self, a, b):
        x, y = lift_to_common(a, b)
        assert x + y == y + x

    @given(cyc_strategy(conductors=[1, 3, 4, 5, 8]),
           cyc_strategy(conductors=[1, 3, 4, 5, 8]),
           cyc_strategy(conductors=[1, 3, 4, 5, 8]))
    def test_ring_axioms(self, a, b, c):
        e = math.lcm(a.conductor, b.conductor, c.conductor)
        x, y, z = a.lift(e), b.lift(e), c.lift(e)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x + y) + z == x + (y + z)

    @given(cyc_strategy())
    def test_inverse(self, a):
        if not a.is_zero():
            assert a * a.inverse() == 1

    @given(cyc_strategy(), cyc_strategy())
    def test_products_stay_reduced(self, a, b):
        x, y = lift_to_common(a, b)
        p = x * y
        assert len(p.nums) == euler_phi(p.conductor)
        assert CycNumber.from_coeffs(p.conductor, p.coefficients()) == p


class TestConjugation:
    def test_zeta4(self):
        z = CycNumber.zeta(4)
        assert z.conjugate() == -z

    def test_rational_fixed(self):
        q = CycNumber.from_rational(Fraction(-7, 3), 12)
        assert q.conjugate() == q

    def test_zeta3(self):
        # zeta_3 conjugates to zeta_3^2 = -1 - zeta_3 modulo x^2 + x + 1
        z = CycNumber.zeta(3)
        assert z.conjugate() == CycNumber.from_coeffs(3, [-1, -1])

    @given(cyc_strategy())
    def test_involutive(self, a):
        assert a.conjugate().conjugate() == a

    @given(cyc_strategy(), cyc_strategy())
    def test_multiplicative(self, a, b):
        e = math.lcm(a.conductor, b.conductor)
        x, y = a.lift(e), b.lift(e)
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()


class TestSign:
    def test_two_cos_positive(self):
        z = CycNumber.zeta(5)
        assert (z + z.conjugate()).sign() is Sign.POSITIVE

    def test_zero(self):
        assert CycNumber.from_rational(0).sign() is Sign.ZERO

    def test_golden_negative(self):
        # numeric oracle: 1 + 2*cos(4*pi/5) = -0.618... < 0
        assert 1 + 2 * math.cos(4 * math.pi / 5) < -0.5
        v = 1 + CycNumber.zeta(5, 2) + CycNumber.zeta(5, 3)
        assert v.sign() is Sign.NEGATIVE

    def test_non_real_rejected(self):
        with pytest.raises(DomainError):
            CycNumber.zeta(4).sign()

    def test_tiny_difference(self):
        # 2*cos(2*pi/7) against the convergent 6296/5049 (4e-9 below it):
        # the machine-precision prefilter must hand over to refinement.
        z = CycNumber.zeta(7)
        value = z + z.conjugate()
        close = Fraction(6296, 5049)
        assert 0 < 2 * math.cos(2 * math.pi / 7) - float(close) < 1e-8
        assert (value - close).sign() is Sign.POSITIVE
        assert (close - value).sign() is Sign.NEGATIVE

    def test_agrees_with_embedding_midpoint(self):
        rng = random.Random(20240817)
        checked = 0
        while checked < 1000:
            e = rng.randint(1, 60)
            phi = euler_phi(e)
            coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 4))
                      for _ in range(phi)]
            a = CycNumber.from_coeffs(e, coeffs)
            a = a + a.conjugate()
            if a.is_zero():
                continue
            got = a.sign()
            mid = a.embed(96).re.midpoint
            assert got is (Sign.POSITIVE if mid > 0 else Sign.NEGATIVE)
            checked += 1


class TestEmbedding:
    def test_zeta4_point(self):
        enc = CycNumber.zeta(4).embed(64)
        assert enc.re.contains_zero()
        assert enc.re.width < Fraction(1, 2 ** 60)
        assert enc.im.lo < 1 < enc.im.hi or enc.im.hi >= 1 - Fraction(1, 2 ** 60)

    def test_conductor_one_is_exact(self):
        enc = CycNumber.from_rational(1).embed(64)
        assert (enc.re.lo, enc.re.hi) == (1, 1)
        assert (enc.im.lo, enc.im.hi) == (0, 0)

    def test_rational_value_in_nontrivial_conductor(self):
        # zeta_3 + zeta_3^2 reduces to the exact rational -1
        v = CycNumber.zeta(3) + CycNumber.zeta(3, 2)
        enc = v.embed(64)
        assert (enc.re.lo, enc.re.hi) == (-1, -1)
        assert (enc.im.lo, enc.im.hi) == (0, 0)

    def test_width_shrinks_with_precision(self):
        v = CycNumber.zeta(7) + CycNumber.zeta(7, 3)
        w64 = v.embed(64).re.width
        w256 = v.embed(256).re.width
        assert w256 < w64
