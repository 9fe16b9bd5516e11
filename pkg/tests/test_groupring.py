import random

import pytest

from l2sig.exactnum import CycNumber, UsageError
from l2sig.groupring import (
    Character,
    FiniteAbelianGroup,
    GroupRingElement,
    apply_character,
    averaging_idempotent,
    char_value,
    characters,
    ring_involution,
    trivial_character,
)

from helpers import abelian_groups_up_to, random_ring_element


class TestGroups:
    def test_orders(self):
        assert FiniteAbelianGroup.trivial().order == 1
        assert FiniteAbelianGroup.cyclic(6).exponent == 6
        g = FiniteAbelianGroup((2, 4))
        assert g.order == 8 and g.exponent == 4

    def test_invalid_factor(self):
        with pytest.raises(UsageError):
            FiniteAbelianGroup((1,))

    def test_element_reduction_and_inverse(self):
        g = FiniteAbelianGroup((3, 4))
        a = g.element([5, -1])
        assert a.residues == (2, 3)
        assert g.mul(a, g.inv(a)) == g.identity


class TestCharacters:
    def test_z2_has_trivial_and_sign(self):
        g = FiniteAbelianGroup.cyclic(2)
        chars = characters(g)
        assert len(chars) == 2
        h = g.element([1])
        values = [char_value(g, chi, h) for chi in chars]
        assert values[0] == 1 and values[1] == -1

    def test_trivial_group(self):
        g = FiniteAbelianGroup.trivial()
        assert len(characters(g)) == 1
        assert char_value(g, characters(g)[0], g.identity) == 1

    def test_klein_four_values(self):
        g = FiniteAbelianGroup((2, 2))
        chars = characters(g)
        assert len(chars) == 4
        for chi in chars:
            for x in g.elements():
                v = char_value(g, chi, x)
                assert v == 1 or v == -1

    def test_z4_generator(self):
        g = FiniteAbelianGroup.cyclic(4)
        chi = Character((1,))
        assert char_value(g, chi, g.element([1])) == CycNumber.zeta(4)

    def test_identity_always_one(self):
        g = FiniteAbelianGroup((3, 4))
        for chi in characters(g):
            assert char_value(g, chi, g.identity) == 1

    def test_z6_weight_two(self):
        # exponent arithmetic: chi_2(g) = zeta_6^2 = zeta_3
        g = FiniteAbelianGroup.cyclic(6)
        chi = Character((2,))
        assert char_value(g, chi, g.element([1])) == CycNumber.zeta(3)
        assert char_value(g, chi, g.element([1])) == CycNumber.zeta(6, 2)

    def test_multiplicative_in_element(self):
        rng = random.Random(5)
        g = FiniteAbelianGroup((4, 6))
        e = g.exponent
        chars = characters(g)
        for _ in range(30):
            chi = rng.choice(chars)
            a = g.element([rng.randrange(4), rng.randrange(6)])
            b = g.element([rng.randrange(4), rng.randrange(6)])
            lhs = char_value(g, chi, g.mul(a, b)).lift(e)
            rhs = char_value(g, chi, a).lift(e) * char_value(g, chi, b).lift(e)
            assert lhs == rhs


class TestRingElements:
    def test_involution_inverts_elements(self):
        g = FiniteAbelianGroup.cyclic(5)
        x = GroupRingElement.from_element(g, g.element([1]))
        assert ring_involution(x) == GroupRingElement.from_element(g, g.element([4]))

    def test_involution_fixes_idempotent(self):
        g = FiniteAbelianGroup.cyclic(6)
        e = averaging_idempotent(g)
        assert ring_involution(e) == e

    def test_involution_z5_combination(self):
        g = FiniteAbelianGroup.cyclic(5)
        x = GroupRingElement.from_terms(
            g, [(g.element([1]), 2), (g.element([2]), 3)])
        expected = GroupRingElement.from_terms(
            g, [(g.element([4]), 2), (g.element([3]), 3)])
        assert ring_involution(x) == expected

    def test_idempotent_squares(self):
        g = FiniteAbelianGroup((2, 3))
        e = averaging_idempotent(g)
        assert e * e == e

    def test_zero_coefficients_dropped(self):
        g = FiniteAbelianGroup.cyclic(3)
        x = GroupRingElement.from_terms(
            g, [(g.element([1]), 1), (g.element([1]), -1)])
        assert x.is_zero()


class TestApplyCharacter:
    def test_trivial_character_is_augmentation(self):
        rng = random.Random(11)
        g = FiniteAbelianGroup((3, 4))
        for _ in range(20):
            x = random_ring_element(g, rng, max_terms=4)
            assert apply_character(g, trivial_character(g), x) == x.augmentation()

    def test_nontrivial_character_kills_idempotent(self):
        g = FiniteAbelianGroup.cyclic(7)
        e = averaging_idempotent(g)
        for chi in characters(g)[1:]:
            assert apply_character(g, chi, e) == 0
        assert apply_character(g, trivial_character(g), e) == 1

    def test_z2_sign_character(self):
        g = FiniteAbelianGroup.cyclic(2)
        sign = Character((1,))
        one = GroupRingElement.one(g)
        h = GroupRingElement.from_element(g, g.element([1]))
        assert apply_character(g, sign, one + h) == 0
        assert apply_character(g, sign, one - h) == 2

    def test_ring_homomorphism(self):
        rng = random.Random(23)
        g = FiniteAbelianGroup((2, 6))
        chars = characters(g)
        e = g.exponent
        for _ in range(25):
            chi = rng.choice(chars)
            x = random_ring_element(g, rng, max_terms=3)
            y = random_ring_element(g, rng, max_terms=3)
            lhs = apply_character(g, chi, x * y)
            rhs = apply_character(g, chi, x).lift(e) * apply_character(g, chi, y).lift(e)
            assert lhs.lift(e) == rhs

    def test_intertwines_involution_and_conjugation(self):
        rng = random.Random(31)
        g = FiniteAbelianGroup((4, 3))
        chars = characters(g)
        for _ in range(25):
            chi = rng.choice(chars)
            x = random_ring_element(g, rng, max_terms=3)
            assert apply_character(g, chi, ring_involution(x)) == \
                apply_character(g, chi, x).conjugate()

    def test_orthogonality_all_groups_up_to_24(self):
        for g in abelian_groups_up_to(24):
            e = g.exponent
            chars = characters(g)
            for x in g.elements():
                total = CycNumber.from_rational(0, e)
                for chi in chars:
                    total = total + char_value(g, chi, x).lift(e)
                expected = g.order if x == g.identity else 0
                assert total == expected, (g.factors, x)
