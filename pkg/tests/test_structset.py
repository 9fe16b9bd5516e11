import random
from fractions import Fraction

import pytest

from l2sig.exactnum import UsageError
from l2sig.forms import HermitianGroupForm, canonical_embedding, direct_sum, induce
from l2sig.groupring import FiniteAbelianGroup, averaging_idempotent
from l2sig.structset import (
    Ledger,
    ManifoldLabel,
    act,
    distinguish,
    generate_family,
)

from helpers import random_hermitian_form


def idempotent_form(n):
    g = FiniteAbelianGroup.cyclic(n)
    return HermitianGroupForm(g, [[averaging_idempotent(g)]])


class TestGenerateFamily:
    def test_alphas_n2(self):
        family = generate_family(2, 3)
        assert [a for _, a in family] == [Fraction(-1, 2), Fraction(-1), Fraction(-3, 2)]

    def test_alphas_n3(self):
        family = generate_family(3, 2)
        assert [a for _, a in family] == [Fraction(-2, 3), Fraction(-4, 3)]

    def test_single_member_nonzero(self):
        family = generate_family(2, 1)
        assert family[0][1] == Fraction(-1, 2) != 0

    def test_rejects_trivial_group(self):
        with pytest.raises(UsageError):
            generate_family(1, 3)
        with pytest.raises(UsageError):
            generate_family(2, 0)

    def test_pairwise_distinguished_full_grid(self):
        for n in range(2, 11):
            group = FiniteAbelianGroup.cyclic(n)
            family = generate_family(n, 20)
            alphas = [a for _, a in family]
            assert len(set(alphas)) == 20
            assert all(a != 0 for a in alphas)
            base = ManifoldLabel("M", group)
            labels = [act(base, form, f"M{k}")
                      for k, (form, _) in enumerate(family, start=1)]
            for i in range(20):
                for j in range(i + 1, 20):
                    assert distinguish(labels[i], labels[j])


class TestAct:
    def test_zero_dim_form_keeps_offset(self):
        g = FiniteAbelianGroup.cyclic(3)
        base = ManifoldLabel("M", g, Fraction(1, 5))
        empty = HermitianGroupForm(g, [])
        assert act(base, empty, "M'").tau_offset == Fraction(1, 5)

    def test_idempotent_offset(self):
        for n in (2, 3, 7):
            g = FiniteAbelianGroup.cyclic(n)
            base = ManifoldLabel("M", g)
            moved = act(base, idempotent_form(n), "M'")
            assert moved.tau_offset == -(Fraction(1, n) - 1) == Fraction(n - 1, n)

    def test_composition_matches_direct_sum(self):
        rng = random.Random(611)
        g = FiniteAbelianGroup.cyclic(4)
        base = ManifoldLabel("M", g)
        for _ in range(10):
            v = random_hermitian_form(g, 2, rng)
            w = random_hermitian_form(g, 1, rng)
            two_steps = act(act(base, v, "a"), w, "b")
            one_step = act(base, direct_sum(v, w), "c")
            assert two_steps.tau_offset == one_step.tau_offset

    def test_group_mismatch(self):
        base = ManifoldLabel("M", FiniteAbelianGroup.cyclic(2))
        with pytest.raises(UsageError):
            act(base, idempotent_form(3), "M'")


class TestDistinguish:
    def test_idempotent_action_detected(self):
        g = FiniteAbelianGroup.cyclic(2)
        base = ManifoldLabel("M", g)
        assert distinguish(base, act(base, idempotent_form(2), "M'"))

    def test_self_comparison(self):
        base = ManifoldLabel("M", FiniteAbelianGroup.cyclic(2))
        assert not distinguish(base, base)

    def test_family_members_distinct(self):
        g = FiniteAbelianGroup.cyclic(3)
        base = ManifoldLabel("M", g)
        family = generate_family(3, 2)
        a = act(base, family[0][0], "M1")
        b = act(base, family[1][0], "M2")
        assert distinguish(a, b)

    def test_offsets_invariant_under_induction(self):
        # replacing the acting form by its induced version over a larger
        # cyclic group leaves all offsets unchanged
        rng = random.Random(307)
        for n, k in ((2, 3), (3, 2), (4, 3)):
            h = FiniteAbelianGroup.cyclic(n)
            g = FiniteAbelianGroup.cyclic(n * k)
            emb = canonical_embedding(h, g)
            for _ in range(5):
                v = random_hermitian_form(h, 2, rng)
                small = act(ManifoldLabel("M", h), v, "M'")
                big = act(ManifoldLabel("M", g), induce(v, g, emb), "M'")
                assert small.tau_offset == big.tau_offset


class TestLedger:
    def test_base_entry(self):
        ledger = Ledger(FiniteAbelianGroup.cyclic(3), "M")
        assert ledger.base.name == "M"
        assert ledger.base.tau_offset == 0

    def test_act_and_distinguish(self):
        ledger = Ledger(FiniteAbelianGroup.cyclic(3), "M")
        ledger.act("M", idempotent_form(3), "M1")
        ledger.act("M1", idempotent_form(3), "M2")
        assert ledger.find("M1").tau_offset == Fraction(2, 3)
        assert ledger.find("M2").tau_offset == Fraction(4, 3)
        assert ledger.distinguish("M", "M1")
        assert ledger.distinguish("M1", "M2")
        assert not ledger.distinguish("M", "M")

    def test_duplicate_names_rejected(self):
        ledger = Ledger(FiniteAbelianGroup.cyclic(3), "M")
        ledger.act("M", idempotent_form(3), "M1")
        with pytest.raises(UsageError):
            ledger.act("M", idempotent_form(3), "M1")

    def test_unknown_label(self):
        ledger = Ledger(FiniteAbelianGroup.cyclic(3), "M")
        with pytest.raises(UsageError):
            ledger.find("missing")
