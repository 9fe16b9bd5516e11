"""Signature invariants of hermitian forms over finite abelian group algebras.

The complex representation theory of a finite abelian group splits any
hermitian form over the group algebra into one scalar hermitian matrix
per character.  Every invariant here is read off that character table:

* ``sig_trivial``  -- signature at the trivial character;
* ``sig_full``     -- sum of all per-character signatures;
* ``sig_l2``       -- sig_full / |G| (the von Neumann trace weights each
                      character summand by 1/|G|);
* ``alpha``        -- sig_l2 - sig_trivial, additive under direct sum and
                      invariant under induction to a larger group;
* ``sig_g``        -- the virtual-character value sum_chi chi(g) * sig_chi.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import ComplexInterval, CycNumber, DomainError, Scalar, UsageError
from .forms import (
    HermitianGroupForm,
    SignatureTriple,
    ScalarHermitianMatrix,
    canonical_embedding,
    direct_sum,
    induce,
    isotypic_matrix,
    rational_form,
    require_hermitian,
    signature_scalar,
)
from .groupring import (
    Character,
    FiniteAbelianGroup,
    GroupElement,
    char_value,
    characters,
    trivial_character,
)


@dataclass(frozen=True)
class CharacterSignatureTable:
    group: FiniteAbelianGroup
    entries: tuple[tuple[Character, SignatureTriple], ...]

    def triple(self, chi: Character) -> SignatureTriple:
        for c, t in self.entries:
            if c == chi:
                return t
        raise UsageError(f"character {chi} not in table")


@dataclass(frozen=True)
class CharSumIdentity:
    """Both sides of the character-sum identity
    sum_{g != e} sig_g = |G| * sig_trivial - sig_full."""

    lhs_value: CycNumber
    lhs_integer: int
    rhs: int
    equal: bool


@dataclass(frozen=True)
class InvariantReport:
    group: FiniteAbelianGroup
    dim: int
    table: CharacterSignatureTable
    sig_trivial: int
    sig_full: int
    sig_l2: Fraction
    alpha: Fraction
    scale: Fraction
    char_sum: CharSumIdentity
    tau_z2: int | None

    @property
    def alpha_scaled(self) -> Fraction:
        return self.alpha * self.scale


def signature_table(form: HermitianGroupForm) -> CharacterSignatureTable:
    require_hermitian(form)
    entries = tuple(
        (chi, signature_scalar(isotypic_matrix(form, chi)))
        for chi in characters(form.group))
    return CharacterSignatureTable(form.group, entries)


def sig_trivial(form: HermitianGroupForm,
                table: CharacterSignatureTable | None = None) -> int:
    table = table or signature_table(form)
    return table.triple(trivial_character(form.group)).signature


def sig_full(form: HermitianGroupForm,
             table: CharacterSignatureTable | None = None) -> int:
    table = table or signature_table(form)
    return sum(t.signature for _, t in table.entries)


def sig_l2(form: HermitianGroupForm,
           table: CharacterSignatureTable | None = None) -> Fraction:
    return Fraction(sig_full(form, table), form.group.order)


def alpha(form: HermitianGroupForm,
          table: CharacterSignatureTable | None = None) -> Fraction:
    table = table or signature_table(form)
    return sig_l2(form, table) - sig_trivial(form, table)


def sig_g(form: HermitianGroupForm, g: GroupElement,
          table: CharacterSignatureTable | None = None,
          precision_bits: int = 64) -> tuple[CycNumber, ComplexInterval]:
    """Virtual-character value at g: sum over chi of chi(g) * sig_chi.

    The value is a real cyclotomic number (signatures at conjugate
    characters coincide); at the identity it equals sig_full.
    """
    if not form.group.contains(g):
        raise UsageError(f"element {g} not in group {form.group.factors}")
    table = table or signature_table(form)
    e = form.group.exponent
    total = CycNumber.from_rational(0, e)
    for chi, triple in table.entries:
        s = triple.signature
        if s:
            total = total + char_value(form.group, chi, g).lift(e) * s
    return total, total.embed(precision_bits)


def tau_z2(form: HermitianGroupForm,
           table: CharacterSignatureTable | None = None) -> int:
    """sig_full - 2 * sig_trivial for forms over the order-two group."""
    if form.group.factors != (2,):
        raise UsageError("tau_z2 requires a form over the cyclic group of order 2")
    table = table or signature_table(form)
    return sig_full(form, table) - 2 * sig_trivial(form, table)


def char_sum_identity(form: HermitianGroupForm,
                      table: CharacterSignatureTable | None = None) -> CharSumIdentity:
    """Evaluate sum over g != e of sig_g exactly and certify it equals
    |G| * sig_trivial - sig_full (character orthogonality)."""
    table = table or signature_table(form)
    group = form.group
    e = group.exponent
    total = CycNumber.from_rational(0, e)
    for g in group.elements():
        if g == group.identity:
            continue
        value, _ = sig_g(form, g, table)
        total = total + value.lift(e)
    if not total.is_rational():
        raise DomainError("character sum failed to certify as a rational number")
    as_fraction = total.as_fraction()
    if as_fraction.denominator != 1:
        raise DomainError("character sum failed to certify as an integer")
    lhs = as_fraction.numerator
    rhs = group.order * sig_trivial(form, table) - sig_full(form, table)
    return CharSumIdentity(total, lhs, rhs, lhs == rhs)


def invariant_report(form: HermitianGroupForm,
                     scale: Scalar = 1) -> InvariantReport:
    table = signature_table(form)
    report_tau = tau_z2(form, table) if form.group.factors == (2,) else None
    return InvariantReport(
        group=form.group,
        dim=form.dim,
        table=table,
        sig_trivial=sig_trivial(form, table),
        sig_full=sig_full(form, table),
        sig_l2=sig_l2(form, table),
        alpha=alpha(form, table),
        scale=Fraction(scale),
        char_sum=char_sum_identity(form, table),
        tau_z2=report_tau,
    )


@dataclass(frozen=True)
class AtiyahCheck:
    base_signature: int
    sig_l2: Fraction
    alpha: Fraction
    passed: bool


def atiyah_check(base: Sequence[Sequence[Scalar]],
                 group: FiniteAbelianGroup) -> AtiyahCheck:
    """Induce a rational symmetric form from the trivial group into ``group``
    and verify alpha = 0 and sig_l2 = base signature."""
    rows = [[Fraction(v) for v in row] for row in base]
    for i in range(len(rows)):
        for j in range(len(rows)):
            if rows[i][j] != rows[j][i]:
                raise DomainError(f"base matrix is not symmetric at {(i, j)}")
    base_form = rational_form(rows)
    base_sig = signature_scalar(
        ScalarHermitianMatrix.from_rational(rows)).signature
    induced = induce(base_form, group, canonical_embedding(
        FiniteAbelianGroup.trivial(), group))
    table = signature_table(induced)
    a = alpha(induced, table)
    s2 = sig_l2(induced, table)
    return AtiyahCheck(base_sig, s2, a, a == 0 and s2 == base_sig)


def additivity_check(left: HermitianGroupForm,
                     right: HermitianGroupForm) -> bool:
    """alpha(F (+) G) = alpha(F) + alpha(G), exactly."""
    return alpha(direct_sum(left, right)) == alpha(left) + alpha(right)
