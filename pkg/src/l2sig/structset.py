"""Bookkeeping ledger for families of labels separated by exact offsets.

Labels carry an exact rational offset relative to a base label; acting
by a hermitian form shifts the offset by the form's alpha invariant
(with the convention offset(new) = offset(base) - alpha(V), so the
signed difference base - new recovers alpha).  Only offsets are
modeled; the labels themselves are nominal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactnum import UsageError
from .forms import HermitianGroupForm, direct_sum, require_hermitian
from .groupring import FiniteAbelianGroup, averaging_idempotent
from .invariants import alpha


@dataclass(frozen=True)
class ManifoldLabel:
    name: str
    group: FiniteAbelianGroup
    tau_offset: Fraction = Fraction(0)


@dataclass(frozen=True)
class LedgerEntry:
    label: ManifoldLabel
    acting_form: HermitianGroupForm | None = None


def act(base: ManifoldLabel, form: HermitianGroupForm, name: str) -> ManifoldLabel:
    """New label obtained by acting on ``base``; offset drops by alpha(form)."""
    if form.group != base.group:
        raise UsageError("acting form must live over the label's group")
    require_hermitian(form)
    return ManifoldLabel(name, base.group, base.tau_offset - alpha(form))


def distinguish(a: ManifoldLabel, b: ManifoldLabel) -> bool:
    """True when the offset invariants separate the two labels, exactly."""
    if a.group != b.group:
        raise UsageError("labels live over different groups")
    return a.tau_offset != b.tau_offset


def generate_family(n: int, count: int) -> list[tuple[HermitianGroupForm, Fraction]]:
    """k-fold sums of the rank-one idempotent form over the cyclic group of
    order n, k = 1..count, with their alpha values k*(1/n - 1): pairwise
    distinct and nonzero for n >= 2."""
    if n < 2:
        raise UsageError("the family needs a nontrivial cyclic group (n >= 2)")
    if count < 1:
        raise UsageError("count must be positive")
    group = FiniteAbelianGroup.cyclic(n)
    seed = HermitianGroupForm(group, [[averaging_idempotent(group)]])
    out = []
    current = seed
    for k in range(1, count + 1):
        out.append((current, alpha(current)))
        if k < count:
            current = direct_sum(current, seed)
    return out


@dataclass
class Ledger:
    """Append-only record of labels over one group."""

    group: FiniteAbelianGroup
    base_name: str = "base"
    entries: list[LedgerEntry] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.entries:
            base = ManifoldLabel(self.base_name, self.group)
            self.entries.append(LedgerEntry(base))

    @property
    def base(self) -> ManifoldLabel:
        return self.entries[0].label

    def find(self, name: str) -> ManifoldLabel:
        for entry in self.entries:
            if entry.label.name == name:
                return entry.label
        raise UsageError(f"no label named {name!r} in the ledger")

    def act(self, base_name: str, form: HermitianGroupForm, new_name: str) -> ManifoldLabel:
        if any(entry.label.name == new_name for entry in self.entries):
            raise UsageError(f"label {new_name!r} already exists")
        label = act(self.find(base_name), form, new_name)
        self.entries.append(LedgerEntry(label, form))
        return label

    def distinguish(self, a: str, b: str) -> bool:
        return distinguish(self.find(a), self.find(b))
