"""Finite abelian groups, their characters, and the rational group algebra.

Groups are direct products of cyclic groups given by a tuple of factor
orders.  Characters are indexed by weight tuples in the same shape and
evaluate to exact roots of unity; values are produced at the conductor
equal to the character's order (the smallest field containing them),
and compare equal across conductors.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .exactnum import CycNumber, Scalar, UsageError, _reduce_mod_cyclotomic


@dataclass(frozen=True)
class GroupElement:
    residues: tuple[int, ...]

    def __repr__(self) -> str:
        return f"GroupElement{self.residues}"


@dataclass(frozen=True)
class Character:
    weights: tuple[int, ...]

    def __repr__(self) -> str:
        return f"Character{self.weights}"


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Direct product of cyclic groups of the given orders (each >= 2).

    The empty product is the trivial group.
    """

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(d < 2 for d in self.factors):
            raise UsageError(f"cyclic factors must be >= 2, got {self.factors}")

    @classmethod
    def trivial(cls) -> "FiniteAbelianGroup":
        return cls(())

    @classmethod
    def cyclic(cls, n: int) -> "FiniteAbelianGroup":
        if n == 1:
            return cls.trivial()
        return cls((n,))

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.factors) if self.factors else 1

    @property
    def identity(self) -> GroupElement:
        return GroupElement((0,) * len(self.factors))

    def element(self, residues: Iterable[int]) -> GroupElement:
        residues = tuple(residues)
        if len(residues) != len(self.factors):
            raise UsageError(
                f"element needs {len(self.factors)} residues, got {len(residues)}")
        return GroupElement(tuple(r % d for r, d in zip(residues, self.factors)))

    def contains(self, g: GroupElement) -> bool:
        return len(g.residues) == len(self.factors) and all(
            0 <= r < d for r, d in zip(g.residues, self.factors))

    def elements(self) -> Iterator[GroupElement]:
        for combo in itertools.product(*(range(d) for d in self.factors)):
            yield GroupElement(combo)

    def mul(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return GroupElement(tuple(
            (x + y) % d for x, y, d in zip(a.residues, b.residues, self.factors)))

    def inv(self, a: GroupElement) -> GroupElement:
        return GroupElement(tuple((-x) % d for x, d in zip(a.residues, self.factors)))

    def element_order(self, g: GroupElement) -> int:
        return math.lcm(*(d // math.gcd(d, r) for d, r in zip(self.factors, g.residues))) \
            if self.factors else 1

    def character_order(self, chi: Character) -> int:
        return math.lcm(*(d // math.gcd(d, w) for d, w in zip(self.factors, chi.weights))) \
            if self.factors else 1


def characters(group: FiniteAbelianGroup) -> list[Character]:
    """All |G| characters, in lexicographic weight order."""
    return [Character(combo)
            for combo in itertools.product(*(range(d) for d in group.factors))]


def trivial_character(group: FiniteAbelianGroup) -> Character:
    return Character((0,) * len(group.factors))


def char_value(group: FiniteAbelianGroup, chi: Character, g: GroupElement) -> CycNumber:
    """chi(g) as an exact root of unity, at the conductor of chi's order."""
    if len(chi.weights) != len(group.factors) or not group.contains(g):
        raise UsageError("character or element does not belong to the group")
    e = group.exponent
    q = group.character_order(chi)
    t = sum((e // d) * w * r for d, w, r in zip(group.factors, chi.weights, g.residues)) % e
    return CycNumber.zeta(q, t * q // e)


class GroupRingElement:
    """Element of the rational group algebra; immutable sparse mapping."""

    __slots__ = ("group", "terms")

    group: FiniteAbelianGroup
    terms: Mapping[GroupElement, Fraction]

    def __init__(self, group: FiniteAbelianGroup, terms: Mapping[GroupElement, Fraction]):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "terms", dict(terms))

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("GroupRingElement is immutable")

    @classmethod
    def from_terms(cls, group: FiniteAbelianGroup,
                   terms: Iterable[tuple[GroupElement, Scalar]]) -> "GroupRingElement":
        acc: dict[GroupElement, Fraction] = {}
        for g, c in terms:
            if not group.contains(g):
                raise UsageError(f"element {g} not in group {group.factors}")
            c = Fraction(c)
            if c:
                prev = acc.get(g)
                total = c if prev is None else prev + c
                if total:
                    acc[g] = total
                else:
                    del acc[g]
        return cls(group, acc)

    @classmethod
    def zero(cls, group: FiniteAbelianGroup) -> "GroupRingElement":
        return cls(group, {})

    @classmethod
    def one(cls, group: FiniteAbelianGroup) -> "GroupRingElement":
        return cls(group, {group.identity: Fraction(1)})

    @classmethod
    def from_element(cls, group: FiniteAbelianGroup, g: GroupElement,
                     coeff: Scalar = 1) -> "GroupRingElement":
        return cls.from_terms(group, [(g, coeff)])

    @classmethod
    def constant(cls, group: FiniteAbelianGroup, value: Scalar) -> "GroupRingElement":
        return cls.from_terms(group, [(group.identity, value)])

    def coefficient(self, g: GroupElement) -> Fraction:
        return self.terms.get(g, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[GroupElement, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: item[0].residues)

    def _check_group(self, other: "GroupRingElement") -> None:
        if other.group != self.group:
            raise UsageError("group mismatch between ring elements")

    def __add__(self, other) -> "GroupRingElement":
        if isinstance(other, (int, Fraction)):
            other = GroupRingElement.constant(self.group, other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check_group(other)
        acc = dict(self.terms)
        for g, c in other.terms.items():
            total = acc.get(g, Fraction(0)) + c
            if total:
                acc[g] = total
            else:
                acc.pop(g, None)
        return GroupRingElement(self.group, acc)

    __radd__ = __add__

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.group, {g: -c for g, c in self.terms.items()})

    def __sub__(self, other) -> "GroupRingElement":
        if isinstance(other, (int, Fraction)):
            other = GroupRingElement.constant(self.group, other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other) -> "GroupRingElement":
        return (-self).__add__(other)

    def __mul__(self, other) -> "GroupRingElement":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return GroupRingElement.zero(self.group)
            return GroupRingElement(self.group, {g: x * c for g, x in self.terms.items()})
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check_group(other)
        acc: dict[GroupElement, Fraction] = {}
        for g, x in self.terms.items():
            for h, y in other.terms.items():
                k = self.group.mul(g, h)
                total = acc.get(k, Fraction(0)) + x * y
                if total:
                    acc[k] = total
                else:
                    acc.pop(k, None)
        return GroupRingElement(self.group, acc)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.group == other.group and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        parts = [f"({c})*{g.residues}" for g, c in self.sorted_terms()]
        return "GroupRingElement(" + (" + ".join(parts) if parts else "0") + ")"

    def involution(self) -> "GroupRingElement":
        """The standard involution g -> g^-1, extended linearly."""
        return GroupRingElement(
            self.group, {self.group.inv(g): c for g, c in self.terms.items()})

    def augmentation(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))


def ring_involution(x: GroupRingElement) -> GroupRingElement:
    return x.involution()


def averaging_idempotent(group: FiniteAbelianGroup) -> GroupRingElement:
    """(1/|G|) * sum of all group elements; fixed by the involution."""
    w = Fraction(1, group.order)
    return GroupRingElement(group, {g: w for g in group.elements()})


def apply_character(group: FiniteAbelianGroup, chi: Character,
                    x: GroupRingElement) -> CycNumber:
    """Ring homomorphism QG -> Q(zeta) induced by chi.

    Intertwines the group-ring involution with complex conjugation.
    """
    if x.group != group:
        raise UsageError("ring element does not belong to the group")
    if len(chi.weights) != len(group.factors):
        raise UsageError("character does not belong to the group")
    e = group.exponent
    q = group.character_order(chi)
    den = 1
    for c in x.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    vec = [0] * q
    for g, c in x.terms.items():
        t = sum((e // d) * w * r
                for d, w, r in zip(group.factors, chi.weights, g.residues)) % e
        vec[t * q // e] += c.numerator * (den // c.denominator)
    return CycNumber._make(q, den, _reduce_mod_cyclotomic(vec, q))
