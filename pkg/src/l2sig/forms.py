"""Hermitian forms over group algebras and cyclotomic fields.

Signatures are computed by exact hermitian congruence diagonalization
(Sylvester's law makes the inertia counts well defined); the radical of
a singular form ends up in the ``n_zero`` count and never contributes
to signatures.  Forms on projective modules are encoded as singular
forms on free modules, e.g. the rank-one form on the image of the
averaging idempotent is stored as the 1x1 matrix over the group ring
whose single entry is that idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import CycNumber, DomainError, Scalar, Sign, UsageError
from .groupring import (
    Character,
    FiniteAbelianGroup,
    GroupElement,
    GroupRingElement,
    apply_character,
)


@dataclass(frozen=True)
class SignatureTriple:
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def dim(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus

    def __add__(self, other: "SignatureTriple") -> "SignatureTriple":
        return SignatureTriple(self.n_plus + other.n_plus,
                               self.n_minus + other.n_minus,
                               self.n_zero + other.n_zero)


class HermitianGroupForm:
    """Square matrix over the group algebra, self-adjoint under the
    involution-transpose.  Singular matrices are allowed."""

    __slots__ = ("group", "matrix")

    group: FiniteAbelianGroup
    matrix: tuple[tuple[GroupRingElement, ...], ...]

    def __init__(self, group: FiniteAbelianGroup,
                 matrix: Sequence[Sequence[GroupRingElement]]):
        rows = tuple(tuple(row) for row in matrix)
        for row in rows:
            if len(row) != len(rows):
                raise UsageError("form matrix must be square")
            for entry in row:
                if entry.group != group:
                    raise UsageError("matrix entry over a different group")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "matrix", rows)

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("HermitianGroupForm is immutable")

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HermitianGroupForm):
            return NotImplemented
        return self.group == other.group and self.matrix == other.matrix

    __hash__ = None

    def __repr__(self) -> str:
        return f"HermitianGroupForm(group={self.group.factors}, dim={self.dim})"


def rational_form(entries: Sequence[Sequence[Scalar]],
                  group: FiniteAbelianGroup | None = None) -> HermitianGroupForm:
    """Constant-coefficient form (rational symmetric matrix) over ``group``."""
    group = group or FiniteAbelianGroup.trivial()
    rows = [[GroupRingElement.constant(group, Fraction(v)) for v in row]
            for row in entries]
    return HermitianGroupForm(group, rows)


def hermitian_violation(form: HermitianGroupForm) -> tuple[int, int] | None:
    """First (i, j) with A_ij != involution(A_ji), or None when hermitian."""
    m = form.matrix
    for i in range(form.dim):
        for j in range(i, form.dim):
            if m[i][j] != m[j][i].involution():
                return (i, j)
    return None


def require_hermitian(form: HermitianGroupForm) -> None:
    bad = hermitian_violation(form)
    if bad is not None:
        raise DomainError(f"form is not hermitian at entry {bad}")


class ScalarHermitianMatrix:
    """Matrix over a cyclotomic field, hermitian under conjugation-transpose."""

    __slots__ = ("conductor", "entries")

    conductor: int
    entries: tuple[tuple[CycNumber, ...], ...]

    def __init__(self, conductor: int, entries: Sequence[Sequence[CycNumber]]):
        rows = tuple(tuple(e.lift(conductor) for e in row) for row in entries)
        for row in rows:
            if len(row) != len(rows):
                raise UsageError("matrix must be square")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("ScalarHermitianMatrix is immutable")

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def from_rational(cls, entries: Sequence[Sequence[Scalar]]) -> "ScalarHermitianMatrix":
        return cls(1, [[CycNumber.from_rational(v) for v in row] for row in entries])

    def hermitian_violation(self) -> tuple[int, int] | None:
        for i in range(self.dim):
            for j in range(i, self.dim):
                if self.entries[i][j] != self.entries[j][i].conjugate():
                    return (i, j)
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScalarHermitianMatrix):
            return NotImplemented
        return self.conductor == other.conductor and self.entries == other.entries

    __hash__ = None


def isotypic_matrix(form: HermitianGroupForm, chi: Character) -> ScalarHermitianMatrix:
    """Entrywise image of the form under the character homomorphism."""
    require_hermitian(form)
    values = [[apply_character(form.group, chi, entry) for entry in row]
              for row in form.matrix]
    conductor = max((v.conductor for row in values for v in row), default=1)
    return ScalarHermitianMatrix(conductor, values)


def signature_scalar(matrix: ScalarHermitianMatrix) -> SignatureTriple:
    """Inertia (n_plus, n_minus, n_zero) by hermitian congruence diagonalization.

    Pivots are chosen deterministically: the first nonzero diagonal
    entry, with the classical row+column repair move when the remaining
    diagonal vanishes identically.
    """
    bad = matrix.hermitian_violation()
    if bad is not None:
        raise DomainError(f"matrix is not hermitian at entry {bad}")
    dim = matrix.dim
    zero = CycNumber.from_rational(0, matrix.conductor)
    work = [list(row) for row in matrix.entries]
    n_plus = n_minus = n_zero = 0
    p = 0
    while p < dim:
        pivot = next((i for i in range(p, dim) if not work[i][i].is_zero()), None)
        if pivot is None:
            target = next(((i, j) for i in range(p, dim)
                           for j in range(i + 1, dim)
                           if not work[i][j].is_zero()), None)
            if target is None:
                n_zero += dim - p
                break
            i, j = target
            # Repair move: add c * (row/col j) into row/col i so that the
            # (i, i) entry becomes nonzero real.  c = 1 gives a + conj(a);
            # when that cancels, c = conj(a) gives 2|a|^2 != 0.
            c = None
            if (work[i][j] + work[i][j].conjugate()).is_zero():
                c = work[i][j].conjugate()
            for k in range(dim):
                work[i][k] = work[i][k] + (work[j][k] if c is None else c * work[j][k])
            cbar = None if c is None else c.conjugate()
            for k in range(dim):
                work[k][i] = work[k][i] + (work[k][j] if cbar is None else cbar * work[k][j])
            pivot = i
        if pivot != p:
            work[p], work[pivot] = work[pivot], work[p]
            for row in work:
                row[p], row[pivot] = row[pivot], row[p]
        d = work[p][p]
        if d.sign() is Sign.POSITIVE:
            n_plus += 1
        else:
            n_minus += 1
        inv_d = d.inverse()
        # Schur complement: M_ij -= (M_ip / d) * M_pj.  With M_pj equal to
        # conj(M_jp) and d real this is exactly the hermitian congruence by
        # the unit-triangular matrix clearing row/column p.
        for i in range(p + 1, dim):
            if work[i][p].is_zero():
                continue
            fi = work[i][p] * inv_d
            row_p = work[p]
            row_i = work[i]
            for j in range(p + 1, dim):
                if not row_p[j].is_zero():
                    row_i[j] = row_i[j] - fi * row_p[j]
        for i in range(p + 1, dim):
            work[i][p] = zero
            work[p][i] = zero
        p += 1
    return SignatureTriple(n_plus, n_minus, n_zero)


def direct_sum(left: HermitianGroupForm, right: HermitianGroupForm) -> HermitianGroupForm:
    if left.group != right.group:
        raise UsageError("direct sum requires forms over the same group")
    zero = GroupRingElement.zero(left.group)
    n, m = left.dim, right.dim
    rows = []
    for i in range(n):
        rows.append(list(left.matrix[i]) + [zero] * m)
    for i in range(m):
        rows.append([zero] * n + list(right.matrix[i]))
    return HermitianGroupForm(left.group, rows)


def check_embedding(source: FiniteAbelianGroup, target: FiniteAbelianGroup,
                    images: Sequence[GroupElement]) -> dict[GroupElement, GroupElement]:
    """Validate that generator images define an injective homomorphism.

    Returns the full element-to-element map.
    """
    if len(images) != len(source.factors):
        raise UsageError("one generator image per cyclic factor is required")
    for d, img in zip(source.factors, images):
        if not target.contains(img):
            raise DomainError(f"image {img} is not in the target group")
        order = target.element_order(img)
        if d % order != 0:
            raise DomainError(
                f"generator of order {d} maps to element of order {order}")
    mapping: dict[GroupElement, GroupElement] = {}
    seen: dict[GroupElement, GroupElement] = {}
    for g in source.elements():
        acc = target.identity
        for r, img in zip(g.residues, images):
            for _ in range(r):
                acc = target.mul(acc, img)
        if acc in seen:
            raise DomainError("embedding is not injective")
        seen[acc] = g
        mapping[g] = acc
    return mapping


def induce(form: HermitianGroupForm, target: FiniteAbelianGroup,
           images: Sequence[GroupElement]) -> HermitianGroupForm:
    """Induced form along the embedding sending the i-th generator of the
    source group to ``images[i]``.

    Extension of scalars along the algebra inclusion: entries are pushed
    forward elementwise, and the module rank is preserved (the induced
    module of a free module is free of the same rank).
    """
    require_hermitian(form)
    mapping = check_embedding(form.group, target, images)
    rows = [[GroupRingElement.from_terms(
        target, [(mapping[g], c) for g, c in entry.terms.items()])
        for entry in row] for row in form.matrix]
    return HermitianGroupForm(target, rows)


def canonical_embedding(source: FiniteAbelianGroup,
                        target: FiniteAbelianGroup) -> list[GroupElement]:
    """Default generator images: factorwise, the i-th source factor d_i maps
    onto the (target_factor/d_i)-th power of the i-th target generator.

    Requires factor counts to agree (after the trivial group, which embeds
    anywhere) and componentwise divisibility.
    """
    if not source.factors:
        return []
    if len(source.factors) > len(target.factors):
        raise DomainError("no canonical embedding: too many cyclic factors")
    images = []
    for i, d in enumerate(source.factors):
        D = target.factors[i]
        if D % d != 0:
            raise DomainError(
                f"no canonical embedding: factor {d} does not divide {D}")
        residues = [0] * len(target.factors)
        residues[i] = D // d
        images.append(target.element(residues))
    return images
