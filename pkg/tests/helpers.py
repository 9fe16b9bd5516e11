"""Shared generators and oracles for the test suite.

All randomness is driven by caller-provided ``random.Random`` instances
so every suite is deterministic.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from l2sig.exactnum import CycNumber
from l2sig.forms import HermitianGroupForm, ScalarHermitianMatrix
from l2sig.groupring import FiniteAbelianGroup, GroupRingElement
from l2sig.zapprox import LaurentHermitianForm, LaurentPoly


def random_fraction(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_ring_element(group: FiniteAbelianGroup, rng: random.Random,
                        max_terms: int = 2, coeff_bound: int = 2) -> GroupRingElement:
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        g = group.element([rng.randrange(d) for d in group.factors])
        terms.append((g, Fraction(rng.randint(-coeff_bound, coeff_bound))))
    return GroupRingElement.from_terms(group, terms)


def random_hermitian_form(group: FiniteAbelianGroup, dim: int,
                          rng: random.Random, **kwargs) -> HermitianGroupForm:
    rows = [[GroupRingElement.zero(group) for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        x = random_ring_element(group, rng, **kwargs)
        rows[i][i] = x + x.involution()
        for j in range(i + 1, dim):
            y = random_ring_element(group, rng, **kwargs)
            rows[i][j] = y
            rows[j][i] = y.involution()
    return HermitianGroupForm(group, rows)


def random_cyc(conductor: int, rng: random.Random,
               coeff_bound: int = 3) -> CycNumber:
    from l2sig.exactnum import euler_phi

    coeffs = [Fraction(rng.randint(-coeff_bound, coeff_bound),
                       rng.randint(1, 3))
              for _ in range(euler_phi(conductor))]
    return CycNumber.from_coeffs(conductor, coeffs)


def random_scalar_hermitian(conductor: int, dim: int,
                            rng: random.Random) -> ScalarHermitianMatrix:
    entries = [[CycNumber.from_rational(0, conductor) for _ in range(dim)]
               for _ in range(dim)]
    for i in range(dim):
        x = random_cyc(conductor, rng)
        entries[i][i] = x + x.conjugate()
        for j in range(i + 1, dim):
            y = random_cyc(conductor, rng)
            entries[i][j] = y
            entries[j][i] = y.conjugate()
    return ScalarHermitianMatrix(conductor, entries)


def random_rational_symmetric(dim: int, rng: random.Random,
                              bound: int = 9) -> list[list[Fraction]]:
    rows = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(dim):
        rows[i][i] = random_fraction(rng, bound)
        for j in range(i + 1, dim):
            v = random_fraction(rng, bound)
            rows[i][j] = v
            rows[j][i] = v
    return rows


def random_congruence(conductor: int, dim: int,
                      rng: random.Random) -> list[list[CycNumber]]:
    """Invertible matrix over the cyclotomic field, built from elementary
    row operations and nonzero rational scalings (determinant nonzero)."""
    one = CycNumber.from_rational(1, conductor)
    zero = CycNumber.from_rational(0, conductor)
    mat = [[one if i == j else zero for j in range(dim)] for i in range(dim)]
    for _ in range(2 * dim):
        i, j = rng.randrange(dim), rng.randrange(dim)
        if i == j:
            scale = Fraction(rng.choice([1, -1, 2, -2, 1]), rng.choice([1, 2]))
            mat[i] = [entry * scale for entry in mat[i]]
        else:
            c = random_cyc(conductor, rng, coeff_bound=1)
            mat[i] = [a + c * b for a, b in zip(mat[i], mat[j])]
    return mat


def congruent_matrix(matrix: ScalarHermitianMatrix,
                     c: list[list[CycNumber]]) -> ScalarHermitianMatrix:
    """C^dagger M C, the hermitian congruence transform."""
    dim = matrix.dim
    m = matrix.entries
    mc = [[sum((m[i][k] * c[k][j] for k in range(dim)),
               CycNumber.from_rational(0, matrix.conductor))
           for j in range(dim)] for i in range(dim)]
    out = [[sum((c[k][i].conjugate() * mc[k][j] for k in range(dim)),
                CycNumber.from_rational(0, matrix.conductor))
            for j in range(dim)] for i in range(dim)]
    return ScalarHermitianMatrix(matrix.conductor, out)


def random_laurent_form(dim: int, rng: random.Random,
                        max_exp: int = 3, coeff_bound: int = 2) -> LaurentHermitianForm:
    def random_poly() -> LaurentPoly:
        terms = []
        for _ in range(rng.randint(0, 2)):
            m = rng.randint(-max_exp, max_exp)
            terms.append((m, Fraction(rng.randint(-coeff_bound, coeff_bound))))
        return LaurentPoly.from_terms(terms)

    rows = [[LaurentPoly.zero() for _ in range(dim)] for _ in range(dim)]
    for i in range(dim):
        x = random_poly()
        rows[i][i] = x + x.bar()
        for j in range(i + 1, dim):
            y = random_poly()
            rows[i][j] = y
            rows[j][i] = y.bar()
    return LaurentHermitianForm(rows)


def float_inertia(matrix: list[list[Fraction]], margin: float = 1e-6):
    """Eigenvalue-sign oracle; None when any eigenvalue is inside the margin."""
    arr = np.array([[float(v) for v in row] for row in matrix], dtype=float)
    eigs = np.linalg.eigvalsh(arr)
    if np.any(np.abs(eigs) <= margin):
        return None
    return (int(np.sum(eigs > margin)), int(np.sum(eigs < -margin)), 0)


def embedded_complex_matrix(matrix: ScalarHermitianMatrix,
                            bits: int = 64) -> np.ndarray:
    out = np.zeros((matrix.dim, matrix.dim), dtype=complex)
    for i in range(matrix.dim):
        for j in range(matrix.dim):
            enc = matrix.entries[i][j].embed(bits)
            out[i, j] = complex(float(enc.re.midpoint), float(enc.im.midpoint))
    return out


def hermitian_float_inertia(matrix: ScalarHermitianMatrix,
                            margin: float = 1e-6):
    arr = embedded_complex_matrix(matrix)
    eigs = np.linalg.eigvalsh(arr)
    if np.any(np.abs(eigs) <= margin):
        return None
    return (int(np.sum(eigs > margin)), int(np.sum(eigs < -margin)), 0)


def abelian_groups_up_to(max_order: int) -> list[FiniteAbelianGroup]:
    """All factor tuples (each >= 2, nondecreasing) with product <= max_order,
    including the trivial group."""
    out = [FiniteAbelianGroup.trivial()]

    def extend(prefix: tuple[int, ...], smallest: int, product: int) -> None:
        d = smallest
        while product * d <= max_order:
            out.append(FiniteAbelianGroup(prefix + (d,)))
            extend(prefix + (d,), d, product * d)
            d += 1

    extend((), 2, 1)
    return out
