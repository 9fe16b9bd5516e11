"""L2-signature over the infinite cyclic group: circle quadrature and
finite-quotient approximation.

A hermitian Laurent form evaluates to a hermitian complex matrix at
every point of the unit circle; its pointwise signature is piecewise
constant, jumping only at circle roots of the determinant.  The module
computes that partition exactly:

* determinant roots at roots of unity are recognized symbolically
  (cyclotomic factors of the determinant numerator), giving exact
  rational arc boundaries;
* remaining circle roots are isolated through the substitution
  x = (t + 1/t)/2 and Sturm bisection, giving refinable enclosures;
* each open arc is sampled at an exact rational point of the circle
  (a Pythagorean parametrization), so per-arc signatures are exact.

The circle average (the infinite-group trace) and every finite-quotient
average over k-th roots of unity are exact rational bookkeeping over
the same partition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exactnum import (
    ComplexInterval,
    CycNumber,
    DomainError,
    Scalar,
    UsageError,
    _polydiv_exact,
    _reduce_mod_cyclotomic,
    cyclotomic_polynomial,
    euler_phi,
    interval_from_iv,
    iv_precision,
)
from .forms import ScalarHermitianMatrix, signature_scalar
from .polyroots import (
    Poly,
    isolate_roots,
    normalize,
    refine_root,
    simplest_between,
)

_HALF = Fraction(1, 2)
_POLE = object()


class LaurentPoly:
    """Laurent polynomial over Q; immutable sparse mapping exponent -> coefficient."""

    __slots__ = ("coeffs",)

    coeffs: dict[int, Fraction]

    def __init__(self, coeffs: dict[int, Fraction]):
        object.__setattr__(self, "coeffs", dict(coeffs))

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, Scalar]]) -> "LaurentPoly":
        acc: dict[int, Fraction] = {}
        for m, c in terms:
            c = Fraction(c)
            if c:
                total = acc.get(m, Fraction(0)) + c
                if total:
                    acc[m] = total
                else:
                    del acc[m]
        return cls(acc)

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentPoly":
        return cls.from_terms([(0, value)])

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls({})

    @classmethod
    def t_power(cls, m: int, coeff: Scalar = 1) -> "LaurentPoly":
        return cls.from_terms([(m, coeff)])

    def is_zero(self) -> bool:
        return not self.coeffs

    def bar(self) -> "LaurentPoly":
        """The involution t -> 1/t."""
        return LaurentPoly({-m: c for m, c in self.coeffs.items()})

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self.coeffs)
        for m, c in other.coeffs.items():
            total = acc.get(m, Fraction(0)) + c
            if total:
                acc[m] = total
            else:
                acc.pop(m, None)
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self).__add__(other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return LaurentPoly.zero()
            return LaurentPoly({m: x * c for m, x in self.coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for m, x in self.coeffs.items():
            for n, y in other.coeffs.items():
                total = acc.get(m + n, Fraction(0)) + x * y
                if total:
                    acc[m + n] = total
                else:
                    acc.pop(m + n, None)
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self) -> str:
        parts = [f"({c})*t^{m}" for m, c in sorted(self.coeffs.items())]
        return "LaurentPoly(" + (" + ".join(parts) if parts else "0") + ")"

    @property
    def min_exp(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    @property
    def max_exp(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def sorted_terms(self) -> list[tuple[int, Fraction]]:
        return sorted(self.coeffs.items())

    def eval_root_of_unity(self, order: int, power: int = 1) -> CycNumber:
        """Exact value at zeta_order^power."""
        g = math.gcd(power % order, order)
        q = order // g
        p = (power % order) // g
        den = 1
        for c in self.coeffs.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        vec = [0] * q
        for m, c in self.coeffs.items():
            vec[(p * m) % q] += c.numerator * (den // c.denominator)
        return CycNumber._make(q, den, _reduce_mod_cyclotomic(vec, q))


class LaurentHermitianForm:
    """Square matrix of Laurent polynomials, self-adjoint under t -> 1/t."""

    __slots__ = ("matrix",)

    matrix: tuple[tuple[LaurentPoly, ...], ...]

    def __init__(self, matrix: Sequence[Sequence[LaurentPoly]]):
        rows = tuple(tuple(row) for row in matrix)
        for row in rows:
            if len(row) != len(rows):
                raise UsageError("form matrix must be square")
        object.__setattr__(self, "matrix", rows)

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("LaurentHermitianForm is immutable")

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentHermitianForm):
            return NotImplemented
        return self.matrix == other.matrix

    __hash__ = None

    def hermitian_violation(self) -> tuple[int, int] | None:
        for i in range(self.dim):
            for j in range(i, self.dim):
                if self.matrix[i][j] != self.matrix[j][i].bar():
                    return (i, j)
        return None


def require_hermitian_laurent(form: LaurentHermitianForm) -> None:
    bad = form.hermitian_violation()
    if bad is not None:
        raise DomainError(f"Laurent form is not hermitian at entry {bad}")


def laurent_direct_sum(left: LaurentHermitianForm,
                       right: LaurentHermitianForm) -> LaurentHermitianForm:
    zero = LaurentPoly.zero()
    n, m = left.dim, right.dim
    rows = [list(row) + [zero] * m for row in left.matrix]
    rows += [[zero] * n + list(row) for row in right.matrix]
    return LaurentHermitianForm(rows)


def det_laurent(form: LaurentHermitianForm) -> LaurentPoly:
    """Determinant by cofactor expansion (desk-scale dimensions)."""

    def rec(rows: list[list[LaurentPoly]]) -> LaurentPoly:
        n = len(rows)
        if n == 0:
            return LaurentPoly.constant(1)
        if n == 1:
            return rows[0][0]
        total = LaurentPoly.zero()
        for j in range(n):
            entry = rows[0][j]
            if entry.is_zero():
                continue
            minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
            term = entry * rec(minor)
            total = total + (term if j % 2 == 0 else -term)
        return total

    return rec([list(row) for row in form.matrix])


def _evaluate_at_root(form: LaurentHermitianForm, order: int,
                      power: int) -> ScalarHermitianMatrix:
    values = [[p.eval_root_of_unity(order, power) for p in row]
              for row in form.matrix]
    conductor = max((v.conductor for row in values for v in row), default=1)
    return ScalarHermitianMatrix(conductor, values)


def evaluate_at_circle_param(form: LaurentHermitianForm,
                             s: Fraction) -> ScalarHermitianMatrix:
    """Exact evaluation at the rational circle point
    z = ((1 - s^2) + 2si) / (1 + s^2); entries land in the Gaussian field."""
    s = Fraction(s)
    denom = 1 + s * s
    z = CycNumber.from_poly(4, [(1 - s * s) / denom, 2 * s / denom])
    zbar = z.conjugate()
    powers: dict[int, CycNumber] = {0: CycNumber.from_rational(1, 4)}

    def zpow(m: int) -> CycNumber:
        if m not in powers:
            base = z if m > 0 else zbar
            acc = zpow(abs(m) - 1) if m > 0 else zpow(m + 1)
            powers[m] = acc * base
        return powers[m]

    values = [[sum((zpow(m) * c for m, c in p.coeffs.items()),
                   CycNumber.from_rational(0, 4))
               for p in row] for row in form.matrix]
    return ScalarHermitianMatrix(4, values)


def finite_quotient_sig(form: LaurentHermitianForm, k: int) -> Fraction:
    """Average of pointwise signatures over the k-th roots of unity.

    Evaluation at each root is exact; degenerate points contribute the
    signature of the degenerate matrix (zeros dropped).
    """
    require_hermitian_laurent(form)
    if k < 1:
        raise UsageError("quotient order must be positive")
    total = 0
    for j in range(k // 2 + 1):
        inertia = signature_scalar(_evaluate_at_root(form, k, j)).signature
        # Conjugate roots j and k-j give matrices of equal inertia.
        weight = 1 if (j == 0 or 2 * j == k) else 2
        total += weight * inertia
    return Fraction(total, k)


# ---------------------------------------------------------------------------
# Exact partition of the circle by determinant roots


@lru_cache(maxsize=None)
def _chebyshev_t(m: int) -> tuple[int, ...]:
    if m == 0:
        return (1,)
    if m == 1:
        return (0, 1)
    prev, cur = _chebyshev_t(m - 2), _chebyshev_t(m - 1)
    out = [-c for c in prev] + [0, 0]
    for i, c in enumerate(cur):
        out[i + 1] += 2 * c
    return tuple(out)


def _cosine_polynomial(d: LaurentPoly) -> Poly:
    """P with P(cos theta) = d(e^{i theta}), for symmetric Laurent d."""
    out: list[Fraction] = []

    def add(poly: Iterable[int], scale: Fraction) -> None:
        for i, c in enumerate(poly):
            if i >= len(out):
                out.extend([Fraction(0)] * (i - len(out) + 1))
            out[i] += scale * c

    for m, c in d.coeffs.items():
        if m == 0:
            add((1,), c)
        elif m > 0:
            add(_chebyshev_t(m), 2 * c)
    return normalize(out)


class _TurnPoint:
    """A critical angle as a fraction of a full turn, in (0, 1].

    Either an exact rational turn (a root of unity on the circle) or an
    algebraic one, carried as a refinable isolating interval for
    x = cos(angle) together with the branch (upper/lower half-circle).
    """

    __slots__ = ("exact", "_xpoly", "_xlo", "_xhi", "_mirrored", "inertia")

    def __init__(self, exact: Fraction | None, xpoly: Poly | None = None,
                 xlo: Fraction | None = None, xhi: Fraction | None = None,
                 mirrored: bool = False):
        self.exact = exact
        self._xpoly = xpoly
        self._xlo = xlo
        self._xhi = xhi
        self._mirrored = mirrored
        self.inertia: int | None = None  # filled in for rational turns

    @property
    def is_rational(self) -> bool:
        return self.exact is not None

    def refine(self) -> None:
        if self.exact is None:
            self._xlo, self._xhi = refine_root(self._xpoly, self._xlo, self._xhi,
                                               rounds=4)

    def enclosure(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        if self.exact is not None:
            return (self.exact, self.exact)
        with iv_precision(bits) as ctx:
            lo_iv = ctx.mpf(self._xlo.numerator) / self._xlo.denominator
            hi_iv = ctx.mpf(self._xhi.numerator) / self._xhi.denominator
            xi = ctx.mpf([lo_iv.a, hi_iv.b])
            # arccos(x) = atan2(sqrt(1 - x^2), x), single-valued on (-1, 1)
            turn = ctx.atan2(ctx.sqrt((1 - xi) * (1 + xi)), xi) / (2 * ctx.pi)
            enc = interval_from_iv(turn)
        lo = max(Fraction(0), enc.lo)
        hi = min(_HALF, enc.hi)
        if self._mirrored:
            lo, hi = 1 - hi, 1 - lo
        return (lo, hi)

    def __repr__(self) -> str:
        if self.exact is not None:
            return f"TurnPoint({self.exact})"
        return f"TurnPoint(x in [{self._xlo}, {self._xhi}], mirrored={self._mirrored})"


@dataclass
class _Arc:
    start: _TurnPoint
    end: _TurnPoint
    wrap: bool
    inertia: int


class CirclePartition:
    """Arcs of constant pointwise signature for a hermitian Laurent form.

    Every critical angle of the determinant is isolated exactly and each
    open arc between consecutive critical angles is sampled at an exact
    rational circle point, so all stored inertias are certified.  The
    partition is built once and then answers any finite-quotient average
    or the circle integral by rational bookkeeping.
    """

    def __init__(self, form: LaurentHermitianForm):
        require_hermitian_laurent(form)
        self.form = form
        det = det_laurent(form)
        if det.is_zero():
            raise DomainError("determinant vanishes identically on the circle")
        self.points = self._critical_points(det)
        self._order_points()
        for pt in self.points:
            if pt.is_rational:
                turn = pt.exact % 1
                q = turn.denominator
                matrix = _evaluate_at_root(form, q, turn.numerator % q)
                pt.inertia = signature_scalar(matrix).signature
        self.arcs = self._build_arcs()

    # -- construction -------------------------------------------------------

    @staticmethod
    def _critical_points(det: LaurentPoly) -> list[_TurnPoint]:
        shift = -det.min_exp
        deg = det.max_exp + shift
        points: list[_TurnPoint] = []
        if deg == 0:
            return points
        den = 1
        for c in det.coeffs.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        remaining = [0] * (deg + 1)
        for m, c in det.coeffs.items():
            remaining[m + shift] = c.numerator * (den // c.denominator)
        # Roots of unity among the circle roots: cyclotomic factors of the
        # numerator polynomial.  phi(q) <= deg bounds the candidates.
        for q in range(1, 2 * deg * deg + 5):
            if euler_phi(q) > deg:
                continue
            phi_q = list(cyclotomic_polynomial(q))
            divided = False
            while len(remaining) >= len(phi_q):
                try:
                    remaining = _polydiv_exact(remaining, phi_q)
                    divided = True
                except ArithmeticError:
                    break
            if divided:
                for p in range(q):
                    if math.gcd(p, q) == 1:
                        points.append(_TurnPoint(Fraction(p, q) if p else Fraction(1)))
        while remaining and remaining[-1] == 0:
            remaining.pop()
        if len(remaining) > 1:
            # Palindromic remainder without roots of unity; its circle roots
            # come in conjugate pairs parametrized by x = cos(angle).
            r2 = len(remaining) - 1
            if r2 % 2 or remaining != remaining[::-1]:
                raise AssertionError("determinant numerator lost its symmetry")
            laurent_rem = LaurentPoly.from_terms(
                (m - r2 // 2, c) for m, c in enumerate(remaining))
            cos_poly = _cosine_polynomial(laurent_rem)
            for lo, hi in isolate_roots(cos_poly, Fraction(-1), Fraction(1)):
                points.append(_TurnPoint(None, cos_poly, lo, hi, mirrored=False))
                points.append(_TurnPoint(None, cos_poly, lo, hi, mirrored=True))
        return points

    def _order_points(self) -> None:
        # Refine enclosures until all critical turns are pairwise separated,
        # then sort.  Terminates because the turns are pairwise distinct:
        # root-of-unity angles were removed symbolically, so algebraic turns
        # never collide with rational ones (or with each other).
        bits = 64
        while True:
            encs = [pt.enclosure(bits) for pt in self.points]
            order = sorted(range(len(encs)), key=lambda i: encs[i])
            if all(encs[order[i]][1] < encs[order[i + 1]][0]
                   for i in range(len(order) - 1)):
                self.points = [self.points[i] for i in order]
                return
            for pt in self.points:
                pt.refine()
            bits *= 2

    def _inertia_at_root(self, order: int, power: int) -> int:
        return signature_scalar(_evaluate_at_root(self.form, order, power)).signature

    def _sample_arc(self, start: _TurnPoint, end: _TurnPoint) -> int:
        """Certified pointwise signature on the open arc (start, end)."""
        bits = 64
        while True:
            lo_enc = start.enclosure(bits)
            hi_enc = end.enclosure(bits)
            if lo_enc[1] < _HALF < hi_enc[0]:
                return self._inertia_at_root(2, 1)  # t = -1 lies inside
            # Enclosures touching 1/2 without being exactly 1/2 would put the
            # tangent pole inside an evaluation; refine them away first.
            blocked = False
            for pt, enc in ((start, lo_enc), (end, hi_enc)):
                if enc[0] <= _HALF <= enc[1] and not (pt.is_rational and pt.exact == _HALF):
                    blocked = True
            if not blocked:
                s_lo = None if (start.is_rational and start.exact == _HALF) \
                    else self._tan_bound(lo_enc[1], bits, upper=True)
                s_hi = None if (end.is_rational and end.exact == _HALF) \
                    else self._tan_bound(hi_enc[0], bits, upper=False)
                s: Fraction | None = None
                if s_lo is _POLE or s_hi is _POLE:
                    pass  # pole inside a working interval; refine below
                elif s_lo is not None and s_hi is not None:
                    if s_lo < s_hi:
                        s = simplest_between(s_lo, s_hi)
                elif s_lo is not None:
                    s = Fraction(math.floor(s_lo) + 1)
                elif s_hi is not None:
                    s = Fraction(math.floor(s_hi) - 1)
                else:
                    raise AssertionError("arc bounded by turn 1/2 on both sides")
                if s is not None:
                    matrix = evaluate_at_circle_param(self.form, s)
                    return signature_scalar(matrix).signature
            start.refine()
            end.refine()
            bits *= 2

    @staticmethod
    def _tan_bound(turn: Fraction, bits: int, upper: bool):
        # tan(pi * turn) parametrizes the circle rationally; monotone on each
        # side of turn = 1/2.  Returns the _POLE sentinel when the tangent
        # pole falls inside the working interval at this precision.
        from mpmath.libmp import fnan, finf, fninf

        with iv_precision(bits) as ctx:
            val = ctx.tan(ctx.pi * turn.numerator / turn.denominator)
            lo_raw, hi_raw = val._mpi_
            if lo_raw in (finf, fninf, fnan) or hi_raw in (finf, fninf, fnan):
                return _POLE
            enc = interval_from_iv(val)
        return enc.hi if upper else enc.lo

    def _build_arcs(self) -> list[_Arc]:
        if not self.points:
            return [_Arc(_TurnPoint(Fraction(1)), _TurnPoint(Fraction(1)), True,
                         self._inertia_at_root(1, 0))]
        arcs: list[_Arc] = []
        n = len(self.points)
        for i in range(n):
            start = self.points[i]
            end = self.points[(i + 1) % n]
            if i + 1 < n:
                inertia = self._sample_arc(start, end)
                arcs.append(_Arc(start, end, False, inertia))
            else:
                # Wrap-around arc through turn 1 (the point t = 1).
                if start.is_rational and start.exact == 1:
                    # t = 1 is itself critical; the wrap interior is (0, first).
                    inertia = self._sample_arc(_TurnPoint(Fraction(0)), end)
                else:
                    inertia = self._inertia_at_root(1, 0)
                arcs.append(_Arc(start, end, True, inertia))
        return arcs

    # -- exact bookkeeping over the partition --------------------------------

    def _count_below(self, point: _TurnPoint, k: int, strict: bool) -> int:
        """Number of grid points j/k, 0 <= j < k, with j/k < turn (or <=)."""
        if point.is_rational:
            x = point.exact * k
            if x.denominator == 1:
                return min(int(x) + (0 if strict else 1), k)
            return min(math.ceil(x), k)
        bits = 64
        while True:
            lo, hi = point.enclosure(bits)
            klo, khi = lo * k, hi * k
            if math.floor(klo) == math.floor(khi) and math.ceil(klo) != klo:
                return min(math.floor(klo) + 1, k)
            point.refine()
            bits *= 2

    def quotient_signature(self, k: int) -> Fraction:
        """Exact value of the k-th finite-quotient signature average."""
        if k < 1:
            raise UsageError("quotient order must be positive")
        if not self.points:
            return Fraction(self.arcs[0].inertia)
        total = 0
        for pt in self.points:
            if pt.exact is not None and k % pt.exact.denominator == 0:
                total += pt.inertia
        for arc in self.arcs:
            if arc.wrap:
                count = k - self._count_below(arc.start, k, strict=False)
                lower = self._count_below(arc.end, k, strict=True)
                if arc.start.is_rational and arc.start.exact == 1:
                    lower -= 1  # j = 0 sits at the critical point t = 1
                count += lower
            else:
                count = self._count_below(arc.end, k, strict=True) \
                    - self._count_below(arc.start, k, strict=False)
            total += arc.inertia * count
        return Fraction(total, k)

    def circle_integral(self, tolerance: Fraction) -> tuple[Fraction, Fraction]:
        """Enclosure of the circle average of the pointwise signature.

        Exact (zero width) when every critical angle is a rational turn;
        otherwise refined until the width is at most ``tolerance``.
        """
        if tolerance <= 0:
            raise UsageError("tolerance must be positive")
        if not self.points:
            v = Fraction(self.arcs[0].inertia)
            return (v, v)
        bits = 64
        while True:
            encs = {id(pt): pt.enclosure(bits) for pt in self.points}
            lo_total = Fraction(0)
            hi_total = Fraction(0)
            for arc in self.arcs:
                start_enc = encs[id(arc.start)]
                end_enc = encs[id(arc.end)]
                if arc.wrap:
                    end_enc = (end_enc[0] + 1, end_enc[1] + 1)
                length_lo = max(Fraction(0), end_enc[0] - start_enc[1])
                length_hi = max(Fraction(0), end_enc[1] - start_enc[0])
                if arc.inertia >= 0:
                    lo_total += arc.inertia * length_lo
                    hi_total += arc.inertia * length_hi
                else:
                    lo_total += arc.inertia * length_hi
                    hi_total += arc.inertia * length_lo
            if hi_total - lo_total <= tolerance:
                return (lo_total, hi_total)
            for pt in self.points:
                pt.refine()
            bits *= 2


def sig_l2_circle(form: LaurentHermitianForm,
                  tolerance: Scalar = Fraction(1, 10 ** 9)) -> tuple[Fraction, Fraction]:
    """Certified enclosure of the L2-signature (circle average)."""
    return CirclePartition(form).circle_integral(Fraction(tolerance))


@dataclass(frozen=True)
class ConvergenceReport:
    entries: tuple[tuple[int, Fraction], ...]
    limit_lo: Fraction
    limit_hi: Fraction
    max_deviation_tail: Fraction
    tolerance: Fraction

    @property
    def limit_exact(self) -> Fraction | None:
        return self.limit_lo if self.limit_lo == self.limit_hi else None


def convergence_report(form: LaurentHermitianForm, k_schedule: Sequence[int],
                       tolerance: Scalar = Fraction(1, 10 ** 6)) -> ConvergenceReport:
    """Finite-quotient signatures along a schedule against the circle value."""
    ks = list(k_schedule)
    if not ks:
        raise UsageError("schedule must be nonempty")
    if ks[0] < 1 or any(b <= a for a, b in zip(ks, ks[1:])):
        raise UsageError("schedule must be strictly increasing and positive")
    tolerance = Fraction(tolerance)
    partition = CirclePartition(form)
    entries = tuple((k, partition.quotient_signature(k)) for k in ks)
    lo, hi = partition.circle_integral(tolerance)
    tail = entries[-((len(entries) + 2) // 3):]
    deviation = Fraction(0)
    for _, value in tail:
        deviation = max(deviation, lo - value, value - hi)
    return ConvergenceReport(entries, lo, hi, max(deviation, Fraction(0)), tolerance)


def eval_at_angle(form: LaurentHermitianForm, turn: Scalar | None = None,
                  radians: object = None,
                  precision_bits: int = 64) -> tuple[tuple[ComplexInterval, ...], ...]:
    """Hermitian matrix enclosure at t = e^{i*angle}.

    The angle is either ``turn`` (an exact rational multiple of a full
    turn, evaluated exactly and then enclosed) or ``radians`` (a string
    or float, evaluated in interval arithmetic).
    """
    require_hermitian_laurent(form)
    if (turn is None) == (radians is None):
        raise UsageError("provide exactly one of turn= or radians=")
    if turn is not None:
        turn = Fraction(turn) % 1
        matrix = _evaluate_at_root(form, max(turn.denominator, 1), turn.numerator)
        return tuple(tuple(v.embed(precision_bits) for v in row)
                     for row in matrix.entries)
    rows = []
    with iv_precision(precision_bits) as ctx:
        theta = ctx.convert(radians) if isinstance(radians, str) else ctx.mpf(radians)
        for row in form.matrix:
            out_row = []
            for p in row:
                re = ctx.mpf(0)
                im = ctx.mpf(0)
                for m, c in p.sorted_terms():
                    ang = theta * m
                    re += ctx.cos(ang) * c.numerator / c.denominator
                    im += ctx.sin(ang) * c.numerator / c.denominator
                out_row.append((interval_from_iv(re), interval_from_iv(im)))
            rows.append(out_row)
    return tuple(tuple(ComplexInterval(re, im) for re, im in row) for row in rows)
