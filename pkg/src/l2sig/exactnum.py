"""Exact arithmetic in cyclotomic fields with certified sign determination.

Elements of the field of e-th roots of unity are stored in the power
basis ``zeta^0 .. zeta^(phi(e)-1)`` modulo the e-th cyclotomic
polynomial.  Representatives are canonical, so equality of values is
equality of coefficient vectors and the exact zero test is trivial;
that zero test is what certifies termination of the interval-based
sign refinement.
"""

from __future__ import annotations

import math
import threading
from contextlib import contextmanager
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

from mpmath import iv as _iv
from mpmath.libmp import to_rational as _mpf_to_rational


class UsageError(ValueError):
    """Caller misuse: mismatched conductors/groups, bad parameters."""


class DomainError(ValueError):
    """Mathematically invalid input: non-real sign query, non-hermitian
    matrix, identically singular determinant, non-injective embedding."""


class FormatError(ValueError):
    """Malformed or semantically invalid document."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


Scalar = Union[int, Fraction]

# mpmath's interval context is a process-wide singleton; its precision
# must not be mutated concurrently.
_IV_LOCK = threading.Lock()


@contextmanager
def iv_precision(bits: int) -> Iterator:
    """mpmath's interval context at the given precision, serialized.

    The interval context is a process-wide singleton whose precision is
    mutable state; this is the one place it is touched.
    """
    with _IV_LOCK:
        saved = _iv.prec
        _iv.prec = bits
        try:
            yield _iv
        finally:
            _iv.prec = saved


def interval_from_iv(value) -> "RealInterval":
    """Exact rational endpoints of an mpmath interval value."""
    lo, hi = value._mpi_
    return RealInterval(_fraction_from_mpf_tuple(lo), _fraction_from_mpf_tuple(hi))


@lru_cache(maxsize=None)
def euler_phi(e: int) -> int:
    if e < 1:
        raise UsageError(f"conductor must be positive, got {e}")
    result = e
    n = e
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _polydiv_exact(num: list[int], den: Sequence[int]) -> list[int]:
    # Exact division of integer polynomials (den monic); remainder must vanish.
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        out[i - dd] = c
        if c:
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Monic integer coefficients of the e-th cyclotomic polynomial, ascending."""
    if e < 1:
        raise UsageError(f"conductor must be positive, got {e}")
    if e == 1:
        return (-1, 1)
    num = [0] * (e + 1)
    num[0] = -1
    num[e] = 1
    for d in range(1, e):
        if e % d == 0:
            num = _polydiv_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


def _reduce_mod_cyclotomic(vec: list[int], e: int) -> list[int]:
    phi = euler_phi(e)
    poly = cyclotomic_polynomial(e)
    for d in range(len(vec) - 1, phi - 1, -1):
        c = vec[d]
        if c:
            vec[d] = 0
            base = d - phi
            for i in range(phi):
                vec[base + i] -= c * poly[i]
    out = vec[:phi]
    if len(out) < phi:
        out.extend([0] * (phi - len(out)))
    return out


@lru_cache(maxsize=None)
def _cos_sin_table(e: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    step = 2.0 * math.pi / e
    cs = tuple(math.cos(step * k) for k in range(euler_phi(e)))
    sn = tuple(math.sin(step * k) for k in range(euler_phi(e)))
    return cs, sn


def _fraction_from_mpf_tuple(raw) -> Fraction:
    p, q = _mpf_to_rational(raw)
    return Fraction(int(p), int(q))


@dataclass(frozen=True)
class RealInterval:
    """Closed interval with exact (binary-float-valued) rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise UsageError("interval endpoints out of order")

    @classmethod
    def point(cls, value: Scalar) -> "RealInterval":
        v = Fraction(value)
        return cls(v, v)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def __add__(self, other: "RealInterval") -> "RealInterval":
        return RealInterval(self.lo + other.lo, self.hi + other.hi)


@dataclass(frozen=True)
class ComplexInterval:
    re: RealInterval
    im: RealInterval

    @classmethod
    def point(cls, re: Scalar, im: Scalar = 0) -> "ComplexInterval":
        return cls(RealInterval.point(re), RealInterval.point(im))


class CycNumber:
    """Element of the cyclotomic field of conductor ``e``.

    Internally a common positive denominator and an integer coefficient
    vector of length phi(e), content-reduced, canonically reduced modulo
    the cyclotomic polynomial.  Immutable.
    """

    __slots__ = ("conductor", "den", "nums")

    conductor: int
    den: int
    nums: tuple[int, ...]

    def __init__(self, conductor: int, den: int, nums: tuple[int, ...]):
        # Normalized internal constructor; use the classmethods below.
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "nums", nums)

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("CycNumber is immutable")

    @classmethod
    def _make(cls, e: int, den: int, nums: Iterable[int]) -> "CycNumber":
        nums = list(nums)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            nums = [-n for n in nums]
        g = den
        for n in nums:
            if n:
                g = math.gcd(g, n)
        if g > 1:
            den //= g
            nums = [n // g for n in nums]
        if all(n == 0 for n in nums):
            den = 1
        return cls(e, den, tuple(nums))

    @classmethod
    def from_rational(cls, value: Scalar, conductor: int = 1) -> "CycNumber":
        v = Fraction(value)
        nums = [0] * euler_phi(conductor)
        nums[0] = v.numerator
        return cls._make(conductor, v.denominator, nums)

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> "CycNumber":
        """The root of unity zeta_e^power, canonically reduced."""
        k = power % conductor
        vec = [0] * (k + 1)
        vec[k] = 1
        return cls._make(conductor, 1, _reduce_mod_cyclotomic(vec, conductor))

    @classmethod
    def from_coeffs(cls, conductor: int, coeffs: Sequence[Scalar]) -> "CycNumber":
        """Build from exactly phi(e) power-basis coefficients."""
        phi = euler_phi(conductor)
        if len(coeffs) != phi:
            raise UsageError(f"expected {phi} coefficients for conductor {conductor}, got {len(coeffs)}")
        return cls.from_poly(conductor, coeffs)

    @classmethod
    def from_poly(cls, conductor: int, coeffs: Sequence[Scalar]) -> "CycNumber":
        """Build from arbitrary-degree polynomial coefficients in zeta."""
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        vec = [f.numerator * (den // f.denominator) for f in fracs]
        return cls._make(conductor, den, _reduce_mod_cyclotomic(vec, conductor))

    # -- structure queries ------------------------------------------------

    def is_zero(self) -> bool:
        return all(n == 0 for n in self.nums)

    def is_rational(self) -> bool:
        return all(n == 0 for n in self.nums[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise DomainError("value is not rational")
        return Fraction(self.nums[0], self.den)

    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.den) for n in self.nums)

    def is_real(self) -> bool:
        return self == self.conjugate()

    # -- conductor management ---------------------------------------------

    def lift(self, conductor: int) -> "CycNumber":
        """Rewrite in the field of ``conductor``-th roots (old conductor must divide)."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor != 0:
            raise UsageError(
                f"cannot lift conductor {self.conductor} into non-multiple {conductor}")
        step = conductor // self.conductor
        vec = [0] * ((len(self.nums) - 1) * step + 1)
        for k, n in enumerate(self.nums):
            if n:
                vec[k * step] = n
        return CycNumber._make(conductor, self.den, _reduce_mod_cyclotomic(vec, conductor))

    def _coerce(self, other) -> "CycNumber | None":
        if isinstance(other, CycNumber):
            if other.conductor != self.conductor:
                raise UsageError(
                    f"conductor mismatch: {self.conductor} vs {other.conductor}; lift operands first")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber.from_rational(other, self.conductor)
        return None

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "CycNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        g = math.gcd(self.den, o.den)
        ma = o.den // g
        mb = self.den // g
        nums = [x * ma + y * mb for x, y in zip(self.nums, o.nums)]
        return CycNumber._make(self.conductor, self.den * ma, nums)

    def __radd__(self, other) -> "CycNumber":
        return self.__add__(other)

    def __neg__(self) -> "CycNumber":
        return CycNumber(self.conductor, self.den, tuple(-n for n in self.nums))

    def __sub__(self, other) -> "CycNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.__add__(-o)

    def __rsub__(self, other) -> "CycNumber":
        return (-self).__add__(other)

    def __mul__(self, other) -> "CycNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            return CycNumber._make(
                self.conductor, self.den * o.den, [n * o.nums[0] for n in self.nums])
        if self.is_rational():
            return CycNumber._make(
                self.conductor, self.den * o.den, [n * self.nums[0] for n in o.nums])
        conv = [0] * (2 * len(self.nums) - 1)
        for i, x in enumerate(self.nums):
            if x:
                for j, y in enumerate(o.nums):
                    if y:
                        conv[i + j] += x * y
        return CycNumber._make(
            self.conductor, self.den * o.den, _reduce_mod_cyclotomic(conv, self.conductor))

    def __rmul__(self, other) -> "CycNumber":
        return self.__mul__(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycNumber.from_rational(other, 1)
        if not isinstance(other, CycNumber):
            return NotImplemented
        if other.conductor == self.conductor:
            return self.den == other.den and self.nums == other.nums
        e = math.lcm(self.conductor, other.conductor)
        a = self.lift(e)
        b = other.lift(e)
        return a.den == b.den and a.nums == b.nums

    __hash__ = None  # cross-conductor value equality; not hashable

    def __repr__(self) -> str:
        return f"CycNumber(conductor={self.conductor}, den={self.den}, nums={self.nums})"

    def conjugate(self) -> "CycNumber":
        """Image under zeta -> zeta^(e-1); complex conjugation of the field."""
        e = self.conductor
        vec = [0] * e
        for k, n in enumerate(self.nums):
            if n:
                vec[(-k) % e] += n
        return CycNumber._make(e, self.den, _reduce_mod_cyclotomic(vec, e))

    def inverse(self) -> "CycNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CycNumber.from_rational(1 / self.as_fraction(), self.conductor)
        # Extended Euclid against the cyclotomic polynomial over Q.
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        a = [Fraction(n, self.den) for n in self.nums]
        r0, r1 = phi_poly, list(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                break
            q, r = _frac_polydivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_polysub(s0, _frac_polymul(q, s1))
        c = r1[0]
        inv_coeffs = [s / c for s in s1]
        return CycNumber.from_poly(self.conductor, inv_coeffs)

    # -- numerics ------------------------------------------------------------

    def embed(self, precision_bits: int = 64) -> ComplexInterval:
        """Certified enclosure of the complex value at zeta = exp(2*pi*i/e)."""
        if precision_bits < 2:
            raise UsageError("precision must be at least 2 bits")
        if self.is_rational():
            return ComplexInterval.point(Fraction(self.nums[0], self.den))
        e = self.conductor
        with iv_precision(precision_bits) as ctx:
            two_pi = 2 * ctx.pi
            re = ctx.mpf(0)
            im = ctx.mpf(0)
            for k, n in enumerate(self.nums):
                if n:
                    ang = (two_pi * k) / e
                    re += n * ctx.cos(ang)
                    im += n * ctx.sin(ang)
            re /= self.den
            im /= self.den
            result = ComplexInterval(interval_from_iv(re), interval_from_iv(im))
        return result

    def _machine_sign(self) -> Sign | None:
        # Machine-precision interval evaluation: float estimate plus a
        # rigorous (crude, outward) rounding bound.  Decides the generic
        # case; inconclusive values fall through to the refinement loop.
        nums = self.nums
        if max(abs(n) for n in nums).bit_length() > 400:
            return None
        cos_tab, _ = _cos_sin_table(self.conductor)
        total = 0.0
        mag = 0.0
        for k, n in enumerate(nums):
            if n:
                fn = float(n)
                total += fn * cos_tab[k]
                mag += abs(fn)
        if math.isinf(total) or math.isinf(mag):
            return None
        bound = mag * (len(nums) + 8) * 2.0 ** -48
        if total > bound:
            return Sign.POSITIVE
        if total < -bound:
            return Sign.NEGATIVE
        return None

    def sign(self) -> Sign:
        """Exact trichotomous sign of a real cyclotomic number.

        Zero is decided by the canonical representation; a nonzero sign
        is certified by interval evaluation with doubling precision,
        which terminates because the value is exactly nonzero.
        """
        if not self.is_real():
            raise DomainError("sign of a non-real cyclotomic number")
        if self.is_zero():
            return Sign.ZERO
        if self.is_rational():
            return Sign.POSITIVE if self.nums[0] > 0 else Sign.NEGATIVE
        quick = self._machine_sign()
        if quick is not None:
            return quick
        bits = 64
        while True:
            enc = self.embed(bits).re
            if enc.lo > 0:
                return Sign.POSITIVE
            if enc.hi < 0:
                return Sign.NEGATIVE
            bits *= 2


def _frac_polydivmod(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dd:
        return [Fraction(0)], num
    quot = [Fraction(0)] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] / lead
        quot[i - dd] = c
        if c:
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    return quot, num[:dd] if dd else [Fraction(0)]


def _frac_polymul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _frac_polysub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return out


def lift_to_common(a: CycNumber, b: CycNumber) -> tuple[CycNumber, CycNumber]:
    """Lift both operands into the compositum (lcm conductor)."""
    e = math.lcm(a.conductor, b.conductor)
    return a.lift(e), b.lift(e)
