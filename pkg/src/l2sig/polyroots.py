"""Exact real-root isolation for rational-coefficient polynomials.

Sturm sequences over the rationals isolate roots with certified sign
counts; every interval produced has rational endpoints that are not
roots, so later bisection refinement only needs sign evaluations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = list[Fraction]


def normalize(coeffs: Sequence[Fraction]) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(p: Poly) -> int:
    return len(p) - 1


def evaluate(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    return [c * k for k, c in enumerate(p)][1:]


def polydivmod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    num = list(num)
    dd = degree(den)
    lead = den[-1]
    if degree(num) < dd:
        return [], normalize(num)
    quot = [Fraction(0)] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] / lead
        quot[i - dd] = c
        if c:
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    return normalize(quot), normalize(num[:dd])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    a, b = normalize(a), normalize(b)
    while b:
        _, r = polydivmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def squarefree_part(p: Poly) -> Poly:
    p = normalize(p)
    if degree(p) < 1:
        return p
    g = poly_gcd(p, derivative(p))
    if degree(g) < 1:
        return p
    q, _ = polydivmod(p, g)
    return q


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [normalize(p), derivative(p)]
    while chain[-1]:
        _, r = polydivmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _variations(chain: list[Poly], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = evaluate(p, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain: list[Poly], lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in the half-open interval (lo, hi]."""
    return _variations(chain, lo) - _variations(chain, hi)


def isolate_roots(p: Poly, lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open intervals in (lo, hi), each containing exactly one
    root of the squarefree part of ``p``; the endpoints are never roots.

    The polynomial is bisected with exact Sturm counts, so the result is
    a certificate, not a heuristic.
    """
    q = squarefree_part(p)
    if degree(q) < 1:
        return []
    chain = sturm_chain(q)
    lo = Fraction(lo)
    hi = Fraction(hi)
    if evaluate(q, lo) == 0 or evaluate(q, hi) == 0:
        raise ValueError("isolation endpoints must not be roots")
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, count_roots(chain, lo, hi))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        while evaluate(q, mid) == 0:
            mid = (a + mid) / 2
        stack.append((a, mid, count_roots(chain, a, mid)))
        stack.append((mid, b, count_roots(chain, mid, b)))
    out.sort()
    return out


def refine_root(p: Poly, lo: Fraction, hi: Fraction,
                rounds: int = 1) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval of a simple root (sign change assumed)."""
    s_lo = evaluate(p, lo)
    s_hi = evaluate(p, hi)
    if s_lo == 0 or s_hi == 0 or (s_lo > 0) == (s_hi > 0):
        raise ValueError("interval does not bracket a simple root")
    for _ in range(rounds):
        mid = (lo + hi) / 2
        v = evaluate(p, mid)
        if v == 0:
            # The root is exactly mid; shrink to a bracket around it (mid is
            # the only root inside, so the halved endpoints are not roots).
            lo, hi = (lo + mid) / 2, (mid + hi) / 2
            continue
        if (v > 0) == (s_lo > 0):
            lo, s_lo = mid, v
        else:
            hi, s_hi = mid, v
    return lo, hi


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational with smallest denominator strictly inside the open (lo, hi)."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("empty interval")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -simplest_between(-hi, -lo)

    def rec(a: Fraction, b: Fraction | None) -> Fraction:
        # Simplest rational strictly inside (a, b), with 0 <= a and b = None
        # standing for +infinity; continued-fraction descent.
        n = a.numerator // a.denominator
        if b is None or n + 1 < b:
            return Fraction(n + 1)
        fa = a - n
        fb = b - n
        if fa == 0:
            return n + 1 / rec(1 / fb, None)
        return n + 1 / rec(1 / fb, 1 / fa)

    return rec(lo, hi)
