"""Dense univariate polynomials over Q as coefficient lists, lowest degree first."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import RatPoly


def trim(p: Sequence) -> list:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def from_ratpoly(f: RatPoly, var: str) -> list:
    """Coefficients of ``f`` in ``var``; ``f`` must not involve other variables."""
    others = [v for v in f.support_vars() if v != var]
    if others:
        raise ValueError(f"{f} is not univariate in {var}")
    coeffs = f.coefficients_in(var)
    deg = max(coeffs, default=-1)
    return trim([coeffs[k].constant_value() if k in coeffs else 0 for k in range(deg + 1)])


def derivative(p: Sequence) -> list:
    return trim([k * c for k, c in enumerate(p)][1:])


def divmod_poly(a: Sequence, b: Sequence) -> tuple:
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / b[-1]
        q[shift] = c
        for i, bc in enumerate(b):
            r[i + shift] -= c * bc
        r = trim(r)
    return trim(q), r


def gcd(a: Sequence, b: Sequence) -> list:
    """Monic greatest common divisor (empty list for gcd(0, 0))."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    if not a:
        return []
    return [c / a[-1] for c in a]


def is_squarefree(p: Sequence) -> bool:
    p = trim(p)
    if not p:
        return False
    return len(gcd(p, derivative(p))) == 1


def evaluate(p: Sequence, t) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * t + c
    return acc
