"""Exact values of I(h,i,j,k,l) and of integral-parameter 3F2(1) in Q + Q*zeta(2).

The route is: write the integral as a sum over n of a rational function of n,
split that into partial fractions A_m/(n+m) + B_m/(n+m)^2, and sum the pieces
against harmonic numbers.  The double-pole coefficients B_m carry zeta(2).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Dict, Tuple

from .errors import ConvergenceError, DomainError, UnmappableError
from .exact_arith import Zeta2Number, binomial, factorial, harmonic, pochhammer
from .params import F32Params, IntegralParams

__all__ = [
    "IntegralParams",
    "PFDecomp",
    "b_value",
    "eval_3f2_exact",
    "eval_integral_exact",
    "integral_form",
    "is_irrational",
    "partial_fractions",
    "pf_to_value",
    "summand",
    "zeta2_coefficient",
]


@dataclass(frozen=True)
class PFDecomp:
    """``terms[m] = (A_m, B_m)`` meaning A_m/(n+m) + B_m/(n+m)^2."""

    terms: Dict[int, Tuple[Fraction, Fraction]] = field(default_factory=dict)

    def __call__(self, n) -> Fraction:
        total = Fraction(0)
        for m, (a, b) in self.terms.items():
            total += Fraction(a) / (n + m) + Fraction(b) / (n + m) ** 2
        return total

    @property
    def residue_sum(self) -> Fraction:
        return sum((a for a, _ in self.terms.values()), Fraction(0))


def _params(p) -> IntegralParams:
    return p if isinstance(p, IntegralParams) else IntegralParams.of(p)


def summand(p, n: int) -> Fraction:
    """n-th term of the series expansion of I(h,i,j,k,l) (needs i+j-l >= 0)."""
    h, i, j, k, l = _params(p)
    c = i + j - l
    if c < 0:
        raise DomainError(f"summand needs i+j-l >= 0, got {c}")
    prefactor = Fraction(factorial(i) * factorial(j), factorial(c))
    return prefactor * pochhammer(n + 1, c) / (pochhammer(n + h + 1, i + 1) * pochhammer(n + k + 1, j + 1))


def _summand_factors(p: IntegralParams):
    """Constant, numerator roots and denominator roots of the summand, after cancellation.

    A root t stands for the linear factor (n + t).
    """
    h, i, j, k, l = p
    c = i + j - l
    if c < 0:
        raise DomainError(f"partial fractions need i+j-l >= 0, got {c}")
    const = Fraction(factorial(i) * factorial(j), factorial(c))
    num = Counter(range(1, c + 1))
    den = Counter(range(h + 1, h + i + 2)) + Counter(range(k + 1, k + j + 2))
    common = num & den
    return const, num - common, den - common


def partial_fractions(p) -> PFDecomp:
    """Residues of the summand at its poles n = -m, by exact residue formulas."""
    p = _params(p)
    const, num, den = _summand_factors(p)
    terms: Dict[int, Tuple[Fraction, Fraction]] = {}
    for m, mult in sorted(den.items()):
        # g(n) = summand * (n+m)^mult, evaluated at n = -m
        g = const
        for t, e in num.items():
            g *= Fraction(t - m) ** e
        for t, e in den.items():
            if t != m:
                g /= Fraction(t - m) ** e
        if mult == 1:
            terms[m] = (g, Fraction(0))
        elif mult == 2:
            # A_m = g'(-m) = g(-m) * (log g)'(-m)
            dlog = sum((Fraction(e, t - m) for t, e in num.items()), Fraction(0))
            dlog -= sum((Fraction(e, t - m) for t, e in den.items() if t != m), Fraction(0))
            terms[m] = (g * dlog, g)
        else:  # pragma: no cover - two Pochhammer blocks give at most double poles
            raise AssertionError("pole of order > 2")
    return PFDecomp(terms)


def pf_to_value(d: PFDecomp) -> Zeta2Number:
    """Sum over n >= 0 of the decomposition, as r + z*zeta(2)."""
    if d.residue_sum != 0:
        raise ConvergenceError(f"simple-pole residues sum to {d.residue_sum}, series diverges")
    r = Fraction(0)
    z = Fraction(0)
    for m, (a, b) in d.terms.items():
        r -= a * harmonic(m - 1, 1) + b * harmonic(m - 1, 2)
        z += b
    return Zeta2Number(r, z)


def _beta_integral(a: int, b: int) -> Fraction:
    """Integral of x^a (1-x)^b over [0,1] for non-negative integers a, b."""
    return Fraction(factorial(a) * factorial(b), factorial(a + b + 1))


def eval_integral_exact(p) -> Zeta2Number:
    """I(h,i,j,k,l) exactly."""
    p = _params(p)
    h, i, j, k, l = p
    c = i + j - l
    if c >= 0:
        return pf_to_value(partial_fractions(p))
    # the kernel (1-xy)^(l-i-j-1) is a polynomial: integrate term by term
    e = l - i - j - 1
    total = Fraction(0)
    for t in range(e + 1):
        term = binomial(e, t) * _beta_integral(h + t, i) * _beta_integral(k + t, j)
        total += -term if t % 2 else term
    return Zeta2Number(total, 0)


def zeta2_coefficient(p) -> Fraction:
    """Closed-form coefficient of zeta(2) in I(h,i,j,k,l) as a signed binomial sum."""
    h, i, j, k, l = _params(p)
    c = i + j - l
    total = 0
    for s in range(max(h, k, c), min(h + i, k + j) + 1):
        total += binomial(i, s - h) * binomial(j, s - k) * binomial(s, c)
    sign = -1 if (h + i + j + k + l) % 2 else 1
    return Fraction(sign * total)


def is_irrational(p) -> bool:
    return all(v >= 0 for v in _params(p).linear_combos())


def b_value(p) -> Zeta2Number:
    p = _params(p)
    norm = 1
    for v in p:
        norm *= factorial(v)
    return eval_integral_exact(p) / norm


def integral_form(f: F32Params) -> Tuple[IntegralParams, Fraction]:
    """Map an integral 3F2 to (h,i,j,k,l) and the factor with 3F2 = factor * I.

    The upper/lower assignment is the lexicographically first valid one among
    the twelve trivial-symmetry pairings.
    """
    values = f.as_tuple()
    if any(v.denominator != 1 or v <= 0 for v in values):
        raise UnmappableError(f"{f} does not have positive integer parameters")
    up = [int(v) for v in f.upper]
    lo = [int(v) for v in f.lower]
    candidates = sorted({u + w for u in permutations(up) for w in permutations(lo)})
    for a, b, c, d, e in candidates:
        if d >= a + 1 and e >= b + 1 and d + e >= a + b + c + 1:
            p = IntegralParams(a - 1, d - a - 1, e - b - 1, b - 1, d + e - a - b - c - 1)
            h, i, j, k, l = p
            factor = Fraction(
                factorial(h + i + 1) * factorial(k + j + 1),
                factorial(h) * factorial(i) * factorial(j) * factorial(k),
            )
            return p, factor
    raise UnmappableError(f"{f} is not of the exactly evaluable integral type")


def eval_3f2_exact(f: F32Params) -> Zeta2Number:
    """3F2(a,b,c;d,e;1) for positive integers satisfying the integral conditions."""
    p, factor = integral_form(f)
    return eval_integral_exact(p) * factor
