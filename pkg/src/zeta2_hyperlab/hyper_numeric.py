"""Rigorous numeric evaluation of pFq at |z| <= 1 with proven truncation bounds.

All arithmetic is exact rational; only the final estimate is rounded, and the
rounding error is added to the bound.  Nothing here uses floating point.

Tail control at |z| = 1
-----------------------
With term ratio r(k) = t_{k+1}/t_k we solve formally for a Laurent polynomial
R(k) = sum_j c_j k^-j with R(k+1) r(k) - R(k) = 1 + eps(k), eps(k) = O(k^-M).
Telescoping gives

    sum_{k>=N} t_k = -R(N) t_N - sum_{k>=N} eps(k) t_k,

and the remaining sum is bounded by |u_N| N / s' where u_k = eps(k) t_k,
after certifying |u_{k+1}/u_k| <= (k - s')/(k + 1) for every real k >= N.
That certificate is a polynomial inequality, checked by shifting the
polynomial to N and requiring non-negative coefficients.  From the ratio
bound, |u_k| <= |u_N| Gamma(k+1-a)Gamma(N+1)/(Gamma(N+1-a)Gamma(k+1)) with
a = 1 + s', and those envelope terms telescope to |u_N| N / s'.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence

from .errors import BudgetExceeded, DivergentSeries, DomainError
from .exact_arith import Zeta2Number, as_rational

__all__ = ["NumericValue", "PfqSpec", "eval_pfq", "zeta2_numeric", "zeta2_to_numeric"]

DEFAULT_PRECISION = 128
DEFAULT_MAX_TERMS = 20000


@dataclass(frozen=True)
class NumericValue:
    """An estimate with a proven absolute error bound (both exact rationals)."""

    estimate: Fraction
    error_bound: Fraction
    precision: int = DEFAULT_PRECISION
    terms: int = 0

    def contains(self, x) -> bool:
        return abs(as_rational(x) - self.estimate) <= self.error_bound

    def overlaps(self, other: "NumericValue") -> bool:
        return abs(self.estimate - other.estimate) <= self.error_bound + other.error_bound

    def to_decimal(self, digits: Optional[int] = None) -> Decimal:
        if digits is None:
            digits = max(8, int(self.precision * 0.30103) + 2)
        with localcontext() as ctx:
            ctx.prec = digits
            return Decimal(self.estimate.numerator) / Decimal(self.estimate.denominator)

    def __float__(self) -> float:
        return float(self.estimate)

    def __str__(self) -> str:
        bound = float(self.error_bound)
        return f"{self.to_decimal()} ± {bound:.3e}"


@dataclass(frozen=True)
class PfqSpec:
    upper: tuple
    lower: tuple
    argument: Fraction = Fraction(1)

    def __post_init__(self):
        up = tuple(as_rational(v) for v in self.upper)
        lo = tuple(as_rational(v) for v in self.lower)
        z = as_rational(self.argument)
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "argument", z)
        if len(up) != len(lo) + 1:
            raise DomainError(f"need p = q + 1 parameters, got {len(up)} upper and {len(lo)} lower")
        for b in lo:
            if b.denominator == 1 and b <= 0:
                raise DomainError(f"lower parameter {b} is a non-positive integer")
        if abs(z) > 1:
            raise DomainError(f"argument {z} outside the closed unit disc")

    @property
    def excess(self) -> Fraction:
        """sum(lower) - sum(upper)."""
        return sum(self.lower, Fraction(0)) - sum(self.upper, Fraction(0))

    def terminating_index(self) -> Optional[int]:
        """Largest k with a non-zero term, if some upper parameter is in Z<=0."""
        ns = [-int(a) for a in self.upper if a.denominator == 1 and a <= 0]
        return min(ns) if ns else None


# --- exact polynomial helpers (coefficient lists, lowest degree first) -------------


def _pmul(p: Sequence[Fraction], q: Sequence[Fraction]) -> List[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _padd(p, q) -> List[Fraction]:
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def _pscale(p, c) -> List[Fraction]:
    return [c * a for a in p]


def _ptrim(p) -> List[Fraction]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _from_shifts(shifts) -> List[Fraction]:
    """prod (k + s) over the shifts."""
    out = [Fraction(1)]
    for s in shifts:
        out = _pmul(out, [Fraction(s), Fraction(1)])
    return out


def _pshift(p, c) -> List[Fraction]:
    """Coefficients of p(k + c) as a polynomial in k (Taylor shift)."""
    out = list(p)
    n = len(out)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            out[j] += c * out[j + 1]
    return out


def _peval(p, x) -> Fraction:
    acc = Fraction(0)
    for a in reversed(p):
        acc = acc * x + a
    return acc


def _nonneg_from(p, n0) -> bool:
    """Certificate that p(k) >= 0 for every real k >= n0."""
    return all(a >= 0 for a in _pshift(p, n0))


def _positive_from(p, n0) -> bool:
    shifted = _pshift(p, n0)
    return shifted[0] > 0 and all(a >= 0 for a in shifted)


# --- formal telescoping solution ------------------------------------------------


def _series_mul(p, q, order) -> List[Fraction]:
    out = [Fraction(0)] * order
    for i, a in enumerate(p[:order]):
        if a:
            for j in range(min(len(q), order - i)):
                out[i + j] += a * q[j]
    return out


def _series_inv_linear(b, order) -> List[Fraction]:
    """1/(1 + b w) as a power series."""
    return [(-b) ** n for n in range(order)]


def _ratio_series(spec: PfqSpec, order: int) -> List[Fraction]:
    z = spec.argument
    rho = [Fraction(0)] * order
    rho[0] = z
    for a in spec.upper:
        rho = _series_mul(rho, [Fraction(1), a], order)
    for b in spec.lower + (Fraction(1),):
        rho = _series_mul(rho, _series_inv_linear(b, order), order)
    return rho


def _telescoper(spec: PfqSpec, m: int) -> List[Fraction]:
    """Coefficients c_{-1}..c_m of R(k) = sum c_j k^-j (index 0 holds c_{-1})."""
    z = spec.argument
    order = m + 3
    rho = _ratio_series(spec, order)
    js = list(range(-1, m + 1))
    e = {}
    for j in js:
        binom = [Fraction(1)]
        for n in range(order - 1):
            binom.append(binom[-1] * (-j - n) / (n + 1))
        ej = _series_mul(binom, rho, order)
        ej[0] -= 1
        e[j] = ej
    c = {j: Fraction(0) for j in js}
    if z == 1:
        # w^n coefficient involves c_{n-1} through e_{n-1}[1] = -(n + sigma)
        for n in range(0, m + 2):
            target = Fraction(1) if n == 0 else Fraction(0)
            acc = sum((c[j] * e[j][n - j] for j in js if j < n - 1 and 0 <= n - j < order), Fraction(0))
            c[n - 1] = (target - acc) / e[n - 1][1]
    else:
        # z = -1: e_j[0] = -2 and c_{-1} = 0
        for n in range(0, m + 1):
            target = Fraction(1) if n == 0 else Fraction(0)
            acc = sum((c[j] * e[j][n - j] for j in js if j < n and 0 <= n - j < order), Fraction(0))
            c[n] = (target - acc) / e[n][0]
    return [c[j] for j in js]


@dataclass
class _TailModel:
    """Polynomials describing R(k) and eps(k) for one series."""

    m: int
    numer: List[Fraction]  # P(k) = prod (k + a_i)
    denom: List[Fraction]  # Q(k) = prod (k + b_i), with b = 1 for k!
    a_poly: List[Fraction]  # R(k) = a_poly(k) / k^m
    eps_num: List[Fraction]  # eps(k) = eps_num(k) / (Q(k) k^m (k+1)^m)
    sigma_u: Fraction
    _cache: dict = field(default_factory=dict)

    def r_of(self, k) -> Fraction:
        return _peval(self.a_poly, k) / Fraction(k) ** self.m

    def eps_of(self, k) -> Fraction:
        return _peval(self.eps_num, k) / (_peval(self.denom, k) * Fraction(k) ** self.m * Fraction(k + 1) ** self.m)


def _tail_model(spec: PfqSpec, m: int) -> _TailModel:
    z = spec.argument
    coeffs = _telescoper(spec, m)
    # a_poly(k) = sum_j c_j k^(m - j), j = -1..m  -> degree m+1 .. 0
    a_poly = [Fraction(0)] * (m + 2)
    for idx, cj in enumerate(coeffs):
        j = idx - 1
        a_poly[m - j] = cj
    numer = _from_shifts(spec.upper)
    denom = _from_shifts(spec.lower + (Fraction(1),))
    km = [Fraction(0)] * m + [Fraction(1)]
    k1m = _from_shifts([1] * m)
    a_next = _pshift(a_poly, 1)
    lhs = _pscale(_pmul(_pmul(a_next, numer), km), z)
    rhs = _pmul(_pmul(a_poly, denom), k1m)
    one = _pmul(_pmul(denom, km), k1m)
    eps_num = _ptrim(_padd(lhs, _pscale(_padd(rhs, one), -1)))
    decay = spec.excess + m + (2 if z == 1 else 1)
    return _TailModel(m, numer, denom, a_poly, eps_num, decay)


def _certify_eps_tail(model: _TailModel, n0: int, sigma_p: Fraction) -> Optional[int]:
    """Return the sign of eps on [n0, inf) if the envelope certificate holds there."""
    e = model.eps_num
    if all(a == 0 for a in e):
        return 0
    if _positive_from(e, n0):
        sgn = 1
    elif _positive_from(_pscale(e, -1), n0):
        sgn = -1
    else:
        return None
    se = _pscale(e, sgn)
    se_next = _pshift(se, 1)
    m = model.m
    km = [Fraction(0)] * m + [Fraction(1)]
    k2m = _from_shifts([2] * m)
    q_next = _pshift(model.denom, 1)
    # (k - s') Q(k+1) sE(k) (k+2)^m - (k+1) P(k) sE(k+1) k^m >= 0
    right = _pmul(_pmul(_pmul([-sigma_p, Fraction(1)], q_next), se), k2m)
    left = _pmul(_pmul(_pmul([Fraction(1), Fraction(1)], model.numer), se_next), km)
    if _nonneg_from(_padd(right, _pscale(left, -1)), n0):
        return sgn
    return None


def _round_bits(x: Fraction, bits: int) -> Fraction:
    """Round x to ``bits`` significant binary digits."""
    if x == 0:
        return x
    mag = abs(x)
    e = mag.numerator.bit_length() - mag.denominator.bit_length()
    shift = bits - e
    scaled = x * (Fraction(2) ** shift)
    return Fraction(round(scaled)) / (Fraction(2) ** shift)


def _round_up_bound(b: Fraction, bits: int = 40) -> Fraction:
    """A dyadic upper bound for b >= 0 with few digits."""
    if b == 0:
        return b
    e = b.numerator.bit_length() - b.denominator.bit_length()
    scale = Fraction(2) ** (bits - e)
    return Fraction(math.ceil(b * scale)) / scale


def _finish(exact_estimate: Fraction, bound: Fraction, precision: int, terms: int) -> NumericValue:
    rounded = _round_bits(exact_estimate, precision + 16)
    total = _round_up_bound(bound + abs(rounded - exact_estimate))
    return NumericValue(rounded, total, precision, terms)


def _min_start(spec: PfqSpec) -> int:
    worst = max([-a for a in spec.upper] + [-b for b in spec.lower] + [Fraction(-1)])
    return max(1, math.floor(worst) + 1)


def eval_pfq(spec: PfqSpec, precision: int = DEFAULT_PRECISION, max_terms: int = DEFAULT_MAX_TERMS) -> NumericValue:
    """Evaluate pFq(upper; lower; z) with a proven error bound <= 2**-precision."""
    if precision < 1:
        raise ValueError("precision must be positive")
    target = Fraction(1, 2 ** (precision + 1))
    z = spec.argument
    stop = spec.terminating_index()
    if stop is not None:
        total, t = Fraction(0), Fraction(1)
        for k in range(stop + 1):
            total += t
            t *= _term_ratio(spec, k)
        return _finish(total, Fraction(0), precision, stop + 1)
    if abs(z) < 1:
        return _eval_inside(spec, precision, target, max_terms)
    sigma = spec.excess
    if z == 1 and sigma <= 0:
        raise DivergentSeries(f"parameter excess {sigma} <= 0 at argument 1")
    if z == -1 and sigma <= -1:
        raise DivergentSeries(f"parameter excess {sigma} <= -1 at argument -1")
    return _eval_on_circle(spec, precision, target, max_terms)


def _term_ratio(spec: PfqSpec, k: int) -> Fraction:
    num = spec.argument
    for a in spec.upper:
        num *= a + k
    den = Fraction(k + 1)
    for b in spec.lower:
        den *= b + k
    return num / den


def _eval_inside(spec: PfqSpec, precision: int, target: Fraction, max_terms: int) -> NumericValue:
    z = abs(spec.argument)
    pairs = list(zip(spec.upper, spec.lower + (Fraction(1),)))
    start = _min_start(spec)
    total, t = Fraction(0), Fraction(1)
    best = None
    for k in range(max_terms + 1):
        if k >= start:
            rho = z
            for a, b in pairs:
                rho *= max(Fraction(1), (k + a) / (k + b))
            if rho < 1:
                bound = abs(t) / (1 - rho)
                best = (total, bound, k)
                if bound <= target:
                    return _finish(total, bound, precision, k)
        total += t
        t *= _term_ratio(spec, k)
    est, bound, k = best if best else (total, Fraction(10) ** 9, max_terms)
    raise BudgetExceeded(f"no certified bound below 2^-{precision} within {max_terms} terms",
                         partial=_finish(est, bound, precision, k))


def _order_for(precision: int) -> int:
    return max(6, -(-precision // 8))


def _eval_on_circle(spec: PfqSpec, precision: int, target: Fraction, max_terms: int) -> NumericValue:
    m = _order_for(precision)
    model = _tail_model(spec, m)
    sigma_p = model.sigma_u / 2
    start = max(_min_start(spec), math.floor(sigma_p) + 1, 2 * m)
    checkpoints = []
    n = start
    while n <= max_terms:
        checkpoints.append(n)
        n = max(n + 1, (n * 5) // 4)
    total, t, k = Fraction(0), Fraction(1), 0
    best = None
    certified_sign = None
    for n0 in checkpoints:
        while k < n0:
            total += t
            t *= _term_ratio(spec, k)
            k += 1
        if certified_sign is None:
            certified_sign = _certify_eps_tail(model, n0, sigma_p)
            if certified_sign is None:
                continue
        # certificate on [n0', inf) implies it on [n0, inf) for n0 >= n0'
        estimate = total - model.r_of(n0) * t
        u = abs(model.eps_of(n0) * t)
        bound = u * n0 / sigma_p
        best = (estimate, bound, n0)
        if bound <= target:
            return _finish(estimate, bound, precision, n0)
    if best is None:
        raise BudgetExceeded(f"could not certify the tail within {max_terms} terms",
                             partial=_finish(total, Fraction(10) ** 9, precision, k))
    est, bound, n0 = best
    raise BudgetExceeded(f"no certified bound below 2^-{precision} within {max_terms} terms",
                         partial=_finish(est, bound, precision, n0))


# --- zeta(2) -----------------------------------------------------------------------


@lru_cache(maxsize=32)
def zeta2_numeric(precision: int = DEFAULT_PRECISION) -> NumericValue:
    """zeta(2) = 3 sum_{k>=1} 1/(k^2 binom(2k,k)); terms shrink by more than 4x each step."""
    target = Fraction(1, 2 ** (precision + 2))
    total = Fraction(0)
    k = 1
    term = Fraction(3, 2)  # 3/(1^2 * binom(2,1))
    while True:
        total += term
        term = term * k * k / ((2 * k + 1) * (2 * k + 2))
        k += 1
        tail = term * Fraction(4, 3)
        if tail <= target:
            return _finish(total, tail, precision, k)


def zeta2_to_numeric(v: Zeta2Number, precision: int = DEFAULT_PRECISION) -> NumericValue:
    if v.z == 0:
        return NumericValue(v.r, Fraction(0), precision, 0)
    z2 = zeta2_numeric(precision)
    exact = v.r + v.z * z2.estimate
    return _finish(exact, abs(v.z) * z2.error_bound, precision, z2.terms)
