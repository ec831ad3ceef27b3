"""Thomae/Hardy S5 symmetry of 3F2(1) and the Rhin-Viola groups T and Phi."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import List, Tuple

from .errors import NotInOrbitError, PoleError, RestrictionError
from .exact_arith import pochhammer
from .params import F32Params, IntegralParams, XParams

__all__ = [
    "F32Params",
    "XParams",
    "orbit",
    "orbit_lines",
    "orbit_ratio",
    "phi_related",
    "t_images",
    "t_related",
    "thomae_step",
    "x_of_f32",
    "x_of_integral",
]


def x_of_f32(f: F32Params) -> XParams:
    a, b, c, d, e = f.as_tuple()
    half = Fraction(1, 2)
    return XParams(((d + e - b - c) * half, (d + e - c - a) * half, (d + e - a - b) * half, d * half, e * half))


def x_of_integral(p) -> XParams:
    h, i, j, k, l = p if isinstance(p, IntegralParams) else IntegralParams.of(p)
    half = Fraction(1, 2)
    return XParams(((l + h + 2) * half, (k + l + 2) * half, (i + j + 2) * half, (h + i + 2) * half, (j + k + 2) * half))


def _array(x: Tuple[Fraction, ...]) -> F32Params:
    x1, x2, x3, x4, x5 = x
    s = x1 + x2 + x3 - x4 - x5
    return F32Params((2 * x1 - s, 2 * x2 - s, 2 * x3 - s), (2 * x4, 2 * x5))


def orbit(x: XParams, dedup: bool = True) -> List[F32Params]:
    """All 3F2 arrays in the Hardy orbit of ``x``, sorted.

    With ``dedup=False`` arrays are only collapsed when equal term by term
    (up to 120 of them).  With ``dedup=True`` they are canonicalised by the
    trivial symmetries first.
    """
    arrays = {_array(perm) for perm in permutations(x.x)}
    if dedup:
        arrays = {f.canonical() for f in arrays}
    return sorted(arrays)


def orbit_lines(x: XParams, dedup: bool = True) -> List[str]:
    """One ``[u1,u2,u3;l1,l2]`` line per member; divergent members are flagged."""
    lines = []
    for f in orbit(x, dedup):
        line = str(f)
        if not f.is_convergent():
            line += "  # divergent"
        lines.append(line)
    return lines


def t_images(p) -> List[IntegralParams]:
    """The ten images of p under the dihedral group generated by (h k)(i j) and (h i j k l)."""
    p = p if isinstance(p, IntegralParams) else IntegralParams.of(p)
    out = []
    seq = tuple(p)
    for base in (seq, (seq[3], seq[2], seq[1], seq[0], seq[4])):
        for r in range(5):
            out.append(IntegralParams(*(base[r:] + base[:r])))
    return out


def t_related(p, q) -> bool:
    q = q if isinstance(q, IntegralParams) else IntegralParams.of(q)
    return q in t_images(p)


def phi_related(p, q) -> bool:
    p = p if isinstance(p, IntegralParams) else IntegralParams.of(p)
    q = q if isinstance(q, IntegralParams) else IntegralParams.of(q)
    return sorted(p.pair_sums()) == sorted(q.pair_sums())


def thomae_step(f: F32Params) -> Tuple[F32Params, Fraction]:
    """One Thomae transformation: 3F2[a,b,c;d,e] = prefactor * 3F2[a,d-b,d-c;d,d+e-b-c].

    The gamma prefactor is exact here because ``a`` must be a positive integer.
    """
    a, b, c, d, e = f.as_tuple()
    if a.denominator != 1 or a <= 0:
        raise RestrictionError(f"thomae_step needs a positive integer first upper parameter, got {a}")
    s = d + e - a - b - c
    n = int(a)
    num = pochhammer(e - n, n)
    den = pochhammer(s, n)
    if den == 0:
        raise PoleError(f"Thomae prefactor of {f} has a pole")
    return F32Params((a, d - b, d - c), (d, d + e - b - c)), num / den


def _gamma_int(v: Fraction) -> int:
    if v.denominator != 1 or v <= 0:
        raise RestrictionError(f"gamma argument {v} is not a positive integer")
    return factorial(int(v) - 1)


def orbit_ratio(f: F32Params, g: F32Params) -> Fraction:
    """F(f)/F(g) for two members of one Hardy orbit, via the shared invariant."""
    x = x_of_f32(f)
    if g.canonical() not in orbit(x, dedup=True):
        raise NotInOrbitError(f"{g} is not in the Thomae orbit of {f}")
    num = _gamma_int(f.excess) * _gamma_int(f.lower[0]) * _gamma_int(f.lower[1])
    den = _gamma_int(g.excess) * _gamma_int(g.lower[0]) * _gamma_int(g.lower[1])
    return Fraction(num, den)
