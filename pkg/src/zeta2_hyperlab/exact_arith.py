"""Exact rational scalars, Pochhammer symbols, harmonic numbers and the ring Q + Q*zeta(2)."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import FormatError, PoleError

Rational = Fraction
RationalLike = Union[int, Fraction]

__all__ = [
    "Rational",
    "Zeta2Number",
    "as_rational",
    "binomial",
    "factorial",
    "format_rational",
    "harmonic",
    "parse_rational",
    "pochhammer",
]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a reduced Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise FormatError(f"not a rational literal: {text!r}")
    value = Fraction(text)
    return value


def format_rational(x: Fraction) -> str:
    """``num/den``, or just ``num`` for integers."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def pochhammer(x: RationalLike, n: int) -> Fraction:
    """Rising factorial Gamma(x+n)/Gamma(x) for any integer n.

    For n < 0 this is 1/((x-1)(x-2)...(x+n)), which has a pole when one of
    those factors vanishes.
    """
    x = as_rational(x)
    result = Fraction(1)
    if n >= 0:
        for t in range(n):
            result *= x + t
        return result
    denom = Fraction(1)
    for t in range(1, -n + 1):
        denom *= x - t
    if denom == 0:
        raise PoleError(f"pochhammer({x}, {n}) has a pole")
    return result / denom


def harmonic(m: int, p: int = 1) -> Fraction:
    """Generalised harmonic number sum_{t=1}^{m} 1/t**p."""
    if m < 0:
        raise ValueError("harmonic numbers need m >= 0")
    if p < 1:
        raise ValueError("harmonic numbers need p >= 1")
    return _harmonic_table(p).get(m)


class _HarmonicTable:
    __slots__ = ("p", "values")

    def __init__(self, p: int):
        self.p = p
        self.values = [Fraction(0)]

    def get(self, m: int) -> Fraction:
        values = self.values
        while len(values) <= m:
            t = len(values)
            values.append(values[-1] + Fraction(1, t**self.p))
        return values[m]


@lru_cache(maxsize=None)
def _harmonic_table(p: int) -> _HarmonicTable:
    return _HarmonicTable(p)


def factorial(n: int) -> int:
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n (empty-sum convention)."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


_Z2_RE = re.compile(
    r"""^\s*
    (?:(?P<r>[+-]?\d+(?:/\d+)?)(?!\s*\*?\s*zeta2))?      # rational part
    \s*
    (?:(?P<sign>[+-])?\s*(?:(?P<z>\d+(?:/\d+)?)\s*\*\s*)?zeta2)?
    \s*$""",
    re.VERBOSE,
)


@dataclass(frozen=True)
class Zeta2Number:
    """The exact number ``r + z*zeta(2)`` with rational r and z."""

    r: Fraction = Fraction(0)
    z: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "r", as_rational(self.r))
        object.__setattr__(self, "z", as_rational(self.z))

    @property
    def is_rational(self) -> bool:
        return self.z == 0

    def __add__(self, other):
        if isinstance(other, Zeta2Number):
            return Zeta2Number(self.r + other.r, self.z + other.z)
        if isinstance(other, (int, Fraction)):
            return Zeta2Number(self.r + other, self.z)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Zeta2Number(-self.r, -self.z)

    def __sub__(self, other):
        if isinstance(other, (Zeta2Number, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Zeta2Number(self.r * other, self.z * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("Zeta2Number division by zero")
            return Zeta2Number(self.r / other, self.z / other)
        return NotImplemented

    def __str__(self) -> str:
        r, z = self.r, self.z
        if z == 0:
            return format_rational(r)
        mag = abs(z)
        zterm = "zeta2" if mag == 1 else f"{format_rational(mag)}*zeta2"
        if r == 0:
            return zterm if z > 0 else f"-{zterm}"
        op = "+" if z > 0 else "-"
        return f"{format_rational(r)} {op} {zterm}"

    def __repr__(self) -> str:
        return f"Zeta2Number({self})"

    @classmethod
    def parse(cls, text: str) -> "Zeta2Number":
        """Inverse of ``str``: accepts ``5 - 3*zeta2``, ``1/36``, ``-zeta2`` and so on."""
        m = _Z2_RE.match(text)
        if not m or not text.strip() or (m.group("r") is None and "zeta2" not in text):
            raise FormatError(f"not a zeta2 number: {text!r}")
        r = Fraction(m.group("r")) if m.group("r") else Fraction(0)
        z = Fraction(0)
        if "zeta2" in text:
            z = Fraction(m.group("z")) if m.group("z") else Fraction(1)
            if m.group("sign") == "-":
                z = -z
            elif m.group("sign") is None and m.group("r") is not None:
                raise FormatError(f"missing operator before zeta2 in {text!r}")
        return cls(r, z)
