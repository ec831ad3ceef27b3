"""The three coordinate systems: integral (h..l), series (a,b,c;d,e) and Hardy (x1..x5)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import DomainError, FormatError
from .exact_arith import as_rational, format_rational

__all__ = ["IntegralParams", "F32Params", "XParams", "parse_tuple"]


class IntegralParams(NamedTuple):
    """Exponents of the double integral over the unit square

        x^h (1-x)^i y^k (1-y)^j / (1-xy)^(i+j-l+1).
    """

    h: int
    i: int
    j: int
    k: int
    l: int

    @classmethod
    def of(cls, *values) -> "IntegralParams":
        if len(values) == 1 and not isinstance(values[0], int):
            values = tuple(values[0])
        if len(values) != 5:
            raise DomainError(f"need five integral parameters, got {len(values)}")
        out = []
        for v in values:
            v = as_rational(v)
            if v.denominator != 1 or v < 0:
                raise DomainError(f"integral parameters must be non-negative integers, got {v}")
            out.append(int(v))
        return cls(*out)

    def pair_sums(self) -> tuple:
        h, i, j, k, l = self
        return (h + i, i + j, j + k, k + l, l + h)

    def linear_combos(self) -> tuple:
        """The five combinations j+k-h, k+l-i, l+h-j, h+i-k, i+j-l."""
        h, i, j, k, l = self
        return (j + k - h, k + l - i, l + h - j, h + i - k, i + j - l)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self) + ")"


def _frac_tuple(values, n, what) -> tuple:
    values = tuple(as_rational(v) for v in values)
    if len(values) != n:
        raise DomainError(f"{what} needs {n} entries, got {len(values)}")
    return values


@dataclass(frozen=True, order=True)
class F32Params:
    """Upper triple and lower pair of a 3F2 series at unit argument."""

    upper: tuple
    lower: tuple

    def __post_init__(self):
        object.__setattr__(self, "upper", _frac_tuple(self.upper, 3, "upper"))
        object.__setattr__(self, "lower", _frac_tuple(self.lower, 2, "lower"))

    @classmethod
    def of(cls, a, b, c, d, e) -> "F32Params":
        return cls((a, b, c), (d, e))

    @property
    def excess(self) -> Fraction:
        """d + e - a - b - c; the series converges iff this is positive."""
        return sum(self.lower) - sum(self.upper)

    def canonical(self) -> "F32Params":
        return F32Params(tuple(sorted(self.upper)), tuple(sorted(self.lower)))

    def as_tuple(self) -> tuple:
        return self.upper + self.lower

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.as_tuple())

    def is_convergent(self) -> bool:
        """Convergent and well defined: positive excess, no lower parameter in Z<=0."""
        if any(v.denominator == 1 and v <= 0 for v in self.lower):
            return False
        return self.excess > 0

    def __str__(self) -> str:
        u = ",".join(format_rational(v) for v in self.upper)
        w = ",".join(format_rational(v) for v in self.lower)
        return f"[{u};{w}]"

    @classmethod
    def parse(cls, text: str) -> "F32Params":
        m = re.fullmatch(r"\s*\[([^;\]]*);([^;\]]*)\]\s*", text)
        if not m:
            raise FormatError(f"not a 3F2 array: {text!r}")
        up = [as_rational(t) for t in m.group(1).split(",")]
        lo = [as_rational(t) for t in m.group(2).split(",")]
        return cls(tuple(up), tuple(lo))


@dataclass(frozen=True)
class XParams:
    """Hardy coordinates x1..x5; ``s`` is always derived, never stored."""

    x: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", _frac_tuple(self.x, 5, "x"))

    @property
    def s(self) -> Fraction:
        x1, x2, x3, x4, x5 = self.x
        return x1 + x2 + x3 - x4 - x5

    def doubled(self) -> tuple:
        return tuple(2 * v for v in self.x)

    def __str__(self) -> str:
        xs = ",".join(format_rational(v) for v in self.x)
        return f"x=({xs}) s={format_rational(self.s)}"


def parse_tuple(text: str, n: int | None = None) -> tuple:
    """Parse ``1,2,3`` or ``[1,2,3]`` or ``(1,2,3)`` into a tuple of Fractions."""
    body = text.strip().strip("[]()")
    if not body:
        raise FormatError(f"empty tuple: {text!r}")
    values = tuple(as_rational(t) for t in body.split(","))
    if n is not None and len(values) != n:
        raise FormatError(f"expected {n} entries in {text!r}")
    return values


def integral_tuple_str(values: Sequence) -> str:
    return "[" + ",".join(format_rational(as_rational(v)) for v in values) + "]"
