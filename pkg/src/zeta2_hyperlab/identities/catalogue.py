"""Declarative catalogue of two-term and remainder-term hypergeometric identities.

An identity reads ``lhs = sum(term)``, where each term is

    coeff * prod Gamma(num) / prod Gamma(den) * series   (series may be absent).

Every parameter, coefficient and gamma argument is a sympy expression in the
entry's free symbols, so instantiation is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

import sympy

from ..errors import DomainError, PoleError

SYMBOL_NAMES = (
    "alpha", "beta", "gamma", "delta",
    "a", "b", "c", "d", "e",
    "a1", "a2", "b1", "b2", "c1", "c2",
    "A1", "A2", "A3", "B1", "B2", "z",
)
# explicit Symbols keep sympify from resolving gamma/beta to special functions
_SYMBOLS = {name: sympy.Symbol(name) for name in SYMBOL_NAMES}


def _expr(text) -> sympy.Expr:
    return sympy.sympify(text, locals=_SYMBOLS, rational=True)


def _to_fraction(v) -> Fraction:
    if not v.is_Rational:
        raise PoleError(f"expression evaluates to {v}")
    return Fraction(int(v.p), int(v.q))


@dataclass(frozen=True)
class Expr:
    """A rational expression in free symbols, evaluated exactly."""

    source: str
    expr: sympy.Expr = field(compare=False, repr=False)

    @classmethod
    def of(cls, text) -> "Expr":
        return cls(str(text), _expr(text))

    def evaluate(self, assignment: Mapping[str, Fraction]) -> Fraction:
        subs = {_SYMBOLS[k]: sympy.Rational(v.numerator, v.denominator) for k, v in assignment.items()}
        return _to_fraction(self.expr.xreplace(subs))

    @property
    def symbols(self) -> set:
        return {s.name for s in self.expr.free_symbols}

    def __str__(self) -> str:
        return str(self.expr)


@dataclass(frozen=True)
class SeriesTemplate:
    upper: Tuple[Expr, ...]
    lower: Tuple[Expr, ...]
    argument: Expr

    def instantiate(self, assignment) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...], Fraction]:
        return (
            tuple(p.evaluate(assignment) for p in self.upper),
            tuple(p.evaluate(assignment) for p in self.lower),
            self.argument.evaluate(assignment),
        )

    def __str__(self) -> str:
        p, q = len(self.upper), len(self.lower)
        up = ", ".join(str(u) for u in self.upper)
        lo = ", ".join(str(w) for w in self.lower)
        return f"{p}F{q}[{up}; {lo}; {self.argument}]"


@dataclass(frozen=True)
class Term:
    coeff: Expr
    gamma_num: Tuple[Expr, ...] = ()
    gamma_den: Tuple[Expr, ...] = ()
    series: Optional[SeriesTemplate] = None


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    free_params: Tuple[str, ...]
    lhs: SeriesTemplate
    rhs: Tuple[Term, ...]
    description: str = ""
    integer_params: Tuple[str, ...] = ()
    """Parameters that must be integral so every gamma ratio is a Pochhammer product."""
    domain: Dict[str, tuple] = field(default_factory=dict)
    """Sampling ranges ``name -> (lo, hi)`` used by the instance generator."""
    numeric_first: bool = False
    """Sweep with rational instances (the exact evaluator rarely applies)."""

    @property
    def prefactor(self) -> Optional[Expr]:
        """Coefficient of the single right-hand series, for two-term identities."""
        if len(self.rhs) == 1 and self.rhs[0].series is not None and not self.rhs[0].gamma_num:
            return self.rhs[0].coeff
        return None

    def check_assignment(self, assignment: Mapping[str, Fraction]) -> Dict[str, Fraction]:
        missing = [p for p in self.free_params if p not in assignment]
        extra = [p for p in assignment if p not in self.free_params]
        if missing or extra:
            raise DomainError(
                f"{self.id} takes parameters {', '.join(self.free_params)}"
                + (f"; missing {', '.join(missing)}" if missing else "")
                + (f"; unknown {', '.join(extra)}" if extra else "")
            )
        return {k: Fraction(assignment[k]) for k in self.free_params}


def _series(upper, lower, argument="1") -> SeriesTemplate:
    return SeriesTemplate(tuple(Expr.of(u) for u in upper), tuple(Expr.of(w) for w in lower), Expr.of(argument))


def _term(coeff, series=None, num=(), den=()) -> Term:
    return Term(Expr.of(coeff), tuple(Expr.of(g) for g in num), tuple(Expr.of(g) for g in den), series)


def _entry(id, params, lhs, rhs, description, integer_params=(), domain=None, numeric_first=False) -> IdentityEntry:
    return IdentityEntry(id, tuple(params), lhs, tuple(rhs), description, tuple(integer_params),
                         dict(domain or {}), numeric_first)


def _build() -> Tuple[IdentityEntry, ...]:
    entries = []
    add = entries.append

    low_ab = ("2*alpha+beta+1", "2*beta+alpha+1")
    add(_entry(
        "exotique2", ("alpha", "beta", "gamma"),
        _series(("alpha+1", "beta+1", "gamma"), low_ab),
        [_term("2*(alpha+beta)/(2*(alpha+beta)-gamma)", _series(("alpha", "beta", "gamma"), low_ab))],
        "two-term relation escaping Thomae's group",
        domain={"alpha": (1, 5), "beta": (1, 5), "gamma": (1, 12)},
    ))
    add(_entry(
        "exotique", ("alpha", "beta"),
        _series(("alpha+1", "beta+1", "alpha+beta"), low_ab),
        [_term("2", _series(("alpha", "beta", "alpha+beta"), low_ab))],
        "the gamma = alpha + beta case of exotique2",
        domain={"alpha": (1, 6), "beta": (1, 6)},
    ))
    dd = "gamma + alpha*(alpha-gamma+1)/(beta-1)"
    add(_entry(
        "b12", ("alpha", "beta", "gamma"),
        _series(("alpha", "beta", "gamma"), ("alpha+1", f"{dd}+1")),
        [_term(
            "(alpha-beta+2)*(alpha+alpha**2-gamma-alpha*gamma+beta*gamma)"
            "/((alpha+1)*(2*alpha+alpha**2-alpha*beta-gamma-alpha*gamma+beta*gamma))",
            _series(("alpha+1", "beta-1", "gamma"), ("alpha+2", dd)),
        )],
        "contiguous-type relation with a rational lower parameter",
        domain={"alpha": (1, 8), "beta": (2, 5), "gamma": (1, 8)},
    ))
    add(_entry(
        "couplage", ("alpha",),
        _series(("2*alpha", "2*alpha", "2*alpha"), ("4*alpha", "3*alpha+1")),
        [_term("alpha*(2*alpha+1)/((3*alpha+1)*(4*alpha+1))",
               _series(("2*alpha+2", "2*alpha+1", "2*alpha+1"), ("4*alpha+2", "3*alpha+2")))],
        "a Thomae variation of exotique",
        domain={"alpha": (1, 30)},
    ))
    add(_entry(
        "b3", ("alpha",),
        _series(("alpha**2", "alpha**2", "alpha+1"), ("alpha**2+1", "alpha**2+alpha+1")),
        [_term("(alpha**3+1)/(alpha**2+1)",
               _series(("alpha**2+1", "alpha**2", "alpha"), ("alpha**2+2", "alpha**2+alpha")))],
        "b12 at alpha -> alpha^2, beta = alpha+1, gamma = alpha^2",
        domain={"alpha": (2, 24)},
    ))
    add(_entry(
        "id1", ("alpha",),
        _series(("alpha**2", "alpha+1", "alpha**2"), ("alpha**2+1", "alpha**2+alpha+1")),
        [_term("(alpha**3+1)/(alpha**2+1)",
               _series(("alpha**2+1", "alpha", "alpha**2"), ("alpha**2+2", "alpha**2+alpha")))],
        "grid-search identity, b12 family",
        domain={"alpha": (2, 24)},
    ))
    add(_entry(
        "id2", ("alpha",),
        _series(("alpha**2-alpha+1", "alpha", "alpha**2-alpha"), ("alpha**2-alpha+2", "alpha**2")),
        [_term("alpha/(alpha**2+1)",
               _series(("alpha**2-alpha+1", "alpha+1", "alpha**2-alpha+1"), ("alpha**2-alpha+2", "alpha**2+2")))],
        "grid-search identity, b6 family",
        domain={"alpha": (2, 24)},
    ))
    add(_entry(
        "id3", ("alpha",),
        _series(("6*alpha+1", "4*alpha+2", "3*alpha+1"), ("6*alpha+2", "7*alpha+3")),
        [_term("(3*alpha+2)/(3*alpha+3)",
               _series(("6*alpha+3", "4*alpha+2", "3*alpha+1"), ("6*alpha+4", "7*alpha+3")))],
        "grid-search identity, b10 family",
        domain={"alpha": (1, 24)},
    ))

    lhs_ad = _series(("a", "b", "c"), ("a+1", "d"))
    gauss_rest = (("d", "d-b-c+1"), ("d-b", "d-c"))
    add(_entry(
        "b11", ("a", "b", "c", "d"), lhs_ad,
        [
            _term("(a-b+1)*(a-b+2)*(a-c+1)*(d-1)/((a+1)*(b-1)*(a-d+2)*(a-d+1))",
                  _series(("a+1", "b-1", "c"), ("a+2", "d-1"))),
            _term("(1-a-a**2-b+c+a*c-b*c-d+b*d)/((b-1)*(a-d+2)*(a-d+1))", None, *gauss_rest),
        ],
        "contiguous relation with a gamma remainder",
        integer_params=("b",),
        domain={"a": (1, 10), "b": (2, 8), "c": (1, 8), "d": (2, 14)},
    ))
    add(_entry(
        "b5", ("a", "b", "c", "d"), lhs_ad,
        [
            _term("b*c*(a-d-1)*(a-d)/((a-b)*(a-c)*d*(d+1))", _series(("a", "b+1", "c+1"), ("a+1", "d+2"))),
            _term("a*(b*c+a*d-b*d-c*d)/((a-b)*(a-c))", None, ("d", "d-b-c+1"), ("d-b+1", "d-c+1")),
        ],
        "contiguous relation with a gamma remainder",
        integer_params=("b",),
        domain={"a": (1, 10), "b": (1, 8), "c": (1, 8), "d": (2, 14)},
    ))
    add(_entry(
        "b13", ("a", "b", "c", "d"), lhs_ad,
        [
            _term("(a-b+1)*(a-c+1)/((a+1)*(a-d+1))", _series(("a+1", "b", "c"), ("a+2", "d"))),
            _term("-1/(a-d+1)", None, *gauss_rest),
        ],
        "contiguous relation with a gamma remainder",
        integer_params=("b",),
        domain={"a": (1, 10), "b": (1, 8), "c": (1, 8), "d": (2, 14)},
    ))
    add(_entry(
        "b9", ("a", "b", "c", "d"), lhs_ad,
        [
            _term("(a-b+1)*(a-b+2)*(a-c+1)*(a-c+2)/((a+1)*(a+2)*(a-d+2)*(a-d+1))",
                  _series(("a+2", "b", "c"), ("a+3", "d"))),
            _term("-(3+5*a+2*a**2-b-a*b-c-a*c+b*c-d-a*d)/((a+1)*(a-d+2)*(a-d+1))", None, *gauss_rest),
        ],
        "iterated b13",
        integer_params=("b",),
        domain={"a": (1, 10), "b": (1, 8), "c": (1, 8), "d": (2, 14)},
    ))
    add(_entry(
        "b6", ("beta", "gamma", "delta"),
        _series(("beta+gamma-delta", "beta", "gamma"), ("beta+gamma-delta+1", "beta*gamma/delta")),
        [_term("(beta*gamma+delta-beta*delta-gamma*delta+delta**2)/(beta*gamma+delta)",
               _series(("beta+gamma-delta", "beta+1", "gamma+1"), ("beta+gamma-delta+1", "beta*gamma/delta+2")))],
        "two-term relation from b5",
        domain={"beta": (1, 8), "gamma": (1, 8), "delta": (1, 6)},
    ))
    db = "2*alpha-beta-gamma+beta*gamma/(alpha+1)+3"
    add(_entry(
        "b10", ("alpha", "beta", "gamma"),
        _series(("alpha", "beta", "gamma"), ("alpha+1", db)),
        [_term("(alpha+1)*(alpha-beta+2)*(alpha-gamma+2)"
               "/((alpha+2)*(3*alpha+alpha**2-beta-alpha*beta-gamma-alpha*gamma+beta*gamma+2))",
               _series(("alpha+2", "beta", "gamma"), ("alpha+3", db)))],
        "two-term relation from b9",
        domain={"alpha": (1, 12), "beta": (1, 12), "gamma": (1, 12)},
    ))
    add(_entry(
        "b14", ("a1", "a2", "c1", "c2"),
        _series(("a1*a2", "a1*c1+1", "a1*a2-c1*c2+1"), ("a1*a2+1", "a1*a2+a2*c2-c1*c2+2")),
        [_term("(a1*a2-a1*c1+1)*(a1*a2+a2*c2-c1*c2+1)/((a1*a2+1)*(a2*c2-c1*c2+1))",
               _series(("a1*a2+1", "a1*c1", "a1*a2-c1*c2+1"), ("a1*a2+2", "a1*a2+a2*c2-c1*c2+1")))],
        "integral parametrisation of b12",
        domain={"a1": (1, 4), "a2": (1, 4), "c1": (1, 4), "c2": (1, 4)},
    ))
    add(_entry(
        "b15", ("b1", "b2", "c1", "c2"),
        _series(("b1*b2+c1*c2-b1*c1", "b1*b2", "c1*c2"), ("b1*b2+c1*c2-b1*c1+1", "b2*c2")),
        [_term("(b1*b2*c1*c2+b1*c1-b1*b2*b1*c1-c1*c2*b1*c1+b1**2*c1**2)/(b1*b2*c1*c2+b1*c1)",
               _series(("b1*b2+c1*c2-b1*c1", "b1*b2+1", "c1*c2+1"), ("b1*b2+c1*c2-b1*c1+1", "b2*c2+2")))],
        "integral parametrisation of b6",
        domain={"b1": (1, 4), "b2": (1, 4), "c1": (1, 4), "c2": (1, 4)},
    ))
    add(_entry(
        "b16", ("b1", "b2", "c1", "c2"),
        _series(("b1*c1-1", "b1*b2", "c1*c2"), ("b1*c1", "2*b1*c1-b1*b2+b2*c2-c1*c2+1")),
        [_term("(b1*c1-b1*b2+1)*(b1*c1-c1*c2+1)/((b1*c1+1)*(b1*c1-b1*b2+b2*c2-c1*c2+1))",
               _series(("b1*c1+1", "b1*b2", "c1*c2"), ("b1*c1+2", "2*b1*c1-b1*b2+b2*c2-c1*c2+1")))],
        "integral parametrisation of b10",
        domain={"b1": (1, 4), "b2": (1, 4), "c1": (1, 4), "c2": (1, 4)},
    ))
    add(_entry(
        "thomae1", ("a", "b", "c", "d", "e"),
        _series(("a", "b", "c"), ("d", "e")),
        [_term("1", _series(("a", "d-b", "d-c"), ("d", "d+e-b-c")), ("e", "d+e-a-b-c"), ("e-a", "d+e-b-c"))],
        "Thomae's basic transformation",
        integer_params=("a",),
        domain={"a": (1, 6), "b": (1, 8), "c": (1, 8), "d": (1, 12), "e": (1, 12)},
    ))
    f76_up = ("a-1/2", "a/2+3/4", "b", "d/2", "d/2+1/2", "a/2-c/2", "a/2-c/2+1/2")
    f76_lo = ("a/2-1/4", "a-b+1/2", "a-d/2+1/2", "a-d/2", "a/2+c/2+1/2", "a/2+c/2")
    t_num = ("2*a", "2*a-2*b-d", "a-b+c", "a-d+c")
    t_den = ("2*a-2*b", "2*a-d", "a+c", "a-b-d+c")
    add(_entry(
        "T3240", ("a", "b", "c", "d"),
        _series(("b", "c", "d"), ("a", "a-b+c")),
        [_term("1", _series(f76_up, f76_lo), t_num, t_den)],
        "3F2 to very-well-poised 7F6",
        integer_params=("b",),
        domain={"a": (2, 8), "b": (1, 3), "c": (1, 6), "d": (1, 4)},
        numeric_first=True,
    ))
    add(_entry(
        "T3240_reverse", ("a", "b", "c", "d"),
        _series(f76_up, f76_lo),
        [_term("1", _series(("b", "c", "d"), ("a", "a-b+c")), t_den, t_num)],
        "very-well-poised 7F6 back to 3F2",
        integer_params=("b",),
        domain={"a": (2, 8), "b": (1, 3), "c": (1, 6), "d": (1, 4)},
        numeric_first=True,
    ))
    add(_entry(
        "gauss", ("a", "b", "c"),
        _series(("a", "b"), ("c",)),
        [_term("1", None, ("c", "c-a-b"), ("c-a", "c-b"))],
        "Gauss summation",
        domain={"a": (1, 8), "b": (1, 8), "c": (1, 20)},
    ))
    cparams = ("A1", "A2", "A3", "B1", "B2", "z")
    cdom = {"A1": (1, 6), "A2": (1, 6), "A3": (1, 6), "B1": (1, 10), "B2": (1, 10), "z": (1, 1)}
    base = _series(("A1", "A2", "A3"), ("B1", "B2"), "z")
    add(_entry(
        "C15", cparams, base,
        [
            _term("1", _series(("A1+1", "A2", "A3"), ("B1", "B2"), "z")),
            _term("-z*A2*A3/(B1*B2)", _series(("A1+1", "A2+1", "A3+1"), ("B1+1", "B2+1"), "z")),
        ],
        "contiguous relation", domain=cdom,
    ))
    add(_entry(
        "C27", cparams, base,
        [
            _term("(A1-A2-1)/(A1-1)", _series(("A1-1", "A2", "A3"), ("B1", "B2"), "z")),
            _term("A2/(A1-1)", _series(("A1-1", "A2+1", "A3"), ("B1", "B2"), "z")),
        ],
        "contiguous relation", domain=cdom,
    ))
    add(_entry(
        "C54", cparams, base,
        [
            _term("A2*(B1-A1)/((A2-A1)*B1)", _series(("A1", "A2+1", "A3"), ("B1+1", "B2"), "z")),
            _term("A1*(B1-A2)/((A1-A2)*B1)", _series(("A1+1", "A2", "A3"), ("B1+1", "B2"), "z")),
        ],
        "contiguous relation", domain=cdom,
    ))
    add(_entry(
        "C55", cparams, base,
        [
            _term("(1-A1+A2)*(B1-1)/((A1-1)*(1+A2-B1))", _series(("A1-1", "A2", "A3"), ("B1-1", "B2"), "z")),
            _term("A2*(B1-A1)/((A1-1)*(B1-A2-1))", _series(("A1-1", "A2+1", "A3"), ("B1", "B2"), "z")),
        ],
        "contiguous relation", domain=cdom,
    ))
    add(_entry(
        "sato3hyp", (),
        _series(("4", "2", "5"), ("6", "6")),
        [_term("5/9", _series(("4", "3", "4"), ("7", "5")))],
        "hypergeometric form of the sixth Sato relation",
    ))
    return tuple(entries)


_CATALOGUE: Optional[Tuple[IdentityEntry, ...]] = None


def catalogue() -> Tuple[IdentityEntry, ...]:
    global _CATALOGUE
    if _CATALOGUE is None:
        _CATALOGUE = _build()
    return _CATALOGUE


def get_entry(identity_id: str) -> IdentityEntry:
    for entry in catalogue():
        if entry.id == identity_id:
            return entry
    known = ", ".join(e.id for e in catalogue())
    raise KeyError(f"unknown identity {identity_id!r}; known: {known}")
