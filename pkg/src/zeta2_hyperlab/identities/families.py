"""Sato's six relations and the two infinite counter-example families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from ..exact_arith import Zeta2Number, format_rational
from ..params import IntegralParams
from ..thomae_group import phi_related, t_related
from ..zeta2_exact import eval_integral_exact
from .verify import VerificationReport


@dataclass(frozen=True)
class CounterexamplePair:
    lhs: IntegralParams
    rhs: IntegralParams
    factor: Fraction
    family: str


# (tag, lhs, rhs, factor, stated common value of the lhs)
_SATO: Tuple[Tuple[str, tuple, tuple, int, str], ...] = (
    ("sato1", (1, 1, 1, 1, 1), (3, 1, 1, 2, 0), 1, "5 - 3*zeta2"),
    ("sato2", (3, 1, 2, 2, 1), (4, 2, 2, 3, 0), 1, "79/4 - 12*zeta2"),
    ("sato4", (3, 1, 2, 1, 1), (3, 3, 1, 3, 0), 1, "-59/12 + 3*zeta2"),
    ("sato5", (3, 2, 2, 2, 1), (5, 1, 3, 2, 1), 1, "-148/9 + 10*zeta2"),
    ("sato6", (3, 0, 3, 1, 1), (3, 3, 1, 2, 1), 9, "-59/4 + 9*zeta2"),
    ("sato3", (3, 1, 3, 1, 0), (3, 2, 1, 2, 0), 1, "-29/18 + zeta2"),
)


def sato_pairs() -> List[Tuple[CounterexamplePair, Zeta2Number]]:
    return [
        (CounterexamplePair(IntegralParams(*p), IntegralParams(*q), Fraction(f), tag), Zeta2Number.parse(v))
        for tag, p, q, f, v in _SATO
    ]


def sato_suite() -> List[VerificationReport]:
    """Each report checks the stated value and the cross-equality with its factor."""
    reports = []
    for pair, stated in sato_pairs():
        lhs = eval_integral_exact(pair.lhs)
        rhs = eval_integral_exact(pair.rhs)
        diff = lhs - rhs * pair.factor
        ok = lhs == stated and diff == Zeta2Number(0, 0)
        assignment = {"lhs": f"I{pair.lhs}", "rhs": f"I{pair.rhs}", "factor": pair.factor}
        notes = [f"I{pair.lhs} = {lhs}", f"I{pair.rhs} = {rhs}", f"stated {stated}"]
        reports.append(VerificationReport(pair.family, assignment, "exact", lhs, rhs * pair.factor,
                                          "pass" if ok else "fail", abs(diff.r) + abs(diff.z), Fraction(0), notes))
    return reports


def family_A(alpha: int) -> CounterexamplePair:
    """I(2a-1,2a-1,a,2a-1,a) = I(2a+1,2a-1,a,2a,a-1)."""
    if alpha < 1:
        raise ValueError("family A needs alpha >= 1")
    a = alpha
    return CounterexamplePair(
        IntegralParams(2 * a - 1, 2 * a - 1, a, 2 * a - 1, a),
        IntegralParams(2 * a + 1, 2 * a - 1, a, 2 * a, a - 1),
        Fraction(1), "A",
    )


def family_B(alpha: int) -> CounterexamplePair:
    """I(a^2-1,a-1,a^2-a+1,a-1,0) = (a-1) I(a^2-1,a,a^2-a-1,a,0)."""
    if alpha < 2:
        raise ValueError("family B needs alpha >= 2")
    a = alpha
    return CounterexamplePair(
        IntegralParams(a * a - 1, a - 1, a * a - a + 1, a - 1, 0),
        IntegralParams(a * a - 1, a, a * a - a - 1, a, 0),
        Fraction(a - 1), "B",
    )


def verify_family(pair: CounterexamplePair) -> VerificationReport:
    """pass: equal values and not related by T or Phi; explained: equal but Phi-related."""
    lhs = eval_integral_exact(pair.lhs)
    rhs = eval_integral_exact(pair.rhs) * pair.factor
    diff = lhs - rhs
    equal = diff == Zeta2Number(0, 0)
    t_rel = t_related(pair.lhs, pair.rhs)
    phi_rel = phi_related(pair.lhs, pair.rhs)
    if not equal:
        verdict = "fail"
    elif t_rel or phi_rel:
        verdict = "explained"
    else:
        verdict = "pass"
    assignment = {"lhs": f"I{pair.lhs}", "rhs": f"I{pair.rhs}", "factor": pair.factor}
    notes = [f"value {lhs}", f"t_related {str(t_rel).lower()}", f"phi_related {str(phi_rel).lower()}"]
    return VerificationReport(f"family{pair.family}", assignment, "exact", lhs, rhs, verdict,
                              abs(diff.r) + abs(diff.z), Fraction(0), notes)


def describe(pair: CounterexamplePair) -> str:
    return f"I{pair.lhs} = {format_rational(pair.factor)} * I{pair.rhs}"
