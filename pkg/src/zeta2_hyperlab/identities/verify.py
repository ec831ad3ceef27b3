"""Exact and numeric verification of catalogue identities."""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..errors import (
    DivergentSeries,
    DomainError,
    InadmissibleInstance,
    PoleError,
    RestrictionError,
    UnmappableError,
)
from ..exact_arith import Zeta2Number, format_rational, pochhammer
from ..hyper_numeric import DEFAULT_PRECISION, NumericValue, PfqSpec, eval_pfq
from ..params import F32Params
from ..zeta2_exact import eval_3f2_exact
from .catalogue import IdentityEntry, get_entry

Value = Union[Zeta2Number, NumericValue]
Series = Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...], Fraction]

NUMERIC_MARGIN = Fraction(1, 8)


@dataclass
class VerificationReport:
    id: str
    assignment: Dict[str, object]
    mode: str
    lhs_value: Optional[Value]
    rhs_value: Optional[Value]
    verdict: str
    slack: Fraction = Fraction(0)
    bound: Fraction = Fraction(0)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def assignment_str(self) -> str:
        if not self.assignment:
            return "-"
        parts = []
        for k, v in self.assignment.items():
            parts.append(f"{k}={format_rational(v) if isinstance(v, Fraction) else v}")
        return ",".join(parts)

    def line(self) -> str:
        if self.mode == "numeric":
            slack = f"{float(self.slack):.3e}<={float(self.bound):.3e}"
        else:
            slack = format_rational(self.slack)
        return f"VERIFY {self.id} {self.assignment_str()} {self.mode} {self.verdict} {slack}"


# --- gamma ratios ---------------------------------------------------------------


def _is_pole(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


def gamma_ratio(num: Sequence[Fraction], den: Sequence[Fraction]) -> Fraction:
    """prod Gamma(num) / prod Gamma(den) when it reduces to Pochhammer products.

    Arguments are paired within classes of equal fractional part; a leftover
    positive integer argument is a factorial.  Anything else would need a
    transcendental gamma value and raises RestrictionError.
    """
    for x in num:
        if _is_pole(x):
            raise PoleError(f"Gamma({format_rational(x)}) in a numerator")
    groups: Dict[Fraction, Tuple[list, list]] = defaultdict(lambda: ([], []))
    for x in num:
        groups[x - (x.numerator // x.denominator)][0].append(x)
    for y in den:
        groups[y - (y.numerator // y.denominator)][1].append(y)
    result = Fraction(1)
    for frac, (ns, ds) in sorted(groups.items()):
        ns, ds = sorted(ns), sorted(ds)
        while ns and ds:
            x, y = ns.pop(), ds.pop()
            if _is_pole(y):
                return Fraction(0)
            result *= pochhammer(y, int(x - y))
        if frac != 0 and (ns or ds):
            raise RestrictionError("gamma ratio has unpaired non-integral arguments")
        for x in ns:
            result *= factorial(int(x) - 1)
        for y in ds:
            if _is_pole(y):
                return Fraction(0)
            result /= factorial(int(y) - 1)
    return result


# --- series evaluation -----------------------------------------------------------


def _excess(series: Series) -> Fraction:
    up, lo, _ = series
    return sum(lo, Fraction(0)) - sum(up, Fraction(0))


def _terminating(series: Series) -> Optional[int]:
    ns = [-int(a) for a in series[0] if _is_pole(a)]
    return min(ns) if ns else None


def check_series(series: Series, margin: Fraction = Fraction(0)) -> None:
    """Raise InadmissibleInstance unless the series is well defined and convergent."""
    up, lo, z = series
    stop = _terminating(series)
    for b in lo:
        if _is_pole(b) and (stop is None or -b < stop):
            raise InadmissibleInstance(f"lower parameter {format_rational(b)} is a non-positive integer")
    if stop is not None:
        return
    if abs(z) > 1:
        raise InadmissibleInstance(f"argument {format_rational(z)} outside the unit disc")
    if z == 1 and _excess(series) <= margin:
        raise InadmissibleInstance(f"parameter excess {format_rational(_excess(series))} too small")
    if z == -1 and _excess(series) <= margin - 1:
        raise InadmissibleInstance(f"parameter excess {format_rational(_excess(series))} too small at -1")


def _cancel(up, lo):
    up, lo = list(up), list(lo)
    for x in list(lo):
        if x in up:
            up.remove(x)
            lo.remove(x)
    return up, lo


def exact_series(series: Series) -> Zeta2Number:
    """Exact value of an integral-parameter series, or InadmissibleInstance."""
    up, lo, z = series
    stop = _terminating(series)
    if stop is not None:
        total, t = Fraction(0), Fraction(1)
        for k in range(stop + 1):
            total += t
            num = z
            for a in up:
                num *= a + k
            den = Fraction(k + 1)
            for b in lo:
                den *= b + k
            t = t * num / den
        return Zeta2Number(total, 0)
    if z != 1:
        raise InadmissibleInstance("exact evaluation needs argument 1")
    if any(v.denominator != 1 for v in up + lo):
        raise InadmissibleInstance("exact evaluation needs integral parameters")
    up, lo = _cancel(up, lo)
    if len(up) == 3:
        f = F32Params(tuple(up), tuple(lo))
    elif len(up) == 2:
        # pad a 2F1 with a cancelling pair that makes the integral map valid
        pad = max(up) + 1
        f = F32Params((up[0], up[1], pad), (lo[0], pad))
    else:
        raise InadmissibleInstance(f"no exact evaluator for a {len(up)}F{len(lo)} series")
    try:
        return eval_3f2_exact(f)
    except UnmappableError as exc:
        raise InadmissibleInstance(str(exc)) from exc


def numeric_series(series: Series, precision: int) -> NumericValue:
    up, lo, z = series
    try:
        return eval_pfq(PfqSpec(up, lo, z), precision)
    except (DivergentSeries, DomainError) as exc:
        raise InadmissibleInstance(str(exc)) from exc


# --- instantiation ----------------------------------------------------------------


@dataclass
class _Instance:
    lhs: Series
    terms: List[Tuple[Fraction, Optional[Series]]]  # (coeff * gamma ratio, series)


def instantiate(entry: IdentityEntry, assignment: Mapping[str, Fraction], margin=Fraction(0)) -> _Instance:
    """Evaluate every template at the assignment and check admissibility."""
    values = entry.check_assignment(assignment)
    for name in entry.integer_params:
        if values[name].denominator != 1:
            raise RestrictionError(f"{entry.id} needs integral {name} for an exact gamma ratio")
    try:
        lhs = entry.lhs.instantiate(values)
        check_series(lhs, margin)
        terms = []
        for term in entry.rhs:
            coeff = term.coeff.evaluate(values)
            ratio = gamma_ratio(
                [g.evaluate(values) for g in term.gamma_num],
                [g.evaluate(values) for g in term.gamma_den],
            )
            series = None
            if term.series is not None:
                series = term.series.instantiate(values)
                check_series(series, margin)
            terms.append((coeff * ratio, series))
    except PoleError as exc:
        raise InadmissibleInstance(f"{entry.id}: {exc}") from exc
    return _Instance(lhs, terms)


def _entry(id_or_entry) -> IdentityEntry:
    return id_or_entry if isinstance(id_or_entry, IdentityEntry) else get_entry(id_or_entry)


def _notes(entry: IdentityEntry, values) -> List[str]:
    notes = []
    if entry.prefactor is not None:
        p = entry.prefactor.evaluate(values)
        text = f"prefactor {format_rational(p)}"
        if p != 0:
            text += f" (inverse {format_rational(1 / p)})"
        notes.append(text)
    return notes


def verify_exact(identity, assignment: Mapping[str, Fraction]) -> VerificationReport:
    entry = _entry(identity)
    inst = instantiate(entry, assignment)
    values = entry.check_assignment(assignment)
    lhs = exact_series(inst.lhs)
    rhs = Zeta2Number(0, 0)
    for factor, series in inst.terms:
        rhs = rhs + (exact_series(series) * factor if series is not None else Zeta2Number(factor, 0))
    diff = lhs - rhs
    slack = abs(diff.r) + abs(diff.z)
    verdict = "pass" if diff == Zeta2Number(0, 0) else "fail"
    return VerificationReport(entry.id, values, "exact", lhs, rhs, verdict, slack, Fraction(0), _notes(entry, values))


def verify_numeric(identity, assignment: Mapping[str, Fraction], precision: int = DEFAULT_PRECISION,
                   margin: Fraction = NUMERIC_MARGIN) -> VerificationReport:
    entry = _entry(identity)
    inst = instantiate(entry, assignment, margin)
    values = entry.check_assignment(assignment)
    lhs = numeric_series(inst.lhs, precision)
    est = Fraction(0)
    bound = Fraction(0)
    for factor, series in inst.terms:
        if series is None:
            est += factor
        else:
            v = numeric_series(series, precision)
            est += factor * v.estimate
            bound += abs(factor) * v.error_bound
    rhs = NumericValue(est, bound, precision)
    slack = abs(lhs.estimate - est)
    total = lhs.error_bound + bound
    verdict = "pass" if slack <= total else "fail"
    return VerificationReport(entry.id, values, "numeric", lhs, rhs, verdict, slack, total, _notes(entry, values))


def verify(identity, assignment: Mapping[str, Fraction], precision: int = DEFAULT_PRECISION,
           numeric: bool = False) -> VerificationReport:
    """Exact verification when every series is integral-evaluable, numeric otherwise."""
    if not numeric:
        try:
            return verify_exact(identity, assignment)
        except InadmissibleInstance:
            pass
    return verify_numeric(identity, assignment, precision)


# --- instance generation ------------------------------------------------------------


def _draw(rng: random.Random, lo: int, hi: int, max_den: int) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def instances(identity, count: int = 20, seed: int = 0, rational: bool = False,
              max_den: int = 4, max_tries: int = 20000) -> List[Dict[str, Fraction]]:
    """Deterministic admissible assignments drawn from the entry's sampling domain.

    Integral draws are used unless ``rational`` is set; integer-restricted
    parameters are always integral.
    """
    entry = _entry(identity)
    rng = random.Random(f"{entry.id}:{seed}:{rational}")
    out: List[Dict[str, Fraction]] = []
    seen = set()
    margin = NUMERIC_MARGIN if rational else Fraction(0)
    for _ in range(max_tries):
        if len(out) >= count:
            break
        values = {}
        for name in entry.free_params:
            lo, hi = entry.domain.get(name, (1, 8))
            den = 1 if (not rational or name in entry.integer_params or name == "z") else max_den
            values[name] = _draw(rng, lo, hi, den)
        key = tuple(values.values())
        if key in seen:
            continue
        seen.add(key)
        try:
            inst = instantiate(entry, values, margin)
        except (InadmissibleInstance, RestrictionError):
            continue
        if not rational:
            try:
                exact_series(inst.lhs)
                for _, series in inst.terms:
                    if series is not None:
                        exact_series(series)
            except InadmissibleInstance:
                continue
        out.append(values)
    return out


def sweep(identity, count: int = 20, seed: int = 0, precision: int = DEFAULT_PRECISION) -> List[VerificationReport]:
    """Verify ``count`` admissible instances: exact where possible, numeric to fill up."""
    entry = _entry(identity)
    reports: List[VerificationReport] = []
    if not entry.numeric_first:
        reports = [verify_exact(entry, a) for a in instances(entry, count, seed)]
    if len(reports) < count:
        for a in instances(entry, count - len(reports), seed, rational=True):
            reports.append(verify_numeric(entry, a, precision))
    return reports
