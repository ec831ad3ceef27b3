"""Exact grid search for rational-multiple relations between series values.

Two values r1 + z1*zeta2 and r2 + z2*zeta2 with z1, z2 != 0 are rational
multiples of each other iff r1/z1 == r2/z2 (zeta2 is irrational), so tuples are
bucketed by that key and pairs are only formed inside a bucket.
"""

from __future__ import annotations

import io
import itertools
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import BudgetExceeded, DomainError, FormatError, UnmappableError
from .exact_arith import Zeta2Number
from .params import F32Params, IntegralParams
from .thomae_group import phi_related, t_related
from .zeta2_exact import eval_3f2_exact, eval_integral_exact, integral_form

__all__ = [
    "RATIONAL",
    "HEADER",
    "RelationRecord",
    "SearchSpec",
    "classify",
    "enumerate_tuples",
    "grid_search",
    "parse_tie",
    "ratio_key",
    "read_records",
    "write_records",
]

HEADER = "#zeta2-hyperlab v1"
TEMPLATES = ("integral", "3f2")
CLASSES = ("t_explained", "phi_explained", "exotic", "rational_pair")
COORDS = {"integral": ("h", "i", "j", "k", "l"), "3f2": ("a", "b", "c", "d", "e")}


class _Rational:
    """Marker key for values with no zeta2 component."""

    def __repr__(self) -> str:
        return "RATIONAL"


RATIONAL = _Rational()


def ratio_key(v: Zeta2Number):
    return RATIONAL if v.z == 0 else v.r / v.z


@dataclass(frozen=True)
class RelationRecord:
    template: str
    p: Tuple[int, ...]
    q: Tuple[int, ...]
    ratio: Fraction
    classification: str = "exotic"

    def line(self) -> str:
        p = "[" + ",".join(map(str, self.p)) + "]"
        q = "[" + ",".join(map(str, self.q)) + "]"
        ratio = f"{self.ratio.numerator}/{self.ratio.denominator}"
        return f"REL\t{self.template}\t{p}\t{q}\t{ratio}\t{self.classification}"


# --- tuple enumeration ---------------------------------------------------------------


_TIE_RE = re.compile(r"^\s*([a-e])\s*=\s*(.+)$")


def parse_tie(text: str) -> Tuple[str, Tuple[Tuple[int, Union[str, int]], ...]]:
    """``d=a+1`` -> ("d", ((1, "a"), (1, 1))); terms are coordinates or integers."""
    m = _TIE_RE.match(text)
    if not m:
        raise FormatError(f"bad tie {text!r}; expected like d=a+1 or e=b+c")
    target, rhs = m.group(1), m.group(2).replace(" ", "")
    terms = []
    for sign, tok in re.findall(r"([+-]?)([a-e]|\d+)", rhs):
        s = -1 if sign == "-" else 1
        terms.append((s, int(tok) if tok.isdigit() else tok))
    if not terms or "".join(f"{'-' if s < 0 else '+'}{t}" for s, t in terms).lstrip("+") != rhs.lstrip("+"):
        raise FormatError(f"bad tie {text!r}; expected like d=a+1 or e=b+c")
    if any(t == target for _, t in terms):
        raise FormatError(f"tie {text!r} refers to its own target")
    return target, tuple(terms)


@dataclass(frozen=True)
class SearchSpec:
    template: str
    ranges: Tuple[Tuple[int, int], ...]
    ties: Tuple[str, ...] = ()
    pair_budget: int = 1_000_000
    include_rational: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.template not in TEMPLATES:
            raise DomainError(f"template must be one of {', '.join(TEMPLATES)}")
        if len(self.ranges) != 5:
            raise DomainError("need an inclusive range for each of the five coordinates")
        for lo, hi in self.ranges:
            if lo > hi:
                raise DomainError(f"empty range {lo}..{hi}")
        if self.ties and self.template != "3f2":
            raise DomainError("ties are only supported for the 3f2 template")
        for t in self.ties:
            parse_tie(t)

    @classmethod
    def uniform(cls, template: str, hi: int, lo: Optional[int] = None, **kw) -> "SearchSpec":
        if lo is None:
            lo = 0 if template == "integral" else 1
        return cls(template, ((lo, hi),) * 5, **kw)


def _admissible_3f2(t: Tuple[int, ...]) -> Optional[F32Params]:
    if any(v <= 0 for v in t):
        return None
    f = F32Params(t[:3], t[3:]).canonical()
    try:
        integral_form(f)
    except UnmappableError:
        return None
    return f


def enumerate_tuples(spec: SearchSpec) -> List[Tuple[int, ...]]:
    """All admissible tuples of the grid, sorted and free of trivial-symmetry copies."""
    names = COORDS[spec.template]
    ties = dict(parse_tie(t) for t in spec.ties)
    free = [n for n in names if n not in ties]
    pos = {n: idx for idx, n in enumerate(names)}
    out = set()
    for combo in itertools.product(*(range(spec.ranges[pos[n]][0], spec.ranges[pos[n]][1] + 1) for n in free)):
        values = dict(zip(free, combo))
        pending = dict(ties)
        while pending:
            progressed = False
            for target, terms in list(pending.items()):
                if all(isinstance(t, int) or t in values for _, t in terms):
                    values[target] = sum(s * (t if isinstance(t, int) else values[t]) for s, t in terms)
                    del pending[target]
                    progressed = True
            if not progressed:
                raise FormatError("ties are circular")
        t = tuple(values[n] for n in names)
        if any(not (spec.ranges[pos[n]][0] <= values[n] <= spec.ranges[pos[n]][1]) for n in ties):
            continue
        if spec.template == "integral":
            out.add(t)
        else:
            f = _admissible_3f2(t)
            if f is not None:
                out.add(tuple(int(v) for v in f.as_tuple()))
    return sorted(out)


def _value(template: str, t: Tuple[int, ...]) -> Zeta2Number:
    if template == "integral":
        return eval_integral_exact(IntegralParams(*t))
    return eval_3f2_exact(F32Params(t[:3], t[3:]))


def _evaluate_slice(args) -> List[Tuple[Tuple[int, ...], Fraction, Fraction]]:
    template, tuples = args
    out = []
    for t in tuples:
        v = _value(template, t)
        out.append((t, v.r, v.z))
    return out


def _evaluate_all(spec: SearchSpec, tuples: Sequence[Tuple[int, ...]]):
    if spec.workers <= 1 or len(tuples) < 64:
        return _evaluate_slice((spec.template, tuples))
    n = spec.workers * 4
    slices = [(spec.template, tuples[i::n]) for i in range(n)]
    results = []
    with ProcessPoolExecutor(max_workers=spec.workers) as pool:
        for part in pool.map(_evaluate_slice, slices):
            results.extend(part)
    results.sort(key=lambda item: item[0])
    return results


def _integral_of(template: str, t: Tuple[int, ...]) -> IntegralParams:
    if template == "integral":
        return IntegralParams(*t)
    return integral_form(F32Params(t[:3], t[3:]))[0]


def classify(rec: RelationRecord) -> RelationRecord:
    """t_explained, phi_explained or exotic, from the integral forms of p and q."""
    if rec.classification == "rational_pair":
        return rec
    p = _integral_of(rec.template, rec.p)
    q = _integral_of(rec.template, rec.q)
    if t_related(p, q):
        cls = "t_explained"
    elif phi_related(p, q):
        cls = "phi_explained"
    else:
        cls = "exotic"
    return RelationRecord(rec.template, rec.p, rec.q, rec.ratio, cls)


def grid_search(spec: SearchSpec) -> List[RelationRecord]:
    """All rational-multiple pairs on the grid, in lexicographic (p, q) order."""
    tuples = enumerate_tuples(spec)
    values = _evaluate_all(spec, tuples)
    buckets: Dict[object, List[Tuple[Tuple[int, ...], Fraction]]] = {}
    for t, r, z in values:
        key = RATIONAL if z == 0 else r / z
        buckets.setdefault(key, []).append((t, z))
    pairs = []
    for key, members in buckets.items():
        if key is RATIONAL and not spec.include_rational:
            continue
        for (tp, zp), (tq, zq) in itertools.combinations(members, 2):
            pairs.append((tp, tq, zp, zq, key is RATIONAL))
    pairs.sort(key=lambda item: (item[0], item[1]))
    records = []
    for tp, tq, zp, zq, rational in pairs:
        if len(records) >= spec.pair_budget:
            raise BudgetExceeded(f"pair budget {spec.pair_budget} reached ({len(pairs)} pairs found)",
                                 partial=records)
        if rational:
            records.append(RelationRecord(spec.template, tp, tq, _rational_ratio(spec.template, tp, tq),
                                          "rational_pair"))
        else:
            records.append(classify(RelationRecord(spec.template, tp, tq, zp / zq)))
    return records


def _rational_ratio(template, tp, tq) -> Fraction:
    vp, vq = _value(template, tp), _value(template, tq)
    return vp.r / vq.r if vq.r else Fraction(0)


# --- records file ---------------------------------------------------------------------


def write_records(records: Iterable[RelationRecord], destination) -> None:
    """Write to a path or a text stream."""
    text = HEADER + "\n" + "".join(rec.line() + "\n" for rec in records)
    if isinstance(destination, (str, Path)):
        Path(destination).write_text(text, encoding="utf-8")
    else:
        destination.write(text)


_TUPLE_RE = re.compile(r"^\[(-?\d+(?:,-?\d+){4})\]$")
_RATIO_RE = re.compile(r"^-?\d+/\d+$|^-?\d+$")


def _parse_line(line: str, lineno: int) -> RelationRecord:
    fields = line.split("\t")
    if len(fields) != 6 or fields[0] != "REL":
        raise FormatError(f"line {lineno}: expected 6 tab-separated fields starting with REL")
    _, template, p, q, ratio, cls = fields
    if template not in TEMPLATES:
        raise FormatError(f"line {lineno}: unknown template {template!r}")
    tuples = []
    for name, text in (("p", p), ("q", q)):
        m = _TUPLE_RE.match(text)
        if not m:
            raise FormatError(f"line {lineno}: bad {name} tuple {text!r}")
        tuples.append(tuple(int(v) for v in m.group(1).split(",")))
    if not _RATIO_RE.match(ratio) or ratio.endswith("/0"):
        raise FormatError(f"line {lineno}: bad ratio {ratio!r}")
    if cls not in CLASSES:
        raise FormatError(f"line {lineno}: unknown classification {cls!r}")
    return RelationRecord(template, tuples[0], tuples[1], Fraction(ratio), cls)


def read_records(source) -> List[RelationRecord]:
    """Read from a path or a text stream; blank lines and the header are skipped."""
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source.read()
    records = []
    for lineno, line in enumerate(io.StringIO(text), start=1):
        line = line.rstrip("\n")
        if not line.strip():
            continue
        if line.startswith("#"):
            if lineno == 1 and line != HEADER:
                raise FormatError(f"line 1: unsupported header {line!r}")
            continue
        records.append(_parse_line(line, lineno))
    return records
