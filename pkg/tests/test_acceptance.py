"""Acceptance criteria, one test each.

Each criterion prints a single ``ACCEPT <n> <name>: PASS|FAIL ...`` line.  Run
under pytest (lines are collected in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import math
import random
import time
from fractions import Fraction
from itertools import product
from pathlib import Path

from zeta2_hyperlab.errors import InadmissibleInstance, UnmappableError
from zeta2_hyperlab.hyper_numeric import PfqSpec, eval_pfq, zeta2_to_numeric
from zeta2_hyperlab.identities import family_A, family_B, get_entry, sato_suite, sweep, verify_exact, verify_family, verify_numeric
from zeta2_hyperlab.identities.verify import instantiate
from zeta2_hyperlab.params import F32Params, parse_tuple
from zeta2_hyperlab.search import SearchSpec, grid_search
from zeta2_hyperlab.thomae_group import orbit, x_of_integral
from zeta2_hyperlab.zeta2_exact import eval_3f2_exact, eval_integral_exact, integral_form, is_irrational, zeta2_coefficient

GOLDEN = Path(__file__).parent / "golden"
RESULTS = []


def report(n, name, ok, detail):
    line = f"ACCEPT {n:>2} {name}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


# --- 1 ------------------------------------------------------------------------


def test_01_sato_suite():
    stated = ["5 - 3*zeta2", "79/4 - 12*zeta2", "-59/12 + 3*zeta2", "-148/9 + 10*zeta2", "-59/4 + 9*zeta2",
              "-29/18 + zeta2"]
    t0 = time.perf_counter()
    reports = sato_suite()
    elapsed = time.perf_counter() - t0
    values_ok = sorted(str(r.lhs_value) for r in reports) == sorted(stated)
    sato6 = next(r for r in reports if r.id == "sato6")
    factor_ok = sato6.assignment["factor"] == 9
    ok = all(r.passed for r in reports) and values_ok and factor_ok and elapsed < 1
    report(1, "sato suite", ok, f"{sum(r.passed for r in reports)}/6 exact, factor 9 {factor_ok}, {elapsed:.3f}s")


# --- 2 ------------------------------------------------------------------------


def test_02_orbit_goldens():
    bad = []
    for line in (GOLDEN / "orbits_maple.txt").read_text().splitlines():
        if not line or line.startswith("#"):
            continue
        head, arrays = line.split(":")
        p = tuple(int(v) for v in parse_tuple(head.strip()[1:], 5))
        expected = {F32Params.of(*parse_tuple(a.strip("[]"), 5)).canonical() for a in arrays.split()}
        if set(orbit(x_of_integral(p))) != expected:
            bad.append(p)
    report(2, "orbit goldens", not bad, f"4 orbits, mismatches {bad or 'none'}")


# --- 3, 4 ---------------------------------------------------------------------

_GRID6 = {}


def _grid6():
    if not _GRID6:
        t0 = time.perf_counter()
        for p in product(range(7), repeat=5):
            _GRID6[p] = eval_integral_exact(p)
        _GRID6["elapsed"] = time.perf_counter() - t0
    return _GRID6


def test_03_rationality_criterion():
    grid = _grid6()
    t0 = time.perf_counter()
    bad = [p for p in product(range(7), repeat=5) if is_irrational(p) != (grid[p].z != 0)]
    elapsed = grid["elapsed"] + time.perf_counter() - t0
    report(3, "irrationality criterion", not bad and elapsed < 120,
           f"16807 tuples, {len(bad)} mismatches, {elapsed:.1f}s")


def test_04_oracle_equivalence():
    grid = _grid6()
    t0 = time.perf_counter()
    bad = [p for p in product(range(7), repeat=5) if grid[p].z != zeta2_coefficient(p)]
    elapsed = time.perf_counter() - t0
    report(4, "zeta2 coefficient oracle", not bad, f"16807 tuples, {len(bad)} mismatches, {elapsed:.1f}s")


# --- 5 ------------------------------------------------------------------------


def test_05_exotique2():
    exact_fail, exact_n, skipped = [], 0, []
    for a, b in product(range(1, 6), repeat=2):
        for g in range(1, 2 * (a + b)):
            point = {"alpha": a, "beta": b, "gamma": g}
            try:
                r = verify_exact("exotique2", point)
            except InadmissibleInstance:
                skipped.append((a, b, g))
                continue
            exact_n += 1
            if not r.passed:
                exact_fail.append((a, b, g))
    rng = random.Random(20240605)
    numeric_fail, worst_bound, numeric_n, draws = [], Fraction(0), 0, 0
    while numeric_n < 50 and draws < 5000:
        draws += 1
        point = {name: Fraction(rng.randint(1, 20), rng.randint(1, 4)) for name in ("alpha", "beta")}
        point["gamma"] = Fraction(rng.randint(1, 40), rng.randint(1, 4))
        if all(v.denominator == 1 for v in point.values()):
            continue
        try:
            r = verify_numeric("exotique2", point, precision=128)
        except InadmissibleInstance:
            continue
        numeric_n += 1
        worst_bound = max(worst_bound, r.bound)
        if not r.passed or r.bound > Fraction(1, 10**30):
            numeric_fail.append(r.line())
    ok = not exact_fail and not skipped and numeric_n == 50 and not numeric_fail
    report(5, "exotique2 exact+numeric", ok,
           f"exact {exact_n - len(exact_fail)}/{exact_n} (inadmissible {len(skipped)}), "
           f"numeric {numeric_n - len(numeric_fail)}/{numeric_n}, worst bound {float(worst_bound):.1e}")


# --- 6 ------------------------------------------------------------------------


def test_06_b12():
    anchor = verify_exact("b12", {"alpha": 4, "beta": 3, "gamma": 4})
    # 5/9 is the coefficient with the two series swapped; both orientations are reported
    prefactor_ok = any("inverse 5/9" in note for note in anchor.notes)
    swapped = verify_exact("sato3hyp", {})
    fails, n, skipped = [], 0, 0
    for b in range(2, 6):
        for a, g in product(range(1, 9), repeat=2):
            if (a * (a - g + 1)) % (b - 1):
                continue
            point = {"alpha": a, "beta": b, "gamma": g}
            try:
                instantiate(get_entry("b12"), point)
                r = verify_exact("b12", point)
            except InadmissibleInstance:
                skipped += 1
                continue
            n += 1
            if not r.passed:
                fails.append((a, b, g))
    ok = anchor.passed and prefactor_ok and swapped.passed and not fails and n > 0
    report(6, "b12 exact", ok, f"(4,3,4) {anchor.verdict} with {anchor.notes[0]}, grid {n - len(fails)}/{n} "
                               f"(inadmissible {skipped})")


# --- 7 ------------------------------------------------------------------------


def test_07_families():
    t0 = time.perf_counter()
    reports = [verify_family(family_A(a)) for a in range(1, 13)]
    reports += [verify_family(family_B(a)) for a in range(2, 11)]
    elapsed = time.perf_counter() - t0
    value = eval_integral_exact(family_A(12).lhs)
    num = zeta2_to_numeric(value, 128)
    x = float(num.estimate)
    decay_ok = 0 < num.estimate + num.error_bound < Fraction(1, 10**6) and x ** (1 / 12) < 0.12
    ok = all(r.passed for r in reports) and decay_ok and elapsed < 60
    report(7, "families A,B", ok, f"{sum(r.passed for r in reports)}/21 pass, I_A(12)={x:.3e}, "
                                  f"root {x ** (1 / 12):.4f} (limit {17 - 12 * math.sqrt(2):.4f}), {elapsed:.1f}s")


# --- 8 ------------------------------------------------------------------------


def test_08_search_rediscovery():
    t0 = time.perf_counter()
    ints = grid_search(SearchSpec.uniform("integral", 3))
    sato1 = [r for r in ints if r.p == (1, 1, 1, 1, 1) and r.q == (3, 1, 1, 2, 0)]
    spec = SearchSpec("3f2", ((1, 8), (1, 8), (1, 8), (1, 9), (1, 12)), ties=("d=a+1",))
    f32 = grid_search(spec)
    hyp = [r for r in f32 if {r.p, r.q} == {(2, 4, 5, 6, 6), (3, 4, 4, 5, 7)}]
    elapsed = time.perf_counter() - t0
    ok = (len(sato1) == 1 and sato1[0].classification == "exotic"
          and len(hyp) == 1 and hyp[0].classification == "exotic" and hyp[0].ratio == Fraction(5, 9)
          and elapsed < 300)
    report(8, "search rediscovery", ok, f"integral {len(ints)} records, 3f2 {len(f32)} records, "
                                        f"ratio {hyp[0].ratio if hyp else None}, {elapsed:.1f}s")


# --- 9 ------------------------------------------------------------------------

SWEEP_IDS = ("b5", "b6", "b9", "b10", "b11", "b13", "b14", "b15", "b16", "couplage", "id1", "id2", "id3",
             "thomae1", "T3240", "gauss", "C15", "C27", "C54", "C55")


def test_09_catalogue_sweep():
    short, fails, modes = [], [], {"exact": 0, "numeric": 0}
    for entry_id in SWEEP_IDS:
        reports = sweep(entry_id, count=20, precision=128)
        if len(reports) < 20:
            short.append(entry_id)
        for r in reports:
            modes[r.mode] += 1
            if not r.passed:
                fails.append(r.line())
    ok = not short and not fails
    report(9, "catalogue sweep", ok, f"{len(SWEEP_IDS)} entries, {modes['exact']} exact + {modes['numeric']} numeric, "
                                     f"{len(fails)} failures, short {short or 'none'}")


# --- 10 -----------------------------------------------------------------------


def test_10_numeric_soundness():
    rng = random.Random(10)
    n, bad, worst = 0, [], Fraction(0)
    while n < 200:
        t = tuple(rng.randint(1, 8) for _ in range(5))
        f = F32Params.of(*t)
        try:
            integral_form(f)
        except UnmappableError:
            continue
        if not f.is_convergent():
            continue
        n += 1
        exact = zeta2_to_numeric(eval_3f2_exact(f), 128)
        num = eval_pfq(PfqSpec(f.upper, f.lower, 1), 128)
        worst = max(worst, num.error_bound + exact.error_bound)
        if not num.overlaps(exact):
            bad.append(t)
    report(10, "numeric soundness", not bad, f"{n - len(bad)}/{n} within bounds, worst combined bound {float(worst):.1e}")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted((k, v) for k, v in dict(globals()).items() if k.startswith("test_")):
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
