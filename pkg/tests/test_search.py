import io
from fractions import Fraction

import pytest

from zeta2_hyperlab.errors import BudgetExceeded, DomainError, FormatError
from zeta2_hyperlab.exact_arith import Zeta2Number
from zeta2_hyperlab.search import (
    HEADER,
    RATIONAL,
    RelationRecord,
    SearchSpec,
    classify,
    enumerate_tuples,
    grid_search,
    parse_tie,
    ratio_key,
    read_records,
    write_records,
)
from zeta2_hyperlab.zeta2_exact import eval_integral_exact


def test_ratio_key():
    assert ratio_key(Zeta2Number(5, -3)) == Fraction(-5, 3)
    assert ratio_key(Zeta2Number(2, 0)) is RATIONAL


def test_parse_tie():
    assert parse_tie("d=a+1") == ("d", ((1, "a"), (1, 1)))
    assert parse_tie("e = b + c - 1") == ("e", ((1, "b"), (1, "c"), (-1, 1)))
    for bad in ("d", "f=a", "d=a*2", "d=d+1"):
        with pytest.raises(FormatError):
            parse_tie(bad)


def test_spec_validation():
    with pytest.raises(DomainError):
        SearchSpec("4f3", ((0, 1),) * 5)
    with pytest.raises(DomainError):
        SearchSpec("integral", ((0, 1),) * 4)
    with pytest.raises(DomainError):
        SearchSpec("integral", ((2, 1),) * 5)
    with pytest.raises(DomainError):
        SearchSpec.uniform("integral", 2, ties=("d=a+1",))


def test_enumerate_3f2_with_tie():
    spec = SearchSpec("3f2", ((1, 3), (1, 3), (1, 3), (1, 4), (1, 6)), ties=("d=a+1",))
    tuples = enumerate_tuples(spec)
    assert tuples == sorted(set(tuples))
    for t in tuples:
        assert t[0] <= t[1] <= t[2] and t[3] <= t[4]


def test_golden_tiny_grid(golden):
    records = grid_search(SearchSpec.uniform("integral", 1))
    assert records == read_records(golden / "search_integral_max1.records")
    # every relation on this grid is explained by the change-of-variable group
    assert {r.classification for r in records} == {"t_explained"}


def test_records_are_real_relations():
    for rec in grid_search(SearchSpec.uniform("integral", 2))[:200]:
        vp, vq = eval_integral_exact(rec.p), eval_integral_exact(rec.q)
        assert vp == vq * rec.ratio


def test_sato1_found_as_exotic():
    records = grid_search(SearchSpec.uniform("integral", 3))
    hit = [r for r in records if r.p == (1, 1, 1, 1, 1) and r.q == (3, 1, 1, 2, 0)]
    assert len(hit) == 1
    assert hit[0].classification == "exotic" and hit[0].ratio == 1


def test_parallel_matches_serial():
    spec = SearchSpec.uniform("integral", 2)
    par = SearchSpec.uniform("integral", 2, workers=3)
    assert grid_search(spec) == grid_search(par)


def test_budget():
    with pytest.raises(BudgetExceeded) as info:
        grid_search(SearchSpec.uniform("integral", 2, pair_budget=5))
    assert len(info.value.partial) == 5


def test_rational_pairs_opt_in():
    plain = grid_search(SearchSpec.uniform("integral", 1))
    with_rational = grid_search(SearchSpec.uniform("integral", 1, include_rational=True))
    extra = [r for r in with_rational if r.classification == "rational_pair"]
    assert extra and len(with_rational) == len(plain) + len(extra)


def test_classify():
    rec = classify(RelationRecord("integral", (3, 1, 1, 2, 0), (2, 0, 2, 1, 2), Fraction(1)))
    assert rec.classification == "phi_explained"


def test_records_roundtrip():
    recs = [RelationRecord("3f2", (2, 4, 5, 6, 6), (3, 4, 4, 5, 7), Fraction(5, 9), "exotic"),
            RelationRecord("integral", (1, 1, 1, 1, 1), (3, 1, 1, 2, 0), Fraction(1), "exotic")]
    buf = io.StringIO()
    write_records(recs, buf)
    text = buf.getvalue()
    assert text.splitlines()[0] == HEADER
    assert text.splitlines()[1] == "REL\t3f2\t[2,4,5,6,6]\t[3,4,4,5,7]\t5/9\texotic"
    assert text.splitlines()[2].endswith("\t1/1\texotic")
    assert read_records(io.StringIO(text + "\n")) == recs


@pytest.mark.parametrize("body, msg", [
    ("REL\tintegral\t[1,1,1,1]\t[1,1,1,1,1]\t1/1\texotic", "line 2: bad p"),
    ("REL\tintegral\t[1,1,1,1,1]\t[1,1,1,1,1]\t1/0\texotic", "line 2: bad ratio"),
    ("REL\tintegral\t[1,1,1,1,1]\t[1,1,1,1,1]\t1/1\tweird", "line 2: unknown classification"),
    ("REL integral", "line 2: expected 6"),
])
def test_read_errors(body, msg):
    with pytest.raises(FormatError, match=msg):
        read_records(io.StringIO(HEADER + "\n" + body + "\n"))


def test_bad_header():
    with pytest.raises(FormatError, match="header"):
        read_records(io.StringIO("#other v9\n"))
