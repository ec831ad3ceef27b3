from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given, settings, strategies as st

from zeta2_hyperlab.errors import BudgetExceeded, DivergentSeries, DomainError
from zeta2_hyperlab.exact_arith import Zeta2Number, factorial, pochhammer
from zeta2_hyperlab.hyper_numeric import NumericValue, PfqSpec, eval_pfq, zeta2_numeric, zeta2_to_numeric

Q = Fraction


def mp(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def ref(spec: PfqSpec, dps=60):
    with mpmath.workdps(dps):
        return mpmath.hyper([mp(a) for a in spec.upper], [mp(b) for b in spec.lower], mp(spec.argument))


def within(v: NumericValue, x, slack=mpmath.mpf(10) ** -45):
    with mpmath.workdps(60):
        return abs(mp(v.estimate) - x) <= mp(v.error_bound) + slack


def test_gauss_closed_form():
    # 2F1(1,1;3;1) = Gamma(3)Gamma(1)/(Gamma(2)Gamma(2)) = 2
    v = eval_pfq(PfqSpec((1, 1), (3,), 1))
    assert v.contains(2)
    assert v.error_bound <= Q(1, 2**128)


def test_3f2_is_zeta2():
    v = eval_pfq(PfqSpec((1, 1, 1), (2, 2), 1))
    with mpmath.workdps(60):
        assert within(v, mpmath.zeta(2))
    assert v.overlaps(zeta2_numeric())


def test_half_integer_gauss():
    v = eval_pfq(PfqSpec((Q(1, 2), Q(1, 2)), (2,), 1))
    with mpmath.workdps(60):
        assert within(v, 4 / mpmath.pi)


@pytest.mark.parametrize("spec", [
    PfqSpec((1, 2, Q(1, 3)), (Q(5, 2), 4), Q(1, 2)),
    PfqSpec((Q(1, 2), 1, 1), (2, 2), -1),
    PfqSpec((1, 1), (2,), Q(-9, 10)),
    PfqSpec((Q(3, 2), Q(5, 4), 2), (Q(7, 3), Q(11, 4)), 1),
    PfqSpec((Q(1, 4), Q(1, 3), Q(1, 2), 1, 2), (Q(5, 4), Q(7, 3), 3, Q(9, 2)), 1),
])
def test_against_mpmath(spec):
    v = eval_pfq(spec)
    assert within(v, ref(spec))
    assert v.error_bound <= Q(1, 2**128)


def test_terminating_is_exact():
    v = eval_pfq(PfqSpec((-3, 2, 5), (4, 7), 1))
    # only the final rounding contributes to the bound
    assert v.error_bound <= Q(1, 2**140)
    expected = sum(
        pochhammer(-3, k) * pochhammer(2, k) * pochhammer(5, k) / (pochhammer(4, k) * pochhammer(7, k) * factorial(k))
        for k in range(4)
    )
    assert v.contains(expected)


def test_divergence_and_domain():
    with pytest.raises(DivergentSeries):
        eval_pfq(PfqSpec((1, 1, 1), (1, 2), 1))
    with pytest.raises(DivergentSeries):
        eval_pfq(PfqSpec((1, 2), (1,), -1))
    with pytest.raises(DomainError):
        PfqSpec((1, 1), (0,), Q(1, 2))
    with pytest.raises(DomainError):
        PfqSpec((1, 1), (2,), 2)
    with pytest.raises(DomainError):
        PfqSpec((1, 1, 1), (2,), Q(1, 2))


def test_budget_reports_partial():
    with pytest.raises(BudgetExceeded) as info:
        eval_pfq(PfqSpec((1, 1), (2,), Q(999, 1000)), max_terms=50)
    partial = info.value.partial
    assert isinstance(partial, NumericValue)
    with mpmath.workdps(40):
        assert within(partial, mpmath.log(1000) * mpmath.mpf(1000) / 999)


def test_zeta2_numeric():
    v = zeta2_numeric(200)
    with mpmath.workdps(80):
        assert abs(mp(v.estimate) - mpmath.zeta(2)) <= mp(v.error_bound)
    assert v.error_bound <= Q(1, 2**200)


def test_zeta2_to_numeric():
    v = zeta2_to_numeric(Zeta2Number(5, -3))
    with mpmath.workdps(60):
        assert within(v, 5 - 3 * mpmath.zeta(2))
    assert zeta2_to_numeric(Zeta2Number(Q(1, 3), 0)).error_bound == 0


def test_precision_controls_bound():
    spec = PfqSpec((1, 1, 1), (2, 3), 1)
    for prec in (32, 64, 200):
        assert eval_pfq(spec, prec).error_bound <= Q(1, 2**prec)


def test_str_shape():
    s = str(eval_pfq(PfqSpec((1, 1, 1), (2, 2), 1), 64))
    assert s.startswith("1.6449340668") and " ± " in s and s.endswith(tuple("0123456789"))


def test_telescoping_series_has_exact_tail():
    # 2/((k+1)(k+2)) telescopes, so the tail model is exact
    assert eval_pfq(PfqSpec((1, 1), (3,), 1)).error_bound == 0


params = st.fractions(min_value=Q(1, 4), max_value=4, max_denominator=4)
excess = st.fractions(min_value=Q(1, 8), max_value=3, max_denominator=8)


@given(params, params, excess)
@settings(max_examples=30, deadline=None)
def test_random_gauss_sum(a, b, sigma):
    c = a + b + sigma
    v = eval_pfq(PfqSpec((a, b), (c,), 1), 96)
    with mpmath.workdps(60):
        g = mpmath.gamma
        expected = g(mp(c)) * g(mp(sigma)) / (g(mp(c - a)) * g(mp(c - b)))
        assert within(v, expected, slack=mpmath.mpf(10) ** -40)


@given(st.fractions(min_value=Q(1, 4), max_value=6, max_denominator=4), params, params)
@settings(max_examples=30, deadline=None)
def test_random_dixon_sum(a, b, c):
    # well-poised 3F2(a,b,c;1+a-b,1+a-c;1), convergent when 1 + a/2 - b - c > 0
    assume(1 + a / 2 - b - c > Q(1, 16) and 1 + a - b > 0 and 1 + a - c > 0)
    spec = PfqSpec((a, b, c), (1 + a - b, 1 + a - c), 1)
    v = eval_pfq(spec, 96)
    with mpmath.workdps(60):
        g = mpmath.gamma
        A, B, C = mp(a), mp(b), mp(c)
        expected = (g(1 + A / 2) * g(1 + A - B) * g(1 + A - C) * g(1 + A / 2 - B - C)
                    / (g(1 + A) * g(1 + A / 2 - B) * g(1 + A / 2 - C) * g(1 + A - B - C)))
        assert within(v, expected, slack=mpmath.mpf(10) ** -40)
