from fractions import Fraction
from math import comb

import pytest

from erideals.errors import DomainError, ParameterError
from erideals.graph import Pattern
from erideals.moments import (
    MomentReport,
    Schedule,
    chebyshev_lb_Et,
    chebyshev_lb_T,
    expectation_Y_Et,
    expectation_Y_T_paper,
    markov_ub_cycles,
    markov_ub_Et,
    moment_report,
    schedule_eval,
    variance_bound_Y_Et,
    variance_bound_Y_T,
)

HALF = Fraction(1, 2)


def test_expectation_Et():
    assert expectation_Y_Et(5, 3, HALF) == Fraction(5, 4)
    assert expectation_Y_Et(4, 2, 0) == 6
    assert expectation_Y_Et(4, 4, 1) == 0


def test_expectation_T():
    assert expectation_Y_T_paper(6, HALF) == Fraction(20, 2**15)
    assert expectation_Y_T_paper(7, HALF) == 7 * Fraction(20, 2**15)


def test_variance_bound_T_pinned():
    # at p = q = 1/2 the eight terms are n^a / 2^b
    expected = (
        2 * Fraction(10**10, 2**29)
        + 2 * Fraction(10**9, 2**27)
        + 2 * Fraction(10**8, 2**24)
        + Fraction(10**7, 2**20)
        + Fraction(10**6, 2**15)
    )
    assert variance_bound_Y_T(10, HALF) == expected


def test_chebyshev_T_is_clamped():
    assert chebyshev_lb_T(10, HALF) == 0
    assert 0 <= chebyshev_lb_T(400, Fraction(1, 5)) <= 1
    with pytest.raises(ParameterError):
        chebyshev_lb_T(10, 0)


def test_variance_bound_Et():
    # n=4, t=2: 4^4 q^2 / (4^2 q) = 16 q
    assert variance_bound_Y_Et(4, 2, HALF) == 8
    with pytest.raises(ParameterError):
        variance_bound_Y_Et(4, 2, 1)


def test_chebyshev_Et():
    n, t, p = 6, 3, Fraction(3, 10)
    q = 1 - p
    s = sum(Fraction(1, n**j) / q ** comb(j, 2) for j in range(2, t + 1))
    raw = 1 - Fraction(n ** (2 * t), comb(n, t) ** 2) * s
    assert chebyshev_lb_Et(n, t, p) == max(0, min(1, raw))
    assert 0.9 < chebyshev_lb_Et(500, 3, 0.01) <= 1


def test_float_and_fraction_agree():
    for n, t in ((6, 3), (20, 4)):
        exact = variance_bound_Y_Et(n, t, Fraction(3, 10))
        assert float(exact) == pytest.approx(variance_bound_Y_Et(n, t, 0.3), rel=1e-12)


def test_markov_cycles():
    assert markov_ub_cycles(10, Fraction(1, 20)) == Fraction(1, 8) / Fraction(1, 2)
    with pytest.raises(DomainError):
        markov_ub_cycles(10, Fraction(1, 10))
    assert markov_ub_Et(6, 3, HALF) == expectation_Y_Et(6, 3, HALF)


@pytest.mark.parametrize("call", [lambda: expectation_Y_Et(3, 4, 0.5), lambda: expectation_Y_Et(3, 1, 0.5),
                                  lambda: expectation_Y_T_paper(5, 0.5), lambda: expectation_Y_Et(5, 2, 1.2)])
def test_parameter_errors(call):
    with pytest.raises(ParameterError):
        call()


def test_schedule():
    s = Schedule.parse("q=1*n^-0.5")
    assert (s.kind, s.c, s.alpha) == ("q", 1.0, 0.5)
    p, q, clamped = s.evaluate(100)
    assert q == pytest.approx(0.1) and p == pytest.approx(0.9) and not clamped
    assert Schedule.parse("p=2*n^-1").evaluate(1) == (1.0, 0.0, True)
    assert Schedule.parse("p=0.3").evaluate(50)[0] == 0.3
    assert schedule_eval("q_schedule", 1.0, 1.5, 100) == pytest.approx(1 - 1e-3)
    for bad in ("r=1*n^-1", "q=-1*n^-1", "nonsense"):
        with pytest.raises(ParameterError):
            Schedule.parse(bad)


def test_moment_report():
    rep = moment_report(6, 0.5, Pattern("E", 3))
    assert rep.expectation == pytest.approx(2.5)
    assert len(rep.csv_row()) == len(MomentReport.CSV_FIELDS)
    rep = moment_report(6, 1.0, Pattern("E", 3))
    assert rep.variance_bound is None and rep.chebyshev_lb == 0.0
    assert moment_report(8, 0.3, Pattern("T")).markov_ub == pytest.approx(float(expectation_Y_T_paper(8, 0.3)))
