import math
from statistics import NormalDist

import pytest

from erideals.errors import ParameterError
from erideals.montecarlo import Estimate, SweepRecord, derive_seed, estimate, sweep, wilson_interval


def test_wilson_closed_form():
    # hits=500, trials=1000: centre is exactly 1/2
    z = NormalDist().inv_cdf(0.975)
    half = z * math.sqrt(0.25 / 1000 + z * z / 4e6) / (1 + z * z / 1000)
    lo, hi = wilson_interval(500, 1000, 0.95)
    assert lo == pytest.approx(0.5 - half, abs=1e-12)
    assert hi == pytest.approx(0.5 + half, abs=1e-12)
    assert lo == pytest.approx(0.469070, abs=1e-6)


def test_wilson_degenerate():
    lo, hi = wilson_interval(0, 100)
    assert lo == 0.0 and 0 < hi < 0.05
    lo, hi = wilson_interval(100, 100)
    assert hi == 1.0 and 0.95 < lo < 1
    with pytest.raises(ParameterError):
        wilson_interval(5, 3)
    with pytest.raises(ParameterError):
        wilson_interval(1, 3, 1.0)


def test_has_cycle_n3():
    est = estimate(3, 0.5, "has_cycle", 200000, seed=1)
    assert abs(est.p_hat - 0.125) < 4 * est.sigma
    assert est.contains(0.125)


def test_always_true():
    est = estimate(12, 0.3, "always_true", 500, seed=3)
    assert est.p_hat == 1.0 and est.hits == 500


def test_jobs_independent():
    a = estimate(7, 0.4, "hochster", 70000, seed=8, jobs=1)
    b = estimate(7, 0.4, "hochster", 70000, seed=8, jobs=2)
    assert a == b
    a = estimate(30, 0.3, "dim_ge:6", 800, seed=8, jobs=1)
    b = estimate(30, 0.3, "dim_ge:6", 800, seed=8, jobs=3)
    assert a == b


def test_estimate_errors():
    with pytest.raises(ParameterError):
        estimate(5, 0.5, "bipartite", 0)
    with pytest.raises(ParameterError):
        estimate(5, 1.5, "bipartite", 10)
    with pytest.raises(ParameterError):
        estimate(5, 0.5, "bipartite", 10, confidence=0)


def test_derive_seed():
    assert derive_seed(1, 50) == derive_seed(1, 50)
    assert len({derive_seed(1, n) for n in range(100)}) == 100
    assert derive_seed(1, 50) != derive_seed(2, 50)


def test_sweep():
    recs = sweep("dim_ge:3", "q=1*n^-0.5", [10, 20], 300, seed=4, timing=False)
    assert [r.n for r in recs] == [10, 20]
    assert all(r.seconds is None for r in recs)
    assert recs[0].schedule_kind == "q_schedule"
    assert recs[1].q == pytest.approx(20 ** -0.5)
    row = recs[0].csv_row()
    assert len(row) == len(SweepRecord.CSV_FIELDS) and row[12] == ""
    assert isinstance(recs[0].estimate, Estimate)
    with pytest.raises(ParameterError):
        sweep("bipartite", "p=0.1", [20, 10], 10)
