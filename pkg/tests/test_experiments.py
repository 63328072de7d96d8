import math

import pytest

from biclab.experiments import EVENTS, ExperimentConfig, event_label, mc_alpha_beta, mc_sparse, wilson_interval


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(trials=0)
    with pytest.raises(ValueError):
        ExperimentConfig(workers=0)
    with pytest.raises(ValueError):
        ExperimentConfig(seed=-1)


def test_wilson_interval():
    lo, hi = wilson_interval(50, 100)
    assert lo < 0.5 < hi and hi - lo == pytest.approx(2 * 0.0967, abs=2e-3)
    assert wilson_interval(0, 10)[0] == 0.0
    assert wilson_interval(10, 10)[1] == pytest.approx(1.0)
    assert wilson_interval(0, 0) == (0.0, 1.0)


def test_event_label():
    assert [event_label(x, y) for x in (1, 0) for y in (1, 0)] == list(EVENTS)


def test_mc_alpha_beta_small_run():
    cfg = ExperimentConfig(n=24, trials=60, seed=9)
    res = mc_alpha_beta(cfg)
    assert len(res.rows) == 60 and [r.trial for r in res.rows] == list(range(60))
    assert math.fsum(res.frequencies.values()) == pytest.approx(1.0)
    assert math.fsum(res.predicted.as_dict().values()) == pytest.approx(1.0)
    for e in EVENTS:
        assert res.frequencies[e] == sum(r.event == e for r in res.rows) / 60
        lo, hi = res.intervals[e]
        assert lo <= res.frequencies[e] <= hi
    for r in res.rows:
        assert r.event == event_label(r.alpha >= res.k, r.beta >= res.k + 2)
    s = res.summary()
    assert s["trials_completed"] == 60 and not s["partial"]
    assert 0 <= s["tv_distance"] <= 1


def test_mc_alpha_beta_determinism_across_workers():
    cfg = ExperimentConfig(n=20, trials=40, seed=123)
    one = mc_alpha_beta(cfg).rows_csv()
    again = mc_alpha_beta(cfg).rows_csv()
    two = mc_alpha_beta(ExperimentConfig(n=20, trials=40, seed=123, workers=2)).rows_csv()
    assert one == again == two
    assert one.splitlines()[0] == "trial,seed,alpha,beta,event"
    assert mc_alpha_beta(ExperimentConfig(n=20, trials=40, seed=124)).rows_csv() != one


def test_mc_alpha_beta_partial_on_budget():
    res = mc_alpha_beta(ExperimentConfig(n=30, trials=5, seed=1, budget=2))
    assert res.partial and not res.completed
    assert res.rows_csv().splitlines()[1].endswith(",,,")


def test_mc_alpha_beta_guard():
    with pytest.raises(ValueError):
        mc_alpha_beta(ExperimentConfig(n=121, trials=1))


def test_mc_sparse_structural_fraction():
    res = mc_sparse(ExperimentConfig(n=200, p=0.005, trials=200, seed=42))
    s = res.summary()
    assert s["structural_fraction"] >= 0.95
    assert s["all_certificates_valid"]


def test_mc_sparse_exact_agreement_on_tiny_graphs():
    res = mc_sparse(ExperimentConfig(n=10, p=0.05, trials=500, seed=42))
    s = res.summary()
    assert s["exact_checked"] > 0 and s["exact_mismatches"] == 0
    assert all(r.valid for r in res.rows)


def test_mc_sparse_determinism_across_workers():
    cfg = dict(n=40, p=0.03, trials=30, seed=5)
    assert mc_sparse(ExperimentConfig(**cfg)).rows_csv() == mc_sparse(ExperimentConfig(**cfg, workers=2)).rows_csv()


def test_mc_sparse_density_guard():
    with pytest.raises(ValueError):
        mc_sparse(ExperimentConfig(n=100, p=0.2, trials=2))
    assert len(mc_sparse(ExperimentConfig(n=12, p=0.2, trials=3), force=True).rows) == 3
