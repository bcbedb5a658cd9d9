import math

import numpy as np
import pytest

from infoqm.stochastics import (
    binomial_sigma,
    chebyshev_report,
    per_trial_uncertainty,
    run_batch,
    simulate_sg,
    success_probability,
)

# Exact two-sided binomial tails P(|L - 5000| > k * 50) for N = 10^4, p = 1/2,
# computed once with scipy.stats.binom (cdf + sf) and frozen here.
EXACT_TAIL = {1.5: 0.1310393140648761, 2.0: 0.04442579904608052, 3.0: 0.0026107379066787405}


def test_deterministic_angles():
    for seed in range(5):
        assert simulate_sg(0.0, 1000, seed).successes == 1000
        assert simulate_sg(math.pi, 1000, seed).successes == 0


def test_reproducible():
    a = simulate_sg(1.1, 10_000, 42)
    b = simulate_sg(1.1, 10_000, 42)
    assert a == b
    assert simulate_sg(1.1, 10_000, 43).successes != a.successes


def test_regression_fixture():
    # same-build regression value for numpy's PCG64 stream
    assert simulate_sg(math.pi / 2, 10_000, 42).successes == 5015


def test_half_angle_concentration():
    seeds = range(200)
    inside = sum(0.48 <= simulate_sg(math.pi / 2, 10_000, s).frequency <= 0.52 for s in seeds)
    assert inside >= 0.99 * len(seeds)


def test_trials_validation():
    with pytest.raises(ValueError):
        simulate_sg(0.3, 0, 1)


def test_sigma_examples():
    assert binomial_sigma(0.5, 10_000) == 50.0
    assert chebyshev_report(math.pi / 2, 10_000, 2.0, 100, 1).sigma == pytest.approx(50.0, abs=1e-9)
    assert chebyshev_report(math.pi / 2, 10_000, 2.0, 100, 1).bound == 0.25


@pytest.mark.parametrize("theta", [0.0, math.pi])
def test_degenerate_no_violations(theta):
    rep = chebyshev_report(theta, 1000, 1.0, 100, 7)
    assert rep.sigma == 0.0
    assert rep.empirical_violation_rate == 0.0


def test_success_probability_snaps_endpoints():
    assert success_probability(math.pi) == 0.0
    assert success_probability(0.0) == 1.0
    assert success_probability(math.pi / 2) == pytest.approx(0.5, abs=1e-15)


@pytest.mark.parametrize("k", sorted(EXACT_TAIL))
def test_empirical_rate_matches_exact_tail(k):
    rep = chebyshev_report(math.pi / 2, 10_000, k, 1000, 2024)
    tail = EXACT_TAIL[k]
    # 4 binomial standard errors over 1000 runs
    assert abs(rep.empirical_violation_rate - tail) <= 4 * math.sqrt(tail * (1 - tail) / 1000)
    assert rep.within_bound


def test_report_argument_checks():
    with pytest.raises(ValueError):
        chebyshev_report(1.0, 100, 0.0, 100, 1)
    with pytest.raises(ValueError):
        chebyshev_report(1.0, 100, 2.0, 99, 1)


@pytest.mark.parametrize("p, u", [(0.5, 0.25), (1.0, 0.0), (0.9, 0.09)])
def test_per_trial_uncertainty(p, u):
    assert per_trial_uncertainty(p) == pytest.approx(u, abs=1e-15)


def test_per_trial_uncertainty_domain():
    with pytest.raises(ValueError):
        per_trial_uncertainty(1.5)


def test_variance_proportional_to_trials():
    for p in (0.1, 0.5, 0.77):
        for n in (1, 10, 12345):
            assert abs(binomial_sigma(p, n) ** 2 - n * per_trial_uncertainty(p)) < 1e-12 * max(1, n)


def test_batch_mean_converges():
    theta = 2.0
    p = success_probability(theta)
    counts = run_batch(theta, 10_000, 500, 11)
    sigma = binomial_sigma(p, 10_000)
    assert abs(counts.mean() - p * 10_000) < 4 * sigma / math.sqrt(500)


def test_batch_streams_independent_of_split():
    whole = run_batch(1.0, 500, 200, 5)
    again = run_batch(1.0, 500, 200, 5)
    assert np.array_equal(whole, again)
    assert len(set(whole.tolist())) > 10
