"""Seeded Monte Carlo Stern-Gerlach runs and the Chebyshev bound.

Randomness comes from numpy's PCG64 generator. A single run is seeded with
``seed``; run ``r`` of a batch uses the stream derived from ``(seed, r)``, so
batches can be split across workers without changing the aggregate.
Sequences are reproducible within one numpy build, not across languages.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Probabilities this close to 0 or 1 are treated as exact; cos^2 at pi/2
# evaluates to ~1e-33 rather than 0.
_SNAP = 1e-14


def success_probability(theta: float) -> float:
    p = math.cos(theta / 2.0) ** 2
    if p < _SNAP:
        return 0.0
    if p > 1.0 - _SNAP:
        return 1.0
    return p


@dataclass(frozen=True)
class TrialRun:
    theta: float
    p: float
    trials: int
    seed: int
    successes: int

    @property
    def frequency(self) -> float:
        return self.successes / self.trials


def _count(p: float, trials: int, rng: np.random.Generator) -> int:
    # one uniform draw per trial; random() lies in [0, 1)
    return int(np.count_nonzero(rng.random(trials) < p))


def simulate_sg(theta: float, trials: int, seed: int) -> TrialRun:
    """N independent spin measurements, each 'up' with probability cos^2(theta/2)."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    p = success_probability(theta)
    rng = np.random.default_rng(seed)
    return TrialRun(theta, p, trials, seed, _count(p, trials, rng))


def run_batch(theta: float, trials: int, runs: int, seed: int) -> np.ndarray:
    """Success counts of ``runs`` independent runs."""
    p = success_probability(theta)
    return np.array([_count(p, trials, np.random.default_rng([seed, r])) for r in range(runs)])


def binomial_sigma(p: float, trials: int) -> float:
    return math.sqrt(p * (1.0 - p) * trials)


def per_trial_uncertainty(p: float) -> float:
    """sigma^2 / N = p (1 - p)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    return p * (1.0 - p)


@dataclass(frozen=True)
class ChebyshevReport:
    theta: float
    p: float
    trials: int
    k: float
    runs: int
    seed: int
    sigma: float
    bound: float
    empirical_violation_rate: float
    slack: float

    @property
    def within_bound(self) -> bool:
        return self.empirical_violation_rate <= self.bound + self.slack


def chebyshev_report(theta: float, trials: int, k: float, runs: int, seed: int) -> ChebyshevReport:
    """Fraction of runs with |L - pN| > k sigma, against the bound 1/k^2.

    The allowed statistical slack is 3 sqrt(bound / runs).
    """
    if k <= 0:
        raise ValueError("k must be positive")
    if runs < 100:
        raise ValueError("runs must be at least 100")
    p = success_probability(theta)
    sigma = binomial_sigma(p, trials)
    counts = run_batch(theta, trials, runs, seed)
    rate = float(np.mean(np.abs(counts - p * trials) > k * sigma))
    bound = 1.0 / k**2
    return ChebyshevReport(
        theta, p, trials, k, runs, seed, sigma, bound, rate, 3.0 * math.sqrt(bound / runs)
    )
