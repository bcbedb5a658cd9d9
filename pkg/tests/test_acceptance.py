"""Acceptance criteria, one test each, at the stated tolerances and time budgets.

Every test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary (see conftest.py).
"""

import math
import time

import numpy as np
import pytest

from infoqm.entangle import bell_singlet, chsh_and_verdict, info_corr, max_info_corr, werner
from infoqm.errors import UnsupportedDimension
from infoqm.infomeasure import BITS, UNIT, binary_info, info_measure
from infoqm.malus import quantum_oracle_probability, solve_f_ode
from infoqm.mub import mub_construct, param_count_decomposition, verify_mub
from infoqm.qstate import DensityMatrix, density_from_info, info_from_density, mub_probabilities, total_info_general
from infoqm.dynamics import axis_from_hamiltonian, debroglie_period, evolve_exact, evolve_info
from infoqm.stochastics import chebyshev_report

from conftest import random_hermitian, random_info_vector, random_mixed, random_pure, random_unitary

RESULTS = []


def record(number, title, ok, detail):
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})")
    assert ok, detail


def test_1_worked_examples():
    t0 = time.perf_counter()
    errs = [
        abs(info_measure((0.6, 0.4), UNIT) - 0.04),
        abs(binary_info((0.6, 0.4))[1] - 0.04),
        abs(binary_info((0.4, 0.6))[1] - 0.04),
        abs(info_measure((1.0, 0.0), BITS) - 1.0),
        abs(binary_info((1.0, 0.0))[1] - 1.0),
        abs(info_measure((0.5, 0.5), BITS) - 0.0),
    ]
    worst = max(errs)
    record(1, "worked examples I=0.04, max 1 bit, min 0", worst <= 1e-12,
           f"max err {worst:.2e} <= 1e-12, {time.perf_counter() - t0:.3f}s")


def test_2_mub_suite():
    t0 = time.perf_counter()
    rng = np.random.default_rng(2)
    worst_verify, worst_identity = 0.0, 0.0
    for n in (2, 3, 4, 5, 7, 8, 9):
        mubs = mub_construct(n)
        worst_verify = max(worst_verify, *verify_mub(mubs))
        for k in range(50):
            rho = random_pure(rng, n) if k % 2 else random_mixed(rng, n)
            s = sum(float(np.sum(p**2)) for p in mub_probabilities(rho, mubs))
            worst_identity = max(worst_identity, abs(s - rho.purity - 1))
    try:
        mub_construct(6)
        rejected = False
    except UnsupportedDimension:
        rejected = True
    elapsed = time.perf_counter() - t0
    ok = worst_verify < 1e-9 and worst_identity < 1e-10 and rejected and elapsed < 10
    record(2, "MUB construction, purity identity, dim 6 rejected", ok,
           f"verify {worst_verify:.2e} < 1e-9, identity {worst_identity:.2e} < 1e-10, "
           f"dim6 rejected={rejected}, {elapsed:.2f}s < 10s")


def test_3_total_information_invariance():
    t0 = time.perf_counter()
    rng = np.random.default_rng(3)
    base = mub_construct(2)
    triples = [base.rotated(random_unitary(rng, 2)) for _ in range(100)]
    states = [density_from_info(random_info_vector(rng, pure=True)) for _ in range(100)]
    worst_qubit = max(abs(total_info_general(rho, t, UNIT) - 1.0) for rho in states for t in triples)
    mub4 = mub_construct(4)
    worst_bits = max(abs(total_info_general(random_pure(rng, 4), mub4, BITS) - 2.0) for _ in range(100))
    ok = worst_qubit < 1e-9 and worst_bits < 1e-9
    record(3, "total information invariant (qubit 1, two qubits 2 bits)", ok,
           f"qubit {worst_qubit:.2e}, dim4 bits {worst_bits:.2e} < 1e-9, {time.perf_counter() - t0:.2f}s")


def test_4_malus_law():
    t0 = time.perf_counter()
    worst_ode = max(solve_f_ode(n, 2 * math.pi, 10_000).max_abs_error for n in (0.5, 1.0, 2.0))
    thetas = np.linspace(0, 2 * math.pi, 1000)
    worst_oracle = max(abs(quantum_oracle_probability(t) - math.cos(t / 2) ** 2) for t in thetas)
    elapsed = time.perf_counter() - t0
    ok = worst_ode < 1e-8 and worst_oracle < 1e-12 and elapsed < 1.0
    record(4, "Malus law from ODE and density-matrix oracle", ok,
           f"ode {worst_ode:.2e} < 1e-8, oracle {worst_oracle:.2e} < 1e-12, {elapsed:.2f}s < 1s")


def _bisect_threshold(lo=0.0, hi=1.0, tol=1e-4):
    assert not chsh_and_verdict(werner(lo)).entangled_by_criterion
    assert chsh_and_verdict(werner(hi)).entangled_by_criterion
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if chsh_and_verdict(werner(mid)).entangled_by_criterion:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def test_5_entanglement_equivalence():
    t0 = time.perf_counter()
    rng = np.random.default_rng(5)
    worst, disagreements = 0.0, 0
    for k in range(200):
        rho = random_pure(rng, 4) if k % 2 else random_mixed(rng, 4)
        numeric = max_info_corr(rho, "numeric").value
        v = chsh_and_verdict(rho)
        s = v.singular_values
        worst = max(worst, abs(numeric - (s[0] ** 2 + s[1] ** 2)))
        disagreements += v.entangled_by_criterion != (v.chsh_max > 2)
    singlet = bell_singlet()
    icorr_err = abs(info_corr(singlet) - 2.0)
    chsh_err = abs(chsh_and_verdict(singlet).chsh_max - 2 * math.sqrt(2))
    threshold = _bisect_threshold()
    elapsed = time.perf_counter() - t0
    ok = (worst < 1e-6 and disagreements == 0 and icorr_err < 1e-9 and chsh_err < 1e-9
          and abs(threshold - 1 / math.sqrt(2)) < 1e-3 and elapsed < 30)
    record(5, "I_corr criterion equals CHSH violation", ok,
           f"numeric-analytic {worst:.2e} < 1e-6, disagreements {disagreements}, singlet I_corr err "
           f"{icorr_err:.1e}, chsh err {chsh_err:.1e}, Werner threshold {threshold:.5f}, {elapsed:.1f}s < 30s")


def test_6_dynamics():
    t0 = time.perf_counter()
    rng = np.random.default_rng(6)
    worst_oracle = worst_norm = worst_energy = worst_period = 0.0
    for _ in range(50):
        i0 = random_info_vector(rng)
        h = random_hermitian(rng, 2)
        u = axis_from_hamiltonian(h)
        t = rng.uniform(0, 10)
        traj = evolve_info(i0, u, t, 1e-3)
        exact = info_from_density(evolve_exact(density_from_info(i0), h, t)).as_array()
        worst_oracle = max(worst_oracle, float(np.max(np.abs(traj.vectors[-1] - exact))))
        norms_sq = np.sum(traj.vectors**2, axis=1)
        worst_norm = max(worst_norm, float(np.max(np.abs(norms_sq - norms_sq[0]))))
        uhat = u.vector / np.linalg.norm(u.vector)
        worst_energy = max(worst_energy, float(np.max(np.abs(traj.vectors @ uhat - i0 @ uhat))))
        period = debroglie_period(u)
        back = evolve_info(i0, u, period, 1e-3).vectors[-1]
        worst_period = max(worst_period, float(np.max(np.abs(back - i0))))
    elapsed = time.perf_counter() - t0
    ok = (worst_oracle < 1e-6 and worst_norm < 1e-8 and worst_energy < 1e-8
          and worst_period < 1e-7 and elapsed < 10)
    record(6, "information-vector dynamics vs unitary oracle", ok,
           f"oracle {worst_oracle:.1e} < 1e-6, norm {worst_norm:.1e}, energy {worst_energy:.1e} < 1e-8, "
           f"period return {worst_period:.1e} < 1e-7, {elapsed:.2f}s < 10s")


def test_7_chebyshev():
    t0 = time.perf_counter()
    failures = []
    seed = 7
    for theta in (math.pi / 4, math.pi / 2, 3 * math.pi / 4):
        for k in (1.5, 2.0, 3.0):
            rep = chebyshev_report(theta, 10_000, k, 1000, seed)
            seed += 1
            limit = 1 / k**2 + 3 * math.sqrt((1 / k**2) / 1000)
            if rep.empirical_violation_rate > limit:
                failures.append((theta, k, rep.empirical_violation_rate, limit))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60
    record(7, "Chebyshev bound over the (theta, k) grid", ok,
           f"{9 - len(failures)}/9 within bound, {elapsed:.1f}s < 60s")


def test_8_parameter_counting():
    rec = param_count_decomposition(6)
    six = (*rec.local_params, rec.correlation_params, rec.total)
    bad = [n for n in range(2, 31) if param_count_decomposition(n).total != n * n - 1]
    record(8, "parameter counting", six == (3, 8, 24, 35) and not bad,
           f"n=6 -> {six}, totals n^2-1 for n<=30: {not bad}")
