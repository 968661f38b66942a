"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.
"""

import subprocess
import sys
import time

import numpy as np
import pytest

from sioqubit import checks


def report(name, passed, detail):
    print(f"[{'PASS' if passed else 'FAIL'}] {name}: {detail}")
    assert passed, f"{name}: {detail}"


def test_criterion_1_theorem1_identity():
    rng = np.random.default_rng(1001)
    t0 = time.perf_counter()
    res = checks.check_theorem1_identity(rng, n_forms=1000, n_states=10,
                                         tol=1e-10)
    elapsed = time.perf_counter() - t0
    report("criterion 1 (nine-term mixture = Kraus action)",
           res.passed and elapsed <= 10.0,
           f"{res.detail}, runtime {elapsed:.2f}s")


def test_criterion_2_theorem3_specialization():
    rng = np.random.default_rng(1002)
    res = checks.check_theorem3_specialization(rng, n_forms=1000, tol=1e-12)
    report("criterion 2 (Pauli-only route matches general route)",
           res.passed, res.detail)


def test_criterion_3_named_channel_verdicts():
    res = checks.check_paper_verdicts()
    report("criterion 3 (named-channel relaxing verdicts)",
           res.passed, res.detail)


def test_criterion_4_relaxing_vs_trajectories():
    rng = np.random.default_rng(1004)
    res = checks.check_relaxing_convergence(rng, n_channels=200, steps=200,
                                            n_random_probes=10)
    report("criterion 4 (relaxing verdict = empirical convergence)",
           res.passed, res.detail)


def test_criterion_5_closed_form_powers():
    rng = np.random.default_rng(1005)
    res = checks.check_power_closed_form(rng, per_case=100, n_max=100,
                                         tol=1e-9)
    report("criterion 5 (closed-form powers, all discriminant cases)",
           res.passed, res.detail)


def test_criterion_6_synthesis_round_trip():
    rng = np.random.default_rng(1006)
    res = checks.check_synthesis_roundtrip(rng, n_forms=1000, tol=1e-10)
    report("criterion 6 (synthesis round-trip + infeasible diagnosis)",
           res.passed, res.detail)


def test_criterion_7_convertibility_soundness():
    rng = np.random.default_rng(1007)
    res = checks.check_convertibility_soundness(rng, n_pairs=1000)
    report("criterion 7 (cylinder/cuboid soundness + witness)",
           res.passed, res.detail)


def test_criterion_8_cli_selftest_determinism():
    cmd = [sys.executable, "-m", "sioqubit.cli", "selftest", "--seed", "42"]
    t0 = time.perf_counter()
    first = subprocess.run(cmd, capture_output=True, text=True)
    elapsed = time.perf_counter() - t0
    second = subprocess.run(cmd, capture_output=True, text=True)
    ok = (first.returncode == 0 and second.returncode == 0
          and first.stdout == second.stdout and first.stdout
          and elapsed <= 5.0)
    report("criterion 8 (selftest determinism)",
           ok,
           f"exit {first.returncode}, byte-identical: "
           f"{first.stdout == second.stdout}, runtime {elapsed:.2f}s")
