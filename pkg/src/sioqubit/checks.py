"""Randomized property checks over the whole library.

Each check draws its samples from a caller-supplied generator, returns a
small result record, and is deterministic for a fixed seed.  The CLI
selftest runs them at reduced counts; the acceptance suite runs them at
full counts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import channel as ch_mod
from . import convertibility as conv
from . import semigroup as sg
from . import typical_form as tfm
from .channel import TransferParams, builtin, kraus_apply, transfer_params
from .linalg import SIGMA1, SIGMA2, SIGMA3, bloch_to_density


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def random_state(rng: np.random.Generator) -> np.ndarray:
    """Density matrix of a uniformly random Bloch point (radius^3 uniform)."""
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    return bloch_to_density(v * rng.uniform(0, 1) ** (1 / 3))


def check_theorem1_identity(rng, n_forms: int = 1000, n_states: int = 10,
                            tol: float = 1e-10) -> CheckResult:
    """Nine-term mixture equals direct Kraus application entrywise."""
    worst = 0.0
    for _ in range(n_forms):
        tf = tfm.random_typical_form(rng)
        ch = tfm.to_kraus(tf)
        mix = tfm.decompose_theorem1(tf)
        for _ in range(n_states):
            rho = random_state(rng)
            dev = np.abs(mix.apply(rho) - kraus_apply(ch, rho)).max()
            worst = max(worst, dev)
    return CheckResult("theorem1-identity", worst <= tol,
                       f"max deviation {worst:.3e} over {n_forms} forms")


def check_theorem3_specialization(rng, n_forms: int = 1000,
                                  tol: float = 1e-12) -> CheckResult:
    """Real-b forms: Pauli-only route matches the general route and carries
    no phase-operator terms."""
    worst = 0.0
    s_ok = True
    for _ in range(n_forms):
        tf = tfm.random_real_typical_form(rng)
        d1 = tfm.decompose_theorem1(tf).as_dict()
        d3 = tfm.decompose_theorem3(tf).as_dict()
        worst = max(worst, max(abs(d1[k] - d3[k]) for k in d1))
        s_ok &= all(d3[k] == 0.0 for k in ("c_S", "c_Sstar", "c_Ss1",
                                           "c_Sstars2"))
    return CheckResult("theorem3-specialization", worst <= tol and s_ok,
                       f"max coefficient gap {worst:.3e}, "
                       f"S-terms zero: {s_ok}")


def check_paper_verdicts() -> CheckResult:
    """Relaxing verdicts for the named noise families: the three flip
    channels never relax, depolarizing always does, and the phase-twisted
    bit-flip relaxes exactly when |cos theta| != 1."""
    failures = []
    for q in (0.1, 0.5, 0.9):
        for name in ("bit-flip", "bit-phase-flip", "phase-flip"):
            rep = sg.relaxing_report(transfer_params(builtin(name, q)))
            if rep.relaxing:
                failures.append(f"{name} q={q} relaxing")
        rep = sg.relaxing_report(transfer_params(builtin("depolarizing", q)))
        if not rep.relaxing:
            failures.append(f"depolarizing q={q} not relaxing")
    for q in (0.25, 0.75):
        for theta in (0.0, np.pi / 6, np.pi / 2, 5 * np.pi / 6, np.pi):
            rep = sg.relaxing_report(
                transfer_params(builtin("f1-theta", q, theta)))
            expected = abs(np.cos(theta)) != 1.0
            if rep.relaxing != expected:
                failures.append(f"f1-theta q={q} theta={theta}")
    return CheckResult("paper-verdicts", not failures,
                       "all verdicts match" if not failures
                       else "; ".join(failures))


def _spectral_margin(tp: TransferParams) -> float:
    rep = sg.relaxing_report(tp)
    return max(rep.mod1, rep.mod2, abs(tp.z))


def _sample_relaxing_tf(rng, margin_cap: float = 0.9) -> tfm.TypicalForm:
    # margin <= 0.9 keeps 200 steps comfortably past the 1e-6 threshold
    while True:
        tf = tfm.random_typical_form(rng)
        if _spectral_margin(tfm.abcd(tf)) <= margin_cap:
            return tf


def _sample_non_relaxing(rng) -> ch_mod.KrausChannel:
    kind = rng.integers(4)
    q = rng.uniform(0.05, 0.95)
    if kind == 0:
        return builtin(("bit-flip", "bit-phase-flip", "phase-flip")
                       [rng.integers(3)], q)
    if kind == 1:
        return builtin("f1-theta", q, float(rng.choice([0.0, np.pi])))
    # z = +/-1 typical form: only one of b1, b2 survives
    t = rng.uniform(0, 1)
    phase = np.exp(1j * rng.uniform(0, 2 * np.pi))
    if kind == 2:
        tf = tfm.TypicalForm(a1=t, a2=0, a3=np.sqrt(1 - t**2), a4=0,
                             b1=phase, b2=0)
    else:
        tf = tfm.TypicalForm(a1=0, a2=t, a3=0, a4=np.sqrt(1 - t**2),
                             b1=0, b2=phase)
    return tfm.to_kraus(tf)


_AXIS_PROBES = np.array([
    [1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1],
], dtype=float)


def _probe_states(rng, n_random: int) -> np.ndarray:
    probes = [bloch_to_density(v) for v in _AXIS_PROBES]
    probes += [random_state(rng) for _ in range(n_random)]
    return np.array(probes)


def _evolve_probes(ch: ch_mod.KrausChannel, probes: np.ndarray,
                   steps: int) -> tuple[np.ndarray, np.ndarray]:
    """Batched orbit of probe states.  Returns (final distances to I/2,
    per-probe minimum distance over all steps)."""
    kr = np.array(ch.kraus)
    states = probes.copy()
    dist = _dist_to_mixed(states)
    min_dist = dist.copy()
    for _ in range(steps):
        states = np.einsum("jab,pbc,jdc->pad", kr, states, kr.conj())
        dist = _dist_to_mixed(states)
        np.minimum(min_dist, dist, out=min_dist)
    return dist, min_dist


def _dist_to_mixed(states: np.ndarray) -> np.ndarray:
    # trace distance to I/2 is half the Bloch norm
    rx = 2 * states[:, 0, 1].real
    ry = -2 * states[:, 0, 1].imag
    rz = (states[:, 0, 0] - states[:, 1, 1]).real
    return 0.5 * np.sqrt(rx**2 + ry**2 + rz**2)


def check_relaxing_convergence(rng, n_channels: int = 200, steps: int = 200,
                               n_random_probes: int = 10) -> CheckResult:
    """Relaxing verdict vs the long-run trajectory behaviour: relaxing
    channels drive every probe below 1e-6; non-relaxing channels leave some
    probe above 1e-3 for the whole run."""
    disagreements = 0
    for i in range(n_channels):
        if i % 2 == 0:
            ch = tfm.to_kraus(_sample_relaxing_tf(rng))
        else:
            ch = _sample_non_relaxing(rng)
        verdict = sg.relaxing_report(transfer_params(ch)).relaxing
        probes = _probe_states(rng, n_random_probes)
        final, min_dist = _evolve_probes(ch, probes, steps)
        converged = bool(np.all(final < 1e-6))
        stuck = bool(np.any(min_dist > 1e-3))
        empirical = converged and not stuck
        if verdict != empirical:
            disagreements += 1
    return CheckResult("relaxing-convergence", disagreements == 0,
                       f"{disagreements} disagreements over "
                       f"{n_channels} channels")


def _sample_tp_by_case(rng, case: sg.DiscriminantCase) -> TransferParams:
    if case is sg.DiscriminantCase.REPEATED:
        # discriminant-zero curve of the phase-twisted bit-flip family
        q = rng.uniform(0.05, 0.95)
        theta = np.arctan(q / (2 * np.sqrt(1 - q)))
        if rng.integers(2):
            theta = -theta
        return transfer_params(builtin("f1-theta", q, theta))
    while True:
        tp = tfm.abcd(tfm.random_typical_form(rng))
        _, _, disc, got = sg.block_eigenvalues(tp)
        if got is case and abs(disc) > 1e-6:
            return tp


def check_power_closed_form(rng, per_case: int = 100, n_max: int = 100,
                            tol: float = 1e-9) -> CheckResult:
    """Closed-form n-th power equals iterated block multiplication for all
    three discriminant cases."""
    worst = 0.0
    for case in sg.DiscriminantCase:
        for _ in range(per_case):
            tp = _sample_tp_by_case(rng, case)
            block = tp.block()
            acc = np.eye(2)
            zn = 1.0
            for n in range(1, n_max + 1):
                acc = block @ acc
                zn *= tp.z
                got = sg.power_closed_form(tp, n)
                dev = np.abs(got.block() - acc).max()
                dev = max(dev, abs(got.z - zn))
                worst = max(worst, dev)
    return CheckResult("power-closed-form", worst <= tol,
                       f"max deviation {worst:.3e} over 3x{per_case} "
                       f"channels, n <= {n_max}")


def check_synthesis_roundtrip(rng, n_forms: int = 1000,
                              tol: float = 1e-10) -> CheckResult:
    """synthesize recovers the transfer parameters of random typical forms,
    and rejects the known-infeasible instance with the right diagnosis."""
    worst = 0.0
    for _ in range(n_forms):
        tp = tfm.abcd(tfm.random_typical_form(rng))
        tp2 = tfm.abcd(tfm.synthesize(tp))
        worst = max(worst, max(abs(tp.a - tp2.a), abs(tp.b - tp2.b),
                               abs(tp.c - tp2.c), abs(tp.d - tp2.d),
                               abs(tp.z - tp2.z)))
    try:
        tfm.synthesize(TransferParams(1, 0, 0, 1, 0))
        rejected = False
        diag = "not raised"
    except tfm.InfeasibleError as exc:
        rejected = "|p|" in str(exc) and "|b1|^2" in str(exc)
        diag = str(exc)
    return CheckResult("synthesis-roundtrip", worst <= tol and rejected,
                       f"max parameter gap {worst:.3e}; infeasible "
                       f"rejection: {diag}")


def check_convertibility_soundness(rng, n_pairs: int = 1000) -> CheckResult:
    """Channel outputs never leave the reachable regions, and the witness
    pair separates the cylinder from the cuboid."""
    ok = True
    for _ in range(n_pairs):
        tf = tfm.random_typical_form(rng)
        ch = tfm.to_kraus(tf)
        rho = random_state(rng)
        r = _bloch_of(rho)
        s = _bloch_of(ch_mod.apply(ch, rho))
        ok &= conv.convertible_sio(r, s)
        tf3 = tfm.random_real_typical_form(rng)
        s3 = _bloch_of(ch_mod.apply(tfm.to_kraus(tf3), rho))
        ok &= conv.convertible_pauli_sio(r, s3)
    witness_r = np.array([0.6, 0.0, 0.0])
    witness_s = np.array([0.0, 0.6, 0.0])
    witness = (conv.convertible_sio(witness_r, witness_s)
               and not conv.convertible_pauli_sio(witness_r, witness_s))
    return CheckResult("convertibility-soundness", ok and witness,
                       f"soundness: {ok}, witness separates: {witness}")


def _bloch_of(rho: np.ndarray) -> np.ndarray:
    return np.array([np.trace(rho @ s).real for s in (SIGMA1, SIGMA2, SIGMA3)])


def run_all(seed: int, samples: int = 100) -> list[CheckResult]:
    """Run every check at the given sample count; deterministic per seed."""
    rng = np.random.default_rng(seed)
    return [
        check_theorem1_identity(rng, n_forms=samples, n_states=5),
        check_theorem3_specialization(rng, n_forms=samples),
        check_paper_verdicts(),
        check_relaxing_convergence(rng, n_channels=samples,
                                   n_random_probes=4),
        check_power_closed_form(rng, per_case=max(samples // 10, 10),
                                n_max=50),
        check_synthesis_roundtrip(rng, n_forms=samples),
        check_convertibility_soundness(rng, n_pairs=samples),
    ]
