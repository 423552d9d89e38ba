"""Seeded randomized identity checks for the dynamics model.

Each check draws ``trials`` random configurations, evaluates an identity
that must hold by construction, and reports the worst residual against a
fixed bound.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import dynamics as dyn
from .constants import DEFAULT_CONSTANTS, PhysicalConstants


@dataclass(frozen=True)
class CheckResult:
    name: str
    identity: str
    max_residual: float
    bound: float
    trials: int

    @property
    def passed(self) -> bool:
        return bool(self.max_residual <= self.bound)


def _loguniform(rng, lo, hi, n):
    return np.exp(rng.uniform(np.log(lo), np.log(hi), n))


def run_identity_suite(
    seed: int = 0, trials: int = 1000, constants: PhysicalConstants = DEFAULT_CONSTANTS
) -> list[CheckResult]:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    c = constants.c
    n = trials

    m0 = _loguniform(rng, 1e-3, 1e3, n)
    m1 = _loguniform(rng, 1e-3, 1e3, n)
    k = _loguniform(rng, 1e-4, 1e-1, n)
    acc = _loguniform(rng, 1e-3, 1e3, n)
    r = _loguniform(rng, 1e-3, 1e3, n)
    t = rng.uniform(0, 10, n) / k
    v = rng.uniform(0, 0.99, n) * c
    v_rel = rng.uniform(1e-3, 0.99, n) * c
    results = []

    def add(name, identity, residual, bound):
        results.append(CheckResult(name, identity, float(np.max(residual)), bound, n))

    # exact vs linearized decay: remainder bounded by (kt)^2/2 for kt <= 0.1
    kt_small = rng.uniform(0, 0.1, n)
    gap = np.abs(dyn.energy_at(m0, kt_small, 1.0) - dyn.energy_at(m0, kt_small, 1.0, "linearized"))
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(kt_small > 0, gap / (m0 * kt_small**2 / 2), 0.0)
    add("taylor_remainder", "e0 exp(-kt) vs e0 (1-kt)", ratio, 1.0)

    # m = -(1/k) dm/dt via central differences
    dt = 1e-6 / k
    deriv = (dyn.mass_at(m0, k, t + dt) - dyn.mass_at(m0, k, t - dt)) / (2 * dt)
    m_t = dyn.mass_at(m0, k, t)
    add("mass_loss_rate", "m = -(1/k) dm/dt", np.abs(-deriv / k - m_t) / m_t, 1e-6)

    kt = rng.uniform(1e-3, 1.0, n)
    k_back = dyn.k_from_observation(m0, dyn.energy_at(m0, k, kt / k, "linearized"), kt / k)
    add("k_observation_roundtrip", "k = (E0 - E)/(E0 t)", np.abs(k_back - k) / k, 1e-10)

    a_body = dyn.Body(m0, k, a=acc)
    b_body = dyn.Body(m1, k, a=acc[::-1])
    mass_drift, force_drift = dyn.ratio_invariance_check(a_body, b_body, t)
    add("mass_ratio_constancy", "m_A/m_B = m_A0/m_B0 for equal k", mass_drift, 1e-12)
    add("force_ratio_constancy", "F_A/F_B = F_A0/F_B0 for equal k", force_drift, 1e-12)

    shell = dyn.cocoon_density(m0, k, r) * 4 * np.pi * r**2
    add("cocoon_shell_conservation", "theta(r) 4 pi r^2 = k m", np.abs(shell - k * m0) / (k * m0), 1e-12)

    radius = dyn.critical_radius(m0, v_rel, constants)
    f_inertia = dyn.inertia_force(m0, acc, radius, constants)
    f_rel = dyn.relativistic_force(m0, acc, v_rel, constants)
    add("inertia_relativistic_match", "cocoon inertia force at critical radius = relativistic force",
        np.abs(f_inertia - f_rel) / f_rel, 1e-12)

    v_slow = rng.uniform(0, 1e-7, n) * c
    v_slow = np.where(v_slow == 0, 1e-7 * c, v_slow)
    v_e = _loguniform(rng, 1e3, c, n)
    k11 = dyn.k11_coefficient(m0, dyn.critical_radius(m0, v_slow, constants), v_e, constants)
    add("k11_slow_limit", "k11 -> 1/V_e as v -> 0", np.abs(k11 * v_e - 1), 1e-12)

    v_d = _loguniform(rng, 1e3, c, n)
    # within a factor 10 of v_d: wider spreads make dE+ - dE- ill-conditioned
    v_o = v_d * _loguniform(rng, 0.1, 10.0, n)
    e_emit = _loguniform(rng, 1e-3, 1e3, n)
    pair = dyn.PairConfiguration(a_body, b_body, r, v_d, 1.0, v_o)
    plus, minus, work = dyn.flux_asymmetry(pair, e_emit, constants)
    closed = e_emit / (8 * np.pi * r**2 * c**2) * 4 / (v_d * v_o)
    add("flux_work", "W = dE+ - dE- = 4 E_e / (8 pi R^2 c^2 V_D V_D')",
        np.abs(work - closed) / closed, 1e-12)

    b_coeff = _loguniform(rng, 1e-3, 1e3, n)
    pair = dyn.PairConfiguration(a_body, b_body, r, v_d, b_coeff)
    f_a = dyn.gravity_analog_force(pair, "A", constants)
    f_b = dyn.gravity_analog_force(pair, "B", constants)
    add("reactive_force_symmetry", "|F(A)| = |F(B)|", np.abs(f_a - f_b), 0.0)

    e_a, e_b = dyn.kinetic_energy_received(pair, t, constants)
    p_a = m0 * np.sqrt(2 * e_a / m0)
    p_b = m1 * np.sqrt(2 * e_b / m1)
    with np.errstate(divide="ignore", invalid="ignore"):
        mom = np.where(p_a > 0, np.abs(p_a - p_b) / p_a, np.abs(p_a - p_b))
    add("momentum_equality", "|m_A V(A)| = |m_B V(B)|", mom, 1e-12)

    moving = dyn.Body(m0, k, v)
    e_e = dyn.emitted_energy(moving, t, constants)
    ref = m0 * c**2 * k * t
    with np.errstate(divide="ignore", invalid="ignore"):
        emit_res = np.where(ref > 0, np.abs(e_e - ref) / ref, np.abs(e_e - ref))
    add("emitted_energy_speed_invariance", "E_e = E_0 k t", emit_res, 1e-12)

    energy_res, impulse_res = dyn.relativistic_conservation_check(moving, t, constants)
    add("relativistic_energy", "E_p + E_e = m0 c^2 / sqrt(1 - v^2/c^2)", energy_res, 1e-12)
    add("relativistic_impulse", "I_b + I_e = m0 v / sqrt(1 - v^2/c^2)", impulse_res, 1e-12)
    return results
