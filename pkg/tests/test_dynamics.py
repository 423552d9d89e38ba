import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from emission_model import dynamics as dyn
from emission_model.checks import run_identity_suite
from emission_model.constants import DEFAULT_CONSTANTS

C = DEFAULT_CONSTANTS.c
G = DEFAULT_CONSTANTS.gravitational

pos = st.floats(1e-3, 1e3)
rate = st.floats(1e-4, 1e-1)
beta = st.floats(1e-3, 0.99)


def test_energy_modes():
    assert dyn.energy_at(1.0, 0.01945, 1.0) == pytest.approx(0.980737930859307185, rel=1e-14)
    assert dyn.energy_at(1.0, 0.01945, 1.0, "linearized") == pytest.approx(0.98055, rel=1e-15)
    with pytest.raises(ValueError):
        dyn.energy_at(1.0, 0.1, 1.0, "quadratic")


def test_t_zero_is_identity():
    assert dyn.mass_at(3.0, 0.05, 0.0) == 3.0
    assert dyn.mass_loss(3.0, 0.05, 0.0) == 0.0
    body = dyn.Body(2.0, 0.01, 0.5 * C)
    e_p, e_e = dyn.relativistic_energy_terms(body, 0.0)
    assert e_e == 0.0
    assert e_p == pytest.approx(2.0 * C**2 / math.sqrt(0.75), rel=1e-15)


@given(pos, rate, st.floats(0, 10), st.floats(0, 10))
def test_linear_loss_additive(m0, k, t1, t2):
    assert dyn.mass_loss(m0, k, t1 + t2) == pytest.approx(dyn.mass_loss(m0, k, t1) + dyn.mass_loss(m0, k, t2),
                                                          rel=1e-12, abs=1e-300)


@given(pos, rate, st.floats(1e-3, 1))
def test_k_roundtrip(e0, k, kt):
    t = kt / k
    assert dyn.k_from_observation(e0, dyn.energy_at(e0, k, t, "linearized"), t) == pytest.approx(k, rel=1e-10)


def test_k_observation_errors():
    with pytest.raises(ValueError):
        dyn.k_from_observation(1.0, 0.9, 0.0)


@given(pos, pos, rate, pos, st.floats(0, 100))
def test_ratio_invariance(m_a, m_b, k, acc, t):
    mass_drift, force_drift = dyn.ratio_invariance_check(dyn.Body(m_a, k, a=acc), dyn.Body(m_b, k, a=acc), t)
    assert mass_drift <= 1e-12 and force_drift <= 1e-12


def test_ratio_invariance_unequal_k():
    a, b = dyn.Body(1.0, 0.02, a=1.0), dyn.Body(1.0, 0.01, a=1.0)
    with pytest.raises(ValueError):
        dyn.ratio_invariance_check(a, b, 1.0)
    drift, _ = dyn.ratio_invariance_check(a, b, 10.0, strict=False)
    assert drift == pytest.approx(abs(math.exp(-0.1) - 1), rel=1e-12)


@given(pos, rate, pos, st.floats(1.01, 100))
def test_cocoon_inverse_square(m, k, r, factor):
    near, far = dyn.cocoon_density(m, k, r), dyn.cocoon_density(m, k, r * factor)
    assert near / far == pytest.approx(factor**2, rel=1e-12)


def test_cocoon_centre():
    assert dyn.cocoon_density(2.0, 0.5, 0.0) == 1.0
    with pytest.raises(ValueError):
        dyn.cocoon_density(1.0, 1.0, -1.0)


def test_k11_value():
    # the Sun at its own radius: 1/v_e (1 + G M / (R c^2))
    m, r, v_e = 1.989e30, 6.957e8, 1e5
    expected = (1 + G * m / (r * C**2)) / v_e
    assert dyn.k11_coefficient(m, r, v_e) == pytest.approx(expected, rel=1e-15)
    assert dyn.k11_coefficient(1.0, 1.0, 2.0) == pytest.approx(0.5, rel=1e-25 + 1e-15)
    with pytest.raises(ValueError):
        dyn.k11_coefficient(1.0, 0.0, 1.0)


def test_critical_radius_small_v_series():
    m, v = 1.0, 1e-3 * C
    series = 2 * G * m / (5 * v**2)
    assert dyn.critical_radius(m, v) == pytest.approx(series, rel=1e-5)


def test_critical_radius_divergence_and_domain():
    with pytest.raises(dyn.DivergenceError):
        dyn.critical_radius(1.0, 0.0)
    with pytest.raises(ValueError):
        dyn.critical_radius(1.0, C)
    with pytest.raises(ValueError):
        dyn.critical_radius(1.0, -1.0)


def test_critical_radius_decreases_with_speed():
    radii = dyn.critical_radius(1.0, np.linspace(1e-4, 0.99, 500) * C)
    assert np.all(np.diff(radii) < 0)


def test_relativistic_force_increases_with_speed():
    forces = dyn.relativistic_force(1.0, 1.0, np.linspace(0, 0.99, 500) * C)
    assert forces[0] == 1.0
    assert np.all(np.diff(forces) > 0)


@given(pos, pos, beta)
def test_inertia_matches_relativistic(m, acc, b):
    v = b * C
    r = dyn.critical_radius(m, v)
    assert dyn.inertia_force(m, acc, r) == pytest.approx(dyn.relativistic_force(m, acc, v), rel=1e-12)


def test_inertia_impulse_and_momentum():
    assert dyn.inertia_impulse(2.0, 3.0, 4.0, 1e30) == pytest.approx(24.0, rel=1e-12)
    assert dyn.emission_momentum(2.0, 3.0, 4.0, 5.0, 0.2) == pytest.approx(24.0, rel=1e-15)


def _pair(m_a, m_b, k, r, **kw):
    return dyn.PairConfiguration(dyn.Body(m_a, k), dyn.Body(m_b, k), r, **kw)


@given(pos, pos, rate, pos, st.floats(1.01, 100))
def test_gravity_analog_inverse_square(m_a, m_b, k, r, factor):
    near = dyn.gravity_analog_force(_pair(m_a, m_b, k, r))
    far = dyn.gravity_analog_force(_pair(m_a, m_b, k, r * factor))
    assert near / far == pytest.approx(factor**2, rel=1e-12)


@given(pos, pos, rate, pos, st.floats(1.01, 100))
def test_gravity_analog_bilinear(m_a, m_b, k, r, factor):
    base = dyn.gravity_analog_force(_pair(m_a, m_b, k, r))
    assert dyn.gravity_analog_force(_pair(m_a * factor, m_b, k, r)) == pytest.approx(base * factor, rel=1e-12)
    assert dyn.gravity_analog_force(_pair(m_a, m_b * factor, k, r)) == pytest.approx(base * factor, rel=1e-12)


@given(pos, pos, rate, pos)
def test_reactive_symmetry(m_a, m_b, k, r):
    pair = _pair(m_a, m_b, k, r)
    assert dyn.gravity_analog_force(pair, "A") == dyn.gravity_analog_force(pair, "B")


def test_phi_falls_with_emission_speed():
    speeds = np.linspace(1e-3, 1, 50) * C
    phis = [_pair(1.0, 1.0, 0.01, 1.0, v_emission=v).phi() for v in speeds]
    assert all(a > b for a, b in zip(phis, phis[1:]))
    assert _pair(1.0, 1.0, 0.01, 1.0, v_emission=C).phi() == pytest.approx(0.01 / (2 * np.pi) / 4, rel=1e-15)


def test_pair_validation():
    with pytest.raises(ValueError):
        _pair(1.0, 1.0, 0.01, 0.0)
    with pytest.raises(ValueError):
        dyn.PairConfiguration(dyn.Body(1.0, 0.01), dyn.Body(1.0, 0.02), 1.0).phi()
    with pytest.raises(ValueError):
        dyn.gravity_analog_force(_pair(1.0, 1.0, 0.01, 1.0), "C")
    with pytest.raises(ValueError):
        dyn.Body(0.0)


def test_flux_equal_speeds():
    pair = _pair(1.0, 1.0, 0.01, 2.0, v_emission=C / 2)
    plus, minus, work = dyn.flux_asymmetry(pair, 5.0)
    assert minus == 0.0
    assert work == pytest.approx(5.0 / (8 * np.pi * 4 * C**2) * 4 / (C / 2) ** 2, rel=1e-14)


@given(pos, pos, rate, pos, st.floats(0, 1e3))
def test_momentum_equality(m_a, m_b, k, r, t):
    e_a, e_b = dyn.kinetic_energy_received(_pair(m_a, m_b, k, r), t)
    assert math.sqrt(2 * e_a * m_a) == pytest.approx(math.sqrt(2 * e_b * m_b), rel=1e-12)


@given(pos, rate, st.floats(0, 0.99), st.floats(0, 100))
def test_emitted_energy_independent_of_speed(m0, k, b, t):
    moving = dyn.emitted_energy(dyn.Body(m0, k, b * C), t)
    assert moving == pytest.approx(dyn.emitted_energy(dyn.Body(m0, k), t), rel=1e-12, abs=0)


@given(pos, rate, st.floats(0, 0.99), st.floats(0, 100))
def test_relativistic_conservation(m0, k, b, t):
    energy_res, impulse_res = dyn.relativistic_conservation_check(dyn.Body(m0, k, b * C), t)
    assert energy_res <= 1e-12 and impulse_res <= 1e-12


def test_lorentz_domain():
    with pytest.raises(ValueError):
        dyn.emitted_energy(dyn.Body(1.0, 0.01, C), 1.0)


def test_identity_suite_passes():
    results = run_identity_suite(seed=7, trials=500)
    assert len(results) == 14
    assert [r.name for r in results if not r.passed] == []


def test_identity_suite_deterministic():
    first = [r.max_residual for r in run_identity_suite(seed=3, trials=200)]
    second = [r.max_residual for r in run_identity_suite(seed=3, trials=200)]
    assert first == second
