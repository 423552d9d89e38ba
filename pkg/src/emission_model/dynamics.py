"""Dynamics of energy-emitting bodies.

Every function takes plain floats or numpy arrays and broadcasts, so the
identity checks in :mod:`emission_model.checks` evaluate whole random samples
in one call. All quantities are SI.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import DEFAULT_CONSTANTS, PhysicalConstants

MODES = ("exact", "linearized")


class DivergenceError(ValueError):
    """The requested quantity diverges at the given input (e.g. critical radius at v = 0)."""


@dataclass(frozen=True)
class Body:
    """Point mass: initial mass m0 (kg), emission coefficient k (1/s), speed v (m/s), acceleration a (m/s^2)."""

    m0: float
    k: float = 0.0
    v: float = 0.0
    a: float = 0.0

    def __post_init__(self) -> None:
        if np.any(np.asarray(self.m0) <= 0):
            raise ValueError("body mass must be > 0")
        if np.any(np.asarray(self.k) < 0):
            raise ValueError("emission coefficient must be >= 0")
        if np.any(np.asarray(self.v) < 0):
            raise ValueError("speed must be >= 0")


@dataclass(frozen=True)
class PairConfiguration:
    """Two bodies at separation r exchanging emitted energy.

    ``v_emission`` is the speed of matter emitted by either body and
    ``v_emission_other`` the speed for the partner (defaults to the same);
    ``b_coeff`` ties body speed to mass, V = 1 / (b m).
    """

    body_a: Body
    body_b: Body
    r: float
    v_emission: float = DEFAULT_CONSTANTS.c / 10
    b_coeff: float = 1.0
    v_emission_other: float | None = None

    def __post_init__(self) -> None:
        if np.any(np.asarray(self.r) <= 0):
            raise ValueError("separation must be > 0")
        if np.any(np.asarray(self.v_emission) <= 0):
            raise ValueError("emission speed must be > 0")
        if self.v_emission_other is not None and np.any(np.asarray(self.v_emission_other) <= 0):
            raise ValueError("emission speed must be > 0")

    @property
    def k(self):
        if np.any(np.asarray(self.body_a.k) != np.asarray(self.body_b.k)):
            raise ValueError("pair model assumes both bodies share one emission coefficient")
        return self.body_a.k

    def phi(self, constants: PhysicalConstants = DEFAULT_CONSTANTS):
        """Effective coupling constant of the inverse-square attraction."""
        beta2 = np.square(self.v_emission / constants.c)
        return self.k * self.b_coeff / (2 * np.pi) / np.square(1 + beta2)


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def _lorentz_factor(v, c):
    beta = np.asarray(v) / c
    if np.any(beta >= 1):
        raise ValueError("speed must be below the speed of light")
    return 1.0 / np.sqrt(1.0 - beta * beta)


def energy_at(e0, k, t, mode: str = "exact"):
    """Energy left after time ``t``: e0 exp(-kt), or e0 (1 - kt) when linearized."""
    _check_mode(mode)
    if mode == "exact":
        return e0 * np.exp(-np.multiply(k, t))
    return e0 * (1 - np.multiply(k, t))


def mass_at(m0, k, t, mode: str = "exact"):
    return energy_at(m0, k, t, mode)


def mass_loss(m0, k, t):
    """Mass emitted over ``t`` in the linear regime, m0 k t."""
    return m0 * np.multiply(k, t)


def k_from_observation(e0, e, t):
    """Relative energy loss per unit time, (e0 - e) / (e0 t)."""
    if np.any(np.asarray(t) == 0) or np.any(np.asarray(e0) == 0):
        raise ValueError("need e0 != 0 and t != 0")
    return (e0 - e) / (np.multiply(e0, t))


def ratio_invariance_check(a: Body, b: Body, t, strict: bool = True):
    """Relative drift of the mass ratio and the constant-acceleration force ratio between 0 and t.

    With equal emission coefficients both drifts vanish. ``strict=False``
    allows unequal coefficients, where the drift is |exp((k_b - k_a) t) - 1|.
    """
    if strict and np.any(np.asarray(a.k) != np.asarray(b.k)):
        raise ValueError("ratio invariance holds only for equal emission coefficients")
    mass0 = a.m0 / b.m0
    mass_t = mass_at(a.m0, a.k, t) / mass_at(b.m0, b.k, t)
    force0 = force_const_accel(a, 0.0) / force_const_accel(b, 0.0)
    force_t = force_const_accel(a, t) / force_const_accel(b, t)
    return np.abs(mass_t - mass0) / np.abs(mass0), np.abs(force_t - force0) / np.abs(force0)


def force_const_accel(body: Body, t, mode: str = "exact"):
    """Force keeping ``body`` at constant acceleration while it loses mass."""
    return body.a * mass_at(body.m0, body.k, t, mode)


def cocoon_density(m, k, r):
    """Emitted-energy density at distance r: k m / (4 pi r^2), and k m at the centre."""
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise ValueError("radius must be >= 0")
    km = np.multiply(k, m)
    with np.errstate(divide="ignore", invalid="ignore"):
        shell = km / (4 * np.pi * r * r)
    out = np.where(r == 0, km, shell)
    return out if out.ndim else float(out)


def emitted_mass(m, a, k11):
    """Unbalanced mass emitted per unit time by an accelerating body, k11 a m."""
    return k11 * np.multiply(a, m)


def _gravity_ratio(m, r, constants):
    return constants.gravitational * m / (r * constants.c**2)


def k11_coefficient(m, r, v_e, constants: PhysicalConstants = DEFAULT_CONSTANTS):
    """(1/v_e)(1 + G m / (r c^2)); tends to 1/v_e when the gravitational term is negligible."""
    if np.any(np.asarray(r) <= 0):
        raise ValueError("radius must be > 0")
    if np.any(np.asarray(v_e) <= 0):
        raise ValueError("emission speed must be > 0")
    return (1 + _gravity_ratio(m, r, constants)) / v_e


def inertia_force(m, a, r, constants: PhysicalConstants = DEFAULT_CONSTANTS):
    """Force on a body accelerating inside the cocoon of an equal mass at radius r."""
    if np.any(np.asarray(r) <= 0):
        raise ValueError("radius must be > 0")
    return np.multiply(a, m) * (1 + _gravity_ratio(m, r, constants))


def inertia_impulse(m, a, t, r, constants: PhysicalConstants = DEFAULT_CONSTANTS):
    return inertia_force(m, a, r, constants) * t


def emission_momentum(m, a, t, v_e, k11):
    """Momentum carried off by emitted mass over time t."""
    return emitted_mass(m, a, k11) * t * v_e


def _relativistic_bracket(v, constants):
    beta2 = np.square(np.asarray(v, dtype=float) / constants.c)
    if np.any(beta2 >= 1):
        raise ValueError("speed must be below the speed of light")
    return (1 + beta2) / (1 - beta2) ** 1.5


def critical_radius(m, v, constants: PhysicalConstants = DEFAULT_CONSTANTS):
    """Radius at which the cocoon inertia force matches the relativistic force at speed v."""
    v = np.asarray(v, dtype=float)
    if np.any(v < 0):
        raise ValueError("speed must be >= 0")
    if np.any(v == 0):
        raise DivergenceError("critical radius diverges at v = 0")
    beta2 = np.square(v / constants.c)
    if np.any(beta2 >= 1):
        raise ValueError("speed must be below the speed of light")
    # bracket - 1 without cancellation at small v
    excess = np.expm1(np.log1p(beta2) - 1.5 * np.log1p(-beta2))
    out = constants.gravitational * m / constants.c**2 / excess
    return out if np.ndim(out) else float(out)


def relativistic_force(m0, a, v, constants: PhysicalConstants = DEFAULT_CONSTANTS):
    """a m0 (1 + v^2/c^2) / (1 - v^2/c^2)^(3/2)."""
    if np.any(np.asarray(v) < 0):
        raise ValueError("speed must be >= 0")
    return np.multiply(a, m0) * _relativistic_bracket(v, constants)


def flux_asymmetry(
    pair: PairConfiguration, e_emitted, constants: PhysicalConstants = DEFAULT_CONSTANTS
):
    """Energy pushed into the partner's cocoon towards (+) and away from (-) the emitter, and their difference.

    Returns ``(delta_plus, delta_minus, work)``.
    """
    v_d = pair.v_emission
    v_o = pair.v_emission if pair.v_emission_other is None else pair.v_emission_other
    scale = e_emitted / (8 * np.pi * np.square(pair.r) * constants.c**2)
    prod = np.multiply(v_d, v_o)
    plus = scale * np.square((v_d + v_o) / prod)
    minus = scale * np.square((v_d - v_o) / prod)
    return plus, minus, plus - minus


def gravity_analog_force(
    pair: PairConfiguration, on: str = "A", constants: PhysicalConstants = DEFAULT_CONSTANTS
):
    """Attractive force on body ``on`` ("A" or "B"): phi m_A m_B / r^2."""
    if on not in ("A", "B"):
        raise ValueError("on must be 'A' or 'B'")
    own, other = (pair.body_a, pair.body_b) if on == "A" else (pair.body_b, pair.body_a)
    return pair.phi(constants) * (np.multiply(own.m0, other.m0)) / np.square(pair.r)


def kinetic_energy_received(pair: PairConfiguration, t, constants: PhysicalConstants = DEFAULT_CONSTANTS):
    """Kinetic energy each body picks up from the partner's emission over time t: ``(E_A, E_B)``."""
    if np.any(np.asarray(t) < 0):
        raise ValueError("time must be >= 0")
    scale = pair.k * np.multiply(t, constants.c**2) / (4 * np.pi * np.square(pair.r))
    return pair.body_b.m0 * scale, pair.body_a.m0 * scale


def relativistic_energy_terms(body: Body, t, constants: PhysicalConstants = DEFAULT_CONSTANTS):
    """Potential energy remaining and energy emitted by a moving body after time t: ``(E_p, E_e)``."""
    c2 = constants.c**2
    gamma = _lorentz_factor(body.v, constants.c)
    contracted = np.multiply(body.k, t) / gamma
    e_p = body.m0 * c2 * gamma * (1 - contracted / c2)
    e_e = body.m0 * gamma * contracted
    return e_p, e_e


def relativistic_impulse_terms(body: Body, t, constants: PhysicalConstants = DEFAULT_CONSTANTS):
    """Body momentum remaining and momentum carried off by emission after time t: ``(I_b, I_e)``."""
    c2 = constants.c**2
    gamma = _lorentz_factor(body.v, constants.c)
    contracted = np.multiply(body.k, t) / gamma
    i_b = body.m0 * body.v * gamma * (1 - contracted / c2)
    i_e = body.m0 * gamma * body.v * contracted / c2
    return i_b, i_e


def emitted_energy(body: Body, t, constants: PhysicalConstants = DEFAULT_CONSTANTS):
    """Energy lost over time t with time dilation applied both ways; independent of speed."""
    gamma = _lorentz_factor(body.v, constants.c)
    return body.k * body.m0 * constants.c**2 * gamma * t / gamma


def relativistic_conservation_check(body: Body, t, constants: PhysicalConstants = DEFAULT_CONSTANTS):
    """Relative residuals of total energy and total impulse against gamma m0 c^2 and gamma m0 v.

    At v = 0 the reference impulse is zero and the impulse residual is absolute.
    """
    if np.any(np.asarray(t) < 0):
        raise ValueError("time must be >= 0")
    gamma = _lorentz_factor(body.v, constants.c)
    e_p, e_e = relativistic_energy_terms(body, t, constants)
    i_b, i_e = relativistic_impulse_terms(body, t, constants)
    e_ref = body.m0 * constants.c**2 * gamma
    p_ref = body.m0 * body.v * gamma
    energy_res = np.abs(e_p + e_e - e_ref) / e_ref
    diff = np.abs(i_b + i_e - p_ref)
    with np.errstate(divide="ignore", invalid="ignore"):
        impulse_res = np.where(p_ref > 0, diff / np.where(p_ref > 0, p_ref, 1.0), diff)
    return energy_res, impulse_res
