"""Physical constants shared by the nuclear and dynamics models."""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace

#: Leading constant of the k extraction formula as printed (rounded).
LITERAL_K_CONSTANT = 0.01349

K_CONSTANT_MODES = ("exact_4pi", "literal_01349")


@dataclass(frozen=True)
class PhysicalConstants:
    """Nucleon masses (u), mass-energy factor (MeV/u), and SI dynamics constants.

    ``gravitational`` is only used by the dynamics model.
    """

    m_p: float = 1.007276
    m_n: float = 1.008665
    amu_to_mev: float = 931.04
    c: float = 2.99792458e8
    gravitational: float = 6.674e-11

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise ValueError(f"constant {f.name} must be finite and > 0, got {value!r}")
        if self.m_n <= self.m_p:
            raise ValueError("neutron mass must exceed proton mass")

    def with_overrides(self, **overrides: float) -> "PhysicalConstants":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


DEFAULT_CONSTANTS = PhysicalConstants()


def k_constant(constants: PhysicalConstants = DEFAULT_CONSTANTS, mode: str = "exact_4pi") -> float:
    """Factor converting ``dE / (g * nucleon_mass_sum)`` into an emission coefficient.

    ``exact_4pi`` gives 4*pi/amu_to_mev (about 0.01349767 with the default factor);
    ``literal_01349`` gives the rounded 0.01349 regardless of ``amu_to_mev``.
    """
    if mode == "exact_4pi":
        return 4.0 * math.pi / constants.amu_to_mev
    if mode == "literal_01349":
        return LITERAL_K_CONSTANT
    raise ValueError(f"unknown k-constant mode {mode!r}; expected one of {K_CONSTANT_MODES}")
