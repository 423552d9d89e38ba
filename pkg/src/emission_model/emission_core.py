"""Geometry factors, emission coefficients, and coefficient statistics for nuclei."""

from __future__ import annotations

import enum
import math
import statistics
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .constants import DEFAULT_CONSTANTS, PhysicalConstants, k_constant

#: Largest integer neighbour count a nucleon can have (floor of 4*pi).
MAX_NEIGHBOURS = math.floor(4 * math.pi)

LIGHT_NUCLEUS_MAX_A = 50


class Provenance(str, enum.Enum):
    COMPUTED = "computed_from_binding"
    INFERRED = "inferred_from_decay"
    FIXTURE = "fixture"


@dataclass(frozen=True)
class GeometryFactor:
    a: int
    g: Fraction

    def __float__(self) -> float:
        return float(self.g)

    @property
    def branch(self) -> int:
        """1-based index of the piecewise branch that produced ``g``."""
        return _branch(self.a)


@dataclass(frozen=True)
class EmissionCoefficient:
    nuclide_id: str | None
    k: float
    provenance: Provenance = Provenance.COMPUTED
    warning: str | None = None


@dataclass(frozen=True)
class CoefficientStats:
    count: int
    mean: float
    min: float
    max: float


def _branch(a: int) -> int:
    if a <= 4:
        return 1
    if a < 19:
        return 2
    if a <= 25:
        return 3
    return 4


def geometry_factor(a: int) -> GeometryFactor:
    """Average contact-neighbour factor g(A) of a compact nucleus.

    The four branches are kept exactly as tabulated, including the jumps at
    A=19 and A=25 and the ``A - 24`` offset in the last branch.
    """
    if isinstance(a, bool) or int(a) != a:
        raise TypeError(f"mass number must be an integer, got {a!r}")
    a = int(a)
    if a < 2:
        raise ValueError(f"geometry factor needs a >= 2, got {a}")
    branch = _branch(a)
    if branch == 1:
        g = Fraction(a - 1)
    elif branch == 2:
        g = Fraction(12 + 6 * (a - 4), a)
    elif branch == 3:
        g = Fraction(96 + 8 * (a - 19), a)
    else:
        g = Fraction(136 + 6 * (a - 24), a)
    return GeometryFactor(a, g)


def nucleon_mass_sum(a: int, n_p: int, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Summed free-nucleon mass in atomic mass units."""
    return n_p * constants.m_p + (a - n_p) * constants.m_n


def _validate(a: int, n_p: int) -> str | None:
    if a < 2:
        raise ValueError(f"mass number must be >= 2, got {a}")
    if not 1 <= n_p <= a:
        raise ValueError(f"proton count must lie in [1, {a}], got {n_p}")
    if a == 2:
        return "A=2 lies outside the calibrated range 2 < A <= 50"
    if a > LIGHT_NUCLEUS_MAX_A:
        return f"A={a} lies outside the calibrated range 2 < A <= 50"
    return None


def emission_coefficient(
    delta_e: float,
    a: int,
    n_p: int,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
    mode: str = "exact_4pi",
    nuclide_id: str | None = None,
) -> EmissionCoefficient:
    """Emission coefficient (1/s) implied by a binding energy ``delta_e`` in MeV.

    k = C * dE / (g(A) * [n_p m_p + (A - n_p) m_n]) with C = 4*pi/amu_to_mev,
    or the rounded 0.01349 when ``mode="literal_01349"``.
    """
    warning = _validate(a, n_p)
    if not delta_e >= 0:
        raise ValueError(f"binding energy must be >= 0 MeV, got {delta_e}")
    denom = float(geometry_factor(a).g) * nucleon_mass_sum(a, n_p, constants)
    k = k_constant(constants, mode) * delta_e / denom
    return EmissionCoefficient(nuclide_id, k, Provenance.COMPUTED, warning)


def binding_energy_from_k(
    k: float,
    a: int,
    n_p: int,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
    mode: str = "exact_4pi",
) -> float:
    """Binding energy (MeV) for emission coefficient ``k``; inverse of :func:`emission_coefficient`."""
    _validate(a, n_p)
    return k * float(geometry_factor(a).g) * nucleon_mass_sum(a, n_p, constants) / k_constant(
        constants, mode
    )


def _values(ks: Sequence[EmissionCoefficient | float]) -> list[float]:
    return [x.k if isinstance(x, EmissionCoefficient) else float(x) for x in ks]


def coefficient_stats(ks: Sequence[EmissionCoefficient | float]) -> CoefficientStats:
    values = _values(ks)
    if not values:
        raise ValueError("coefficient statistics need at least one value")
    # fsum keeps the mean independent of input order; the clamp absorbs the final rounding
    lo, hi = min(values), max(values)
    mean = min(max(math.fsum(values) / len(values), lo), hi)
    return CoefficientStats(len(values), mean, lo, hi)


def select_max_mean_subset(
    ks: Sequence[EmissionCoefficient | float], relative_tolerance: float = 0.05
) -> tuple[list[list[float]], list[float]]:
    """Partition coefficients into groups of mutually close values and pick the group with the largest mean.

    Values are swept in ascending order; a value joins the current group while
    ``value - group_min <= relative_tolerance * value``, which keeps every pair in
    a group within the tolerance. Ties on the mean go to the larger group, then
    to the group holding the largest element.
    """
    values = sorted(_values(ks))
    if not values:
        raise ValueError("cannot partition an empty coefficient list")
    if not relative_tolerance > 0:
        raise ValueError("relative_tolerance must be > 0")

    groups: list[list[float]] = [[values[0]]]
    for v in values[1:]:
        if v - groups[-1][0] <= relative_tolerance * abs(v):
            groups[-1].append(v)
        else:
            groups.append([v])

    chosen = max(groups, key=lambda grp: (statistics.fmean(grp), len(grp), grp[-1]))
    return groups, chosen
