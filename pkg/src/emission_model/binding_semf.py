"""Modified semi-empirical binding energy and the modified-vs-original comparison."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from .constants import DEFAULT_CONSTANTS, PhysicalConstants, k_constant
from .emission_core import geometry_factor, nucleon_mass_sum
from .fixtures import fixtures

#: Mean emission coefficient of the stable nuclides, used as the volumetric k.
K_STABLE = 0.01972

ASYMMETRY = 0.083
COULOMB = 627e-6
SURFACE = 0.14
SURFACE_PROTON = 81e-5
PAIRING = 33.517


class UnderdeterminedError(ValueError):
    """The original formula's volumetric coefficient is not known."""


@dataclass(frozen=True)
class BindingEnergyBreakdown:
    volumetric_modified: float
    s: float
    h: float
    y: float
    total: float
    validity_warning: bool = False
    source: str = "formula"


@dataclass(frozen=True)
class ComparisonRow:
    nuclide_id: str
    de_exp: float
    de_modified: float
    de_original: float
    modified_wins: bool
    abs_err_modified: float
    abs_err_original: float


@dataclass(frozen=True)
class ComparisonSummary:
    n_rows: int
    n_wins: int
    win_fraction: float
    mean_abs_err_modified: float
    mean_abs_err_original: float
    rms_err_modified: float
    rms_err_original: float


def _check(a: int, n_p: int) -> None:
    if a < 1:
        raise ValueError(f"mass number must be >= 1, got {a}")
    if not 1 <= n_p <= a:
        raise ValueError(f"proton count must lie in [1, {a}], got {n_p}")


def term_s(a: int, n_p: int) -> float:
    """Asymmetry plus Coulomb correction (MeV); never positive."""
    _check(a, n_p)
    return -ASYMMETRY * (a / 2 - n_p) ** 2 / a - COULOMB * n_p * (n_p - 1) / a ** (1 / 3)


def term_h(a: int, n_p: int) -> float:
    """Surface correction (MeV)."""
    _check(a, n_p)
    return SURFACE * a ** (2 / 3) - SURFACE_PROTON * n_p


def term_y(a: int, n_p: int) -> float:
    """Pairing correction (MeV) by parity class: odd-A, even-even or odd-odd."""
    _check(a, n_p)
    if a % 2:
        return 0.0
    if n_p % 2 == 0:
        return PAIRING / a ** 0.75 - 2
    return -PAIRING / a ** 0.75


def _corrections(a: int, n_p: int) -> tuple[float, float, float]:
    return term_s(a, n_p), term_h(a, n_p), term_y(a, n_p)


def _outside_range(a: int) -> bool:
    return not 2 < a < 50


def _volumetric_domain(a: int, n_p: int) -> None:
    if a < 2:
        raise ValueError(f"binding energy formula needs a >= 2, got {a}")
    _check(a, n_p)


def modified_binding_energy(
    a: int,
    n_p: int,
    k_star: float = K_STABLE,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
    mode: str = "exact_4pi",
) -> BindingEnergyBreakdown:
    """Binding energy with the volumetric term replaced by g(A) k* [n_p m_p + n m_n] amu_to_mev / 4pi."""
    _volumetric_domain(a, n_p)
    if not k_star >= 0:
        raise ValueError(f"k_star must be >= 0, got {k_star}")
    vol = (
        k_star
        * float(geometry_factor(a).g)
        * nucleon_mass_sum(a, n_p, constants)
        / k_constant(constants, mode)
    )
    s, h, y = _corrections(a, n_p)
    return BindingEnergyBreakdown(vol, s, h, y, vol + s + h + y, _outside_range(a))


def original_binding_energy(
    a: int,
    n_p: int,
    volumetric_coefficient: float | None = None,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
    fixture_fallback: bool = False,
) -> BindingEnergyBreakdown:
    """Original-formula binding energy.

    The original volumetric coefficient is not published alongside the
    corrections, so either pass ``volumetric_coefficient`` (MeV per u of
    nucleon mass) or set ``fixture_fallback`` to take the tabulated original
    energy; the volumetric part is then whatever the corrections leave over.
    """
    _volumetric_domain(a, n_p)
    s, h, y = _corrections(a, n_p)
    if volumetric_coefficient is not None:
        vol = volumetric_coefficient * nucleon_mass_sum(a, n_p, constants)
        return BindingEnergyBreakdown(vol, s, h, y, vol + s + h + y, _outside_range(a))
    if fixture_fallback:
        for row in fixtures().table2:
            if (row.z, row.a) == (n_p, a):
                vol = row.de_original - (s + h + y)
                return BindingEnergyBreakdown(
                    vol, s, h, y, vol + s + h + y, _outside_range(a), source="table2"
                )
        raise UnderdeterminedError(
            f"original formula underdetermined: no tabulated value for Z={n_p}, A={a}"
        )
    raise UnderdeterminedError(
        "original formula underdetermined: give volumetric_coefficient or enable fixture_fallback"
    )


def compare_models(
    rows: Sequence[tuple[str, float, float, float]],
) -> tuple[list[ComparisonRow], ComparisonSummary]:
    """Score modified vs original predictions against experiment, row by row.

    The modified formula wins a row when its absolute error does not exceed
    the original's.
    """
    if not rows:
        raise ValueError("comparison needs at least one row")
    out = []
    for nid, exp, mod, orig in rows:
        if not all(math.isfinite(x) for x in (exp, mod, orig)):
            raise ValueError(f"{nid}: energies must be finite")
        err_m, err_o = abs(exp - mod), abs(exp - orig)
        out.append(ComparisonRow(nid, exp, mod, orig, err_m <= err_o, err_m, err_o))

    n = len(out)
    wins = sum(r.modified_wins for r in out)
    em = [r.abs_err_modified for r in out]
    eo = [r.abs_err_original for r in out]
    summary = ComparisonSummary(
        n_rows=n,
        n_wins=wins,
        win_fraction=wins / n,
        mean_abs_err_modified=math.fsum(em) / n,
        mean_abs_err_original=math.fsum(eo) / n,
        rms_err_modified=math.sqrt(math.fsum(e * e for e in em) / n),
        rms_err_original=math.sqrt(math.fsum(e * e for e in eo) / n),
    )
    return out, summary
