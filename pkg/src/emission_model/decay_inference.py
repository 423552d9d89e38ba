"""Stable-nuclide emission coefficients inferred from radioactive half-lives."""

from __future__ import annotations

import math
import warnings
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

import numpy as np

from .emission_core import EmissionCoefficient
from .fixtures import fixtures
from .nuclide_data import DecayMode

LN_HALF = math.log(0.5)


@dataclass(frozen=True)
class DecayInferenceRow:
    nuclide_id: str
    k_i: float
    tau: float
    k_j: float
    decay_mode: DecayMode


@dataclass(frozen=True)
class CoefficientRange:
    label: str
    lo: float
    hi: float

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"range {self.label}: lo {self.lo} > hi {self.hi}")

    def __contains__(self, value: float) -> bool:
        return self.lo <= value <= self.hi


def mass_ratio(m0_i, m0_j, k_i, k_j, t):
    """Observed mass ratio m_i/m_j after time ``t`` when both bodies emit. Broadcasts over arrays."""
    if np.any(np.asarray(m0_i) <= 0) or np.any(np.asarray(m0_j) <= 0):
        raise ValueError("masses must be > 0")
    if np.any(np.asarray(t) < 0):
        raise ValueError("elapsed time must be >= 0")
    return (np.divide(m0_i, m0_j)) * np.exp(np.subtract(k_j, k_i) * t)


def infer_stable_k(k_i: float, tau: float) -> float:
    """k_j = k_i + ln(0.5)/tau: the reference-body coefficient that halves m_i/m_j over one half-life."""
    if not tau > 0:
        raise ValueError(f"half-life must be > 0, got {tau}")
    if not k_i > 0:
        raise ValueError(f"k_i must be > 0, got {k_i}")
    k_j = k_i + LN_HALF / tau
    if k_j < 0:
        warnings.warn(
            f"inferred coefficient is negative ({k_j:.6g}); half-life {tau:g} s is too short",
            RuntimeWarning,
            stacklevel=2,
        )
    return k_j


def infer_rows(
    entries: Sequence[tuple[str, float, float, DecayMode | str]],
) -> list[DecayInferenceRow]:
    """Run :func:`infer_stable_k` over ``(nuclide_id, k_i, tau, decay_mode)`` entries."""
    return [
        DecayInferenceRow(nid, k_i, tau, infer_stable_k(k_i, tau), DecayMode(mode))
        for nid, k_i, tau, mode in entries
    ]


def appendix3_rows() -> list[DecayInferenceRow]:
    """Recompute inferred coefficients for every row of reference table 3."""
    return infer_rows([(r.nuclide_id, r.k_i, r.tau, r.decay_mode) for r in fixtures().table3])


def _span(label: str, values: Sequence[float]) -> CoefficientRange:
    return CoefficientRange(label, min(values), max(values))


def coefficient_ranges(
    rows: Sequence[DecayInferenceRow],
    stable_ks: Sequence[EmissionCoefficient | float] = (),
    require_omega: bool = True,
) -> list[CoefficientRange]:
    """Ranges psi (all inferred k_j), omega (beta-minus rows only) and chi (stable coefficients).

    Rows are de-duplicated by nuclide id before taking extremes. Chi is left
    out when ``stable_ks`` is empty; a missing beta-minus subset raises unless
    ``require_omega`` is false.
    """
    if not rows:
        raise ValueError("need at least one inference row")
    unique: dict[str, DecayInferenceRow] = {}
    for row in rows:
        unique.setdefault(row.nuclide_id, row)

    out = [_span("psi", [r.k_j for r in unique.values()])]
    beta_minus = [r.k_j for r in unique.values() if r.decay_mode is DecayMode.BETA_MINUS]
    if beta_minus:
        out.append(_span("omega", beta_minus))
    elif require_omega:
        raise ValueError("omega range needs beta_minus rows; none present")
    if stable_ks:
        out.append(
            _span("chi", [x.k if isinstance(x, EmissionCoefficient) else x for x in stable_ks])
        )
    return out


def containment_report(
    ranges: Sequence[CoefficientRange], values: Mapping[str, float]
) -> dict[str, dict[str, bool]]:
    """For each named value, whether it lies in each (closed) range."""
    return {name: {r.label: v in r for r in ranges} for name, v in values.items()}
