"""Emission-coefficient model of nuclei and energy-emitting bodies."""

from .binding_semf import (
    K_STABLE,
    BindingEnergyBreakdown,
    ComparisonRow,
    ComparisonSummary,
    compare_models,
    modified_binding_energy,
    original_binding_energy,
    term_h,
    term_s,
    term_y,
)
from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .decay_inference import (
    CoefficientRange,
    DecayInferenceRow,
    coefficient_ranges,
    containment_report,
    infer_stable_k,
    mass_ratio,
)
from .emission_core import (
    CoefficientStats,
    EmissionCoefficient,
    GeometryFactor,
    binding_energy_from_k,
    coefficient_stats,
    emission_coefficient,
    geometry_factor,
    select_max_mean_subset,
)
from .fixtures import AppendixFixtures, fixtures
from .nuclide_data import DecayMode, Nuclide, load_nuclide_dataset, write_report

__version__ = "0.1.0"
