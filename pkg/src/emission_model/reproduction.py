"""Table reproductions: per-nuclide k values, binding energies, comparison, decay inference."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .binding_semf import K_STABLE, compare_models, modified_binding_energy, original_binding_energy
from .constants import DEFAULT_CONSTANTS, PhysicalConstants
from .decay_inference import appendix3_rows, coefficient_ranges, containment_report
from .emission_core import coefficient_stats, emission_coefficient
from .fixtures import fixtures
from .nuclide_data import Nuclide, appendix1_nuclides, binding_energy_source


@dataclass
class Report:
    rows: list[dict]
    summary: dict = field(default_factory=dict)


def _rel(value: float, ref: float | None) -> float | None:
    return None if ref is None or ref == 0 else value / ref - 1


def k_coefficients(
    nuclides: Sequence[Nuclide] | None = None,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
    mode: str = "exact_4pi",
) -> Report:
    """Emission coefficient per nuclide, next to the tabulated value where there is one.

    Defaults to the 80 tabulated nuclides. ``k_star`` averages every row;
    ``k_stable`` averages stable rows with A > 2 (the range where the k
    extraction is defined).
    """
    table_k = {r.nuclide_id: r.k for r in fixtures().table1}
    if nuclides is None:
        nuclides = appendix1_nuclides()
        sources = {n.nuclide_id: binding_energy_source(n.nuclide_id)[1] for n in nuclides}
    else:
        sources = {}
    if not nuclides:
        raise ValueError("no nuclides to evaluate")

    rows, ks, stable_ks, skipped = [], [], [], 0
    for nuc in nuclides:
        if nuc.binding_energy_exp is None:
            skipped += 1
            continue
        ec = emission_coefficient(nuc.binding_energy_exp, nuc.a, nuc.z, constants, mode, nuc.nuclide_id)
        ref = table_k.get(nuc.nuclide_id)
        rows.append({
            "nuclide": nuc.nuclide_id,
            "z": nuc.z,
            "a": nuc.a,
            "stable": nuc.is_stable,
            "binding_energy_mev": nuc.binding_energy_exp,
            "binding_energy_source": sources.get(nuc.nuclide_id, "dataset"),
            "k": ec.k,
            "k_table": ref,
            "rel_dev": _rel(ec.k, ref),
            "warning": ec.warning,
        })
        ks.append(ec.k)
        if nuc.is_stable and nuc.a > 2:
            stable_ks.append(ec.k)
    if not rows:
        raise ValueError("no nuclide carries a binding energy")

    stats = coefficient_stats(ks)
    summary = {
        "count": stats.count,
        "skipped_missing_binding_energy": skipped,
        "k_star": stats.mean,
        "k_min": stats.min,
        "k_max": stats.max,
    }
    if stable_ks:
        st = coefficient_stats(stable_ks)
        summary.update(k_stable=st.mean, stable_count=st.count, chi_lo=st.min, chi_hi=st.max)
    return Report(rows, summary)


def stable_table_ks() -> list[float]:
    """Tabulated k of the stable nuclides with A > 2."""
    nucs = {n.nuclide_id: n for n in appendix1_nuclides()}
    return [r.k for r in fixtures().table1 if nucs[r.nuclide_id].is_stable and r.a > 2]


def table_k_summary() -> dict:
    """Statistics of the tabulated k values themselves (no recomputation)."""
    all_k = [r.k for r in fixtures().table1]
    s_all, s_stable = coefficient_stats(all_k), coefficient_stats(stable_table_ks())
    return {
        "k_star": s_all.mean,
        "k_min": s_all.min,
        "k_max": s_all.max,
        "k_stable": s_stable.mean,
        "stable_count": s_stable.count,
        "chi_lo": s_stable.min,
        "chi_hi": s_stable.max,
    }


def binding_energies(
    nuclides: Sequence[Nuclide] | None = None,
    k_star: float = K_STABLE,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
    mode: str = "exact_4pi",
) -> Report:
    """Modified-formula breakdown per nuclide; defaults to the 55 rows of reference table 2."""
    table = {(r.z, r.a): r for r in fixtures().table2}
    if nuclides is None:
        nuclides = [Nuclide(r.symbol, r.z, r.a, r.de_exp) for r in fixtures().table2]
    if not nuclides:
        raise ValueError("no nuclides to evaluate")
    rows = []
    for nuc in nuclides:
        bd = modified_binding_energy(nuc.a, nuc.z, k_star, constants, mode)
        ref = table.get((nuc.z, nuc.a))
        rows.append({
            "nuclide": nuc.nuclide_id,
            "z": nuc.z,
            "a": nuc.a,
            "volumetric": bd.volumetric_modified,
            "s": bd.s,
            "h": bd.h,
            "y": bd.y,
            "total": bd.total,
            "de_exp": nuc.binding_energy_exp,
            "de_table": None if ref is None else ref.de_modified,
            "rel_dev": None if ref is None else _rel(bd.total, ref.de_modified),
            "validity_warning": bd.validity_warning,
            "suspect": False if ref is None else ref.suspect,
        })
    return Report(rows, {"count": len(rows), "k_star": k_star})


def comparison(
    mode: str = "table",
    k_star: float = K_STABLE,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
    k_constant_mode: str = "exact_4pi",
) -> Report:
    """Modified vs original formula against experiment over reference table 2.

    ``table`` scores the tabulated predictions; ``recompute`` replaces the
    modified predictions with freshly computed ones (original stays tabulated).
    """
    entries = []
    for r in fixtures().table2:
        if mode == "table":
            mod = r.de_modified
        elif mode == "recompute":
            mod = modified_binding_energy(r.a, r.z, k_star, constants, k_constant_mode).total
        else:
            raise ValueError(f"comparison mode must be 'table' or 'recompute', got {mode!r}")
        orig = original_binding_energy(r.a, r.z, constants=constants, fixture_fallback=True).total
        entries.append((r.nuclide_id, r.de_exp, mod, orig))
    rows, summary = compare_models(entries)
    out = [vars(row) | {"modified_table": r.de_modified} for row, r in zip(rows, fixtures().table2)]
    return Report(out, vars(summary) | {"mode": mode})


def decay_inference() -> Report:
    """Inferred stable coefficients for reference table 3, the psi/omega/chi ranges and containment."""
    rows = appendix3_rows()
    table = fixtures().table3
    summary_k = table_k_summary()
    ranges = coefficient_ranges(rows, stable_table_ks())
    contained = containment_report(
        ranges, {"k_star": summary_k["k_star"], "k_stable": summary_k["k_stable"]}
    )
    out = [
        {
            "nuclide": row.nuclide_id,
            "decay_mode": row.decay_mode.value,
            "k_i": row.k_i,
            "tau_s": row.tau,
            "k_j": row.k_j,
            "k_j_table": ref.k_j,
            "abs_dev": row.k_j - ref.k_j,
        }
        for row, ref in zip(rows, table)
    ]
    summary: dict = {"k_star": summary_k["k_star"], "k_stable": summary_k["k_stable"]}
    for rng in ranges:
        summary[f"{rng.label}_lo"] = rng.lo
        summary[f"{rng.label}_hi"] = rng.hi
    for name, flags in contained.items():
        for label, inside in flags.items():
            summary[f"{name}_in_{label}"] = inside
    return Report(out, summary)
