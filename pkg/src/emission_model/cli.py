"""Command-line front end: ``emission-model <command> [options]``.

Each command writes a row table (CSV or JSON) to ``--output`` and a summary
JSON next to it (``<output>.summary.json``). Without ``--output`` the table
goes to stdout and the summary to stderr. If ``EMISSION_MODEL_OUTPUT_DIR`` is
set and no ``--output`` is given, files land in that directory named after
the command.

Exit status: 0 success, 1 invalid input or domain error, 2 a check exceeded
its bound.
"""

from __future__ import annotations

import functools
import json
import logging
import os
import sys
from dataclasses import dataclass, replace
from pathlib import Path

import click

from . import reproduction
from .binding_semf import K_STABLE
from .checks import run_identity_suite
from .constants import DEFAULT_CONSTANTS, K_CONSTANT_MODES, PhysicalConstants
from .nuclide_data import REPORT_FORMATS, load_nuclide_dataset, write_report

log = logging.getLogger(__name__)

OUTPUT_DIR_ENV = "EMISSION_MODEL_OUTPUT_DIR"
EXIT_INVALID = 1
EXIT_THRESHOLD = 2

_FLOAT_KEYS = ("m_p", "m_n", "amu_to_mev", "k_star")
_INT_KEYS = ("seed", "trials")
_STR_KEYS = ("eq53_constant_mode", "format", "output")


@dataclass(frozen=True)
class RunConfig:
    constants: PhysicalConstants = DEFAULT_CONSTANTS
    eq53_constant_mode: str = "exact_4pi"
    k_star: float = K_STABLE
    format: str = "csv"
    output: str | None = None
    seed: int = 0
    trials: int = 1000

    def __post_init__(self) -> None:
        if self.eq53_constant_mode not in K_CONSTANT_MODES:
            raise ValueError(f"eq53_constant_mode must be one of {K_CONSTANT_MODES}")
        if self.format not in REPORT_FORMATS:
            raise ValueError(f"format must be one of {REPORT_FORMATS}")
        if not self.k_star >= 0:
            raise ValueError("k_star must be >= 0")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


def parse_config_text(text: str) -> dict:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    out: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key in _FLOAT_KEYS:
            out[key] = float(value)
        elif key in _INT_KEYS:
            out[key] = int(value)
        elif key in _STR_KEYS:
            out[key] = value
        else:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
    return out


def build_config(config_path: str | None, **flags) -> RunConfig:
    settings = parse_config_text(Path(config_path).read_text()) if config_path else {}
    settings.update({k: v for k, v in flags.items() if v is not None})
    constants = DEFAULT_CONSTANTS.with_overrides(
        m_p=settings.pop("m_p", None),
        m_n=settings.pop("m_n", None),
        amu_to_mev=settings.pop("amu_to_mev", None),
    )
    return replace(RunConfig(), constants=constants, **settings)


def _emit(config: RunConfig, command: str, report: reproduction.Report) -> None:
    table = write_report(report.rows, config.format)
    summary = (json.dumps(report.summary, indent=2) + "\n").encode("utf-8")
    target = config.output
    if target is None and os.environ.get(OUTPUT_DIR_ENV):
        target = str(Path(os.environ[OUTPUT_DIR_ENV]) / f"{command}.{config.format}")
    if target is None:
        sys.stdout.buffer.write(table)
        sys.stdout.flush()
        sys.stderr.write(summary.decode())
        return
    path = Path(target)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(table)
    path.with_name(path.name + ".summary.json").write_bytes(summary)
    click.echo(summary.decode(), nl=False)


def common_options(func):
    @click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
                  help="key = value settings file; flags take precedence.")
    @click.option("--format", "fmt", type=click.Choice(REPORT_FORMATS), default=None)
    @click.option("--output", "-o", type=click.Path(dir_okay=False), default=None)
    @click.option("--m-p", type=float, default=None, help="Proton mass (u).")
    @click.option("--m-n", type=float, default=None, help="Neutron mass (u).")
    @click.option("--amu-to-mev", type=float, default=None, help="MeV per atomic mass unit.")
    @click.option("--k-constant", "k_mode", type=click.Choice(K_CONSTANT_MODES), default=None,
                  help="Leading constant of the k extraction: exact 4pi/amu_to_mev or rounded 0.01349.")
    @functools.wraps(func)
    def wrapper(config_path, fmt, output, m_p, m_n, amu_to_mev, k_mode, **kwargs):
        extra = {k: kwargs.pop(k) for k in ("k_star", "seed", "trials") if k in kwargs}
        try:
            config = build_config(
                config_path, format=fmt, output=output, m_p=m_p, m_n=m_n,
                amu_to_mev=amu_to_mev, eq53_constant_mode=k_mode, **extra,
            )
            return func(config, **kwargs)
        except (ValueError, KeyError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INVALID)

    return wrapper


def _load_dataset(path: str | None):
    if path is None:
        return None
    with open(path, "rb") as fh:
        nuclides = load_nuclide_dataset(fh)
    if not nuclides:
        raise ValueError(f"dataset {path} is empty")
    return nuclides


@click.group()
@click.option("-v", "--verbose", is_flag=True)
def main(verbose: bool) -> None:
    """Emission-coefficient model of nuclei: table reproductions and identity checks."""
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format="%(message)s")


@main.command("k-coeff")
@click.option("--fixture", type=click.Choice(["appendix1"]), default=None)
@click.option("--dataset", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Nuclide CSV (symbol,z,a,binding_energy_mev,half_life_s,decay_mode).")
@common_options
def k_coeff(config: RunConfig, fixture, dataset) -> None:
    """Emission coefficient per nuclide, with deviation from the tabulated value."""
    nuclides = _load_dataset(dataset) if fixture is None else None
    if fixture is None and dataset is None:
        raise ValueError("give --fixture appendix1 or --dataset FILE")
    report = reproduction.k_coefficients(nuclides, config.constants, config.eq53_constant_mode)
    _emit(config, "k-coeff", report)


@main.command("binding")
@click.option("--fixture", type=click.Choice(["appendix2"]), default=None)
@click.option("--dataset", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--k-star", type=float, default=None, help="Volumetric emission coefficient (default 0.01972).")
@common_options
def binding(config: RunConfig, fixture, dataset) -> None:
    """Modified binding-energy breakdown per nuclide."""
    if fixture is None and dataset is None:
        raise ValueError("give --fixture appendix2 or --dataset FILE")
    nuclides = _load_dataset(dataset) if fixture is None else None
    report = reproduction.binding_energies(
        nuclides, config.k_star, config.constants, config.eq53_constant_mode
    )
    _emit(config, "binding", report)


@main.command("compare")
@click.option("--mode", type=click.Choice(["table", "recompute"]), default="table")
@click.option("--k-star", type=float, default=None)
@common_options
def compare(config: RunConfig, mode) -> None:
    """Win fraction and error metrics of the modified vs the original formula."""
    report = reproduction.comparison(
        mode, config.k_star, config.constants, config.eq53_constant_mode
    )
    _emit(config, "compare", report)


@main.command("infer-stable")
@click.option("--fixture", type=click.Choice(["appendix3"]), default="appendix3", show_default=True)
@common_options
def infer_stable(config: RunConfig, fixture) -> None:
    """Stable coefficients inferred from half-lives, the psi/omega/chi ranges and containment."""
    _emit(config, "infer-stable", reproduction.decay_inference())


@main.command("dynamics-check")
@click.option("--seed", type=int, default=None)
@click.option("--trials", type=int, default=None)
@common_options
def dynamics_check(config: RunConfig) -> None:
    """Randomized identity checks of the dynamics model; exit 2 if any residual exceeds its bound."""
    results = run_identity_suite(config.seed, config.trials, config.constants)
    rows = [
        {
            "check": r.name,
            "identity": r.identity,
            "max_residual": r.max_residual,
            "bound": r.bound,
            "trials": r.trials,
            "passed": r.passed,
        }
        for r in results
    ]
    failed = [r.name for r in results if not r.passed]
    summary = {"seed": config.seed, "trials": config.trials, "checks": len(rows), "failed": failed}
    _emit(config, "dynamics-check", reproduction.Report(rows, summary))
    if failed:
        log.warning("checks over bound: %s", ", ".join(failed))
        sys.exit(EXIT_THRESHOLD)


if __name__ == "__main__":
    main()
