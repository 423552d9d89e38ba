"""Nuclide records, CSV ingestion, and deterministic report serialisation."""

from __future__ import annotations

import csv
import dataclasses
import enum
import io
import json
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import Any, BinaryIO

from .fixtures import fixtures

DATASET_HEADER = ("symbol", "z", "a", "binding_energy_mev", "half_life_s", "decay_mode")
REPORT_FORMATS = ("csv", "json")


class DecayMode(str, enum.Enum):
    STABLE = "stable"
    BETA_MINUS = "beta_minus"
    BETA_PLUS = "beta_plus"
    ALPHA = "alpha"
    OTHER = "other"


class DatasetFormatError(ValueError):
    """Malformed dataset row; carries the 1-based line number and column name."""

    def __init__(self, message: str, line: int, column: str | None = None):
        where = f"line {line}" + (f", column {column!r}" if column else "")
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column


class NuclideValidationError(ValueError):
    pass


@dataclass(frozen=True)
class Nuclide:
    symbol: str
    z: int
    a: int
    binding_energy_exp: float | None = None
    half_life: float | None = None
    decay_mode: DecayMode | None = None

    def __post_init__(self) -> None:
        name = f"{self.symbol}-{self.a}"
        if not 1 <= self.z <= self.a:
            raise NuclideValidationError(f"{name}: need 1 <= z <= a (z={self.z}, a={self.a})")
        if self.decay_mode is not None and not isinstance(self.decay_mode, DecayMode):
            object.__setattr__(self, "decay_mode", DecayMode(self.decay_mode))
        if self.half_life is not None:
            if not self.half_life > 0:
                raise NuclideValidationError(f"{name}: half-life must be > 0")
            if self.decay_mode is DecayMode.STABLE:
                raise NuclideValidationError(f"{name}: stable nuclide cannot carry a half-life")
        if self.binding_energy_exp is not None and not self.binding_energy_exp >= 0:
            raise NuclideValidationError(f"{name}: binding energy must be >= 0 MeV")

    @property
    def nuclide_id(self) -> str:
        return f"{self.symbol}-{self.a}"

    @property
    def n(self) -> int:
        return self.a - self.z

    @property
    def is_stable(self) -> bool:
        return self.decay_mode is DecayMode.STABLE


def _parse_int(value: str, line: int, column: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise DatasetFormatError(f"expected integer, got {value!r}", line, column) from None


def _parse_float(value: str, line: int, column: str) -> float | None:
    if value == "":
        return None
    try:
        out = float(value)
    except ValueError:
        raise DatasetFormatError(f"expected number, got {value!r}", line, column) from None
    if not math.isfinite(out):
        raise DatasetFormatError(f"non-finite value {value!r}", line, column)
    return out


def load_nuclide_dataset(source: BinaryIO | bytes) -> list[Nuclide]:
    """Parse a UTF-8 nuclide CSV.

    The header must be exactly ``symbol,z,a,binding_energy_mev,half_life_s,decay_mode``;
    empty cells leave the optional fields unset. Rows come back in file order.
    """
    raw = source if isinstance(source, bytes) else source.read()
    try:
        text = raw.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise DatasetFormatError(f"not valid UTF-8 ({exc.reason})", 1) from None

    reader = csv.reader(io.StringIO(text, newline=""))
    header = next(reader, None)
    if header is None or tuple(h.strip() for h in header) != DATASET_HEADER:
        raise DatasetFormatError(f"header must be {','.join(DATASET_HEADER)}", 1)

    nuclides: list[Nuclide] = []
    seen: dict[tuple[int, int], int] = {}
    for row in reader:
        line = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(DATASET_HEADER):
            raise DatasetFormatError(
                f"expected {len(DATASET_HEADER)} fields, got {len(row)}", line
            )
        symbol, z, a, be, tau, mode = (cell.strip() for cell in row)
        if not symbol:
            raise DatasetFormatError("symbol is required", line, "symbol")
        z_val = _parse_int(z, line, "z")
        a_val = _parse_int(a, line, "a")
        decay = None
        if mode:
            try:
                decay = DecayMode(mode)
            except ValueError:
                raise DatasetFormatError(f"unknown decay mode {mode!r}", line, "decay_mode") from None
        nuclide = Nuclide(
            symbol=symbol,
            z=z_val,
            a=a_val,
            binding_energy_exp=_parse_float(be, line, "binding_energy_mev"),
            half_life=_parse_float(tau, line, "half_life_s"),
            decay_mode=decay,
        )
        key = (z_val, a_val)
        if key in seen:
            raise DatasetFormatError(
                f"duplicate nuclide {nuclide.nuclide_id} (first seen on line {seen[key]})", line
            )
        seen[key] = line
        nuclides.append(nuclide)
    return nuclides


def dump_nuclide_dataset(nuclides: Iterable[Nuclide]) -> bytes:
    """Serialise nuclides in the ingestion format; floats use repr so re-parsing is lossless."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(DATASET_HEADER)
    for nuc in nuclides:
        writer.writerow([
            nuc.symbol,
            nuc.z,
            nuc.a,
            "" if nuc.binding_energy_exp is None else repr(nuc.binding_energy_exp),
            "" if nuc.half_life is None else repr(nuc.half_life),
            "" if nuc.decay_mode is None else nuc.decay_mode.value,
        ])
    return buf.getvalue().encode("utf-8")


def _as_mapping(row: Any) -> Mapping[str, Any]:
    if isinstance(row, Mapping):
        return row
    if dataclasses.is_dataclass(row) and not isinstance(row, type):
        return {f.name: getattr(row, f.name) for f in dataclasses.fields(row)}
    if hasattr(row, "_asdict"):
        return row._asdict()
    raise TypeError(f"cannot tabulate {type(row).__name__}")


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, enum.Enum):
        return str(value.value)
    if isinstance(value, float):
        return format(value + 0.0, ".6g")  # + 0.0 turns -0.0 into 0.0
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, float):
        return float(value) + 0.0
    return value


def write_report(
    rows: Sequence[Any], fmt: str = "csv", columns: Sequence[str] | None = None
) -> bytes:
    """Render rows as CSV (6 significant digits) or a JSON array (full precision).

    Column order is ``columns`` if given, else the key order of the first row.
    Output bytes depend only on the inputs.
    """
    if fmt not in REPORT_FORMATS:
        raise ValueError(f"unsupported report format {fmt!r}; expected one of {REPORT_FORMATS}")
    records = [_as_mapping(r) for r in rows]
    cols = list(columns) if columns is not None else (list(records[0]) if records else [])

    if fmt == "json":
        payload = [{c: _json_value(rec.get(c)) for c in cols} for rec in records]
        return (json.dumps(payload, indent=2, allow_nan=False) + "\n").encode("utf-8")

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if cols:
        writer.writerow(cols)
    for rec in records:
        writer.writerow([_csv_cell(rec.get(c)) for c in cols])
    return buf.getvalue().encode("utf-8")


# Reference data for the 80 tabulated nuclides that the tables themselves do not carry.

#: Total binding energies (MeV) from the AME2020 atomic mass evaluation, for the
#: tabulated nuclides that have no experimental value in reference table 2.
#: BE = Z*Delta(1H) + N*Delta(n) - Delta(A, Z) from AME2020 mass excesses.
EXTERNAL_BINDING_ENERGIES: Mapping[str, float] = {
    "H-3": 8.482,
    "He-6": 29.269,
    "Li-8": 41.278,
    "Be-7": 37.601,
    "Be-8": 56.500,
    "C-11": 73.440,
    "N-13": 94.105,
    "O-15": 111.955,
    "F-18": 137.369,
    "Na-22": 174.145,
    "Al-26": 211.894,
    "Al-29": 242.113,
    "Si-31": 262.207,
    "P-30": 250.605,
    "P-32": 270.852,
    "S-35": 298.825,
    "Cl-34": 285.565,
    "Cl-36": 306.789,
    "Cl-39": 331.282,
    "Ar-41": 349.910,
    "K-40": 341.523,
    "Ca-45": 388.374,
    "Fe-55": 481.061,
    "Ga-69": 601.996,
    "U-238": 1801.691,
}

# Primordial nuclides (stable, or long-lived enough to survive from nucleosynthesis:
# K-40, U-238) are flagged stable. Everything else gets its dominant decay mode.
_UNSTABLE_MODES: Mapping[str, DecayMode] = {
    "H-3": DecayMode.BETA_MINUS,
    "He-5": DecayMode.OTHER,
    "He-6": DecayMode.BETA_MINUS,
    "Li-8": DecayMode.BETA_MINUS,
    "Be-7": DecayMode.OTHER,
    "Be-8": DecayMode.ALPHA,
    "C-11": DecayMode.BETA_PLUS,
    "N-13": DecayMode.BETA_PLUS,
    "O-15": DecayMode.BETA_PLUS,
    "F-18": DecayMode.BETA_PLUS,
    "Na-22": DecayMode.BETA_PLUS,
    "Al-26": DecayMode.BETA_PLUS,
    "Al-29": DecayMode.BETA_MINUS,
    "Si-31": DecayMode.BETA_MINUS,
    "P-30": DecayMode.BETA_PLUS,
    "P-32": DecayMode.BETA_MINUS,
    "S-35": DecayMode.BETA_MINUS,
    "Cl-34": DecayMode.BETA_PLUS,
    "Cl-36": DecayMode.BETA_MINUS,
    "Cl-39": DecayMode.BETA_MINUS,
    "K-38": DecayMode.BETA_PLUS,
    "Ar-41": DecayMode.BETA_MINUS,
    "Ca-45": DecayMode.BETA_MINUS,
    "Ti-45": DecayMode.BETA_PLUS,
    "Fe-55": DecayMode.OTHER,
}


def binding_energy_source(nuclide_id: str) -> tuple[float, str]:
    """Experimental binding energy for a tabulated nuclide and where it came from."""
    for row in fixtures().table2:
        if row.nuclide_id == nuclide_id:
            return row.de_exp, "table2"
    if nuclide_id in EXTERNAL_BINDING_ENERGIES:
        return EXTERNAL_BINDING_ENERGIES[nuclide_id], "ame2020"
    raise KeyError(nuclide_id)


def appendix1_nuclides() -> list[Nuclide]:
    """The 80 nuclides of reference table 1 with binding energies, half-lives and decay modes."""
    half_lives = {r.nuclide_id: r.tau for r in fixtures().table3}
    out = []
    for row in fixtures().table1:
        nid = row.nuclide_id
        be, _ = binding_energy_source(nid)
        mode = _UNSTABLE_MODES.get(nid, DecayMode.STABLE)
        out.append(
            Nuclide(
                symbol=row.symbol,
                z=row.z,
                a=row.a,
                binding_energy_exp=be,
                half_life=None if mode is DecayMode.STABLE else half_lives.get(nid),
                decay_mode=mode,
            )
        )
    return out
