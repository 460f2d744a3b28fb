"""Reference tables embedded from the printed sources, plus loaders.

Values are stored as decimal strings and parsed on demand, so nothing is
rounded at rest.  Rows carry a source tag (paper_calc / paper_obs /
external) and optional flags (mixed / absent / inconsistent); flagged
rows are excluded from pass/fail comparisons by default.

The module also owns the calibrated model presets, so every other module
defaults its constants from here.  `NONFIELD_DATA_DIR` may point to a
directory with `<name>.json` or `<name>.csv` files overriding the
builtin tables.
"""

from __future__ import annotations

import csv
import json
import math
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from . import _tables
from .atomic import AtomicModelParams, LiModelParams
from .nuclei import PionicField, pionic_charge, spin_orbit_term, _pionic_energy  # noqa: F401 (presets)

__all__ = [
    "ReferenceRow",
    "ReferenceTable",
    "MatchReport",
    "BUILTIN_TABLE_NAMES",
    "builtin_reference",
    "load_reference",
    "export_reference",
    "compare_tables",
    "flagged_rows_manifest",
    "constant",
    "atomic_params",
    "li_params",
    "nuclei_field",
    "notmirror_field",
    "so_gluon_constant",
    "ALPHA",
    "NUCLEI_BASE",
    "NUCLEI_SO",
    "K1_DEFAULT",
]

CSV_HEADER = ["system", "label", "n", "l", "two_j", "series",
              "value", "unit", "source", "flags"]

BUILTIN_TABLE_NAMES = (
    "heII", "hydrogen", "liI",
    "nuclei_mirror_levels", "nuclei_mirror_excitations",
    "nuclei_notmirror", "constants",
)


@dataclass(frozen=True)
class ReferenceRow:
    system: str
    label: str
    n: Optional[int]
    l: Optional[int]
    two_j: Optional[int]
    series: str
    value: str  # decimal text; '' when the paper prints none
    unit: str
    source: str  # paper_calc | paper_obs | external
    flags: str = ""

    @property
    def numeric(self) -> float:
        if self.value == "":
            raise ValueError(f"row {self.key} has no value")
        return float(self.value)

    @property
    def flagged(self) -> bool:
        return self.flags != ""

    @property
    def key(self) -> tuple:
        return (self.system, self.label, self.series, self.source)


@dataclass(frozen=True)
class ReferenceTable:
    name: str
    rows: tuple[ReferenceRow, ...]

    def __post_init__(self) -> None:
        units = {r.unit for r in self.rows if r.unit}
        if len(units) > 1 and self.name not in ("constants",):
            raise ValueError(f"mixed units in table {self.name}: {units}")

    def select(self, *, source: Optional[str] = None, system: Optional[str] = None,
               series: Optional[str] = None, unflagged_only: bool = False,
               ) -> list[ReferenceRow]:
        out = []
        for r in self.rows:
            if source is not None and r.source != source:
                continue
            if system is not None and r.system != system:
                continue
            if series is not None and r.series != series:
                continue
            if unflagged_only and r.flagged:
                continue
            out.append(r)
        return out

    def lookup(self, system: str, label: str, source: str = "paper_calc",
               ) -> ReferenceRow:
        for r in self.rows:
            if r.system == system and r.label == label and r.source == source:
                return r
        raise KeyError(f"{self.name}: no row ({system!r}, {label!r}, {source!r})")


def _mk(system, label, n, l, two_j, series, value, unit, source, flags="") -> ReferenceRow:
    return ReferenceRow(system=system, label=label, n=n, l=l, two_j=two_j,
                        series=series, value=value, unit=unit, source=source,
                        flags=flags)


def _series_tag(N: int, two_j: int, l: int) -> str:
    branch = "plus" if two_j == 2 * l + 1 else "minus"
    return f"N{N}-{branch}"


def _atomic_table(name: str, raw, ground_label: str, ground_calc: str,
                  ground_obs: str) -> ReferenceTable:
    rows: list[ReferenceRow] = []
    for label, l, two_j, N, calc, obs, flags in raw:
        n = N + (two_j + 1) // 2
        series = _series_tag(N, two_j, l)
        rows.append(_mk(name, label, n, l, two_j, series, calc, "eV", "paper_calc", flags))
        rows.append(_mk(name, label, n, l, two_j, series, obs, "eV", "paper_obs", flags))
    rows.append(_mk(name, ground_label, 1, 0, 1, "ground-binding",
                    ground_calc, "eV", "paper_calc"))
    rows.append(_mk(name, ground_label, 1, 0, 1, "ground-binding",
                    ground_obs, "eV", "paper_obs"))
    return ReferenceTable(name=name, rows=tuple(rows))


def _li_table() -> ReferenceTable:
    rows = []
    for n, l, calc, obs, flags in _tables._LI:
        rows.append(_mk("liI", f"{n},{l}", n, l, None, "transition", calc, "eV",
                        "paper_calc", flags))
        rows.append(_mk("liI", f"{n},{l}", n, l, None, "transition", obs, "eV",
                        "paper_obs", flags))
    rows.append(_mk("liI", "limit", None, None, None, "transition",
                    "5.3917291", "eV", "paper_calc", "inconsistent"))
    rows.append(_mk("liI", "limit", None, None, None, "transition",
                    "5.3917191", "eV", "paper_obs"))
    return ReferenceTable(name="liI", rows=tuple(rows))


def _mirror_levels_table() -> ReferenceTable:
    rows = []
    for system, entries in _tables._MIRROR_LEVELS.items():
        for label, value, flags in entries:
            rows.append(_mk(system, label, None, None, None, "pair-level",
                            value, "MeV", "paper_calc", flags))
    return ReferenceTable(name="nuclei_mirror_levels", rows=tuple(rows))


def _mirror_excitations_table() -> ReferenceTable:
    rows = []
    for system, entries in _tables._MIRROR_EXCITATIONS.items():
        for label, calc, obs, flags in entries:
            rows.append(_mk(system, label, None, None, None, "excitation",
                            calc, "MeV", "paper_calc", flags))
            rows.append(_mk(system, label, None, None, None, "excitation",
                            obs, "MeV", "paper_obs", flags))
    return ReferenceTable(name="nuclei_mirror_excitations", rows=tuple(rows))


def _notmirror_table() -> ReferenceTable:
    rows = []
    for system, label, series, calc, obs, flags in _tables._NOTMIRROR:
        rows.append(_mk(system, label, None, None, None, series, calc, "MeV",
                        "paper_calc", flags))
        if obs:
            rows.append(_mk(system, label, None, None, None, series, obs, "MeV",
                            "paper_obs", flags))
    return ReferenceTable(name="nuclei_notmirror", rows=tuple(rows))


def _constants_table() -> ReferenceTable:
    rows = []
    for system, label, unit, value, obs, source, flags in _tables._CONSTANTS:
        rows.append(_mk(system, label, None, None, None, "constant", value, unit,
                        source, flags))
        if obs:
            rows.append(_mk(system, label, None, None, None, "constant", obs, unit,
                            "paper_obs", flags))
    return ReferenceTable(name="constants", rows=tuple(rows))


_BUILDERS = {
    "heII": lambda: _atomic_table("heII", _tables._HE_CALC, "ground",
                                  "54.4177630", "54.418"),
    "hydrogen": lambda: _atomic_table("hydrogen", _tables._H_CALC, "limit",
                                      "13.5984340", "13.5984"),
    "liI": _li_table,
    "nuclei_mirror_levels": _mirror_levels_table,
    "nuclei_mirror_excitations": _mirror_excitations_table,
    "nuclei_notmirror": _notmirror_table,
    "constants": _constants_table,
}

_CACHE: dict[str, ReferenceTable] = {}


def builtin_reference(name: str) -> ReferenceTable:
    """Shipped table by name; NONFIELD_DATA_DIR files take precedence."""
    if name not in _BUILDERS:
        raise KeyError(f"unknown reference table: {name!r}")
    override = os.environ.get("NONFIELD_DATA_DIR")
    if override:
        for ext, fmt in ((".json", "json"), (".csv", "csv")):
            path = Path(override) / f"{name}{ext}"
            if path.exists():
                return load_reference(path, fmt)
    if name not in _CACHE:
        _CACHE[name] = _BUILDERS[name]()
    return _CACHE[name]


# --------------------------------------------------------------------------
# Serialization
# --------------------------------------------------------------------------

def _row_to_record(r: ReferenceRow) -> dict:
    return {"system": r.system, "label": r.label,
            "n": "" if r.n is None else str(r.n),
            "l": "" if r.l is None else str(r.l),
            "two_j": "" if r.two_j is None else str(r.two_j),
            "series": r.series, "value": r.value, "unit": r.unit,
            "source": r.source, "flags": r.flags}


def _record_to_row(rec: dict, where: str) -> ReferenceRow:
    missing = [k for k in CSV_HEADER if k not in rec or rec[k] is None]
    if missing:
        raise ValueError(f"{where}: missing column(s) {missing}")
    def opt_int(v):
        return None if v in ("", None) else int(v)
    if rec["source"] not in ("paper_calc", "paper_obs", "external"):
        raise ValueError(f"{where}: bad source {rec['source']!r}")
    if rec["value"] != "":
        float(rec["value"])  # must parse
    return ReferenceRow(system=str(rec["system"]), label=str(rec["label"]),
                        n=opt_int(rec["n"]), l=opt_int(rec["l"]),
                        two_j=opt_int(rec["two_j"]), series=str(rec["series"]),
                        value=str(rec["value"]), unit=str(rec["unit"]),
                        source=str(rec["source"]), flags=str(rec["flags"]))


def export_reference(table: ReferenceTable, path, fmt: str = "csv") -> None:
    path = Path(path)
    if fmt == "csv":
        with path.open("w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=CSV_HEADER)
            w.writeheader()
            for r in table.rows:
                w.writerow(_row_to_record(r))
    elif fmt == "json":
        doc = {"name": table.name, "rows": [_row_to_record(r) for r in table.rows]}
        path.write_text(json.dumps(doc, indent=1))
    else:
        raise ValueError(f"unknown format {fmt!r}")


def load_reference(path, fmt: Optional[str] = None) -> ReferenceTable:
    path = Path(path)
    if fmt is None:
        fmt = "json" if path.suffix == ".json" else "csv"
    if fmt == "csv":
        rows = []
        with path.open(newline="") as fh:
            reader = csv.DictReader(fh)
            for i, rec in enumerate(reader, start=2):
                rows.append(_record_to_row(rec, f"{path}:{i}"))
        return ReferenceTable(name=path.stem, rows=tuple(rows))
    if fmt == "json":
        doc = json.loads(path.read_text())
        rows = [_record_to_row(rec, f"{path}:rows[{i}]")
                for i, rec in enumerate(doc["rows"])]
        return ReferenceTable(name=doc.get("name", path.stem), rows=tuple(rows))
    raise ValueError(f"unknown format {fmt!r}")


# --------------------------------------------------------------------------
# Comparison
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class MatchReport:
    table: str
    tol: float
    max_dev: float
    rows_passed: int
    rows_failed: int
    rows_flagged: int
    worst_key: Optional[tuple]
    missing_keys: tuple
    deviations: tuple  # ((system, label), dev) on compared rows

    @property
    def passed(self) -> bool:
        return self.rows_failed == 0

    def to_dict(self) -> dict:
        return {"table": self.table, "tol": self.tol, "max_dev": self.max_dev,
                "rows_passed": self.rows_passed, "rows_failed": self.rows_failed,
                "rows_flagged": self.rows_flagged,
                "worst": list(self.worst_key) if self.worst_key else None,
                "missing": [list(k) for k in self.missing_keys],
                "pass": self.passed}


def compare_tables(calc: ReferenceTable, ref: ReferenceTable, tol: float,
                   source: str = "paper_calc") -> MatchReport:
    """Row-by-row comparison on the shared key space, flagged rows skipped."""
    ref_rows = {r.key: r for r in ref.rows if r.source == source}
    missing = []
    devs = []
    flagged = 0
    for r in calc.rows:
        if r.source != source:
            continue
        other = ref_rows.get(r.key)
        if other is None:
            missing.append(r.key)
            continue
        if r.flagged or other.flagged or r.value == "" or other.value == "":
            flagged += 1
            continue
        devs.append(((r.system, r.label), r.numeric - other.numeric))
    max_dev = max((abs(d) for _, d in devs), default=0.0)
    worst = max(devs, key=lambda kv: abs(kv[1]), default=(None, 0.0))[0]
    failed = sum(1 for _, d in devs if abs(d) > tol)
    return MatchReport(table=ref.name, tol=tol, max_dev=max_dev,
                       rows_passed=len(devs) - failed, rows_failed=failed,
                       rows_flagged=flagged, worst_key=worst,
                       missing_keys=tuple(missing), deviations=tuple(devs))


def flagged_rows_manifest() -> list[dict]:
    """Machine-readable list of every flagged builtin row."""
    out = []
    for name in BUILTIN_TABLE_NAMES:
        for r in builtin_reference(name).rows:
            if r.flagged and r.source != "paper_obs":
                out.append({"table": name, "system": r.system, "label": r.label,
                            "flags": r.flags, "value": r.value})
    return out


# --------------------------------------------------------------------------
# Calibrated presets
# --------------------------------------------------------------------------

def constant(system: str, label: str) -> float:
    return builtin_reference("constants").lookup(system, label).numeric


def data_file(name: str) -> Path:
    """Path of a shipped configuration/rules JSON (data directory)."""
    path = Path(__file__).parent / "data" / name
    if not path.exists():
        raise KeyError(f"no shipped data file {name!r}")
    return path


ALPHA = 7.297352568e-3
NUCLEI_BASE = {"G": 302.316, "k": 0.3908, "d_gluon": 0.4317}
K1_DEFAULT = 0.2125


def so_gluon_constant(G: float = 296.511, k: float = 0.3997) -> float:
    """Gluonic constant of the spin-orbit set: the subtraction equals the
    binding of the j=l-1/2-corrected nucleon on the deuteron's (0,1) level."""
    ga = pionic_charge(1, 2, k)
    term = spin_orbit_term(1, ga)
    return _pionic_energy(
        PionicField(Z=1, A=2, G=G, Ga=ga, d_gluon=0.0, so_enabled=True,
                    calibration_tag="so"),
        0, 1, 0.0, term.s_minus)


NUCLEI_SO = {"G": 296.511, "k": 0.3997, "d_gluon": so_gluon_constant()}


def atomic_params(system: str) -> AtomicModelParams:
    """Embedded constants for the two fitted hydrogenic systems."""
    if system == "heII":
        return AtomicModelParams(alpha=ALPHA, mass=510928.873, Z=2,
                                 d=0.05634, g=0.1487, one_knot_mass_power=2.0)
    if system == "hydrogen":
        return AtomicModelParams(alpha=ALPHA, mass=510720.7446, Z=1,
                                 d=0.0731, g=0.20193)
    raise KeyError(f"unknown atomic system: {system!r}")


def li_params(branch: str) -> LiModelParams:
    """Lithium parameter sets; 'lgt0' for l >= 1, 'l0' for the s series."""
    if branch == "lgt0":
        return LiModelParams(alpha=ALPHA, mass=510952.3, a=0.3083,
                             b=0.0269687, g=7.72, limit_energy=5.3917191)
    if branch == "l0":
        return LiModelParams(alpha=ALPHA, mass=510952.3, a=0.1421,
                             b=-0.1375, g=-10.255, limit_energy=5.3917191)
    raise KeyError(f"unknown lithium branch: {branch!r}")


def nuclei_field(Z: int, A: int, calibration: str = "base") -> PionicField:
    """Field for a nuclide; mirror formula when 2Z = A, else the
    neutron-excess path with the default k1 (base constants)."""
    if calibration not in ("base", "so"):
        raise KeyError(f"unknown calibration: {calibration!r}")
    if 2 * Z == A:
        consts = NUCLEI_SO if calibration == "so" else NUCLEI_BASE
        return PionicField.mirror(Z, G=consts["G"], k=consts["k"],
                                  d_gluon=consts["d_gluon"],
                                  so_enabled=(calibration == "so"),
                                  calibration_tag=calibration)
    if calibration == "so":
        raise KeyError("spin-orbit calibration covers mirror nuclides only")
    return notmirror_field(Z, A - Z)


def notmirror_field(p: int, n: int, k1: float = K1_DEFAULT) -> PionicField:
    return PionicField.not_mirror(p, n, G=NUCLEI_BASE["G"], k=NUCLEI_BASE["k"],
                                  k1=k1, d_gluon=NUCLEI_BASE["d_gluon"],
                                  calibration_tag="base")
