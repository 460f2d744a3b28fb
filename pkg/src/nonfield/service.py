"""Local HTTP+JSON service for the explorer UI; stateless handlers.

Every response carries the schema version and the calibration constants
it was computed with.  Binds to loopback by default (see cli `serve`).
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from . import nuclei, refdata
from .atomic import QuantumState, binding_energy, transition_energy, GROUND_STATE
from dataclasses import replace

SCHEMA_VERSION = 1


class OccupancyEntry(BaseModel):
    n: int = Field(ge=0)
    l: int = Field(ge=0)
    sign: str = "none"
    count: int = Field(ge=0)
    protons: Optional[int] = Field(default=None, ge=0)


class CoreField(BaseModel):
    p: int = Field(ge=1)
    n: int = Field(ge=1)


class ConfigurationDoc(BaseModel):
    z: int = Field(ge=1)
    a: int = Field(ge=2)
    calibration: str = "base"
    occupancy: list[OccupancyEntry]
    field: Optional[CoreField] = None


class ConfigurationRequest(BaseModel):
    config: ConfigurationDoc
    observed_binding: Optional[float] = None


class ExcitationRequest(BaseModel):
    config: ConfigurationDoc
    rules: dict = Field(default_factory=dict)
    max_energy_mev: Optional[float] = None
    observed: Optional[list[float]] = None
    tol: float = 0.05
    max_n: int = 6
    max_l: int = 6


def _calibration_info(field: nuclei.PionicField) -> dict:
    return {"tag": field.calibration_tag, "G": field.G, "Ga": field.Ga,
            "d_gluon": field.d_gluon, "coulomb_c": field.coulomb_c,
            "so_enabled": field.so_enabled}


def _field_for(z: int, a: int, calibration: str) -> nuclei.PionicField:
    if calibration not in ("base", "so"):
        raise HTTPException(status_code=422, detail="calibration must be base or so")
    if z < 1 or a < 2 or z >= a:
        raise HTTPException(status_code=404, detail="unknown nuclide parameters")
    try:
        return refdata.nuclei_field(z, a, calibration)
    except KeyError as exc:
        raise HTTPException(status_code=404, detail=str(exc))
    except nuclei.ChainInterrupted as exc:
        raise HTTPException(status_code=404, detail=str(exc))


def _level_payload(table: nuclei.LevelTable) -> list[dict]:
    sub = table.field.subtraction_per_nucleon
    out = []
    for r in table.rows:
        out.append({
            "state": r.state.label,
            "n": None if r.state.averaged is not None else r.state.N,
            "l": None if r.state.averaged is not None else r.state.l,
            "sign": None if r.state.averaged is not None else r.state.sign,
            "averaged": r.state.averaged,
            "members": list(r.members),
            "pair_binding_mev": r.pair_binding,
            "pair_pionic_mev": r.pair_pionic,
            "proton_binding_mev": r.eps_proton - sub,
            "neutron_binding_mev": r.eps_neutron - sub,
            "per_nucleon_pionic_mev": r.per_nucleon_pionic,
        })
    return out


def _parse_config(doc: ConfigurationDoc) -> nuclei.ShellConfiguration:
    def factory(p: int, n: int, calibration: str) -> nuclei.PionicField:
        if p == n:
            return _field_for(p, 2 * p, calibration)
        if calibration == "so":
            raise HTTPException(status_code=422,
                                detail="spin-orbit set covers mirror nuclides only")
        try:
            return refdata.notmirror_field(p, n)
        except nuclei.ChainInterrupted as exc:
            raise HTTPException(status_code=404, detail=str(exc))

    payload = doc.model_dump()
    try:
        return nuclei.ShellConfiguration.from_dict(payload, field_factory=factory)
    except ValueError as exc:
        message = str(exc)
        occupancy_violation = ("sums to" in message or "protons" in message
                               or "negative occupancy" in message)
        raise HTTPException(status_code=409 if occupancy_violation else 400,
                            detail=message)


def create_app() -> FastAPI:
    app = FastAPI(title="nonfield service", version=str(SCHEMA_VERSION))
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])

    @app.get("/api/nuclides/{z}/{a}/levels")
    def get_levels(z: int, a: int, calibration: str = "base",
                   max_n: int = Query(default=6), max_l: int = Query(default=6),
                   average_from_shell: Optional[int] = Query(default=None)):
        if not (0 <= max_n <= 12 and 0 <= max_l <= 12):
            raise HTTPException(status_code=422, detail="max_n/max_l out of range")
        if average_from_shell is not None and not (0 <= average_from_shell <= 24):
            raise HTTPException(status_code=422, detail="average_from_shell out of range")
        field = _field_for(z, a, calibration)
        table = nuclei.level_table(field, max_n, max_l, average_from_shell)
        return {"schema_version": SCHEMA_VERSION, "z": z, "a": a,
                "calibration": _calibration_info(field),
                "levels": _level_payload(table)}

    @app.post("/api/configuration")
    def post_configuration(req: ConfigurationRequest):
        config = _parse_config(req.config)
        energy = nuclei.configuration_energy(config)
        table = nuclei.level_table(config.field, 6, 6)
        subtraction = None
        partition = None
        if req.observed_binding is not None:
            try:
                subtraction = nuclei.required_subtraction(config, req.observed_binding)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            parts = nuclei.open_states(table, max(subtraction, 0.0))
            partition = {"open": [s.label for s in parts.open],
                         "resonance": [s.label for s in parts.resonance]}
        return {"schema_version": SCHEMA_VERSION,
                "calibration": _calibration_info(config.field),
                "pionic_total": energy.pionic_total,
                "binding_with_subtraction": energy.binding_with_subtraction,
                "required_subtraction": subtraction,
                "open_states": partition}

    @app.post("/api/excitations")
    def post_excitations(req: ExcitationRequest):
        if not (0 <= req.max_n <= 12 and 0 <= req.max_l <= 12):
            raise HTTPException(status_code=422, detail="max_n/max_l out of range")
        config = _parse_config(req.config)
        try:
            rules = nuclei.RuleSet.from_dict(req.rules)
            table = nuclei.level_table(config.field, req.max_n, req.max_l,
                                       rules.average_from_shell)
            transitions = nuclei.enumerate_excitations(config, rules, table,
                                                       req.max_energy_mev)
        except (ValueError, KeyError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        payload = {
            "schema_version": SCHEMA_VERSION,
            "calibration": _calibration_info(config.field),
            "transitions": [{"label": t.label, "energy_mev": t.energy,
                             "moves": [{"source": m.source.label,
                                        "target": m.target.label,
                                        "count": m.count} for m in t.moves]}
                            for t in transitions],
        }
        if req.observed is not None:
            matches = nuclei.match_lines(transitions, req.observed, req.tol)
            payload["matches"] = [{"label": m.transition.label,
                                   "energy_mev": m.transition.energy,
                                   "observed_mev": m.observed,
                                   "deviation_mev": m.deviation}
                                  for m in matches]
        return payload

    @app.get("/api/reference/{name}")
    def get_reference(name: str):
        try:
            table = refdata.builtin_reference(name)
        except KeyError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        from .refdata import _row_to_record
        return {"schema_version": SCHEMA_VERSION, "name": table.name,
                "rows": [_row_to_record(r) for r in table.rows]}

    @app.get("/api/atomic/{system}/spectrum")
    def get_spectrum(system: str, d: Optional[float] = None,
                     g: Optional[float] = None):
        try:
            params = refdata.atomic_params(system)
        except KeyError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        if d is not None:
            params = replace(params, d=d)
        if g is not None:
            params = replace(params, g=g)
        table = refdata.builtin_reference(system)
        lines = []
        for r in table.select(source="paper_calc"):
            if r.series == "ground-binding":
                continue
            st = QuantumState(N=int(r.series[1]), l=r.l, two_j=r.two_j,
                              label=r.label)
            lines.append({"state": r.label, "series": r.series,
                          "transition_ev": transition_energy(params, st)})
        return {"schema_version": SCHEMA_VERSION, "system": system,
                "parameters": {"d": params.d, "g": params.g},
                "ground_binding_ev": binding_energy(params, GROUND_STATE),
                "lines": lines}

    return app
