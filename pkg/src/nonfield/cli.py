"""Command-line front end.

Exit status: 0 success (and comparison pass), 1 comparison failure,
2 usage errors.  All numeric output is deterministic; the version banner
goes to stderr so data streams stay byte-stable.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import __version__, atomic, calibrate, dynamics, nuclei, refdata, solvers

_REPRODUCE_TOLERANCES = {
    "heII": 2e-5,
    "hydrogen": 2e-5,
    "liI": 5e-5,
    "nuclei_mirror_levels": 0.02,
    "nuclei_mirror_excitations": 0.02,
    "nuclei_notmirror": 0.02,
}


def _emit(rows: list[dict], fmt: str, columns: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(rows, indent=1))
    elif fmt == "csv":
        print(",".join(columns))
        for r in rows:
            print(",".join(str(r.get(c, "")) for c in columns))
    else:
        widths = {c: max(len(c), *(len(str(r.get(c, ""))) for r in rows)) if rows
                  else len(c) for c in columns}
        print("  ".join(c.ljust(widths[c]) for c in columns))
        for r in rows:
            print("  ".join(str(r.get(c, "")).ljust(widths[c]) for c in columns))


def _state_rows(system: str, d, g):
    params = refdata.atomic_params(system)
    if d is not None:
        params = replace(params, d=d)
    if g is not None:
        params = replace(params, g=g)
    table = refdata.builtin_reference(system)
    rows = []
    for r in table.select(source="paper_calc"):
        if r.series == "ground-binding":
            continue
        st = atomic.QuantumState(N=int(r.series[1]), l=r.l, two_j=r.two_j,
                                 label=r.label)
        rows.append({"state": r.label, "series": r.series,
                     "transition_ev": f"{atomic.transition_energy(params, st):.7f}"})
    rows.append({"state": "ground", "series": "ground-binding",
                 "transition_ev": f"{atomic.binding_energy(params, atomic.GROUND_STATE):.7f}"})
    return rows


def _cmd_atomic(args) -> int:
    if args.action == "spectrum":
        _emit(_state_rows(args.system, args.d, args.g), args.format,
              ["state", "series", "transition_ev"])
        return 0
    fit = calibrate.calibrate_atomic(args.system)
    print(fit.to_json())
    return 0


def _cmd_li(args) -> int:
    rows = []
    for r in refdata.builtin_reference("liI").select(source="paper_calc"):
        if r.n is None:
            continue
        params = refdata.li_params("l0" if r.l == 0 else "lgt0")
        lv = atomic.li_level(params, r.n, r.l)
        rows.append({"n": r.n, "l": r.l, "transition_ev": f"{lv.transition:.6f}",
                     "binding_ev": f"{lv.binding_tilde:.6f}"})
    _emit(rows, args.format, ["n", "l", "transition_ev", "binding_ev"])
    return 0


def _load_config(path: str) -> nuclei.ShellConfiguration:
    doc = json.loads(Path(path).read_text())
    return nuclei.ShellConfiguration.from_dict(
        doc, field_factory=lambda p, n, cal:
            refdata.nuclei_field(p, p + n, cal) if p == n
            else refdata.notmirror_field(p, n))


def _cmd_nuclei(args) -> int:
    if args.action == "levels":
        field = refdata.nuclei_field(args.z, args.a, args.calibration)
        table = nuclei.level_table(field, args.max_n, args.max_l,
                                   args.average_from_shell)
        rows = [{"state": r.state.label,
                 "pair_mev": f"{r.pair_binding:.3f}",
                 "proton_mev": f"{r.eps_proton - field.subtraction_per_nucleon:.3f}",
                 "neutron_mev": f"{r.eps_neutron - field.subtraction_per_nucleon:.3f}"}
                for r in table.rows]
        _emit(rows, args.format, ["state", "pair_mev", "proton_mev", "neutron_mev"])
        return 0
    if args.action == "config":
        config = _load_config(args.file)
        energy = nuclei.configuration_energy(config)
        out = {"pionic_total_mev": energy.pionic_total,
               "binding_with_subtraction_mev": energy.binding_with_subtraction}
        if args.observed is not None:
            out["required_subtraction_mev"] = nuclei.required_subtraction(
                config, args.observed)
        print(json.dumps(out, indent=1))
        return 0
    if args.action == "chain":
        limit = nuclei.chain_length(args.p, args.k1)
        print(json.dumps({"p": args.p, "k1": args.k1,
                          "max_a": limit if limit is not None else "no-limit"}))
        return 0
    # excite / match
    config = _load_config(args.file)
    rules = nuclei.RuleSet.from_json(Path(args.rules).read_text())
    table = nuclei.level_table(config.field, args.max_n, args.max_l,
                               rules.average_from_shell)
    transitions = nuclei.enumerate_excitations(config, rules, table,
                                               args.max_energy)
    rows = [{"transition": t.label, "energy_mev": f"{t.energy:.3f}"}
            for t in transitions]
    if args.action == "match":
        observed = [float(v) for v in args.observed.split(",")]
        matches = nuclei.match_lines(transitions, observed, args.tol)
        rows = [{"transition": m.transition.label,
                 "energy_mev": f"{m.transition.energy:.3f}",
                 "observed_mev": f"{m.observed:.3f}",
                 "deviation_mev": f"{m.deviation:+.3f}"} for m in matches]
        _emit(rows, args.format,
              ["transition", "energy_mev", "observed_mev", "deviation_mev"])
        return 0
    _emit(rows, args.format, ["transition", "energy_mev"])
    return 0


def _cmd_solve(args) -> int:
    if args.target == "coherent":
        result = solvers.solve_coherent_roots(args.k, args.count)
        print(json.dumps({"k": args.k, "roots": [f"{r:.10f}" for r in result.roots],
                          "residual": result.residual}))
        return 0
    if args.target == "gluonic":
        system = solvers.solve_gluonic_system(args.m, args.g2, args.g4,
                                              args.n, args.l)
        ident = solvers.gluonic_identities(system)
        print(json.dumps({"A": system.A, "B": system.B, "g3": system.g3,
                          "roots": list(system.roots),
                          "identities": list(ident)}))
        return 0
    params = {}
    if args.u0 is not None:
        params["u0"] = args.u0
    if args.a is not None:
        params["a"] = args.a
    if args.b is not None:
        params["b"] = args.b
    result = solvers.coherence_residual(args.case, **params)
    print(json.dumps({"case": result.case, "solved": result.solved,
                      "residual": result.residual}))
    return 0


def _cmd_waves(args) -> int:
    if args.action == "turning":
        lo, hi = dynamics.turning_points(args.c)
        print(json.dumps({"C": args.c, "p_minus": lo, "p_plus": hi}))
        return 0
    initial = dynamics.WaveState(x=args.x0, p=args.p0, dp=args.dp0,
                                 v=args.v0, dv=args.dv0)
    trajectory = dynamics.integrate_wave_pair(initial, args.x_end, args.step)
    if args.csv:
        Path(args.csv).write_text(trajectory.to_csv())
        print(json.dumps({"written": args.csv, "points": len(trajectory.states),
                          "diverged": trajectory.diverged}))
    else:
        sys.stdout.write(trajectory.to_csv())
    return 0


def _cmd_fluid(args) -> int:
    if args.profile == "ideal":
        v = dynamics.ideal_stream_velocity(args.k, args.x, args.c)
        print(json.dumps({"v": v}))
    else:
        v = dynamics.rotational_velocity(args.a, args.b, args.x, args.branch)
        print(json.dumps({"v": v, "branch": args.branch}))
    return 0


def _engine_table(name: str) -> "refdata.ReferenceTable":
    """Recompute a builtin table's paper_calc column with the engine."""
    from . import reproduce
    return reproduce.engine_table(name)


def _cmd_reproduce(args) -> int:
    from . import reproduce
    tol = args.tol if args.tol is not None else _REPRODUCE_TOLERANCES[args.table]
    report = reproduce.reproduce_table(args.table, tol)
    print(json.dumps(report.to_dict(), indent=1))
    return 0 if report.passed else 1


def _cmd_serve(args) -> int:
    import uvicorn
    from .service import create_app
    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nonfield")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["human", "csv", "json"],
                       default="human")

    p = sub.add_parser("atomic", help="hydrogenic spectra and fits")
    p.add_argument("action", choices=["spectrum", "fit"])
    p.add_argument("--system", choices=["heII", "hydrogen"], required=True)
    p.add_argument("--d", type=float)
    p.add_argument("--g", type=float)
    add_format(p)
    p.set_defaults(func=_cmd_atomic)

    p = sub.add_parser("li", help="lithium valence levels")
    add_format(p)
    p.set_defaults(func=_cmd_li)

    p = sub.add_parser("nuclei", help="shell-model engine")
    p.add_argument("action", choices=["levels", "config", "excite", "match", "chain"])
    p.add_argument("--z", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--calibration", choices=["base", "so"], default="base")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-l", type=int, default=6)
    p.add_argument("--average-from-shell", type=int)
    p.add_argument("--file", help="configuration JSON")
    p.add_argument("--rules", help="rules JSON")
    p.add_argument("--observed", help="binding (config) or comma list (match)")
    p.add_argument("--max-energy", type=float)
    p.add_argument("--tol", type=float, default=0.05)
    p.add_argument("--p", type=int, help="proton count for chain")
    p.add_argument("--k1", type=float, default=refdata.K1_DEFAULT)
    add_format(p)
    p.set_defaults(func=_cmd_nuclei_dispatch)

    p = sub.add_parser("solve", help="root systems and coherence cases")
    p.add_argument("target", choices=["coherent", "gluonic", "coherence"])
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--count", type=int, default=2)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--g2", type=float, default=1.0)
    p.add_argument("--g4", type=float, default=1.0)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--case", default="coulomb_w_vacuum")
    p.add_argument("--u0", type=float)
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("waves", help="wave-pair integration and turning points")
    p.add_argument("action", choices=["integrate", "turning"])
    p.add_argument("--c", type=float, default=-0.2)
    p.add_argument("--x0", type=float, default=0.0)
    p.add_argument("--p0", type=float, default=1.0)
    p.add_argument("--dp0", type=float, default=0.0)
    p.add_argument("--v0", type=float, default=1.0)
    p.add_argument("--dv0", type=float, default=0.0)
    p.add_argument("--x-end", type=float, default=5.0)
    p.add_argument("--step", type=float, default=1e-3)
    p.add_argument("--csv", help="write trajectory to this file")
    p.set_defaults(func=_cmd_waves)

    p = sub.add_parser("fluid", help="exact fluid profiles")
    p.add_argument("profile", choices=["ideal", "rotational"])
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--x", type=float, default=0.5)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--b", type=float, default=0.0)
    p.add_argument("--branch", choices=["subsonic", "supersonic"],
                   default="subsonic")
    p.set_defaults(func=_cmd_fluid)

    p = sub.add_parser("reproduce", help="golden comparison against the tables")
    p.add_argument("--table", choices=list(_REPRODUCE_TOLERANCES), required=True)
    p.add_argument("--tol", type=float)
    p.set_defaults(func=_cmd_reproduce)

    p = sub.add_parser("serve", help="run the local JSON service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8707)
    p.set_defaults(func=_cmd_serve)
    return parser


def _cmd_nuclei_dispatch(args) -> int:
    if args.action == "levels" and (args.z is None or args.a is None):
        raise SystemExit(2)
    if args.action in ("config", "excite", "match") and not args.file:
        raise SystemExit(2)
    if args.action in ("excite", "match") and not args.rules:
        raise SystemExit(2)
    if args.action == "match" and not args.observed:
        raise SystemExit(2)
    if args.action == "chain" and args.p is None:
        raise SystemExit(2)
    return _cmd_nuclei(args)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    print(f"nonfield {__version__}", file=sys.stderr)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
