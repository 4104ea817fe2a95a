"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .atoms import PhysicalParams, Scheme, build_interaction_graph
from .fidelity import distance_sweep, error_budget
from .formats import ScheduleDocument, ScheduleError, read_schedule, sweep_csv
from .gates import (
    data_subspace_unitary,
    gate_names,
    make_gate,
    verify_gate,
    catalog,
)
from .pulse import Model, sequence_propagate
from .qops import ContractError, phase_distance

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _params(args) -> PhysicalParams:
    return PhysicalParams.from_lab_units(
        omega_mhz=args.omega_mhz,
        c6_ghz=args.c6_ghz,
        c3_ghz=args.c3_ghz,
        tau_us=args.tau_us,
        scheme=getattr(args, "scheme", None) or Scheme.VDW,
    )


def _gate_kwargs(args) -> dict:
    return {"theta": args.theta, "phi": args.phi, "alpha": args.alpha}


def _make_gate(name: str, args):
    try:
        return make_gate(name, **_gate_kwargs(args))
    except ContractError as exc:
        raise UsageError(str(exc)) from None


# -- verify -------------------------------------------------------------------

def cmd_verify(args, out) -> int:
    if args.gate.lower() == "all":
        specs = catalog(full=args.full)
    else:
        specs = [_make_gate(args.gate, args)]
    out.write(f"{'gate':<12} {'pulses':>6} {'deviation':>11} {'phase':>9} {'leakage':>10}  result\n")
    ok = True
    for spec in specs:
        r = verify_gate(spec)
        ok &= r.passed
        out.write(
            f"{r.gate:<12} {r.n_pulses:>6d} {r.deviation:>11.3e} {r.extracted_global_phase:>9.5f}"
            f" {r.wire_return_defect:>10.3e}  {'PASS' if r.passed else 'FAIL'}\n"
        )
    out.write(f"{len(specs)} gates, {'all pass' if ok else 'FAILURES'}\n")
    return EXIT_OK if ok else EXIT_FAIL


# -- compile ------------------------------------------------------------------

def compile_document(spec, d: float, params: PhysicalParams) -> ScheduleDocument:
    meta = {
        "gate": spec.name,
        "parameters": {k: float(v) for k, v in spec.parameters.items()},
        "pulse_count": len(spec.sequence),
        "omega_MHz": params.omega / (2 * math.pi),
        "total_duration_us": spec.sequence.duration(params.omega),
    }
    return ScheduleDocument.from_sequence(spec.sequence, spec.layout, d, meta)


def cmd_compile(args, out) -> int:
    spec = _make_gate(args.gate, args)
    doc = compile_document(spec, args.d, _params(args))
    text = doc.dumps()
    if args.out in (None, "-"):
        out.write(text)
    else:
        try:
            Path(args.out).write_text(text)
        except OSError as exc:
            sys.stderr.write(f"cannot write {args.out}: {exc}\n")
            return EXIT_IO
        out.write(
            f"wrote {args.out}: {spec.name} on {spec.layout}, {len(doc.pulses)} pulses,"
            f" {doc.metadata['total_duration_us']:.6g} us\n"
        )
    return EXIT_OK


# -- sweep --------------------------------------------------------------------

def cmd_sweep(args, out) -> int:
    if not (0 < args.d_min < args.d_max) or args.steps < 2:
        raise UsageError("need 0 < d_min < d_max and steps >= 2")
    params = _params(args).with_(scheme=Scheme(args.scheme_pos))
    table = distance_sweep(args.d_min, args.d_max, args.steps, params)
    text = sweep_csv(table)
    if args.out in (None, "-"):
        out.write(text)
        return EXIT_OK
    try:
        Path(args.out).write_text(text)
    except OSError as exc:
        sys.stderr.write(f"cannot write {args.out}: {exc}\n")
        return EXIT_IO
    best = table.peak()
    out.write(
        f"wrote {args.out}: {len(table.rows)} rows; peak f_total_with_decay"
        f" {best.f_total_with_decay:.4f} at d = {best.d_um:.3f} um\n"
    )
    return EXIT_OK


# -- budget -------------------------------------------------------------------

def cmd_budget(args, out) -> int:
    if not args.d_pos > 0:
        raise UsageError("d must be positive")
    params = _params(args).with_(scheme=Scheme(args.scheme_pos))
    b = error_budget(params, args.d_pos)
    out.write(f"error budget for CP00(pi), scheme={params.scheme.value}, d={args.d_pos:g} um\n")
    out.write(f"  decay     {b.decay:.4e}\n")
    out.write(f"  blockade  {b.blockade:.4e}\n")
    out.write(f"  residual  {b.residual:.4e}\n")
    out.write(f"  total     {b.total:.4e}   (1 - F = {1 - b.total:.4f})\n")
    out.write("parameters:\n")
    out.write(f"  omega/2pi = {params.omega / (2 * math.pi):g} MHz\n")
    out.write(f"  C6/2pi    = {params.c6 / (2 * math.pi) / 1e3:g} GHz um^6\n")
    out.write(f"  C3/2pi    = {params.c3 / (2 * math.pi) / 1e3:g} GHz um^3\n")
    tau_note = " (derived from the quoted 4e-3 decay error, not measured)" if args.tau_us == 141.0 else " (user supplied)"
    out.write(f"  tau       = {params.tau:g} us{tau_note}\n")
    return EXIT_OK


# -- simulate -----------------------------------------------------------------

def _basis_labels(n: int) -> list[str]:
    return [format(k, f"0{n}b") for k in range(2**n)]


def simulate_document(doc: ScheduleDocument, model: Model, params: PhysicalParams) -> dict:
    """Propagate every data basis state (wires in ``|0>``) through ``doc``."""
    array = doc.array()
    graph = build_interaction_graph(array, params)
    u = sequence_propagate(doc.sequence(), model, array, graph, params)
    block, _ = data_subspace_unitary(u, array)
    labels = _basis_labels(len(array.data_indices))
    rows = []
    for k, lab in enumerate(labels):
        col = block[:, k]
        rows.append(
            {
                "input": lab,
                "amplitudes": {o: [float(col[j].real), float(col[j].imag)] for j, o in enumerate(labels)},
                "leakage": max(0.0, float(1 - np.sum(np.abs(col) ** 2))),
            }
        )
    report = {
        "model": model.value,
        "layout": doc.layout_name,
        "d_um": doc.d_um,
        "data_atoms": list(array.data_labels),
        "states": rows,
    }
    gate = doc.metadata.get("gate")
    if gate:
        try:
            spec = make_gate(gate, **doc.metadata.get("parameters", {}))
        except (ContractError, TypeError):
            spec = None
        if spec is not None and spec.target_unitary.shape == block.shape:
            report["gate"] = spec.name
            report["deviation"] = phase_distance(block, spec.target_unitary)
    return report


def cmd_simulate(args, out) -> int:
    try:
        doc = read_schedule(args.schedule)
    except OSError as exc:
        sys.stderr.write(f"cannot read {args.schedule}: {exc}\n")
        return EXIT_IO
    except ScheduleError as exc:
        sys.stderr.write(f"invalid schedule: {exc}\n")
        return EXIT_USAGE
    if args.d is not None:
        if not args.d > 0:
            raise UsageError("d must be positive")
        doc.d_um = args.d
    params = _params(args)
    report = simulate_document(doc, Model(args.model), params)
    out.write(
        f"model={report['model']} layout={report['layout']} d={report['d_um']:g} um"
        f" scheme={params.scheme.value} pulses={len(doc.pulses)}\n"
    )
    for r in report["states"]:
        amps = "  ".join(
            f"{o}:{re:+.6f}{im:+.6f}j" for o, (re, im) in r["amplitudes"].items()
            if abs(complex(re, im)) > 1e-12
        )
        out.write(f"|{r['input']}> -> {amps or '0'}   leakage={r['leakage']:.3e}\n")
    if "deviation" in report:
        out.write(f"deviation from {report['gate']}: {report['deviation']:.3e}\n")
    if args.report:
        try:
            Path(args.report).write_text(json.dumps(report, indent=2) + "\n")
        except OSError as exc:
            sys.stderr.write(f"cannot write {args.report}: {exc}\n")
            return EXIT_IO
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def _add_physics(p: argparse.ArgumentParser, scheme: bool = True) -> None:
    p.add_argument("--omega-mhz", type=float, default=2.0, help="Rabi frequency / 2pi in MHz")
    p.add_argument("--c6-ghz", type=float, default=732.0, help="|C6| / 2pi in GHz um^6")
    p.add_argument("--c3-ghz", type=float, default=12.32, help="C3 / 2pi in GHz um^3")
    p.add_argument("--tau-us", type=float, default=141.0, help="Rydberg lifetime in us")
    if scheme:
        p.add_argument("--scheme", choices=[s.value for s in Scheme], default="vdw")


def _add_gate_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--theta", type=float, default=None, help="rotation angle (rad)")
    p.add_argument("--phi", type=float, default=None, help="rotation axis / phase (rad)")
    p.add_argument("--alpha", type=float, default=None, help="phase for Ph and CP gates (rad)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rydwire", description="Rydberg wire-gate compiler and simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check gate sequences under the ideal blockade model")
    p.add_argument("gate", help="gate name or 'all'")
    p.add_argument("--full", action="store_true", help="with 'all': also sweep gate parameters")
    _add_gate_params(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compile", help="write a gate's pulse schedule")
    p.add_argument("gate")
    p.add_argument("--d", type=float, default=7.0, help="lattice constant in um")
    p.add_argument("--out", default=None, help="output path ('-' for stdout)")
    _add_gate_params(p)
    _add_physics(p)
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("sweep", help="CP00(pi) fidelity versus lattice constant, as CSV")
    p.add_argument("scheme_pos", metavar="scheme", choices=[s.value for s in Scheme])
    p.add_argument("d_min", type=float)
    p.add_argument("d_max", type=float)
    p.add_argument("steps", type=int)
    p.add_argument("--out", default=None, help="CSV path ('-' for stdout)")
    _add_physics(p, scheme=False)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("budget", help="analytic error budget of CP00(pi)")
    p.add_argument("d_pos", metavar="d", type=float)
    p.add_argument("scheme_pos", metavar="scheme", choices=[s.value for s in Scheme], nargs="?", default="vdw")
    _add_physics(p, scheme=False)
    p.set_defaults(func=cmd_budget)

    p = sub.add_parser("simulate", help="propagate a schedule file")
    p.add_argument("schedule")
    p.add_argument("--model", choices=[m.value for m in Model], default="ideal")
    p.add_argument("--report", default=None, help="write a JSON report here")
    p.add_argument("--d", type=float, default=None, help="override the document's lattice constant (um)")
    _add_physics(p)
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ContractError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
