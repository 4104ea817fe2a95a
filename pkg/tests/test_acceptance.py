"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import math
import time

import numpy as np
import pytest

from rydwire.atoms import InteractionGraph, PhysicalParams, Scheme, builtin_layout, pair_strength
from rydwire.cli import compile_document, simulate_document
from rydwire.fidelity import distance_sweep, error_budget, residual_phase_11, simulate_cp00_fidelity
from rydwire.formats import read_schedule, write_schedule
from rydwire.gates import catalog, data_subspace_unitary, state_preparation_sequence, verify_gate
from rydwire.atoms import build_interaction_graph
from rydwire.pulse import Model, Pulse, ideal_propagate, reachable_mask, realistic_propagate, sequence_propagate
from rydwire.qops import phase_distance

PI = math.pi
TWO_PI = 2 * PI


def test_criterion_1_gate_identity_suite(record):
    start = time.perf_counter()
    specs = catalog(np.random.default_rng(7))
    reports = [verify_gate(s) for s in specs]
    elapsed = time.perf_counter() - start
    worst_dev = max(r.deviation for r in reports)
    worst_leak = max(r.wire_return_defect for r in reports)
    ok = worst_dev < 1e-9 and worst_leak < 1e-9 and elapsed < 5.0
    record(1, ok, f"{len(specs)} gates, max deviation {worst_dev:.1e}, max wire leakage {worst_leak:.1e}, {elapsed:.2f} s")
    assert ok


def test_criterion_2_error_budget(record):
    b = error_budget(PhysicalParams(), 6.8)
    quoted = (4e-3, 2.04e-2, 9.12e-2)
    rel = [abs(x - q) / q for x, q in zip(b, quoted)]
    ok = all(r <= 0.02 for r in rel)
    record(2, ok, "terms " + ", ".join(f"{x:.4g}" for x in b) + f"; worst relative error {max(rel):.2%}")
    assert ok


def test_criterion_3_interaction_constant(record):
    v = pair_strength(Scheme.VDW, 7.0, PhysicalParams())
    rel = abs(v / TWO_PI - 6.2) / 6.2
    ok = rel <= 0.01
    record(3, ok, f"V(7 um)/2pi = {v / TWO_PI:.4f} MHz, off by {rel:.2%}")
    assert ok


def test_criterion_4_vdw_sweep(record):
    start = time.perf_counter()
    table = distance_sweep(5.0, 10.0, 100, PhysicalParams(), Scheme.VDW)
    elapsed = time.perf_counter() - start
    total = table.column("f_total_with_decay")
    i = int(np.argmax(total))
    interior = 0 < i < len(total) - 1
    d_peak = table.rows[i].d_um
    decay = table.results[0].budget.decay
    peaks = {
        "overlap": table.column("f_overlap_avg").max() - decay,
        "gate": table.column("f_gate_avg").max() - decay,
    }
    near = {k: abs(v - 0.94) <= 0.04 for k, v in peaks.items()}
    ok = interior and abs(d_peak - 6.8) <= 0.7 and any(near.values()) and elapsed < 10.0
    record(
        4, ok,
        f"peak {total[i]:.4f} at d = {d_peak:.3f} um; with decay overlap {peaks['overlap']:.4f},"
        f" gate {peaks['gate']:.4f}; {elapsed:.2f} s",
    )
    assert ok


def test_criterion_5_foerster_sweep(record):
    table = distance_sweep(6.0, 12.0, 100, PhysicalParams(), Scheme.FOERSTER)
    best = table.peak()
    value_ok = abs(best.f_total_with_decay - 0.98) <= 0.015
    where_ok = abs(best.d_um - 9.17) <= 0.5
    ok = value_ok and where_ok
    record(
        5, ok,
        f"max {best.f_total_with_decay:.4f} (value {'ok' if value_ok else 'off'})"
        f" at d = {best.d_um:.3f} um (location {'ok' if where_ok else 'off'}, window 8.67-9.67)",
    )
    assert ok


def _wire_pi_distance(ratio: float, params: PhysicalParams) -> float:
    arr = builtin_layout("chain3", 7.0)
    graph = InteractionGraph.blockade_only(arr, ratio * params.omega)
    mask = reachable_mask(graph)
    p = Pulse(("W",), PI, 0.0)
    ur = realistic_propagate(p, arr, graph, params)[np.ix_(mask, mask)]
    ui = ideal_propagate(p, arr, graph)[np.ix_(mask, mask)]
    return phase_distance(ur, ui)


def test_criterion_6_convergence(record):
    params = PhysicalParams()
    ratios = np.array([10.0, 100.0, 1000.0])
    dists = np.array([_wire_pi_distance(r, params) for r in ratios])
    monotone = bool(np.all(np.diff(dists) < 0))
    slope = float(np.polyfit(np.log10(ratios), np.log10(dists), 1)[0])
    ok = monotone and -2.5 <= slope <= -1.5
    record(
        6, ok,
        "distances " + ", ".join(f"{x:.3e}" for x in dists)
        + f"; monotone {monotone}; log-log slope {slope:.2f} (window -2.5 to -1.5)",
    )
    assert ok


def test_criterion_7_state_generation(record):
    rng = np.random.default_rng(99)
    arr = builtin_layout("chain3", 7.0)
    graph = build_interaction_graph(arr, PhysicalParams())
    worst = 0.0
    for _ in range(100):
        a = rng.normal(size=4) + 1j * rng.normal(size=4)
        a /= np.linalg.norm(a)
        u = sequence_propagate(state_preparation_sequence(a), Model.IDEAL, arr, graph)
        block, _ = data_subspace_unitary(u, arr)
        worst = max(worst, 1 - abs(np.vdot(a, block[:, 0])) ** 2)
    ok = worst < 1e-9
    record(7, ok, f"100 random targets, worst 1 - overlap {worst:.1e}")
    assert ok


def test_criterion_8_schedule_round_trip(record, tmp_path):
    params = PhysicalParams()
    worst = 0.0
    specs = catalog(np.random.default_rng(8))
    for k, spec in enumerate(specs):
        path = tmp_path / f"{k}.json"
        write_schedule(compile_document(spec, 7.0, params), path)
        report = simulate_document(read_schedule(path), Model.IDEAL, params)
        worst = max(worst, abs(report["deviation"] - verify_gate(spec).deviation))
    ok = worst < 1e-9
    record(8, ok, f"{len(specs)} gates, worst deviation mismatch {worst:.1e}")
    assert ok


def test_criterion_9_per_state_errors(record):
    params = PhysicalParams()
    d = 7.0
    res = simulate_cp00_fidelity(d, params)
    v = pair_strength(Scheme.VDW, d, params)
    predicted = params.omega**2 / (2 * v**2)
    ratios = [(1 - res.per_state_overlap[k]) / predicted for k in (1, 2)]
    leak_ok = all(0.5 <= r <= 2.0 for r in ratios)
    v2 = params.c6 / (2 * d) ** 6
    phase = residual_phase_11(d, params)
    expected = TWO_PI * v2 / params.omega
    phase_ok = abs(phase - expected) <= 0.2 * expected
    ok = leak_ok and phase_ok
    record(
        9, ok,
        f"|01>,|10> infidelity / prediction = {ratios[0]:.3f}, {ratios[1]:.3f};"
        f" |11> phase {phase:.4f} vs {expected:.4f}",
    )
    assert ok
