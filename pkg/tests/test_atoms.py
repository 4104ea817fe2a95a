import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rydwire.atoms import (
    Atom,
    AtomArray,
    InteractionGraph,
    PairKind,
    PhysicalParams,
    Role,
    Scheme,
    build_interaction_graph,
    builtin_layout,
    pair_strength,
)
from rydwire.qops import ContractError

TWO_PI = 2 * math.pi


def test_default_constants(params):
    assert params.omega == pytest.approx(TWO_PI * 2)
    assert params.c6 == pytest.approx(TWO_PI * 732e3)
    assert params.c3 == pytest.approx(TWO_PI * 12.32e3)
    # tau from 9 pi / (4 Omega tau) = 4e-3
    assert 9 * math.pi / (4 * params.omega * 4e-3) == pytest.approx(140.625)
    assert params.tau == 141.0


def test_vdw_strength_at_7um(params):
    v = pair_strength(Scheme.VDW, 7.0, params)
    # 732000 / 7**6 MHz = 6.2218 MHz
    assert v / TWO_PI == pytest.approx(6.2218, abs=1e-4)


def test_vdw_doubling_distance(params):
    assert pair_strength("vdw", 14.0, params) == pytest.approx(pair_strength("vdw", 7.0, params) / 64)


def test_foerster_wire_data(params):
    v = pair_strength(Scheme.FOERSTER, 9.17, params, PairKind.WIRE_DATA)
    # hand calculation: 12320 / 9.17**3 = 15.977 MHz
    assert v / TWO_PI == pytest.approx(15.977, abs=1e-3)
    # data-data pairs keep the van der Waals law
    vdd = pair_strength(Scheme.FOERSTER, 9.17, params, PairKind.DATA_DATA)
    assert vdd == pytest.approx(params.c6 / 9.17**6)


def test_pair_strength_rejects_bad_distance(params):
    with pytest.raises(ContractError):
        pair_strength("vdw", 0.0, params)


@given(
    d1=st.floats(1.0, 30.0),
    delta=st.floats(1e-3, 10.0),
    scheme=st.sampled_from(list(Scheme)),
    kind=st.sampled_from([PairKind.WIRE_DATA, PairKind.DATA_DATA]),
)
def test_strength_decreasing(d1, delta, scheme, kind):
    p = PhysicalParams()
    assert pair_strength(scheme, d1 + delta, p, kind) < pair_strength(scheme, d1, p, kind)


def test_chain3_graph(params):
    arr = builtin_layout("chain3", 7.0)
    g = build_interaction_graph(arr, params)
    v = params.c6 / 7.0**6
    assert g.strength(0, 1) == pytest.approx(v)
    assert g.strength(1, 2) == pytest.approx(v)
    assert g.strength(0, 2) == v / 64 or g.strength(0, 2) == pytest.approx(v / 64, rel=1e-14)
    assert g.blockaded == {(0, 1), (1, 2)}
    m = g.matrix()
    np.testing.assert_array_equal(m, m.T)


def test_yshape_graph(params):
    arr = builtin_layout("yshape", 7.0)
    assert arr.labels == ("A", "B", "C", "W")
    g = build_interaction_graph(arr, params)
    assert g.blockaded == {(0, 3), (1, 3), (2, 3)}
    assert arr.distance(0, 1) == pytest.approx(math.sqrt(3) * 7.0)
    w = arr.atoms[3].position
    assert w == (0.0, 0.0)
    angles = sorted(math.degrees(math.atan2(a.position[1], a.position[0])) % 360 for a in arr.atoms[:3])
    assert angles == pytest.approx([90, 210, 330])


def test_chain5_graph(params):
    arr = builtin_layout("chain5", 7.0)
    assert arr.labels == ("A", "W1", "B", "W2", "C")
    assert [a.position for a in arr.atoms] == [(7.0 * k, 0.0) for k in range(5)]
    g = build_interaction_graph(arr, params)
    assert g.blockaded == {(0, 1), (1, 2), (2, 3), (3, 4)}
    # all pairs carry an interaction, e.g. A-C at 4d
    assert g.strength(0, 4) == pytest.approx(params.c6 / 28.0**6)


def test_chain3_positions():
    arr = builtin_layout("chain3", 7.0)
    assert [a.position for a in arr.atoms] == [(0.0, 0.0), (7.0, 0.0), (14.0, 0.0)]
    assert arr.data_labels == ("A", "B")


def test_layout_errors():
    with pytest.raises(ContractError):
        builtin_layout("ring", 7.0)
    with pytest.raises(ContractError):
        builtin_layout("chain3", -1.0)


def test_array_invariants(params):
    with pytest.raises(ContractError):
        AtomArray((Atom("A", Role.DATA, (0, 0)), Atom("A", Role.WIRE, (1, 0))))
    with pytest.raises(ContractError):
        AtomArray((Atom("W", Role.WIRE, (0, 0)),))
    coincident = AtomArray((Atom("A", Role.DATA, (0, 0)), Atom("W", Role.WIRE, (0, 0))))
    with pytest.raises(ContractError):
        build_interaction_graph(coincident, params)


def test_foerster_graph_mixes_laws():
    p = PhysicalParams(scheme=Scheme.FOERSTER)
    g = build_interaction_graph(builtin_layout("chain3", 9.17), p)
    assert g.strength(0, 1) == pytest.approx(p.c3 / 9.17**3)
    assert g.strength(0, 2) == pytest.approx(p.c6 / 18.34**6)


def test_graph_rejects_negative():
    with pytest.raises(ContractError):
        InteractionGraph(2, {(0, 1): -1.0})
