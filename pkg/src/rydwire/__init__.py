"""Pulse-level compiler and simulator for Rydberg wire gates."""

from .atoms import (
    AtomArray,
    InteractionGraph,
    PhysicalParams,
    Scheme,
    build_interaction_graph,
    builtin_layout,
    pair_strength,
)
from .fidelity import distance_sweep, error_budget, simulate_cp00_fidelity
from .gates import catalog, make_gate, verify_gate
from .pulse import Model, Pulse, PulseSequence, sequence_propagate
from .qops import ContractError, phase_distance, unitary_exp

__version__ = "0.1.0"
