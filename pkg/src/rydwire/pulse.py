"""Square-pulse schedules and their propagators.

A :class:`Pulse` drives every listed atom resonantly with area ``theta`` and
laser phase ``phi``. Two propagation models are available:

* ``IDEAL``: infinite blockade. A driven atom rotates only when all of its
  blockade neighbours are in the ground state, and no interaction phase is
  ever accumulated.
* ``REALISTIC``: exact evolution under the full Hamiltonian with finite pair
  shifts ``V_ij n_i n_j`` for the pulse duration ``theta / Omega``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .atoms import AtomArray, InteractionGraph, PhysicalParams
from .qops import (
    N_EXCITED,
    SIGMA_X,
    SIGMA_Y,
    ContractError,
    lift,
    unitary_exp,
)

__all__ = [
    "Model",
    "Pulse",
    "PulseSequence",
    "single_qubit_rotation",
    "interaction_diagonal",
    "pulse_hamiltonian",
    "ideal_propagate",
    "realistic_propagate",
    "propagate",
    "sequence_propagate",
    "reachable_mask",
]


class Model(str, enum.Enum):
    IDEAL = "ideal"
    REALISTIC = "realistic"


@dataclass(frozen=True)
class Pulse:
    targets: tuple[str, ...]
    theta: float
    phi: float = 0.0

    def __post_init__(self):
        targets = (self.targets,) if isinstance(self.targets, str) else tuple(self.targets)
        if not targets:
            raise ContractError("pulse needs at least one target")
        if len(set(targets)) != len(targets):
            raise ContractError(f"repeated target in {targets}")
        if not self.theta >= 0:
            raise ContractError(f"pulse area must be non-negative, got {self.theta}")
        object.__setattr__(self, "targets", targets)
        object.__setattr__(self, "theta", float(self.theta))
        object.__setattr__(self, "phi", float(self.phi))

    def dagger(self) -> "Pulse":
        """Inverse pulse: same area, laser phase advanced by pi."""
        return Pulse(self.targets, self.theta, _wrap(self.phi + math.pi))

    def duration(self, omega: float) -> float:
        return self.theta / omega

    def __str__(self) -> str:
        return f"{''.join(self.targets)}({self.theta:.4g}, {self.phi:.4g})"


def _wrap(phi: float) -> float:
    """Map an angle to [0, 2 pi)."""
    return math.fmod(math.fmod(phi, 2 * math.pi) + 2 * math.pi, 2 * math.pi)


@dataclass(frozen=True)
class PulseSequence:
    """Pulses in temporal order: ``pulses[0]`` is applied first."""

    pulses: tuple[Pulse, ...] = ()
    name: str = ""
    metadata: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "pulses", tuple(self.pulses))

    def __len__(self) -> int:
        return len(self.pulses)

    def __iter__(self):
        return iter(self.pulses)

    def __add__(self, other: "PulseSequence") -> "PulseSequence":
        """``a + b`` applies ``a`` first, then ``b``."""
        return PulseSequence(self.pulses + other.pulses, name=f"{self.name}+{other.name}")

    def total_area(self) -> float:
        return sum(p.theta for p in self.pulses)

    def duration(self, omega: float) -> float:
        return self.total_area() / omega

    def dagger(self) -> "PulseSequence":
        return PulseSequence(tuple(p.dagger() for p in reversed(self.pulses)), name=f"{self.name}^dag")


def single_qubit_rotation(theta: float, phi: float) -> np.ndarray:
    """``exp(-i theta/2 (cos phi sx + sin phi sy))``.

    ``R|0> = cos(theta/2)|0> - i exp(i phi) sin(theta/2)|1>``.
    """
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array(
        [[c, -1j * np.exp(-1j * phi) * s], [-1j * np.exp(1j * phi) * s, c]],
        dtype=complex,
    )


def _occupations(n_atoms: int) -> np.ndarray:
    """Boolean table ``occ[k, i]``: atom ``i`` excited in basis state ``k``."""
    k = np.arange(2**n_atoms)[:, None]
    shifts = np.arange(n_atoms - 1, -1, -1)[None, :]
    return ((k >> shifts) & 1).astype(bool)


def interaction_diagonal(graph: InteractionGraph) -> np.ndarray:
    """Diagonal of ``sum_{i<j} V_ij n_i n_j`` in the computational basis."""
    occ = _occupations(graph.n_atoms)
    diag = np.zeros(occ.shape[0])
    for (i, j), v in graph.strengths.items():
        if v:
            diag += v * (occ[:, i] & occ[:, j])
    return diag


def reachable_mask(graph: InteractionGraph) -> np.ndarray:
    """Basis states with no blockade link doubly excited."""
    occ = _occupations(graph.n_atoms)
    ok = np.ones(occ.shape[0], dtype=bool)
    for i, j in graph.blockaded:
        ok &= ~(occ[:, i] & occ[:, j])
    return ok


def _target_indices(p: Pulse, array: AtomArray) -> list[int]:
    return [array.index(t) for t in p.targets]


def pulse_hamiltonian(
    p: Pulse, array: AtomArray, graph: InteractionGraph, params: PhysicalParams
) -> np.ndarray:
    """Hamiltonian during pulse ``p``: resonant drive on targets plus all pair shifts."""
    n = len(array)
    axis = math.cos(p.phi) * SIGMA_X + math.sin(p.phi) * SIGMA_Y
    h = np.zeros((array.dim, array.dim), dtype=complex)
    for i in _target_indices(p, array):
        h += 0.5 * params.omega * lift(axis, i, n)
    h[np.diag_indices_from(h)] += interaction_diagonal(graph)
    return h


def ideal_propagate(p: Pulse, array: AtomArray, graph: InteractionGraph) -> np.ndarray:
    """Blockade-conditional rotation of every target.

    Raises
    ------
    ContractError
        If two simultaneous targets share a blockade link.
    """
    n = len(array)
    targets = _target_indices(p, array)
    for a in targets:
        for b in targets:
            if a < b and (a, b) in graph.blockaded:
                raise ContractError(
                    f"targets {array.atoms[a].label} and {array.atoms[b].label} blockade each other"
                )
    occ = _occupations(n)
    rot = single_qubit_rotation(p.theta, p.phi)
    u = np.eye(array.dim, dtype=complex)
    for i in targets:
        free = np.ones(array.dim, dtype=bool)
        for j in graph.neighbors(i):
            free &= ~occ[:, j]
        proj = np.diag(free.astype(complex))
        u = (lift(rot, i, n) @ proj + np.diag((~free).astype(complex))) @ u
    return u


def realistic_propagate(
    p: Pulse, array: AtomArray, graph: InteractionGraph, params: PhysicalParams
) -> np.ndarray:
    if p.theta == 0:
        return np.eye(array.dim, dtype=complex)
    return unitary_exp(pulse_hamiltonian(p, array, graph, params), p.duration(params.omega))


def propagate(
    p: Pulse,
    model: Model | str,
    array: AtomArray,
    graph: InteractionGraph,
    params: PhysicalParams | None = None,
) -> np.ndarray:
    if Model(model) is Model.IDEAL:
        return ideal_propagate(p, array, graph)
    if params is None:
        raise ContractError("realistic propagation needs physical parameters")
    return realistic_propagate(p, array, graph, params)


def sequence_propagate(
    seq: PulseSequence | Sequence[Pulse] | Iterable[Pulse],
    model: Model | str,
    array: AtomArray,
    graph: InteractionGraph,
    params: PhysicalParams | None = None,
) -> np.ndarray:
    """Ordered product ``U_n ... U_2 U_1`` with the first pulse acting first."""
    steps = [propagate(p, model, array, graph, params) for p in seq]
    return reduce(lambda acc, u: u @ acc, steps, np.eye(array.dim, dtype=complex))
