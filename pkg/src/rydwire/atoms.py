"""Atom arrays, physical constants and pairwise Rydberg interactions.

Frequencies are angular (rad/us), lengths in um. ``2*pi*1 MHz`` is therefore
stored as ``2*pi``; a C6 of ``(2 pi) 732 GHz um^6`` becomes ``2*pi*732e3``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Iterable, Mapping

import numpy as np

from .qops import ContractError

__all__ = [
    "Role",
    "Scheme",
    "PairKind",
    "Atom",
    "AtomArray",
    "PhysicalParams",
    "InteractionGraph",
    "DEFAULT_PARAMS",
    "LAYOUTS",
    "pair_strength",
    "build_interaction_graph",
    "builtin_layout",
]

TWO_PI = 2.0 * math.pi
BLOCKADE_EPS = 1e-6


class Role(str, enum.Enum):
    DATA = "data"
    WIRE = "wire"


class Scheme(str, enum.Enum):
    VDW = "vdw"
    FOERSTER = "foerster"


class PairKind(str, enum.Enum):
    WIRE_DATA = "wire_data"
    DATA_DATA = "data_data"
    WIRE_WIRE = "wire_wire"


@dataclass(frozen=True)
class Atom:
    label: str
    role: Role
    position: tuple[float, float]


@dataclass(frozen=True)
class AtomArray:
    """Ordered collection of atoms; list order is the tensor-factor order.

    The first atom is the most significant bit of a basis index, so for the
    chain ``A, W, B`` the index of ``|a w b>`` is ``4a + 2w + b``.
    """

    atoms: tuple[Atom, ...]
    name: str = "custom"
    spacing: float | None = None

    def __post_init__(self):
        labels = [a.label for a in self.atoms]
        if len(set(labels)) != len(labels):
            raise ContractError(f"duplicate atom labels in {labels}")
        if not any(a.role is Role.DATA for a in self.atoms):
            raise ContractError("array needs at least one data atom")

    def __len__(self) -> int:
        return len(self.atoms)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(a.label for a in self.atoms)

    @property
    def dim(self) -> int:
        return 2 ** len(self.atoms)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ContractError(
                f"unknown atom label {label!r}; array has {list(self.labels)}"
            ) from None

    @property
    def data_indices(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.atoms) if a.role is Role.DATA)

    @property
    def wire_indices(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.atoms) if a.role is Role.WIRE)

    @property
    def data_labels(self) -> tuple[str, ...]:
        return tuple(self.atoms[i].label for i in self.data_indices)

    def distance(self, i: int, j: int) -> float:
        (x1, y1), (x2, y2) = self.atoms[i].position, self.atoms[j].position
        return math.hypot(x2 - x1, y2 - y1)

    def pair_kind(self, i: int, j: int) -> PairKind:
        roles = {self.atoms[i].role, self.atoms[j].role}
        if roles == {Role.DATA}:
            return PairKind.DATA_DATA
        if roles == {Role.WIRE}:
            return PairKind.WIRE_WIRE
        return PairKind.WIRE_DATA


@dataclass(frozen=True)
class PhysicalParams:
    """Rydberg parameters in angular units.

    ``tau`` defaults to 141 us, obtained by inverting ``9 pi / (4 Omega tau)
    = 4e-3`` at ``Omega = 2 pi * 2 MHz``; it is derived, not a measured value.
    """

    omega: float = TWO_PI * 2.0
    c6: float = TWO_PI * 732e3
    c3: float = TWO_PI * 12.32e3
    tau: float = 141.0
    scheme: Scheme = Scheme.VDW

    def __post_init__(self):
        for name in ("omega", "c6", "c3", "tau"):
            value = getattr(self, name)
            if not value > 0:
                raise ContractError(f"{name} must be positive, got {value}")
        object.__setattr__(self, "scheme", Scheme(self.scheme))

    def with_(self, **changes) -> "PhysicalParams":
        return replace(self, **changes)

    @classmethod
    def from_lab_units(
        cls,
        omega_mhz: float = 2.0,
        c6_ghz: float = 732.0,
        c3_ghz: float = 12.32,
        tau_us: float = 141.0,
        scheme: Scheme | str = Scheme.VDW,
    ) -> "PhysicalParams":
        """Build from ``Omega/2pi`` in MHz and ``C/2pi`` in GHz um^n."""
        return cls(
            omega=TWO_PI * omega_mhz,
            c6=TWO_PI * abs(c6_ghz) * 1e3,
            c3=TWO_PI * abs(c3_ghz) * 1e3,
            tau=tau_us,
            scheme=Scheme(scheme),
        )


DEFAULT_PARAMS = PhysicalParams()


def pair_strength(
    scheme: Scheme | str,
    distance: float,
    params: PhysicalParams,
    pair_kind: PairKind | str = PairKind.WIRE_DATA,
) -> float:
    """Interaction shift (rad/us) of a doubly excited pair.

    Under the Foerster scheme only wire-data pairs use ``C3/d^3``; data atoms
    stay in the same Rydberg level and keep the van der Waals ``C6/d^6``.
    """
    if not distance > 0:
        raise ContractError(f"distance must be positive, got {distance}")
    if Scheme(scheme) is Scheme.FOERSTER and PairKind(pair_kind) is PairKind.WIRE_DATA:
        return params.c3 / distance**3
    return params.c6 / distance**6


@dataclass(frozen=True)
class InteractionGraph:
    """Symmetric pair interactions plus the set of ideal-model blockade links.

    Pairs are stored as sorted index tuples ``(i, j)`` with ``i < j``.
    """

    n_atoms: int
    strengths: Mapping[tuple[int, int], float] = field(default_factory=dict)
    blockaded: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        norm = {}
        for (i, j), v in dict(self.strengths).items():
            key = (min(i, j), max(i, j))
            if i == j or not 0 <= key[0] < key[1] < self.n_atoms:
                raise ContractError(f"invalid pair {(i, j)}")
            if v < 0:
                raise ContractError(f"negative interaction on pair {key}")
            norm[key] = float(v)
        links = frozenset((min(i, j), max(i, j)) for i, j in self.blockaded)
        object.__setattr__(self, "strengths", norm)
        object.__setattr__(self, "blockaded", links)

    def strength(self, i: int, j: int) -> float:
        return self.strengths.get((min(i, j), max(i, j)), 0.0)

    def neighbors(self, i: int) -> tuple[int, ...]:
        """Blockade neighbours of atom ``i``."""
        out = [b if a == i else a for a, b in self.blockaded if i in (a, b)]
        return tuple(sorted(out))

    def matrix(self) -> np.ndarray:
        m = np.zeros((self.n_atoms, self.n_atoms))
        for (i, j), v in self.strengths.items():
            m[i, j] = m[j, i] = v
        return m

    def scaled(self, factor: float) -> "InteractionGraph":
        return InteractionGraph(
            self.n_atoms,
            {k: v * factor for k, v in self.strengths.items()},
            self.blockaded,
        )

    @classmethod
    def blockade_only(
        cls, array: AtomArray, strength: float, links: Iterable[tuple[int, int]] | None = None
    ) -> "InteractionGraph":
        """Synthetic graph: ``strength`` on every blockade link, zero elsewhere."""
        if links is None:
            links = build_interaction_graph(array, DEFAULT_PARAMS).blockaded
        links = frozenset(links)
        return cls(len(array), {k: strength for k in links}, links)


def build_interaction_graph(array: AtomArray, params: PhysicalParams) -> InteractionGraph:
    """All-pairs interaction strengths for ``array`` under ``params.scheme``.

    Blockade links are the pairs at the smallest separation in the array
    (within a relative 1e-6), which for the built-in layouts are exactly the
    nearest-neighbour wire-data pairs.
    """
    n = len(array)
    dist = {(i, j): array.distance(i, j) for i, j in combinations(range(n), 2)}
    for pair, r in dist.items():
        if r <= 0:
            a, b = (array.atoms[k].label for k in pair)
            raise ContractError(f"atoms {a} and {b} coincide")
    strengths = {
        (i, j): pair_strength(params.scheme, r, params, array.pair_kind(i, j))
        for (i, j), r in dist.items()
    }
    if dist:
        cutoff = min(dist.values()) * (1 + BLOCKADE_EPS)
        links = frozenset(p for p, r in dist.items() if r <= cutoff)
    else:
        links = frozenset()
    return InteractionGraph(n, strengths, links)


def _chain(labels, roles, d):
    atoms = tuple(Atom(lab, role, (k * d, 0.0)) for k, (lab, role) in enumerate(zip(labels, roles)))
    return atoms


def builtin_layout(name: str, d: float) -> AtomArray:
    """Named geometry with nearest wire-data spacing ``d`` (um).

    ``chain3``  A - W - B on a line.
    ``chain5``  A - W1 - B - W2 - C on a line.
    ``yshape``  wire W at the origin, data A, B, C at radius ``d`` and polar
    angles 90, 210 and 330 degrees (data-data separation ``sqrt(3) d``).
    """
    if not d > 0:
        raise ContractError(f"lattice constant must be positive, got {d}")
    key = name.lower().replace("_", "").replace("-", "")
    D, W = Role.DATA, Role.WIRE
    if key == "chain3":
        atoms = _chain(("A", "W", "B"), (D, W, D), d)
    elif key == "chain5":
        atoms = _chain(("A", "W1", "B", "W2", "C"), (D, W, D, W, D), d)
    elif key == "yshape":
        data = []
        for label, deg in (("A", 90.0), ("B", 210.0), ("C", 330.0)):
            t = math.radians(deg)
            data.append(Atom(label, D, (d * math.cos(t), d * math.sin(t))))
        atoms = (*data, Atom("W", W, (0.0, 0.0)))
    else:
        raise ContractError(f"unknown layout {name!r}; choose from {list(LAYOUTS)}")
    return AtomArray(atoms, name=LAYOUTS[key], spacing=float(d))


LAYOUTS = {"chain3": "chain3", "chain5": "chain5", "yshape": "yshape"}
