"""Schedule documents (JSON) and sweep tables (CSV)."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .atoms import AtomArray, PhysicalParams, builtin_layout
from .fidelity import SweepRow, SweepTable
from .pulse import Pulse, PulseSequence
from .qops import ContractError

__all__ = [
    "ScheduleDocument",
    "ScheduleError",
    "SIG_DIGITS",
    "read_schedule",
    "write_schedule",
    "sweep_csv",
    "write_sweep_csv",
    "read_sweep_csv",
]

SIG_DIGITS = 12


class ScheduleError(ContractError):
    """Malformed or inconsistent schedule document."""


def _round(x: float) -> float:
    return float(format(float(x), f".{SIG_DIGITS}g"))


@dataclass
class ScheduleDocument:
    """Serializable pulse schedule bound to a named layout.

    The on-disk form is JSON::

        {"layout": {"name": "chain3", "d_um": 7.0},
         "pulses": [{"targets": ["W"], "theta_rad": 3.14159265359, "phi_rad": 0.0}],
         "metadata": {"gate": "cp00", ...}}
    """

    layout_name: str
    d_um: float
    pulses: list[Pulse]
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not self.d_um > 0:
            raise ScheduleError(f"lattice constant must be positive, got {self.d_um}")
        array = self.array()
        for p in self.pulses:
            for t in p.targets:
                if t not in array.labels:
                    raise ScheduleError(
                        f"pulse target {t!r} not in layout {self.layout_name} {list(array.labels)}"
                    )

    def array(self) -> AtomArray:
        try:
            return builtin_layout(self.layout_name, self.d_um)
        except ContractError as exc:
            raise ScheduleError(str(exc)) from None

    def sequence(self) -> PulseSequence:
        return PulseSequence(tuple(self.pulses), name=str(self.metadata.get("gate", "")))

    @classmethod
    def from_sequence(
        cls, seq: PulseSequence, layout_name: str, d_um: float, metadata: dict | None = None
    ) -> "ScheduleDocument":
        return cls(layout_name, float(d_um), list(seq.pulses), dict(metadata or {}))

    def to_dict(self) -> dict:
        return {
            "layout": {"name": self.layout_name, "d_um": _round(self.d_um)},
            "pulses": [
                {
                    "targets": list(p.targets),
                    "theta_rad": _round(p.theta),
                    "phi_rad": _round(p.phi),
                }
                for p in self.pulses
            ],
            "metadata": self.metadata,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    @classmethod
    def from_dict(cls, doc: dict) -> "ScheduleDocument":
        try:
            layout = doc["layout"]
            pulses = [
                Pulse(tuple(p["targets"]), float(p["theta_rad"]), float(p["phi_rad"]))
                for p in doc["pulses"]
            ]
            return cls(str(layout["name"]), float(layout["d_um"]), pulses, dict(doc.get("metadata", {})))
        except ScheduleError:
            raise
        except (KeyError, TypeError, ValueError, ContractError) as exc:
            raise ScheduleError(f"malformed schedule document: {exc}") from None

    @classmethod
    def loads(cls, text: str) -> "ScheduleDocument":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ScheduleError(f"schedule is not valid JSON: {exc}") from None
        if not isinstance(doc, dict):
            raise ScheduleError("schedule document must be a JSON object")
        return cls.from_dict(doc)


def write_schedule(doc: ScheduleDocument, path: str | Path) -> None:
    Path(path).write_text(doc.dumps())


def read_schedule(path: str | Path) -> ScheduleDocument:
    return ScheduleDocument.loads(Path(path).read_text())


def _fmt(x: float) -> str:
    return format(x, ".10g")


def sweep_csv(table: SweepTable) -> str:
    """CSV text: ``#`` parameter lines, the header, one row per distance."""
    p = table.params
    buf = io.StringIO()
    buf.write(f"# scheme={table.scheme.value}\n")
    buf.write(f"# omega_radMHz={_fmt(p.omega)} (omega/2pi={_fmt(p.omega / (2 * math.pi))} MHz)\n")
    buf.write(f"# c6_rad_MHz_um6={_fmt(p.c6)} (c6/2pi={_fmt(p.c6 / (2 * math.pi) / 1e3)} GHz um^6)\n")
    buf.write(f"# c3_rad_MHz_um3={_fmt(p.c3)} (c3/2pi={_fmt(p.c3 / (2 * math.pi) / 1e3)} GHz um^3)\n")
    buf.write(f"# tau_us={_fmt(p.tau)} (default 141 us is derived from the quoted 4e-3 decay error)\n")
    buf.write("# gate=CP00(pi) layout=chain3 model=realistic\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SweepRow.FIELDS)
    for row in table.rows:
        writer.writerow([_fmt(v) for v in row.values()])
    return buf.getvalue()


def write_sweep_csv(table: SweepTable, path: str | Path) -> None:
    Path(path).write_text(sweep_csv(table))


def read_sweep_csv(path: str | Path) -> list[dict[str, float]]:
    lines = [ln for ln in Path(path).read_text().splitlines() if not ln.startswith("#")]
    reader = csv.DictReader(lines)
    return [{k: float(v) for k, v in row.items()} for row in reader]
