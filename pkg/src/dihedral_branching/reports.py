"""Report objects shared by the verifiers and the CLI, and their canonical serialization.

Every number is written as a decimal string so that JSON output carries no
floating point and re-serializing a parsed report is byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import __version__
from .partitions import Partition, format_partition

PASS, FAIL, NOT_APPLICABLE, INFO = "pass", "fail", "not-applicable", "info"


@dataclass
class Counterexample:
    shape: Partition
    irrep: str
    value: int
    expected: str
    table: dict[str, int] | None = None

    def to_dict(self) -> dict[str, Any]:
        out = {
            "shape": format_partition(self.shape),
            "irrep": self.irrep,
            "value": str(self.value),
            "expected": self.expected,
        }
        if self.table is not None:
            out["table"] = {k: str(v) for k, v in self.table.items()}
        return out


@dataclass
class Clause:
    name: str
    description: str
    status: str = PASS
    counterexamples: list[Counterexample] = field(default_factory=list)
    detail: str = ""

    def fail(self, example: Counterexample) -> None:
        self.status = FAIL
        self.counterexamples.append(example)

    def to_dict(self) -> dict[str, Any]:
        out = {"name": self.name, "description": self.description, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.counterexamples:
            out["counterexamples"] = [c.to_dict() for c in self.counterexamples]
        return out


@dataclass
class TheoremReport:
    name: str
    n: int
    case: str
    asserted: bool
    clauses: list[Clause] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, clause: Clause) -> Clause:
        self.clauses.append(clause)
        return clause

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.clauses)

    def failing(self) -> list[Clause]:
        return [c for c in self.clauses if c.status == FAIL]

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "n": str(self.n),
            "case": self.case,
            "asserted": "true" if self.asserted else "false",
            "passed": "true" if self.passed else "false",
            "clauses": [c.to_dict() for c in self.clauses],
            "notes": list(self.notes),
        }

    def render(self) -> str:
        head = f"{self.name} n={self.n} [{self.case}]"
        if not self.asserted:
            head += " (observation only: below the stated range)"
        lines = [head]
        for c in self.clauses:
            lines.append(f"  {c.status:<14} {c.name}: {c.description}")
            if c.detail:
                lines.append(f"                 {c.detail}")
            for ex in c.counterexamples[:10]:
                lines.append(
                    f"                 shape {format_partition(ex.shape)} {ex.irrep} = {ex.value}, "
                    f"expected {ex.expected}"
                )
            if len(c.counterexamples) > 10:
                lines.append(f"                 ... {len(c.counterexamples) - 10} more")
        lines.extend(f"  note: {note}" for note in self.notes)
        return "\n".join(lines)


def stringify(value: Any) -> Any:
    """Recursively turn numbers and partitions into canonical strings."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Partition):
        return format_partition(value)
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, float):
        raise TypeError("floating point values are not allowed in reports")
    if isinstance(value, dict):
        return {str(stringify(k)): stringify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [stringify(v) for v in value]
        if isinstance(value, (set, frozenset)):
            items.sort()
        return items
    if value is None:
        return None
    return value


def envelope(command: str, payload: Any, seed: int | None = None) -> dict[str, Any]:
    return {
        "header": {
            "tool": "dihedral-branching",
            "version": __version__,
            "command": command,
            "seed": None if seed is None else str(seed),
        },
        "result": stringify(payload),
    }


def dumps(document: Any) -> str:
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
