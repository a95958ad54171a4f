"""Plain data records for multiway cut-uncut instances and solutions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import InvalidInput
from .graph import Graph, vset


@dataclass(frozen=True)
class NmwcuInstance:
    graph: Graph
    parts: tuple[tuple[int, ...], ...]
    k: int

    def __post_init__(self) -> None:
        parts = tuple(vset(p) for p in self.parts)
        seen: set[int] = set()
        for p in parts:
            if not p:
                raise InvalidInput("parts must be nonempty")
            for v in p:
                if not 0 <= v < self.graph.n:
                    raise InvalidInput(f"terminal {v} out of range")
            if seen & set(p):
                raise InvalidInput("parts must be pairwise disjoint")
            seen |= set(p)
        if not isinstance(self.k, int) or self.k < 0:
            raise InvalidInput("k must be a nonnegative integer")
        object.__setattr__(self, "parts", parts)

    @property
    def terminals(self) -> tuple[int, ...]:
        return vset(v for p in self.parts for v in p)


@dataclass(frozen=True)
class NmwcuSolution:
    feasible: bool
    cut: tuple[int, ...] = ()
    total_weight: int = 0
    pairs_processed: int = 0

    def to_json(self) -> dict[str, Any]:
        if not self.feasible:
            return {"feasible": False}
        return {
            "feasible": True,
            "cut": list(self.cut),
            "weight": self.total_weight,
            "pairs_processed": self.pairs_processed,
        }
