"""Monotone connectivity constraints over a graph with vertices deleted.

A constraint is the tuple ``(A, B, parts, Q)``. A deletion set ``S``
satisfies it when every part stays inside a single component of ``G - S``
and every vertex of ``Q`` still reaches some surviving vertex of ``B``.
Deleting a part member or a ``Q`` vertex violates the constraint.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

from .errors import InvalidInput
from .graph import Graph, check_set, reach_mask, to_mask, vset


@dataclass(frozen=True)
class ConstraintSpec:
    A: tuple[int, ...]
    B: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...] = ()
    Q: tuple[int, ...] = ()
    _part_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        parts = tuple(vset(p) for p in self.parts)
        A = vset(self.A)
        seen: set[int] = set()
        for p in parts:
            if seen & set(p):
                raise InvalidInput("constraint parts must be pairwise disjoint")
            seen |= set(p)
        if not seen <= set(A):
            raise InvalidInput("every part must be a subset of A")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", vset(self.B))
        object.__setattr__(self, "Q", vset(self.Q))
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "_part_masks", tuple(to_mask(p) for p in parts))

    @classmethod
    def build(
        cls,
        parts: Iterable[Iterable[int]] = (),
        Q: Iterable[int] = (),
        B: Iterable[int] = (),
        A: Iterable[int] | None = None,
    ) -> "ConstraintSpec":
        parts_t = tuple(vset(p) for p in parts)
        if A is None:
            A = [v for p in parts_t for v in p]
        return cls(vset(A), vset(B), parts_t, vset(Q))

    @classmethod
    def from_json(cls, data: str | Mapping[str, Any]) -> "ConstraintSpec":
        """Build from ``{"parts": [[..]], "Q": [..], "B": [..], "A": [..]?}``."""
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise InvalidInput(f"constraint JSON: {exc}") from None
        if not isinstance(data, Mapping):
            raise InvalidInput("constraint must be a JSON object")
        try:
            return cls.build(
                parts=[_int_list(p) for p in data.get("parts", [])],
                Q=_int_list(data.get("Q", [])),
                B=_int_list(data.get("B", [])),
                A=_int_list(data["A"]) if "A" in data else None,
            )
        except TypeError:
            raise InvalidInput("constraint fields must be integer lists") from None

    def to_json(self) -> dict[str, Any]:
        return {"A": list(self.A), "B": list(self.B), "parts": [list(p) for p in self.parts], "Q": list(self.Q)}

    def check_against(self, g: Graph) -> None:
        check_set(g, self.A)
        check_set(g, self.B)
        check_set(g, self.Q)

    def is_trivial(self) -> bool:
        return not self.Q and all(len(p) <= 1 for p in self.parts)


def _int_list(x: Any) -> list[int]:
    if not isinstance(x, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in x):
        raise InvalidInput(f"expected a list of integers, got {x!r}")
    return x


def models_mask(g: Graph, spec: ConstraintSpec, s_mask: int) -> bool:
    """Mask-level evaluation used by the enumeration code."""
    for pm in spec._part_masks:
        if pm & s_mask:
            return False
        if pm & (pm - 1):  # at least two members
            low = pm & -pm
            if reach_mask(g, low, s_mask) & pm != pm:
                return False
    if spec.Q:
        q_mask = to_mask(spec.Q)
        if q_mask & s_mask:
            return False
        b_alive = to_mask(spec.B) & ~s_mask
        if not b_alive:
            return False
        if reach_mask(g, b_alive, s_mask) & q_mask != q_mask:
            return False
    return True


def evaluate(g: Graph, spec: ConstraintSpec, S: Iterable[int]) -> bool:
    """True iff G - S satisfies every part and every Q requirement of ``spec``."""
    return models_mask(g, spec, to_mask(check_set(g, S)))


models = evaluate


def separates_mask(g: Graph, side_a: int, side_b: int, s_mask: int) -> bool:
    return not reach_mask(g, side_a, s_mask) & side_b


def is_cp_separator(
    g: Graph,
    spec: ConstraintSpec,
    S: Iterable[int],
    side_A: Iterable[int],
    side_B: Iterable[int],
) -> bool:
    """S separates side_A from side_B and G - S satisfies ``spec``."""
    s_mask = to_mask(check_set(g, S))
    a_mask = to_mask(check_set(g, side_A))
    b_mask = to_mask(check_set(g, side_B))
    if (a_mask | b_mask) & s_mask:
        return False
    return separates_mask(g, a_mask, b_mask, s_mask) and models_mask(g, spec, s_mask)
