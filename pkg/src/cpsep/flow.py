"""Minimum vertex separators between vertex sets via max-flow.

Every vertex ``v`` outside ``A`` and ``B`` is split into ``v_in -> v_out``
with capacity ``w(v)`` (or 1 when counting cardinality). Terminal vertices
get uncapacitated split arcs and hang off a super-source or super-sink.
A single max-flow then yields both extreme minimum separators: the one
closest to ``A`` from residual reachability out of the source, and the one
closest to ``B`` from residual reachability into the sink.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidInput, NoSeparator
from .graph import Graph, check_set, remove_vertices, to_mask

if os.environ.get("CPSEP_PURE_PYTHON"):
    from ._flow_py import dinic as _dinic

    BACKEND = "python"
else:
    try:
        from ._flow_ext import dinic as _dinic

        BACKEND = "cython"
    except ImportError:  # extension not built
        from ._flow_py import dinic as _dinic

        BACKEND = "python"


@dataclass(frozen=True)
class MinSepResult:
    """Outcome of a minimum-separator query.

    When ``kappa_is_infinite`` is set no separator exists, ``separator`` is
    empty and ``size``/``weight`` are ``None``.
    """

    separator: tuple[int, ...]
    size: int | None
    weight: int | None
    kappa_is_infinite: bool

    @property
    def kappa(self) -> int | float:
        return float("inf") if self.kappa_is_infinite else self.size  # type: ignore[return-value]


INFINITE = MinSepResult((), None, None, True)


def _prepare(g: Graph, A: Iterable[int], B: Iterable[int]) -> tuple[int, int]:
    a = check_set(g, A)
    b = check_set(g, B)
    if not a or not b:
        raise InvalidInput("both terminal sets must be nonempty")
    return to_mask(a), to_mask(b)


def _adjacent_or_overlapping(g: Graph, a_mask: int, b_mask: int) -> bool:
    if a_mask & b_mask:
        return True
    f = a_mask
    while f:
        low = f & -f
        if g.nbr_mask(low.bit_length() - 1) & b_mask:
            return True
        f ^= low
    return False


def _solve(g: Graph, a_mask: int, b_mask: int, weighted: bool):
    """Run max-flow on the split network. Returns (flow, src_side, snk_side)."""
    n = g.n
    term = a_mask | b_mask
    finite = [
        (g.weights[v] if weighted else 1) if not term >> v & 1 else 0 for v in range(n)
    ]
    inf = sum(finite) + 1
    src, snk = 2 * n, 2 * n + 1
    tails: list[int] = []
    heads: list[int] = []
    caps: list[int] = []
    for v in range(n):
        tails.append(2 * v)
        heads.append(2 * v + 1)
        caps.append(inf if term >> v & 1 else finite[v])
        if a_mask >> v & 1:
            tails.append(src)
            heads.append(2 * v)
            caps.append(inf)
        if b_mask >> v & 1:
            tails.append(2 * v + 1)
            heads.append(snk)
            caps.append(inf)
        for u in g.neighbors(v):
            tails.append(2 * v + 1)
            heads.append(2 * u)
            caps.append(inf)
    return _dinic(2 * n + 2, tails, heads, caps, src, snk)


def _result(g: Graph, sep: list[int]) -> MinSepResult:
    sep_t = tuple(sep)
    return MinSepResult(sep_t, len(sep_t), g.weight_of(sep_t), False)


def closest_min_separator_to_source(
    g: Graph, A: Iterable[int], B: Iterable[int], weighted: bool = False
) -> MinSepResult:
    """The minimum A,B-separator whose A-side is inclusion-minimal.

    Raises NoSeparator when A and B touch.
    """
    a_mask, b_mask = _prepare(g, A, B)
    if _adjacent_or_overlapping(g, a_mask, b_mask):
        raise NoSeparator("terminal sets are adjacent or overlapping")
    _, src_side, _ = _solve(g, a_mask, b_mask, weighted)
    sep = [v for v in range(g.n) if src_side[2 * v] and not src_side[2 * v + 1]]
    return _result(g, sep)


def closest_min_separator_to_sink(
    g: Graph, A: Iterable[int], B: Iterable[int], weighted: bool = False
) -> MinSepResult:
    """The minimum A,B-separator whose B-side is inclusion-minimal."""
    a_mask, b_mask = _prepare(g, A, B)
    if _adjacent_or_overlapping(g, a_mask, b_mask):
        raise NoSeparator("terminal sets are adjacent or overlapping")
    _, _, snk_side = _solve(g, a_mask, b_mask, weighted)
    sep = [v for v in range(g.n) if snk_side[2 * v + 1] and not snk_side[2 * v]]
    return _result(g, sep)


def min_separator(
    g: Graph, A: Iterable[int], B: Iterable[int], weighted: bool = False
) -> MinSepResult:
    """A minimum A,B-separator (by cardinality, or by total weight).

    Returns the tagged infinite result when A and B intersect or are adjacent.
    The separator returned is the one closest to A.
    """
    a_mask, b_mask = _prepare(g, A, B)
    if _adjacent_or_overlapping(g, a_mask, b_mask):
        return INFINITE
    _, src_side, _ = _solve(g, a_mask, b_mask, weighted)
    sep = [v for v in range(g.n) if src_side[2 * v] and not src_side[2 * v + 1]]
    return _result(g, sep)


def solve_masks(
    g: Graph, a_mask: int, b_mask: int, weighted: bool = False
) -> tuple[int, int, int] | None:
    """One max-flow giving (value, closest-to-source mask, closest-to-sink mask).

    ``None`` when the terminal masks touch.
    """
    if _adjacent_or_overlapping(g, a_mask, b_mask):
        return None
    value, src_side, snk_side = _solve(g, a_mask, b_mask, weighted)
    near_src = near_snk = 0
    for v in range(g.n):
        if src_side[2 * v] and not src_side[2 * v + 1]:
            near_src |= 1 << v
        if snk_side[2 * v + 1] and not snk_side[2 * v]:
            near_snk |= 1 << v
    return value, near_src, near_snk


def kappa_masks(g: Graph, a_mask: int, b_mask: int) -> int | None:
    """Cardinality connectivity between two masks; ``None`` means infinite."""
    if _adjacent_or_overlapping(g, a_mask, b_mask):
        return None
    flow, _, _ = _solve(g, a_mask, b_mask, False)
    return flow


def kappa(g: Graph, A: Iterable[int], B: Iterable[int]) -> int | float:
    """Size of a minimum A,B-separator, or ``float('inf')`` if none exists."""
    a_mask, b_mask = _prepare(g, A, B)
    k = kappa_masks(g, a_mask, b_mask)
    return float("inf") if k is None else k


def in_min_sep_vertices(g: Graph, s: int, t: int, v: int) -> bool:
    """Whether ``v`` lies on some minimum s,t-separator.

    Decided by checking that deleting ``v`` lowers the connectivity by one.
    """
    check_set(g, (s, t, v))
    if v in (s, t):
        raise InvalidInput("v must differ from s and t")
    base = kappa(g, (s,), (t,))
    if base == float("inf"):
        raise NoSeparator("s and t are adjacent")
    red = remove_vertices(g, (v,))
    after = kappa(red.graph, (red.old_to_new[s],), (red.old_to_new[t],))
    return after == base - 1


def max_flow_value(g: Graph, A: Iterable[int], B: Iterable[int], weighted: bool = False) -> int:
    """Raw flow value; useful for benchmarks. Requires finite connectivity."""
    a_mask, b_mask = _prepare(g, A, B)
    if _adjacent_or_overlapping(g, a_mask, b_mask):
        raise NoSeparator("terminal sets are adjacent or overlapping")
    return _solve(g, a_mask, b_mask, weighted)[0]


__all__ = [
    "BACKEND",
    "MinSepResult",
    "closest_min_separator_to_sink",
    "closest_min_separator_to_source",
    "in_min_sep_vertices",
    "kappa",
    "kappa_masks",
    "max_flow_value",
    "min_separator",
    "solve_masks",
]
