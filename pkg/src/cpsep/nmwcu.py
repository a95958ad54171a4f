"""Exact minimum-weight Node Multiway Cut-Uncut for bounded cut size.

An instance is a graph, a partition of a terminal set into parts and a
budget k. A solution is a vertex set S of at most k non-terminals such that
two terminals are connected in G - S exactly when they share a part.

The solver peels off the part A1 holding the smallest terminal. The boundary
S of A1's component in an optimal G - T is a CP separator for both A1 and
the rest. For some pair of close separators, one from each family, S is a
minimal s,t-separator of the pair graph that pins both sides. Every such
pair is tried and the rest of the instance is solved recursively.

Two strategies pick S inside a pair graph. ``"exact"`` (default) tries every
minimal s,t-separator of size at most k. ``"minsep"`` takes only a
minimum-weight one, closest to t; it is cheaper but can lose the optimum,
because a light A1 boundary may force a heavier cut further on.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from .constraints import ConstraintSpec
from .enumeration import EnumContext, EnumStats, gen_seps
from .errors import InvalidInput
from .flow import solve_masks
from .graph import (
    Graph,
    check_set,
    from_mask,
    induced_subgraph,
    join_vertex_to,
    nbr_mask_of_set,
    reach_mask,
    remove_vertices,
    to_mask,
)
from .instances import NmwcuInstance, NmwcuSolution
from .separators import minimal_st_separator_masks, minimalize_mask

STRATEGIES = ("exact", "minsep")

log = logging.getLogger(__name__)


def _closed(g: Graph, mask: int) -> int:
    return mask | nbr_mask_of_set(g, mask)


def close_separators(
    g: Graph,
    A: Iterable[int],
    B: Iterable[int],
    spec: ConstraintSpec,
    k: int,
    stats: EnumStats | None = None,
) -> list[tuple[int, ...]]:
    """CP A,B-separators of size at most k whose A-side is inclusion-minimal.

    B is collapsed onto t = min(B) by tying t to N[B]; the important
    separators of the result are enumerated and the close ones kept. Every
    close separator is important, and every important one that is not close
    is beaten by a close one, so filtering inside the important pool is exact.
    """
    A_t = check_set(g, A)
    B_t = check_set(g, B)
    if not A_t or not B_t:
        raise InvalidInput("A and B must be nonempty")
    a, b = to_mask(A_t), to_mask(B_t)
    if a & b:
        raise InvalidInput("A and B must be disjoint")
    if _closed(g, a) & b:
        log.debug("A touches B: no separator avoids the terminals")
        return []
    if not set(v for p in spec.parts for v in p) <= set(A_t):
        raise InvalidInput("constraint parts must lie inside A")
    if spec.Q and set(spec.B) != set(A_t):
        raise InvalidInput("Q must be required to reach A")
    t = B_t[0]
    h = join_vertex_to(g, t, _closed(g, b))
    ctx = EnumContext(h, A_t[0], t, A_t[1:], spec.Q, spec.parts, k)
    pool = [to_mask(S) for S in gen_seps(ctx, stats)]
    sides = {S: reach_mask(g, a, S) for S in pool}
    out = [
        S for S in pool if not any(sides[T] != sides[S] and sides[T] & sides[S] == sides[T] for T in pool)
    ]
    return sorted(from_mask(S) for S in out)


def build_pair_graph(
    g: Graph,
    s: int,
    t: int,
    S1: Iterable[int],
    So: Iterable[int],
    C1: Iterable[int],
    Co: Iterable[int],
) -> Graph | None:
    """g with s tied to N[C1] and t tied to N[Co].

    Returns ``None`` when the loop guard fails (So meets C1), signalling the
    caller to skip the pair.
    """
    c1 = to_mask(check_set(g, C1))
    co = to_mask(check_set(g, Co))
    s1 = to_mask(check_set(g, S1))
    so = to_mask(check_set(g, So))
    if s1 & c1 or so & co:
        raise InvalidInput("a separator may not meet its own side")
    if so & c1:
        return None
    return join_vertex_to(join_vertex_to(g, s, _closed(g, c1)), t, _closed(g, co))


def realizes_partition(g: Graph, parts: Sequence[int], cut: int = 0) -> bool:
    """Whether every part sits inside one component of G - cut, alone."""
    terms = 0
    for p in parts:
        terms |= p
    if terms & cut:
        return False
    for p in parts:
        low = p & -p
        comp = reach_mask(g, low, cut)
        if comp & terms != p:
            return False
    return True


@dataclass
class _Run:
    strategy: str
    pairs: int = 0


def _pair_candidates(h: Graph, s: int, t: int, c1: int, co: int, k: int, strategy: str) -> list[int]:
    if strategy == "exact":
        return [m for m in minimal_st_separator_masks(h, s, t) if m.bit_count() <= k]
    sol = solve_masks(h, c1, co, weighted=True)
    if sol is None:
        return []
    return [minimalize_mask(h, c1, co, sol[2])]


def _solve(g: Graph, parts: list[int], k: int, run: _Run) -> int | None:
    m = len(parts)
    for i in range(m):
        ci = _closed(g, parts[i])
        for j in range(i + 1, m):
            if ci & parts[j]:
                return None
    if m <= 1:
        return 0
    nbrs = [nbr_mask_of_set(g, p) for p in parts]
    forced = 0
    for i in range(m):
        for j in range(i + 1, m):
            forced |= nbrs[i] & nbrs[j]
    red = remove_vertices(g, from_mask(forced))
    k -= forced.bit_count()
    if k < 0:
        return None
    old_to_new, new_to_old = red.old_to_new, red.new_to_old
    gr = red.graph
    rparts = [to_mask(old_to_new[v] for v in from_mask(p)) for p in parts]
    if k == 0:
        return forced if realizes_partition(gr, rparts) else None

    rparts.sort(key=lambda p: p & -p)
    a1, rest = rparts[0], rparts[1:]
    ao = 0
    for p in rest:
        ao |= p
    s = (a1 & -a1).bit_length() - 1
    t = (ao & -ao).bit_length() - 1
    A1, Ao = from_mask(a1), from_mask(ao)
    fam1 = close_separators(gr, A1, Ao, ConstraintSpec(A1, A1, (A1,)), k)
    famo = close_separators(gr, Ao, A1, ConstraintSpec(Ao, Ao, tuple(from_mask(p) for p in rest)), k)

    best: int | None = None
    best_w = 0
    for S1 in fam1:
        s1 = to_mask(S1)
        c1 = reach_mask(gr, a1, s1)
        for So in famo:
            so = to_mask(So)
            if so & c1:
                continue
            run.pairs += 1
            co = reach_mask(gr, ao, so)
            h = join_vertex_to(join_vertex_to(gr, s, _closed(gr, c1)), t, _closed(gr, co))
            for tp in _pair_candidates(h, s, t, c1, co, k, run.strategy):
                size = tp.bit_count()
                if size > k:
                    continue
                region = reach_mask(gr, ao, tp)
                sub = induced_subgraph(gr, from_mask(region))
                sub_parts = [to_mask(sub.old_to_new[v] for v in from_mask(p)) for p in rest]
                below = _solve(sub.graph, sub_parts, k - size, run)
                if below is None:
                    continue
                cand = tp | to_mask(sub.new_to_old[v] for v in from_mask(below))
                if cand.bit_count() > k:
                    continue
                w = gr.weight_of(from_mask(cand))
                if best is None or w < best_w:
                    best, best_w = cand, w
    if best is None:
        return None
    return forced | to_mask(new_to_old[v] for v in from_mask(best))


def solve(instance: NmwcuInstance, strategy: str = "exact") -> NmwcuSolution:
    """A minimum-weight cut of at most k vertices, or the infeasible marker.

    ``pairs_processed`` counts close-separator pairs that pass the loop guard,
    over the whole recursion.
    """
    if strategy not in STRATEGIES:
        raise InvalidInput(f"unknown strategy {strategy!r}")
    run = _Run(strategy)
    parts = [to_mask(p) for p in instance.parts]
    cut = _solve(instance.graph, parts, instance.k, run)
    if cut is None:
        return NmwcuSolution(False, pairs_processed=run.pairs)
    members = from_mask(cut)
    return NmwcuSolution(True, members, instance.graph.weight_of(members), run.pairs)


def is_solution(instance: NmwcuInstance, cut: Iterable[int]) -> bool:
    """Direct check of the partition semantics and the size budget."""
    g = instance.graph
    c = to_mask(check_set(g, cut))
    return c.bit_count() <= instance.k and realizes_partition(g, [to_mask(p) for p in instance.parts], c)


__all__ = [
    "STRATEGIES",
    "build_pair_graph",
    "close_separators",
    "is_solution",
    "realizes_partition",
    "solve",
]
