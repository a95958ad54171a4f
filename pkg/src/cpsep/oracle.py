"""Brute-force ground truth for small graphs.

Nothing here calls the production predicates. Reachability uses an
explicit stack over neighbour lists and Python sets, subsets are walked in
colexicographic order by size, and every definition is applied literally.
Only the Graph container and plain data records are shared.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ResourceLimit
from .graph import Graph
from .instances import NmwcuInstance, NmwcuSolution


@dataclass(frozen=True)
class OracleBudget:
    max_n: int = 12
    max_k: int = 4
    subset_cap: int = 2**20


DEFAULT_BUDGET = OracleBudget()


def _reach(g: Graph, start: Iterable[int], removed: set[int]) -> set[int]:
    seen = {v for v in start if v not in removed}
    stack = list(seen)
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u not in removed and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def _separates(g: Graph, A: set[int], B: set[int], S: set[int]) -> bool:
    if S & (A | B):
        return False
    return not (_reach(g, A, S) & B)


def colex_subsets(universe: Sequence[int], max_size: int, budget: OracleBudget = DEFAULT_BUDGET):
    """Yield subsets of ``universe`` by size, colex order within a size."""
    items = sorted(universe)
    produced = 0
    for r in range(0, min(max_size, len(items)) + 1):
        for combo in sorted(combinations(items, r), key=lambda c: c[::-1]):
            produced += 1
            if produced > budget.subset_cap:
                raise ResourceLimit("oracle subset cap exceeded")
            yield combo


def _check_budget(g: Graph, k: int | None, budget: OracleBudget) -> None:
    if g.n > budget.max_n:
        raise ResourceLimit(f"oracle limited to n <= {budget.max_n}")
    if k is not None and k > budget.max_k and k < g.n:
        raise ResourceLimit(f"oracle limited to k <= {budget.max_k}")


def all_separators(
    g: Graph,
    A: Iterable[int],
    B: Iterable[int],
    max_size: int,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> list[tuple[int, ...]]:
    """Every S outside A and B with |S| <= max_size that separates A from B."""
    if g.n > budget.max_n:
        raise ResourceLimit(f"oracle limited to n <= {budget.max_n}")
    A_s, B_s = set(A), set(B)
    universe = [v for v in range(g.n) if v not in A_s and v not in B_s]
    return [S for S in colex_subsets(universe, max_size, budget) if _separates(g, A_s, B_s, set(S))]


def is_minimal_by_removal(g: Graph, A: Iterable[int], B: Iterable[int], S: Iterable[int]) -> bool:
    A_s, B_s, S_s = set(A), set(B), set(S)
    if not _separates(g, A_s, B_s, S_s):
        return False
    return all(not _separates(g, A_s, B_s, S_s - {x}) for x in S_s)


def all_minimal_separators(g, A, B, max_size, budget=DEFAULT_BUDGET):
    return [S for S in all_separators(g, A, B, max_size, budget) if is_minimal_by_removal(g, A, B, S)]


def minimum_separators(g: Graph, A: Iterable[int], B: Iterable[int], budget=DEFAULT_BUDGET):
    """All minimum-cardinality A,B-separators, or ``None`` if none exists."""
    A_s, B_s = set(A), set(B)
    if A_s & B_s or any(u in B_s for a in A_s for u in g.neighbors(a)):
        return None
    universe = [v for v in range(g.n) if v not in A_s and v not in B_s]
    best = None
    out = []
    for S in colex_subsets(universe, len(universe), budget):
        if best is not None and len(S) > best:
            break
        if _separates(g, A_s, B_s, set(S)):
            best = len(S)
            out.append(S)
    return out


def min_separator_size(g: Graph, A, B, budget=DEFAULT_BUDGET) -> int | None:
    seps = minimum_separators(g, A, B, budget)
    return None if seps is None else len(seps[0])


def min_weight_separator(g: Graph, A, B, budget=DEFAULT_BUDGET) -> int | None:
    A_s, B_s = set(A), set(B)
    if A_s & B_s or any(u in B_s for a in A_s for u in g.neighbors(a)):
        return None
    universe = [v for v in range(g.n) if v not in A_s and v not in B_s]
    best = None
    for S in colex_subsets(universe, len(universe), budget):
        if _separates(g, A_s, B_s, set(S)):
            w = sum(g.weights[v] for v in S)
            if best is None or w < best:
                best = w
    return best


def side(g: Graph, A: Iterable[int], S: Iterable[int]) -> frozenset[int]:
    return frozenset(_reach(g, A, set(S)))


def max_disjoint_paths(g: Graph, s: int, t: int) -> int | None:
    """Largest number of internally vertex-disjoint s,t-paths (exhaustive search).

    Each path leaves s through a distinct neighbour, so the search branches on
    s's neighbours in order: skip it, or route one simple path through it.
    ``None`` when s and t are adjacent.
    """
    if t in g.neighbors(s):
        return None
    first_hops = [u for u in g.neighbors(s) if u != t]
    best = 0

    def paths_from(u: int, used: set[int]):
        # simple paths u -> ... -> t avoiding ``used``; yields interior vertex sets
        stack = [(u, (u,))]
        while stack:
            v, path = stack.pop()
            for x in g.neighbors(v):
                if x == t:
                    yield set(path)
                elif x != s and x not in used and x not in path:
                    stack.append((x, path + (x,)))

    def search(i: int, used: set[int], count: int) -> None:
        nonlocal best
        best = max(best, count)
        if i == len(first_hops) or count + (len(first_hops) - i) <= best:
            return
        u = first_hops[i]
        if u not in used:
            tried: set[frozenset[int]] = set()
            for interior in paths_from(u, used):
                key = frozenset(interior)
                if key in tried:
                    continue
                tried.add(key)
                search(i + 1, used | interior, count + 1)
                if best == len(first_hops):
                    return
        search(i + 1, used, count)

    search(0, set(), 0)
    return best


def min_sep_vertices(g: Graph, s: int, t: int) -> set[int]:
    """Vertices lying on at least one minimum s,t-separator."""
    seps = minimum_separators(g, [s], [t])
    return set() if seps is None else {v for S in seps for v in S}


# ------------------------------------------------------------ constraints

def satisfies(g: Graph, parts, Q, B, S: Iterable[int]) -> bool:
    """Literal reading of the constraint: parts intact and connected, Q reaches B."""
    S_s = set(S)
    for p in parts:
        p = list(p)
        if any(v in S_s for v in p):
            return False
        if len(p) >= 2 and not set(p) <= _reach(g, [p[0]], S_s):
            return False
    if Q:
        if any(q in S_s for q in Q):
            return False
        alive_b = [b for b in B if b not in S_s]
        reach = _reach(g, alive_b, S_s)
        if any(q not in reach for q in Q):
            return False
    return True


def _spec_fields(spec):
    return tuple(spec.parts), tuple(spec.Q), tuple(spec.B)


def all_cp_minimal(g: Graph, s: int, A: Iterable[int], t: int, spec, k: int, budget=DEFAULT_BUDGET):
    """Minimal sA,t-separators of size <= k whose removal satisfies ``spec``."""
    _check_budget(g, k, budget)
    src = {s} | set(A)
    parts, Q, B = _spec_fields(spec)
    return [
        S
        for S in all_separators(g, src, {t}, k, budget)
        if is_minimal_by_removal(g, src, {t}, S) and satisfies(g, parts, Q, B, S)
    ]


def _important_filter(g: Graph, src: set[int], pool: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    sides = {S: side(g, src, S) for S in pool}
    out = []
    for S in pool:
        if not any(len(T) <= len(S) and sides[T] < sides[S] for T in pool):
            out.append(S)
    return out


def all_cp_important(g: Graph, s: int, A: Iterable[int], t: int, spec, k: int, budget=DEFAULT_BUDGET):
    """Important minimal CP sA,t-separators of size <= k, by definition."""
    pool = all_cp_minimal(g, s, A, t, spec, k, budget)
    return sorted(_important_filter(g, {s} | set(A), pool))


def min_cp_size(g: Graph, s: int, A, t: int, spec, budget=DEFAULT_BUDGET) -> int | None:
    """Smallest size of a minimal CP sA,t-separator, or ``None``."""
    pool = all_cp_minimal(g, s, A, t, spec, g.n, budget)
    return min((len(S) for S in pool), default=None)


def all_min_cp_important(g: Graph, s: int, A, t: int, spec, budget=DEFAULT_BUDGET):
    """Important members among the minimum-size minimal CP separators."""
    pool = all_cp_minimal(g, s, A, t, spec, g.n, budget)
    if not pool:
        return []
    f = min(len(S) for S in pool)
    smallest = [S for S in pool if len(S) == f]
    return sorted(_important_filter(g, {s} | set(A), smallest))


def all_cp_close(g: Graph, A, B, spec, k: int, budget=DEFAULT_BUDGET):
    """Minimal CP A,B-separators of size <= k with an inclusion-minimal A-side."""
    A_s, B_s = set(A), set(B)
    parts, Q, Bc = _spec_fields(spec)
    pool = [
        S
        for S in all_separators(g, A_s, B_s, k, budget)
        if is_minimal_by_removal(g, A_s, B_s, S) and satisfies(g, parts, Q, Bc, S)
    ]
    sides = {S: side(g, A_s, S) for S in pool}
    return sorted(S for S in pool if not any(sides[T] < sides[S] for T in pool))


# ------------------------------------------------------------ multiway cut-uncut

def realizes_partition(g: Graph, parts: Sequence[Sequence[int]], S: Iterable[int]) -> bool:
    S_s = set(S)
    label = {}
    for i, p in enumerate(parts):
        for v in p:
            if v in S_s:
                return False
            label[v] = i
    for i, p in enumerate(parts):
        reach = _reach(g, [p[0]], S_s)
        for v, j in label.items():
            if (v in reach) != (j == i):
                return False
    return True


def brute_nmwcu(instance: NmwcuInstance, budget: OracleBudget = DEFAULT_BUDGET) -> NmwcuSolution:
    """Lightest S outside the terminals with |S| <= k realising the partition."""
    g = instance.graph
    if g.n > budget.max_n:
        raise ResourceLimit(f"oracle limited to n <= {budget.max_n}")
    terminals = {v for p in instance.parts for v in p}
    universe = [v for v in range(g.n) if v not in terminals]
    best = None
    for S in colex_subsets(universe, instance.k, budget):
        if realizes_partition(g, instance.parts, S):
            w = sum(g.weights[v] for v in S)
            if best is None or w < best[0]:
                best = (w, S)
    if best is None:
        return NmwcuSolution(False)
    return NmwcuSolution(True, tuple(sorted(best[1])), best[0], 0)
