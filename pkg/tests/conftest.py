"""Shared graph builders and hypothesis strategies."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from cpsep.enumeration import EnumContext
from cpsep.graph import Graph, reach_mask
from cpsep.instances import NmwcuInstance
from cpsep.oracle import brute_nmwcu


def path(n: int, weights=None) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)], weights)


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(leaves: int) -> Graph:
    """Center 0, leaves 1..leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_graph(rng: random.Random, n: int, p: float, weights: bool = False) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    w = [rng.randint(1, 5) for _ in range(n)] if weights else None
    return Graph(n, edges, w)


def is_connected(g: Graph) -> bool:
    return g.n == 0 or reach_mask(g, 1) == g.all_mask


def random_connected_graph(rng: random.Random, n: int, p: float, weights: bool = False) -> Graph:
    """Rejection sampling on G(n, p); falls back to adding a random spanning tree."""
    for _ in range(50):
        g = random_graph(rng, n, p, weights)
        if is_connected(g):
            return g
    order = list(range(n))
    rng.shuffle(order)
    tree = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    edges = set(map(tuple, map(sorted, tree))) | set(g.edges())
    return Graph(n, sorted(edges), g.weights)


@st.composite
def graphs(draw, min_n: int = 2, max_n: int = 9, weighted: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, chosen) if keep]
    w = draw(st.lists(st.integers(0, 5), min_size=n, max_size=n)) if weighted else None
    return Graph(n, edges, w)


@st.composite
def graph_with_pair(draw, min_n: int = 3, max_n: int = 9):
    """A graph plus two distinct vertices s, t."""
    g = draw(graphs(min_n=min_n, max_n=max_n))
    s, t = draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    return g, s, t


def random_nmwcu_instance(rng: random.Random, weighted: bool = False, n_lo: int = 6, n_hi: int = 10, k_hi: int = 3):
    """G(n, p) with 2-3 parts of 1-2 terminals; returns (instance, brute-force answer).

    Instances with adjacent parts or an empty optimum are redrawn, and so
    are four in five infeasible ones, so most samples need a real cut.
    """
    while True:
        n = rng.randint(n_lo, n_hi)
        g = random_graph(rng, n, rng.choice([0.25, 0.35, 0.45]), weights=weighted)
        verts = list(range(n))
        rng.shuffle(verts)
        parts, i = [], 0
        for _ in range(rng.randint(2, 3)):
            size = rng.randint(1, 2)
            parts.append(tuple(verts[i : i + size]))
            i += size
        terms = {v: j for j, p in enumerate(parts) for v in p}
        if any(terms.get(u, j) != j for v, j in terms.items() for u in g.neighbors(v)):
            continue
        inst = NmwcuInstance(g, tuple(parts), rng.randint(1, k_hi))
        want = brute_nmwcu(inst)
        if want.feasible and not want.cut:
            continue
        if not want.feasible and rng.random() < 0.8:
            continue
        return inst, want


def random_enum_instance(rng: random.Random, n_lo: int = 4, n_hi: int = 9, k_hi: int = 4, p: float | None = None):
    """Random G(n, p) with s, t, up to 3 A vertices, up to 2 Q vertices and random parts of sA."""
    n = rng.randint(n_lo, n_hi)
    g = random_graph(rng, n, p if p is not None else rng.uniform(0.2, 0.55))
    s, t = rng.sample(range(n), 2)
    rest = [v for v in range(n) if v not in (s, t)]
    rng.shuffle(rest)
    A = rest[: rng.randint(0, min(3, len(rest)))]
    Q = rest[len(A) : len(A) + rng.randint(0, 2)]
    src = [s] + A
    rng.shuffle(src)
    parts, i = [], 0
    while i < len(src) and rng.random() < 0.7:
        size = rng.randint(1, 3)
        parts.append(tuple(src[i : i + size]))
        i += size
    # edges from t to sAQ would make most instances trivially empty
    near = {s, *A, *Q}
    g = Graph(n, [e for e in g.edges() if not (t in e and near & set(e))])
    return EnumContext(g, s, t, tuple(A), tuple(Q), tuple(parts), rng.randint(0, k_hi))
