"""Immutable vertex-weighted simple undirected graphs.

Vertices are dense integers ``0..n-1``. Vertex sets are passed around as
sorted tuples of ints; internally most set algebra runs on Python int
bitmasks, which keeps component queries cheap at the sizes this package
targets.
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import InvalidInput

VertexSet = tuple  # sorted tuple of unique vertex ids


def vset(items: Iterable[int]) -> tuple[int, ...]:
    """Canonical form of a vertex collection: sorted, deduplicated tuple."""
    return tuple(sorted(set(items)))


def to_mask(items: Iterable[int]) -> int:
    m = 0
    for v in items:
        m |= 1 << v
    return m


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class Graph:
    """Simple undirected graph with nonnegative integer vertex weights.

    Instances never change after construction. Every transform returns a
    new graph.
    """

    __slots__ = ("n", "_adj", "_mask", "weights", "_m")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        weights: Sequence[int] | None = None,
    ) -> None:
        if not isinstance(n, int) or n < 0:
            raise InvalidInput(f"vertex count must be a nonnegative int, got {n!r}")
        masks = [0] * n
        for e in edges:
            u, v = e
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise InvalidInput(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        if weights is None:
            w = (1,) * n
        else:
            w = tuple(weights)
            if len(w) != n:
                raise InvalidInput(f"expected {n} weights, got {len(w)}")
            for x in w:
                if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                    raise InvalidInput(f"weights must be nonnegative ints, got {x!r}")
        self._init(n, masks, w)

    def _init(self, n: int, masks: list[int], weights: tuple[int, ...]) -> None:
        self.n = n
        self._mask = tuple(masks)
        self._adj = tuple(from_mask(m) for m in masks)
        self.weights = weights
        self._m = sum(m.bit_count() for m in masks) // 2

    @classmethod
    def _from_masks(cls, masks: list[int], weights: tuple[int, ...]) -> "Graph":
        g = cls.__new__(cls)
        g._init(len(masks), masks, weights)
        return g

    @property
    def m(self) -> int:
        return self._m

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def nbr_mask(self, v: int) -> int:
        return self._mask[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._mask[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def weight_of(self, S: Iterable[int]) -> int:
        return sum(self.weights[v] for v in S)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._mask == other._mask and self.weights == other.weights

    def __hash__(self) -> int:
        return hash((self._mask, self.weights))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_vertex(n: int, v: object) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
        raise InvalidInput(f"vertex id {v!r} out of range 0..{n - 1}")


def check_set(g: Graph, S: Iterable[int]) -> tuple[int, ...]:
    """Validate ids against ``g`` and return the canonical tuple."""
    out = vset(S)
    for v in out:
        _check_vertex(g.n, v)
    return out


# ---------------------------------------------------------------- bitmask core

def reach_mask(g: Graph, start: int, blocked: int = 0) -> int:
    """Vertices reachable from the ``start`` mask in ``g`` minus ``blocked``."""
    seen = start & ~blocked
    frontier = seen
    adj = g._mask
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= ~(seen | blocked)
        seen |= nxt
        frontier = nxt
    return seen


def nbr_mask_of_set(g: Graph, mask: int) -> int:
    out = 0
    adj = g._mask
    f = mask
    while f:
        low = f & -f
        out |= adj[low.bit_length() - 1]
        f ^= low
    return out & ~mask


def component_masks(g: Graph, blocked: int = 0) -> list[int]:
    """Components of ``g`` minus ``blocked``, ordered by smallest member."""
    rest = g.all_mask & ~blocked
    comps = []
    while rest:
        low = rest & -rest
        c = reach_mask(g, low, blocked)
        comps.append(c)
        rest &= ~c
    return comps


# ------------------------------------------------------------------ operations

def neighbors_of_set(g: Graph, S: Iterable[int]) -> tuple[int, ...]:
    """Open neighbourhood N(S): vertices outside S adjacent to some member."""
    return from_mask(nbr_mask_of_set(g, to_mask(check_set(g, S))))


def closed_neighbors_of_set(g: Graph, S: Iterable[int]) -> tuple[int, ...]:
    m = to_mask(check_set(g, S))
    return from_mask(m | nbr_mask_of_set(g, m))


def components_after_removal(g: Graph, S: Iterable[int]) -> list[tuple[int, ...]]:
    """Connected components of g - S, ordered by smallest member."""
    blocked = to_mask(check_set(g, S))
    return [from_mask(c) for c in component_masks(g, blocked)]


def component_of_set(g: Graph, S: Iterable[int], A: Iterable[int]) -> tuple[int, ...]:
    """Union of the components of g - S that meet A."""
    s_mask = to_mask(check_set(g, S))
    a_mask = to_mask(check_set(g, A))
    if s_mask & a_mask:
        raise InvalidInput("A and S must be disjoint")
    return from_mask(reach_mask(g, a_mask, s_mask))


def add_edges(g: Graph, pairs: Iterable[tuple[int, int]]) -> Graph:
    """New graph with the given edges added. Existing edges are ignored."""
    masks = list(g._mask)
    for u, v in pairs:
        _check_vertex(g.n, u)
        _check_vertex(g.n, v)
        if u == v:
            raise InvalidInput(f"self-loop at vertex {u}")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph._from_masks(masks, g.weights)


def join_vertex_to(g: Graph, hub: int, targets_mask: int) -> Graph:
    """Add edges from ``hub`` to every vertex in ``targets_mask`` (hub excluded)."""
    targets_mask &= ~(1 << hub)
    masks = list(g._mask)
    masks[hub] |= targets_mask
    bit = 1 << hub
    f = targets_mask
    while f:
        low = f & -f
        masks[low.bit_length() - 1] |= bit
        f ^= low
    return Graph._from_masks(masks, g.weights)


class Reduced(NamedTuple):
    graph: Graph
    old_to_new: Mapping[int, int]
    new_to_old: tuple[int, ...]


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Reduced:
    keep_t = check_set(g, keep)
    old_to_new = {v: i for i, v in enumerate(keep_t)}
    masks = []
    for v in keep_t:
        m = 0
        for u in g._adj[v]:
            j = old_to_new.get(u)
            if j is not None:
                m |= 1 << j
        masks.append(m)
    weights = tuple(g.weights[v] for v in keep_t)
    return Reduced(Graph._from_masks(masks, weights), old_to_new, keep_t)


def remove_vertices(g: Graph, S: Iterable[int]) -> Reduced:
    """Induced subgraph on V - S, with old->new and new->old id tables."""
    drop = to_mask(check_set(g, S))
    return induced_subgraph(g, from_mask(g.all_mask & ~drop))


def contract_connected_set(g: Graph, A: Iterable[int], into: int) -> Reduced:
    """Replace the connected set A by the single vertex ``into``.

    ``into`` keeps its weight and becomes adjacent to N(A). Because ids stay
    dense, the other members of A disappear and later ids shift; the returned
    tables translate between the two numberings.
    """
    a = check_set(g, A)
    if into not in a:
        raise InvalidInput("contraction target must belong to A")
    a_mask = to_mask(a)
    if reach_mask(g, 1 << into, g.all_mask & ~a_mask) != a_mask:
        raise InvalidInput("A must induce a connected subgraph")
    outside = nbr_mask_of_set(g, a_mask)
    joined = join_vertex_to(g, into, outside)
    # drop edges inside A first so the surviving vertex carries only N(A)
    return remove_vertices(joined, [v for v in a if v != into])


# ------------------------------------------------------------------ text format

def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` / edge-lines / optional ``weights`` text format."""
    tokens_by_line = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            tokens_by_line.append(line.split())
    if not tokens_by_line:
        raise InvalidInput("empty graph file")
    header = tokens_by_line[0]
    if len(header) != 2:
        raise InvalidInput("first line must be 'n m'")
    n, m = (_int_token(x) for x in header)
    if n < 0 or m < 0:
        raise InvalidInput("n and m must be nonnegative")
    if len(tokens_by_line) < 1 + m:
        raise InvalidInput(f"expected {m} edge lines")
    edges = []
    for toks in tokens_by_line[1 : 1 + m]:
        if len(toks) != 2:
            raise InvalidInput(f"bad edge line: {' '.join(toks)!r}")
        edges.append((_int_token(toks[0]), _int_token(toks[1])))
    rest = tokens_by_line[1 + m :]
    weights = None
    if rest:
        if rest[0][0] != "weights":
            raise InvalidInput(f"unexpected content after edges: {' '.join(rest[0])!r}")
        flat = rest[0][1:] + [t for toks in rest[1:] for t in toks]
        weights = [_int_token(x) for x in flat]
    return Graph(n, edges, weights)


def _int_token(tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise InvalidInput(f"expected an integer, got {tok!r}") from None


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    if any(w != 1 for w in g.weights):
        lines.append("weights")
        lines.append(" ".join(str(w) for w in g.weights))
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())
