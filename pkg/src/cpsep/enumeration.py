"""Enumeration of connectivity-preserving important separators.

``gen_seps`` lists every minimal sA,t-separator of size at most k whose
removal keeps the constraint true and which is important: no CP minimal
separator of no larger size has a strictly smaller sA-side. The recursion
branches on the minimum s,t-separator closest to t and on the minimum
sAQ,t-separator closest to sAQ, driven by the potential

    lambda = 3k - (kappa_{s,t} + kappa_{sAQ,t}),

which strictly drops from every node to each of its children.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .constraints import ConstraintSpec, models_mask
from .errors import ContractViolation, InvalidInput
from .flow import kappa_masks, solve_masks
from .graph import (
    Graph,
    check_set,
    from_mask,
    join_vertex_to,
    nbr_mask_of_set,
    reach_mask,
    remove_vertices,
    to_mask,
    vset,
)
from .separators import enumerate_minimal_hitting_sets, is_minimal_separator_mask


@dataclass(frozen=True)
class EnumContext:
    """Input of the enumeration: graph, terminals, constraint data and budget.

    ``parts`` are subsets of ``{s} | A``; ``Z`` holds already-deleted
    separator vertices in the caller's ids.
    """

    graph: Graph
    s: int
    t: int
    A: tuple[int, ...] = ()
    Q: tuple[int, ...] = ()
    parts: tuple[tuple[int, ...], ...] = ()
    k: int = 0
    Z: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        g = self.graph
        check_set(g, (self.s, self.t))
        if self.s == self.t:
            raise InvalidInput("s and t must differ")
        A = check_set(g, self.A)
        Q = check_set(g, self.Q)
        parts = tuple(check_set(g, p) for p in self.parts)
        if {self.s, self.t} & (set(A) | set(Q)):
            raise InvalidInput("s and t must lie outside A and Q")
        sA = {self.s} | set(A)
        seen: set[int] = set()
        for p in parts:
            if not set(p) <= sA:
                raise InvalidInput("every part must lie inside {s} | A")
            if seen & set(p):
                raise InvalidInput("parts must be pairwise disjoint")
            seen |= set(p)
        if not isinstance(self.k, int) or self.k < 0:
            raise InvalidInput("k must be a nonnegative integer")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "Z", vset(self.Z))

    @property
    def source_set(self) -> tuple[int, ...]:
        return vset((self.s,) + self.A)

    def constraint(self) -> ConstraintSpec:
        """The constraint with B = sA."""
        return ConstraintSpec(self.source_set, self.source_set, self.parts, self.Q)


@dataclass
class EnumStats:
    nodes_visited: int = 0
    max_potential_seen: int | None = None
    outputs_raw: int = 0
    outputs_final: int = 0
    children: int = 0
    continuations: int = 0
    potential_violations: int = 0
    potential_log: list[tuple[float, float]] = field(default_factory=list, repr=False)


NEG_INF = float("-inf")


class _State:
    """One recursion node in current ids. ``labels`` maps back to caller ids.

    ``g`` carries the helper edges added at s and t and drives every flow
    computation. ``gc`` only loses deleted vertices; constraints are judged
    on it, since an edge at s can merge source-side components that are
    really apart. ``b`` is the set Q must reach; it stays the caller's sA
    while A grows by forced source-side vertices.
    """

    __slots__ = ("g", "gc", "labels", "s", "t", "a", "b", "q", "parts", "z", "k")

    def __init__(self, g, gc, labels, s, t, a, b, q, parts, z, k):
        self.g = g
        self.gc = gc
        self.labels = labels
        self.s = s
        self.t = t
        self.a = a  # mask of A
        self.b = b  # mask of the constraint's B
        self.q = q  # mask of Q
        self.parts = parts  # tuple of masks
        self.z = z  # frozenset in caller ids
        self.k = k

    def replace(self, **kw) -> "_State":
        vals = {name: getattr(self, name) for name in self.__slots__}
        vals.update(kw)
        return _State(**vals)

    @property
    def s_mask(self) -> int:
        return 1 << self.s

    @property
    def t_mask(self) -> int:
        return 1 << self.t

    def spec(self) -> ConstraintSpec:
        src = from_mask(self.a | self.s_mask)
        return ConstraintSpec(src, from_mask(self.b), tuple(from_mask(p) for p in self.parts), from_mask(self.q))

    def delete(self, drop_mask: int) -> "_State":
        red = remove_vertices(self.g, from_mask(drop_mask))
        red_c = remove_vertices(self.gc, from_mask(drop_mask))
        m = red.old_to_new

        def remap(mask: int) -> int:
            return sum(1 << m[v] for v in from_mask(mask))

        return _State(
            red.graph,
            red_c.graph,
            tuple(self.labels[v] for v in red.new_to_old),
            m[self.s],
            m[self.t],
            remap(self.a),
            remap(self.b),
            remap(self.q),
            tuple(remap(p) for p in self.parts),
            self.z | {self.labels[v] for v in from_mask(drop_mask)},
            self.k - drop_mask.bit_count(),
        )


def _state_from(ctx: EnumContext) -> _State:
    return _State(
        ctx.graph,
        ctx.graph,
        tuple(range(ctx.graph.n)),
        ctx.s,
        ctx.t,
        to_mask(ctx.A),
        to_mask(ctx.source_set),
        to_mask(ctx.Q),
        tuple(to_mask(p) for p in ctx.parts),
        frozenset(ctx.Z),
        ctx.k,
    )


def potential(st: _State) -> float:
    k1 = kappa_masks(st.g, st.s_mask, st.t_mask)
    k2 = kappa_masks(st.g, st.s_mask | st.a | st.q, st.t_mask)
    if k1 is None or k2 is None:
        return NEG_INF
    return 3 * st.k - (k1 + k2)


def _bad_component_masks(st: _State, rstar: int) -> list[int]:
    g = st.gc
    out = []
    rest = g.all_mask & ~rstar
    while rest:
        low = rest & -rest
        c = reach_mask(g, low, rstar)
        rest &= ~c
        if c & st.s_mask:
            continue
        split = any(c & p and c & p != p for p in st.parts)
        stranded = bool(c & st.q) and not c & st.b
        if split or stranded:
            out.append(c)
    return out


def _closest_to_source(st: _State) -> tuple[int, int] | None:
    sol = solve_masks(st.g, st.s_mask | st.a | st.q, st.t_mask)
    if sol is None:
        return None
    return sol[0], sol[1]


def _progress_set(st: _State, family: list[int], kst: int) -> int | None:
    sets = [from_mask(c) for c in family]
    for X in sorted(enumerate_minimal_hitting_sets(sets)):
        k = kappa_masks(st.g, st.s_mask | to_mask(X), st.t_mask)
        if k == kst:
            return to_mask(X)
    return None


# -------------------------------------------------------------- public helpers

def bad_components(ctx: EnumContext, Rstar: Iterable[int]) -> list[tuple[int, ...]]:
    """Components of G - R* that miss s and either cut a part or strand a Q vertex."""
    st = _state_from(ctx)
    return [from_mask(c) for c in _bad_component_masks(st, to_mask(check_set(ctx.graph, Rstar)))]


def _require_tight(st: _State) -> int:
    kst = kappa_masks(st.g, st.s_mask, st.t_mask)
    ksa = kappa_masks(st.g, st.s_mask | st.a, st.t_mask)
    if kst is None or kst != ksa:
        raise ContractViolation("requires kappa_{s,t} = kappa_{sA,t} < infinity")
    return kst


def find_progress_hitting_set(ctx: EnumContext) -> tuple[int, ...]:
    """Lexicographically least minimal hitting set X of the bad neighbourhoods
    with kappa_{sX,t} = kappa_{s,t}."""
    st = _state_from(ctx)
    kst = _require_tight(st)
    rs = _closest_to_source(st)
    if rs is None:
        raise ContractViolation("sAQ touches t")
    bad = _bad_component_masks(st, rs[1])
    if not bad:
        return ()
    x = _progress_set(st, [nbr_mask_of_set(st.g, c) for c in bad], kst)
    if x is None:
        raise ContractViolation("no hitting set preserves kappa_{s,t}")
    return from_mask(x)


def min_cp_important_separators(
    ctx: EnumContext, mhs_sizes: list[int] | None = None
) -> list[tuple[int, ...]]:
    """Important separators among the minimum-size CP sA,t-separators.

    Requires kappa_{s,t} = kappa_{sA,t} and that some minimum s,t-separator
    is CP. If ``mhs_sizes`` is given, the number of hitting sets examined is
    appended to it.
    """
    st = _state_from(ctx)
    kst = _require_tight(st)
    g = st.g
    sa = st.s_mask | st.a
    spec = st.spec()
    rs = _closest_to_source(st)
    if rs is None:
        raise ContractViolation("sAQ touches t")
    bad = _bad_component_masks(st, rs[1])
    if not bad:
        if mhs_sizes is not None:
            mhs_sizes.append(0)
        if rs[0] != kst or not models_mask(g, spec, rs[1]):
            raise ContractViolation("no CP separator of size kappa_{s,t}")
        return [from_mask(rs[1])]
    family = [from_mask(nbr_mask_of_set(g, c)) for c in bad]
    hitting = enumerate_minimal_hitting_sets(family)
    if mhs_sizes is not None:
        mhs_sizes.append(len(hitting))
    pool: list[int] = []
    for X in hitting:
        # A and Q are not merged into s here, so the source is sAQX rather than sX
        sol = solve_masks(g, sa | st.q | to_mask(X), st.t_mask)
        if sol is None or sol[0] != kst:
            continue
        sep = sol[1]
        if sep in pool:
            continue
        if is_minimal_separator_mask(g, sa, st.t_mask, sep) and models_mask(g, spec, sep):
            pool.append(sep)
    if not pool:
        raise ContractViolation("no CP separator of size kappa_{s,t}")
    sides = {S: reach_mask(g, sa, S) for S in pool}
    out = [S for S in pool if not any(sides[T] != sides[S] and sides[T] & sides[S] == sides[T] for T in pool)]
    return sorted(from_mask(S) for S in out)


# ------------------------------------------------------------------ gen_seps

def gen_seps(ctx: EnumContext, stats: EnumStats | None = None, strict: bool = True) -> list[tuple[int, ...]]:
    """All CP important sA,t-separators of size at most k, sorted.

    The raw recursion output is post-filtered: duplicates are merged and
    only minimal, CP, size-bounded separators that stay important within the
    surviving pool are kept. With ``strict`` a potential that fails to drop
    raises ContractViolation; otherwise it is only counted in ``stats``.
    """
    if stats is None:
        stats = EnumStats()
    raw: list[frozenset[int]] = []
    _gen(_state_from(ctx), None, stats, raw, strict)
    stats.outputs_raw = len(raw)
    final = _post_filter(ctx, raw)
    stats.outputs_final = len(final)
    return final


def _post_filter(ctx: EnumContext, raw: Sequence[frozenset[int]]) -> list[tuple[int, ...]]:
    g = ctx.graph
    sa = to_mask(ctx.source_set)
    tm = 1 << ctx.t
    spec = ctx.constraint()
    z0 = set(ctx.Z)
    pool: list[int] = []
    for S in set(raw):
        # vertices already deleted by the caller are part of the output, not of g
        m = to_mask(S - z0)
        if m.bit_count() > ctx.k or m & (sa | tm):
            continue
        if is_minimal_separator_mask(g, sa, tm, m) and models_mask(g, spec, m):
            pool.append(m)
    sides = {S: reach_mask(g, sa, S) for S in pool}
    out = []
    for S in pool:
        c = S.bit_count()
        dominated = any(
            T.bit_count() <= c and sides[T] != sides[S] and sides[T] & sides[S] == sides[T] for T in pool
        )
        if not dominated:
            out.append(tuple(sorted(set(from_mask(S)) | z0)))
    return sorted(out)


def _note_child(stats: EnumStats, parent: float, child: float, strict: bool) -> None:
    stats.children += 1
    stats.potential_log.append((parent, child))
    if not child < parent:
        stats.potential_violations += 1
        if strict:
            raise ContractViolation(f"potential did not drop: {parent} -> {child}")


def _gen(st: _State, parent_lam: float | None, stats: EnumStats, out: list, strict: bool) -> None:
    stats.nodes_visited += 1
    lam = potential(st)
    if parent_lam is not None:
        _note_child(stats, parent_lam, lam, strict)
    if lam == NEG_INF:
        # s touches t, or sAQ does: no CP sA,t-separator exists here
        return
    if lam > 3 * st.k:
        raise ContractViolation("potential exceeds 3k")
    if stats.max_potential_seen is None or lam > stats.max_potential_seen:
        stats.max_potential_seen = int(lam)
    _expand(st, lam, stats, out, strict)


def _expand(st: _State, lam: float, stats: EnumStats, out: list, strict: bool) -> None:
    g, s_m, t_m = st.g, st.s_mask, st.t_mask
    sol = solve_masks(g, s_m, t_m)
    if sol is None:
        return  # s and t adjacent: no separator below this node
    kst, _, L = sol
    if kst > st.k:
        return
    spec = st.spec()
    gc = st.gc
    sa = s_m | st.a
    saq = sa | st.q
    stray = saq & (L | reach_mask(g, t_m, L))
    if stray:
        # Some vertex v of AQ is not behind L. Every CP separator keeps v on
        # the source side, so s may be tied to N[v]; kappa_{s,t} then rises
        # and kappa_{sAQ,t} stays put.
        v = (stray & -stray).bit_length() - 1
        _gen(st.replace(g=join_vertex_to(g, st.s, g.nbr_mask(v) | 1 << v)), lam, stats, out, strict)
        return
    if L == 0:
        if models_mask(gc, spec, 0):
            out.append(st.z)
        return
    xs = from_mask(L)
    if not models_mask(gc, spec, L):
        prior = 0
        for x in xs:
            child = st.replace(g=join_vertex_to(g, st.t, prior), q=st.q | 1 << x)
            _gen(child, lam, stats, out, strict)
            prior |= 1 << x
        return
    rs = solve_masks(g, saq, t_m)
    if rs is None:
        raise ContractViolation("sAQ touches t although L is a minimal sAQ,t-separator")
    rstar = rs[1]
    if models_mask(gc, spec, rstar):
        _gen(st.delete(rstar), lam, stats, out, strict)
        prior = 0
        for x in from_mask(rstar):
            closed = g.nbr_mask(x) | 1 << x
            gi = join_vertex_to(join_vertex_to(g, st.t, closed), st.s, prior)
            _gen(st.replace(g=gi), lam, stats, out, strict)
            prior |= 1 << x
        return
    bad = _bad_component_masks(st, rstar)
    X = _progress_set(st, [nbr_mask_of_set(gc, c) for c in bad], kst)
    if X is None:
        raise ContractViolation("no hitting set preserves kappa_{s,t}")
    # Same graph and budget with A grown by X. The potential cannot rise, so
    # this is a continuation of the node rather than a child. A grows
    # strictly each time, which bounds the chain.
    grown = st.replace(a=st.a | X)
    lam_grown = potential(grown)
    stats.continuations += 1
    if lam_grown > lam:
        stats.potential_violations += 1
        if strict:
            raise ContractViolation("potential rose when extending A")
    _expand(grown, lam, stats, out, strict)
    prior = 0
    for x in from_mask(X):
        bit = 1 << x
        reduced = st.replace(a=st.a | prior).delete(bit)
        _gen(reduced, lam, stats, out, strict)
        closed = g.nbr_mask(x) | bit
        _gen(st.replace(g=join_vertex_to(g, st.t, closed), a=st.a | prior), lam, stats, out, strict)
        prior |= bit
