"""Structural predicates on vertex separators and minimal hitting sets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .constraints import ConstraintSpec, models_mask
from .errors import InvalidInput, ResourceLimit
from .graph import Graph, check_set, from_mask, nbr_mask_of_set, reach_mask, to_mask

DEFAULT_MHS_CAP = 64


@dataclass(frozen=True)
class SeparatorCertificate:
    separator: tuple[int, ...]
    is_separator: bool
    is_minimal: bool
    models_constraint: bool
    size: int
    weight: int

    def to_json(self) -> dict:
        return {
            "separator": list(self.separator),
            "is_separator": self.is_separator,
            "is_minimal": self.is_minimal,
            "models_constraint": self.models_constraint,
            "size": self.size,
            "weight": self.weight,
        }


def _masks(g: Graph, A, B, S) -> tuple[int, int, int]:
    return to_mask(check_set(g, A)), to_mask(check_set(g, B)), to_mask(check_set(g, S))


def is_separator_mask(g: Graph, a: int, b: int, s: int) -> bool:
    if (a | b) & s:
        return False
    return not reach_mask(g, a, s) & b


def is_minimal_separator_mask(g: Graph, a: int, b: int, s: int) -> bool:
    if (a | b) & s:
        return False
    side_a = reach_mask(g, a, s)
    if side_a & b:
        return False
    side_b = reach_mask(g, b, s)
    return s & nbr_mask_of_set(g, side_a) & nbr_mask_of_set(g, side_b) == s


def is_separator(g: Graph, A: Iterable[int], B: Iterable[int], S: Iterable[int]) -> bool:
    return is_separator_mask(g, *_masks(g, A, B, S))


def is_minimal_separator(g: Graph, A: Iterable[int], B: Iterable[int], S: Iterable[int]) -> bool:
    """S separates A from B and every member touches both an A-side and a B-side component."""
    return is_minimal_separator_mask(g, *_masks(g, A, B, S))


def minimalize_mask(g: Graph, a: int, b: int, s: int) -> int:
    s1 = nbr_mask_of_set(g, reach_mask(g, a, s))
    side_b = reach_mask(g, b, s1)
    return s1 & nbr_mask_of_set(g, side_b)


def minimalize(g: Graph, A: Iterable[int], B: Iterable[int], S: Iterable[int]) -> tuple[int, ...]:
    """A minimal A,B-separator contained in S.

    The boundary of the A-side of G - S is taken first and then trimmed to
    the vertices that also touch the B-side. The A-side is unchanged unless
    that boundary itself holds redundant vertices.
    """
    a, b, s = _masks(g, A, B, S)
    if not is_separator_mask(g, a, b, s):
        raise InvalidInput("S is not an A,B-separator")
    return from_mask(minimalize_mask(g, a, b, s))


def minimal_st_separator_masks(g: Graph, s: int, t: int) -> list[int]:
    """Every minimal s,t-separator, as masks, in discovery order.

    Starts from the one closest to s. From a separator with s-side C and any
    x in it not adjacent to t, N(C_t(G - N(C + x))) is again minimal; closing
    under this step reaches every minimal s,t-separator.
    """
    tm = 1 << t
    if g.nbr_mask(s) & tm or s == t:
        return []

    def toward_t(x_mask: int) -> int:
        return nbr_mask_of_set(g, reach_mask(g, tm, nbr_mask_of_set(g, x_mask)))

    first = toward_t(1 << s)
    seen = {first}
    queue = [first]
    i = 0
    while i < len(queue):
        sep = queue[i]
        i += 1
        side = reach_mask(g, 1 << s, sep)
        f = sep & ~g.nbr_mask(t)
        while f:
            low = f & -f
            f ^= low
            nxt = toward_t(side | low)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return queue


def minimal_st_separators(
    g: Graph, s: int, t: int, max_size: int | None = None
) -> list[tuple[int, ...]]:
    """All minimal s,t-separators (optionally of bounded size), sorted."""
    check_set(g, (s, t))
    if s == t:
        raise InvalidInput("s and t must differ")
    out = minimal_st_separator_masks(g, s, t)
    if max_size is not None:
        out = [m for m in out if m.bit_count() <= max_size]
    return sorted(from_mask(m) for m in out)


def is_important(
    g: Graph,
    A: Iterable[int],
    B: Iterable[int],
    S: Iterable[int],
    pool: Iterable[Iterable[int]],
) -> bool:
    """No pool member has a strictly smaller A-side while being no larger than S."""
    a = to_mask(check_set(g, A))
    s_t = check_set(g, S)
    side = reach_mask(g, a, to_mask(s_t))
    for other in pool:
        o = check_set(g, other)
        if len(o) > len(s_t):
            continue
        o_side = reach_mask(g, a, to_mask(o))
        if o_side != side and o_side & side == o_side:
            return False
    return True


def is_close(
    g: Graph,
    A: Iterable[int],
    B: Iterable[int],
    constraint: ConstraintSpec | None,
    S: Iterable[int],
    pool: Iterable[Iterable[int]],
) -> bool:
    """No CP pool member has a strictly smaller A-side than S."""
    a = to_mask(check_set(g, A))
    side = reach_mask(g, a, to_mask(check_set(g, S)))
    for other in pool:
        o_mask = to_mask(check_set(g, other))
        if constraint is not None and not models_mask(g, constraint, o_mask):
            continue
        o_side = reach_mask(g, a, o_mask)
        if o_side != side and o_side & side == o_side:
            return False
    return True


def certify(
    g: Graph,
    A: Iterable[int],
    B: Iterable[int],
    S: Iterable[int],
    spec: ConstraintSpec | None = None,
) -> SeparatorCertificate:
    a, b, s = _masks(g, A, B, S)
    sep = is_separator_mask(g, a, b, s)
    return SeparatorCertificate(
        separator=from_mask(s),
        is_separator=sep,
        is_minimal=sep and is_minimal_separator_mask(g, a, b, s),
        models_constraint=True if spec is None else models_mask(g, spec, s),
        size=s.bit_count(),
        weight=g.weight_of(from_mask(s)),
    )


# ---------------------------------------------------------- minimal hitting sets

def enumerate_minimal_hitting_sets(
    family: Sequence[Iterable[int]], cap: int = DEFAULT_MHS_CAP
) -> list[tuple[int, ...]]:
    """All inclusion-minimal hitting sets, by size then lexicographically.

    Candidates are subsets of the family's union, examined in ascending
    size; a hitting set is kept when no smaller kept set is inside it. A
    minimal hitting set never has more members than the family has sets,
    which bounds the search.
    """
    sets = [tuple(sorted(set(e))) for e in family]
    if not sets:
        raise InvalidInput("family must be nonempty")
    if any(not e for e in sets):
        raise InvalidInput("family members must be nonempty")
    universe = sorted(set().union(*sets))
    if len(universe) > cap:
        raise ResourceLimit(f"hitting-set universe has {len(universe)} elements, cap is {cap}")
    index = {x: i for i, x in enumerate(universe)}
    set_masks = [sum(1 << index[x] for x in e) for e in sets]
    kept: list[int] = []
    out: list[tuple[int, ...]] = []
    for r in range(1, min(len(universe), len(set_masks)) + 1):
        for combo in combinations(range(len(universe)), r):
            m = 0
            for i in combo:
                m |= 1 << i
            if any(k & m == k for k in kept):
                continue
            if all(m & e for e in set_masks):
                kept.append(m)
                out.append(tuple(universe[i] for i in combo))
    return out


def hitting_set_witnesses(
    family: Sequence[Iterable[int]], H: Iterable[int]
) -> dict[int, tuple[int, ...]] | None:
    """Per-element witnesses of minimality: for each x in H a set meeting H only in x.

    Returns ``None`` when H is not a minimal hitting set.
    """
    h = set(H)
    sets = [tuple(sorted(set(e))) for e in family]
    if any(not h & set(e) for e in sets):
        return None
    out = {}
    for x in sorted(h):
        for e in sets:
            if h & set(e) == {x}:
                out[x] = e
                break
        else:
            return None
    return out
