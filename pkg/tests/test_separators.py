import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph_with_pair, path, random_graph, star
from cpsep import oracle
from cpsep.constraints import ConstraintSpec
from cpsep.errors import InvalidInput, ResourceLimit
from cpsep.graph import Graph, component_of_set, neighbors_of_set
from cpsep.separators import (
    certify,
    enumerate_minimal_hitting_sets,
    hitting_set_witnesses,
    is_close,
    is_important,
    is_minimal_separator,
    is_separator,
    minimal_st_separators,
    minimalize,
)

P4 = path(4)  # s=0 a=1 b=2 t=3


# ------------------------------------------------------------ minimality

def test_is_minimal_separator_examples():
    assert is_minimal_separator(P4, [0], [3], [1])
    assert not is_minimal_separator(P4, [0], [3], [1, 2])
    assert not is_minimal_separator(P4, [0], [3], [])


@pytest.mark.parametrize("seed", range(3))
def test_is_minimal_matches_single_removal_oracle(seed):
    rng = random.Random(seed)
    for _ in range(300):
        n = rng.randint(3, 10)
        g = random_graph(rng, n, rng.uniform(0.2, 0.6))
        s, t = rng.sample(range(n), 2)
        others = [v for v in range(n) if v not in (s, t)]
        S = rng.sample(others, rng.randint(0, len(others)))
        assert is_minimal_separator(g, [s], [t], S) == oracle.is_minimal_by_removal(g, [s], [t], S)


@settings(max_examples=200, deadline=None)
@given(graph_with_pair())
def test_minimal_st_separators_match_oracle(gst):
    g, s, t = gst
    want = sorted(oracle.all_minimal_separators(g, [s], [t], g.n))
    assert minimal_st_separators(g, s, t) == want


# ------------------------------------------------------------ minimalize

def test_minimalize_examples():
    assert minimalize(P4, [0], [3], [1, 2]) == (1,)
    assert minimalize(P4, [0], [3], [1]) == (1,)
    assert minimalize(star(3), [1], [2], [0, 3]) == (0,)
    with pytest.raises(InvalidInput):
        minimalize(P4, [0], [3], [])


def test_minimalize_on_path_keeps_source_side():
    S = minimalize(P4, [0], [3], [1, 2])
    assert is_minimal_separator(P4, [0], [3], S)
    assert component_of_set(P4, S, [0]) == component_of_set(P4, [1, 2], [0])


@settings(max_examples=300, deadline=None)
@given(graph_with_pair(), st.data())
def test_minimalize_properties(gst, data):
    g, s, t = gst
    others = [v for v in range(g.n) if v not in (s, t)]
    S = data.draw(st.lists(st.sampled_from(others), unique=True)) if others else []
    if not is_separator(g, [s], [t], S):
        return
    out = minimalize(g, [s], [t], S)
    assert set(out) <= set(S)
    assert oracle.is_minimal_by_removal(g, [s], [t], out)
    before = set(component_of_set(g, S, [s]))
    after = set(component_of_set(g, out, [s]))
    assert before <= after
    boundary = neighbors_of_set(g, before)
    if oracle.is_minimal_by_removal(g, [s], [t], boundary):
        assert after == before


# ------------------------------------------------------------ importance and closeness

def test_is_important_examples():
    assert is_important(P4, [0], [3], [1], [[1], [2]])
    assert not is_important(P4, [0], [3], [2], [[1], [2]])
    assert is_important(P4, [0], [3], [2], [[2]])
    # s=0, t=5: {1,2} has a smaller side than {1,3,4} and is no larger
    g = Graph(6, [(0, 1), (1, 5), (0, 2), (2, 3), (3, 5), (2, 4), (4, 5)])
    assert is_important(g, [0], [5], [1, 2], [[1, 2], [1, 3, 4]])
    assert not is_important(g, [0], [5], [1, 3, 4], [[1, 2], [1, 3, 4]])


def test_incomparable_sides_are_both_important_and_close():
    # cycle 0-1-2-5-4-3-0, s=0, t=5: {1,4} and {2,3} have incomparable sides of equal size
    g = Graph(6, [(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)])
    pool = [[1, 4], [2, 3]]
    for S in pool:
        assert is_important(g, [0], [5], S, pool)
        assert is_close(g, [0], [5], None, S, pool)


def test_is_close_examples():
    assert is_close(P4, [0], [3], None, [1], [[1], [2]])
    assert not is_close(P4, [0], [3], None, [2], [[1], [2]])
    assert is_close(P4, [0], [3], None, [2], [[2]])
    # a pool member violating the constraint does not count against closeness
    spec = ConstraintSpec.build(parts=[[0, 1]], B=[0])
    assert is_close(P4, [0, 1], [3], spec, [2], [[1], [2]])


@pytest.mark.parametrize("seed", range(2))
def test_close_separators_are_important(seed):
    rng = random.Random(50 + seed)
    for _ in range(150):
        n = rng.randint(4, 9)
        g = random_graph(rng, n, 0.4)
        s, t = rng.sample(range(n), 2)
        rest = [v for v in range(n) if v not in (s, t)]
        A = rng.sample(rest, rng.randint(0, 2))
        spec = ConstraintSpec.build(parts=[[s] + A], B=[s] + A)
        k = rng.randint(1, 3)
        close = oracle.all_cp_close(g, [s] + A, [t], spec, k)
        important = oracle.all_cp_important(g, s, A, t, spec, k)
        assert set(close) <= set(important)


# ------------------------------------------------------------ hitting sets

def test_mhs_examples():
    assert enumerate_minimal_hitting_sets([[1, 2], [2, 3]]) == [(2,), (1, 3)]
    assert enumerate_minimal_hitting_sets([[1]]) == [(1,)]
    with pytest.raises(InvalidInput):
        enumerate_minimal_hitting_sets([])
    with pytest.raises(InvalidInput):
        enumerate_minimal_hitting_sets([[1], []])
    with pytest.raises(ResourceLimit):
        enumerate_minimal_hitting_sets([list(range(65))])


def brute_mhs(family):
    universe = sorted(set().union(*map(set, family)))
    hits = [
        set(c)
        for r in range(len(universe) + 1)
        for c in combinations(universe, r)
        if all(set(c) & set(e) for e in family)
    ]
    return {frozenset(h) for h in hits if not any(o < h for o in hits)}


families = st.lists(st.lists(st.integers(0, 7), min_size=1, max_size=4, unique=True), min_size=1, max_size=5)


@settings(max_examples=300, deadline=None)
@given(families)
def test_mhs_matches_exhaustive_and_has_witnesses(family):
    got = enumerate_minimal_hitting_sets(family)
    assert {frozenset(h) for h in got} == brute_mhs(family)
    assert len(got) == len(set(got))
    assert sorted(got, key=lambda h: (len(h), h)) == got
    union = set().union(*map(set, family))
    assert len(got) <= 2 ** len(union)
    for h in got:
        w = hitting_set_witnesses(family, h)
        assert w is not None and set(w) == set(h)
        for x, e in w.items():
            assert set(h) & set(e) == {x}


def test_witnesses_reject_non_minimal_sets():
    assert hitting_set_witnesses([[1, 2], [2, 3]], [1, 2]) is None
    assert hitting_set_witnesses([[1, 2], [3]], [1]) is None


# ------------------------------------------------------------ certificates

def test_certificate_fields():
    c = certify(path(4, [1, 2, 3, 4]), [0], [3], [1, 2])
    assert (c.is_separator, c.is_minimal, c.models_constraint, c.size, c.weight) == (True, False, True, 2, 5)
    c = certify(P4, [0], [3], [])
    assert not c.is_separator and not c.is_minimal
    spec = ConstraintSpec.build(parts=[[0, 1]], B=[0])
    assert not certify(P4, [0], [3], [1], spec).models_constraint
