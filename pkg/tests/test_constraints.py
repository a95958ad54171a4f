import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import graphs, path, random_graph
from cpsep import oracle
from cpsep.constraints import ConstraintSpec, evaluate, is_cp_separator, models
from cpsep.errors import InvalidInput
from cpsep.graph import component_of_set


def spec_of(parts=(), Q=(), B=()):
    return ConstraintSpec.build(parts=parts, Q=Q, B=B)


@pytest.mark.parametrize("fn", [evaluate, models])
def test_evaluate_examples(fn):
    g = path(4)  # s=0 a=1 b=2 t=3
    assert fn(g, spec_of(parts=[[0, 1]], B=[0]), [2])
    assert not fn(g, spec_of(parts=[[0, 1]], B=[0]), [1])
    assert fn(g, spec_of(Q=[1], B=[0]), [2])


def test_deleted_terminal_is_a_violation():
    g = path(4)
    assert not evaluate(g, spec_of(Q=[1], B=[0]), [1])
    assert not evaluate(g, spec_of(parts=[[0]], B=[0]), [0])
    assert not evaluate(g, spec_of(Q=[2], B=[0]), [0])  # every B vertex deleted


def test_singleton_parts_and_empty_spec_are_trivial():
    g = path(4)
    assert evaluate(g, spec_of(parts=[[0], [3]]), [1, 2])
    assert evaluate(g, spec_of(), [0, 1, 2, 3])
    assert spec_of(parts=[[0], [3]]).is_trivial()


def test_malformed_specs_are_rejected():
    with pytest.raises(InvalidInput):
        ConstraintSpec.build(parts=[[0, 1], [1, 2]])
    with pytest.raises(InvalidInput):
        ConstraintSpec((0,), (0,), ((0, 1),), ())
    with pytest.raises(InvalidInput):
        ConstraintSpec.from_json('{"parts": [[0, "x"]]}')
    with pytest.raises(InvalidInput):
        ConstraintSpec.from_json("[1, 2]")
    with pytest.raises(InvalidInput):
        evaluate(path(3), spec_of(), [7])


def test_json_round_trip():
    spec = ConstraintSpec.from_json({"parts": [[2, 0], [3]], "Q": [5], "B": [1, 0]})
    assert spec.A == (0, 2, 3) and spec.parts == ((0, 2), (3,)) and spec.B == (0, 1)
    assert ConstraintSpec.from_json(spec.to_json()) == spec


def test_stored_spec_size_is_linear():
    rng = random.Random(1)
    for _ in range(100):
        n = rng.randint(1, 30)
        verts = list(range(n))
        rng.shuffle(verts)
        cuts = sorted(rng.sample(range(n + 1), rng.randint(0, min(4, n + 1))))
        parts = [verts[a:b] for a, b in zip(cuts, cuts[1:]) if b > a]
        spec = spec_of(parts=parts, Q=rng.sample(range(n), rng.randint(0, n)), B=[0])
        assert sum(len(p) for p in spec.parts) <= n and len(spec.Q) <= n


def test_is_cp_separator_examples():
    g = path(4)
    assert is_cp_separator(g, spec_of(parts=[[0]], B=[0]), [1], [0], [3])
    assert not is_cp_separator(g, spec_of(), [], [0], [3])


@pytest.mark.parametrize("seed", range(3))
def test_evaluate_and_cp_match_oracle(seed):
    rng = random.Random(seed)
    for _ in range(400):
        n = rng.randint(2, 10)
        g = random_graph(rng, n, rng.uniform(0.1, 0.6))
        verts = list(range(n))
        rng.shuffle(verts)
        parts, i = [], 0
        while i < n and rng.random() < 0.6:
            size = rng.randint(1, 3)
            parts.append(verts[i : i + size])
            i += size
        Q = rng.sample(range(n), rng.randint(0, 2))
        B = rng.sample(range(n), rng.randint(1, 2))
        spec = spec_of(parts=parts, Q=Q, B=B)
        S = rng.sample(range(n), rng.randint(0, n // 2))
        want = oracle.satisfies(g, spec.parts, spec.Q, spec.B, S)
        assert evaluate(g, spec, S) == want
        a, b = rng.sample(range(n), 2)
        if a not in S and b not in S:
            sep = not oracle._reach(g, [a], set(S)) & {b}
            assert is_cp_separator(g, spec, S, [a], [b]) == (sep and want)


@st.composite
def monotone_case(draw):
    g = draw(graphs(min_n=3, max_n=9))
    n = g.n
    verts = draw(st.permutations(range(n)))
    na = draw(st.integers(1, min(4, n - 1)))
    A = list(verts[:na])
    split = draw(st.integers(0, na))
    parts = [p for p in (A[:split], A[split:]) if p]
    rest = list(verts[na:])
    Q = draw(st.lists(st.sampled_from(rest), max_size=2, unique=True))
    B = draw(st.lists(st.sampled_from(rest), min_size=1, max_size=2, unique=True))
    S = draw(st.lists(st.integers(0, n - 1), unique=True))
    S2 = draw(st.lists(st.integers(0, n - 1), unique=True))
    return g, ConstraintSpec.build(parts=parts, Q=Q, B=B, A=A), S, S2


@settings(max_examples=400, deadline=None)
@given(monotone_case())
def test_monotone_under_side_growth(case):
    g, spec, S, S2 = case
    ab = set(spec.A) | set(spec.B)
    assume(not ab & set(S) and not ab & set(S2))
    side = set(component_of_set(g, S, ab))
    side2 = set(component_of_set(g, S2, ab))
    assume(side <= side2)
    if evaluate(g, spec, S):
        assert evaluate(g, spec, S2)
