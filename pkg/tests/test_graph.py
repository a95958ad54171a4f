import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete, cycle, graphs, path, star
from cpsep.errors import InvalidInput
from cpsep.graph import (
    Graph,
    add_edges,
    component_of_set,
    components_after_removal,
    contract_connected_set,
    format_graph,
    neighbors_of_set,
    parse_graph,
    remove_vertices,
)


def bfs_components(g, removed):
    """Plain BFS over neighbour lists, kept apart from the bitmask code."""
    seen = set(removed)
    comps = []
    for v in range(g.n):
        if v in seen:
            continue
        comp, queue = {v}, [v]
        seen.add(v)
        while queue:
            x = queue.pop(0)
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    queue.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


# ------------------------------------------------------------ construction

def test_graph_rejects_self_loop_and_bad_ids():
    with pytest.raises(InvalidInput):
        Graph(3, [(1, 1)])
    with pytest.raises(InvalidInput):
        Graph(3, [(0, 3)])
    with pytest.raises(InvalidInput):
        Graph(2, [], [1, -1])


def test_parallel_edges_collapse_and_adjacency_is_symmetric():
    g = Graph(3, [(0, 1), (1, 0), (1, 2)])
    assert g.m == 2
    assert all(v in g.neighbors(u) for v in range(3) for u in g.neighbors(v))


def test_text_format_round_trip_with_weights_and_comments():
    text = "# demo\n3 2\n0 1  # first\n1 2\nweights\n4 0 7\n"
    g = parse_graph(text)
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.weights == (4, 0, 7)
    assert parse_graph(format_graph(g)) == g


@pytest.mark.parametrize("text", ["", "3\n", "2 1\n", "2 1\n0 x\n", "2 1\n0 1\nstray\n", "2 0\nweights\n1\n"])
def test_malformed_text_is_invalid_input(text):
    with pytest.raises(InvalidInput):
        parse_graph(text)


# ------------------------------------------------------------ neighbours

def test_neighbors_of_set_examples():
    assert neighbors_of_set(path(3), [1]) == (0, 2)
    assert neighbors_of_set(path(3), []) == ()
    assert neighbors_of_set(cycle(4), [0, 2]) == (1, 3)
    with pytest.raises(InvalidInput):
        neighbors_of_set(path(3), [5])


@settings(max_examples=200, deadline=None)
@given(graphs(), st.data())
def test_submodularity_of_open_neighbourhood(g, data):
    X = set(data.draw(st.lists(st.integers(0, g.n - 1), unique=True)))
    Y = set(data.draw(st.lists(st.integers(0, g.n - 1), unique=True)))
    size = lambda S: len(neighbors_of_set(g, S))  # noqa: E731
    assert size(X) + size(Y) >= size(X | Y) + size(X & Y)


# ------------------------------------------------------------ components

def test_components_after_removal_examples():
    assert components_after_removal(path(4), [2]) == [(0, 1), (3,)]
    assert components_after_removal(path(4), []) == [(0, 1, 2, 3)]
    assert components_after_removal(cycle(4), [0, 2]) == [(1,), (3,)]


@settings(max_examples=200, deadline=None)
@given(graphs(), st.data())
def test_components_match_bfs_oracle(g, data):
    S = data.draw(st.lists(st.integers(0, g.n - 1), unique=True))
    assert components_after_removal(g, S) == bfs_components(g, S)


def test_component_of_set_examples():
    assert component_of_set(path(4), [2], [0]) == (0, 1)
    assert component_of_set(path(4), [], [0]) == (0, 1, 2, 3)
    assert component_of_set(star(3), [0], [1, 2]) == (1, 2)
    with pytest.raises(InvalidInput):
        component_of_set(path(4), [1], [1])


# ------------------------------------------------------------ transforms

def test_add_edges_examples():
    tri = add_edges(path(3), [(0, 2)])
    assert tri == complete(3)
    assert add_edges(path(3), [(0, 1)]) == path(3)
    with pytest.raises(InvalidInput):
        add_edges(path(3), [(1, 1)])


def test_add_edges_source_merge_on_path_exhaustive():
    # path s-a-b-t, merge A={b} onto s: edges s-a (present) and s-b added
    g = add_edges(path(4), [(0, 1), (0, 2)])
    best = None
    for mask in range(1 << 4):
        S = {v for v in range(4) if mask >> v & 1}
        if S & {0, 3}:
            continue
        comps = bfs_components(g, S)
        if not any(0 in c and 3 in c for c in comps):
            best = S if best is None or len(S) < len(best) else best
    assert best == {2}


@settings(max_examples=200, deadline=None)
@given(graphs(), st.data())
def test_add_then_remove_new_edges_round_trips(g, data):
    pairs = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    new = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    h = add_edges(g, new)
    back = Graph(g.n, [e for e in h.edges() if e not in set(new)], g.weights)
    assert back == g


def test_remove_vertices_examples():
    r = remove_vertices(path(3), [1])
    assert r.graph.n == 2 and r.graph.m == 0
    assert r.new_to_old == (0, 2) and r.old_to_new == {0: 0, 2: 1}
    r = remove_vertices(path(3), [])
    assert r.graph == path(3) and r.new_to_old == (0, 1, 2)
    assert remove_vertices(complete(4), [2]).graph == complete(3)


def test_contract_connected_set_examples():
    r = contract_connected_set(path(3), [0, 1], 0)
    assert r.graph == Graph(2, [(0, 1)]) and r.new_to_old == (0, 2)
    assert contract_connected_set(path(3), [1], 1).graph == path(3)
    assert contract_connected_set(complete(3), [0, 1], 0).graph == Graph(2, [(0, 1)])
    with pytest.raises(InvalidInput):
        contract_connected_set(path(3), [0, 2], 0)
    with pytest.raises(InvalidInput):
        contract_connected_set(path(3), [0, 1], 2)
