import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vcsim.graph import (
    DuplicateEdgeError,
    EdgeListParseError,
    Graph,
    GraphError,
    SelfLoopError,
    TopologySpec,
    format_edge_list,
    generate,
    load_edge_list,
    parse_edge_list,
    stats,
    validate,
)


def test_load_p3(tmp_path):
    path = tmp_path / "p3.txt"
    path.write_text("0 1\n1 2")
    g = load_edge_list(path)
    assert g.degrees() == [1, 2, 1]
    assert g.edge_count == 2
    validate(g)


@pytest.mark.parametrize(
    "text, error",
    [
        ("0 1\n0 1", DuplicateEdgeError),
        ("0 1\n1 0", DuplicateEdgeError),
        ("0 0", SelfLoopError),
        ("0 1 2", EdgeListParseError),
        ("0 x", EdgeListParseError),
        ("-1 2", EdgeListParseError),
    ],
)
def test_parse_rejects(text, error):
    with pytest.raises(error):
        parse_edge_list(text)


def test_comments_and_blank_lines():
    g = parse_edge_list("# header\n\n0 1\n# mid\n2 1\n")
    assert g.edges() == [(0, 1), (1, 2)]


def test_format_round_trip():
    g = generate(TopologySpec("random_gnp", 12, edge_prob=0.4, seed=5))
    h = parse_edge_list(format_edge_list(g))
    assert h.edges() == g.edges()


@pytest.mark.parametrize(
    "kind, n, max_degree, edges",
    [("star", 5, 4, 4), ("cycle", 4, 2, 4), ("cycle", 3, 2, 3), ("path", 7, 2, 6), ("complete", 5, 4, 10)],
)
def test_deterministic_families(kind, n, max_degree, edges):
    g = generate(TopologySpec(kind, n))
    s = stats(g)
    assert (s.max_degree, s.edge_count, s.node_count) == (max_degree, edges, n)
    if kind == "cycle":
        assert set(g.degrees()) == {2}


def test_random_geometric_is_repeatable():
    spec = TopologySpec("random_geometric", 30, radius=0.35, seed=7)
    assert generate(spec).edges() == generate(spec).edges()
    other = generate(TopologySpec("random_geometric", 30, radius=0.35, seed=8))
    assert other.edges() != generate(spec).edges()


def test_random_geometric_respects_radius():
    import numpy as np

    spec = TopologySpec("random_geometric", 20, radius=0.3, seed=11)
    pts = np.random.Generator(np.random.PCG64(11)).random((20, 2))
    g = generate(spec)
    for i in range(20):
        for j in range(i + 1, 20):
            close = np.hypot(*(pts[i] - pts[j])) <= 0.3
            assert g.has_edge(i, j) == close


def test_gnp_extremes():
    assert generate(TopologySpec("random_gnp", 6, edge_prob=0.0, seed=1)).edge_count == 0
    assert generate(TopologySpec("random_gnp", 6, edge_prob=1.0, seed=1)).edge_count == 15


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(kind="path", n=1),
        dict(kind="cycle", n=2),
        dict(kind="random_geometric", n=5, radius=0.0),
        dict(kind="random_gnp", n=5, edge_prob=1.5),
        dict(kind="hypercube", n=4),
        dict(kind="from_file"),
    ],
)
def test_bad_specs(kwargs):
    with pytest.raises(GraphError):
        TopologySpec(**kwargs)


def test_from_file(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("3 4\n4 5\n")
    assert generate(TopologySpec("from_file", path=str(path))).node_ids == (3, 4, 5)


def test_stats_examples(p3):
    s = stats(p3)
    assert (s.max_degree, s.node_count, s.edge_count, s.diameter, s.is_connected) == (2, 3, 2, 2, True)

    two = Graph.from_edges([(0, 1), (2, 3)])
    s = stats(two)
    assert not s.is_connected and s.diameter is None

    assert stats(generate(TopologySpec("cycle", 6))).diameter == 3


def test_validate_catches_asymmetry():
    from types import MappingProxyType

    bad = Graph((0, 1), MappingProxyType({0: (1,), 1: ()}), 1)
    with pytest.raises(GraphError):
        validate(bad)


@st.composite
def graphs(draw, max_n=15):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(chosen, range(n))


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_invariants_hold_for_any_graph(g):
    validate(g)
    assert sum(g.degrees()) == 2 * g.edge_count
    s = stats(g)
    assert 0 <= s.max_degree <= max(g.n - 1, 0)
    assert (s.diameter is not None) == s.is_connected


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(["random_gnp", "random_geometric"]), st.integers(2, 40), st.integers(0, 2**64 - 1))
def test_generated_graphs_are_valid_and_pure(kind, n, seed):
    spec = TopologySpec(kind, n, radius=0.3, edge_prob=0.3, seed=seed)
    g = generate(spec)
    validate(g)
    assert g.node_ids == tuple(range(n))
    assert generate(spec) == g
