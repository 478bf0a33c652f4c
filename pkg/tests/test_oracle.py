from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vcsim import oracle
from vcsim.graph import Graph, TopologySpec, generate
from vcsim.oracle import (
    OracleGuardError,
    approximation_report,
    format_ratio,
    is_vertex_cover,
    min_vertex_cover,
    min_vertex_cover_bnb,
    min_vertex_cover_enumerate,
)

from conftest import brute_force_min_cover_size

BACKENDS = ["python"] + (["compiled"] if oracle.BACKEND == "compiled" else [])


def test_is_vertex_cover_examples(p3):
    assert is_vertex_cover(p3, {1})
    assert not is_vertex_cover(p3, {0})
    assert is_vertex_cover(p3, set(p3.node_ids))


def test_is_vertex_cover_unknown_node(p3):
    with pytest.raises(ValueError):
        is_vertex_cover(p3, {7})


@pytest.mark.parametrize("backend", BACKENDS)
def test_enumerate_examples(backend, star5, c4, k2):
    assert min_vertex_cover_enumerate(star5, backend).cover == {0}
    assert min_vertex_cover_enumerate(c4, backend).size == 2
    assert min_vertex_cover_enumerate(k2, backend).size == 1


@pytest.mark.parametrize("backend", BACKENDS)
def test_enumerate_lexicographic_tie_break(backend, c4, k2):
    assert min_vertex_cover_enumerate(c4, backend).cover == {0, 2}
    assert min_vertex_cover_enumerate(k2, backend).cover == {0}
    # subsets visited before the answer: {} then 4 singletons then {0,1} {0,2}
    assert min_vertex_cover_enumerate(c4, backend).nodes_explored == 7


def test_enumerate_guard():
    g = generate(TopologySpec("path", 21))
    with pytest.raises(OracleGuardError):
        min_vertex_cover_enumerate(g)
    assert min_vertex_cover(g, "auto").method == "branch_and_bound"


def test_empty_edge_set():
    g = Graph.from_edges([], [0, 1])
    assert min_vertex_cover_enumerate(g).size == 0
    assert min_vertex_cover_bnb(g).size == 0


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("kind, n, size", [("cycle", 6, 3), ("path", 7, 3), ("star", 9, 1), ("complete", 7, 6)])
def test_bnb_examples(backend, kind, n, size):
    g = generate(TopologySpec(kind, n))
    res = min_vertex_cover_bnb(g, backend)
    assert res.size == size == brute_force_min_cover_size(g)
    assert is_vertex_cover(g, res.cover)


@pytest.mark.parametrize("seed", range(1, 51))
def test_bnb_matches_enumerate_on_gnp14(seed):
    g = generate(TopologySpec("random_gnp", 14, edge_prob=0.3, seed=seed))
    assert min_vertex_cover_bnb(g).size == min_vertex_cover_enumerate(g).size


@pytest.mark.skipif(oracle.BACKEND != "compiled", reason="compiled extension not built")
@pytest.mark.parametrize("seed", range(30))
def test_backends_agree_exactly(seed):
    g = generate(TopologySpec("random_geometric", 18, radius=0.4, seed=seed))
    for solve in (min_vertex_cover_enumerate, min_vertex_cover_bnb):
        assert solve(g, "python") == solve(g, "compiled")


@pytest.mark.skipif(oracle.BACKEND != "compiled", reason="compiled extension not built")
def test_compiled_bnb_handles_64_vertices():
    g = generate(TopologySpec("random_geometric", 64, radius=0.22, seed=4))
    assert min_vertex_cover_bnb(g, "compiled") == min_vertex_cover_bnb(g, "python")


def test_bnb_beyond_64_uses_python():
    g = generate(TopologySpec("path", 70))
    assert min_vertex_cover_bnb(g).size == 35


def test_unknown_backend(p3):
    with pytest.raises(ValueError):
        min_vertex_cover_bnb(p3, "gpu")


@st.composite
def small_graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(chosen, range(n))


@settings(max_examples=300, deadline=None)
@given(small_graphs())
def test_solvers_are_minimal(g):
    opt = brute_force_min_cover_size(g)
    for backend in BACKENDS:
        e = min_vertex_cover_enumerate(g, backend)
        b = min_vertex_cover_bnb(g, backend)
        assert e.size == b.size == opt
        assert is_vertex_cover(g, e.cover) and is_vertex_cover(g, b.cover)
    if g.edge_count and g.n > 1 and opt:
        assert 1 <= opt <= g.n - 1


@settings(max_examples=100, deadline=None)
@given(small_graphs(max_n=14))
def test_no_smaller_cover_exists(g):
    res = min_vertex_cover_enumerate(g)
    if res.size:
        assert not any(is_vertex_cover(g, s) for s in combinations(g.node_ids, res.size - 1))
    # lexicographically first among optimal covers
    first = next(set(s) for s in combinations(g.node_ids, res.size) if is_vertex_cover(g, s))
    assert res.cover == first


@settings(max_examples=150, deadline=None)
@given(small_graphs(max_n=12), st.data())
def test_adding_an_edge_never_shrinks_opt(g, data):
    missing = [(u, v) for u in g.node_ids for v in g.node_ids if u < v and not g.has_edge(u, v)]
    if not missing:
        return
    u, v = data.draw(st.sampled_from(missing))
    assert min_vertex_cover_bnb(g.with_edge(u, v)).size >= min_vertex_cover_bnb(g).size


# --- approximation reports -----------------------------------------------------


def _cover_of_size(k: int) -> tuple[Graph, set[int]]:
    g = generate(TopologySpec("complete", k + 1))
    return g, set(range(k))


@pytest.mark.parametrize("size, opt, deflection, text", [(13, 12, 1, "1.083"), (4, 4, 0, "1.000"), (6, 4, 2, "1.500")])
def test_table_values(size, opt, deflection, text):
    g, cover = _cover_of_size(size)
    rep = approximation_report(g, cover, opt)
    assert rep.deflection == deflection
    assert rep.ratio == Fraction(size, opt)
    assert rep.ratio_text() == text


def test_ratio_rounding():
    assert format_ratio(Fraction(5, 3)) == "1.667"
    assert format_ratio(Fraction(25, 16)) == "1.563"
    assert format_ratio(Fraction(15, 8)) == "1.875"
    assert format_ratio(None) == "INVALID"


def test_invalid_cover_has_no_ratio(p3):
    rep = approximation_report(p3, {0}, 1)
    assert not rep.valid and rep.ratio is None
    assert rep.ratio_text() == "INVALID"
    assert rep.deflection == 0


def test_report_rejects_zero_opt(p3):
    with pytest.raises(ValueError):
        approximation_report(p3, {1}, 0)


def test_pure_python_backend_is_selectable():
    import os
    import subprocess
    import sys

    env = dict(os.environ, VCSIM_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import vcsim.oracle as o; print(o.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
