from itertools import combinations

import pytest

from vcsim.graph import Graph, TopologySpec, generate

_acceptance: list[tuple[str, str, list]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome, report.user_properties))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for name, outcome, props in _acceptance:
        tr.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
        for key, value in props:
            tr.write_line(f"        {key}: {value}")


def brute_force_min_cover_size(g: Graph) -> int:
    """Set-based exhaustive search, independent of the bitmask kernels."""
    edges = g.edges()
    for k in range(g.n + 1):
        for subset in combinations(g.node_ids, k):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in edges):
                return k
    raise AssertionError("unreachable")


@pytest.fixture
def p3():
    return Graph.from_edges([(0, 1), (1, 2)])


@pytest.fixture
def k2():
    return Graph.from_edges([(0, 1)])


@pytest.fixture
def c4():
    return generate(TopologySpec("cycle", 4))


@pytest.fixture
def star5():
    return generate(TopologySpec("star", 5))


def connected_graph(kind: str, n: int, seed: int, radius: float = 0.4, edge_prob: float = 0.3) -> Graph:
    """First connected sample at or after ``seed`` (seeds stride by 1)."""
    from vcsim.graph import is_connected

    while True:
        g = generate(TopologySpec(kind, n, radius=radius, edge_prob=edge_prob, seed=seed))
        if is_connected(g):
            return g
        seed += 1
