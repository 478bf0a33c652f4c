"""Graph representation, edge-list I/O and topology generation.

Random topologies draw from numpy's ``PCG64`` bit generator seeded with the
64-bit topology seed, so the same seed yields the same edge set on every
platform (see README, "Edge-list format").
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping, Optional

import numpy as np

__all__ = [
    "Graph",
    "GraphStats",
    "TopologySpec",
    "GraphError",
    "EdgeListParseError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "TOPOLOGY_KINDS",
    "load_edge_list",
    "parse_edge_list",
    "format_edge_list",
    "write_edge_list",
    "generate",
    "stats",
    "bfs_distances",
    "validate",
]

TOPOLOGY_KINDS = (
    "path",
    "cycle",
    "star",
    "complete",
    "random_geometric",
    "random_gnp",
    "from_file",
)


class GraphError(ValueError):
    """Base class for malformed graphs and topology specs."""


class EdgeListParseError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``adjacency`` maps every node ID to the sorted tuple of its neighbours.
    Build instances with :meth:`from_edges`; the constructor trusts its input.
    """

    node_ids: tuple[int, ...]
    adjacency: Mapping[int, tuple[int, ...]]
    edge_count: int

    @classmethod
    def from_edges(
        cls, edges: Iterable[tuple[int, int]], nodes: Iterable[int] = ()
    ) -> "Graph":
        """Build a graph from ``(u, v)`` pairs plus optional isolated nodes.

        Raises :class:`SelfLoopError` or :class:`DuplicateEdgeError` when the
        result would not be simple.
        """
        adj: dict[int, set[int]] = {}
        for v in nodes:
            _check_id(v)
            adj.setdefault(v, set())
        count = 0
        for u, v in edges:
            _check_id(u)
            _check_id(v)
            if u == v:
                raise SelfLoopError(f"self-loop on node {u}")
            nu = adj.setdefault(u, set())
            if v in nu:
                raise DuplicateEdgeError(f"duplicate edge {u} {v}")
            nu.add(v)
            adj.setdefault(v, set()).add(u)
            count += 1
        ids = tuple(sorted(adj))
        frozen = {v: tuple(sorted(adj[v])) for v in ids}
        return cls(ids, MappingProxyType(frozen), count)

    @property
    def n(self) -> int:
        return len(self.node_ids)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(self.adjacency[v]) for v in self.node_ids]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in self.node_ids for v in self.adjacency[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return u in self.adjacency and v in self.adjacency[u]

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph.from_edges(self.edges() + [(u, v)], self.node_ids)

    def __contains__(self, v: object) -> bool:
        return v in self.adjacency


def _check_id(v: int) -> None:
    if not isinstance(v, (int, np.integer)) or isinstance(v, bool) or v < 0:
        raise GraphError(f"node IDs must be non-negative integers, got {v!r}")


def validate(g: Graph) -> None:
    """Raise :class:`GraphError` unless ``g`` is symmetric, simple and consistent."""
    if len(set(g.node_ids)) != len(g.node_ids):
        raise GraphError("node IDs are not unique")
    if set(g.adjacency) != set(g.node_ids):
        raise GraphError("adjacency keys differ from node IDs")
    half = 0
    for v, nbrs in g.adjacency.items():
        if len(set(nbrs)) != len(nbrs):
            raise DuplicateEdgeError(f"duplicate neighbour entry at node {v}")
        for u in nbrs:
            if u == v:
                raise SelfLoopError(f"self-loop on node {v}")
            if u not in g.adjacency or v not in g.adjacency[u]:
                raise GraphError(f"asymmetric adjacency {v}->{u}")
        half += len(nbrs)
    if half != 2 * g.edge_count:
        raise GraphError(f"degree sum {half} != 2 * edge_count {g.edge_count}")


# --- edge-list files -------------------------------------------------------


def parse_edge_list(text: str, source: str = "<string>") -> Graph:
    """Parse ``"u v"`` lines; blank lines and ``#`` comments are skipped."""
    edges = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise EdgeListParseError(f"{source}:{lineno}: expected 'u v', got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise SelfLoopError(f"{source}:{lineno}: self-loop on node {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"{source}:{lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))
    return Graph.from_edges(edges)


def load_edge_list(path: str | Path) -> Graph:
    path = Path(path)
    return parse_edge_list(path.read_text(encoding="utf-8"), source=str(path))


def format_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def write_edge_list(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g), encoding="utf-8", newline="\n")


# --- generation --------------------------------------------------------------


@dataclass(frozen=True)
class TopologySpec:
    kind: str
    n: int = 0
    radius: float = 0.0
    edge_prob: float = 0.0
    seed: int = 0
    path: Optional[str] = None

    def __post_init__(self) -> None:
        if self.kind not in TOPOLOGY_KINDS:
            raise GraphError(f"unknown topology kind {self.kind!r}")
        if self.kind == "from_file":
            if not self.path:
                raise GraphError("from_file requires a path")
            return
        if self.n < 2:
            raise GraphError(f"{self.kind} needs n >= 2, got {self.n}")
        if self.kind == "cycle" and self.n < 3:
            raise GraphError(f"cycle needs n >= 3, got {self.n}")
        if self.kind == "random_geometric" and not self.radius > 0:
            raise GraphError(f"radius must be > 0, got {self.radius}")
        if self.kind == "random_gnp" and not 0.0 <= self.edge_prob <= 1.0:
            raise GraphError(f"edge_prob must lie in [0, 1], got {self.edge_prob}")
        if not 0 <= self.seed < 2**64:
            raise GraphError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


def generate(spec: TopologySpec) -> Graph:
    n = spec.n
    if spec.kind == "from_file":
        return load_edge_list(spec.path)
    if spec.kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif spec.kind == "cycle":
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif spec.kind == "star":
        edges = [(0, i) for i in range(1, n)]
    elif spec.kind == "complete":
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif spec.kind == "random_geometric":
        rng = np.random.Generator(np.random.PCG64(spec.seed))
        pts = rng.random((n, 2))
        diff = pts[:, None, :] - pts[None, :, :]
        dist = np.sqrt((diff**2).sum(axis=-1))
        iu, ju = np.triu_indices(n, k=1)
        close = dist[iu, ju] <= spec.radius
        edges = list(zip(iu[close].tolist(), ju[close].tolist()))
    else:  # random_gnp
        rng = np.random.Generator(np.random.PCG64(spec.seed))
        iu, ju = np.triu_indices(n, k=1)
        keep = rng.random(iu.size) < spec.edge_prob
        edges = list(zip(iu[keep].tolist(), ju[keep].tolist()))
    return Graph.from_edges(edges, range(n))


# --- statistics --------------------------------------------------------------


@dataclass(frozen=True)
class GraphStats:
    max_degree: int
    node_count: int
    edge_count: int
    is_connected: bool
    diameter: Optional[int] = field(default=None)

    def as_dict(self) -> dict:
        return {
            "node_count": self.node_count,
            "edge_count": self.edge_count,
            "max_degree": self.max_degree,
            "is_connected": self.is_connected,
            "diameter": self.diameter,
        }


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    """Hop distances from ``source`` to every reachable node."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return len(bfs_distances(g, g.node_ids[0])) == g.n


def stats(g: Graph) -> GraphStats:
    max_degree = max(g.degrees(), default=0)
    connected = is_connected(g)
    diameter = None
    if connected:
        diameter = max(max(bfs_distances(g, v).values()) for v in g.node_ids)
    return GraphStats(max_degree, g.n, g.edge_count, connected, diameter)


def log2_floor(x: int) -> int:
    """``floor(log2(x))`` for ``x >= 1`` using integer arithmetic."""
    if x < 1:
        raise ValueError("log2_floor needs x >= 1")
    return x.bit_length() - 1


def log2_ceil(x: int) -> int:
    if x < 1:
        raise ValueError("log2_ceil needs x >= 1")
    return (x - 1).bit_length()

