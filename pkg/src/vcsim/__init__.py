"""Distributed vertex-cover simulation: greedy, matching and BFS node programs
on a round-synchronous kernel, checked against an exact oracle."""

from .algorithms import (
    ALGORITHMS,
    bfs_cover_decision,
    bfs_program,
    greedy_program,
    greedy_threshold,
    make_program,
    matching_program,
    select_match_target,
)
from .graph import Graph, GraphStats, TopologySpec, generate, load_edge_list, stats
from .kernel import Message, MessageKind, SimConfig, SimResult, deliver_order, run
from .oracle import (
    BACKEND,
    OracleResult,
    approximation_report,
    is_vertex_cover,
    min_vertex_cover_bnb,
    min_vertex_cover_enumerate,
)

__version__ = "0.1.0"
