"""The three vertex-cover node programs and their pure decision rules.

* :func:`greedy_program` - degree thresholding against ``delta / 2**R``.
* :func:`matching_program` - mutual-request matching; matched endpoints
  join the cover (one endpoint in the first round, both afterwards).
* :func:`bfs_program` - BFS levels from a sink; even levels join, and on
  odd-odd edges the higher ID joins.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Mapping, Optional, Sequence

from .graph import Graph, bfs_distances, log2_ceil
from .kernel import Message, MessageKind, RoundContext, SimConfig

__all__ = [
    "GreedyState",
    "MatchingState",
    "BfsState",
    "GreedyProgram",
    "MatchingProgram",
    "BfsProgram",
    "DisconnectedGraphError",
    "greedy_program",
    "matching_program",
    "bfs_program",
    "greedy_threshold",
    "select_match_target",
    "bfs_cover_decision",
    "ALGORITHMS",
    "make_program",
]

Outbox = list[tuple[int, Message]]


class DisconnectedGraphError(RuntimeError):
    """Some node never received a BFS level."""


# --- pure decision rules -----------------------------------------------------


def greedy_threshold(delta: int, round: int) -> Fraction:
    if round < 1:
        raise ValueError(f"round must be >= 1, got {round}")
    if delta < 1:
        raise ValueError(f"delta must be >= 1, got {delta}")
    return Fraction(delta, 2**round)


def select_match_target(neighbor_degrees: Mapping[int, int], actives: Sequence[int] | set[int]) -> int:
    """Return the last entry of the actives sorted by (degree, ID) descending.

    That is the minimum-degree active neighbour, lowest ID on ties.
    ``neighbor_degrees`` maps neighbour ID to the degree this node believes it has.
    """
    if not actives:
        raise ValueError("no active neighbours to request")
    ranked = sorted(actives, key=lambda u: (neighbor_degrees[u], u), reverse=True)
    return ranked[-1]


def bfs_cover_decision(my_level: int, my_id: int, neighbor_levels: Mapping[int, int]) -> bool:
    if my_level % 2 == 0:
        return True
    return any(lvl % 2 == 1 and u < my_id for u, lvl in neighbor_levels.items())


# --- greedy ------------------------------------------------------------------


@dataclass
class GreedyState:
    node_id: int
    my_degree: int
    delta: int
    active_neighbors: set[int]
    round: int = 0
    in_cover: bool = False
    tested_rounds: int = 0


class GreedyProgram:
    name = "greedy"

    def __init__(self, mode: str = "faithful"):
        if mode not in ("faithful", "safe"):
            raise ValueError(f"unknown greedy mode {mode!r}")
        self.mode = mode
        self.delta = 0

    def setup(self, g: Graph) -> None:
        self.delta = max(g.degrees(), default=0)

    def init_state(self, node_id: int, neighbors: tuple[int, ...]) -> GreedyState:
        return GreedyState(node_id, len(neighbors), self.delta, set(neighbors))

    def _past_last_round(self, r: int) -> bool:
        # faithful: R > log2(delta)  <=>  2**R > delta
        if self.delta < 1:
            return True
        if self.mode == "faithful":
            return 2**r > self.delta
        return r > log2_ceil(self.delta) + 1

    def _selected(self, st: GreedyState) -> bool:
        threshold = greedy_threshold(st.delta, st.round)
        if self.mode == "faithful":
            return st.my_degree > threshold
        return st.my_degree >= threshold

    def step(self, st: GreedyState, ctx: RoundContext, inbox: Sequence[Message]) -> tuple[Outbox, bool]:
        for msg in inbox:
            if msg.kind is MessageKind.Drop and msg.sender in st.active_neighbors:
                st.active_neighbors.discard(msg.sender)
                st.my_degree -= 1
        if st.in_cover:
            return [], True
        st.round = ctx.round
        if self._past_last_round(st.round):
            return [], True
        st.tested_rounds = st.round
        if self._selected(st):
            st.in_cover = True
            drop = Message(MessageKind.Drop, st.node_id)
            return [(u, drop) for u in sorted(st.active_neighbors)], True
        return [], False

    def in_cover(self, st: GreedyState) -> bool:
        return st.in_cover

    def decision_rounds(self, st: GreedyState) -> int:
        return st.tested_rounds

    def describe(self, st: GreedyState) -> dict[str, Any]:
        return {"degree": st.my_degree, "round": st.round}


def greedy_program(cfg: SimConfig = SimConfig()) -> GreedyProgram:
    return GreedyProgram(cfg.greedy_mode)


# --- matching ----------------------------------------------------------------


@dataclass
class MatchingState:
    node_id: int
    my_degree: int
    original_degree: int
    active: set[int]
    # neighbour -> [original degree, current degree]
    neighbor_degrees: dict[int, list[int]] = field(default_factory=dict)
    round: int = 0
    requested: Optional[int] = None
    matched_with: Optional[int] = None
    matched_round: int = 0
    in_cover: bool = False
    booted: bool = False


class MatchingProgram:
    name = "matching"

    def setup(self, g: Graph) -> None:
        pass

    def init_state(self, node_id: int, neighbors: tuple[int, ...]) -> MatchingState:
        return MatchingState(node_id, len(neighbors), len(neighbors), set(neighbors))

    def _drop_neighbor(self, st: MatchingState, u: int) -> None:
        if u in st.active:
            st.active.discard(u)
            st.my_degree -= 1
        if u in st.neighbor_degrees:
            st.neighbor_degrees[u][1] = 0

    def _finished(self, st: MatchingState) -> bool:
        return st.matched_with is not None or st.my_degree == 0

    def step(self, st: MatchingState, ctx: RoundContext, inbox: Sequence[Message]) -> tuple[Outbox, bool]:
        out: Outbox = []
        if not st.booted:
            st.booted = True
            deg = Message(MessageKind.Degree, st.node_id, st.my_degree)
            out.extend((u, deg) for u in sorted(st.active))
            return out, self._finished(st)

        requesters = set()
        for msg in inbox:
            if msg.kind is MessageKind.Degree:
                entry = st.neighbor_degrees.setdefault(msg.sender, [msg.payload, msg.payload])
                entry[1] = msg.payload
                if msg.payload == 0:
                    self._drop_neighbor(st, msg.sender)
            elif msg.kind is MessageKind.Drop:
                self._drop_neighbor(st, msg.sender)
            elif msg.kind is MessageKind.MatchRequest:
                requesters.add(msg.sender)

        if st.matched_with is None and st.requested is not None:
            partner = st.requested
            st.requested = None
            if partner in requesters:
                out.extend(self._match(st, partner))
                return out, True

        if self._finished(st):
            return out, True

        if ctx.quiet:
            st.round += 1
            current = {u: st.neighbor_degrees[u][1] for u in st.active}
            st.requested = select_match_target(current, st.active)
            out.append((st.requested, Message(MessageKind.MatchRequest, st.node_id)))
        return out, False

    def _match(self, st: MatchingState, partner: int) -> Outbox:
        st.matched_with = partner
        st.matched_round = st.round
        if st.round == 1:
            mine = (st.original_degree, st.node_id)
            theirs = (st.neighbor_degrees[partner][0], partner)
            st.in_cover = mine > theirs
        else:
            st.in_cover = True
        st.active.discard(partner)
        notify = sorted(st.active)
        st.active.clear()
        st.my_degree = 0
        drop = Message(MessageKind.Drop, st.node_id)
        return [(u, drop) for u in notify]

    def in_cover(self, st: MatchingState) -> bool:
        return st.in_cover

    def decision_rounds(self, st: MatchingState) -> int:
        return st.round

    def describe(self, st: MatchingState) -> dict[str, Any]:
        return {"matched_with": st.matched_with, "matched_round": st.matched_round}


def matching_program(cfg: SimConfig | None = None) -> MatchingProgram:
    return MatchingProgram()


# --- BFS ---------------------------------------------------------------------


@dataclass
class BfsState:
    node_id: int
    neighbors: tuple[int, ...]
    is_sink: bool
    my_level: Optional[int] = None
    my_parent: Optional[int] = None
    neighbor_levels: dict[int, int] = field(default_factory=dict)
    phase: str = "flooding"
    in_cover: bool = False


class BfsProgram:
    name = "bfs"

    def __init__(self, sink: Optional[int] = None):
        self.requested_sink = sink
        self.sink: Optional[int] = None

    def setup(self, g: Graph) -> None:
        sink = self.requested_sink if self.requested_sink is not None else min(g.node_ids, default=None)
        if sink is None or sink not in g:
            raise ValueError(f"sink {sink} is not a node of the graph")
        self.sink = sink
        reached = bfs_distances(g, sink)
        if len(reached) != g.n:
            missing = sorted(set(g.node_ids) - set(reached))
            raise DisconnectedGraphError(f"nodes {missing[:10]} unreachable from sink {sink}")

    def init_state(self, node_id: int, neighbors: tuple[int, ...]) -> BfsState:
        return BfsState(node_id, neighbors, node_id == self.sink)

    def step(self, st: BfsState, ctx: RoundContext, inbox: Sequence[Message]) -> tuple[Outbox, bool]:
        out: Outbox = []
        if st.phase == "done":
            return out, True

        if ctx.round == 1 and st.is_sink:
            st.my_level = 0
            infra = Message(MessageKind.Infrastructure, st.node_id, 0)
            out.extend((u, infra) for u in st.neighbors)

        for msg in inbox:
            if msg.kind is MessageKind.Infrastructure:
                level = msg.payload + 1
                if st.my_level is None or st.my_level > level:
                    st.my_level = level
                    st.my_parent = msg.sender
                    fwd = Message(MessageKind.Infrastructure, st.node_id, level)
                    out.extend((u, fwd) for u in st.neighbors if u != msg.sender)
            elif msg.kind is MessageKind.Level:
                st.neighbor_levels[msg.sender] = msg.payload

        if st.phase == "flooding" and ctx.quiet:
            if st.my_level is None:
                raise DisconnectedGraphError(f"node {st.node_id} has no level at flood quiescence")
            st.phase = "advertising"
            adv = Message(MessageKind.Level, st.node_id, st.my_level)
            out.extend((u, adv) for u in st.neighbors)

        if st.phase == "advertising" and len(st.neighbor_levels) == len(st.neighbors):
            st.in_cover = bfs_cover_decision(st.my_level, st.node_id, st.neighbor_levels)
            st.phase = "done"
            return out, True
        return out, False

    def in_cover(self, st: BfsState) -> bool:
        return st.in_cover

    def decision_rounds(self, st: BfsState) -> int:
        return 2 if st.phase == "done" else 0

    def describe(self, st: BfsState) -> dict[str, Any]:
        return {"level": st.my_level, "parent": st.my_parent}


def bfs_program(cfg: SimConfig = SimConfig()) -> BfsProgram:
    return BfsProgram(cfg.sink)


ALGORITHMS = ("greedy", "matching", "bfs")


def make_program(name: str, cfg: SimConfig = SimConfig()):
    if name == "greedy":
        return greedy_program(cfg)
    if name == "matching":
        return matching_program(cfg)
    if name == "bfs":
        return bfs_program(cfg)
    raise ValueError(f"unknown algorithm {name!r}; expected one of {ALGORITHMS}")
