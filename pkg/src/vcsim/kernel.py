"""Round-synchronous message-passing executor.

Each round the kernel delivers every envelope sent in the previous round,
then calls the node programs in ascending ID order and collects what they
send.  A run ends once nothing is in flight and every node reports that it
has terminated.  Channels are reliable: acknowledgements and retransmission
timers are not simulated and never counted.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Any, Iterable, NamedTuple, Optional, Protocol, Sequence

from .graph import Graph, validate
from .oracle import is_vertex_cover

__all__ = [
    "MessageKind",
    "Message",
    "Envelope",
    "SimConfig",
    "SimResult",
    "RoundContext",
    "NodeProgram",
    "KernelError",
    "NonTerminationError",
    "deliver_order",
    "run",
]


class MessageKind(IntEnum):
    """Wire message kinds; the integer value is the delivery tag order."""

    Drop = 0
    Degree = 1
    MatchRequest = 2
    Infrastructure = 3
    Level = 4


class Message(NamedTuple):
    kind: MessageKind
    sender: int
    payload: int = 0


class Envelope(NamedTuple):
    src: int
    dst: int
    msg: Message
    send_round: int

    def as_dict(self) -> dict:
        return {
            "round": self.send_round,
            "src": self.src,
            "dst": self.dst,
            "kind": self.msg.kind.name,
            "payload": self.msg.payload,
        }


TRACE_LEVELS = ("off", "counts", "full")
GREEDY_MODES = ("faithful", "safe")


@dataclass(frozen=True)
class SimConfig:
    """Run parameters.

    ``max_rounds=None`` means ``4 * n`` (at least 4).  ``sink=None`` lets the
    BFS program pick the smallest node ID.
    """

    max_rounds: Optional[int] = None
    sink: Optional[int] = None
    greedy_mode: str = "faithful"
    count_acks: bool = False
    trace_level: str = "counts"

    def __post_init__(self) -> None:
        if self.max_rounds is not None and self.max_rounds < 1:
            raise ValueError(f"max_rounds must be >= 1, got {self.max_rounds}")
        if self.greedy_mode not in GREEDY_MODES:
            raise ValueError(f"greedy_mode must be one of {GREEDY_MODES}")
        if self.trace_level not in TRACE_LEVELS:
            raise ValueError(f"trace_level must be one of {TRACE_LEVELS}")
        if self.count_acks:
            raise ValueError("ACK accounting is not supported; channels are reliable")

    def round_limit(self, g: Graph) -> int:
        if self.max_rounds is not None:
            return self.max_rounds
        return max(4, 4 * g.n)


@dataclass(frozen=True)
class SimResult:
    algorithm: str
    cover: frozenset[int]
    message_counts: dict[str, int]
    total_messages: int
    rounds_executed: int
    decision_rounds: int
    is_valid_cover: bool
    trace: tuple[Envelope, ...] = ()
    node_info: dict[int, dict[str, Any]] = field(default_factory=dict)

    def as_dict(self, include_trace: bool = True) -> dict:
        out = {
            "algorithm": self.algorithm,
            "cover": sorted(self.cover),
            "cover_size": len(self.cover),
            "message_counts": dict(self.message_counts),
            "total_messages": self.total_messages,
            "rounds_executed": self.rounds_executed,
            "decision_rounds": self.decision_rounds,
            "valid": self.is_valid_cover,
        }
        if include_trace and self.trace:
            out["trace"] = [e.as_dict() for e in self.trace]
        return out

    def to_json(self, include_trace: bool = True) -> str:
        return json.dumps(self.as_dict(include_trace), sort_keys=True)

    def trace_jsonl(self) -> str:
        return "".join(json.dumps(e.as_dict(), sort_keys=True) + "\n" for e in self.trace)


class KernelError(RuntimeError):
    pass


class NonTerminationError(KernelError):
    """Raised when ``max_rounds`` passes without quiescence."""

    def __init__(self, rounds: int, trace: Sequence[Envelope]):
        super().__init__(f"no quiescence after {rounds} rounds")
        self.rounds = rounds
        self.trace = tuple(trace)


@dataclass(frozen=True)
class RoundContext:
    """What a node can observe about the current round.

    ``quiet`` is true when round > 1 and nothing was delivered anywhere this
    round; programs use it in place of the long phase timers.
    """

    round: int
    quiet: bool


class NodeProgram(Protocol):
    name: str

    def setup(self, g: Graph) -> None: ...

    def init_state(self, node_id: int, neighbors: tuple[int, ...]) -> Any: ...

    def step(
        self, state: Any, ctx: RoundContext, inbox: Sequence[Message]
    ) -> tuple[list[tuple[int, Message]], bool]: ...

    def in_cover(self, state: Any) -> bool: ...

    def decision_rounds(self, state: Any) -> int: ...

    def describe(self, state: Any) -> dict[str, Any]: ...


def deliver_order(inbox: Iterable[Envelope]) -> list[Envelope]:
    """Stable sort by ``(sender ID, kind tag)``."""
    return sorted(inbox, key=lambda e: (e.src, int(e.msg.kind)))


def run(g: Graph, program: NodeProgram, cfg: SimConfig = SimConfig()) -> SimResult:
    validate(g)
    program.setup(g)
    limit = cfg.round_limit(g)
    ids = g.node_ids
    states = {v: program.init_state(v, g.adjacency[v]) for v in ids}
    done = dict.fromkeys(ids, False)
    counts: Counter[MessageKind] = Counter()
    trace: list[Envelope] = []
    in_flight: list[Envelope] = []
    rnd = 0
    while True:
        rnd += 1
        if rnd > limit:
            raise NonTerminationError(limit, trace)
        inboxes: dict[int, list[Envelope]] = {}
        for env in in_flight:
            inboxes.setdefault(env.dst, []).append(env)
        ctx = RoundContext(rnd, quiet=rnd > 1 and not in_flight)
        sent: list[Envelope] = []
        for v in ids:
            inbox = [e.msg for e in deliver_order(inboxes.get(v, ()))]
            outbox, finished = program.step(states[v], ctx, inbox)
            done[v] = finished
            for dst, msg in outbox:
                if dst not in g.adjacency[v]:
                    raise KernelError(f"node {v} sent to non-neighbour {dst} in round {rnd}")
                if msg.sender != v:
                    raise KernelError(f"node {v} forged sender {msg.sender}")
                sent.append(Envelope(v, dst, msg, rnd))
        for env in sent:
            counts[env.msg.kind] += 1
        trace.extend(sent)
        in_flight = sent
        if not in_flight and all(done.values()):
            break

    cover = frozenset(v for v in ids if program.in_cover(states[v]))
    message_counts = {k.name: counts.get(k, 0) for k in MessageKind}
    return SimResult(
        algorithm=program.name,
        cover=cover,
        message_counts=message_counts,
        total_messages=sum(message_counts.values()),
        rounds_executed=rnd,
        decision_rounds=max((program.decision_rounds(states[v]) for v in ids), default=0),
        is_valid_cover=is_vertex_cover(g, cover),
        trace=tuple(trace) if cfg.trace_level == "full" else (),
        node_info={v: program.describe(states[v]) for v in ids},
    )
