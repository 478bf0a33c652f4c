"""Exact minimum vertex cover, cover checking and approximation ratios.

The search kernels come from the compiled ``_oracle_core`` extension when it
is importable and from ``_oracle_py`` otherwise.  Setting
``VCSIM_PURE_PYTHON=1`` forces the fallback.  ``BACKEND`` names the one in use.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Iterable, Optional

from . import _oracle_py
from .graph import Graph

__all__ = [
    "OracleResult",
    "ApproxReport",
    "OracleGuardError",
    "ENUMERATE_LIMIT",
    "BACKEND",
    "is_vertex_cover",
    "min_vertex_cover_enumerate",
    "min_vertex_cover_bnb",
    "min_vertex_cover",
    "approximation_report",
    "format_ratio",
]

ENUMERATE_LIMIT = 20

_compiled = None
if os.environ.get("VCSIM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _oracle_core as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"


class OracleGuardError(ValueError):
    """Exhaustive enumeration refused because the graph is too large."""


@dataclass(frozen=True)
class OracleResult:
    cover: frozenset[int]
    size: int
    nodes_explored: int
    method: str

    def as_dict(self) -> dict:
        return {
            "cover": sorted(self.cover),
            "size": self.size,
            "nodes_explored": self.nodes_explored,
            "method": self.method,
        }


def is_vertex_cover(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    unknown = s.difference(g.adjacency)
    if unknown:
        raise ValueError(f"unknown node IDs {sorted(unknown)}")
    return all(u in s or v in s for u, v in g.edges())


def _bitmasks(g: Graph) -> list[int]:
    index = {v: i for i, v in enumerate(g.node_ids)}
    masks = []
    for v in g.node_ids:
        m = 0
        for u in g.adjacency[v]:
            m |= 1 << index[u]
        masks.append(m)
    return masks


def _unmask(g: Graph, mask: int) -> frozenset[int]:
    return frozenset(v for i, v in enumerate(g.node_ids) if (mask >> i) & 1)


def _kernels(n: int, backend: Optional[str]):
    if backend is None:
        backend = BACKEND
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled oracle extension is not available")
        if n <= _compiled.MAX_VERTICES:
            return _compiled
        return _oracle_py
    if backend == "python":
        return _oracle_py
    raise ValueError(f"unknown backend {backend!r}")


def min_vertex_cover_enumerate(g: Graph, backend: Optional[str] = None) -> OracleResult:
    """Check subsets by increasing size; the first cover found is returned.

    Within one size, subsets are visited in lexicographic order of their
    sorted node IDs, so ties resolve to the lexicographically smallest cover.
    """
    if g.n > ENUMERATE_LIMIT:
        raise OracleGuardError(
            f"enumeration is limited to n <= {ENUMERATE_LIMIT} (got n={g.n}); use branch and bound"
        )
    mask, checked = _kernels(g.n, backend).enumerate_cover(_bitmasks(g))
    cover = _unmask(g, mask)
    return OracleResult(cover, len(cover), checked, "enumerate")


def min_vertex_cover_bnb(g: Graph, backend: Optional[str] = None) -> OracleResult:
    """Branch on the highest-degree vertex: take it, or take all its neighbours.

    Degree-0 vertices are discarded and the neighbour of a degree-1 vertex
    is taken outright before each branch.  A greedy maximal matching on the
    residual graph gives the lower bound used for pruning.
    """
    mask, explored = _kernels(g.n, backend).branch_and_bound_cover(_bitmasks(g))
    cover = _unmask(g, mask)
    return OracleResult(cover, len(cover), explored, "branch_and_bound")


def min_vertex_cover(g: Graph, method: str = "auto") -> OracleResult:
    if method == "enumerate":
        return min_vertex_cover_enumerate(g)
    if method in ("bnb", "branch_and_bound"):
        return min_vertex_cover_bnb(g)
    if method == "auto":
        if g.n <= ENUMERATE_LIMIT:
            return min_vertex_cover_enumerate(g)
        return min_vertex_cover_bnb(g)
    raise ValueError(f"unknown oracle method {method!r}")


# --- approximation -----------------------------------------------------------


@dataclass(frozen=True)
class ApproxReport:
    """``ratio`` is ``None`` when the cover was invalid."""

    cover_size: int
    opt_size: int
    deflection: int
    ratio: Optional[Fraction]

    @property
    def valid(self) -> bool:
        return self.ratio is not None

    def ratio_text(self) -> str:
        return format_ratio(self.ratio)


def format_ratio(ratio: Optional[Fraction], places: int = 3) -> str:
    if ratio is None:
        return "INVALID"
    q = Decimal(ratio.numerator) / Decimal(ratio.denominator)
    return str(q.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP))


def approximation_report(g: Graph, algo_cover: Iterable[int], opt_size: int) -> ApproxReport:
    cover = set(algo_cover)
    if opt_size < 1:
        raise ValueError(f"opt_size must be >= 1, got {opt_size}")
    deflection = len(cover) - opt_size
    if not is_vertex_cover(g, cover):
        return ApproxReport(len(cover), opt_size, deflection, None)
    return ApproxReport(len(cover), opt_size, deflection, Fraction(len(cover), opt_size))
