"""Pure-Python oracle kernels over bitmask adjacency.

Vertices are indices ``0..n-1``; ``adj[i]`` is the neighbour bitmask of
vertex ``i``.  ``_oracle_core.pyx`` implements the same two functions with
the same visiting order, so both backends return identical covers and
``nodes_explored`` counts.
"""

from __future__ import annotations

from itertools import combinations


def _covers(adj: list[int], mask: int, n: int) -> bool:
    for v in range(n):
        if not (mask >> v) & 1 and adj[v] & ~mask:
            return False
    return True


def enumerate_cover(adj: list[int]) -> tuple[int, int]:
    """Smallest cover, lexicographically first among equal sizes.

    Returns ``(cover_mask, subsets_checked)``.
    """
    n = len(adj)
    checked = 0
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            checked += 1
            mask = 0
            for i in combo:
                mask |= 1 << i
            if _covers(adj, mask, n):
                return mask, checked
    raise AssertionError("the full vertex set always covers")


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _matching_bound(adj: list[int], rest: int) -> int:
    size = 0
    free = rest
    while free:
        v = _lowest(free)
        free &= ~(1 << v)
        cand = adj[v] & free
        if cand:
            free &= ~(1 << _lowest(cand))
            size += 1
    return size


class _Search:
    def __init__(self, adj: list[int]):
        self.adj = adj
        self.best_size = len(adj) + 1
        self.best_mask = (1 << len(adj)) - 1
        self.explored = 0

    def branch(self, rest: int, cover: int, size: int) -> None:
        adj = self.adj
        self.explored += 1
        changed = True
        while changed:
            changed = False
            scan = rest
            while scan:
                v = _lowest(scan)
                scan &= ~(1 << v)
                if not (rest >> v) & 1:
                    continue
                nbrs = adj[v] & rest
                if nbrs == 0:
                    rest &= ~(1 << v)
                    changed = True
                elif nbrs & (nbrs - 1) == 0:
                    cover |= nbrs
                    size += 1
                    rest &= ~((1 << v) | nbrs)
                    changed = True
        if size >= self.best_size:
            return
        if rest == 0:
            self.best_size = size
            self.best_mask = cover
            return
        if size + _matching_bound(adj, rest) >= self.best_size:
            return

        pick, pick_deg = -1, -1
        scan = rest
        while scan:
            v = _lowest(scan)
            scan &= ~(1 << v)
            d = (adj[v] & rest).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
        bit = 1 << pick
        self.branch(rest & ~bit, cover | bit, size + 1)
        nbrs = adj[pick] & rest
        self.branch(rest & ~(bit | nbrs), cover | nbrs, size + pick_deg)


def branch_and_bound_cover(adj: list[int]) -> tuple[int, int]:
    """Minimum cover by branch and bound.  Returns ``(cover_mask, nodes_explored)``."""
    search = _Search(list(adj))
    search.branch((1 << len(adj)) - 1, 0, 0)
    return search.best_mask, search.explored
