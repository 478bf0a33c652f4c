# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled oracle kernels; mirror ``_oracle_py`` step for step on <= 64 vertices."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

MAX_VERTICES = 64


cdef inline uint64_t _bit(int i) nogil:
    return (<uint64_t>1) << i


cdef inline uint64_t _all(int n) nogil:
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return _bit(n) - 1


cdef inline bint _covers(const uint64_t* adj, uint64_t mask, int n) nogil:
    cdef int v
    for v in range(n):
        if not (mask >> v) & 1 and (adj[v] & ~mask):
            return False
    return True


cdef uint64_t* _load(list adj):
    cdef int n = len(adj)
    if n > 64:
        raise ValueError("compiled oracle handles at most 64 vertices")
    cdef uint64_t* out = <uint64_t*>malloc(max(n, 1) * sizeof(uint64_t))
    if out == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        out[i] = <uint64_t>adj[i]
    return out


def enumerate_cover(list adj):
    cdef int n = len(adj)
    cdef uint64_t* a = _load(adj)
    cdef int* idx = <int*>malloc((n + 1) * sizeof(int))
    cdef long long checked = 0
    cdef uint64_t mask = 0
    cdef int k, i, j
    cdef bint found = False
    try:
        with nogil:
            for k in range(n + 1):
                for i in range(k):
                    idx[i] = i
                while True:
                    checked += 1
                    mask = 0
                    for i in range(k):
                        mask |= _bit(idx[i])
                    if _covers(a, mask, n):
                        found = True
                        break
                    # next k-combination in lexicographic order
                    i = k - 1
                    while i >= 0 and idx[i] == n - k + i:
                        i -= 1
                    if i < 0:
                        break
                    idx[i] += 1
                    for j in range(i + 1, k):
                        idx[j] = idx[j - 1] + 1
                if found:
                    break
    finally:
        free(idx)
        free(a)
    return int(mask), int(checked)


cdef struct Search:
    const uint64_t* adj
    int best_size
    uint64_t best_mask
    long long explored


cdef int _matching_bound(const uint64_t* adj, uint64_t rest) nogil:
    cdef int size = 0
    cdef uint64_t free_ = rest
    cdef uint64_t cand
    cdef int v
    while free_:
        v = __builtin_ctzll(free_)
        free_ &= ~_bit(v)
        cand = adj[v] & free_
        if cand:
            free_ &= ~_bit(__builtin_ctzll(cand))
            size += 1
    return size


cdef void _branch(Search* s, uint64_t rest, uint64_t cover, int size) nogil:
    cdef const uint64_t* adj = s.adj
    cdef bint changed = True
    cdef uint64_t scan, nbrs, b
    cdef int v, d, pick, pick_deg
    s.explored += 1
    while changed:
        changed = False
        scan = rest
        while scan:
            v = __builtin_ctzll(scan)
            scan &= ~_bit(v)
            if not (rest >> v) & 1:
                continue
            nbrs = adj[v] & rest
            if nbrs == 0:
                rest &= ~_bit(v)
                changed = True
            elif (nbrs & (nbrs - 1)) == 0:
                cover |= nbrs
                size += 1
                rest &= ~(_bit(v) | nbrs)
                changed = True
    if size >= s.best_size:
        return
    if rest == 0:
        s.best_size = size
        s.best_mask = cover
        return
    if size + _matching_bound(adj, rest) >= s.best_size:
        return

    pick = -1
    pick_deg = -1
    scan = rest
    while scan:
        v = __builtin_ctzll(scan)
        scan &= ~_bit(v)
        d = __builtin_popcountll(adj[v] & rest)
        if d > pick_deg:
            pick = v
            pick_deg = d
    b = _bit(pick)
    _branch(s, rest & ~b, cover | b, size + 1)
    nbrs = adj[pick] & rest
    _branch(s, rest & ~(b | nbrs), cover | nbrs, size + pick_deg)


def branch_and_bound_cover(list adj):
    cdef int n = len(adj)
    cdef uint64_t* a = _load(adj)
    cdef Search s
    s.adj = a
    s.best_size = n + 1
    s.best_mask = _all(n)
    s.explored = 0
    try:
        with nogil:
            _branch(&s, _all(n), 0, 0)
    finally:
        free(a)
    return int(s.best_mask), int(s.explored)
