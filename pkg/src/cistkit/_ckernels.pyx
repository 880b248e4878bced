# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; contract identical to ``_pykernels``.

Vertex masks are 64-bit, so instances are limited to 64 vertices and
64 colors.  Callers fall back to the Python kernels beyond that.
"""
from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport uint64_t

MAX_N = 64


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef struct PanState:
    int n
    int m
    int k
    int min_class
    int *order
    int *inc_start
    int *inc
    int *free_slots
    uint64_t *missing
    int *colors
    int *size
    int best
    int floor
    int *best_colors
    int found


cdef void _build_incidence(PanState *s, list edge_masks):
    cdef int n = s.n, m = s.m, e, v, pos = 0
    cdef uint64_t mask
    cdef int *count = <int *>calloc(n + 1, sizeof(int))
    for e in range(m):
        mask = <uint64_t>edge_masks[e]
        s.free_slots[e] = popcount(mask)
        for v in range(n):
            if (mask >> v) & 1:
                count[v] += 1
    s.inc_start[0] = 0
    for v in range(n):
        s.inc_start[v + 1] = s.inc_start[v] + count[v]
        count[v] = s.inc_start[v]
    for e in range(m):
        mask = <uint64_t>edge_masks[e]
        for v in range(n):
            if (mask >> v) & 1:
                s.inc[count[v]] = e
                count[v] += 1
    free(count)


cdef bint _pan_rec(PanState *s, int pos, int used, int need) nogil:
    cdef int v, remaining, top, c, j, e, nneed, nused
    cdef uint64_t bit
    cdef bint ok
    if pos == s.n:
        return True
    v = s.order[pos]
    remaining = s.n - pos - 1
    top = used + 1 if used < s.k else s.k
    cdef uint64_t *saved = <uint64_t *>malloc((s.inc_start[v + 1] - s.inc_start[v] + 1) * sizeof(uint64_t))
    for c in range(top):
        nneed = need - 1 if s.size[c] < s.min_class else need
        if nneed > remaining:
            continue
        bit = (<uint64_t>1) << c
        ok = True
        for j in range(s.inc_start[v], s.inc_start[v + 1]):
            e = s.inc[j]
            saved[j - s.inc_start[v]] = s.missing[e]
            s.free_slots[e] -= 1
            s.missing[e] &= ~bit
            if popcount(s.missing[e]) > s.free_slots[e]:
                ok = False
        if ok:
            s.colors[v] = c
            s.size[c] += 1
            nused = used + 1 if c == used else used
            if _pan_rec(s, pos + 1, nused, nneed):
                free(saved)
                return True
            s.size[c] -= 1
            s.colors[v] = -1
        for j in range(s.inc_start[v], s.inc_start[v + 1]):
            e = s.inc[j]
            s.free_slots[e] += 1
            s.missing[e] = saved[j - s.inc_start[v]]
    free(saved)
    return False


cdef bint _alpha_rec(PanState *s, int pos, int used, int singles) nogil:
    cdef int v, remaining, top, c, j, e, nused, nsingles, unopened, lb
    cdef uint64_t bit
    cdef bint ok, done
    if pos == s.n:
        if singles < s.best:
            s.best = singles
            s.found = 1
            for j in range(s.n):
                s.best_colors[j] = s.colors[j]
        return s.best == s.floor
    v = pos
    remaining = s.n - pos - 1
    top = used + 1 if used < s.k else s.k
    cdef uint64_t *saved = <uint64_t *>malloc((s.inc_start[v + 1] - s.inc_start[v] + 1) * sizeof(uint64_t))
    for c in range(top):
        nused = used + 1 if c == used else used
        if s.size[c] == 0:
            nsingles = singles + 1
        elif s.size[c] == 1:
            nsingles = singles - 1
        else:
            nsingles = singles
        unopened = s.k - nused
        if unopened > remaining:
            continue
        lb = nsingles + unopened - (remaining - unopened)
        if lb < 0:
            lb = 0
        if lb >= s.best:
            continue
        bit = (<uint64_t>1) << c
        ok = True
        for j in range(s.inc_start[v], s.inc_start[v + 1]):
            e = s.inc[j]
            saved[j - s.inc_start[v]] = s.missing[e]
            s.free_slots[e] -= 1
            s.missing[e] &= ~bit
            if popcount(s.missing[e]) > s.free_slots[e]:
                ok = False
        done = False
        if ok:
            s.colors[v] = c
            s.size[c] += 1
            done = _alpha_rec(s, pos + 1, nused, nsingles)
            s.size[c] -= 1
            s.colors[v] = -1
        for j in range(s.inc_start[v], s.inc_start[v + 1]):
            e = s.inc[j]
            s.free_slots[e] += 1
            s.missing[e] = saved[j - s.inc_start[v]]
        if done:
            free(saved)
            return True
    free(saved)
    return False


cdef PanState *_pan_alloc(int n, list edge_masks, int k, int min_class, order):
    cdef PanState *s = <PanState *>calloc(1, sizeof(PanState))
    cdef int m = len(edge_masks), e, v
    s.n = n
    s.m = m
    s.k = k
    s.min_class = min_class
    s.order = <int *>malloc((n + 1) * sizeof(int))
    s.inc_start = <int *>malloc((n + 1) * sizeof(int))
    s.inc = <int *>malloc((m * n + 1) * sizeof(int))
    s.free_slots = <int *>malloc((m + 1) * sizeof(int))
    s.missing = <uint64_t *>malloc((m + 1) * sizeof(uint64_t))
    s.colors = <int *>malloc((n + 1) * sizeof(int))
    s.best_colors = <int *>malloc((n + 1) * sizeof(int))
    s.size = <int *>calloc(k + 1, sizeof(int))
    for v in range(n):
        s.order[v] = order[v]
        s.colors[v] = -1
    for e in range(m):
        s.missing[e] = ((<uint64_t>1) << k) - 1 if k < 64 else ~(<uint64_t>0)
    _build_incidence(s, edge_masks)
    return s


cdef void _pan_free(PanState *s):
    free(s.order)
    free(s.inc_start)
    free(s.inc)
    free(s.free_slots)
    free(s.missing)
    free(s.colors)
    free(s.best_colors)
    free(s.size)
    free(s)


def pan_search(int n, edge_masks, int k, order, int min_class):
    if k < 1 or k * min_class > n or n > MAX_N or k > MAX_N:
        return None
    cdef list masks = list(edge_masks)
    for mask in masks:
        if int(mask).bit_count() < k:
            return None
    cdef PanState *s = _pan_alloc(n, masks, k, min_class, order)
    cdef bint ok
    with nogil:
        ok = _pan_rec(s, 0, 0, k * min_class)
    result = [s.colors[v] for v in range(n)] if ok else None
    _pan_free(s)
    return result


def min_unique_search(int n, edge_masks, int k):
    if k < 1 or k > n or n > MAX_N or k > MAX_N:
        return None
    cdef list masks = list(edge_masks)
    for mask in masks:
        if int(mask).bit_count() < k:
            return None
    cdef PanState *s = _pan_alloc(n, masks, k, 1, range(n))
    s.best = k + 1
    s.floor = 2 * k - n if 2 * k > n else 0
    with nogil:
        _alpha_rec(s, 0, 0, 0)
    result = (s.best, [s.best_colors[v] for v in range(n)]) if s.found else None
    _pan_free(s)
    return result


# --- CIST-partition search ----------------------------------------------

cdef struct PartState:
    int n
    int k
    int *order
    uint64_t *adj
    int *labels
    int *cnt          # n * k
    int *distinct
    int *open_nb
    int *size


cdef bint _connected(uint64_t mask, uint64_t *adj) nogil:
    cdef uint64_t seen, frontier, nxt, m, b
    if mask == 0:
        return False
    seen = mask & (~mask + 1)
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & (~m + 1)
            m ^= b
            nxt |= adj[__builtin_ctzll(b)]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


cdef bint _has_tree_component(uint64_t ma, uint64_t mb, uint64_t *adj) nogil:
    cdef uint64_t left = ma | mb, comp, frontier, nxt, m, b, other
    cdef int edges
    while left:
        comp = left & (~left + 1)
        frontier = comp
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & (~m + 1)
                m ^= b
                other = mb if (b & ma) else ma
                nxt |= adj[__builtin_ctzll(b)] & other
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        left &= ~comp
        edges = 0
        m = comp & ma
        while m:
            b = m & (~m + 1)
            m ^= b
            edges += popcount(adj[__builtin_ctzll(b)] & mb & comp)
        if edges < popcount(comp):
            return True
    return False


cdef bint _partition_ok(PartState *s) nogil:
    cdef uint64_t masks[64]
    cdef int c, a, b, v
    for c in range(s.k):
        masks[c] = 0
    for v in range(s.n):
        masks[s.labels[v]] |= (<uint64_t>1) << v
    for c in range(s.k):
        if not _connected(masks[c], s.adj):
            return False
    for a in range(s.k):
        for b in range(a + 1, s.k):
            if _has_tree_component(masks[a], masks[b], s.adj):
                return False
    return True


cdef bint _part_rec(PartState *s, int pos, int used, int need) nogil:
    cdef int v, remaining, top, c, nneed, w, idx
    cdef uint64_t m, b
    cdef bint ok
    if pos == s.n:
        return _partition_ok(s)
    v = s.order[pos]
    remaining = s.n - pos - 1
    top = used + 1 if used < s.k else s.k
    for c in range(top):
        nneed = need - 1 if s.size[c] < 2 else need
        if nneed > remaining:
            continue
        ok = True
        m = s.adj[v]
        while m:
            b = m & (~m + 1)
            m ^= b
            w = __builtin_ctzll(b)
            idx = w * s.k + c
            s.open_nb[w] -= 1
            s.cnt[idx] += 1
            if s.cnt[idx] == 1:
                s.distinct[w] += 1
            if s.distinct[w] + s.open_nb[w] < s.k:
                ok = False
        if ok:
            s.labels[v] = c
            s.size[c] += 1
            if _part_rec(s, pos + 1, used + 1 if c == used else used, nneed):
                return True
            s.size[c] -= 1
            s.labels[v] = -1
        m = s.adj[v]
        while m:
            b = m & (~m + 1)
            m ^= b
            w = __builtin_ctzll(b)
            idx = w * s.k + c
            s.open_nb[w] += 1
            s.cnt[idx] -= 1
            if s.cnt[idx] == 0:
                s.distinct[w] -= 1
    return False


def cist_partition_search(int n, adj, int k, order):
    if k < 2 or 2 * k > n or n > MAX_N:
        return None
    cdef PartState s
    cdef int v
    cdef bint ok
    for a in adj:
        if int(a).bit_count() < k:
            return None
    s.n = n
    s.k = k
    s.order = <int *>malloc(n * sizeof(int))
    s.adj = <uint64_t *>malloc(n * sizeof(uint64_t))
    s.labels = <int *>malloc(n * sizeof(int))
    s.cnt = <int *>calloc(n * k, sizeof(int))
    s.distinct = <int *>calloc(n, sizeof(int))
    s.open_nb = <int *>malloc(n * sizeof(int))
    s.size = <int *>calloc(k, sizeof(int))
    for v in range(n):
        s.order[v] = order[v]
        s.adj[v] = <uint64_t>adj[v]
        s.labels[v] = -1
        s.open_nb[v] = popcount(s.adj[v])
    with nogil:
        ok = _part_rec(&s, 0, 0, 2 * k)
    result = [s.labels[v] for v in range(n)] if ok else None
    free(s.order)
    free(s.adj)
    free(s.labels)
    free(s.cnt)
    free(s.distinct)
    free(s.open_nb)
    free(s.size)
    return result


def is_cist_partition(labels, adj, int k):
    cdef PartState s
    cdef int n = len(labels), v
    cdef bint ok
    if n > MAX_N or k > MAX_N:
        raise ValueError("too many vertices for the compiled kernel")
    s.n = n
    s.k = k
    s.adj = <uint64_t *>malloc(n * sizeof(uint64_t))
    s.labels = <int *>malloc(n * sizeof(int))
    for v in range(n):
        s.adj[v] = <uint64_t>adj[v]
        s.labels[v] = labels[v]
    ok = _partition_ok(&s)
    free(s.adj)
    free(s.labels)
    return ok
