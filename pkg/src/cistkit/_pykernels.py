"""Pure-Python search kernels.

Same contract as the compiled ``_ckernels`` module; used when the
extension is unavailable or ``CISTKIT_PURE=1`` is set.  Vertex sets are
int bitmasks.
"""
from __future__ import annotations

import sys

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


def _incidence(n, edge_masks):
    inc = [[] for _ in range(n)]
    for e, mask in enumerate(edge_masks):
        for v in range(n):
            if mask >> v & 1:
                inc[v].append(e)
    return inc


def pan_search(n, edge_masks, k, order, min_class):
    """First coloring (DFS along ``order``) with exactly ``k`` colors such that
    every edge sees all ``k`` colors and every class has >= ``min_class``
    vertices.  Returns the color list indexed by vertex id, or None.
    """
    if k < 1 or k * min_class > n:
        return None
    full = (1 << k) - 1
    free = [bin(mask).count("1") for mask in edge_masks]
    if any(f < k for f in free):
        return None
    missing = [full] * len(edge_masks)
    inc = _incidence(n, edge_masks)
    colors = [-1] * n
    size = [0] * k

    def rec(pos, used, need):
        if pos == n:
            return True
        v = order[pos]
        remaining = n - pos - 1
        top = used + 1 if used < k else k
        for c in range(top):
            bit = 1 << c
            saved = []
            ok = True
            for e in inc[v]:
                saved.append((e, missing[e]))
                free[e] -= 1
                missing[e] &= ~bit
                if bin(missing[e]).count("1") > free[e]:
                    ok = False
            nneed = need - 1 if size[c] < min_class else need
            if ok and nneed <= remaining:
                colors[v] = c
                size[c] += 1
                if rec(pos + 1, used + (c == used), nneed):
                    return True
                size[c] -= 1
                colors[v] = -1
            for e, old in reversed(saved):
                free[e] += 1
                missing[e] = old
        return False

    if rec(0, 0, k * min_class):
        return colors
    return None


def min_unique_search(n, edge_masks, k):
    """Panchromatic ``k``-coloring minimising the number of singleton
    classes.  Vertices are branched in id order and colors in increasing
    order, so the first optimum found is the lexicographically smallest.
    Returns ``(alpha, colors)`` or None when no panchromatic k-coloring
    exists.
    """
    if k < 1 or k > n:
        return None
    full = (1 << k) - 1
    free = [bin(mask).count("1") for mask in edge_masks]
    if any(f < k for f in free):
        return None
    missing = [full] * len(edge_masks)
    inc = _incidence(n, edge_masks)
    colors = [-1] * n
    size = [0] * k
    floor = max(0, 2 * k - n)
    best = [k + 1, None]

    def rec(pos, used, singles):
        if pos == n:
            if singles < best[0]:
                best[0] = singles
                best[1] = list(colors)
            return best[0] == floor
        v = pos
        remaining = n - pos - 1
        top = used + 1 if used < k else k
        for c in range(top):
            nused = used + (c == used)
            nsingles = singles + (1 if size[c] == 0 else -1 if size[c] == 1 else 0)
            unopened = k - nused
            if unopened > remaining:
                continue
            if max(0, nsingles + unopened - (remaining - unopened)) >= best[0]:
                continue
            bit = 1 << c
            saved = []
            ok = True
            for e in inc[v]:
                saved.append((e, missing[e]))
                free[e] -= 1
                missing[e] &= ~bit
                if bin(missing[e]).count("1") > free[e]:
                    ok = False
            if ok:
                colors[v] = c
                size[c] += 1
                done = rec(pos + 1, nused, nsingles)
                size[c] -= 1
                colors[v] = -1
            else:
                done = False
            for e, old in reversed(saved):
                free[e] += 1
                missing[e] = old
            if done:
                return True
        return False

    rec(0, 0, 0)
    if best[1] is None:
        return None
    return best[0], best[1]


def _connected(mask, adj):
    if not mask:
        return False
    low = mask & -mask
    seen = low
    frontier = low
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= adj[b.bit_length() - 1]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def _has_tree_component(ma, mb, adj):
    union = ma | mb
    left = union
    while left:
        start = left & -left
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                other = mb if b & ma else ma
                nxt |= adj[b.bit_length() - 1] & other
            nxt &= ~comp
            comp |= nxt
            frontier = nxt
        left &= ~comp
        edges = 0
        m = comp & ma
        while m:
            b = m & -m
            m ^= b
            edges += bin(adj[b.bit_length() - 1] & mb & comp).count("1")
        if edges < bin(comp).count("1"):
            return True
    return False


def is_cist_partition(labels, adj, k):
    masks = [0] * k
    for v, c in enumerate(labels):
        masks[c] |= 1 << v
    for c in range(k):
        if not _connected(masks[c], adj):
            return False
    for a in range(k):
        for b in range(a + 1, k):
            if _has_tree_component(masks[a], masks[b], adj):
                return False
    return True


def cist_partition_search(n, adj, k, order):
    """First k-CIST-partition found along ``order`` (k >= 2), as a label
    list, or None.

    Pruning is generic: classes hold >= 2 vertices (a singleton class is a
    star, hence a tree component) and every vertex must end up with a
    neighbour in each of the k classes (its own class for connectivity,
    the others to avoid a singleton component).
    """
    if k < 2 or 2 * k > n:
        return None
    labels = [-1] * n
    cnt = [[0] * k for _ in range(n)]
    distinct = [0] * n
    open_nb = [bin(a).count("1") for a in adj]
    if any(o < k for o in open_nb):
        return None
    nbrs = [[w for w in range(n) if a >> w & 1] for a in adj]
    size = [0] * k

    def rec(pos, used, need):
        if pos == n:
            return is_cist_partition(labels, adj, k)
        v = order[pos]
        remaining = n - pos - 1
        top = used + 1 if used < k else k
        for c in range(top):
            nneed = need - 1 if size[c] < 2 else need
            if nneed > remaining:
                continue
            ok = True
            for w in nbrs[v]:
                open_nb[w] -= 1
                cnt[w][c] += 1
                if cnt[w][c] == 1:
                    distinct[w] += 1
                if distinct[w] + open_nb[w] < k:
                    ok = False
            if ok:
                labels[v] = c
                size[c] += 1
                if rec(pos + 1, used + (c == used), nneed):
                    return True
                size[c] -= 1
                labels[v] = -1
            for w in nbrs[v]:
                open_nb[w] += 1
                cnt[w][c] -= 1
                if cnt[w][c] == 0:
                    distinct[w] -= 1
        return False

    if rec(0, 0, 2 * k):
        return labels
    return None
