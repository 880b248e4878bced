"""Exact solvers for panchromatic and bipanchromatic hypergraph colorings.

A coloring is panchromatic when every hyperedge sees all k colors, and
bipanchromatic when additionally no color class is a singleton.  The
solvers are backtracking searches (see ``kernels``) with per-edge
missing-color masks and canonical color opening.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import kernels
from .errors import Infeasible, InvalidInput, TooFewVertices
from .model import Coloring, Hypergraph


@dataclass(frozen=True)
class ColoringStats:
    k: int
    class_sizes: tuple[int, ...]
    unique_colors: tuple[int, ...]

    @classmethod
    def of(cls, c: Coloring) -> ColoringStats:
        return cls(c.k, tuple(c.class_sizes()), tuple(c.unique_colors()))


def _check_instance(h: Hypergraph) -> None:
    if h.m == 0:
        raise InvalidInput("hypergraph has no hyperedges")


def _check_k(k: int) -> None:
    if k < 1:
        raise InvalidInput("k must be >= 1")


def _check_coloring(h: Hypergraph, c: Coloring) -> None:
    if c.n != h.n:
        raise InvalidInput(f"coloring covers {c.n} vertices, hypergraph has {h.n}")


def is_panchromatic(h: Hypergraph, c: Coloring) -> bool:
    _check_coloring(h, c)
    return all(len({c[v] for v in e}) == c.k for e in h.edges)


def is_bipanchromatic(h: Hypergraph, c: Coloring) -> bool:
    return is_panchromatic(h, c) and min(c.class_sizes()) >= 2


def degree_order(h: Hypergraph) -> list[int]:
    deg = h.degrees
    return sorted(range(h.n), key=lambda v: (-deg[v], v))


def _search(h: Hypergraph, k: int, min_class: int) -> Coloring | None:
    found = kernels.pan_search(h.n, h.edge_masks, k, degree_order(h), min_class)
    if found is None:
        return None
    return Coloring.from_labels(found)


def exists_panchromatic(h: Hypergraph, k: int) -> Coloring | None:
    _check_k(k)
    _check_instance(h)
    return _search(h, k, 1)


def exists_bipanchromatic(h: Hypergraph, k: int) -> Coloring | None:
    _check_k(k)
    _check_instance(h)
    return _search(h, k, 2)


def panchromatic_number(h: Hypergraph) -> tuple[int, Coloring]:
    """Largest k admitting a panchromatic k-coloring, with a witness."""
    _check_instance(h)
    for k in range(min(h.min_edge_size(), h.n), 0, -1):
        witness = _search(h, k, 1)
        if witness is not None:
            return k, witness
    raise AssertionError("k = 1 is always feasible")


def bipanchromatic_number(h: Hypergraph, chi_p: int | None = None) -> tuple[int, Coloring]:
    """Largest k admitting a bipanchromatic k-coloring, with a witness.

    The search starts at ``min(chi_p, n // 2)``; pass ``chi_p`` when it is
    already known.
    """
    _check_instance(h)
    if h.n < 2:
        raise TooFewVertices("a bipanchromatic coloring needs at least two vertices")
    if chi_p is None:
        chi_p, _ = panchromatic_number(h)
    for k in range(min(chi_p, h.n // 2), 0, -1):
        witness = _search(h, k, 2)
        if witness is not None:
            return k, witness
    raise AssertionError("k = 1 is always feasible when n >= 2")


def min_unique_colors(h: Hypergraph, k: int) -> tuple[int, Coloring]:
    """Minimum number of singleton color classes over panchromatic k-colorings.

    Ties go to the lexicographically smallest coloring vector.
    """
    _check_k(k)
    _check_instance(h)
    found = kernels.min_unique_search(h.n, h.edge_masks, k)
    if found is None:
        raise Infeasible(f"no panchromatic {k}-coloring exists")
    alpha, colors = found
    return alpha, Coloring(colors, k)


def group_unique_colors(h: Hypergraph, c: Coloring) -> Coloring:
    """Pair off unique colors until none is left.

    The vertex of the first color in each pair takes the second color; a
    leftover unique color is folded into the smallest non-unique color.
    Color ids are then compacted in increasing order.
    """
    if not is_panchromatic(h, c):
        raise InvalidInput("grouping needs a panchromatic coloring")
    colors = list(c.colors)
    unique = c.unique_colors()
    holder = {col: colors.index(col) for col in unique}
    for a, b in zip(unique[0::2], unique[1::2]):
        colors[holder[a]] = b
    if len(unique) % 2:
        last = unique[-1]
        sizes: dict[int, int] = {}
        for col in colors:
            sizes[col] = sizes.get(col, 0) + 1
        shared = sorted(col for col, s in sizes.items() if s >= 2)
        if shared:
            colors[holder[last]] = shared[0]
    survivors = sorted(set(colors))
    remap = {col: i for i, col in enumerate(survivors)}
    return Coloring([remap[col] for col in colors], len(survivors))


def iter_panchromatic(h: Hypergraph, k: int) -> Iterator[Coloring]:
    """Every panchromatic k-coloring up to renaming of colors, in
    lexicographic order of the canonical color vector."""
    _check_k(k)
    _check_instance(h)
    n = h.n
    if k > n or h.min_edge_size() < k:
        return
    inc: list[list[int]] = [[] for _ in range(n)]
    for i, e in enumerate(h.edges):
        for v in e:
            inc[v].append(i)
    seen = [set() for _ in h.edges]
    left = [len(e) for e in h.edges]
    colors = [-1] * n

    def rec(v: int, used: int) -> Iterator[Coloring]:
        if v == n:
            if used == k:
                yield Coloring(colors, k)
            return
        if k - used > n - v:
            return
        for col in range(min(used + 1, k)):
            added = []
            ok = True
            for i in inc[v]:
                left[i] -= 1
                if col not in seen[i]:
                    seen[i].add(col)
                    added.append(i)
                if k - len(seen[i]) > left[i]:
                    ok = False
            if ok:
                colors[v] = col
                yield from rec(v + 1, max(used, col + 1))
            for i in inc[v]:
                left[i] += 1
            for i in added:
                seen[i].discard(col)
        colors[v] = -1

    yield from rec(0, 0)
