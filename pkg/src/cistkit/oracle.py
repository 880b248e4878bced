"""Exhaustive reference computations with no pruning.

These walk every set partition of the vertex set (every coloring up to a
renaming of colors, which no predicate here can observe).  They are only
meant for small instances and for re-verifying anything suspicious that
the pruned solvers report.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .model import Coloring, Hypergraph


def set_partitions(n: int) -> Iterator[list[int]]:
    """Yield every partition of ``0..n-1`` as a block-label list."""
    labels = [0] * n

    def rec(v: int, blocks: int) -> Iterator[list[int]]:
        if v == n:
            yield list(labels)
            return
        for b in range(blocks + 1):
            labels[v] = b
            yield from rec(v + 1, max(blocks, b + 1))

    if n == 0:
        yield []
        return
    yield from rec(0, 0)


@dataclass
class BruteNumbers:
    chi_p: int
    chi_p2: int | None
    alpha: dict[int, int] = field(default_factory=dict)
    panchromatic_k: set[int] = field(default_factory=set)
    bipanchromatic_k: set[int] = field(default_factory=set)


def _profile(h: Hypergraph, labels: list[int]) -> tuple[int, bool, int]:
    k = max(labels) + 1
    pan = all(len({labels[v] for v in e}) == k for e in h.edges)
    sizes = [0] * k
    for c in labels:
        sizes[c] += 1
    return k, pan, sum(1 for s in sizes if s == 1)


def brute_numbers(h: Hypergraph) -> BruteNumbers:
    """chi_p, chi_p2 and alpha_k for every feasible k, by full enumeration."""
    out = BruteNumbers(chi_p=0, chi_p2=None)
    for labels in set_partitions(h.n):
        k, pan, singles = _profile(h, labels)
        if not pan:
            continue
        out.panchromatic_k.add(k)
        out.alpha[k] = min(out.alpha.get(k, k + 1), singles)
        if singles == 0:
            out.bipanchromatic_k.add(k)
    out.chi_p = max(out.panchromatic_k)
    if h.n >= 2:
        out.chi_p2 = max(out.bipanchromatic_k)
    return out


def brute_panchromatic_colorings(h: Hypergraph, k: int) -> Iterator[Coloring]:
    for labels in set_partitions(h.n):
        kk, pan, _ = _profile(h, labels)
        if kk == k and pan:
            yield Coloring(labels, k)


def brute_eq3(h: Hypergraph) -> tuple[int, int, int]:
    """(chi_p, alpha_{chi_p}, chi_p2) by enumeration."""
    nums = brute_numbers(h)
    return nums.chi_p, nums.alpha[nums.chi_p], nums.chi_p2
