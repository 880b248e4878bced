"""Combinatorial objects: hypergraphs, split graphs, colorings and trees.

Vertex ids are dense integers.  In a split graph the clique part ``D``
occupies ``0..d-1`` and the independent part ``I`` occupies ``d..d+i-1``;
clique edges are implicit and never stored.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from .errors import FormatError, InvalidInput, IsolatedVertex, NotSplit


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        norm = []
        for e in edges:
            members = tuple(sorted(e))
            if not members:
                raise InvalidInput("empty hyperedge")
            if len(set(members)) != len(members):
                raise InvalidInput(f"duplicate vertex in hyperedge {members}")
            if members[0] < 0 or members[-1] >= n:
                raise InvalidInput(f"hyperedge {members} has ids outside 0..{n - 1}")
            norm.append(members)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << v for v in e) for e in self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return tuple(deg)

    def uncovered(self) -> list[int]:
        return [v for v, dv in enumerate(self.degrees) if dv == 0]

    def is_normalized(self) -> bool:
        return self.m >= 1 and not self.uncovered()

    def is_uniform(self, k: int) -> bool:
        return all(len(e) == k for e in self.edges)

    def min_edge_size(self) -> int:
        return min(len(e) for e in self.edges)

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, edges={[list(e) for e in self.edges]})"


@dataclass(frozen=True)
class Graph:
    """Plain undirected simple graph on ``0..n-1``."""

    n: int
    adj: tuple[frozenset[int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise InvalidInput("self-loop")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adj))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in a) for a in self.adj)

    def is_connected(self, subset: Iterable[int] | None = None) -> bool:
        verts = set(self.vertices if subset is None else subset)
        if not verts:
            return False
        start = next(iter(verts))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in self.adj[u]:
                if w in verts and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)


def complete_graph(d: int) -> Graph:
    return Graph(d, tuple(frozenset(w for w in range(d) if w != v) for v in range(d)))


@dataclass(frozen=True)
class SplitGraph:
    d: int
    i: int
    cross_adj: tuple[tuple[int, ...], ...]

    def __init__(self, d: int, cross_adj: Iterable[Iterable[int]]):
        rows = []
        for j, nb in enumerate(cross_adj):
            row = tuple(sorted(set(nb)))
            if not row:
                raise InvalidInput(f"I-vertex {d + j} has no D-neighbor")
            if row[0] < 0 or row[-1] >= d:
                raise NotSplit(f"I-vertex {d + j} is adjacent to a non-clique vertex")
            rows.append(row)
        if d < 1:
            raise InvalidInput("clique part must be nonempty")
        object.__setattr__(self, "d", int(d))
        object.__setattr__(self, "i", len(rows))
        object.__setattr__(self, "cross_adj", tuple(rows))

    @property
    def order(self) -> int:
        return self.d + self.i

    def i_vertices(self) -> range:
        return range(self.d, self.d + self.i)

    def neighbors_in_i(self, x: int) -> list[int]:
        return [self.d + j for j, row in enumerate(self.cross_adj) if x in row]

    def is_normalized(self) -> bool:
        covered = {x for row in self.cross_adj for x in row}
        return len(covered) == self.d

    def edge_count(self) -> int:
        return self.d * (self.d - 1) // 2 + sum(len(r) for r in self.cross_adj)

    @cached_property
    def graph(self) -> Graph:
        n = self.order
        adj: list[set[int]] = [set(range(self.d)) - {v} for v in range(self.d)]
        adj += [set() for _ in range(self.i)]
        for j, row in enumerate(self.cross_adj):
            y = self.d + j
            for x in row:
                adj[x].add(y)
                adj[y].add(x)
        return Graph(n, tuple(frozenset(a) for a in adj))

    def __repr__(self) -> str:
        return f"SplitGraph(d={self.d}, cross_adj={[list(r) for r in self.cross_adj]})"


def as_graph(host: Graph | SplitGraph) -> Graph:
    return host.graph if isinstance(host, SplitGraph) else host


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int

    def __init__(self, colors: Iterable[int], k: int | None = None):
        cols = tuple(int(c) for c in colors)
        if k is None:
            k = max(cols) + 1 if cols else 0
        if k < 1:
            raise InvalidInput("a coloring needs k >= 1")
        used = set(cols)
        if any(c < 0 or c >= k for c in cols):
            raise InvalidInput(f"color ids must lie in 0..{k - 1}")
        if len(used) != k:
            raise InvalidInput(f"colors {sorted(set(range(k)) - used)} are unused")
        object.__setattr__(self, "colors", cols)
        object.__setattr__(self, "k", int(k))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> Coloring:
        """Compact arbitrary labels to ``0..k-1`` by first occurrence."""
        remap: dict[int, int] = {}
        out = []
        for lab in labels:
            if lab not in remap:
                remap[lab] = len(remap)
            out.append(remap[lab])
        return cls(out, len(remap))

    @property
    def n(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def class_sizes(self) -> list[int]:
        cnt = Counter(self.colors)
        return [cnt[c] for c in range(self.k)]

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out

    def unique_colors(self) -> list[int]:
        return [c for c, s in enumerate(self.class_sizes()) if s == 1]

    def canonical(self) -> Coloring:
        return Coloring.from_labels(self.colors)


@dataclass(frozen=True)
class SpanningTree:
    edges: frozenset[tuple[int, int]]

    def __init__(self, edges: Iterable[Sequence[int]]):
        object.__setattr__(self, "edges", frozenset(_edge(int(u), int(v)) for u, v in edges))

    def degrees(self, n: int) -> list[int]:
        deg = [0] * n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def internal_vertices(self, n: int) -> set[int]:
        return {v for v, dv in enumerate(self.degrees(n)) if dv > 1}

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class CistCertificate:
    trees: tuple[SpanningTree, ...]

    def __init__(self, trees: Iterable[SpanningTree | Iterable[Sequence[int]]]):
        ts = tuple(t if isinstance(t, SpanningTree) else SpanningTree(t) for t in trees)
        object.__setattr__(self, "trees", ts)

    @property
    def k(self) -> int:
        return len(self.trees)

    def to_json(self) -> dict:
        return {"k": self.k, "trees": [[list(e) for e in t.sorted_edges()] for t in self.trees]}

    @classmethod
    def from_json(cls, data: dict) -> CistCertificate:
        try:
            trees = data["trees"]
            cert = cls(trees)
            k = int(data.get("k", len(trees)))
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"malformed trees.json: {exc}") from exc
        if k != cert.k:
            raise FormatError(f"trees.json declares k={k} but lists {cert.k} trees")
        return cert


@dataclass(frozen=True)
class CistPartition:
    classes: tuple[frozenset[int], ...]

    def __init__(self, classes: Iterable[Iterable[int]]):
        object.__setattr__(self, "classes", tuple(frozenset(c) for c in classes))

    @property
    def k(self) -> int:
        return len(self.classes)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> CistPartition:
        k = max(labels) + 1
        classes: list[set[int]] = [set() for _ in range(k)]
        for v, c in enumerate(labels):
            classes[c].add(v)
        return cls(classes)

    def is_partition_of(self, n: int) -> bool:
        seen: set[int] = set()
        for c in self.classes:
            if not c or seen & c:
                return False
            seen |= c
        return seen == set(range(n))


# --- correspondence --------------------------------------------------------

def hypergraph_of_split(g: SplitGraph) -> Hypergraph:
    return Hypergraph(g.d, g.cross_adj)


def split_of_hypergraph(h: Hypergraph) -> SplitGraph:
    missing = h.uncovered()
    if missing:
        raise IsolatedVertex(f"vertices {missing} lie in no hyperedge; normalize first")
    return SplitGraph(h.n, h.edges)


def normalize_split(d: int, i_adj: Sequence[Iterable[int]]) -> SplitGraph:
    """Build a normalized split graph from a possibly degenerate partition.

    ``i_adj[j]`` lists the neighbours of I-vertex ``d + j`` by global id.
    A clique vertex without I-neighbours is moved into I, keeping its
    adjacency to the rest of D.  Once one vertex has moved, every remaining
    clique vertex sees it, so at most one vertex ever moves; the
    highest-id candidate is chosen.  Surviving clique vertices keep their
    relative order; the moved vertex becomes the last I-vertex.
    """
    rows = []
    for j, nb in enumerate(i_adj):
        nb = set(nb)
        if any(v >= d for v in nb):
            raise NotSplit(f"I-vertex {d + j} has a neighbour inside I")
        rows.append(nb)
    covered = set().union(*rows) if rows else set()
    lonely = [x for x in range(d) if x not in covered]
    if not lonely:
        return SplitGraph(d, rows)
    if d == 1:
        raise InvalidInput("a single clique vertex with no I-neighbour cannot be normalized")
    moved = lonely[-1]
    relabel = {x: (x if x < moved else x - 1) for x in range(d) if x != moved}
    new_rows = [{relabel[x] for x in r} for r in rows]
    new_rows.append(set(range(d - 1)))
    return SplitGraph(d - 1, new_rows)


class Component(NamedTuple):
    size: int
    edges: int
    is_tree: bool
    vertices: frozenset[int]


def bipartite_component_check(host: Graph | SplitGraph, a: Iterable[int], b: Iterable[int]) -> list[Component]:
    """Components of the cross subgraph between ``a`` and ``b``.

    Only a-b edges are kept.  A component is a tree when it has fewer
    edges than vertices; isolated vertices therefore count as trees.
    """
    graph = as_graph(host)
    a, b = set(a), set(b)
    if a & b:
        raise InvalidInput("vertex sets must be disjoint")
    side = {v: 0 for v in a} | {v: 1 for v in b}
    seen: set[int] = set()
    out = []
    for s in sorted(side):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        edge_count = 0
        while stack:
            u = stack.pop()
            for w in graph.adj[u]:
                if w in side and side[w] != side[u]:
                    if side[u] == 0:
                        edge_count += 1
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
        seen |= comp
        out.append(Component(len(comp), edge_count, edge_count < len(comp), frozenset(comp)))
    return out


# --- file formats ----------------------------------------------------------

def _content_lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        toks = raw.split()
        if not toks or toks[0] == "c":
            continue
        out.append(toks)
    return out


def _header(lines: list[list[str]], tag: str, fmt: str) -> tuple[int, int]:
    if not lines or lines[0][0] != tag or len(lines[0]) != 4 or lines[0][1] != fmt:
        raise FormatError(f"expected header '{tag} {fmt} <a> <b>'")
    try:
        return int(lines[0][2]), int(lines[0][3])
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def _ints(toks: list[str]) -> list[int]:
    try:
        return [int(t) for t in toks]
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def parse_hypergraph(text: str) -> Hypergraph:
    lines = _content_lines(text)
    n, m = _header(lines, "p", "hg")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} hyperedges, found {len(body)}")
    return Hypergraph(n, [_ints(t) for t in body])


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"p hg {h.n} {h.m}"] + [" ".join(map(str, e)) for e in h.edges]
    return "\n".join(lines) + "\n"


def parse_split(text: str) -> SplitGraph:
    lines = _content_lines(text)
    d, i = _header(lines, "p", "sg")
    body = lines[1:]
    if len(body) != i:
        raise FormatError(f"header announces {i} I-vertices, found {len(body)}")
    return SplitGraph(d, [_ints(t) for t in body])


def format_split(g: SplitGraph) -> str:
    lines = [f"p sg {g.d} {g.i}"] + [" ".join(map(str, r)) for r in g.cross_adj]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    lines = _content_lines(text)
    if not lines or lines[0][:2] != ["s", "col"] or len(lines[0]) != 3:
        raise FormatError("expected header 's col <k>'")
    k = _ints(lines[0][2:])[0]
    pairs = sorted((v, c) for v, c in (_ints(t) for t in lines[1:]))
    if [v for v, _ in pairs] != list(range(len(pairs))):
        raise FormatError("coloring must list every vertex 0..n-1 exactly once")
    return Coloring([c for _, c in pairs], k)


def format_coloring(c: Coloring) -> str:
    lines = [f"s col {c.k}"] + [f"{v} {col}" for v, col in enumerate(c.colors)]
    return "\n".join(lines) + "\n"


def format_certificate(cert: CistCertificate) -> str:
    return json.dumps(cert.to_json()) + "\n"


def parse_certificate(text: str) -> CistCertificate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"trees.json: {exc}") from exc
    return CistCertificate.from_json(data)


def read_hypergraph(path: str | Path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text())


def read_split(path: str | Path) -> SplitGraph:
    return parse_split(Path(path).read_text())


def read_coloring(path: str | Path) -> Coloring:
    return parse_coloring(Path(path).read_text())


def read_certificate(path: str | Path) -> CistCertificate:
    return parse_certificate(Path(path).read_text())


def write_text(path: str | Path, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="\n") as fh:
        fh.write(text)
    return path
