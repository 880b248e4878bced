"""Completely independent spanning trees (CIST) in split graphs.

Trees are CIST when they are pairwise edge-disjoint and every vertex is
internal (degree > 1) in at most one of them.  Equivalently, the vertex
set admits a k-CIST-partition: k classes, each inducing a connected
subgraph, such that the bipartite cross graph between any two classes
has no tree component.  Both views are implemented here and checked
against each other in the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from . import kernels
from .colorings import (
    bipanchromatic_number,
    group_unique_colors,
    is_bipanchromatic,
    is_panchromatic,
    iter_panchromatic,
    panchromatic_number,
)
from .errors import (
    InvalidCertificate,
    InvalidClasses,
    InvalidInput,
    NotBipanchromatic,
    NotConnected,
    PreconditionViolated,
    TooLarge,
    VerificationFailure,
)
from .model import (
    CistCertificate,
    CistPartition,
    Coloring,
    Graph,
    SpanningTree,
    SplitGraph,
    as_graph,
    bipartite_component_check,
    complete_graph,
    hypergraph_of_split,
)

EXACT_LIMIT = 14


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str | None = None
    detail: tuple = ()

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return f"{self.reason}{self.detail}" if self.detail else str(self.reason)


OK = Verdict(True)


def _tree_shape(graph: Graph, tree: SpanningTree) -> Verdict:
    n = graph.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cyclic = False
    for u, v in tree.edges:
        if not (0 <= u < n and 0 <= v < n) or not graph.has_edge(u, v):
            return Verdict(False, "NotInHost", (u, v))
        ru, rv = find(u), find(v)
        if ru == rv:
            cyclic = True
        else:
            parent[ru] = rv
    if len({find(v) for v in range(n)}) != 1:
        return Verdict(False, "NotSpanning")
    if cyclic:
        return Verdict(False, "NotTree")
    return OK


def verify_cist(host: Graph | SplitGraph, trees: CistCertificate | Sequence[SpanningTree]) -> Verdict:
    graph = as_graph(host)
    trees = trees.trees if isinstance(trees, CistCertificate) else tuple(trees)
    for idx, t in enumerate(trees):
        shape = _tree_shape(graph, t)
        if not shape:
            return Verdict(False, shape.reason, (idx,) + shape.detail)
    owner: dict[tuple[int, int], int] = {}
    for idx, t in enumerate(trees):
        for e in t.sorted_edges():
            if e in owner:
                return Verdict(False, "SharedEdge", e)
            owner[e] = idx
    internal_in: dict[int, int] = {}
    for idx, t in enumerate(trees):
        for v in sorted(t.internal_vertices(graph.n)):
            if v in internal_in:
                return Verdict(False, "DegreeViolation", (v,))
            internal_in[v] = idx
    return OK


def verify_cist_partition(host: Graph | SplitGraph, p: CistPartition) -> Verdict:
    graph = as_graph(host)
    if not p.is_partition_of(graph.n):
        return Verdict(False, "NotPartition")
    for i, cls in enumerate(p.classes):
        if not graph.is_connected(cls):
            return Verdict(False, "DisconnectedClass", (i,))
    for i, j in combinations(range(p.k), 2):
        for comp in bipartite_component_check(graph, p.classes[i], p.classes[j]):
            if comp.is_tree:
                return Verdict(False, "TreeComponent", (i, j))
    return OK


def internal_sets(host: Graph | SplitGraph, cert: CistCertificate) -> list[set[int]]:
    n = as_graph(host).n
    return [t.internal_vertices(n) for t in cert.trees]


def partition_from_trees(host: Graph | SplitGraph, cert: CistCertificate) -> CistPartition:
    """Class i holds the internal vertices of tree i; vertices that are
    leaves everywhere join the class of their cover in the first tree."""
    graph = as_graph(host)
    sets = internal_sets(graph, cert)
    owner = {v: i for i, s in enumerate(sets) for v in s}
    classes = [set(s) for s in sets]
    first = cert.trees[0]
    for v in range(graph.n):
        if v in owner:
            continue
        cover = next(u for e in first.edges if v in e for u in e if u != v)
        classes[owner.get(cover, 0)].add(v)
    return CistPartition(classes)


def _require_certificate(host, cert) -> None:
    verdict = verify_cist(host, cert)
    if not verdict:
        raise VerificationFailure(f"constructed trees failed verification: {verdict}")


# --- trees from colorings ---------------------------------------------------

def _clique_trees(classes: Sequence[Sequence[int]]) -> list[list[tuple[int, int]]]:
    """Edge-disjoint spanning trees of the clique on the union of ``classes``.

    Tree i runs a path through class i; class j's first member hangs on
    class i's first member if j < i, else on its second; class j's second
    member hangs on class i's second member if j < i, else on its first;
    any further members of class j hang on class i's first member.
    """
    trees = []
    for i, ci in enumerate(classes):
        edges = list(zip(ci, ci[1:]))
        for j, cj in enumerate(classes):
            if j == i:
                continue
            first, second = (ci[0], ci[1]) if j < i else (ci[1], ci[0])
            edges.append((cj[0], first))
            if len(cj) > 1:
                edges.append((cj[1], second))
            edges.extend((x, ci[0]) for x in cj[2:])
        trees.append(edges)
    return trees


def clique_cist(d: int, classes: Iterable[Iterable[int]]) -> CistCertificate:
    classes = [sorted(c) for c in classes]
    flat = [v for c in classes for v in c]
    if any(len(c) < 2 for c in classes):
        raise InvalidClasses("every class needs at least two vertices")
    if len(set(flat)) != len(flat):
        raise InvalidClasses("classes overlap")
    if sorted(flat) != list(range(d)):
        raise InvalidClasses(f"classes must cover 0..{d - 1}")
    if len(classes) < 2 or d < 4:
        raise InvalidClasses("need at least two classes on at least four vertices")
    cert = CistCertificate(_clique_trees(classes))
    _require_certificate(complete_graph(d), cert)
    return cert


def cist_from_bipanchromatic(g: SplitGraph, c: Coloring) -> CistCertificate:
    """k CIST from a bipanchromatic k-coloring of H(G).

    Class-i clique vertices are the internal vertices of tree i; each
    I-vertex is a leaf everywhere, hanging in tree i on its lowest-id
    neighbour of color i.
    """
    h = hypergraph_of_split(g)
    if not is_bipanchromatic(h, c):
        raise NotBipanchromatic("coloring is not bipanchromatic for H(G)")
    trees = _clique_trees(c.classes())
    for i, edges in enumerate(trees):
        for j, row in enumerate(g.cross_adj):
            edges.append((g.d + j, next(x for x in row if c[x] == i)))
    cert = CistCertificate(trees)
    _require_certificate(g, cert)
    return cert


def cist_from_panchromatic(g: SplitGraph, c: Coloring) -> CistCertificate:
    grouped = group_unique_colors(hypergraph_of_split(g), c)
    return cist_from_bipanchromatic(g, grouped)


def _unique_color_plan(g: SplitGraph, c: Coloring) -> dict[int, tuple[int, int, int]] | None:
    """For each non-unique color i pick (y, x1, x2): an I-vertex y with
    degree > k and two of its neighbours of color i."""
    plan = {}
    (unique,) = c.unique_colors()
    for i in range(c.k):
        if i == unique:
            continue
        for j, row in enumerate(g.cross_adj):
            if len(row) <= c.k:
                continue
            same = [x for x in row if c[x] == i]
            if len(same) >= 2:
                plan[i] = (g.d + j, same[0], same[1])
                break
        else:
            return None
    return plan


def cist_with_unique_color(g: SplitGraph, c: Coloring) -> CistCertificate | None:
    """k CIST from a panchromatic k-coloring with exactly one unique color.

    The unique-color vertex x is the only clique vertex internal in its
    tree T_u.  For every other color i a chosen I-vertex y (degree > k,
    neighbours x1, x2 of color i) is internal in T_u: x covers every
    I-vertex and every clique vertex except the x2's, and each y covers
    its x2.  In T_i, x hangs on x2 and y hangs on x1, so the edge x-x2
    belongs to T_i while y-x2 belongs to T_u.
    """
    h = hypergraph_of_split(g)
    if not is_panchromatic(h, c):
        raise PreconditionViolated("coloring is not panchromatic for H(G)")
    if len(c.unique_colors()) != 1:
        raise PreconditionViolated("coloring must have exactly one unique color")
    if h.is_uniform(c.k):
        raise PreconditionViolated(f"H(G) is {c.k}-uniform")
    plan = _unique_color_plan(g, c)
    if plan is None:
        return None
    (unique,) = c.unique_colors()
    x = c.colors.index(unique)
    others = [i for i in range(c.k) if i != unique]
    classes = [sorted(v for v in range(g.d) if c[v] == i) for i in others]
    sub = _clique_trees(classes)
    trees: list[list[tuple[int, int]]] = [[] for _ in range(c.k)]
    for i, edges in zip(others, sub):
        y, x1, x2 = plan[i]
        edges.append((x, x2))
        for j, row in enumerate(g.cross_adj):
            yv = g.d + j
            if yv == y:
                edges.append((yv, x1))
            else:
                edges.append((yv, next(v for v in row if c[v] == i)))
        trees[i] = edges
    covered_by_y = {x2: y for y, _, x2 in plan.values()}
    hub = [(x, v) for v in range(g.d) if v != x and v not in covered_by_y]
    hub += [(x, yv) for yv in g.i_vertices()]
    hub += [(y, x2) for x2, y in covered_by_y.items()]
    trees[unique] = hub
    cert = CistCertificate(trees)
    _require_certificate(g, cert)
    return cert


def cist_to_coloring(g: SplitGraph, cert: CistCertificate) -> Coloring:
    """Color each clique vertex by the tree it is internal in.

    A clique vertex that is a leaf in every tree takes the tree index of
    the internal vertex covering it in the first tree.
    """
    if cert.k < 2:
        raise InvalidCertificate("need at least two trees")
    verdict = verify_cist(g, cert)
    if not verdict:
        raise InvalidCertificate(str(verdict))
    sets = internal_sets(g, cert)
    owner = {v: i for i, s in enumerate(sets) for v in s}
    colors = []
    first = cert.trees[0]
    for v in range(g.d):
        if v in owner:
            colors.append(owner[v])
        else:
            cover = next(u for e in first.edges if v in e for u in e if u != v)
            colors.append(owner[cover])
    return Coloring(colors, cert.k)


def uniform_dominating_obstruction(g: SplitGraph, k: int) -> int | None:
    """A clique vertex adjacent to all of I when H(G) is k-uniform."""
    if k < 2 or not hypergraph_of_split(g).is_uniform(k):
        return None
    for x in range(g.d):
        if all(x in row for row in g.cross_adj):
            return x
    return None


# --- exact search -----------------------------------------------------------

def _search_order(graph: Graph) -> list[int]:
    return sorted(range(graph.n), key=lambda v: (-graph.degree(v), v))


def find_cist_partition(host: Graph | SplitGraph, k: int) -> CistPartition | None:
    graph = as_graph(host)
    if k == 1:
        return CistPartition([range(graph.n)]) if graph.is_connected() else None
    labels = kernels.cist_partition_search(graph.n, graph.adj_masks, k, _search_order(graph))
    return None if labels is None else CistPartition.from_labels(labels)


def default_k_cap(host: Graph | SplitGraph) -> int:
    graph = as_graph(host)
    return max(1, min(graph.n // 2, min(graph.degree(v) for v in graph.vertices)))


def max_cist_exact(host: Graph | SplitGraph, k_cap: int | None = None, limit: int = EXACT_LIMIT) -> int:
    """Largest k <= k_cap admitting a k-CIST-partition.

    Every class of a k-CIST-partition (k >= 2) has at least two vertices
    and every vertex needs an edge into each tree, so the default cap is
    min(|V| // 2, minimum degree).
    """
    return max_cist_with_partition(host, k_cap, limit)[0]


def max_cist_with_partition(host, k_cap=None, limit=EXACT_LIMIT) -> tuple[int, CistPartition]:
    graph = as_graph(host)
    if graph.n > limit:
        raise TooLarge(f"{graph.n} vertices exceeds the exact-search limit {limit}")
    if not graph.is_connected():
        raise NotConnected("graph is disconnected")
    cap = default_k_cap(graph) if k_cap is None else k_cap
    best, best_p = 1, CistPartition([range(graph.n)])
    for k in range(2, cap + 1):
        p = find_cist_partition(graph, k)
        if p is None:
            break
        best, best_p = k, p
    return best, best_p


def _assign_distinct_edges(left: list[int], right: list[int], graph: Graph) -> dict[int, int] | None:
    """Give every vertex of left+right a distinct incident cross edge.

    Returns vertex -> chosen cross neighbour, or None.  Plain augmenting
    path matching between vertices and edges.
    """
    lset, rset = set(left), set(right)
    edges = [(u, w) for u in left for w in sorted(graph.adj[u]) if w in rset]
    incident: dict[int, list[int]] = {v: [] for v in left + right}
    for idx, (u, w) in enumerate(edges):
        incident[u].append(idx)
        incident[w].append(idx)
    taken: dict[int, int] = {}

    def augment(v: int, seen: set[int]) -> bool:
        for idx in incident[v]:
            if idx in seen:
                continue
            seen.add(idx)
            if idx not in taken or augment(taken[idx], seen):
                taken[idx] = v
                return True
        return False

    for v in left + right:
        if not augment(v, set()):
            return None
    choice = {}
    for idx, v in taken.items():
        u, w = edges[idx]
        choice[v] = w if v == u else u
    assert set(choice) == lset | rset
    return choice


def _bfs_tree(graph: Graph, members: set[int]) -> list[tuple[int, int]]:
    start = min(members)
    seen = {start}
    queue = [start]
    edges = []
    for u in queue:
        for w in sorted(graph.adj[u]):
            if w in members and w not in seen:
                seen.add(w)
                edges.append((u, w))
                queue.append(w)
    return edges


def _trees_from_cores(graph: Graph, cores: list[set[int]]) -> CistCertificate | None:
    """Build trees whose internal vertices lie in the given disjoint cores.

    Tree i is a BFS tree of core i plus one pendant edge per outside vertex
    into core i; pendant edges between two cores are chosen pairwise
    distinct by matching.  Returns None when no distinct choice exists.
    """
    k = len(cores)
    owner = {v: i for i, s in enumerate(cores) for v in s}
    hang: list[dict[int, int]] = [dict() for _ in range(k)]
    for i, j in combinations(range(k), 2):
        choice = _assign_distinct_edges(sorted(cores[i]), sorted(cores[j]), graph)
        if choice is None:
            return None
        for v, w in choice.items():
            hang[owner[w]][v] = w
    trees = []
    for i, core in enumerate(cores):
        edges = _bfs_tree(graph, core)
        for v in range(graph.n):
            if v in core:
                continue
            if v in hang[i]:
                edges.append((v, hang[i][v]))
            else:
                edges.append((v, min(w for w in graph.adj[v] if w in core)))
        trees.append(edges)
    return CistCertificate(trees)


def trees_from_partition(host: Graph | SplitGraph, p: CistPartition) -> CistCertificate:
    """Constructive direction of the partition characterisation."""
    graph = as_graph(host)
    verdict = verify_cist_partition(graph, p)
    if not verdict:
        raise InvalidInput(f"not a CIST-partition: {verdict}")
    if p.k == 1:
        return CistCertificate([_bfs_tree(graph, set(range(graph.n)))])
    cert = _trees_from_cores(graph, [set(c) for c in p.classes])
    if cert is None:
        raise VerificationFailure("partition passed but no distinct pendant edges exist")
    _require_certificate(graph, cert)
    return cert


def search_cist_trees(host: Graph | SplitGraph, k: int) -> CistCertificate | None:
    """Tree-level exhaustive search for k CIST (k >= 2).

    Enumerates disjoint candidate cores for the internal vertex sets
    (each connected and dominating its tree), then tries to hang every
    outside vertex on each core through pairwise distinct edges.  Any
    certificate found is checked with ``verify_cist``.  Does not use the
    partition characterisation; intended for |V| <= 10.
    """
    graph = as_graph(host)
    n = graph.n
    if k < 2 or n < 3 or min(graph.degree(v) for v in graph.vertices) < k:
        return None
    order = _search_order(graph)
    label = [-1] * n

    def cores() -> list[set[int]]:
        out = [set() for _ in range(k)]
        for v, c in enumerate(label):
            if c >= 0:
                out[c].add(v)
        return out

    def viable(cs: list[set[int]]) -> bool:
        for s in cs:
            if not s or not graph.is_connected(s):
                return False
        for v in range(n):
            for s in cs:
                if v not in s and not (graph.adj[v] & s):
                    return False
        return True

    def rec(pos: int, used: int) -> CistCertificate | None:
        if pos == n:
            if used < k:
                return None
            cs = cores()
            if not viable(cs):
                return None
            return _trees_from_cores(graph, cs)
        if k - used > n - pos:
            return None
        v = order[pos]
        for c in [-1] + list(range(min(used + 1, k))):
            label[v] = c
            found = rec(pos + 1, max(used, c + 1))
            if found is not None:
                return found
        label[v] = -1
        return None

    cert = rec(0, 0)
    if cert is not None:
        _require_certificate(graph, cert)
    return cert


# --- reporting --------------------------------------------------------------

@dataclass
class CistReport:
    max_cist: int | None
    lower_bound: int
    upper_bound: int
    certificate: CistCertificate
    notes: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "max_cist": self.max_cist,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "notes": dict(self.notes),
            "certificate": self.certificate.to_json(),
        }


def _spanning_single(g: SplitGraph) -> CistCertificate:
    return CistCertificate([_bfs_tree(g.graph, set(range(g.order)))])


def upgrade_with_unique_color(g: SplitGraph, k: int, max_colorings: int = 20000) -> CistCertificate | None:
    """Search panchromatic k-colorings with one unique color for which the
    single-unique-color construction applies."""
    h = hypergraph_of_split(g)
    if k < 2 or h.is_uniform(k):
        return None
    for count, c in enumerate(iter_panchromatic(h, k)):
        if count >= max_colorings:
            break
        if len(c.unique_colors()) != 1:
            continue
        cert = cist_with_unique_color(g, c)
        if cert is not None:
            return cert
    return None


def cist_report(g: SplitGraph, exact_limit: int = EXACT_LIMIT) -> CistReport:
    h = hypergraph_of_split(g)
    chi_p, _ = panchromatic_number(h)
    if h.n >= 2:
        chi_p2, witness = bipanchromatic_number(h, chi_p)
    else:
        chi_p2, witness = 1, Coloring([0], 1)
    notes = {"upper_bound": "chi_p2 + 1"}
    if chi_p2 >= 2:
        cert = cist_from_bipanchromatic(g, witness)
        notes["lower_bound"] = "bipanchromatic coloring"
    else:
        cert = _spanning_single(g)
        notes["lower_bound"] = "single spanning tree"
    lower = chi_p2
    if chi_p2 + 1 <= chi_p:
        better = upgrade_with_unique_color(g, chi_p2 + 1)
        if better is not None:
            cert, lower = better, chi_p2 + 1
            notes["lower_bound"] = "single unique color construction"
    exact = None
    if g.order <= exact_limit:
        exact = max_cist_exact(g, limit=exact_limit)
        notes["max_cist"] = "exhaustive CIST-partition search"
    return CistReport(exact, lower, chi_p2 + 1, cert, notes)
