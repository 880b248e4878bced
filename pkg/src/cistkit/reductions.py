"""Hardness gadgets and witness maps.

``build_bicp_gadget`` doubles a hypergraph and adds one hyperedge on all
vertices; panchromatic k-colorings of H correspond to bipanchromatic
k-colorings of the gadget.  ``build_cist_gadget`` doubles G(H) and joins
the two cliques; panchromatic k-colorings of H correspond to k CIST.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cist import cist_from_bipanchromatic, cist_to_coloring, verify_cist
from .colorings import is_bipanchromatic, is_panchromatic
from .errors import InvalidCertificate, InvalidInput, WitnessInvalid
from .model import CistCertificate, Coloring, Hypergraph, SplitGraph


@dataclass(frozen=True)
class BicpGadget:
    source: Hypergraph
    h_prime: Hypergraph
    copy_maps: tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class CistGadget:
    source: Hypergraph
    g_prime: SplitGraph
    # images of V(G(H)) = D then I, one tuple per copy
    copy_maps: tuple[tuple[int, ...], tuple[int, ...]]


def build_bicp_gadget(h: Hypergraph) -> BicpGadget:
    if h.m == 0:
        raise InvalidInput("hypergraph has no hyperedges")
    n = h.n
    edges = list(h.edges)
    edges += [tuple(v + n for v in e) for e in h.edges]
    edges.append(tuple(range(2 * n)))
    maps = (tuple(range(n)), tuple(range(n, 2 * n)))
    return BicpGadget(h, Hypergraph(2 * n, edges), maps)


def bicp_forward(gadget: BicpGadget, c: Coloring) -> Coloring:
    if not is_panchromatic(gadget.source, c):
        raise WitnessInvalid("coloring is not panchromatic on H")
    out = Coloring(c.colors + c.colors, c.k)
    if not is_bipanchromatic(gadget.h_prime, out):
        raise WitnessInvalid("mapped coloring is not bipanchromatic on H'")
    return out


def bicp_backward(gadget: BicpGadget, c: Coloring) -> Coloring:
    if not is_bipanchromatic(gadget.h_prime, c):
        raise WitnessInvalid("coloring is not bipanchromatic on H'")
    out = Coloring([c[v] for v in gadget.copy_maps[0]], c.k)
    if not is_panchromatic(gadget.source, out):
        raise WitnessInvalid("restricted coloring is not panchromatic on H")
    return out


def map_bicp_witness(gadget: BicpGadget, c: Coloring, direction: str = "fwd") -> Coloring:
    if direction == "fwd":
        return bicp_forward(gadget, c)
    if direction == "bwd":
        return bicp_backward(gadget, c)
    raise InvalidInput(f"direction must be 'fwd' or 'bwd', got {direction!r}")


def build_cist_gadget(h: Hypergraph) -> CistGadget:
    """Two copies of G(H) with every clique pair across the copies joined.

    Copy 1 clique vertices are 0..n-1, copy 2 n..2n-1; I-vertices follow
    all clique vertices, copy 1 first.
    """
    if h.m == 0:
        raise InvalidInput("hypergraph has no hyperedges")
    if h.uncovered():
        raise InvalidInput("hypergraph must be normalized")
    n, m = h.n, h.m
    rows = list(h.edges) + [tuple(v + n for v in e) for e in h.edges]
    g_prime = SplitGraph(2 * n, rows)
    first = tuple(range(n)) + tuple(2 * n + j for j in range(m))
    second = tuple(range(n, 2 * n)) + tuple(2 * n + m + j for j in range(m))
    return CistGadget(h, g_prime, (first, second))


def cist_forward(gadget: CistGadget, c: Coloring) -> CistCertificate:
    if c.k < 2:
        raise WitnessInvalid("the CIST reduction needs k >= 2")
    if not is_panchromatic(gadget.source, c):
        raise WitnessInvalid("coloring is not panchromatic on H")
    doubled = Coloring(c.colors + c.colors, c.k)
    return cist_from_bipanchromatic(gadget.g_prime, doubled)


def cist_backward(gadget: CistGadget, cert: CistCertificate) -> Coloring:
    if cert.k < 2 or not verify_cist(gadget.g_prime, cert):
        raise WitnessInvalid("certificate is not a valid CIST family of G'")
    try:
        full = cist_to_coloring(gadget.g_prime, cert)
    except InvalidCertificate as exc:
        raise WitnessInvalid(str(exc)) from exc
    n = gadget.source.n
    out = Coloring([full[v] for v in gadget.copy_maps[0][:n]], cert.k)
    if not is_panchromatic(gadget.source, out):
        raise WitnessInvalid("restricted coloring is not panchromatic on H")
    return out


def map_cist_witness(gadget: CistGadget, witness, direction: str = "fwd"):
    if direction == "fwd":
        return cist_forward(gadget, witness)
    if direction == "bwd":
        return cist_backward(gadget, witness)
    raise InvalidInput(f"direction must be 'fwd' or 'bwd', got {direction!r}")
