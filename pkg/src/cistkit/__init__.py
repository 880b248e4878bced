"""Exact panchromatic colorings of hypergraphs and completely independent
spanning trees in split graphs."""
from .kernels import BACKEND
from .model import (
    CistCertificate,
    CistPartition,
    Coloring,
    Graph,
    Hypergraph,
    SpanningTree,
    SplitGraph,
    hypergraph_of_split,
    normalize_split,
    split_of_hypergraph,
)

__all__ = [
    "BACKEND",
    "CistCertificate",
    "CistPartition",
    "Coloring",
    "Graph",
    "Hypergraph",
    "SpanningTree",
    "SplitGraph",
    "hypergraph_of_split",
    "normalize_split",
    "split_of_hypergraph",
]
