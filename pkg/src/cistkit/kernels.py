"""Backend selection for the search kernels.

The compiled extension is used when it imports and the instance fits in
64-bit masks; ``CISTKIT_PURE=1`` forces the Python kernels.
"""
from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("CISTKIT_PURE", "") not in ("", "0"):
        raise ImportError("pure kernels requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
_LIMIT = 64


def _pick(n: int, k: int = 0):
    if _ckernels is not None and n <= _LIMIT and k <= _LIMIT:
        return _ckernels
    return _pykernels


def pan_search(n, edge_masks, k, order, min_class=1):
    return _pick(n, k).pan_search(n, list(edge_masks), k, list(order), min_class)


def min_unique_search(n, edge_masks, k):
    return _pick(n, k).min_unique_search(n, list(edge_masks), k)


def cist_partition_search(n, adj, k, order):
    return _pick(n, k).cist_partition_search(n, list(adj), k, list(order))


def is_cist_partition(labels, adj, k):
    return _pick(len(labels), k).is_cist_partition(list(labels), list(adj), k)
