"""Isomorphism-free enumeration of all graphs on n vertices.

Every graph on ``n`` vertices arises from a graph on ``n - 1`` vertices by
adding one vertex with some neighbour set, so extending one representative
per class with every neighbour set reaches every class on ``n`` vertices.
Children are deduplicated by canonical form. Work is split by parent class;
each worker returns its set of canonical forms and the merge is sorted, so
the output order does not depend on the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from .canon import canonical_form
from .graph import Graph
from .graph6 import graph6_decode

MAX_GENERATE_N = 10

_cache: dict[int, list[bytes]] = {}


def worker_count() -> int:
    raw = os.environ.get("SPEX1P_THREADS")
    cap = os.cpu_count() or 1
    if raw:
        try:
            return max(1, min(int(raw), cap))
        except ValueError:
            pass
    return 1


def _children(parent_g6: bytes) -> set[bytes]:
    g = graph6_decode(parent_g6)
    k = g.n
    out = set()
    for mask in range(1 << k):
        edges = set(g.edges)
        edges.update((v, k) for v in range(k) if mask >> v & 1)
        out.add(canonical_form(Graph(k + 1, frozenset(edges))))
    return out


def canonical_classes(n: int, workers: int | None = None) -> list[bytes]:
    """Sorted canonical graph6 forms of all graphs on ``n`` vertices."""
    if not 0 <= n <= MAX_GENERATE_N:
        raise ValueError(f"generation supports 0 <= n <= {MAX_GENERATE_N}, got {n}")
    if n in _cache:
        return list(_cache[n])
    start = max((k for k in _cache if k < n), default=None)
    level = _cache[start] if start is not None else [canonical_form(Graph(0, frozenset()))]
    workers = worker_count() if workers is None else workers
    for k in range(start or 0, n):
        nxt: set[bytes] = set()
        if workers > 1 and len(level) > 64:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for part in pool.map(_children, level, chunksize=16):
                    nxt |= part
        else:
            for p in level:
                nxt |= _children(p)
        level = sorted(nxt)
        _cache[k + 1] = level
    return list(level)


def all_graphs(n: int, workers: int | None = None) -> Iterator[Graph]:
    """One graph per isomorphism class, in canonical-form order."""
    for code in canonical_classes(n, workers):
        yield graph6_decode(code)


def connected_graphs(n: int, workers: int | None = None) -> Iterator[Graph]:
    for g in all_graphs(n, workers):
        if g.is_connected():
            yield g
