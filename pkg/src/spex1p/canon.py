"""Canonical labelling by equitable-partition refinement and backtracking.

Leaves of the search tree are compared by their relabelled adjacency rows;
the largest one is the canonical form. Automorphisms discovered at equal
leaves prune siblings in the same orbit of the pointwise stabiliser of the
current prefix, which keeps highly symmetric graphs (empty, complete,
matchings) polynomial.
"""

from __future__ import annotations

from itertools import permutations

from .graph import Graph
from .graph6 import graph6_encode

MAX_CANON_N = 16


def _refine(cells: list[list[int]], adj: tuple[int, ...]) -> list[list[int]]:
    cells = [c for c in cells]
    si = 0
    while si < len(cells):
        smask = 0
        for v in cells[si]:
            smask |= 1 << v
        split_any = False
        out = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[int, list[int]] = {}
            for v in c:
                groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                split_any = True
                out.extend(groups[k] for k in sorted(groups))
        cells = out
        # restart from the first cell after any split: equitability is only
        # certified once a full pass makes no change
        si = 0 if split_any else si + 1
    return cells


def _leaf_cert(cells: list[list[int]], adj: tuple[int, ...]) -> tuple[tuple[int, ...], list[int]]:
    pos = [0] * len(adj)
    for p, c in enumerate(cells):
        pos[c[0]] = p
    rows = [0] * len(adj)
    for v, row in enumerate(adj):
        r = 0
        while row:
            low = row & -row
            r |= 1 << pos[low.bit_length() - 1]
            row ^= low
        rows[pos[v]] = r
    return tuple(rows), pos


def _orbit_reps(cell: list[int], gens: list[list[int]], prefix: list[int]) -> dict[int, int]:
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    for g in gens:
        if any(g[p] != p for p in prefix):
            continue
        for v in cell:
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return {v: find(v) for v in cell}


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``pos`` with ``pos[v]`` the canonical position of vertex ``v``."""
    if g.n > MAX_CANON_N:
        raise ValueError(f"canonical labelling supports n <= {MAX_CANON_N}, got {g.n}")
    if g.n == 0:
        return []
    adj = g.adj
    best: list = [None, None]  # cert, pos
    gens: list[list[int]] = []

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            cert, pos = _leaf_cert(cells, adj)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, pos
            elif cert == best[0]:
                inv = [0] * len(pos)
                for v, p in enumerate(best[1]):
                    inv[p] = v
                gamma = [inv[pos[v]] for v in range(len(pos))]
                if any(gamma[v] != v for v in range(len(pos))):
                    gens.append(gamma)
            return
        cell = cells[target]
        tried: list[int] = []
        for v in sorted(cell):
            if tried:
                reps = _orbit_reps(cell, gens, prefix)
                if any(reps[v] == reps[u] for u in tried):
                    continue
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1 :]
            search(_refine(child, adj), prefix + [v])
            tried.append(v)

    search(_refine([list(range(g.n))], adj), [])
    return best[1]


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def canonical_form(g: Graph) -> bytes:
    """Labelling-invariant byte string: graph6 of the canonically relabelled graph."""
    return graph6_encode(canonical_graph(g)).encode("ascii")


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


def brute_canonical_form(g: Graph) -> bytes:
    """Max over all n! relabellings; reference oracle for small n only."""
    if g.n > 8:
        raise ValueError("brute-force canonical form is limited to n <= 8")
    best = None
    for perm in permutations(range(g.n)):
        cert = graph6_encode(g.relabel(perm))
        if best is None or cert > best:
            best = cert
    return (best if best is not None else graph6_encode(g)).encode("ascii")
