"""Immutable simple graphs on vertices ``0..n-1`` and the construction algebra
used to build the extremal families (join, Cartesian product, vertex split).

Adjacency is kept both as an edge set and as per-vertex bitmask rows; the
clique and K_{3,7} searches run entirely on the bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, loops, bad split specs)."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) not normalized")

    @cached_property
    def adj(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.adj[u] >> v & 1)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def add_edges(self, pairs: Iterable[Sequence[int]]) -> "Graph":
        new = set(self.edges)
        for u, v in pairs:
            if self.has_edge(u, v):
                raise GraphError(f"edge ({u}, {v}) already present")
            new.add(norm_edge(u, v))
        return Graph(self.n, frozenset(new))

    def remove_edges(self, pairs: Iterable[Sequence[int]]) -> "Graph":
        new = set(self.edges)
        for u, v in pairs:
            e = norm_edge(u, v)
            if e not in new:
                raise GraphError(f"edge ({u}, {v}) not present")
            new.remove(e)
        return Graph(self.n, frozenset(new))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, frozenset(norm_edge(perm[u], perm[v]) for u, v in self.edges))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        return Graph(
            len(vs),
            frozenset(
                (index[u], index[v]) for u, v in self.edges if u in index and v in index
            ),
        )

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def triangle_count(self) -> int:
        adj = self.adj
        return sum((adj[u] & adj[v]).bit_count() for u, v in self.edges) // 3

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    edges = set()
    for pair in pairs:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in pair {tuple(pair)} for n={n}")
        if u == v:
            raise GraphError(f"loop in pair {tuple(pair)}")
        edges.add(norm_edge(u, v))
    return Graph(n, frozenset(edges))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty_graph(a), empty_graph(b))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the parts; ``g2`` is shifted by ``g1.n``."""
    k = g1.n
    edges = set(g1.edges)
    edges.update((u + k, v + k) for u, v in g2.edges)
    edges.update((u, k + v) for u in range(g1.n) for v in range(g2.n))
    return Graph(g1.n + g2.n, frozenset(edges))


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """G1 □ G2 with row-major labels: (u, v) -> u * g2.n + v."""
    n2 = g2.n
    edges = set()
    for u in range(g1.n):
        for a, b in g2.edges:
            edges.add((u * n2 + a, u * n2 + b))
    for a, b in g1.edges:
        for v in range(n2):
            edges.add((a * n2 + v, b * n2 + v))
    return Graph(g1.n * n2, frozenset(edges))


@dataclass(frozen=True)
class VertexSplitSpec:
    """Split ``target`` into two nonadjacent copies.

    The first copy keeps the label ``target`` and receives ``part_a`` and
    ``shared``; the second copy is the new vertex ``n`` and receives
    ``part_b`` and ``shared``. Parts are given as edges incident to target.
    """

    target: int
    part_a: frozenset[Edge] = field(default_factory=frozenset)
    part_b: frozenset[Edge] = field(default_factory=frozenset)
    shared: frozenset[Edge] = field(default_factory=frozenset)

    @classmethod
    def by_neighbors(cls, target: int, a=(), b=(), shared=()) -> "VertexSplitSpec":
        mk = lambda vs: frozenset(norm_edge(target, v) for v in vs)  # noqa: E731
        return cls(target, mk(a), mk(b), mk(shared))


def split_vertex(g: Graph, spec: VertexSplitSpec) -> Graph:
    t = spec.target
    if not 0 <= t < g.n:
        raise GraphError(f"split target {t} out of range")
    incident = {norm_edge(t, v) for v in g.neighbors(t)}
    a, b, s = set(spec.part_a), set(spec.part_b), set(spec.shared)
    if a & b or a & s or b & s:
        raise GraphError("split parts are not pairwise disjoint")
    if a | b | s != incident:
        raise GraphError(
            f"split parts do not partition the edges incident to {t}: "
            f"missing {sorted(incident - (a | b | s))}, foreign {sorted((a | b | s) - incident)}"
        )
    other = lambda e: e[0] if e[1] == t else e[1]  # noqa: E731
    new = g.n
    edges = set(g.edges) - incident
    for e in a | s:
        edges.add(norm_edge(t, other(e)))
    for e in b | s:
        edges.add(norm_edge(new, other(e)))
    return Graph(g.n + 1, frozenset(edges))


# --- cliques -----------------------------------------------------------------

def max_clique_size(g: Graph) -> int:
    """Exact clique number by branch and bound on bitmask rows."""
    if g.n == 0:
        return 0
    adj = g.adj
    best = 1 if g.n else 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            if size > best:
                best = size
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            expand(size + 1, cand & adj[v])

    expand(0, (1 << g.n) - 1)
    return best


def has_clique(g: Graph, t: int) -> bool:
    """True iff ``g`` contains K_t; stops at the first witness."""
    if t <= 0:
        return True
    if t == 1:
        return g.n >= 1
    adj = g.adj
    # a vertex of a K_t has degree >= t-1
    alive = sum(1 << v for v in range(g.n) if adj[v].bit_count() >= t - 1)

    def search(need: int, cand: int) -> bool:
        if need == 0:
            return True
        while cand.bit_count() >= need:
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            if search(need - 1, cand & adj[v]):
                return True
        return False

    return search(t, alive)


def is_kt_free(g: Graph, t: int) -> bool:
    if t < 2:
        raise GraphError(f"t must be >= 2, got {t}")
    return not has_clique(g, t)


def contains_k37(g: Graph) -> bool:
    """True iff some disjoint 3-set S and 7-set T have all 21 S-T edges."""
    adj = g.adj
    heavy = [v for v in range(g.n) if adj[v].bit_count() >= 7]
    for s in combinations(heavy, 3):
        common = adj[s[0]] & adj[s[1]] & adj[s[2]]
        # common neighbours exclude s itself (no loops), so disjointness is automatic
        if common.bit_count() >= 7:
            return True
    return False


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Degeneracy and a min-degree elimination order.

    Each vertex in the order has at most ``d`` neighbours among the vertices
    that come after it. Ties are broken by the smallest label.
    """
    deg = g.degrees()
    removed = [False] * g.n
    order = []
    d = 0
    for _ in range(g.n):
        v = min((u for u in range(g.n) if not removed[u]), key=lambda u: (deg[u], u))
        d = max(d, deg[v])
        removed[v] = True
        order.append(v)
        for u in _bits(g.adj[v]):
            if not removed[u]:
                deg[u] -= 1
    return d, order
