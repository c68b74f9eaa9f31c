"""Builders for the extremal families and their constructive 1-planar certificates.

Inner families are labelled ``0..m-1`` along a cyclic order; joined candidates
put the inner graph first and the two apexes last (labels ``n-2`` and ``n-1``).

Certificates come from one drawing scheme. The apexes ``x`` and ``w`` and the
inner vertices form a plane K_{2,m} whose faces are quadrilaterals
``x v_p w v_{p+1}``. An inner edge between cyclic neighbours runs inside one
face; a chord ``v_{p-1} v_{p+1}`` crosses exactly one spoke at ``v_p``, and
consecutive chords use spokes of different apexes so no spoke is crossed
twice. An apex edge ``xw`` goes through a face with no chords and crosses the
inner edge of that face, if any.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .certificate import DrawingCertificate
from .graph import (
    Edge,
    Graph,
    VertexSplitSpec,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edge_list,
    join,
    split_vertex,
)
from .planarity import is_planar


class ConstructionError(ValueError):
    pass


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ConstructionError(msg)


# --- inner families ----------------------------------------------------------

def path_square_plus(n: int) -> Graph:
    """Squared path ``v_0..v_{n-1}`` plus the closing edge ``v_0 v_{n-1}``."""
    _need(n >= 4, f"path_square_plus needs n >= 4, got {n}")
    pairs = [(i, i + 1) for i in range(n - 1)] + [(i, i + 2) for i in range(n - 2)]
    pairs.append((0, n - 1))
    return from_edge_list(n, pairs)


def cycle_square(n: int) -> Graph:
    _need(n >= 5, f"cycle_square needs n >= 5, got {n}")
    return from_edge_list(n, [(i, (i + d) % n) for i in range(n) for d in (1, 2)])


def cycle_square_minus(n: int) -> Graph:
    """Squared cycle without the chord ``{0, 2}``."""
    return cycle_square(n).remove_edges([(0, 2)])


def twisted_ladder(k: int) -> Graph:
    """Moebius ladder on ``2k`` vertices in ladder labels ``(u, s) -> 2u + s``.

    Same rungs and rails as the prism C_k □ K2 except that the two wrap-around
    rail edges are exchanged, so the rails form a single ``2k``-cycle.
    """
    _need(k >= 3, f"twisted ladder needs k >= 3, got {k}")
    pairs = [(2 * u, 2 * u + 1) for u in range(k)]
    pairs += [(2 * u + s, 2 * u + 2 + s) for u in range(k - 1) for s in (0, 1)]
    pairs += [(2 * k - 2, 1), (2 * k - 1, 0)]
    return from_edge_list(2 * k, pairs)


def cycle_ladder(n: int) -> Graph:
    """Cubic ladder on ``n`` vertices; odd ``n`` splits one vertex of a ladder on ``n - 1``.

    Even ``n`` is the prism C_{n/2} □ K2 with labels ``(u, s) -> 2u + s``.
    Odd ``n`` splits vertex 0 of the twisted ladder on ``n - 1`` vertices:
    vertex 0 keeps rail neighbour 2, the new vertex ``n - 1`` takes rail
    neighbour ``n - 2``, and both keep the rung to 1. Splitting the prism
    instead gives a graph whose join with two apexes has no drawing of the
    kind used for the other candidates; the twisted form is the one that
    carries the alternating-chord drawing.
    """
    _need(n >= 6, f"cycle_ladder needs n >= 6, got {n}")
    if n % 2 == 0:
        return cartesian_product(cycle_graph(n // 2), complete_graph(2))
    k = (n - 1) // 2
    spec = VertexSplitSpec.by_neighbors(0, a=[2], b=[2 * k - 1], shared=[1])
    return split_vertex(twisted_ladder(k), spec)


def cycle_ladder_layout(n: int) -> list[int]:
    """Cyclic order of ``cycle_ladder(n)`` with every edge at cyclic distance <= 2."""
    _need(n >= 6, f"cycle_ladder needs n >= 6, got {n}")
    if n % 2 == 0:
        return list(range(n))
    order = []
    for u in range((n - 1) // 2):
        order += [2 * u + 1, 2 * u]
    return order + [n - 1]


def prism_split(n: int) -> Graph:
    """Odd ``n`` only: split a prism vertex so each copy keeps one 4-cycle's two edges.

    Kept for comparison with ``cycle_ladder``; see that function's docstring.
    """
    _need(n >= 7 and n % 2 == 1, f"prism_split needs odd n >= 7, got {n}")
    k = (n - 1) // 2
    prism = cartesian_product(cycle_graph(k), complete_graph(2))
    return split_vertex(prism, VertexSplitSpec.by_neighbors(0, a=[2], b=[2 * k - 2], shared=[1]))


def qp_graph(n: int) -> Graph:
    """``path_square_plus(n)`` minus the path edges ``{1,2}, {3,4}, ..., {n-3,n-2}``."""
    _need(n >= 6 and n % 2 == 0, f"qp_graph needs even n >= 6, got {n}")
    return path_square_plus(n).remove_edges([(i, i + 1) for i in range(1, n - 2, 2)])


def complete_bipartite2(n: int) -> Graph:
    """K_{2,n-2} with the two hubs labelled ``n-2`` and ``n-1``."""
    _need(n >= 3, f"K_(2,n-2) needs n >= 3, got {n}")
    return complete_bipartite(n - 2, 2)


# --- triangle-destroying deletions of path_square_plus -----------------------

def _triangles(g: Graph) -> list[tuple[Edge, Edge, Edge]]:
    adj = g.adj
    out = []
    for u, v in sorted(g.edges):
        for w in range(v + 1, g.n):
            if adj[u] >> w & 1 and adj[v] >> w & 1:
                out.append(((u, v), (u, w), (v, w)))
    return out


def min_triangle_deletions(g: Graph) -> tuple[int, list[frozenset[Edge]]]:
    """All minimum-size edge sets meeting every triangle of ``g`` (exhaustive)."""
    tris = _triangles(g)
    if not tris:
        return 0, [frozenset()]
    load: dict[Edge, int] = {}
    for t in tris:
        for e in t:
            load[e] = load.get(e, 0) + 1
    cap = max(load.values())

    def solve(k: int) -> set[frozenset[Edge]]:
        found: set[frozenset[Edge]] = set()

        def rec(chosen: frozenset[Edge]) -> None:
            open_ = [t for t in tris if not (set(t) & chosen)]
            if not open_:
                found.add(chosen)
                return
            left = k - len(chosen)
            if left == 0 or len(open_) > cap * left:
                return
            for e in open_[0]:
                rec(chosen | {e})

        rec(frozenset())
        # supersets can appear only if a smaller hitting set exists, which the
        # iterative deepening has already excluded
        return {s for s in found if len(s) == k}

    k = 1
    while True:
        sols = solve(k)
        if sols:
            return k, sorted(sols, key=sorted)
        k += 1


def enumerate_p2_family(n: int) -> list[Graph]:
    """Every triangle-free graph left by a minimum deletion from ``path_square_plus(n)``.

    Exhaustive over deletion sets drawn from triangle edges; sorted by the
    deleted edge list.
    """
    _need(n >= 6, f"enumerate_p2_family needs n >= 6, got {n}")
    base = path_square_plus(n)
    _, sols = min_triangle_deletions(base)
    return [base.remove_edges(s) for s in sols]


def _path_edge(j: int) -> Edge:
    # e_j joins the j-th and (j+1)-th vertices of the path, counted from 1
    return (j - 1, j)


def _chord(j: int) -> Edge:
    return (j - 1, j + 1)


def p2_pattern_sets(n: int) -> list[frozenset[Edge]]:
    """Deletion sets of the two alternating schemas for odd ``n``.

    Counting path vertices from 1, with ``e_j`` the path edge after vertex
    ``j`` and triangles ``D_i`` on vertices ``i, i+1, i+2``:

    * one deletion ``s`` meets the single triangle ``D_i`` (``i`` odd), which
      is the chord ``e'_i``, or ``e_1`` when ``i = 1``, or ``e_{n-1}`` when
      ``i = n-2``; the other triangles lose ``e_{i-1}, e_{i-3}, ..., e_2`` and
      ``e_{i+2}, e_{i+4}, ..., e_{n-2}``;
    * path edges only: ``{e_j : j even, j < i} | {e_j : j odd, i <= j <= n-2}``
      for odd ``i`` in ``[3, n-2]``.
    """
    _need(n >= 7 and n % 2 == 1, f"pattern sets need odd n >= 7, got {n}")
    out: set[frozenset[Edge]] = set()
    for i in range(1, n - 1, 2):
        rest = [_path_edge(j) for j in range(i - 1, 1, -2)]
        rest += [_path_edge(j) for j in range(i + 2, n - 1, 2)]
        singles = [_chord(i)]
        if i == 1:
            singles.append(_path_edge(1))
        if i == n - 2:
            singles.append(_path_edge(n - 1))
        for s in singles:
            out.add(frozenset([s, *rest]))
    for i in range(3, n - 1, 2):
        out.add(frozenset(
            [_path_edge(j) for j in range(2, i, 2)] + [_path_edge(j) for j in range(i, n - 1, 2)]
        ))
    return sorted(out, key=sorted)


def p2_pattern_members(n: int) -> list[Graph]:
    base = path_square_plus(n)
    return [base.remove_edges(s) for s in p2_pattern_sets(n)]


def p2_pattern_check(g: Graph, n: int) -> bool:
    """True iff ``g`` is ``path_square_plus(n)`` minus one of the pattern deletion sets."""
    _need(n % 2 == 1 and n >= 7, f"pattern check needs odd n >= 7, got {n}")
    base = path_square_plus(n)
    if g.n != n or not g.edges <= base.edges:
        raise ConstructionError("graph is not a spanning subgraph of path_square_plus(n)")
    return frozenset(base.edges - g.edges) in set(p2_pattern_sets(n))


def p2_member(n: int, variant: int) -> Graph:
    members = qp_members(n)
    _need(0 <= variant < len(members), f"P2 member index {variant} out of range 0..{len(members) - 1}")
    return members[variant]


def qp_members(n: int) -> list[Graph]:
    """The triangle-free minimum deletions of ``path_square_plus(n)``.

    Even ``n`` gives the single graph ``qp_graph(n)``; odd ``n`` uses the
    closed-form schemas, which the tests cross-check against the exhaustive
    ``enumerate_p2_family``.
    """
    if n % 2 == 0:
        return [qp_graph(n)]
    return p2_pattern_members(n)


# --- certificates ------------------------------------------------------------

def layout_certificate(g: Graph, order: Sequence[int], x: int, w: int) -> DrawingCertificate:
    """Crossing pairs for ``g`` drawn with apexes ``x, w`` around the cyclic ``order``.

    Every edge among ``order`` must join vertices at cyclic distance 1 or 2.
    Raises ConstructionError when the scheme does not apply (an inner edge
    too long, a closed odd run of chords, or an apex edge with no free face).
    """
    m = len(order)
    _need(m >= 5, "layout needs at least 5 inner vertices")
    pos = {v: p for p, v in enumerate(order)}
    _need(len(pos) == m and x not in pos and w not in pos and x != w, "bad layout vertices")
    for u, v in g.edges:
        if u in pos and v in pos:
            d = (pos[u] - pos[v]) % m
            _need(min(d, m - d) <= 2, f"edge ({u}, {v}) spans cyclic distance {min(d, m - d)}")

    at = lambda p: order[p % m]  # noqa: E731
    chord = [g.has_edge(at(p - 1), at(p + 1)) for p in range(m)]
    side: dict[int, int] = {}
    if all(chord):
        _need(m % 2 == 0, "a closed run of chords of odd length cannot alternate")
        side = {p: (x if p % 2 == 0 else w) for p in range(m)}
    else:
        start = chord.index(False)
        flip = 0
        for q in range(start, start + m):
            p = q % m
            if not chord[p]:
                flip = 0
                continue
            side[p] = x if flip == 0 else w
            flip ^= 1

    pairs = []
    for p, a in side.items():
        if g.has_edge(a, at(p)):
            pairs.append(((at(p - 1), at(p + 1)), (a, at(p))))
    if g.has_edge(x, w):
        # face p lies between positions p and p+1; scan from the closing face
        free = [p for p in [m - 1, *range(m - 1)] if not chord[p] and not chord[(p + 1) % m]]
        _need(bool(free), "apex edge needs a face without chords")
        p = free[0]
        if g.has_edge(at(p), at(p + 1)):
            pairs.append(((x, w), (at(p), at(p + 1))))
    return DrawingCertificate.of(pairs)


def _inner_certificate(g: Graph, family: str) -> DrawingCertificate | None:
    if is_planar(g):
        return DrawingCertificate()
    if family == "cycle-square" and g.n % 2 == 1:
        # chords alternate inside/outside the cycle; the odd closure forces one crossing
        m = g.n
        return DrawingCertificate.of([((m - 2, 0), (m - 1, 1))])
    return None


# --- extremal candidates ------------------------------------------------------

def spex_candidate_count(t: int, n: int) -> int:
    if t == 5:
        return 1 + len(qp_members(n - 2))
    return 1


def _candidates(t: int, n: int) -> tuple[list[Graph], list[int]]:
    m = n - 2
    if t == 3:
        _need(n >= 3, f"t=3 candidate needs n >= 3, got {n}")
        return [complete_bipartite2(n)], []
    if t == 4:
        _need(n >= 9, f"t=4 candidate needs n >= 9 (triangle-free ladder), got {n}")
        return [join(cycle_ladder(m), empty_graph(2))], cycle_ladder_layout(m)
    if t == 5:
        _need(n >= 8, f"t=5 candidates need n >= 8, got {n}")
        first = cycle_square(m) if m % 2 == 0 else cycle_square_minus(m)
        graphs = [join(first, empty_graph(2))]
        graphs += [join(h, complete_graph(2)) for h in qp_members(m)]
        return graphs, list(range(m))
    if t >= 6:
        _need(n >= 7, f"t>=6 candidate needs n >= 7, got {n}")
        return [join(path_square_plus(m), complete_graph(2))], list(range(m))
    raise ConstructionError(f"unsupported forbidden clique size t={t}")


def candidate_graphs(t: int, n: int) -> list[Graph]:
    """All candidates for ``(t, n)`` in variant order, without certificates."""
    return _candidates(t, n)[0]


def spex_candidate(t: int, n: int, variant: int = 0) -> tuple[Graph, DrawingCertificate]:
    """Candidate maximizer on ``n`` vertices among K_t-free 1-planar graphs, with certificate.

    * ``t = 3``: K_{2,n-2}.
    * ``t = 4``: two nonadjacent apexes joined to ``cycle_ladder(n-2)``.
    * ``t = 5``: variant 0 is two nonadjacent apexes joined to the squared cycle
      (minus one chord when ``n`` is odd); variant ``k >= 1`` is an apex edge
      joined to the ``(k-1)``-th member of ``qp_members(n-2)``.
    * ``t >= 6``: an apex edge joined to ``path_square_plus(n-2)``.
    """
    graphs, order = _candidates(t, n)
    _need(0 <= variant < len(graphs), f"variant must be in 0..{len(graphs) - 1} for t={t}, got {variant}")
    g = graphs[variant]
    if t == 3:
        return g, DrawingCertificate()
    return g, layout_certificate(g, order, n - 2, n - 1)


# --- symbolic descriptors ----------------------------------------------------

FAMILIES = (
    "PathSquarePlus",
    "CycleLadder",
    "QP",
    "P2Member",
    "CycleSquare",
    "CycleSquareMinus",
    "CompleteBipartite2",
    "SpexCandidate",
)

_ALIASES = {
    "path-square-plus": "PathSquarePlus",
    "cycle-ladder": "CycleLadder",
    "qp": "QP",
    "p2": "P2Member",
    "p2-member": "P2Member",
    "cycle-square": "CycleSquare",
    "cycle-square-minus": "CycleSquareMinus",
    "k2n": "CompleteBipartite2",
    "complete-bipartite2": "CompleteBipartite2",
    "spex": "SpexCandidate",
    "spex-candidate": "SpexCandidate",
}


def family_name(name: str) -> str:
    if name in FAMILIES:
        return name
    key = name.lower()
    if key in _ALIASES:
        return _ALIASES[key]
    for f in FAMILIES:
        if f.lower() == key:
            return f
    raise ConstructionError(f"unknown family {name!r}")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    variant: int | None = None
    t: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", family_name(self.family))

    def build(self) -> tuple[Graph, DrawingCertificate | None]:
        f, n, v = self.family, self.n, self.variant
        if f == "SpexCandidate":
            _need(self.t is not None, "SpexCandidate needs t")
            return spex_candidate(self.t, n, v or 0)
        if f == "P2Member":
            g = p2_member(n, v or 0)
        else:
            builder = {
                "PathSquarePlus": path_square_plus,
                "CycleLadder": cycle_ladder,
                "QP": qp_graph,
                "CycleSquare": cycle_square,
                "CycleSquareMinus": cycle_square_minus,
                "CompleteBipartite2": complete_bipartite2,
            }[f]
            _need(v in (None, 0), f"{f} takes no variant")
            g = builder(n)
        key = "cycle-square" if f == "CycleSquare" else f
        return g, _inner_certificate(g, key)

    def to_dict(self) -> dict:
        out: dict = {"family": self.family, "n": self.n, "variant": self.variant}
        if self.t is not None:
            out["t"] = self.t
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "FamilySpec":
        try:
            d = json.loads(text)
            return cls(d["family"], int(d["n"]), d.get("variant"), d.get("t"))
        except (KeyError, TypeError, ValueError) as exc:
            raise ConstructionError(f"bad family spec: {exc}") from None


def census(g: Graph) -> dict:
    degs = g.degrees()
    return {
        "n": g.n,
        "e": g.m,
        "degrees": sorted(degs, reverse=True),
        "triangles": g.triangle_count(),
    }


__all__ = [
    "ConstructionError",
    "FamilySpec",
    "FAMILIES",
    "census",
    "complete_bipartite2",
    "cycle_ladder",
    "cycle_ladder_layout",
    "cycle_square",
    "cycle_square_minus",
    "enumerate_p2_family",
    "layout_certificate",
    "min_triangle_deletions",
    "p2_member",
    "p2_pattern_check",
    "p2_pattern_members",
    "p2_pattern_sets",
    "path_square_plus",
    "prism_split",
    "qp_graph",
    "qp_members",
    "candidate_graphs",
    "spex_candidate",
    "spex_candidate_count",
    "twisted_ladder",
]
