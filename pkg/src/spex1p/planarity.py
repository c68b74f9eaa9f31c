"""Planarity, planarization of crossing sets, and exact 1-planarity search.

Planarity tests go to the compiled Boyer-Myrvold implementation in the
``planarity`` package (networkx is kept for Kuratowski witnesses only);
everything above it (planarization, certificate checks and the branching
search over crossing pairs) is local.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import networkx as nx
import planarity as _bm

from .certificate import DrawingCertificate, norm_pair
from .graph import Edge, Graph, contains_k37, degeneracy, norm_edge

DEFAULT_BUDGET = 10_000_000

YES, NO, UNKNOWN = "yes", "no", "unknown"
EDGE_BOUND, K37, DEGENERACY, SEARCH_EXHAUSTED = "EdgeBound", "K37", "Degeneracy", "SearchExhausted"


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def _planar_edges(edges) -> bool:
    edges = list(edges)
    return not edges or bool(_bm.is_planar(edges))


def is_planar(g: Graph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    return _planar_edges(g.edges)


def kuratowski_witness(g: Graph) -> list[Edge] | None:
    """Edges of a K5 or K3,3 subdivision in ``g``, or None when ``g`` is planar."""
    planar, witness = nx.check_planarity(_nx(g), counterexample=True)
    if planar:
        return None
    return sorted(norm_edge(u, v) for u, v in witness.edges)


class CertificateError(ValueError):
    pass


def planarize(g: Graph, cert: DrawingCertificate) -> Graph:
    """Replace each crossing pair by a degree-4 dummy vertex.

    Dummies get labels ``g.n, g.n+1, ...`` in sorted pair order.
    """
    problems = cert.problems(g)
    if problems:
        raise CertificateError("; ".join(problems))
    edges = set(g.edges)
    k = g.n
    for (a, b), (c, d) in sorted(cert.pairs):
        edges.discard((a, b))
        edges.discard((c, d))
        edges.update(norm_edge(k, x) for x in (a, b, c, d))
        k += 1
    return Graph(k, frozenset(edges))


def verify_certificate(g: Graph, cert: DrawingCertificate) -> bool:
    if cert.problems(g):
        return False
    return is_planar(planarize(g, cert))


@dataclass(frozen=True)
class OnePlanarVerdict:
    status: str
    reason: str | None = None
    certificate: DrawingCertificate | None = None
    nodes: int = 0

    @property
    def is_yes(self) -> bool:
        return self.status == YES

    def to_dict(self) -> dict:
        out: dict = {"schema": "spex1p.verdict/1", "status": self.status}
        if self.reason is not None:
            out["reason"] = self.reason
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_quads()
        out["nodes"] = self.nodes
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class _BudgetExhausted(Exception):
    pass


@dataclass
class _Search:
    g: Graph
    budget: int
    forbidden: frozenset[Edge]
    nodes: int = 0
    pairs: list = field(default_factory=list)

    def run(self, fixed: DrawingCertificate) -> bool:
        g = self.g
        deg = g.degrees()
        self.order = sorted(g.edges, key=lambda e: (-(deg[e[0]] + deg[e[1]]), e))
        self.h: list[Edge] = []
        self.hdeg = [0] * g.n
        self.used: set[Edge] = set()
        self.need = g.m - 3 * g.n + 6 if g.n >= 3 else 0
        for e, f in sorted(fixed.pairs):
            self._cross(e, f)
        self.crossable_left = sum(1 for e in g.edges if e not in self.used and e not in self.forbidden)
        if not _planar_edges(self.h):
            return False
        return self._rec(0)

    def _cross(self, e: Edge, f: Edge) -> None:
        d = self.g.n + len(self.pairs)
        self.h.extend((x, d) for x in (*e, *f))
        for x in (*e, *f):
            self.hdeg[x] += 1
        self.used.update((e, f))
        self.pairs.append((e, f))

    def _uncross(self) -> None:
        e, f = self.pairs.pop()
        del self.h[-4:]
        for x in (*e, *f):
            self.hdeg[x] -= 1
        self.used.difference_update((e, f))

    def _kite_score(self, e: Edge, f: Edge) -> int:
        adj = self.g.adj
        a, b = e
        c, d = f
        return -sum(adj[x] >> y & 1 for x in (a, b) for y in (c, d))

    def _rec(self, i: int) -> bool:
        order = self.order
        while i < len(order) and order[i] in self.used:
            i += 1
        if i == len(order):
            return True
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        if len(self.pairs) + self.crossable_left // 2 < self.need:
            return False
        e = order[i]
        h, hdeg = self.h, self.hdeg
        crossable = e not in self.forbidden

        # option 1: e drawn uncrossed
        pendant = hdeg[e[0]] == 0 or hdeg[e[1]] == 0
        h.append(e)
        hdeg[e[0]] += 1
        hdeg[e[1]] += 1
        self.used.add(e)
        if crossable:
            self.crossable_left -= 1
        if (pendant or _planar_edges(h)) and self._rec(i + 1):
            return True
        h.pop()
        hdeg[e[0]] -= 1
        hdeg[e[1]] -= 1
        self.used.discard(e)
        if crossable:
            self.crossable_left += 1
        if not crossable:
            return False

        # option 2: e crossed by a later edge; kite-forming partners first
        partners = [
            f for f in order[i + 1 :]
            if f not in self.used and f not in self.forbidden and not (set(e) & set(f))
        ]
        partners.sort(key=lambda f: self._kite_score(e, f))
        for f in partners:
            self._cross(e, f)
            self.crossable_left -= 2
            if _planar_edges(h) and self._rec(i + 1):
                return True
            self._uncross()
            self.crossable_left += 2
        return False


def search_certificate(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    fixed: DrawingCertificate | None = None,
    crossable=None,
) -> OnePlanarVerdict:
    """Exhaustive branching over crossing pairs, extending ``fixed``.

    Each edge, in decreasing endpoint-degree order, is either drawn
    uncrossed or paired with a later disjoint edge. A partial planarization
    that is already non-planar is cut: the final planarization contains it.
    The crossing count is also bounded below by ``m - 3n + 6`` (Euler on the
    planarization). With ``crossable`` given, other edges are never crossed,
    so a No answer then only rules out certificates of that restricted shape.
    """
    fixed = fixed or DrawingCertificate()
    if fixed.problems(g):
        raise CertificateError("; ".join(fixed.problems(g)))
    forbidden = frozenset()
    if crossable is not None:
        allowed = {norm_edge(*e) for e in crossable}
        forbidden = frozenset(e for e in g.edges if e not in allowed)
    s = _Search(g, budget, forbidden)
    try:
        found = s.run(fixed)
    except (_BudgetExhausted, RecursionError):
        return OnePlanarVerdict(UNKNOWN, None, None, s.nodes)
    if found:
        cert = DrawingCertificate(frozenset(norm_pair(e, f) for e, f in s.pairs))
        return OnePlanarVerdict(YES, None, cert, s.nodes)
    return OnePlanarVerdict(NO, SEARCH_EXHAUSTED, None, s.nodes)


def necessary_conditions(g: Graph) -> str | None:
    """First violated necessary condition for 1-planarity, or None."""
    if g.n >= 3 and g.m > 4 * g.n - 8:
        return EDGE_BOUND
    if contains_k37(g):
        return K37
    if degeneracy(g)[0] > 7:
        return DEGENERACY
    return None


def is_one_planar(
    g: Graph, budget: int = DEFAULT_BUDGET, hint: DrawingCertificate | None = None
) -> OnePlanarVerdict:
    if is_planar(g):
        return OnePlanarVerdict(YES, None, DrawingCertificate())
    reason = necessary_conditions(g)
    if reason is not None:
        return OnePlanarVerdict(NO, reason)
    if hint is not None and verify_certificate(g, hint):
        return OnePlanarVerdict(YES, None, hint)
    return search_certificate(g, budget)
