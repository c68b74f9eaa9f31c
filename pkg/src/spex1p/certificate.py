"""Crossing-pair certificates for 1-planar drawings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Edge, Graph, norm_edge

CrossingPair = tuple[Edge, Edge]


def norm_pair(e: Sequence[int], f: Sequence[int]) -> CrossingPair:
    a, b = norm_edge(*e), norm_edge(*f)
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class DrawingCertificate:
    """Set of edge pairs that cross each other; every other edge is uncrossed."""

    pairs: frozenset[CrossingPair] = field(default_factory=frozenset)

    @classmethod
    def of(cls, pairs: Iterable[tuple[Sequence[int], Sequence[int]]]) -> "DrawingCertificate":
        return cls(frozenset(norm_pair(e, f) for e, f in pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def crossed_edges(self) -> set[Edge]:
        return {e for pair in self.pairs for e in pair}

    def problems(self, g: Graph | None = None) -> list[str]:
        """Structural defects; empty when every edge is crossed at most once by a disjoint edge."""
        out = []
        seen: set[Edge] = set()
        for e, f in sorted(self.pairs):
            if set(e) & set(f):
                out.append(f"{e} and {f} share an endpoint")
            for x in (e, f):
                if x in seen:
                    out.append(f"edge {x} crossed more than once")
                seen.add(x)
                if g is not None and x not in g.edges:
                    out.append(f"edge {x} not in graph")
        return out

    def restrict(self, g: Graph) -> "DrawingCertificate":
        """Drop pairs with an edge missing from ``g`` (valid for subgraphs)."""
        return DrawingCertificate(frozenset(p for p in self.pairs if p[0] in g.edges and p[1] in g.edges))

    def relabel(self, perm: Sequence[int]) -> "DrawingCertificate":
        return DrawingCertificate.of(
            ((perm[a], perm[b]), (perm[c], perm[d])) for (a, b), (c, d) in self.pairs
        )

    def to_quads(self) -> list[list[int]]:
        return [[a, b, c, d] for (a, b), (c, d) in sorted(self.pairs)]

    @classmethod
    def from_quads(cls, quads: Iterable[Sequence[int]]) -> "DrawingCertificate":
        pairs = []
        for q in quads:
            if len(q) != 4:
                raise ValueError(f"crossing quadruple must have 4 entries, got {list(q)}")
            pairs.append(((int(q[0]), int(q[1])), (int(q[2]), int(q[3]))))
        return cls.of(pairs)

    def to_json(self) -> str:
        return json.dumps(self.to_quads())
