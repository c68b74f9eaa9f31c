"""Spectral radius by shifted power iteration, Rayleigh-quotient comparisons,
and audits of the Perron-entry bounds for apex-joined graphs.

Perron vectors are normalized to maximum entry 1. Rayleigh quotients divide
by the squared Euclidean norm, so they do not depend on the normalization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .graph import Edge, Graph, GraphError, norm_edge

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 1_000_000


class ConvergenceError(RuntimeError):
    """Power iteration hit its cap; ``result`` holds the best estimate so far."""

    def __init__(self, msg: str, result: "SpectralResult"):
        super().__init__(msg)
        self.result = result


@dataclass(frozen=True)
class SpectralResult:
    lam: float
    perron: np.ndarray = field(repr=False)
    residual: float
    iterations: int

    def to_dict(self, with_vector: bool = True) -> dict:
        out = {
            "schema": "spex1p.spectral/1",
            "lambda": float(self.lam),
            "residual": float(self.residual),
            "iterations": int(self.iterations),
        }
        if with_vector:
            out["perron"] = [float(v) for v in self.perron]
        return out

    def to_json(self, with_vector: bool = True) -> str:
        return json.dumps(self.to_dict(with_vector))


def _edge_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    if not g.edges:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    arr = np.array(sorted(g.edges), dtype=np.int64)
    return arr[:, 0], arr[:, 1]


def _matvec(u: np.ndarray, v: np.ndarray, x: np.ndarray) -> np.ndarray:
    n = len(x)
    return np.bincount(u, weights=x[v], minlength=n) + np.bincount(v, weights=x[u], minlength=n)


def _power(g: Graph, tol: float, max_iter: int) -> SpectralResult:
    """Power iteration on A + I from the all-ones vector, for a connected graph."""
    n = g.n
    if g.m == 0:
        return SpectralResult(0.0, np.ones(n), 0.0, 0)
    u, v = _edge_arrays(g)
    x = np.ones(n)
    lam, res = 0.0, np.inf
    for it in range(1, max_iter + 1):
        y = _matvec(u, v, x)
        lam = float(x @ y) / float(x @ x)
        r = y - lam * x
        res = float(np.abs(r).max())
        # the 2-norm test bounds the distance to the nearest eigenvalue
        if res <= tol and float(np.linalg.norm(r)) <= tol * float(np.linalg.norm(x)):
            return SpectralResult(lam, x, res, it)
        z = y + x
        x = z / z.max()
    raise ConvergenceError(
        f"power iteration did not reach tol={tol} in {max_iter} steps (residual {res:.3e})",
        SpectralResult(lam, x, res, max_iter),
    )


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> SpectralResult:
    """Largest adjacency eigenvalue and its Perron vector.

    Each component is solved separately; the largest component value wins,
    ties (within ``tol``) going to the component with the lowest vertex. The
    Perron vector is zero outside the winning component. ``iterations`` is
    summed over components.
    """
    if g.n < 1:
        raise GraphError("spectral radius needs n >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    best: tuple[float, list[int], SpectralResult] | None = None
    total = 0
    comps = g.components()
    for comp in comps:
        sub = g if len(comps) == 1 else g.induced(comp)
        try:
            res = _power(sub, tol, max_iter)
        except ConvergenceError as exc:
            x = np.zeros(g.n)
            x[comp] = exc.result.perron
            raise ConvergenceError(
                str(exc), SpectralResult(exc.result.lam, x, exc.result.residual, total + max_iter)
            ) from None
        total += res.iterations
        if best is None or res.lam > best[0] + tol:
            best = (res.lam, comp, res)
    lam, comp, res = best
    x = np.zeros(g.n)
    x[comp] = res.perron
    return SpectralResult(lam, x, res.residual, total)


def _vector(g: Graph, x: Sequence[float]) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if arr.shape != (g.n,):
        raise ValueError(f"vector has shape {arr.shape}, expected ({g.n},)")
    return arr


def quadratic_form(g: Graph, x: Sequence[float]) -> float:
    """``x^T A x = 2 * sum over edges of x_u x_v``."""
    arr = _vector(g, x)
    u, v = _edge_arrays(g)
    return float(2.0 * np.sum(arr[u] * arr[v]))


def rayleigh_quotient(g: Graph, x: Sequence[float]) -> float:
    arr = _vector(g, x)
    den = float(arr @ arr)
    if den == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector")
    return quadratic_form(g, arr) / den


@dataclass(frozen=True)
class RayleighDelta:
    added: tuple[Edge, ...]
    removed: tuple[Edge, ...]
    delta: float

    def to_dict(self) -> dict:
        return {"added": [list(e) for e in self.added], "removed": [list(e) for e in self.removed], "delta": self.delta}


def rayleigh_delta(
    g: Graph, x: Sequence[float], added: Iterable[Sequence[int]] = (), removed: Iterable[Sequence[int]] = ()
) -> RayleighDelta:
    """``x^T A_{G'} x - x^T A_G x`` for ``G' = G + added - removed``.

    With ``x`` the Perron vector of ``G``, a positive value shows
    ``lambda(G') > lambda(G)``; a negative one shows nothing.
    """
    arr = _vector(g, x)
    add = tuple(norm_edge(*e) for e in added)
    rem = tuple(norm_edge(*e) for e in removed)
    if len(set(add)) != len(add) or len(set(rem)) != len(rem):
        raise GraphError("repeated edge in rewiring")
    for e in add:
        if e[0] == e[1] or not 0 <= e[0] < g.n or not 0 <= e[1] < g.n:
            raise GraphError(f"invalid edge {e}")
        if e in g.edges:
            raise GraphError(f"added edge {e} already present")
    for e in rem:
        if e not in g.edges:
            raise GraphError(f"removed edge {e} not present")
    plus = sum(arr[a] * arr[b] for a, b in add)
    minus = sum(arr[a] * arr[b] for a, b in rem)
    return RayleighDelta(add, rem, float(2.0 * (plus - minus)))


@dataclass(frozen=True)
class PerronAudit:
    lam: float
    min_entry: float
    max_entry: float
    lower: float
    upper: float
    lower_ok: bool
    upper_ok: bool
    apexes_largest: bool

    @property
    def holds(self) -> bool:
        return self.lower_ok and self.upper_ok

    def to_dict(self) -> dict:
        return {
            "schema": "spex1p.perron-audit/1",
            "lambda": self.lam,
            "min_entry": self.min_entry,
            "max_entry": self.max_entry,
            "lower": self.lower,
            "upper": self.upper,
            "lower_ok": self.lower_ok,
            "upper_ok": self.upper_ok,
            "apexes_largest": self.apexes_largest,
        }


def perron_bounds_audit(
    g: Graph, apexes: tuple[int, int], tol: float = DEFAULT_TOL, slack: float = 1e-9
) -> PerronAudit:
    """Check ``2/lambda <= x_v <= 2/(lambda - 7)`` for every non-apex ``v``.

    Entries come from the Perron vector scaled to maximum 1; ``slack``
    absorbs rounding when a bound is attained exactly (as for K_{2,n-2}).
    The upper bound is vacuous (infinite) when ``lambda <= 7``.
    """
    x, w = apexes
    rest = [v for v in range(g.n) if v not in (x, w)]
    if x == w or not rest:
        raise GraphError("need two distinct apexes and at least one other vertex")
    for v in rest:
        if not (g.has_edge(v, x) and g.has_edge(v, w)):
            raise GraphError(f"vertex {v} is not adjacent to both apexes")
    res = spectral_radius(g, tol)
    lam = res.lam
    entries = res.perron[rest]
    lo, hi = float(entries.min()), float(entries.max())
    lower = 2.0 / lam
    upper = 2.0 / (lam - 7.0) if lam > 7.0 else float("inf")
    apex_min = min(res.perron[x], res.perron[w])
    return PerronAudit(
        lam=lam,
        min_entry=lo,
        max_entry=hi,
        lower=lower,
        upper=upper,
        lower_ok=lo >= lower - slack,
        upper_ok=hi <= upper + slack,
        apexes_largest=bool(apex_min >= hi - slack),
    )


@dataclass(frozen=True)
class Ordering:
    result: str  # "first", "second" or "indistinguishable"
    lambda1: float
    lambda2: float

    @property
    def gap(self) -> float:
        return self.lambda1 - self.lambda2


def compare_candidates(g1: Graph, g2: Graph, tol: float = DEFAULT_TOL) -> Ordering:
    """Order two graphs by spectral radius; differences within ``2*tol`` are not ordered."""
    l1 = spectral_radius(g1, tol).lam
    l2 = spectral_radius(g2, tol).lam
    if abs(l1 - l2) <= 2 * tol:
        return Ordering("indistinguishable", l1, l2)
    return Ordering("first" if l1 > l2 else "second", l1, l2)
