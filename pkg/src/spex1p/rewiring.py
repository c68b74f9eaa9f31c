"""Replays of the edge rewirings used to rule out non-extremal configurations.

Each replay builds a configuration ``G`` (two apexes joined to an inner
graph on ``v_1..v_m``), applies the named rewiring to get ``G'``, and checks
that ``G'`` stays K_t-free and 1-planar while its spectral radius grows.

Inner vertices use the counting-from-1 names ``v_i = i - 1`` taken cyclically;
``e_i = v_i v_{i+1}`` and ``e'_i = v_i v_{i+2}``. Apexes are ``x = m`` and
``w = m + 1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .constructions import ConstructionError, cycle_square, layout_certificate
from .graph import Edge, Graph, complete_graph, empty_graph, from_edge_list, is_kt_free, join, norm_edge
from .planarity import YES, is_one_planar, verify_certificate
from .spectral import DEFAULT_TOL, quadratic_form, rayleigh_delta, spectral_radius


class ReplayError(ValueError):
    pass


@dataclass(frozen=True)
class ReplayReport:
    name: str
    n: int
    t: int
    g: Graph
    g_new: Graph
    lambda_before: float
    lambda_after: float
    x_delta: float  # x^T A_{G'} x - x^T A_G x with x the Perron vector of G
    y_delta: float | None  # y^T A_{G'} y - x^T A_G x for a permuted test vector, when used
    kt_free_before: bool
    kt_free_after: bool
    one_planar_before: str
    one_planar_after: str
    tol: float

    @property
    def margin(self) -> float:
        return self.lambda_after - self.lambda_before

    @property
    def ok(self) -> bool:
        return (
            self.margin > 10 * self.tol
            and self.kt_free_before
            and self.kt_free_after
            and self.one_planar_before == YES
            and self.one_planar_after == YES
        )

    def to_dict(self) -> dict:
        return {
            "schema": "spex1p.replay/1",
            "name": self.name,
            "n": self.n,
            "t": self.t,
            "lambda_before": self.lambda_before,
            "lambda_after": self.lambda_after,
            "margin": self.margin,
            "x_delta": self.x_delta,
            "y_delta": self.y_delta,
            "kt_free_before": self.kt_free_before,
            "kt_free_after": self.kt_free_after,
            "one_planar_before": self.one_planar_before,
            "one_planar_after": self.one_planar_after,
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _v(i: int, m: int) -> int:
    return (i - 1) % m


def _e(i: int, m: int) -> Edge:
    return norm_edge(_v(i, m), _v(i + 1, m))


def _ep(i: int, m: int) -> Edge:
    return norm_edge(_v(i, m), _v(i + 2, m))


@dataclass(frozen=True)
class _Config:
    t: int
    g: Graph
    added: list[Edge]
    removed: list[Edge]
    order_before: list[int] | None
    order_after: list[int] | None
    y: Callable[[np.ndarray], np.ndarray] | None = None


def _apexed(inner: Graph, adjacent: bool) -> Graph:
    return join(inner, complete_graph(2) if adjacent else empty_graph(2))


def _square_minus(m: int, removed: Sequence[Edge]) -> Graph:
    return cycle_square(m).remove_edges(removed)


def _even_m(n: int, least: int) -> int:
    m = n - 2
    if m % 2 or n < least:
        raise ReplayError(f"needs even n >= {least}, got {n}")
    return m


def _k4_base(n: int, k: int) -> _Config:
    m = _even_m(n, 12)
    inner = _square_minus(m, [_ep(1, m), _ep(2, m)] + [_e(i, m) for i in range(4, m + 1, 2)])
    return _Config(4, _apexed(inner, False), [_ep(1, m), _ep(2, m)], [_e(2, m)], list(range(m)), list(range(m)))


def _k4_cross(n: int, k: int) -> _Config:
    m = _even_m(n, 12)
    inner = _square_minus(m, [_ep(1, m), _e(3, m)] + [_e(i, m) for i in range(4, m + 1, 2)])
    return _Config(4, _apexed(inner, False), [_e(3, m), _ep(1, m)], [_e(2, m)], list(range(m)), list(range(m)))


def _k4_chain(n: int, k: int) -> _Config:
    m = _even_m(n, 12)
    if k < 2 or 2 * k + 2 > m:
        raise ReplayError(f"chain needs 2 <= k and 2k + 2 <= n - 2, got k={k}")
    dropped = [_ep(1, m)] + [_e(2 * i + 1, m) for i in range(1, k)] + [_ep(2 * k, m)]
    dropped += [_e(i, m) for i in range(2 * k + 2, m + 1, 2)]
    inner = _square_minus(m, dropped)
    added = [_e(2 * i + 1, m) for i in range(1, k)] + [_ep(1, m), _ep(2 * k, m)]
    removed = [_e(2 * i, m) for i in range(1, k + 1)]

    def y_of(x: np.ndarray) -> np.ndarray:
        # shift the even-indexed entries v_2, v_4, ..., v_{2k+2} one step along the chain
        y = x.copy()
        y[_v(2, m)] = x[_v(2 * k + 2, m)]
        for i in range(4, 2 * k + 3, 2):
            y[_v(i, m)] = x[_v(i - 2, m)]
        return y

    return _Config(4, _apexed(inner, False), added, removed, list(range(m)), list(range(m)), y_of)


def _k4_close(n: int, k: int) -> _Config:
    m = _even_m(n, 12)
    if k < 1 or 2 * k + 2 > m:
        raise ReplayError(f"close needs 1 <= k and 2k + 2 <= n - 2, got k={k}")
    dropped = [_ep(1, m)] + [_e(2 * i + 1, m) for i in range(1, k + 1)]
    dropped += [_e(i, m) for i in range(2 * k + 2, m + 1, 2)]
    inner = _square_minus(m, dropped)
    added = [_e(2 * i + 1, m) for i in range(1, k + 1)] + [_ep(1, m)]
    removed = [_e(2 * i, m) for i in range(1, k + 1)]
    return _Config(4, _apexed(inner, False), added, removed, list(range(m)), list(range(m)))


def _k4_wrap(n: int, k: int) -> _Config:
    m = _even_m(n, 12)
    dropped = [_ep(1, m)] + [_e(i, m) for i in range(3, m, 2)] + [_ep(m, m)]
    inner = _square_minus(m, dropped)
    return _Config(4, _apexed(inner, False), [_ep(1, m), _ep(m, m)], [_e(1, m)], list(range(m)), list(range(m)))


def _k5_quad_restore(n: int, k: int) -> _Config:
    """Two apexes, nonadjacent, with ``v_1, v_2`` seeing only ``v_3, v_4`` inside.

    The quadruple ``v_1..v_4`` carries five edges but not the five of the
    squared cycle (``v_1 v_4`` replaces ``v_2 v_4``). The rewiring restores the
    squared-cycle edges on ``v_1..v_4`` and on ``v_{m-3}..v_m`` and adds
    ``v_m v_1``.
    """
    m = n - 2
    if n < 12:
        raise ReplayError(f"needs n >= 12, got {n}")
    v = lambda i: _v(i, m)  # noqa: E731
    quad1 = [v(1), v(2), v(3), v(4)]
    quad2 = [v(m - 3), v(m - 2), v(m - 1), v(m)]
    base = cycle_square(m).remove_edges([_e(m, m), _ep(m - 1, m), _ep(m, m), _ep(2, m)])
    inner = base.add_edges([(v(1), v(4))])
    g = _apexed(inner, False)
    target = lambda q: {norm_edge(q[a], q[b]) for a, b in ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3))}  # noqa: E731
    old = {e for e in g.edges if e[0] in quad1 + quad2 and e[1] in quad1 + quad2
           and ({e[0], e[1]} <= set(quad1) or {e[0], e[1]} <= set(quad2))}
    new = target(quad1) | target(quad2) | {_e(m, m)}
    added = sorted(new - old)
    removed = sorted(old - new)
    order_before = [v(2), v(1)] + [v(i) for i in range(3, m + 1)]
    if m % 2 == 1:
        raise ReplayError("k5-quad-restore is instantiated for even n")
    return _Config(5, g, added, removed, order_before, list(range(m)))


def _k4_pendant_cycle(n: int, k: int) -> _Config:
    """Two apexes over ``u, v, v_3`` hanging off ``v_4``; ``v_3 v_4`` is traded for ``v_3 u, v_3 v``.

    ``G'`` contains the 4-cycle ``u v_3 v v_4``; listing it as ``v_3, u, v, v_4``
    ahead of the strip keeps every inner edge within cyclic distance 2.
    """
    m = n - 2
    if m < 8:
        raise ReplayError(f"needs n >= 10, got {n}")
    # layout positions: 0 v3, 1 u, 2 v4, 3 v, then a ladder strip on 4..m-1
    v3, u, v4, vv = 0, 1, 2, 3
    pairs = [(v4, u), (v4, vv), (v4, v3), (v4, 4)]
    pairs += [(p, p + 2) for p in range(4, m - 2)]
    pairs += [(p, p + 1) for p in range(4, m - 1, 2)]
    inner = from_edge_list(m, pairs)
    g = _apexed(inner, False)
    return _Config(4, g, [(v3, u), (v3, vv)], [(v3, v4)], list(range(m)), [v3, u, vv, v4] + list(range(4, m)))


REPLAYS: dict[str, tuple[Callable[[int, int], _Config], int, int]] = {
    # name: (builder, default n, default k)
    "k4-double-chord": (_k4_base, 16, 0),
    "k4-chord-and-edge": (_k4_cross, 16, 0),
    "k4-chain-shift": (_k4_chain, 20, 3),
    "k4-chain-close": (_k4_close, 18, 2),
    "k4-wrap-chords": (_k4_wrap, 16, 0),
    "k4-pendant-cycle": (_k4_pendant_cycle, 14, 0),
    "k5-quad-restore": (_k5_quad_restore, 18, 0),
}


def _one_planar(g: Graph, order: list[int] | None, budget: int) -> str:
    m = g.n - 2
    if order is not None:
        try:
            cert = layout_certificate(g, order, m, m + 1)
        except ConstructionError:
            cert = None
        if cert is not None and verify_certificate(g, cert):
            return YES
    return is_one_planar(g, budget).status


def rewiring_replay(name: str, n: int | None = None, k: int | None = None,
                    tol: float = DEFAULT_TOL, budget: int = 10_000_000) -> ReplayReport:
    try:
        builder, n0, k0 = REPLAYS[name]
    except KeyError:
        raise ReplayError(f"unknown replay {name!r}; known: {', '.join(REPLAYS)}") from None
    n = n0 if n is None else n
    k = k0 if k is None else k
    cfg = builder(n, k)
    g = cfg.g
    g_new = g.remove_edges(cfg.removed).add_edges(cfg.added)
    before = spectral_radius(g, tol)
    after = spectral_radius(g_new, tol)
    x = before.perron
    x_delta = rayleigh_delta(g, x, cfg.added, cfg.removed).delta
    y_delta = None
    if cfg.y is not None:
        y = cfg.y(x)
        y_delta = quadratic_form(g_new, y) - quadratic_form(g, x)
    return ReplayReport(
        name=name,
        n=n,
        t=cfg.t,
        g=g,
        g_new=g_new,
        lambda_before=before.lam,
        lambda_after=after.lam,
        x_delta=x_delta,
        y_delta=y_delta,
        kt_free_before=is_kt_free(g, cfg.t),
        kt_free_after=is_kt_free(g_new, cfg.t),
        one_planar_before=_one_planar(g, cfg.order_before, budget),
        one_planar_after=_one_planar(g_new, cfg.order_after, budget),
        tol=tol,
    )
