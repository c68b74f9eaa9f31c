"""Dense reference eigenvalue solver, independent of the power iteration.

The adjacency matrix is reduced to a similar tridiagonal matrix with
Householder reflections; the largest eigenvalue is then isolated by
bisection on the characteristic polynomial, counting sign agreements of the
leading principal minors (a Sturm sequence) through their three-term
recurrence.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return a


def tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal and off-diagonal of a tridiagonal matrix similar to symmetric ``a``."""
    t = np.array(a, dtype=float)
    n = t.shape[0]
    for k in range(n - 2):
        x = t[k + 1 :, k].copy()
        alpha = np.linalg.norm(x)
        if alpha == 0.0:
            continue
        if x[0] > 0:
            alpha = -alpha
        v = x
        v[0] -= alpha
        vn = np.linalg.norm(v)
        if vn == 0.0:
            continue
        v /= vn
        # apply H = I - 2vv^T from both sides to the trailing block
        sub = t[k + 1 :, k:]
        sub -= 2.0 * np.outer(v, v @ sub)
        t[k + 1 :, k:] = sub
        sub = t[k:, k + 1 :]
        sub -= 2.0 * np.outer(sub @ v, v)
        t[k:, k + 1 :] = sub
    return np.diag(t).copy(), np.diag(t, 1).copy()


def count_below(d: np.ndarray, e: np.ndarray, x: float) -> int:
    """Number of eigenvalues of the tridiagonal matrix (d, e) that are < ``x``.

    Ratios of consecutive leading principal minors of ``T - xI`` follow
    ``q_k = (d_k - x) - e_{k-1}^2 / q_{k-1}``; the count of negative ratios is
    the count of eigenvalues below ``x``.
    """
    count = 0
    q = 1.0
    tiny = np.finfo(float).tiny
    for k in range(len(d)):
        off = e[k - 1] ** 2 / q if k else 0.0
        q = d[k] - x - off
        if q == 0.0:
            q = -tiny
        if q < 0:
            count += 1
    return count


def dense_lambda_max(g: Graph, tol: float = 1e-13) -> float:
    """Largest adjacency eigenvalue by Householder reduction plus Sturm bisection."""
    if g.n == 0 or g.m == 0:
        return 0.0
    d, e = tridiagonalize(adjacency_matrix(g))
    lo = 0.0
    hi = max(g.degrees()) + 1.0
    n = g.n
    # invariant: exactly n eigenvalues are below hi, fewer than n below lo
    while hi - lo > tol * max(1.0, hi):
        mid = 0.5 * (lo + hi)
        if count_below(d, e, mid) == n:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
