"""Numeric and exact evaluation of the proof inequalities.

Each inequality depending on the spectral radius is evaluated at
``lambda = sqrt(2n - 4)``, the spectral radius of K_{2,n-2} and therefore a
lower bound for every graph containing it. Multiplying out the positive
denominators turns ``lhs > rhs`` into ``P(lambda) > 0`` for an integer
polynomial ``P``; with ``lambda^2 = s`` an integer, ``P(sqrt(s)) = A + B*sqrt(s)``
and its sign is decided exactly. Threshold scans use the exact sign.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

EPSILON = Fraction(1, 21000)


def sign_a_plus_b_sqrt(a: Fraction, b: Fraction, s: int) -> int:
    """Exact sign of ``a + b*sqrt(s)`` for rational ``a, b`` and integer ``s >= 0``."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sb == 0 or s == 0:
        return sa
    if sa == 0:
        return sb
    if sa == sb:
        return sa
    # opposite signs: compare a^2 with b^2 s
    d = a * a - b * b * s
    if d == 0:
        return 0
    return sa if d > 0 else sb


def poly_sign_at_sqrt(coeffs: list[int], s: int) -> int:
    """Sign of ``sum c_k lambda^k`` at ``lambda = sqrt(s)`` (coefficients low to high)."""
    a = Fraction(0)
    b = Fraction(0)
    for k, c in enumerate(coeffs):
        if k % 2 == 0:
            a += c * Fraction(s) ** (k // 2)
        else:
            b += c * Fraction(s) ** (k // 2)
    return sign_a_plus_b_sqrt(a, b, s)


@dataclass(frozen=True)
class _Spectral:
    """An inequality ``lhs(lambda) > rhs(lambda)`` equivalent to ``P(lambda) > 0``."""

    lhs: Callable[[float], float]
    rhs: Callable[[float], float]
    poly: list[int]
    min_lambda: int  # bounds used to derive the inequality need lambda above this
    text: str


@dataclass(frozen=True)
class _Constant:
    lhs: Fraction
    rhs: Fraction
    text: str


@dataclass(frozen=True)
class _Linear:
    """``lhs(n) > rhs(n)`` with both sides affine in ``n``."""

    lhs: Callable[[Fraction], Fraction]
    rhs: Callable[[Fraction], Fraction]
    text: str


INEQUALITIES: dict[str, object] = {
    # net gain of one degree-raising step against the loss of six edges among low entries
    "degree-raise-closing": _Spectral(
        lhs=lambda lam: 2.0 / (5.0 * lam),
        rhs=lambda lam: 6 * 6400 / lam**2,
        poly=[-192000, 2],
        min_lambda=0,
        text="2/(5 lam) > 6*6400/lam^2",
    ),
    "k4-perron-gap": _Spectral(
        lhs=lambda lam: 2.0 * (8.0 / (lam - 7.0) ** 2 - 4.0 / lam**2),
        rhs=lambda lam: 0.0,
        poly=[-196, 56, 4],
        min_lambda=7,
        text="2(8/(lam-7)^2 - 4/lam^2) > 0",
    ),
    "k5-perron-gap": _Spectral(
        lhs=lambda lam: 44.0 / (lam - 7.0) ** 2 - 40.0 / lam**2,
        rhs=lambda lam: 0.0,
        poly=[-1960, 560, 4],
        min_lambda=7,
        text="44/(lam-7)^2 - 40/lam^2 > 0",
    ),
    "degree-raise-step": _Constant(
        lhs=2 * ((1 + 1 - 47 * EPSILON) - (1 + Fraction(7, 10))),
        rhs=Fraction(2, 5),
        text="2((2 - 47 eps) - 1.7) > 2/5 with eps = 1/21000",
    ),
    "degree-raise-tuples": _Linear(
        lhs=lambda n: (1 - 140 * EPSILON) * n - Fraction(2, 5) * n,
        rhs=lambda n: Fraction(2),
        text="(1 - 140 eps) n - 2n/5 > 2 with eps = 1/21000",
    ),
}


@dataclass(frozen=True)
class InequalityAudit:
    name: str
    n: int | None
    lam: float | None
    lhs: float
    rhs: float
    holds: bool
    in_domain: bool = True
    threshold_n: int | None = None

    def to_dict(self) -> dict:
        return {
            "schema": "spex1p.audit/1",
            "name": self.name,
            "n": self.n,
            "lambda": self.lam,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "in_domain": self.in_domain,
            "threshold_n": self.threshold_n,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _lookup(name: str):
    try:
        return INEQUALITIES[name]
    except KeyError:
        raise ValueError(f"unknown inequality {name!r}; known: {', '.join(sorted(INEQUALITIES))}") from None


def _holds_at_n(name: str, n: int) -> bool:
    spec = _lookup(name)
    if isinstance(spec, _Spectral):
        s = 2 * n - 4
        if s <= spec.min_lambda**2:
            return False
        return poly_sign_at_sqrt(spec.poly, s) > 0
    if isinstance(spec, _Linear):
        return spec.lhs(Fraction(n)) > spec.rhs(Fraction(n))
    return spec.lhs > spec.rhs


def inequality_audit(name: str, n: int | None = None, lam: float | None = None) -> InequalityAudit:
    """Evaluate one inequality at ``n`` (with ``lambda = sqrt(2n-4)``) or at an explicit ``lambda``.

    For ``n`` given, ``holds`` is decided exactly; for a bare ``lambda`` it is
    the floating-point comparison.
    """
    spec = _lookup(name)
    if isinstance(spec, _Constant):
        return InequalityAudit(name, n, None, float(spec.lhs), float(spec.rhs), spec.lhs > spec.rhs)
    if isinstance(spec, _Linear):
        if n is None:
            raise ValueError(f"{name} needs n")
        lhs, rhs = spec.lhs(Fraction(n)), spec.rhs(Fraction(n))
        return InequalityAudit(name, n, None, float(lhs), float(rhs), lhs > rhs)
    if lam is None:
        if n is None:
            raise ValueError(f"{name} needs n or lambda")
        if 2 * n - 4 < 0:
            raise ValueError("n must be at least 2")
        lam = math.sqrt(2 * n - 4)
    in_domain = lam > spec.min_lambda
    if lam <= 0 or lam == 7.0 and spec.min_lambda == 7:
        raise ValueError(f"{name} is undefined at lambda = {lam}")
    lhs, rhs = spec.lhs(lam), spec.rhs(lam)
    if n is not None:
        holds = _holds_at_n(name, n)
    else:
        holds = in_domain and lhs > rhs
    return InequalityAudit(name, n, lam, lhs, rhs, holds, in_domain)


def threshold_scan(name: str, lo: int = 3, hi: int = 10**12) -> InequalityAudit:
    """Smallest ``n`` in ``[lo, hi]`` from which the inequality holds for every larger ``n``.

    Each polynomial here has a positive leading coefficient and one positive
    root, so the exact predicate switches from false to true at most once and
    bisection is valid.
    """
    if not _holds_at_n(name, hi):
        raise ValueError(f"{name} does not hold at n = {hi}")
    if _holds_at_n(name, lo):
        t = lo
    else:
        a, b = lo, hi  # fails at a, holds at b
        while b - a > 1:
            mid = (a + b) // 2
            if _holds_at_n(name, mid):
                b = mid
            else:
                a = mid
        t = b
    audit = inequality_audit(name, n=t)
    return InequalityAudit(audit.name, t, audit.lam, audit.lhs, audit.rhs, audit.holds, audit.in_domain, t)
