"""Brute-force spectral extremal sets on small n and the K5-free candidate duel."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .constructions import candidate_graphs, qp_members
from .graph import Graph, is_kt_free
from .graph6 import graph6_encode
from .generate import all_graphs
from .planarity import DEFAULT_BUDGET, UNKNOWN, YES, is_one_planar
from .spectral import DEFAULT_TOL, ConvergenceError, spectral_radius

MAX_SPEX_N = 9
CSV_COLUMNS = ("n", "t", "candidate", "lambda", "gap", "winner", "complete")


@dataclass(frozen=True)
class SpexReport:
    n: int
    t: int
    maximizers: list[tuple[Graph, float]]
    lambda_max: float | None
    search_space: int
    complete: bool
    kt_free: int = 0
    tested: int = 0
    unknown: list[tuple[Graph, float]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "schema": "spex1p.spex/1",
            "n": self.n,
            "t": self.t,
            "lambda_max": self.lambda_max,
            "maximizers": [{"graph6": graph6_encode(g), "lambda": lam, "edges": g.m} for g, lam in self.maximizers],
            "search_space": self.search_space,
            "kt_free": self.kt_free,
            "tested": self.tested,
            "unknown": [{"graph6": graph6_encode(g), "lambda": lam} for g, lam in self.unknown],
            "complete": self.complete,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def csv_rows(self) -> list[dict]:
        return [
            {
                "n": self.n,
                "t": self.t,
                "candidate": graph6_encode(g),
                "lambda": repr(lam),
                "gap": repr(self.lambda_max - lam),
                "winner": graph6_encode(g),
                "complete": str(self.complete).lower(),
            }
            for g, lam in self.maximizers
        ]


def spex_bruteforce(n: int, t: int, tol: float = DEFAULT_TOL, budget: int = DEFAULT_BUDGET) -> SpexReport:
    """Maximum spectral radius over K_t-free 1-planar graphs on ``n`` vertices.

    Classes are ranked by spectral radius and tested for 1-planarity from the
    top until the first Yes; every class within ``2*tol`` of that value is
    tested too and reported as a co-maximizer when Yes. An Unknown verdict at
    or above the maximum makes the report incomplete.
    """
    if not 1 <= n <= MAX_SPEX_N:
        raise ValueError(f"spex_bruteforce supports 1 <= n <= {MAX_SPEX_N}, got {n}")
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    total = 0
    ranked = []
    for g in all_graphs(n):
        total += 1
        if is_kt_free(g, t):
            ranked.append((-spectral_radius(g, tol).lam, graph6_encode(g), g))
    ranked.sort(key=lambda r: (r[0], r[1]))
    lam_max = None
    maximizers: list[tuple[Graph, float]] = []
    unknown: list[tuple[Graph, float]] = []
    tested = 0
    for neg, _, g in ranked:
        lam = -neg
        if lam_max is not None and lam < lam_max - 2 * tol:
            break
        tested += 1
        verdict = is_one_planar(g, budget)
        if verdict.status == YES:
            if lam_max is None:
                lam_max = lam
            maximizers.append((g, lam))
        elif verdict.status == UNKNOWN:
            unknown.append((g, lam))
    return SpexReport(
        n=n,
        t=t,
        maximizers=maximizers,
        lambda_max=lam_max,
        search_space=total,
        complete=not unknown,
        kt_free=len(ranked),
        tested=tested,
        unknown=unknown,
    )


# --- candidate duel ----------------------------------------------------------

def duel_candidate_names(n: int) -> list[str]:
    m = n - 2
    if m % 2 == 0:
        return ["2K1+C2", "K2+QP"]
    return ["2K1+C2-"] + [f"K2+P2#{k}" for k in range(len(qp_members(m)))]


@dataclass(frozen=True)
class DuelRow:
    n: int
    t: int
    candidates: list[str]
    lambdas: list[float]
    gap: float
    winner: str
    complete: bool

    def to_csv_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "candidate": ";".join(self.candidates),
            "lambda": ";".join(repr(x) for x in self.lambdas),
            "gap": repr(self.gap),
            "winner": self.winner,
            "complete": str(self.complete).lower(),
        }

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "candidates": [{"name": c, "lambda": x} for c, x in zip(self.candidates, self.lambdas)],
            "gap": self.gap,
            "winner": self.winner,
            "complete": self.complete,
        }


def duel_row(n: int, t: int = 5, tol: float = DEFAULT_TOL) -> DuelRow:
    if t != 5:
        raise ValueError("the candidate duel is defined for t = 5")
    names = duel_candidate_names(n)
    graphs = candidate_graphs(t, n)
    if len(graphs) != len(names):
        raise AssertionError("candidate names out of sync with candidate_graphs")
    lams = []
    complete = True
    for g in graphs:
        try:
            lams.append(spectral_radius(g, tol).lam)
        except ConvergenceError as exc:
            lams.append(exc.result.lam)
            complete = False
    order = sorted(range(len(lams)), key=lambda i: (-lams[i], i))
    best = lams[order[0]]
    tied = [names[i] for i in order if best - lams[i] <= 2 * tol]
    gap = best - lams[order[1]] if len(order) > 1 else 0.0
    winner = tied[0] if len(tied) == 1 else "tie:" + "|".join(tied)
    return DuelRow(n, t, names, lams, gap, winner, complete)


def candidate_duel(ns, t: int = 5, tol: float = DEFAULT_TOL) -> list[DuelRow]:
    return [duel_row(n, t, tol) for n in ns]


def duel_csv(rows: list[DuelRow]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r.to_csv_dict())
    return buf.getvalue()


def duel_json(rows: list[DuelRow], tol: float) -> str:
    return json.dumps({"schema": "spex1p.duel/1", "tol": tol, "rows": [r.to_dict() for r in rows]}, indent=2)
