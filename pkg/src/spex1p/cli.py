"""Command-line front end.

Exit codes: 0 success (every check passed), 1 a check failed, 2 a result is
Unknown or incomplete (budget or iteration cap), 3 usage or input error.
Graphs are read as graph6 lines from files or stdin; JSON output carries a
top-level ``schema`` field and CSV columns are fixed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

from .audits import INEQUALITIES, inequality_audit, threshold_scan
from .constructions import ConstructionError, FamilySpec, census
from .extremal import CSV_COLUMNS, MAX_SPEX_N, candidate_duel, duel_csv, duel_json, spex_bruteforce
from .graph import Graph, GraphError, is_kt_free
from .graph6 import Graph6Error, graph6_encode, read_graph6
from .planarity import (
    DEFAULT_BUDGET,
    NO,
    UNKNOWN,
    YES,
    is_one_planar,
    is_planar,
    necessary_conditions,
    verify_certificate,
)
from .rewiring import REPLAYS, ReplayError, rewiring_replay
from .spectral import DEFAULT_MAX_ITER, DEFAULT_TOL, ConvergenceError, spectral_radius

EXIT_OK, EXIT_FAIL, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 3

COMMANDS = ("construct", "spectral", "check", "spex", "duel", "audit", "replay")
FORMATS = ("json", "csv", "graph6")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    command: str
    tol: float = DEFAULT_TOL
    budget: int = DEFAULT_BUDGET
    seed: int = 0
    output_path: str | None = None
    format: str = "json"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if not self.tol > 0:
            raise UsageError("--tol must be positive")
        if self.budget <= 0:
            raise UsageError("--budget must be positive")
        if self.format not in FORMATS:
            raise UsageError(f"--format must be one of {', '.join(FORMATS)}")


def parse_range(text: str) -> range:
    """``a:b[:step]`` with both ends included."""
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise UsageError(f"range must be a:b or a:b:step, got {text!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
        step = int(parts[2]) if len(parts) == 3 else 1
    except ValueError:
        raise UsageError(f"range must be integers, got {text!r}") from None
    if step <= 0 or b < a:
        raise UsageError(f"empty or descending range {text!r}")
    return range(a, b + 1, step)


def _count(text: str) -> int:
    try:
        val = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if val != int(val):
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    return int(val)


def _read_inputs(paths: Sequence[str]) -> Iterator[tuple[str, int, Graph]]:
    if not paths:
        paths = ["-"]
    for p in paths:
        if p == "-":
            source, lines = "<stdin>", sys.stdin.read().splitlines()
        else:
            try:
                lines = Path(p).read_text(encoding="ascii").splitlines()
            except (OSError, UnicodeDecodeError) as exc:
                raise UsageError(f"cannot read {p}: {exc}") from None
            source = p
        try:
            for lineno, g in read_graph6(lines):
                yield source, lineno, g
        except Graph6Error as exc:
            raise UsageError(f"{source}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _cell(v):
    return str(v).lower() if isinstance(v, bool) else v


def _csv(rows: list[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    w.writeheader()
    w.writerows({k: _cell(v) for k, v in r.items()} for r in rows)
    return buf.getvalue()


def _jsonl(records: list[dict]) -> str:
    return "".join(json.dumps(r) + "\n" for r in records)


# --- commands -----------------------------------------------------------------

def cmd_construct(args, cfg: RunConfig) -> int:
    if args.n is None or args.family is None:
        raise UsageError("construct needs --family and --n")
    spec = FamilySpec(args.family, args.n, args.variant, args.t)
    g, cert = spec.build()
    code = graph6_encode(g)
    verified = None if cert is None else verify_certificate(g, cert)
    quads = None if cert is None else cert.to_quads()
    cen = census(g)
    if cfg.output_path is not None:
        # the output path is a prefix for the three artefacts
        base = cfg.output_path
        Path(base + ".g6").write_text(code + "\n", encoding="ascii")
        Path(base + ".cert.json").write_text(
            json.dumps({"schema": "spex1p.certificate/1", "crossings": quads, "verified": verified}) + "\n",
            encoding="utf-8",
        )
        Path(base + ".census.json").write_text(
            json.dumps({"schema": "spex1p.census/1", **cen}) + "\n", encoding="utf-8"
        )
    elif cfg.format == "graph6":
        _emit(code, None)
    elif cfg.format == "csv":
        _emit(_csv([{"graph6": code, "n": cen["n"], "e": cen["e"], "triangles": cen["triangles"],
                     "degrees": " ".join(map(str, cen["degrees"])), "verified": verified}],
                   ("graph6", "n", "e", "triangles", "degrees", "verified")), None)
    else:
        _emit(json.dumps({
            "schema": "spex1p.construct/1",
            "spec": spec.to_dict(),
            "graph6": code,
            "certificate": quads,
            "verified": verified,
            "census": cen,
        }), None)
    return EXIT_OK if verified is not False else EXIT_FAIL


def cmd_spectral(args, cfg: RunConfig) -> int:
    records = []
    status = EXIT_OK
    for source, lineno, g in _read_inputs(args.inputs):
        try:
            res = spectral_radius(g, cfg.tol, args.max_iter)
            converged = True
        except ConvergenceError as exc:
            res, converged = exc.result, False
            status = EXIT_UNKNOWN
        d = res.to_dict(with_vector=args.vector)
        d.update({"source": source, "line": lineno, "n": g.n, "converged": converged})
        records.append(d)
    if cfg.format == "csv":
        cols = ("source", "line", "n", "lambda", "residual", "iterations", "converged")
        _emit(_csv([{k: r[k] for k in cols} for r in records], cols), cfg.output_path)
    else:
        _emit(_jsonl(records), cfg.output_path)
    return status


def _check_one(g: Graph, which: str, t: int | None, budget: int) -> dict:
    if which == "planar":
        return {"status": YES if is_planar(g) else NO}
    if which == "one-planar":
        return is_one_planar(g, budget).to_dict()
    if which == "k-free":
        return {"status": YES if is_kt_free(g, t) else NO, "t": t}
    reason = necessary_conditions(g)
    return {"status": YES if reason is None else NO, **({"reason": reason} if reason else {})}


def cmd_check(args, cfg: RunConfig) -> int:
    if args.which == "k-free" and args.t is None:
        raise UsageError("check k-free needs --t")
    records = []
    failed = unknown = False
    for source, lineno, g in _read_inputs(args.inputs):
        d = _check_one(g, args.which, args.t, cfg.budget)
        d.pop("schema", None)
        failed |= d["status"] == NO
        unknown |= d["status"] == UNKNOWN
        records.append({"schema": "spex1p.check/1", "check": args.which, "source": source,
                        "line": lineno, "graph6": graph6_encode(g), **d})
    if cfg.format == "csv":
        cols = ("source", "line", "graph6", "check", "status", "reason")
        _emit(_csv([{k: r.get(k, "") for k in cols} for r in records], cols), cfg.output_path)
    else:
        _emit(_jsonl(records), cfg.output_path)
    if failed:
        return EXIT_FAIL
    return EXIT_UNKNOWN if unknown else EXIT_OK


def cmd_spex(args, cfg: RunConfig) -> int:
    if args.n is None or args.t is None:
        raise UsageError("spex needs --n and --t")
    if not 1 <= args.n <= MAX_SPEX_N:
        raise UsageError(f"spex supports 1 <= n <= {MAX_SPEX_N}")
    rep = spex_bruteforce(args.n, args.t, cfg.tol, cfg.budget)
    if cfg.format == "csv":
        _emit(_csv(rep.csv_rows(), CSV_COLUMNS), cfg.output_path)
    elif cfg.format == "graph6":
        _emit("".join(graph6_encode(g) + "\n" for g, _ in rep.maximizers), cfg.output_path)
    else:
        _emit(rep.to_json(), cfg.output_path)
    return EXIT_OK if rep.complete else EXIT_UNKNOWN


def cmd_duel(args, cfg: RunConfig) -> int:
    if args.range is None:
        raise UsageError("duel needs --range a:b[:step]")
    ns = parse_range(args.range)
    if ns[0] < 8:
        raise UsageError("duel needs n >= 8")
    rows = candidate_duel(ns, args.t if args.t is not None else 5, cfg.tol)
    text = duel_json(rows, cfg.tol) if cfg.format == "json" else duel_csv(rows)
    _emit(text, cfg.output_path)
    return EXIT_OK if all(r.complete for r in rows) else EXIT_UNKNOWN


def cmd_audit(args, cfg: RunConfig) -> int:
    names = sorted(INEQUALITIES) if args.name in (None, "all") else [args.name]
    records = []
    for name in names:
        if args.scan:
            records.append(threshold_scan(name).to_dict())
        elif args.range is not None:
            records.extend(inequality_audit(name, n=n).to_dict() for n in parse_range(args.range))
        else:
            records.append(inequality_audit(name, n=args.n, lam=args.lam).to_dict())
    if cfg.format == "csv":
        cols = ("name", "n", "lambda", "lhs", "rhs", "holds", "in_domain", "threshold_n")
        _emit(_csv([{k: r[k] for k in cols} for r in records], cols), cfg.output_path)
    else:
        _emit(_jsonl(records), cfg.output_path)
    return EXIT_OK if all(r["holds"] for r in records) else EXIT_FAIL


def cmd_replay(args, cfg: RunConfig) -> int:
    names = list(REPLAYS) if args.name in (None, "all") else [args.name]
    records = [rewiring_replay(name, args.n, args.k, cfg.tol, cfg.budget).to_dict() for name in names]
    if cfg.format == "csv":
        cols = ("name", "n", "t", "lambda_before", "lambda_after", "margin", "x_delta",
                "one_planar_before", "one_planar_after", "ok")
        _emit(_csv([{k: r[k] for k in cols} for r in records], cols), cfg.output_path)
    else:
        _emit(_jsonl(records), cfg.output_path)
    if any(UNKNOWN in (r["one_planar_before"], r["one_planar_after"]) for r in records):
        return EXIT_UNKNOWN
    return EXIT_OK if all(r["ok"] for r in records) else EXIT_FAIL


HANDLERS = {
    "construct": cmd_construct,
    "spectral": cmd_spectral,
    "check": cmd_check,
    "spex": cmd_spex,
    "duel": cmd_duel,
    "audit": cmd_audit,
    "replay": cmd_replay,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="spectral tolerance (default 1e-10)")
    common.add_argument("--budget", type=_count, default=DEFAULT_BUDGET,
                        help="1-planarity search node budget (default 1e7)")
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--out", default=None, help="output file (construct: path prefix)")

    p = _Parser(prog="spex1p", description="Spectral extremal 1-planar graph toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", parents=[common], help="build a named family member")
    c.add_argument("--family", required=True)
    c.add_argument("--n", type=int)
    c.add_argument("--t", type=int)
    c.add_argument("--variant", type=int)

    s = sub.add_parser("spectral", parents=[common], help="spectral radius of graph6 inputs")
    s.add_argument("inputs", nargs="*", help="graph6 files, '-' or nothing for stdin")
    s.add_argument("--max-iter", type=_count, default=DEFAULT_MAX_ITER)
    s.add_argument("--vector", action="store_true", help="include the Perron vector")

    k = sub.add_parser("check", parents=[common], help="planarity, 1-planarity, K_t-freeness, filters")
    k.add_argument("which", choices=("planar", "one-planar", "k-free", "filters"))
    k.add_argument("inputs", nargs="*")
    k.add_argument("--t", type=int)

    x = sub.add_parser("spex", parents=[common], help="brute-force spectral maximizers")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--t", type=int, required=True)

    d = sub.add_parser("duel", parents=[common], help="compare the K5-free candidates over a range of n")
    d.add_argument("--t", type=int, default=5, choices=(5,))
    d.add_argument("--range", required=True)

    a = sub.add_parser("audit", parents=[common], help="evaluate a proof inequality")
    a.add_argument("--name", choices=sorted(INEQUALITIES) + ["all"], default="all")
    a.add_argument("--n", type=int)
    a.add_argument("--lam", type=float)
    a.add_argument("--range")
    a.add_argument("--scan", action="store_true", help="find the threshold n")

    r = sub.add_parser("replay", parents=[common], help="replay an edge rewiring")
    r.add_argument("--name", choices=list(REPLAYS) + ["all"], default="all")
    r.add_argument("--n", type=int)
    r.add_argument("--k", type=int)
    return p


_DEFAULT_FORMAT = {"duel": "csv"}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        fmt = args.format or _DEFAULT_FORMAT.get(args.command, "json")
        cfg = RunConfig(args.command, args.tol, args.budget, 0, args.out, fmt)
        return HANDLERS[args.command](args, cfg)
    except (UsageError, ConstructionError, ReplayError, GraphError, ValueError) as exc:
        print(f"spex1p {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
