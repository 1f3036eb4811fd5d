"""Command line: invariants, Betti tables, polynomials, suspensions,
theorem suites and family sweeps.

Exit status is 0 on success, 1 when a verification suite has a failing
instance and 2 for bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .betti import HOCHSTER_LIMIT, hochster_betti_table
from .complexes import ComplexError
from .graph import (
    MAX_VERTICES,
    Graph,
    GraphError,
    big_height,
    enumerate_maximal_independent_sets,
    family,
    format_edge_list,
    parse_edge_list,
    suspend,
)
from .indpoly import a_invariant, h_polynomial, independence_polynomial
from .linalg import RATIONALS, check_field, field_name
from .theorems import THEOREM_IDS, VerifyParams, WindowError, verify_theorem

AUTO = "auto-maximal-independent"


class InputError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    graph: Graph | None
    source: str
    suspend: str | None
    field: int
    fmt: str
    max_n: int
    seed: int
    jobs: int


# -- argument parsing -----------------------------------------------------------

def parse_field(text: str) -> int:
    t = text.strip().lower()
    if t in ("q", "qq", "0"):
        return RATIONALS
    if t.startswith("gf:"):
        try:
            return check_field(int(t[3:]))
        except ValueError as exc:
            raise InputError(f"bad field {text!r}: {exc}") from None
    raise InputError(f"bad field {text!r}; use q or gf:P")


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise InputError(f"bad range {text!r}; use A..B") from None
    if a > b:
        raise InputError(f"empty range {text!r}")
    return a, b


def suspension_sets(G: Graph, choice: str | None) -> list[tuple[str | None, int | None]]:
    """``(label, mask)`` pairs; ``mask is None`` means no suspension."""
    if choice is None:
        return [(None, None)]
    if choice == "full":
        return [("full", G.full_mask)]
    if choice == AUTO:
        return [(",".join(G.names(C)), C) for C in enumerate_maximal_independent_sets(G)]
    items = [x.strip() for x in choice.split(",") if x.strip()]
    try:
        C = G.vertex_set(int(x) if x.isdigit() else x for x in items)
    except GraphError as exc:
        raise InputError(f"bad suspension set {choice!r}: {exc}") from None
    return [(",".join(G.names(C)), C)]


def load_graph(args) -> tuple[Graph, str]:
    if args.path is not None:
        return family("path", args.path), f"P{args.path}"
    if args.cycle is not None:
        return family("cycle", args.cycle), f"C{args.cycle}"
    try:
        with open(args.edges, encoding="utf-8") as fh:
            return parse_edge_list(fh.read()), args.edges
    except OSError as exc:
        raise InputError(f"cannot read {args.edges}: {exc.strerror}") from None


def _graph_source(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--path", type=int, metavar="N", help="path on N vertices")
    g.add_argument("--cycle", type=int, metavar="N", help="cycle on N vertices")
    g.add_argument("--edges", metavar="FILE", help="edge list: n, then 1-based 'u v' lines")


def _common(p: argparse.ArgumentParser, fmt: str = "text") -> None:
    p.add_argument("--field", default="q", help="q (rationals) or gf:P (default q)")
    p.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default=fmt)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=None, metavar="K",
                   help="refuse graphs with more than K vertices")
    p.add_argument("--jobs", type=int, default=1, metavar="J")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="edgeideal", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    for name, hlp in (("invariants", "alpha, bight, reg, pdim, P_G, M, a, h"),
                      ("betti", "graded Betti table"),
                      ("indpoly", "polynomial data only (no homology)"),
                      ("suspend", "print the suspended graph as an edge list")):
        p = sub.add_parser(name, help=hlp)
        _graph_source(p)
        p.add_argument("--suspend", metavar="LIST|full|" + AUTO,
                       help="1-based vertices or labels, comma separated")
        _common(p)

    p = sub.add_parser("verify", help="run a theorem suite")
    p.add_argument("theorem", choices=THEOREM_IDS)
    p.add_argument("--n", dest="window", metavar="A..B", help="vertex-count window")
    p.add_argument("--samples", type=int, default=None, help="random graphs per n beyond n = 5")
    _common(p)

    p = sub.add_parser("sweep", help="CSV of invariants across a family")
    p.add_argument("--family", choices=("path", "cycle"), required=True)
    p.add_argument("--n", dest="window", metavar="A..B", required=True)
    p.add_argument("--suspend", metavar="full|" + AUTO)
    _common(p, fmt="csv")
    return ap


# -- output -----------------------------------------------------------------------

def emit(records: list[dict], fmt: str, out) -> None:
    """JSON: one object per line.  CSV: header row, nested values as JSON.
    Text: ``key: value`` blocks separated by blank lines."""
    if fmt == "json":
        for r in records:
            out.write(json.dumps(r) + "\n")
    elif fmt == "csv":
        keys = list(dict.fromkeys(k for r in records for k in r))
        w = csv.writer(out, lineterminator="\n")
        w.writerow(keys)
        for r in records:
            w.writerow([_cell(r.get(k)) for k in keys])
    else:
        for k, r in enumerate(records):
            if k:
                out.write("\n")
            width = max(map(len, r), default=0)
            for key, v in r.items():
                out.write(f"{key.ljust(width)}  {v if isinstance(v, str) else json.dumps(v)}\n")


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    return json.dumps(v)


def read_records(text: str, fmt: str) -> list[dict]:
    """Inverse of :func:`emit` for the json and csv formats."""
    if fmt == "json":
        return [json.loads(line) for line in text.splitlines() if line.strip()]
    if fmt == "csv":
        rows = list(csv.reader(io.StringIO(text)))
        out = []
        for row in rows[1:]:
            rec = {}
            for k, v in zip(rows[0], row):
                if v == "":
                    rec[k] = None
                    continue
                try:
                    rec[k] = json.loads(v)
                except json.JSONDecodeError:
                    rec[k] = v
            out.append(rec)
        return out
    raise ValueError("text output is not meant to be parsed back")


# -- commands -----------------------------------------------------------------------

def _targets(cfg: RunConfig) -> list[tuple[str | None, Graph]]:
    G = cfg.graph
    out = []
    for label, C in suspension_sets(G, cfg.suspend):
        out.append((label, G if C is None else suspend(G, C)))
    for _, H in out:
        if H.n > cfg.max_n:
            raise InputError(f"{H.n} vertices exceeds --max-n {cfg.max_n}")
    return out


def poly_record(H: Graph) -> dict:
    P = independence_polynomial(H)
    rep = a_invariant(H)
    return {"alpha": rep.alpha, "indpoly": P.to_json(), "indpoly_text": str(P),
            "M": rep.M, "a": rep.a, "h": h_polynomial(H).to_json(), "hdeg": rep.hdeg}


def invariants_record(H: Graph, field: int, jobs: int) -> dict:
    table = hochster_betti_table(H, field, jobs=jobs)
    return {"n": H.n, "edges": H.edge_count, "field": field_name(field),
            "bight": big_height(H) if H.edge_count else 0,
            "reg": table.reg, "pdim": table.pdim, **poly_record(H)}


def cmd_graph(cfg: RunConfig, out) -> int:
    records = []
    for label, H in _targets(cfg):
        head = {"graph": cfg.source, "suspend": label}
        if cfg.command == "invariants":
            records.append({**head, **invariants_record(H, cfg.field, cfg.jobs)})
        elif cfg.command == "indpoly":
            records.append({**head, "n": H.n, **poly_record(H)})
        elif cfg.command == "betti":
            t = hochster_betti_table(H, cfg.field, jobs=cfg.jobs)
            if cfg.fmt == "text":
                out.write(f"# {cfg.source}" + (f" suspended over {label}" if label else "") + "\n")
                out.write(str(t))
                continue
            if cfg.fmt == "csv":
                records += [{**head, **r} for r in t.to_records()]
            else:
                records.append({**head, "n": H.n, "field": t.field, "table": t.to_records(),
                                "reg": t.reg, "pdim": t.pdim})
        else:  # suspend
            if cfg.fmt == "text":
                out.write(format_edge_list(H))
                continue
            records.append({**head, "n": H.n, "labels": list(H.labels),
                            "edges": [[i + 1, j + 1] for i, j in H.edges()]})
    if records:
        emit(records, cfg.fmt, out)
    return 0


def cmd_verify(args, field: int, out) -> int:
    n_min = n_max = None
    if args.window:
        n_min, n_max = parse_range(args.window)
    if args.max_n is not None and n_max is not None and n_max > args.max_n:
        raise InputError(f"window end {n_max} exceeds --max-n {args.max_n}")
    params = VerifyParams(n_min, n_max, args.samples, args.seed, field, args.jobs)
    try:
        report = verify_theorem(args.theorem, params)
    except WindowError as exc:
        raise InputError(str(exc)) from None
    if args.fmt == "json":
        out.write(report.to_jsonl())
    elif args.fmt == "csv":
        emit([{"id": r.id, "holds": r.holds, "instance": r.instance} for r in report.records], "csv", out)
    else:
        out.write(report.summary())
        for r in report.failures():
            out.write(r.to_json() + "\n")
    return 0 if report.passed else 1


def cmd_sweep(args, field: int, out) -> int:
    lo, hi = parse_range(args.window)
    cap = args.max_n if args.max_n is not None else HOCHSTER_LIMIT - 1
    records = []
    for n in range(lo, hi + 1):
        G = family(args.family, n)
        for label, C in suspension_sets(G, args.suspend):
            H = G if C is None else suspend(G, C)
            if H.n > cap:
                raise InputError(f"{H.n} vertices exceeds --max-n {cap}")
            records.append({"family": args.family, "n": n, "suspend": label,
                            **invariants_record(H, field, args.jobs)})
    emit(records, args.fmt, out)
    return 0


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        field = parse_field(args.field)
        if args.jobs < 1:
            raise InputError("--jobs must be at least 1")
        if args.command == "verify":
            return cmd_verify(args, field, out)
        if args.command == "sweep":
            return cmd_sweep(args, field, out)
        G, source = load_graph(args)
        limit = MAX_VERTICES if args.command in ("indpoly", "suspend") else HOCHSTER_LIMIT
        max_n = min(limit, args.max_n) if args.max_n is not None else limit
        cfg = RunConfig(args.command, G, source, args.suspend, field, args.fmt, max_n, args.seed, args.jobs)
        return cmd_graph(cfg, out)
    except (InputError, GraphError, ComplexError, ValueError, KeyError) as exc:
        print(f"edgeideal: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
