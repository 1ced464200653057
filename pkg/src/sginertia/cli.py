"""Command-line interface: ``sginertia analyze | verify | catalog``.

All commands print one JSON object per line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .catalog import CatalogError, ExtremalCatalog
from .enumeration import EnumerationSpec, LimitError
from .families import classify_negative_inertia, classify_nullity, classify_positive_inertia, list_memberships
from .fileio import ParseError, read_signed_graph
from .graph import SignedGraph
from .inertia import determinant_exact, inertia_exact
from .invariants import girth, is_balanced, is_connected
from .verify import (
    THEOREM_IDS,
    UNICYCLIC_THEOREMS,
    derive_catalog,
    matches_gamma1_anchor,
    verify_structure_lemmas,
    verify_theorem,
)

DEFAULT_MAX_N_CAP = 9
DEFAULT_STORE = "catalog.sgc"


def _emit(record: dict, out) -> None:
    out.write(json.dumps(record) + "\n")


def analyze_record(g: SignedGraph) -> dict:
    gi = girth(g)
    inertia = inertia_exact(g)
    connected = is_connected(g)
    rec = {
        "n": g.n,
        "m": g.m,
        "connected": connected,
        "girth": str(gi),
        "shortest_cycle": list(gi.cycle),
        "balanced": is_balanced(g).balanced,
        "inertia": {"pos": inertia.pos, "neg": inertia.neg, "nul": inertia.nul},
        "det": determinant_exact(g),
        "classification": {},
        "list_items": [],
        "notes": [],
    }
    if not connected:
        rec["notes"].append("disconnected: the girth theorems assume a connected graph, no tags")
    elif gi.length is None:
        rec["notes"].append("acyclic: girth undefined, no cycle-theorem tags")
    else:
        for key, fn in (
            ("negative", classify_negative_inertia),
            ("positive", classify_positive_inertia),
            ("nullity", classify_nullity),
        ):
            rec["classification"][key] = fn(g).to_dict()
        rec["list_items"] = list_memberships(g)
    return rec


def parse_girth(text: str) -> tuple[int, int]:
    """``5`` or ``5..7``."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"girth must be N or A..B, got {text!r}") from None
    if a < 3 or b < a:
        raise argparse.ArgumentTypeError(f"bad girth range {text!r}")
    return a, b


def _max_n_cap() -> int:
    raw = os.environ.get("SG_MAX_N")
    return int(raw) if raw else DEFAULT_MAX_N_CAP


def _check_cap(max_n: int) -> None:
    cap = _max_n_cap()
    if max_n > cap:
        raise LimitError(f"--max-n {max_n} exceeds the SG_MAX_N safety cap {cap}")


def cmd_analyze(args, out) -> int:
    try:
        g = read_signed_graph(args.path)
    except ParseError as exc:
        print(f"{args.path}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{args.path}: {exc.strerror}", file=sys.stderr)
        return 2
    _emit(analyze_record(g), out)
    return 0


def cmd_verify(args, out) -> int:
    theorems = list(THEOREM_IDS) if args.theorem == "all" else [args.theorem]
    if args.theorem not in (*THEOREM_IDS, "all", "lemmas"):
        print(f"unknown theorem {args.theorem!r}", file=sys.stderr)
        return 2
    try:
        _check_cap(args.max_n)
        lo, hi = args.girth if args.girth else (None, None)
        spec = EnumerationSpec(max_n=args.max_n, min_girth=lo, max_girth=hi, cyclomatic_cap=args.cap)
        if args.theorem == "lemmas":
            reports = [verify_structure_lemmas(spec)]
        else:
            reports = []
            for t in theorems:
                sweep = args.max_girth if t in UNICYCLIC_THEOREMS else None
                if args.max_girth is not None and sweep is None and args.theorem != "all":
                    raise LimitError(f"--max-girth (constructive sweep) applies to {', '.join(UNICYCLIC_THEOREMS)}")
                reports.append(verify_theorem(t, spec, jobs=args.jobs, max_girth=sweep))
    except LimitError as exc:
        print(f"limit: {exc}", file=sys.stderr)
        return 2
    sink = open(args.output, "w") if args.output else None
    try:
        for r in reports:
            for rec in r.records():
                _emit(rec, out)
                if sink:
                    _emit(rec, sink)
            if args.table:
                out.write(r.table_text())
    finally:
        if sink:
            sink.close()
    return 0 if all(r.ok for r in reports) else 1


def cmd_catalog(args, out) -> int:
    store = Path(args.store)
    if args.action == "build":
        lo, hi = args.girth if args.girth else (5, 5)
        try:
            _check_cap(args.max_n)
            spec = EnumerationSpec(max_n=args.max_n, cyclomatic_cap=args.cap)
            cat = derive_catalog(lo, hi, spec)
        except (LimitError, ValueError) as exc:
            print(f"limit: {exc}", file=sys.stderr)
            return 2
        cat.save(store)
        _emit({"type": "catalog", "store": str(store), "entries": len(cat), "provenance": cat.provenance}, out)
        return 0
    try:
        cat = ExtremalCatalog.load(store, verify=True)
    except CatalogError as exc:
        print(f"{store}: {exc}", file=sys.stderr)
        return 1
    for e in cat:
        g = e.graph()
        anchors = []
        if matches_gamma1_anchor(g):
            anchors.append("Gamma1 anchor: B(4,3,4), negative y-cycle, a16*a27*a67=+1")
        _emit(
            {
                "type": "entry",
                "graph6": e.certificate.underlying,
                "cotree_bits": e.certificate.bits,
                "girth": e.girth,
                "inertia": list(e.inertia),
                "n": e.order,
                "branch": e.branch,
                "name": e.name,
                "anchors": anchors,
                "reverified": True,
            },
            out,
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sginertia", description="Exact inertia, girth and switching for signed graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="report girth, balance, inertia and family tags of a graph file")
    a.add_argument("path")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="verify a theorem exhaustively")
    v.add_argument("theorem", help="theorem id (3.1 .. 5.3), 'all' or 'lemmas'")
    v.add_argument("--max-n", type=int, default=6)
    v.add_argument("--girth", type=parse_girth, help="N or A..B")
    v.add_argument("--max-girth", type=int, help="constructive sweep bound for 3.2/4.2/5.2")
    v.add_argument("--cap", type=int, help="cyclomatic-number cap")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--table", action="store_true", help="also print the girth x value matrix")
    v.add_argument("--output", help="write the records to this file too")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("catalog", help="build or show the extremal catalog")
    c.add_argument("action", choices=("build", "show"))
    c.add_argument("--girth", type=parse_girth, help="N or A..B (default 5)")
    c.add_argument("--max-n", type=int, default=9)
    c.add_argument("--cap", type=int, default=2, help="cyclomatic-number cap (default 2)")
    c.add_argument("--store", "--output", dest="store", default=DEFAULT_STORE)
    c.set_defaults(func=cmd_catalog)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
