"""Command-line front end: ``aalpha eval | verify | tightness | gen``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import sys
from pathlib import Path
from typing import Sequence

from aalpha.bounds import BOUND_IDS, BoundEvaluationError
from aalpha.graph import GraphError
from aalpha.graph6 import FormatError, write_graph6
from aalpha.harness import Evaluation, SourceError, load_corpus, load_source, parse_alpha_grid, sweep
from aalpha.spectra import ConvergenceError

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_SOLVER = 3

CSV_COLUMNS = (
    "graph6", "n", "m", "alpha", "bound_id", "applicable",
    "bound_value", "observed", "gap", "equality",
)

log = logging.getLogger("aalpha")


def _num(x: float) -> str:
    return "" if math.isnan(x) else repr(float(x))


def _json_num(x: float):
    return None if math.isnan(x) else float(x)


def csv_rows(ev: Evaluation, g6: str | None = None):
    g6 = g6 if g6 is not None else write_graph6(ev.graph)
    for r in ev.reports:
        yield [
            g6, ev.graph.n, ev.graph.m, repr(ev.spectrum.alpha), r.bound_id,
            int(r.applicable), _num(r.bound_value), _num(r.observed), _num(r.gap), int(r.equality),
        ]


def _open_out(path: str | None):
    if path is None:
        return sys.stdout
    return open(path, "w", newline="", encoding="ascii")


def _writer(fh):
    return csv.writer(fh, lineterminator="\n")


def _as_json(ev: Evaluation) -> dict:
    inv = ev.invariants
    return {
        "graph6": write_graph6(ev.graph),
        "invariants": {
            "n": inv.n, "m": inv.m, "max_degree": inv.max_degree,
            "second_max_degree": inv.second_max_degree,
            "second_largest_degree": inv.second_largest_degree,
            "min_degree": inv.min_degree, "mean_degree": inv.mean_degree,
            "zagreb1": inv.zagreb1, "zagreb2": inv.zagreb2,
            "clique_number": inv.clique_number, "diameter": inv.diameter,
            "connected": inv.connected, "bipartite": inv.bipartite, "irregular": inv.irregular,
            "degrees": list(inv.degrees),
        },
        "spectrum": {
            "alpha": ev.spectrum.alpha,
            "eigenvalues": [float(x) for x in ev.spectrum.eigenvalues],
            "residual": ev.spectrum.residual,
        },
        "bounds": [
            {
                "bound_id": r.bound_id, "side": r.side, "strict": r.strict,
                "applicable": r.applicable, "reason": r.reason,
                "bound_value": _json_num(r.bound_value), "observed": _json_num(r.observed),
                "gap": _json_num(r.gap), "equality": r.equality,
            }
            for r in ev.reports
        ],
    }


def _as_table(ev: Evaluation) -> str:
    inv = ev.invariants
    out = io.StringIO()
    print(f"graph6 {write_graph6(ev.graph)}  n={inv.n} m={inv.m}  alpha={ev.spectrum.alpha}", file=out)
    print(
        f"  max_degree={inv.max_degree} second_max_degree={inv.second_max_degree} "
        f"d2={inv.second_largest_degree} min_degree={inv.min_degree} mean_degree={inv.mean_degree:.6g}",
        file=out,
    )
    print(
        f"  Z1={inv.zagreb1} Z2={inv.zagreb2} omega={inv.clique_number} diameter={inv.diameter} "
        f"connected={inv.connected} bipartite={inv.bipartite} irregular={inv.irregular}",
        file=out,
    )
    eig = " ".join(f"{x:.10g}" for x in ev.spectrum.eigenvalues)
    print(f"  spectrum: {eig}", file=out)
    print(f"  {'bound':<8}{'side':<11}{'bound':>16}{'observed':>16}{'gap':>14}  note", file=out)
    for r in ev.reports:
        if not r.applicable:
            print(f"  {r.bound_id:<8}{r.side:<11}{'-':>16}{'-':>16}{'-':>14}  n/a: {r.reason}", file=out)
            continue
        note = "equality" if r.equality else ("VIOLATED" if r.gap < 0 else "")
        print(
            f"  {r.bound_id:<8}{r.side:<11} {r.bound_value:>15.10g} {r.observed:>15.10g} {r.gap:>13.4e}  {note}",
            file=out,
        )
    return out.getvalue()


def cmd_eval(args) -> int:
    graphs = load_source(args.source)
    evals = list(sweep(graphs, [args.alpha], threads=1))
    fh = _open_out(args.out)
    try:
        if args.format == "json":
            payload = [_as_json(e) for e in evals]
            json.dump(payload[0] if len(payload) == 1 else payload, fh, indent=2)
            fh.write("\n")
        elif args.format == "csv":
            w = _writer(fh)
            w.writerow(CSV_COLUMNS)
            for e in evals:
                w.writerows(csv_rows(e))
        else:
            fh.write("\n".join(_as_table(e) for e in evals))
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def cmd_verify(args) -> int:
    graphs = load_corpus(args.corpus)
    alphas = parse_alpha_grid(args.alpha_grid)
    counts = {"graphs": len(graphs), "checked": 0, "inapplicable": 0, "equalities": 0, "violations": 0}
    fh = _open_out(args.out)
    try:
        w = _writer(fh)
        w.writerow(CSV_COLUMNS)
        g6_cache: dict[int, str] = {}
        for ev in sweep(graphs, alphas):
            key = id(ev.graph)
            if key not in g6_cache:
                g6_cache = {key: write_graph6(ev.graph)}
            w.writerows(csv_rows(ev, g6_cache[key]))
            for r in ev.reports:
                if not r.applicable:
                    counts["inapplicable"] += 1
                    continue
                counts["checked"] += 1
                counts["equalities"] += r.equality
                if r.gap < -args.tol:
                    counts["violations"] += 1
                    log.warning(
                        "violation: %s on %s at alpha=%r (gap %.3e)",
                        r.bound_id, g6_cache[key], ev.spectrum.alpha, r.gap,
                    )
    finally:
        if fh is not sys.stdout:
            fh.close()
    summary = " ".join(f"{k}={v}" for k, v in counts.items())
    print(summary, file=sys.stderr if args.out is None else sys.stdout)
    return EXIT_VIOLATION if counts["violations"] else EXIT_OK


def cmd_tightness(args) -> int:
    if args.bound not in BOUND_IDS:
        raise SourceError(f"unknown bound {args.bound!r}; choose from {', '.join(BOUND_IDS)}")
    graphs = load_corpus(args.corpus)
    ranked = []
    for pos, ev in enumerate(sweep(graphs, [args.alpha])):
        rep = next(r for r in ev.reports if r.bound_id == args.bound)
        if rep.applicable:
            ranked.append((rep.gap, pos, write_graph6(ev.graph)))
    ranked.sort()
    fh = _open_out(args.out)
    try:
        w = _writer(fh)
        w.writerow(("graph6", "gap"))
        for gap, _, g6 in ranked[: args.top] if args.top else ranked:
            w.writerow((g6, repr(gap)))
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def cmd_gen(args) -> int:
    graphs = load_corpus(args.spec)
    fh = _open_out(args.out)
    try:
        for g in graphs:
            fh.write(write_graph6(g) + "\n")
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aalpha", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="invariants, spectrum and all bounds for one graph source")
    p.add_argument("source", help="graph6 record, file path, or generator spec such as star:10")
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="check every applicable bound over a corpus and alpha grid")
    p.add_argument("corpus", nargs="+", help="graph6 files, generator specs, or enumerate:N")
    p.add_argument("--alpha-grid", default="0:1:0.1", help="start:stop:step, inclusive")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tightness", help="rank graphs by the gap of one bound")
    p.add_argument("corpus", nargs="+")
    p.add_argument("--bound", required=True, help=", ".join(BOUND_IDS))
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--top", type=int, default=10, help="0 lists every graph")
    p.add_argument("--out")
    p.set_defaults(func=cmd_tightness)

    p = sub.add_parser("gen", help="emit graph6 lines for generator specs")
    p.add_argument("spec", nargs="+")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except (SourceError, FormatError, GraphError, BoundEvaluationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
