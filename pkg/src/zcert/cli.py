"""Command line front end.

Exit codes: 0 = certified / all checks fine, 1 = violations or failed
conditions found, 2 = usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Iterator

from . import bounds, harness, structure
from .graphs import Graph, Graph6Error, parse_graph6, to_graph6
from .invariants import profile


def _graphs_from_arg(arg: str) -> Iterator[tuple[str, Graph]]:
    """Yield (label, graph) from a literal graph6 string, a file, or '-'."""
    if arg == "-":
        for i, line in enumerate(sys.stdin, start=1):
            line = line.strip()
            if not line or line == ">>graph6<<":
                continue
            yield f"stdin:{i}", parse_graph6(line)
        return
    if os.path.exists(arg):
        for i, g in enumerate(harness.scan_graph6(arg), start=1):
            yield f"{arg}:{i}", g
        return
    yield arg, parse_graph6(arg)


def _frac(x):
    if x is None:
        return None
    if isinstance(x, Fraction):
        return str(x)
    return x


def cmd_invariants(args) -> int:
    for label, g in _graphs_from_arg(args.graph):
        p = profile(g, with_structure=True)
        record = {
            "graph6": to_graph6(g), "n": p.n, "e": p.e,
            "delta": p.delta, "Delta": p.Delta,
            "z1": p.z1, "f": p.f, "inv": _frac(p.inv),
            "beta": p.beta, "kappa": p.kappa,
        }
        if args.json:
            print(json.dumps(record))
        else:
            print(f"{record['graph6']}  n={p.n} e={p.e} "
                  f"delta={p.delta} Delta={p.Delta} "
                  f"Z1={p.z1} F={p.f} Inv={_frac(p.inv)} "
                  f"beta={p.beta} kappa={p.kappa}")
    return 0


def cmd_check(args) -> int:
    parts = [args.part] if args.part else [1, 2, 3, 4, 5]
    any_bad = False
    for label, g in _graphs_from_arg(args.graph):
        g6 = to_graph6(g)
        if args.theorem == 1:
            report = bounds.theorem1_report(g)
            for part in parts:
                v = report.verdicts[part - 1]
                print(f"{g6}  theorem1 part{part}: {v.value} "
                      f"(bound={report.bounds[part - 1]})")
                if v is bounds.Verdict.VIOLATED:
                    any_bad = True
            continue
        kappa = structure.vertex_connectivity(g)
        k = args.k if args.k is not None else kappa
        cond = (bounds.theorem2_condition if args.theorem == 2
                else bounds.theorem3_condition)
        for part in parts:
            verdict = cond(g, k, part, kappa=kappa)
            print(f"{g6}  theorem{args.theorem} part{part} k={k}: "
                  f"{'holds' if verdict.holds else 'fails'} "
                  f"(actual={verdict.actual} bound={verdict.bound})")
            if not verdict.holds:
                any_bad = True
    return 1 if any_bad else 0


def cmd_validate(args) -> int:
    if args.enumerate is not None:
        source = harness.EnumerationSource(args.enumerate)
    else:
        source = harness.CorpusSource(args.corpus)
    if args.theorem == 1:
        result = harness.run_theorem1_campaign(source, jobs=args.jobs)
    else:
        result = harness.run_theorem23_campaign(source, args.theorem, jobs=args.jobs)
    text = harness.emit_report(result, format=args.format,
                               include_elapsed=not args.no_elapsed)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if result.certified else 1


def cmd_oracle(args) -> int:
    all_true = True
    for label, g in _graphs_from_arg(args.graph):
        if args.hamiltonian:
            value = structure.has_hamiltonian_cycle(g)
            name = "hamiltonian"
        else:
            value = structure.has_hamiltonian_path(g)
            name = "traceable"
        print(f"{to_graph6(g)}  {name}: {value}")
        all_true &= value
    return 0 if all_true else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zcert",
        description="Exact degree-index bounds and Hamiltonicity condition "
                    "certification over graph6 corpora.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="print the invariant profile per graph")
    p_inv.add_argument("graph", help="graph6 string, file path, or - for stdin")
    p_inv.add_argument("--json", action="store_true")
    p_inv.set_defaults(func=cmd_invariants)

    p_chk = sub.add_parser("check", help="per-graph bound/condition verdicts")
    p_chk.add_argument("--theorem", type=int, choices=(1, 2, 3), required=True)
    p_chk.add_argument("--part", type=int, choices=(1, 2, 3, 4, 5))
    p_chk.add_argument("--k", type=int, help="connectivity parameter (default: kappa)")
    p_chk.add_argument("graph")
    p_chk.set_defaults(func=cmd_check)

    p_val = sub.add_parser("validate", help="run a certification campaign")
    p_val.add_argument("--theorem", type=int, choices=(1, 2, 3), required=True)
    grp = p_val.add_mutually_exclusive_group(required=True)
    grp.add_argument("--enumerate", type=int, metavar="N",
                     help="all labeled graphs on N vertices (N <= 7)")
    grp.add_argument("--corpus", help="graph6 file, one graph per line")
    p_val.add_argument("--jobs", type=int, default=1)
    p_val.add_argument("--format", choices=("json-lines", "csv"),
                       default="json-lines")
    p_val.add_argument("--out")
    p_val.add_argument("--no-elapsed", action="store_true",
                       help="omit elapsed time for byte-identical comparisons")
    p_val.set_defaults(func=cmd_validate)

    p_orc = sub.add_parser("oracle", help="exact Hamiltonicity oracles")
    grp = p_orc.add_mutually_exclusive_group(required=True)
    grp.add_argument("--hamiltonian", action="store_true")
    grp.add_argument("--traceable", action="store_true")
    p_orc.add_argument("graph")
    p_orc.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
