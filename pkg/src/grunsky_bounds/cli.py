"""Command-line driver.

Subcommands:
  verify    run the claim suite and compare against the published constants
  maximize  verified global maximum of one objective
  edges     per-edge maxima table for one objective
  grunsky   coefficient table, identity residuals and inequality slacks for a
            preset function or a coefficient file
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .claims import CLAIM_IDS, EDGE_ORDER, SuiteConfig, analyze_edge
from .domain import REGION
from .objectives import CLAIM_NAMES, F1_FORM, OBJECTIVES, ObjectiveId
from .optimize import maximize_1d, maximize_2d
from .oracle import (
    PRESETS,
    check_coefficient_identities,
    check_inequalities,
    gamma_from_series,
    grunsky_table,
    parse_coefficients,
    random_test_vector,
)
from .report import all_passed, emit, run_suite


def _objective_id(name: str) -> ObjectiveId:
    try:
        return ObjectiveId(name.lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown objective {name!r}; use f1..f9")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--out", metavar="PATH", help="write the report to a file")
    common.add_argument("--max-boxes", type=int, default=10_000_000)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized oracle checks")

    parser = argparse.ArgumentParser(
        prog="grunsky-bounds",
        description="Verified reproduction of coefficient bounds for bi-univalent functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p_verify.add_argument("--claims", nargs="+", metavar="ID", choices=CLAIM_IDS,
                          help="subset of claim ids (default: all)")
    p_verify.add_argument("--tol", type=float, default=1e-5, help="enclosure width target")

    p_max = sub.add_parser("maximize", parents=[common],
                           help="maximize one objective over the region")
    p_max.add_argument("--objective", required=True, type=_objective_id)
    p_max.add_argument("--tol", type=float, default=1e-6)

    p_edges = sub.add_parser("edges", parents=[common],
                             help="per-edge maxima for one objective")
    p_edges.add_argument("--objective", required=True, type=_objective_id)
    p_edges.add_argument("--tol", type=float, default=1e-6)

    p_gr = sub.add_parser("grunsky", parents=[common],
                          help="coefficient table and oracle checks")
    src = p_gr.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", choices=sorted(PRESETS))
    src.add_argument("--coeffs", metavar="FILE", help="file with one 're im' pair per line, from a1")
    p_gr.add_argument("--order", type=int, default=8)
    p_gr.add_argument("--vectors", type=int, default=20, help="random inequality test vectors")
    return parser


def _cmd_verify(args) -> int:
    cfg = SuiteConfig(tol_value=args.tol, max_boxes=args.max_boxes, seed=args.seed)
    rows = run_suite(args.claims, cfg)
    text = emit(rows, args.format, args.out)
    if not args.out:
        sys.stdout.write(text)
    return 0 if all_passed(rows) else 1


def _cmd_maximize(args) -> int:
    from .optimize import BnBConfig

    cfg = BnBConfig(tol_value=args.tol, max_boxes=args.max_boxes)
    oid = args.objective
    if oid is ObjectiveId.F1:
        ext = maximize_1d(F1_FORM.value_iv, F1_FORM.lo, F1_FORM.hi, cfg)
        print(f"{oid.value} ({CLAIM_NAMES[oid]})")
        print(f"  max in [{ext.value.lo:.12f}, {ext.value.hi:.12f}]")
        print(f"  argmax x in [{ext.argmax.lo:.9f}, {ext.argmax.hi:.9f}]")
        print(f"  boxes {ext.iterations}, converged {ext.converged}")
        return 0 if ext.converged else 1
    ext = maximize_2d(OBJECTIVES[oid], REGION, cfg)
    print(f"{oid.value} ({CLAIM_NAMES[oid]})")
    print(f"  max in [{ext.value.lo:.12f}, {ext.value.hi:.12f}]")
    print(f"  argmax x in [{ext.argmax[0].lo:.9f}, {ext.argmax[0].hi:.9f}],"
          f" y in [{ext.argmax[1].lo:.9f}, {ext.argmax[1].hi:.9f}]")
    print(f"  location {ext.kind_label}, boxes {ext.iterations}, converged {ext.converged}")
    return 0 if ext.converged else 1


def _cmd_edges(args) -> int:
    from .optimize import BnBConfig

    oid = args.objective
    if oid is ObjectiveId.F1:
        print("f1 is one-dimensional; use `maximize --objective f1`")
        return 2
    cfg = BnBConfig(tol_value=args.tol, max_boxes=args.max_boxes)
    print(f"{oid.value} ({CLAIM_NAMES[oid]}) edge maxima:")
    for edge in EDGE_ORDER:
        an = analyze_edge(oid, edge, cfg)
        roots = ", ".join(f"[{c.lo:.9f}, {c.hi:.9f}]" for c in an.clusters) or "none"
        print(f"  {edge.value:<11} max in [{an.value.lo:.10f}, {an.value.hi:.10f}]"
              f"  stationary: {roots}")
    return 0


def _cmd_grunsky(args) -> int:
    if args.preset:
        f = PRESETS[args.preset](max(2 * args.order, 8))
        name = args.preset
    else:
        with open(args.coeffs, encoding="utf-8") as handle:
            f = parse_coefficients(handle.read())
        name = args.coeffs
    table = grunsky_table(f, args.order)
    print(f"odd-index coefficient table for {name} (order {args.order}):")
    show = min(args.order, 4)
    for p in range(1, 2 * show, 2):
        row = "  ".join(f"w[{p},{q}]={table.entry(p, q):.10g}" for q in range(p, 2 * show, 2))
        print(f"  {row}")

    rep = check_coefficient_identities(f, args.order)
    print("identity residuals:")
    for key, val in rep.residuals.items():
        print(f"  {key:<12} {val:.3e}")

    rng = np.random.default_rng(args.seed)
    worst = float("inf")
    for _ in range(args.vectors):
        vec = random_test_vector(rng, max_len=args.order)
        worst = min(worst, check_inequalities(table, vec).min_slack)
    print(f"min inequality slack over {args.vectors} random vectors: {worst:.3e}")

    g = gamma_from_series(f)
    print("log-coefficients (series / closed-form):")
    for n, (d, c) in enumerate(zip(g.direct, g.closed), start=1):
        print(f"  gamma_{n}: {d:.10g} / {c:.10g}")
    print(f"max two-path difference: {g.max_difference:.3e}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "maximize":
        return _cmd_maximize(args)
    if args.command == "edges":
        return _cmd_edges(args)
    if args.command == "grunsky":
        return _cmd_grunsky(args)
    raise AssertionError(args.command)


if __name__ == "__main__":
    raise SystemExit(main())
