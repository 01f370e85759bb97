"""Command-line front end: generator listings, relation checks, and the
verification sweeps, with machine-readable output.

Exit codes: 0 = pass, 1 = mathematical failure, 2 = usage error.
Progress goes to standard error, results to standard output; output is
byte-identical across runs with the same configuration and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .families import ideal_generators
from .localize import is_equivariant_relation
from .poly import PolyParseError, abgu_table, poly_format, poly_parse
from . import verify as V

SCHEMA = 1


def parse_range(text: str) -> list[int]:
    """A single value "3" or an inclusive range "2..4"."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        values = list(range(int(lo), int(hi) + 1))
    else:
        values = [int(text)]
    if not values:
        raise ValueError(f"empty range {text!r}")
    return values


def default_order(g_values, n_values) -> int:
    override = os.environ.get("HIGGSREL_ORDER")
    if override:
        return int(override)
    return 2 * (max(g_values) + max(n_values)) + 4


def _progress(message: str) -> None:
    print(message, file=sys.stderr, flush=True)


def _emit(payload: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2, default=str))
    else:
        for line in text_lines:
            print(line)


def cmd_gen(args) -> int:
    g_values = parse_range(args.g)
    n_values = parse_range(args.n)
    if min(g_values) < 0 or min(n_values) < 0:
        raise ValueError("g and n must be non-negative")
    listings = []
    lines = []
    for g in g_values:
        for n in n_values:
            entries = []
            for idx, gen in ideal_generators(g, n, args.max_degree):
                text = poly_format(gen)
                if idx is None:
                    entries.append(
                        {"kind": "gamma_power", "degree": 3 * (g + 1), "poly": text}
                    )
                    lines.append(f"g={g} n={n} gamma^{g + 1} deg {3 * (g + 1)}: {text}")
                else:
                    entries.append(
                        {
                            "kind": "rho",
                            "c": idx.c,
                            "r": idx.r,
                            "s": idx.s,
                            "t": idx.t,
                            "degree": idx.total_degree,
                            "poly": text,
                        }
                    )
                    lines.append(
                        f"g={g} n={n} (c={idx.c},r={idx.r},s={idx.s},t={idx.t})"
                        f" deg {idx.total_degree}: {text}"
                    )
            listings.append({"g": g, "n": n, "generators": entries})
    _emit({"command": "gen", "listings": listings}, args.format, lines)
    return 0


def cmd_check(args) -> int:
    g_values = parse_range(args.g)
    n_values = parse_range(args.n)
    if len(g_values) != 1 or len(n_values) != 1:
        raise ValueError("check takes a single g and a single n")
    g, n = g_values[0], n_values[0]
    if g < 2:
        raise ValueError("relation checks require g >= 2")
    try:
        poly = poly_parse(args.poly, abgu_table())
    except PolyParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = is_equivariant_relation(g, n, poly)
    if args.format == "json":
        print(report.to_json())
    else:
        print(f"poly: {poly_format(poly)}")
        for cv in report.components:
            mark = "ok" if cv.verdict else f"FAIL {cv.witness}"
            print(f"  {cv.component.label()}: {mark}")
        print(f"verdict: {'relation' if report.verdict else 'not a relation'}")
    return 0 if report.verdict else 1


def _dims_cell(cell):
    g, n = cell
    return V.dim_report(g, n).to_json_dict()


def _main_cell(cell):
    g, n, d_max = cell
    ok, detail = V.check_main_theorem(g, n, d_max)
    return {"g": g, "n": n, "d_max": d_max, "ok": ok, "detail": detail}


def _map_cells(fn, cells, jobs):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, cells))
    return [fn(c) for c in cells]


def cmd_verify(args) -> int:
    g_values = parse_range(args.g)
    n_values = parse_range(args.n)
    suites = (
        ["dims", "main", "identities", "series", "sympow"]
        if args.suite == "all"
        else [args.suite]
    )
    order = args.order or default_order(g_values, n_values)
    results = {}
    ok = True
    lines = []
    for suite in suites:
        _progress(f"running suite {suite} ...")
        if suite == "dims":
            cells = [(g, n) for g in g_values for n in n_values]
            reports = _map_cells(_dims_cell, cells, args.jobs)
            suite_ok = all(r["equal"] for r in reports)
            results["dims"] = {"ok": suite_ok, "cells": reports}
            for r in reports:
                lines.append(
                    f"dims g={r['g']} n={r['n']}: quotient={r['quotient_total']}"
                    f" region={r['region_count']} components={r['component_sum']}"
                    f" {'ok' if r['equal'] else 'MISMATCH'}"
                )
        elif suite == "main":
            if min(g_values) < 2:
                raise ValueError("the main suite requires g >= 2")
            cells = [
                (g, n, args.max_degree or 3 * g + 3 + n)
                for g in g_values
                for n in n_values
            ]
            reports = _map_cells(_main_cell, cells, args.jobs)
            suite_ok = all(r["ok"] for r in reports)
            results["main"] = {"ok": suite_ok, "cells": reports}
            for r in reports:
                lines.append(
                    f"main g={r['g']} n={r['n']} D<={r['d_max']}:"
                    f" {'ok' if r['ok'] else 'MISMATCH'}"
                )
        elif suite == "identities":
            suite_ok, detail = V.sweep_identities(seed=args.seed)
            results["identities"] = {"ok": suite_ok, **detail}
            lines.append(f"identities: {'ok' if suite_ok else 'FAIL'} {detail}")
        elif suite == "series":
            suite_ok, detail = V.sweep_series(order=max(10, order))
            results["series"] = {"ok": suite_ok, **detail}
            lines.append(f"series: {'ok' if suite_ok else 'FAIL'} {detail}")
        elif suite == "sympow":
            suite_ok, detail = V.sweep_sympow(seed=args.seed)
            results["sympow"] = {"ok": suite_ok, **detail}
            lines.append(f"sympow: {'ok' if suite_ok else 'FAIL'} {detail}")
        else:
            raise ValueError(f"unknown suite {suite!r}")
        ok = ok and results[suite]["ok"]
    lines.append(f"verify: {'ok' if ok else 'FAIL'}")
    _emit({"command": "verify", "ok": ok, "results": results}, args.format, lines)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="higgsrel",
        description=(
            "Exact construction and localization-based verification of the"
            " relation ideal of the rank-2 Higgs-bundle moduli cohomology"
            " ring."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_poly=False, need_suite=False):
        p.add_argument("--g", default="2", help="genus, single value or range a..b")
        p.add_argument("--n", default="0", help="twist, single value or range a..b")
        p.add_argument("--max-degree", type=int, default=None, dest="max_degree")
        p.add_argument("--order", type=int, default=None, help="series truncation")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)
        if need_poly:
            p.add_argument("--poly", required=True, help="polynomial in a,b,g3,u")
        if need_suite:
            p.add_argument(
                "--suite",
                choices=("dims", "main", "identities", "series", "sympow", "all"),
                default="all",
            )

    p_gen = sub.add_parser("gen", help="list ideal generators")
    common(p_gen)
    p_gen.set_defaults(func=cmd_gen, max_degree_required=True)

    p_check = sub.add_parser("check", help="equivariant relation check")
    common(p_check, need_poly=True)
    p_check.set_defaults(func=cmd_check)

    p_verify = sub.add_parser("verify", help="run verification sweeps")
    common(p_verify, need_suite=True)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "gen" and args.max_degree is None:
            raise ValueError("gen requires --max-degree")
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
