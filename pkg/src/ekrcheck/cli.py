"""Command-line interface: every verification as a reproducible, scriptable run.

Each run emits one report; with ``--json`` that is a single JSON document on
standard output, otherwise a small fixed table.  Exit codes:

    0   verified / property holds
    1   violation found (a machine-checkable counterexample is embedded)
    2   usage or input error
    3   budget exhausted (inconclusive)

Reports from runs that exit 1 can be revalidated independently with the
``check-witness`` subcommand.
"""

from __future__ import annotations

import argparse
import functools
import json
import os
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from random import Random
from typing import Callable, Sequence

from . import counts, cycles, graphs, rook, search
from .errors import InputError, ResourceLimitError

SCHEMA_VERSION = 1

_GRAPH_SHORTHAND = re.compile(r"([KEPC])(\d+)")
_GRAPH_BUILDERS: dict[str, Callable[[int], graphs.SimpleGraph]] = {
    "K": graphs.complete_graph,
    "E": graphs.empty_graph,
    "P": graphs.path_graph,
    "C": graphs.cycle_graph,
}


def _graph_argument(text: str) -> graphs.SimpleGraph:
    """Resolve a graph argument: a JSON file path, or a shorthand such as
    K4 (complete), E3 (edgeless), P5 (path), C6 (cycle)."""
    if os.path.exists(text):
        return graphs.load_graph(text)
    match = _GRAPH_SHORTHAND.fullmatch(text)
    if match:
        return _GRAPH_BUILDERS[match.group(1)](int(match.group(2)))
    raise InputError(
        f"graph argument {text!r} is neither an existing file nor a K/E/P/C shorthand"
    )


def _map_maybe_parallel(fn: Callable, items: Sequence, threads: int) -> list:
    """Order-preserving map, optionally fanned out over worker processes.

    Results are collected in submission order, so the reduction is
    identical at any parallelism level.
    """
    items = list(items)
    if threads > 1 and len(items) > 1:
        chunk = max(1, (len(items) + threads * 4 - 1) // (threads * 4))
        with ProcessPoolExecutor(max_workers=threads) as executor:
            return list(executor.map(fn, items, chunksize=chunk))
    return [fn(item) for item in items]


def _lemma1_order_check(order: cycles.CyclicOrder, r: int) -> int:
    return cycles.max_intersecting_intervals(order, r)


def _windows_order_check(order: cycles.CyclicOrder, r: int) -> dict | None:
    for i in range(1, order.n + 1):
        for j in range(1, order.m + 1):
            report = cycles.check_interval_windows(order, i, j, r)
            if not report.passed:
                return {
                    "kind": "window_violation",
                    "sigma1": list(order.rows),
                    "sigma2": list(order.cols),
                    "start": list(report.start),
                    "r": r,
                    "failure": report.failure,
                    "witness": [_placement_json(p) for p in (report.witness or ())],
                }
    return None


def _occurrence_check(placement: rook.Placement, n: int, m: int) -> int:
    total = 0
    for order in _cached_orders(n, m):
        if cycles.interval_start(order, placement) is not None:
            total += 1
    return total


@functools.lru_cache(maxsize=4)
def _cached_orders(n: int, m: int) -> tuple[cycles.CyclicOrder, ...]:
    return tuple(cycles.enumerate_cyclic_orders(n, m))


def _placement_json(placement: rook.Placement) -> list[list[int]]:
    return [list(cell) for cell in placement]


def _family_exceeds_star_payload(report: search.EkrReport, g: graphs.SimpleGraph | None) -> dict:
    params = report.parameters
    if params["kind"] == "rook":
        context = {"type": "rook", "n": params["n"], "m": params["m"], "r": params["r"]}
        family = [_placement_json(member) for member in report.witness]
    else:
        context = {
            "type": "graph",
            "graph": graphs.graph_to_json_dict(g),
            "r": params["r"],
        }
        family = [list(member) for member in report.witness]
    return {
        "kind": "intersecting_family_exceeds_star",
        "context": context,
        "family": family,
        "best_star": report.best_star,
    }


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (parameters, result, counterexample, exit_code)


def _run_count(args) -> tuple[dict, dict, dict | None, int]:
    parameters = {"n": args.n, "m": args.m, "r": args.r}
    result = {
        "placements": counts.rook_placement_count(args.n, args.m, args.r),
        "star": counts.rook_star_count(args.n, args.m, args.r),
        "cyclic_orders": counts.cyclic_order_count(args.n, args.m),
        "interval_occurrences": counts.interval_occurrence_count(args.n, args.m, args.r),
    }
    return parameters, result, None, 0


def _run_enumerate(args) -> tuple[dict, dict, dict | None, int]:
    parameters = {"n": args.n, "m": args.m, "r": args.r}
    placements = rook.enumerate_placements(args.n, args.m, args.r, args.budget_sets)
    family = rook.Family(args.n, args.m, args.r, tuple(placements))
    result: dict = {"count": len(family)}
    if args.out:
        rook.save_family(family, args.out)
        result["written"] = args.out
    else:
        result["family"] = rook.family_to_json_dict(family)
    return parameters, result, None, 0


def _run_verify(args) -> tuple[dict, dict, dict | None, int]:
    parameters = {"n": args.n, "m": args.m, "r": args.r}
    report = search.rook_ekr_report(
        args.n, args.m, args.r, budget=_budget(args), max_sets=args.budget_sets
    )
    counterexample = None if report.holds else _family_exceeds_star_payload(report, None)
    return parameters, report.to_json_dict(), counterexample, 0 if report.holds else 1


def _run_lemma1(args) -> tuple[dict, dict, dict | None, int]:
    half = min(args.n, args.m) // 2
    r_values = [args.r] if args.r is not None else list(range(1, half + 1))
    parameters = {"n": args.n, "m": args.m, "r": args.r}
    orders = cycles.enumerate_cyclic_orders(args.n, args.m, args.budget_sets)
    checks = []
    counterexample = None
    for r in r_values:
        maxima = _map_maybe_parallel(
            functools.partial(_lemma1_order_check, r=r), orders, args.threads
        )
        checks.append(
            {
                "r": r,
                "orders": len(orders),
                "min_over_orders": min(maxima),
                "max_over_orders": max(maxima),
                "all_equal_r": all(value == r for value in maxima),
            }
        )
        if counterexample is None:
            for order, value in zip(orders, maxima):
                if value != r:
                    witness = cycles.max_intersecting_intervals_witness(order, r)
                    counterexample = {
                        "kind": "interval_family_exceeds_r"
                        if value > r
                        else "interval_tightness_gap",
                        "sigma1": list(order.rows),
                        "sigma2": list(order.cols),
                        "r": r,
                        "found_max": value,
                        "family": [_placement_json(p) for p in witness],
                    }
                    break
    result = {"checks": checks, "all_pass": counterexample is None}
    return parameters, result, counterexample, 0 if counterexample is None else 1


def _run_occurrence(args) -> tuple[dict, dict, dict | None, int]:
    parameters = {"n": args.n, "m": args.m, "r": args.r}
    expected = counts.interval_occurrence_count(args.n, args.m, args.r)
    placements = rook.enumerate_placements(args.n, args.m, args.r, args.budget_sets)
    found = _map_maybe_parallel(
        functools.partial(_occurrence_check, n=args.n, m=args.m), placements, args.threads
    )
    counterexample = None
    for placement, value in zip(placements, found):
        if value != expected:
            counterexample = {
                "kind": "occurrence_mismatch",
                "n": args.n,
                "m": args.m,
                "placement": _placement_json(placement),
                "expected": expected,
                "found": value,
            }
            break
    result = {
        "placements": len(placements),
        "orders": counts.cyclic_order_count(args.n, args.m),
        "expected_occurrences": expected,
        "all_match": counterexample is None,
    }
    return parameters, result, counterexample, 0 if counterexample is None else 1


def _run_double_count(args) -> tuple[dict, dict, dict | None, int]:
    order_total = None
    if args.family:
        family = rook.load_family(args.family)
        parameters = {
            "family": args.family,
            "n": family.n,
            "m": family.m,
            "r": family.r,
        }
        families = [family]
    else:
        if args.n is None or args.m is None or args.r is None:
            raise InputError("double-count needs --family, or --n/--m/--r to sample families")
        parameters = {
            "n": args.n,
            "m": args.m,
            "r": args.r,
            "samples": args.samples,
        }
        families = [
            rook.random_intersecting_family(args.n, args.m, args.r, Random(args.seed + i))
            for i in range(args.samples)
        ]
    checked = []
    counterexample = None
    for family in families:
        if order_total is None:
            order_total = counts.cyclic_order_count(family.n, family.m)
        bound = family.r * order_total
        lhs, rhs = cycles.interval_double_count(family, args.budget_sets)
        intersecting = rook.is_intersecting(family)
        entry = {
            "size": len(family),
            "lhs": lhs,
            "rhs": rhs,
            "equal": lhs == rhs,
            "intersecting": intersecting,
            "within_bound": (not intersecting) or lhs <= bound,
        }
        checked.append(entry)
        if counterexample is None and not (entry["equal"] and entry["within_bound"]):
            counterexample = {
                "kind": "double_count_violation",
                "family": rook.family_to_json_dict(family),
                "lhs": lhs,
                "rhs": rhs,
                "bound": bound,
            }
    result = {
        "families": len(checked),
        "all_equal": all(entry["equal"] for entry in checked),
        "all_within_bound": all(entry["within_bound"] for entry in checked),
        "bound": (families[0].r * order_total) if families else None,
        "max_lhs": max((entry["lhs"] for entry in checked), default=0),
    }
    if len(checked) == 1:
        result["lhs"] = checked[0]["lhs"]
        result["rhs"] = checked[0]["rhs"]
    return parameters, result, counterexample, 0 if counterexample is None else 1


def _run_windows(args) -> tuple[dict, dict, dict | None, int]:
    parameters = {"n": args.n, "m": args.m, "r": args.r}
    orders = cycles.enumerate_cyclic_orders(args.n, args.m, args.budget_sets)
    failures = _map_maybe_parallel(
        functools.partial(_windows_order_check, r=args.r), orders, args.threads
    )
    counterexample = next((f for f in failures if f is not None), None)
    result = {
        "orders": len(orders),
        "starts_per_order": args.n * args.m,
        "all_pass": counterexample is None,
    }
    return parameters, result, counterexample, 0 if counterexample is None else 1


def _run_orders(args) -> tuple[dict, dict, dict | None, int]:
    parameters = {"n": args.n, "m": args.m}
    order_list = cycles.enumerate_cyclic_orders(args.n, args.m, args.budget_sets)
    payload = [order.to_json_dict() for order in order_list]
    result: dict = {"count": len(order_list)}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        result["written"] = args.out
    else:
        result["orders"] = payload
    return parameters, result, None, 0


def _run_graph_stats(args) -> tuple[dict, dict, dict | None, int]:
    g = _graph_argument(args.graph)
    parameters = {"graph": args.graph}
    sets = graphs.maximal_independent_sets(g, args.vertex_budget)
    sizes = [len(s) for s in sets]
    result = {
        "vertices": g.vertex_count,
        "edge_count": g.edge_count,
        "independence_number": max(sizes),
        "min_maximal_independent_size": min(sizes),
        "maximal_independent_sets": len(sets),
        "well_covered": max(sizes) == min(sizes),
    }
    return parameters, result, None, 0


def _run_product(args) -> tuple[dict, dict, dict | None, int]:
    if len(args.graph or []) != 2:
        raise InputError("product needs exactly two --graph arguments")
    left = _graph_argument(args.graph[0])
    right = _graph_argument(args.graph[1])
    build = graphs.cartesian_product if args.kind == "cartesian" else graphs.lexicographic_product
    product = build(left, right, args.vertex_budget)
    parameters = {"kind": args.kind, "graph": list(args.graph)}
    result: dict = {"vertices": product.vertex_count, "edge_count": product.edge_count}
    if args.out:
        graphs.save_graph(product, args.out)
        result["written"] = args.out
    else:
        result["graph"] = graphs.graph_to_json_dict(product)
    return parameters, result, None, 0


def _run_ht(args) -> tuple[dict, dict, dict | None, int]:
    g = _graph_argument(args.graph)
    parameters = {"graph": args.graph}
    reports = search.holroyd_talbot_sweep(
        g, budget=_budget(args), max_sets=args.budget_sets, vertex_budget=args.vertex_budget
    )
    counterexample = None
    for report in reports:
        if not report.holds:
            counterexample = _family_exceeds_star_payload(report, g)
            break
    result = {
        "min_maximal_independent_size": graphs.min_maximal_independent_size(g, args.vertex_budget),
        "reports": [report.to_json_dict() for report in reports],
        "all_hold": counterexample is None,
    }
    return parameters, result, counterexample, 0 if counterexample is None else 1


def _run_lex(args) -> tuple[dict, dict, dict | None, int]:
    g = _graph_argument(args.graph)
    parameters = {"graph": args.graph, "k": args.k, "r": args.r}
    outcome = search.lex_product_check(
        g, args.k, args.r,
        budget=_budget(args), max_sets=args.budget_sets, vertex_budget=args.vertex_budget,
    )
    counterexample = None
    if outcome.violation or not outcome.conclusion.holds:
        product = graphs.lexicographic_product(g, graphs.complete_graph(args.k))
        counterexample = _family_exceeds_star_payload(outcome.conclusion, product)
    elif not outcome.premise.holds:
        counterexample = _family_exceeds_star_payload(outcome.premise, g)
    result = {
        "premise": outcome.premise.to_json_dict(),
        "conclusion": outcome.conclusion.to_json_dict(),
        "implication_violated": outcome.violation,
    }
    exit_code = 0 if counterexample is None else 1
    return parameters, result, counterexample, exit_code


# ---------------------------------------------------------------------------
# independent counterexample validation


def _validate_family_exceeds_star(payload: dict) -> tuple[bool, str]:
    context = payload.get("context", {})
    family_raw = payload.get("family", [])
    if context.get("type") == "rook":
        n, m, r = context["n"], context["m"], context["r"]
        members = [rook.canonical_placement(member, n, m) for member in family_raw]
        if any(len(member) != r for member in members):
            return False, "family member has the wrong size"
        star = len(rook.star_family(n, m, r, (1, 1)))
    elif context.get("type") == "graph":
        g = graphs.graph_from_json_dict(context["graph"])
        r = context["r"]
        members = [tuple(sorted(member)) for member in family_raw]
        for member in members:
            if len(set(member)) != r:
                return False, "family member has the wrong size"
            if not g.is_independent(member):
                return False, f"family member {list(member)} is not independent"
        all_sets = graphs.enumerate_independent(g, r)
        per_vertex = [0] * (g.vertex_count + 1)
        for member in all_sets:
            for v in member:
                per_vertex[v] += 1
        star = max(per_vertex)
    else:
        return False, f"unknown counterexample context {context.get('type')!r}"
    if len(set(members)) != len(members):
        return False, "family contains duplicate members"
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            if not set(members[i]) & set(members[j]):
                return False, "family is not pairwise intersecting"
    if len(members) <= star:
        return False, f"family size {len(members)} does not exceed the star size {star}"
    return True, f"intersecting family of {len(members)} exceeds the star size {star}"


def _validate_interval_family(payload: dict) -> tuple[bool, str]:
    order = cycles.canonical_order(payload["sigma1"], payload["sigma2"])
    r = payload["r"]
    kind = payload["kind"]
    if kind == "interval_tightness_gap":
        recomputed = cycles.max_intersecting_intervals(order, r)
        if recomputed == payload["found_max"] and recomputed < r:
            return True, f"recomputed interval maximum {recomputed} is below r={r}"
        return False, f"recomputed interval maximum is {recomputed}"
    members = [rook.canonical_placement(member, order.n, order.m) for member in payload["family"]]
    if len(set(members)) != len(members):
        return False, "family contains duplicate members"
    for member in members:
        if cycles.interval_start(order, member) is None:
            return False, f"{list(member)} is not an interval of the order"
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            if not set(members[i]) & set(members[j]):
                return False, "family is not pairwise intersecting"
    if len(members) <= r:
        return False, f"family size {len(members)} does not exceed r={r}"
    return True, f"intersecting interval family of {len(members)} exceeds r={r}"


def _validate_double_count(payload: dict) -> tuple[bool, str]:
    family = rook.family_from_json_dict(payload["family"])
    lhs, rhs = cycles.interval_double_count(family)
    bound = family.r * counts.cyclic_order_count(family.n, family.m)
    if lhs != rhs:
        return True, f"recomputed lhs={lhs} differs from rhs={rhs}"
    if rook.is_intersecting(family) and lhs > bound:
        return True, f"recomputed lhs={lhs} exceeds the bound {bound}"
    return False, f"recomputation finds lhs=rhs={lhs} within the bound {bound}"


def _validate_window(payload: dict) -> tuple[bool, str]:
    order = cycles.canonical_order(payload["sigma1"], payload["sigma2"])
    i, j = payload["start"]
    report = cycles.check_interval_windows(order, i, j, payload["r"])
    if not report.passed:
        return True, f"recomputed window check fails: {report.failure}"
    return False, "recomputed window check passes"


def _validate_occurrence(payload: dict) -> tuple[bool, str]:
    n, m = payload["n"], payload["m"]
    placement = rook.canonical_placement(payload["placement"], n, m)
    found = cycles.count_orders_containing(n, m, placement)
    if found != payload["expected"] and found == payload["found"]:
        return True, f"recomputed occurrence count {found} differs from expected {payload['expected']}"
    return False, f"recomputed occurrence count is {found}"


_VALIDATORS = {
    "intersecting_family_exceeds_star": _validate_family_exceeds_star,
    "interval_family_exceeds_r": _validate_interval_family,
    "interval_tightness_gap": _validate_interval_family,
    "double_count_violation": _validate_double_count,
    "window_violation": _validate_window,
    "occurrence_mismatch": _validate_occurrence,
}


def _run_check_witness(args) -> tuple[dict, dict, dict | None, int]:
    with open(args.report, "r", encoding="utf-8") as fh:
        try:
            report = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{args.report}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    payload = report.get("counterexample")
    if payload is None:
        raise InputError("the report carries no counterexample to check")
    kind = payload.get("kind")
    validator = _VALIDATORS.get(kind)
    if validator is None:
        raise InputError(f"unknown counterexample kind {kind!r}")
    confirmed, detail = validator(payload)
    parameters = {"report": args.report}
    result = {"kind": kind, "confirmed": confirmed, "detail": detail}
    return parameters, result, None, 0 if confirmed else 1


# ---------------------------------------------------------------------------
# wiring


def _budget(args) -> search.SearchBudget:
    return search.SearchBudget(max_nodes=args.budget_nodes, max_seconds=args.budget_seconds)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="emit one JSON report on stdout")
    parser.add_argument("--out", help="write the produced artifact to this file")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled checks (default 0)")
    parser.add_argument("--budget-nodes", type=int, default=10**8,
                        help="search node budget (default 1e8)")
    parser.add_argument("--budget-seconds", type=float, default=None,
                        help="wall-clock budget for searches")
    parser.add_argument("--budget-sets", type=int, default=10**6,
                        help="output-size budget for enumerations (default 1e6)")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker processes for per-order sweeps")
    parser.add_argument("--vertex-budget", type=int, default=graphs.DEFAULT_SEARCH_VERTEX_BUDGET,
                        help="vertex budget for exhaustive graph searches (default 24)")


def _add_grid(parser: argparse.ArgumentParser, *, need_r: bool, r_optional: bool = False) -> None:
    parser.add_argument("--n", type=int, required=True, help="number of rows")
    parser.add_argument("--m", type=int, required=True, help="number of columns")
    if need_r:
        parser.add_argument("--r", type=int, required=not r_optional, default=None,
                            help="placement size")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ekrcheck",
        description="Exact verification of maximum intersecting families of "
                    "independent sets in rook's graphs and small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="closed-form counts for a grid")
    _add_grid(p, need_r=True)
    _add_common(p)
    p.set_defaults(handler=_run_count)

    p = sub.add_parser("enumerate", help="enumerate rook placements to a family file")
    _add_grid(p, need_r=True)
    _add_common(p)
    p.set_defaults(handler=_run_enumerate)

    p = sub.add_parser("verify", help="exact EKR verdict for the rook grid")
    _add_grid(p, need_r=True)
    _add_common(p)
    p.set_defaults(handler=_run_verify)

    p = sub.add_parser("lemma1", help="per-order interval bound sweep")
    _add_grid(p, need_r=True, r_optional=True)
    _add_common(p)
    p.set_defaults(handler=_run_lemma1)

    p = sub.add_parser("occurrence", help="per-placement order occurrence sweep")
    _add_grid(p, need_r=True)
    _add_common(p)
    p.set_defaults(handler=_run_occurrence)

    p = sub.add_parser("double-count", help="incidence identity on a family")
    p.add_argument("--family", help="family JSON file to check")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--samples", type=int, default=100,
                   help="number of sampled intersecting families (default 100)")
    _add_common(p)
    p.set_defaults(handler=_run_double_count)

    p = sub.add_parser("windows", help="interval window structure sweep")
    _add_grid(p, need_r=True)
    _add_common(p)
    p.set_defaults(handler=_run_windows)

    p = sub.add_parser("orders", help="enumerate canonical cyclic orders")
    _add_grid(p, need_r=False)
    _add_common(p)
    p.set_defaults(handler=_run_orders)

    p = sub.add_parser("graph-stats", help="independence statistics of a graph")
    p.add_argument("--graph", required=True, help="graph file or K/E/P/C shorthand")
    _add_common(p)
    p.set_defaults(handler=_run_graph_stats)

    p = sub.add_parser("product", help="cartesian or lexicographic product of two graphs")
    p.add_argument("--kind", choices=("cartesian", "lexicographic"), required=True)
    p.add_argument("--graph", action="append", help="give twice: left and right operand")
    _add_common(p)
    p.set_defaults(handler=_run_product)

    p = sub.add_parser("ht", help="EKR sweep over the conjectured range 1..mu/2")
    p.add_argument("--graph", required=True, help="graph file or K/E/P/C shorthand")
    _add_common(p)
    p.set_defaults(handler=_run_ht)

    p = sub.add_parser("lex", help="EKR implication check for G and G[K_k]")
    p.add_argument("--graph", required=True, help="graph file or K/E/P/C shorthand")
    p.add_argument("--k", type=int, required=True, help="clique size substituted per vertex")
    p.add_argument("--r", type=int, required=True, help="independent set size")
    _add_common(p)
    p.set_defaults(handler=_run_lex)

    p = sub.add_parser("check-witness", help="independently validate a report's counterexample")
    p.add_argument("--report", required=True, help="report JSON produced by an exit-1 run")
    _add_common(p)
    p.set_defaults(handler=_run_check_witness)

    return parser


_SAMPLED_COMMANDS = {"double-count"}


def _args_parameters(args) -> dict:
    """Best-effort parameter echo for reports built on error paths."""
    out = {}
    for key in ("n", "m", "r", "graph", "k", "family", "samples", "kind", "report"):
        value = getattr(args, key, None)
        if value is not None:
            out[key] = value
    return out


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
        return
    rows: list[tuple[str, object]] = [("command", report["command"])]
    rows.extend(report["parameters"].items())
    for key, value in report["result"].items():
        if isinstance(value, (dict, list)):
            rows.append((key, f"<{len(value)} entries>"))
        else:
            rows.append((key, value))
    if report["counterexample"] is not None:
        rows.append(("counterexample", report["counterexample"].get("kind")))
    rows.append(("elapsed_ms", report["elapsed_ms"]))
    width = max(len(key) for key, _ in rows)
    for key, value in rows:
        print(f"{key:<{width}}  {value}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    started = time.monotonic()
    seed = args.seed if args.command in _SAMPLED_COMMANDS else None
    try:
        parameters, result, counterexample, exit_code = args.handler(args)
    except InputError as exc:
        print(f"ekrcheck: error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        report = {
            "schema": SCHEMA_VERSION,
            "command": args.command,
            "parameters": _args_parameters(args),
            "result": {
                "status": "inconclusive",
                "reason": str(exc),
                "lower_bound": exc.lower_bound,
                "upper_bound": exc.upper_bound,
            },
            "counterexample": None,
            "elapsed_ms": int((time.monotonic() - started) * 1000),
            "seed": seed,
        }
        _emit(report, args.json)
        return 3
    report = {
        "schema": SCHEMA_VERSION,
        "command": args.command,
        "parameters": parameters,
        "result": result,
        "counterexample": counterexample,
        "elapsed_ms": int((time.monotonic() - started) * 1000),
        "seed": seed,
    }
    _emit(report, args.json)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
