"""``rackbench`` command line.

Exit codes: 0 success, 1 domain error (budget exceeded, group too large,
digraph outside the required class), 2 unparsable input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra, cayley, census, formats, graphs, labeled
from .perm import GroupTooLarge

TABLE_DEFAULT_MAX = {"complete": 4, "star": 5, "cycle": 7}
TABLE_COLUMNS = range(0, 8)


class InputError(Exception):
    pass


def _read(source: str) -> str:
    try:
        if source == "-":
            return sys.stdin.read()
        with open(source) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _parse(fn, *args):
    try:
        return fn(*args)
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        raise InputError(f"{type(exc).__name__}: {exc}") from exc


def _graph(args) -> graphs.AnyGraph:
    if args.family:
        if args.n is None:
            raise InputError("--family needs --n")
        return _parse(graphs.family_graph, args.family, args.n)
    if not args.graph:
        raise InputError("give a graph file or --family/--n")
    text = _read(args.graph)
    return _parse(formats.graph_from_text, text)


def _magma(args):
    text = _read(args.magma)
    return _parse(lambda t: formats.magma_from_json(json.loads(t)), text)


def _subset(args, n: int) -> list[int]:
    if args.subset is None:
        return list(range(n))
    shift = 0 if args.zero_based else 1
    try:
        items = [int(x) - shift for x in args.subset.replace(",", " ").split()]
    except ValueError as exc:
        raise InputError(f"bad subset {args.subset!r}") from exc
    if any(x < 0 or x >= n for x in items):
        raise InputError(f"subset {args.subset!r} out of range")
    return sorted(set(items))


def _base(args) -> int:
    return 0 if args.zero_based else 1


def _table(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _emit(args, payload, human: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def cmd_census(args) -> None:
    g = _graph(args)
    res = census.mu_census(g, budget_seconds=args.budget_seconds, max_nodes=args.max_nodes, jobs=args.jobs)
    human = _table([["mu_rack", "mu_qnd", "total_markings", "elapsed_ms"],
                    [str(res.mu_rack), str(res.mu_qnd), str(res.total_markings),
                     f"{res.elapsed * 1000:.1f}"]])
    _emit(args, res.to_json(), human)


def cmd_aut(args) -> None:
    g = _graph(args)
    group = graphs.automorphism_group(g)
    payload = {"order": group.order, "degree": group.degree,
               "elements": [p.to_json() for p in group.elements]}
    base = _base(args)
    human = f"|Aut| = {group.order}\n" + "\n".join(p.cycle_string(one_based=bool(base)) for p in group.elements)
    _emit(args, payload, human)


def cmd_check(args) -> None:
    m = _magma(args)
    rq = algebra.is_right_quasigroup(m)
    payload = {
        "order": m.order,
        "right_cancellative": algebra.is_right_cancellative(m),
        "right_divisible": algebra.is_right_divisible(m),
        "right_quasigroup": rq,
        "rack": algebra.is_rack(m),
        "quandle": algebra.is_quandle(m),
        "involutory": algebra.is_involutory(m),
        "kei": algebra.is_kei(m),
        "rack_via_hom": algebra.rack_via_hom(m),
    }
    if rq:
        payload["closed_under_conjugation"] = algebra.closed_under_conjugation(m, False)
        payload["closed_under_conjugation_with_inverses"] = algebra.closed_under_conjugation(m, True)
        payload["rmlt_order"] = algebra.rmlt(m).order
    human = _table([["property", "value"]] + [[k, str(v)] for k, v in payload.items()])
    _emit(args, payload, human)


def cmd_cayley(args) -> None:
    m = _magma(args)
    s = _subset(args, m.order)
    base = _base(args)
    if args.mode == "labeled":
        g = labeled.labeled_cayley(m, s)
        payload = g.to_json()
        human = "\n".join(f"{v + base} --{l + base}--> {w + base}" for v, l, w in sorted(g.edges))
    else:
        g = cayley.cayley_digraph(m, s) if args.mode == "directed" else cayley.cayley_graph(m, s)
        payload = g.to_json()
        arrow = "->" if args.mode == "directed" else "--"
        human = "\n".join(f"{u + base} {arrow} {v + base}" for u, v in sorted(g.edges))
    if m.order and algebra.is_right_quasigroup(m) and args.mode != "labeled":
        mk = cayley.Marking(g, algebra.as_right_quasigroup(m).perms())
        payload = {"graph": payload, "is_marking": cayley.is_marking(mk)}
        human += f"\nR is a marking: {payload['is_marking']}"
    _emit(args, payload, human)


def cmd_classify(args) -> None:
    text = _read(args.labeled)
    g = _parse(formats.labeled_from_text, text, not args.zero_based)
    report = labeled.classify(g)
    payload = report.to_json()
    rows = [["flag", "value"]] + [[k, str(v)] for k, v in payload.items() if isinstance(v, bool)]
    human = _table(rows) + "\nrealizes: " + (", ".join(payload["realizes"]) or "(not a labeled Cayley digraph)")
    _emit(args, payload, human)


def cmd_reflections(args) -> None:
    n = args.n
    if n < 3:
        raise InputError("reflections needs n >= 3")
    markings = census.reflection_markings(n)
    base = _base(args)
    payload = {"n": n, "count": len(markings), "sigma_plus_one": census.mu_qnd_cycle(n),
               "markings": [[p.to_json() for p in m.assignment] for m in markings]}
    lines = [f"{len(markings)} reflection subgroups / quandle markings of C_{n} (sigma(n)+1 = {census.mu_qnd_cycle(n)})"]
    for m in markings:
        active = [f"R_{v + base}={p.cycle_string(one_based=bool(base))}"
                  for v, p in enumerate(m.assignment) if not p.is_identity()]
        lines.append("  " + (", ".join(active) or "trivial"))
    _emit(args, payload, "\n".join(lines))


def table1_cells(max_orders: dict[str, int], budget_seconds: float | None, jobs: int = 1) -> dict:
    """``{family: {n: (mu_rack, mu_qnd) | "?" | "n/a"}}`` over columns 0..7."""
    out = {}
    for family in ("complete", "star", "cycle"):
        row = {}
        for n in TABLE_COLUMNS:
            if (family == "star" and n < 1) or (family == "cycle" and n < 3):
                row[n] = "n/a"
            elif n > max_orders[family]:
                row[n] = "?"
            else:
                try:
                    res = census.mu_census(graphs.family_graph(family, n),
                                           budget_seconds=budget_seconds, jobs=jobs)
                    row[n] = res.counts()
                except (census.BudgetExceeded, GroupTooLarge):
                    row[n] = "?"
        out[family] = row
    return out


def format_table1(cells: dict) -> str:
    names = {"complete": "K_n", "star": "K_{1,n-1}", "cycle": "C_n"}
    rows = [["n"] + [str(n) for n in TABLE_COLUMNS]]
    for family, row in cells.items():
        rows.append([names[family]] + [
            f"({c[0]},{c[1]})" if isinstance(c, tuple) else c for c in (row[n] for n in TABLE_COLUMNS)])
    return _table(rows)


def cmd_table1(args) -> None:
    max_orders = {"complete": args.max_complete, "star": args.max_star, "cycle": args.max_cycle}
    cells = table1_cells(max_orders, args.budget_seconds, args.jobs)
    payload = {f: {str(n): (list(c) if isinstance(c, tuple) else c) for n, c in row.items()}
               for f, row in cells.items()}
    _emit(args, payload, format_table1(cells))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default=None,
                        help="machine (json) or human (table) output")
    common.add_argument("--zero-based", action="store_true",
                        help="0-based indices in human output and hand-written inputs")
    common.add_argument("--budget-seconds", type=float, default=None,
                        help="census wall-clock budget (default: $RACKBENCH_BUDGET_SECONDS or 600)")
    common.add_argument("--jobs", type=int, default=1)

    graph_src = argparse.ArgumentParser(add_help=False)
    graph_src.add_argument("graph", nargs="?", help="graph JSON file, or - for stdin")
    graph_src.add_argument("--family", choices=sorted(graphs.FAMILIES))
    graph_src.add_argument("--n", type=int)

    p = argparse.ArgumentParser(prog="rackbench", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("census", parents=[common, graph_src], help="count rack/quandle markings")
    sp.add_argument("--max-nodes", type=int, default=None)
    sp.set_defaults(func=cmd_census, default_format="json")

    sp = sub.add_parser("aut", parents=[common, graph_src], help="automorphism group")
    sp.set_defaults(func=cmd_aut, default_format="json")

    sp = sub.add_parser("check", parents=[common], help="axiom predicates of a magma")
    sp.add_argument("magma", help="magma JSON file, or - for stdin")
    sp.set_defaults(func=cmd_check, default_format="json")

    sp = sub.add_parser("cayley", parents=[common], help="Cayley (di)graph of a magma")
    sp.add_argument("magma")
    sp.add_argument("--subset", help="connection set, e.g. '1,2' (1-based unless --zero-based); default all")
    sp.add_argument("--mode", choices=["directed", "undirected", "labeled"], default="directed")
    sp.set_defaults(func=cmd_cayley, default_format="json")

    sp = sub.add_parser("classify", parents=[common], help="classify a labeled digraph")
    sp.add_argument("labeled", help="labeled digraph: JSON (0-based) or 'v --l--> w' lines")
    sp.set_defaults(func=cmd_classify, default_format="json")

    sp = sub.add_parser("reflections", parents=[common], help="reflection-subgroup markings of C_n")
    sp.add_argument("n", type=int)
    sp.set_defaults(func=cmd_reflections, default_format="json")

    sp = sub.add_parser("table1", parents=[common], help="reproduce the (mu_rack, mu_qnd) table")
    sp.add_argument("--max-complete", type=int, default=TABLE_DEFAULT_MAX["complete"])
    sp.add_argument("--max-star", type=int, default=TABLE_DEFAULT_MAX["star"])
    sp.add_argument("--max-cycle", type=int, default=TABLE_DEFAULT_MAX["cycle"])
    sp.set_defaults(func=cmd_table1, default_format="table")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    try:
        args.func(args)
    except InputError as exc:
        print(f"rackbench: input error: {exc}", file=sys.stderr)
        return 2
    except (census.BudgetExceeded, GroupTooLarge, labeled.NotInClass) as exc:
        print(f"rackbench: {exc}", file=sys.stderr)
        if args.format == "json" and isinstance(exc, census.BudgetExceeded):
            print(json.dumps({"error": "budget_exceeded", "partial": exc.partial.to_json()}, sort_keys=True))
        return 1
    except ValueError as exc:
        print(f"rackbench: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
