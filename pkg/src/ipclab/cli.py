"""Command-line front end.

Exit codes: 0 success, 1 internal error, 2 invalid input, 3 inconclusive
(an enumeration budget tripped under --strict, or a suite could not reach a
verdict), 4 a verification suite found a violated bound.
"""

from __future__ import annotations

import argparse
import json
import sys

from .complexity import complexity_report, ipcor
from .fatminor import (
    build_Ut_host,
    check_fat_minor_model,
    model_from_json,
    model_to_json,
    search_singleton_fat_minor,
    transform_Ut_to_K2t,
)
from .generators import FAMILIES, generate, random_connected
from .graph import (
    DisconnectedGraphError,
    GraphError,
    read_graph,
    write_graph,
)
from .holes import enumerate_holes
from .operators import (
    CliqueSumPlan,
    check_line_structure,
    check_power_structure,
    clique_sum,
    line_graph,
    power,
)
from .paths import EnumerationBudget, default_budget
from .rooted_dag import build_rooted_dag
from .verify import SUITE_IDS, run_suite

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2
EXIT_INCONCLUSIVE = 3
EXIT_VIOLATION = 4


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _parse_budget(raw: str | None) -> EnumerationBudget:
    if raw is None:
        return default_budget()
    nums = [int(x) for x in raw.split(",") if x.strip()]
    if len(nums) == 1:
        return EnumerationBudget(max_paths_per_pair=nums[0])
    if len(nums) == 2:
        return EnumerationBudget(
            max_paths_per_pair=nums[0], max_total_paths=nums[1]
        )
    raise GraphError(f"bad --budget value {raw!r}")


def _write_out(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_compute(args) -> int:
    g = read_graph(args.graph, fmt=args.format)
    budget = _parse_budget(args.budget)
    if args.root is not None:
        res = ipcor(g, args.root, budget=budget)
        payload = {
            "schema": "ipc-lab/1",
            "root": res.root,
            "ipcor": res.value,
            "complete": res.complete,
            "witness_path": list(res.antichain_cert.path),
            "antichain": list(res.antichain_cert.antichain),
            "cover": [list(q) for q in res.cover_cert.cover],
        }
        complete = res.complete
        if args.json:
            _write_out(_dump(payload), args.out)
        else:
            _write_out(
                f"ipcor(root={res.root}) = {res.value}"
                + ("" if complete else " (lower bound; budget tripped)"),
                args.out,
            )
    else:
        rep = complexity_report(g, budget)
        complete = rep.complete
        if args.json:
            payload = {"schema": "ipc-lab/1", **rep.to_dict()}
            payload["complete"] = rep.complete
            _write_out(_dump(payload), args.out)
        else:
            lines = [
                f"ipco  = {rep.ipco}  (root {rep.ipco_root})",
                f"sipco = {rep.sipco}  (root {rep.sipco_root})",
                "per-root: "
                + " ".join(f"{rr.root}:{rr.value}" for rr in rep.per_root),
            ]
            if not complete:
                lines.append("note: budget tripped; values are lower bounds")
            _write_out("\n".join(lines), args.out)
    if args.strict and not complete:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "random":
        if len(args.param) != 1:
            raise GraphError("random family takes one --param (n)")
        g = random_connected(args.param[0], args.p, args.seed)
    else:
        g = generate(args.family, args.param)
    _write_out(write_graph(g, fmt=args.format), args.out)
    return EXIT_OK


def cmd_op(args) -> int:
    budget = _parse_budget(args.budget)
    if args.operation == "power":
        g = read_graph(args.graph, fmt=args.format)
        pg = power(g, args.r)
        result = pg.result
        check = check_power_structure(pg, budget) if args.check else None
    elif args.operation == "line":
        g = read_graph(args.graph, fmt=args.format)
        lg = line_graph(g)
        result = lg.result
        check = check_line_structure(lg, budget) if args.check else None
    elif args.operation == "cliquesum":
        with open(args.plan, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        parts = tuple(
            read_graph(json.dumps(p), fmt="json") for p in doc["parts"]
        )
        gluings = tuple(
            (gi, tuple(vi), gj, tuple(vj))
            for gi, vi, gj, vj in doc["gluings"]
        )
        summed = clique_sum(CliqueSumPlan(parts, gluings))
        result = summed.graph
        check = None
        if args.check:
            from .operators import check_cliquesum_structure

            check = check_cliquesum_structure(
                CliqueSumPlan(parts, gluings), summed, budget
            )
    else:  # pragma: no cover - argparse restricts choices
        raise GraphError(f"unknown operation {args.operation!r}")
    if check is not None:
        _write_out(_dump({"schema": "ipc-lab/1", "check": check}), None)
        if check["violations"]:
            return EXIT_VIOLATION
        if not check["complete"]:
            return EXIT_INCONCLUSIVE
    _write_out(write_graph(result, fmt=args.out_format), args.out)
    return EXIT_OK


def cmd_holes(args) -> int:
    g = read_graph(args.graph, fmt=args.format)
    report = enumerate_holes(g, max_len=args.max_len)
    if args.json:
        _write_out(
            _dump({"schema": "ipc-lab/1", **report.to_dict()}), args.out
        )
    else:
        if report.is_chordal:
            desc = "chordal (vacuously monoholed)"
        elif report.is_monoholed:
            desc = f"monoholed (length {report.hole_lengths[0]})"
        else:
            desc = "mixed hole lengths"
        lengths = ",".join(map(str, report.hole_lengths))
        _write_out(
            f"holes: [{lengths}]\n{desc}\n"
            f"even hole: {report.has_even_hole}\n"
            f"complete: {report.enumeration_complete}",
            args.out,
        )
    if not report.enumeration_complete and args.strict:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_fatminor(args) -> int:
    if args.action == "check":
        host = read_graph(args.host, fmt=args.format)
        with open(args.model, "r", encoding="utf-8") as fh:
            model = model_from_json(fh.read())
        ok, why = check_fat_minor_model(host, model)
        _write_out(
            _dump({"schema": "ipc-lab/1", "accepted": ok, "violation": why}),
            args.out,
        )
        return EXIT_OK if ok else EXIT_VIOLATION
    if args.action == "transform":
        host = read_graph(args.host, fmt=args.format)
        with open(args.model, "r", encoding="utf-8") as fh:
            model = model_from_json(fh.read())
        out_model = transform_Ut_to_K2t(host, model)
        _write_out(model_to_json(out_model), args.out)
        return EXIT_OK
    if args.action == "host":
        host, model = build_Ut_host(args.t, args.K)
        _write_out(write_graph(host, fmt="edge-list"), args.out)
        if args.model_out:
            with open(args.model_out, "w", encoding="utf-8") as fh:
                fh.write(model_to_json(model))
        return EXIT_OK
    if args.action == "search":
        host = read_graph(args.host, fmt=args.format)
        pattern = read_graph(args.pattern, fmt=args.format)
        model = search_singleton_fat_minor(host, pattern, args.K)
        if model is None:
            _write_out(
                _dump({"schema": "ipc-lab/1", "found": False}), args.out
            )
            return EXIT_OK
        _write_out(model_to_json(model), args.out)
        return EXIT_OK
    raise GraphError(f"unknown action {args.action!r}")  # pragma: no cover


def cmd_verify(args) -> int:
    params: dict = {}
    for name in ("t", "k", "cases", "seed", "n_max", "invocations"):
        value = getattr(args, name, None)
        if value is not None:
            params[name] = value
    report = run_suite(args.suite, **params)
    text = _dump(report)
    _write_out(text, args.out)
    if report["status"] == "fail":
        return EXIT_VIOLATION
    if report["status"] == "inconclusive":
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_dag(args) -> int:
    g = read_graph(args.graph, fmt=args.format)
    dag = build_rooted_dag(g, args.root)
    payload = {
        "schema": "ipc-lab/1",
        "root": dag.root,
        "levels": list(dag.level),
        "down_edges": [
            [v, w] for v in range(dag.n) for w in dag.down[v]
        ],
    }
    if args.json:
        _write_out(_dump(payload), args.out)
    else:
        lines = [f"root {dag.root}"]
        for v in range(dag.n):
            downs = ",".join(map(str, dag.down[v])) or "-"
            lines.append(f"{v}: level {dag.level[v]} down [{downs}]")
        _write_out("\n".join(lines), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ipclab",
        description=(
            "Exact isometric path complexity of finite graphs: computation "
            "with certificates, family generators, graph operations, hole "
            "enumeration, fat-minor gadgets, and bound-verification suites."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=True):
        if graph:
            p.add_argument("graph", help="graph file (or inline text)")
        p.add_argument(
            "--format",
            choices=("edge-list", "json"),
            default="edge-list",
            help="input graph format",
        )
        p.add_argument("--out", help="write output to this file")
        p.add_argument("--json", action="store_true", help="JSON output")

    p = sub.add_parser("compute", help="ipco/sipco with certificates")
    common(p)
    p.add_argument("--root", type=int, help="compute for one root only")
    p.add_argument("--budget", help="path budget: N or N,M")
    p.add_argument(
        "--strict",
        action="store_true",
        help="exit 3 when a budget tripped",
    )
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("gen", help="generate a named graph family")
    p.add_argument(
        "--family",
        required=True,
        help="one of: " + ", ".join(sorted(FAMILIES)) + ", random",
    )
    p.add_argument(
        "--param", type=int, nargs="+", required=True, help="family parameters"
    )
    p.add_argument("--p", type=float, default=0.3, help="random edge probability")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--format", choices=("edge-list", "json"), default="edge-list"
    )
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("op", help="apply a graph operation")
    p.add_argument("operation", choices=("power", "line", "cliquesum"))
    p.add_argument("graph", nargs="?", help="input graph (power/line)")
    p.add_argument("--r", type=int, default=2, help="power exponent")
    p.add_argument("--plan", help="clique-sum plan JSON file")
    p.add_argument(
        "--format", choices=("edge-list", "json"), default="edge-list"
    )
    p.add_argument(
        "--out-format", choices=("edge-list", "json"), default="edge-list"
    )
    p.add_argument("--out")
    p.add_argument("--budget")
    p.add_argument(
        "--check", action="store_true", help="also run the structural checks"
    )
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("holes", help="enumerate induced cycles")
    common(p)
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_holes)

    p = sub.add_parser("fatminor", help="fat minor model tools")
    p.add_argument(
        "action", choices=("check", "transform", "host", "search")
    )
    p.add_argument("host", nargs="?", help="host graph file")
    p.add_argument("model", nargs="?", help="model JSON file")
    p.add_argument("--pattern", help="pattern graph file (search)")
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--K", type=int, default=12)
    p.add_argument(
        "--format", choices=("edge-list", "json"), default="edge-list"
    )
    p.add_argument("--out")
    p.add_argument("--model-out", help="also write the built model here")
    p.set_defaults(func=cmd_fatminor)

    p = sub.add_parser("verify", help="run a bound-verification suite")
    p.add_argument("suite", choices=SUITE_IDS)
    p.add_argument("--t", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--cases", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--n-max", dest="n_max", type=int)
    p.add_argument("--invocations", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dag", help="show the root-oriented DAG")
    common(p)
    p.add_argument("--root", type=int, required=True)
    p.set_defaults(func=cmd_dag)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, DisconnectedGraphError, IndexError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:  # pragma: no cover - safety net
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
