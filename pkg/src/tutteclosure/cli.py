"""Command-line front end: graph6 in, JSON lines out.

Per-graph subcommands read one graph6 string per line from ``--input`` or
stdin (or enumerate internally with ``--source enum``); sweep subcommands
generate their own instances. Each input produces one JSON line and a summary
line closes the stream. Exit codes: 0 all verified, 1 counterexample found,
2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Callable, Iterable, Iterator, TextIO

from . import harness
from .closure import k_closure, tutte_closure, tutte_closure_2conn_variant
from .enumeration import graphs_on
from .errors import BUDGET_ENV, InputError, as_budget
from .goodwalk import cover_2closed_with_audit
from .graph import Graph, parse_graph6, write_graph6
from .krausz import find_krausz_cover, hypergraph_from_cover
from .paths import find_maximal_tutte_path, is_tutte_connected
from .recognition import derive_forbidden_family, is_claw_free

OK = "ok"

ENV = {
    "nmax": "TUTTECLOSURE_NMAX",
    "budget": BUDGET_ENV,
    "seed": "TUTTECLOSURE_SEED",
    "jobs": "TUTTECLOSURE_JOBS",
    "mode": "TUTTECLOSURE_MODE",
}


class ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise ArgError(message)


def _dump(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


# -- per-graph handlers -------------------------------------------------------
# Each takes (graph, options) and returns a record. They are module-level so
# that worker processes can pickle them.


def _ok(g: Graph, **fields) -> dict:
    return dict({"input_graph6": write_graph6(g), "status": OK}, **fields)


def _apply(handler: Callable[[Graph, dict], dict], g: Graph, opts: dict) -> dict:
    rec = {"input_graph6": write_graph6(g)}

    def run(r: dict) -> None:
        r.update(handler(g, opts))

    out = harness.guarded(run, rec)
    if out["status"] == harness.VERIFIED and "verdicts" not in out:
        out["status"] = OK
    return out


def h_check_clawfree(g: Graph, opts: dict) -> dict:
    ok, witness = is_claw_free(g)
    return {"claw_free": ok, "witness": sorted(witness) if witness else None}


def h_closure(g: Graph, opts: dict) -> dict:
    mode = opts["mode"] or "tutte"
    bud = as_budget(opts["budget"])
    if mode == "tutte":
        gt, trace = tutte_closure(g, bud)
    elif mode == "tutte-2conn":
        gt, trace = tutte_closure_2conn_variant(g, bud)
    elif mode.startswith("k="):
        try:
            k = int(mode[2:])
        except ValueError:
            raise InputError(f"bad closure mode {mode!r}") from None
        gt, trace = k_closure(g, k)
    else:
        raise InputError(f"bad closure mode {mode!r}")
    return {"closure_graph6": write_graph6(gt), "closure_trace": trace.to_json()}


def h_tutte_path(g: Graph, opts: dict) -> dict:
    a, b = opts["a"], opts["b"]
    p = find_maximal_tutte_path(g, a, b, opts["budget"])
    return {"a": a, "b": b, "path": list(p) if p else None}


def h_tutte_connected(g: Graph, opts: dict) -> dict:
    ok, pair = is_tutte_connected(g, opts["budget"])
    return {"tutte_connected": ok, "failing_pair": list(pair) if pair else None}


def h_krausz(g: Graph, opts: dict) -> dict:
    ks = find_krausz_cover(g, opts["rank"], opts["budget"])
    if ks is None:
        return {"rank": opts["rank"], "cover": None, "hypergraph": None}
    return {"rank": opts["rank"], "cover": ks.to_json(), "hypergraph": hypergraph_from_cover(ks).to_json()}


def h_cover_2closed(g: Graph, opts: dict) -> dict:
    ks, audit = cover_2closed_with_audit(g)
    return {"cover": ks.to_json(), "audit": audit}


def r_cover_closure(g: Graph, opts: dict) -> dict:
    return harness.closure_cover_record(g, opts["budget"])


def r_cmaximal(g: Graph, opts: dict) -> dict:
    return harness.cmaximal_record(g, opts["budget"], all_cuts=opts["mode"] == "all-cuts")


HANDLERS: dict[str, Callable[[Graph, dict], dict]] = {
    "check-clawfree": h_check_clawfree,
    "closure": h_closure,
    "tutte-path": h_tutte_path,
    "tutte-connected": h_tutte_connected,
    "krausz": h_krausz,
    "cover-2closed": h_cover_2closed,
}
RECORDERS: dict[str, Callable[[Graph, dict], dict]] = {
    "cover-closure": r_cover_closure,
    "cmaximal": r_cmaximal,
}


def _work(cmd: str, opts: dict, item: Graph | dict) -> dict:
    if isinstance(item, dict):  # unparsable input line
        return item
    if cmd in RECORDERS:
        return RECORDERS[cmd](item, opts)
    return _apply(HANDLERS[cmd], item, opts)


# -- input and output ---------------------------------------------------------


def read_graphs(stream: TextIO) -> Iterator[Graph | dict]:
    for lineno, line in enumerate(stream, 1):
        text = line.strip()
        if not text:
            continue
        try:
            yield parse_graph6(text)
        except InputError as exc:
            yield {"line": lineno, "input": text, "status": harness.INPUT_ERROR, "error": str(exc)}


def _mapped(fn: Callable, items: Iterable, jobs: int) -> Iterator[dict]:
    if jobs <= 1:
        for it in items:
            yield fn(it)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map keeps input order, so output diffs stay stable
        yield from pool.map(fn, items, chunksize=16)


def emit(records: Iterable[dict], out: TextIO, **extra) -> int:
    seen = []
    for rec in records:
        out.write(_dump(rec) + "\n")
        seen.append({"status": rec["status"]})
    summary = harness.summarize(seen, **extra)
    summary["ok"] = sum(1 for r in seen if r["status"] == OK)
    out.write(_dump(summary) + "\n")
    out.flush()
    return harness.exit_code(summary)


# -- argument handling --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--nmax", type=int, help="largest order to enumerate")
    common.add_argument("--budget", type=int, help="search expansions allowed per instance")
    common.add_argument("--seed", type=int, help="seed for the random families")
    common.add_argument("--jobs", type=int, help="worker processes")
    common.add_argument("--mode", help="operation mode (closure kind, or all-cuts for cmaximal)")
    common.add_argument("--input", help="graph6 file (default: stdin)")
    common.add_argument("--source", choices=["stdin", "file", "enum"], help="where graphs come from")

    parser = _Parser(prog="tutteclosure", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("check-clawfree", parents=[common])
    p = sub.add_parser("closure", parents=[common])
    p.add_argument("kind", nargs="?", help="tutte, k=K or tutte-2conn")
    p = sub.add_parser("tutte-path", parents=[common])
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    sub.add_parser("tutte-connected", parents=[common])
    p = sub.add_parser("krausz", parents=[common])
    p.add_argument("--rank", type=int, required=True)
    sub.add_parser("cover-2closed", parents=[common])
    sub.add_parser("cover-closure", parents=[common])
    sub.add_parser("derive-forbidden", parents=[common])
    sub.add_parser("cmaximal", parents=[common])
    p = sub.add_parser("verify-theorem5", parents=[common])
    p.add_argument("--random-count", type=int, default=500)
    p.add_argument("--random-n", type=int, default=9)
    p = sub.add_parser("verify-lemmas", parents=[common])
    p.add_argument("--count", type=int, help="number of random instances")
    p.add_argument("--suite", choices=["2closed", "completion", "neighbourhood"], default="2closed")
    return parser


def _resolve(args: argparse.Namespace, name: str, default, cast=int):
    value = getattr(args, name, None)
    if value is None and os.environ.get(ENV[name]):
        try:
            value = cast(os.environ[ENV[name]])
        except ValueError:
            raise ArgError(f"bad value in ${ENV[name]}") from None
    return default if value is None else value


def _graph_source(args: argparse.Namespace, cmd: str, nmax: int | None) -> Iterable[Graph | dict]:
    source = args.source or ("file" if args.input else "stdin")
    if source == "enum":
        if nmax is None:
            raise ArgError("--source enum needs --nmax")
        narrow = cmd in RECORDERS
        return (g for n in range(1, nmax + 1) for g in graphs_on(n, claw_free=narrow, connected=narrow))
    if source == "file":
        if not args.input:
            raise ArgError("--source file needs --input")
        with open(args.input) as fh:
            return list(read_graphs(fh))
    return read_graphs(sys.stdin)


def run(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        nmax = _resolve(args, "nmax", None)
        budget = _resolve(args, "budget", None)
        seed = _resolve(args, "seed", 0)
        jobs = _resolve(args, "jobs", 1)
        mode = _resolve(args, "mode", None, str)
        if nmax is not None and not 0 <= nmax <= 64:
            raise ArgError("--nmax must lie in [0, 64]")
        if budget is not None and budget <= 0:
            raise ArgError("--budget must be positive")
        if jobs < 1:
            raise ArgError("--jobs must be positive")
    except ArgError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    cmd = args.command
    if cmd == "closure" and args.kind:
        mode = mode or args.kind
    opts = {"budget": budget, "mode": mode, "seed": seed}
    try:
        if cmd == "derive-forbidden":
            fam = derive_forbidden_family(7 if nmax is None else nmax)
            recs = ({"index": i, "graph6": write_graph6(h), "n": h.n, "edges": h.num_edges(), "status": OK}
                    for i, h in enumerate(fam))
            return emit(recs, out, provenance=fam.provenance)
        if cmd == "verify-theorem5":
            items = harness.closure_cover_instances(8 if nmax is None else nmax, args.random_count, args.random_n, seed)
            fn = partial(harness.closure_cover_record, budget=budget)
            return emit(_mapped(fn, items, jobs), out, command=cmd, seed=seed)
        if cmd == "verify-lemmas":
            if args.suite == "2closed":
                items = harness.two_closed_instances(seed, args.count or 1000, 12 if nmax is None else nmax)
                fn = harness.two_closed_record
            elif args.suite == "completion":
                items = harness.completion_instances(seed, args.count or 10_000, 10 if nmax is None else nmax)
                fn = harness.completion_record
            else:
                n = 8 if nmax is None else nmax
                items = (g for k in range(1, n + 1) for g in graphs_on(k, claw_free=True))
                fn = harness.neighbourhood_record
            return emit(_mapped(fn, items, jobs), out, command=cmd, suite=args.suite, seed=seed)
        if cmd == "tutte-path":
            opts.update(a=args.a, b=args.b)
        if cmd == "krausz":
            if args.rank < 1:
                raise ArgError("--rank must be positive")
            opts["rank"] = args.rank
        items = _graph_source(args, cmd, nmax)
        return emit(_mapped(partial(_work, cmd, opts), items, jobs), out, command=cmd)
    except ArgError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
