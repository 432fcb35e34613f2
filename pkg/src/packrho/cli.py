"""Command-line interface: ``packrho <subcommand> ...``.

Every subcommand prints one JSON run report on stdout.  Exit codes:
0 success, 1 verification or theorem check failed, 2 usage or input error,
3 size limit or time budget exceeded (the report is flagged partial).

A ``<graph>`` argument is either a file (format from ``--format`` or the
extension: .g6/.graph6, .col/.dimacs, anything else an edge list) or a
family spec such as ``knn_minus_matching(3)`` or ``join(path(4),cycle(5))``.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .coloring import greedy_color, verify_greedy_packing_coloring, verify_packing_coloring
from .errors import NotAPackingColoring, PackrhoError, SearchTimeout, SizeLimitExceeded, UncoloredVertex
from .exact import CHI_METHODS, GAMMA_METHODS, chi, gamma
from .families import VERTEX_NAMES, generate, parse_spec
from .graph import UNREACHABLE, Graph, metrics
from .io import FORMATS, parse_coloring, read_graph, write
from .rng import make_rng, random_graph, random_order
from . import theorems

log = logging.getLogger("packrho")

SCHEMA = "packrho.run-report/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _finite(x):
    return None if x == UNREACHABLE else int(x)


def load_graph(arg: str, fmt: str | None = None) -> tuple[Graph, tuple[str, ...] | None]:
    """Graph plus vertex names (fig1, fig2, fig3 only)."""
    if Path(arg).is_file():
        return read_graph(arg, fmt), None
    try:
        spec = parse_spec(arg)
        g = generate(spec)
    except PackrhoError as exc:
        raise UsageError(f"{arg!r} is neither a file nor a valid family spec: {exc}") from None
    return g, VERTEX_NAMES.get(spec.family) if not spec.params else None


def summary(g: Graph, source: str, names) -> dict:
    met = metrics(g)
    out = {
        "source": source,
        "n": g.n,
        "m": g.m,
        "diam": _finite(met.diam),
        "rad": _finite(met.rad),
        "connected": met.connected,
    }
    if names:
        out["vertex_names"] = list(names)
    return out


def parse_order(text: str, n: int, names, seed: int | None) -> list[int]:
    if text == "ids":
        return list(range(n))
    if text == "random":
        return random_order(n, make_rng(seed))
    if Path(text).is_file():
        tokens = Path(text).read_text().replace(",", " ").split()
    else:
        tokens = [t for t in text.split(",") if t]
    index = {name: i for i, name in enumerate(names or ())}
    order = []
    for tok in tokens:
        if tok in index:
            order.append(index[tok])
        elif tok.lstrip("-").isdigit():
            order.append(int(tok))
        else:
            raise UsageError(f"unknown vertex {tok!r} in order")
    if sorted(order) != list(range(n)):
        raise UsageError(f"order must be a permutation of the {n} vertices")
    return order


# ---------------------------------------------------------------------------
# subcommands; each returns (exit code, result, certificates)

def cmd_color(args, g, names):
    order = parse_order(args.order, g.n, names, args.seed)
    c = greedy_color(g, order)
    return EXIT_OK, {"colors_used": c.k, "order": order}, {"coloring": list(c.colors)}


def cmd_gamma(args, g, names):
    res = gamma(g, args.method, budget=args.budget, limit=args.limit)
    return EXIT_OK, _value_result(res), {"coloring": list(res.coloring.colors)}


def cmd_chi(args, g, names):
    res = chi(g, args.method, budget=args.budget, limit=args.limit)
    return EXIT_OK, _value_result(res), {"coloring": list(res.certificate.colors)}


def _value_result(res) -> dict:
    return {"value": res.value, "method": res.method, "exact": res.exact}


def cmd_verify(args, g, names):
    colors = parse_coloring(Path(args.coloring).read_text())
    if len(colors) != g.n:
        return EXIT_FAIL, {"valid": False, "reason": f"{len(colors)} colors for {g.n} vertices"}, {}
    result = {"valid": True, "greedy": args.greedy, "colors_used": max(colors, default=0)}
    violation = verify_packing_coloring(g, colors)
    if violation is not None:
        result.update(valid=False, reason="packing", violation=violation._asdict())
    elif args.greedy:
        witness = verify_greedy_packing_coloring(g, colors)
        if witness is not None:
            result.update(valid=False, reason="greedy", witness=witness._asdict())
    return (EXIT_OK if result["valid"] else EXIT_FAIL), result, {"coloring": colors}


def cmd_family(args, g, names):
    doc = write(g, args.format, name=args.spec)
    return EXIT_OK, {"format": doc.format, "text": doc.text, "name": doc.name}, {}


def cmd_check(args):
    ids = list(theorems.CHECKS) if args.theorem == "all" else [args.theorem]
    reports = []
    for tid in ids:
        fn = theorems.CHECKS[tid]
        if tid in theorems.SWEEPS:
            rep = fn(args.nmax, workers=args.workers, allow_n7=args.allow_n7)
        elif tid == "paths":
            rep = fn(trials=args.trials, seed=args.seed)
        elif tid in ("families", "bounds"):
            rep = fn(seed=args.seed)
        else:
            rep = fn()
        log.info("%s: %s (%d instances)", tid, "pass" if rep.passed else "FAIL", rep.instances)
        reports.append(rep.to_dict())
    ok = all(r["passed"] for r in reports)
    return (EXIT_OK if ok else EXIT_FAIL), {"reports": reports, "passed": ok}, {}


def _time_greedy(g: Graph, reps: int) -> list[float]:
    times = []
    order = list(range(g.n))
    for _ in range(reps):
        t0 = time.perf_counter()
        greedy_color(g, order)
        times.append(time.perf_counter() - t0)
    return times


def cmd_bench(args):
    from .families import path

    seed = args.seed
    g = random_graph(args.n, args.m, seed)
    times = _time_greedy(g, args.reps)
    scaling = []
    for k in (args.path_n, 4 * args.path_n):
        scaling.append({"n": k, "seconds": min(_time_greedy(path(k), args.reps))})
    ratio = scaling[1]["seconds"] / max(scaling[0]["seconds"], 1e-9)
    within = ratio <= 64
    if not within:
        log.warning("path scaling ratio %.1f exceeds 64 (soft check)", ratio)
    result = {
        "random": {"n": args.n, "m": args.m, "seconds": times, "best": min(times)},
        "path_scaling": scaling,
        "ratio": ratio,
        "within_cubic_ceiling": within,
    }
    return EXIT_OK, result, {}


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="packrho", description="Greedy and exact packing colorings.")
    p.add_argument("--version", action="version", version=f"packrho {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph", help="graph file or family spec")
        sp.add_argument("--format", choices=FORMATS, help="input file format")
        return sp

    sp = graph_cmd("color", "run the greedy algorithm")
    sp.add_argument("--order", default="ids", help="ids, random, a file, or a comma list of ids/names")
    sp.add_argument("--seed", type=int, default=0)

    for name, methods, help_ in (("gamma", GAMMA_METHODS, "Grundy packing chromatic number"),
                                 ("chi", CHI_METHODS, "packing chromatic number")):
        sp = graph_cmd(name, help_)
        sp.add_argument("--method", choices=methods, default="auto")
        sp.add_argument("--budget", type=float, help="time budget in seconds")
        sp.add_argument("--limit", type=int, help="override the exhaustive size limit")

    sp = graph_cmd("verify", "check a coloring file")
    sp.add_argument("coloring", help="one 1-based color per line")
    sp.add_argument("--greedy", action="store_true", help="also require a greedy coloring")

    sp = sub.add_parser("family", help="emit a family graph")
    sp.add_argument("spec")
    sp.add_argument("--format", choices=FORMATS, default="graph6")
    sp.add_argument("--raw", action="store_true", help="print only the document text")

    sp = sub.add_parser("check", help="run theorem checks")
    sp.add_argument("theorem", choices=["all", *theorems.CHECKS])
    sp.add_argument("--nmax", type=int, default=theorems.SWEEP_DEFAULT)
    sp.add_argument("--allow-n7", action="store_true", help="permit the n=7 sweep")
    sp.add_argument("--trials", type=int, default=100_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, help="worker processes (default PACKRHO_THREADS or CPU count)")

    sp = sub.add_parser("bench", help="time the greedy algorithm")
    sp.add_argument("--n", type=int, default=2000)
    sp.add_argument("--m", type=int, default=10000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--reps", type=int, default=3)
    sp.add_argument("--path-n", type=int, default=500)
    return p


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    report = {
        "schema": SCHEMA,
        "tool_version": __version__,
        "command": ["packrho", *argv],
        "subcommand": args.command,
        "seed": getattr(args, "seed", None),
        "partial": False,
    }
    t0 = time.perf_counter()
    code = EXIT_OK
    try:
        if args.command in ("check", "bench"):
            code, result, certs = (cmd_check if args.command == "check" else cmd_bench)(args)
        else:
            source = args.spec if args.command == "family" else args.graph
            g, names = load_graph(source, None if args.command == "family" else args.format)
            report["graph"] = summary(g, source, names)
            handler = globals()[f"cmd_{args.command}"]
            code, result, certs = handler(args, g, names)
            if args.command == "family" and args.raw:
                sys.stdout.write(result["text"])
                return code
        report["result"] = result
        report["certificates"] = certs
    except (SizeLimitExceeded, SearchTimeout) as exc:
        code = EXIT_LIMIT
        report["partial"] = True
        report["error"] = str(exc)
        partial = getattr(exc, "partial", None)
        if partial is not None:
            report["result"] = _value_result(partial)
            coloring = partial.coloring if hasattr(partial, "coloring") else partial.certificate
            report["certificates"] = {"coloring": list(coloring.colors)}
    except (UsageError, PackrhoError, OSError) as exc:
        if isinstance(exc, (NotAPackingColoring, UncoloredVertex)):
            code = EXIT_FAIL
        else:
            code = EXIT_USAGE
        report["error"] = str(exc)
    report["ok"] = code == EXIT_OK
    report["timings"] = {"total_seconds": time.perf_counter() - t0}
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
