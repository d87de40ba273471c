"""Command-line front end.

Exit codes: 0 success, 1 negative result (no preimage, bound violated,
failed self-check), 2 input or precondition error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import logging
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import floor
from pathlib import Path

from .arcs import build_X, build_X_directed, iterate_X, parse_three_arcs
from .constructions import (
    theorem3_bound,
    theorem3_construct,
    theorem4_bounds,
    theorem4b_construct,
    theorem5_clawfree_construct,
)
from .domination import gamma_exact, greedy_dominating, is_dominating, vi_set
from .errors import (
    GenerationFailed,
    PreconditionError,
    ResourceLimitError,
    ThreeArcError,
    ValidationError,
    VerificationError,
)
from .generators import gnp, generate, line_graph, parse_family, random_min_degree
from .graph import (
    Graph,
    from_arc_list,
    from_edge_list,
    from_graph6,
    is_claw_free,
    is_connected,
    iter_graph6_file,
    parse_graph,
    to_edge_list,
    to_graph6,
)
from .iso import connected_graphs_up_to
from .recognition import recognize_small, verify_certificate

log = logging.getLogger("threearc")

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3

CSV_COLUMNS = [
    "id", "n", "m", "delta", "Delta", "connected", "clawfree", "gamma", "gammaX",
    "bound_thm3", "bound_thm4", "bound_eqdel", "bound_clawfree",
    "size_thm3", "size_clawfree", "verified",
]
REPORT_SCHEMA = 1
BENCH_NODE_BUDGET = 2_000_000


# -- input helpers ----------------------------------------------------------


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None


def _graph_from_text(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return from_graph6(text.strip())
    if fmt == "edgelist":
        return from_edge_list(text)
    return parse_graph(text)


def _load_graph(args) -> Graph:
    return _graph_from_text(_read_text(args.input), args.format)


def _parse_target(g: Graph, spec: str | None):
    if spec is None or spec == "all":
        return None
    kind, _, val = spec.partition(":")
    if kind != "vi" or not val.lstrip("-").isdigit():
        raise ValidationError(f"target must be 'all' or 'vi:<i>', got {spec!r}")
    return vi_set(g, int(val))


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


# -- build --------------------------------------------------------------------


def cmd_build(args) -> int:
    text = _read_text(args.input)
    if args.directed:
        if args.delta_file:
            raise ValidationError("--delta-file applies to undirected input only")
        d = from_arc_list(text)
        X = build_X_directed(d)
        if args.iterate > 1:
            X = iterate_X(X.graph, args.iterate - 1, cap=args.cap)
    elif args.delta_file:
        g = _graph_from_text(text, args.format)
        delta = parse_three_arcs(_read_text(args.delta_file))
        X = build_X(g, delta)
        if args.iterate > 1:
            X = iterate_X(X.graph, args.iterate - 1, cap=args.cap)
    else:
        g = _graph_from_text(text, args.format)
        X = iterate_X(g, args.iterate, cap=args.cap)

    body = to_graph6(X.graph) + "\n" if args.out_format == "graph6" else to_edge_list(X.graph)
    labels_path = args.labels or (args.out + ".labels" if args.out else None)
    if args.out:
        Path(args.out).write_text(body)
    else:
        sys.stdout.write(body)
    if labels_path:
        Path(labels_path).write_text(X.label_table())
    log.info("X has %d vertices and %d edges", X.n, X.m)
    return EXIT_OK


# -- dominate -------------------------------------------------------------------


def cmd_dominate(args) -> int:
    g = _load_graph(args)
    method = args.method
    if method in ("exact", "greedy"):
        target = _parse_target(g, args.target)
        if method == "exact":
            cert = gamma_exact(g, target, node_budget=args.budget)
        else:
            cert = greedy_dominating(g, target)
        ok = cert.verify(g)
        _emit({"method": method, **cert.to_dict(), "verified": ok})
        return EXIT_OK if ok else EXIT_NEGATIVE
    if args.target is not None:
        raise ValidationError(f"--target applies to exact/greedy only, not {method}")
    if method == "thm3":
        plan = theorem3_construct(g, cap=args.cap)
    elif method == "thm4":
        if g.n and g.min_degree == 3:
            plan = theorem4b_construct(g, cap=args.cap)
        elif g.n and g.min_degree in (2, 4):
            plan = theorem3_construct(g, cap=args.cap)
            bounds = theorem4_bounds(g, len(plan.partition.S))
            plan.bound = bounds["delta2"] if g.min_degree == 2 else bounds["delta4"]
        else:
            raise PreconditionError(
                f"thm4 needs minimum degree 2, 3 or 4, got {g.min_degree if g.n else None}"
            )
    else:
        plan = theorem5_clawfree_construct(g)
    # independent re-check against a freshly built X(G)
    X = build_X(g)
    ok = is_dominating(X.graph, [X.vertex(a) for a in plan.result])[0]
    ok = ok and (plan.bound is None or plan.size <= floor(plan.bound))
    out = {"method": method, **plan.to_dict()}
    out["verified"] = bool(plan.verified and ok)
    _emit(out)
    return EXIT_OK if out["verified"] else EXIT_NEGATIVE


# -- recognize ------------------------------------------------------------------


def cmd_recognize(args) -> int:
    g = _load_graph(args)
    result = recognize_small(g, limit=args.limit, budget=args.budget)
    if result is None:
        _emit({"found": False})
        return EXIT_NEGATIVE
    out = {
        "found": True,
        "H": {"n": result.H.n, "edges": [list(e) for e in result.H.edges()],
              "graph6": to_graph6(result.H)},
        "iso": result.iso,
        "preimages": result.preimages,
        "certificate": None if result.certificate is None else result.certificate.to_dict(),
    }
    if result.certificate is not None:
        out["certificateVerified"] = bool(verify_certificate(g, result.certificate))
    _emit(out)
    return EXIT_OK


# -- bench ----------------------------------------------------------------------


def expand_family(text: str) -> list[str]:
    """``friendship:k=1..4`` -> ``friendship:k=1`` ... ``friendship:k=4``."""
    name, _, rest = text.partition(":")
    choices = []
    for item in filter(None, rest.split(",")):
        key, eq, val = item.partition("=")
        if not eq:
            raise ValidationError(f"bad family parameter {item!r}")
        lo, dots, hi = val.partition("..")
        try:
            vals = range(int(lo), int(hi) + 1) if dots else [int(val)]
        except ValueError:
            raise ValidationError(f"bad family parameter {item!r}") from None
        choices.append([f"{key}={v}" for v in vals])
    if not choices:
        return [name]
    return [f"{name}:" + ",".join(combo) for combo in itertools.product(*choices)]


def _clawfree_line_graphs(count: int, max_order: int, seed: int):
    rng = random.Random(seed)
    made = 0
    for _ in range(200 * count):
        if made >= count:
            return
        k = rng.randint(3, max_order)
        L = line_graph(gnp(k, rng.uniform(0.3, 0.8), rng))
        if 3 <= L.n <= max_order and L.min_degree >= 2 and is_connected(L):
            yield f"line-{made}-s{seed}", L
            made += 1
    if made < count:
        raise GenerationFailed(f"only {made} of {count} claw-free line graphs generated")


def _corpus(directory: str):
    root = Path(directory)
    if not root.is_dir():
        raise ValidationError(f"corpus directory {directory} not found")
    for path in sorted(p for p in root.iterdir() if p.is_file()):
        text = path.read_text()
        if path.suffix == ".g6":
            for k, g in enumerate(iter_graph6_file(text)):
                yield f"{path.name}:{k}", g
        else:
            yield path.name, parse_graph(text)


def bench_inputs(args):
    for fam in args.family or []:
        for spec in expand_family(fam):
            yield spec, generate(parse_family(spec))
    if args.exhaustive:
        for g in connected_graphs_up_to(args.exhaustive, args.min_degree, min_order=3):
            yield f"n{g.n}-{to_graph6(g)}", g
    if args.random:
        for i in range(args.random):
            s = args.seed + i
            yield f"rand-n{args.order}-s{s}", random_min_degree(args.order, args.min_degree, s)
    if args.clawfree_lines:
        yield from _clawfree_line_graphs(args.clawfree_lines, args.order, args.seed)
    for d in args.corpus or []:
        yield from _corpus(d)


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def analyze(gid: str, g: Graph, cap: int = 10_000, budget: int = BENCH_NODE_BUDGET) -> dict:
    """One report row: parameters, exact γ and γ(X), bound values, construction sizes.

    ``violations`` lists every bound that fails; ``error`` records a per-graph
    failure (resource limit, bug) without aborting the campaign.
    """
    row: dict = {c: None for c in CSV_COLUMNS}
    row.update(id=gid, n=g.n, m=g.m)
    row["violations"], row["tight"], row["error"] = [], [], None
    if g.n == 0:
        row["error"] = "empty graph"
        return row
    row.update(delta=g.min_degree, Delta=g.max_degree, connected=is_connected(g),
               clawfree=is_claw_free(g)[0])
    verified = True
    try:
        gam = gamma_exact(g, node_budget=budget).size
        row["gamma"] = gam
        X = build_X(g)
        gx = gamma_exact(X.graph, node_budget=budget).size if X.n else 0
        row["gammaX"] = gx
        bounds = {}
        if g.min_degree >= 2:
            tb = theorem3_bound(g, cap)
            row["bound_thm3"] = tb.value
            bounds["thm3"] = Fraction(tb.value)
            plan = theorem3_construct(g, cap)
            row["size_thm3"] = plan.size
            verified &= plan.verified
            if plan.size > tb.value:
                row["violations"].append(f"size_thm3 {plan.size} > {tb.value}")
            t4 = theorem4_bounds(g, gam)
            b4 = t4["delta2"] or t4["delta3"] or t4["delta4"]
            if b4 is not None:
                row["bound_thm4"] = b4
                bounds["thm4"] = b4
            if t4["eqdel"] is not None:
                row["bound_eqdel"] = t4["eqdel"]
                bounds["eqdel"] = t4["eqdel"]
            if row["clawfree"]:
                cf = theorem5_clawfree_construct(g)
                row["bound_clawfree"] = 4 * gam
                bounds["clawfree"] = Fraction(4 * gam)
                row["size_clawfree"] = cf.size
                verified &= cf.verified
                if cf.size > 4 * gam:
                    row["violations"].append(f"size_clawfree {cf.size} > {4 * gam}")
            if row["connected"] and gx < 3:
                row["violations"].append(f"gammaX {gx} < 3")
        for name, b in bounds.items():
            if gx > floor(b):
                row["violations"].append(f"gammaX {gx} > {name} {b}")
            elif gx == floor(b):
                row["tight"].append(name)
        if gx > 2 * g.m:
            row["violations"].append(f"gammaX {gx} > 2m")
    except ResourceLimitError as exc:
        row["error"] = f"resource limit: {exc}"
        verified = False
    except VerificationError as exc:
        row["error"] = f"verification: {exc}"
        verified = False
    row["verified"] = verified
    return row


def _analyze_item(item):
    gid, g, cap, budget = item
    return analyze(gid, g, cap, budget)


def cmd_bench(args) -> int:
    items = [(gid, g, args.cap, args.budget) for gid, g in bench_inputs(args)]
    if not items:
        raise ValidationError("bench needs at least one input (--family, --exhaustive, --random, "
                              "--clawfree-lines or --corpus)")
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_analyze_item, items, chunksize=4))
    else:
        rows = [_analyze_item(it) for it in items]

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_fmt(row[c]) for c in CSV_COLUMNS])
    if args.out:
        Path(args.out).write_text(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())

    tight: dict[str, int] = {}
    for row in rows:
        for name in row["tight"]:
            tight[name] = tight.get(name, 0) + 1
    violating = [{"id": r["id"], "violations": r["violations"]} for r in rows if r["violations"]]
    summary = {
        "schema": REPORT_SCHEMA,
        "seed": args.seed,
        "rows": len(rows),
        "violations": sum(len(r["violations"]) for r in rows),
        "violatingRows": violating,
        "tight": dict(sorted(tight.items())),
        "errors": [{"id": r["id"], "error": r["error"]} for r in rows if r["error"]],
    }
    summary_path = args.summary or (str(Path(args.out).with_suffix(".json")) if args.out else None)
    text = json.dumps(summary, indent=2) + "\n"
    if summary_path:
        Path(summary_path).write_text(text)
    (sys.stderr if not args.out else sys.stdout).write(text)
    return EXIT_NEGATIVE if violating else EXIT_OK


# -- entry point ------------------------------------------------------------------


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="input", default=None,
                   help="graph file (edge list or graph6); stdin when omitted or '-'")
    p.add_argument("--format", choices=["auto", "edgelist", "graph6"], default="auto")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="threearc", description="3-arc graph toolkit")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build X(G), X(G, Δ), X(D) or X^k(G)")
    _add_input(p)
    p.add_argument("--directed", action="store_true", help="read input lines as arcs")
    p.add_argument("--iterate", type=int, default=1, metavar="K")
    p.add_argument("--delta-file", default=None, help="self-paired 3-arc set, one 'v u x y' per line")
    p.add_argument("--out-format", choices=["edgelist", "graph6"], default="edgelist")
    p.add_argument("--out", default=None)
    p.add_argument("--labels", default=None, help="label table path (default <out>.labels)")
    p.add_argument("--cap", type=int, default=5000, help="largest order built when iterating")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("dominate", help="dominating set of G, or of X(G) via a construction")
    _add_input(p)
    p.add_argument("--method", choices=["exact", "thm3", "thm4", "clawfree", "greedy"], default="exact")
    p.add_argument("--target", default=None, help="'all' or 'vi:<i>' (exact/greedy only)")
    p.add_argument("--cap", type=int, default=10_000, help="γ-set enumeration cap")
    p.add_argument("--budget", type=int, default=5_000_000, help="search node budget")
    p.set_defaults(func=cmd_dominate)

    p = sub.add_parser("recognize", help="find H with X(H) isomorphic to the input")
    _add_input(p)
    p.add_argument("--budget", type=int, default=100_000, help="candidate preimages examined")
    p.add_argument("--limit", type=int, default=12, help="largest input order accepted")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("bench", help="bound-verification campaign with CSV + JSON report")
    p.add_argument("--family", action="append", help="e.g. friendship:k=1..4 (repeatable)")
    p.add_argument("--exhaustive", type=int, default=0, metavar="N",
                   help="all connected graphs of order 3..N")
    p.add_argument("--random", type=int, default=0, metavar="COUNT",
                   help="random connected graphs of order --order")
    p.add_argument("--clawfree-lines", type=int, default=0, metavar="COUNT",
                   help="random line graphs with at most --order vertices")
    p.add_argument("--corpus", action="append", metavar="DIR", help="directory of graph files")
    p.add_argument("--order", type=int, default=7)
    p.add_argument("--min-degree", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=10_000)
    p.add_argument("--budget", type=int, default=BENCH_NODE_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="CSV path (stdout when omitted)")
    p.add_argument("--summary", default=None, help="JSON summary path (default <out>.json)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except PreconditionError as exc:
        _error("precondition", exc, getattr(exc, "witness", None))
        return EXIT_INPUT
    except (ValidationError, GenerationFailed) as exc:
        _error("input", exc)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        _error("resource-limit", exc, exc.stage)
        return EXIT_RESOURCE
    except VerificationError as exc:
        _error("verification", exc, exc.witness)
        return EXIT_NEGATIVE
    except ThreeArcError as exc:  # pragma: no cover - every subclass handled above
        _error("error", exc)
        return EXIT_INPUT


def _error(kind: str, exc: Exception, witness=None) -> None:
    payload = {"error": kind, "message": str(exc)}
    if witness is not None:
        payload["witness"] = witness
    print(json.dumps(payload, default=str), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
