"""Command-line front end.

Machine-readable JSON goes to stdout (or the --output file); a one-line
human summary goes to stderr. Exit codes: 0 success or valid, 1 invalid
broadcast or pattern, 2 bad input, 3 solver timeout (stdout then carries
the bounds known so far).

Graphs are named inline ("grid:2,2" or "torus:1,1,0,4" as b1x,b1y,b2x,b2y)
or by a path to a previously exported graph JSON file.
"""

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from . import bounds as bounds_mod
from . import cache, render
from .grid import build_grid, build_torus, graph_from_json, graph_to_json, radius
from .patterns import (
    InjectivityError,
    catalog,
    catalog_pattern,
    density,
    density_search,
    pattern_from_json,
    verify_infinite,
)
from .reception import broadcast_from_json, is_broadcast, reception_map
from .solver import SolveTimeout, conjecture61_report, gamma, single_tower_threshold

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2
EXIT_TIMEOUT = 3


@dataclass
class CliConfig:
    cache_path: str
    threads: int
    time_limit: float
    output: str  # None means stdout

    def __post_init__(self):
        if self.threads < 0:
            raise ValueError("threads must be >= 0")
        if self.time_limit <= 0:
            raise ValueError("time limit must be positive")


def _emit_text(config, text):
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _emit(config, doc):
    _emit_text(config, json.dumps(doc, indent=2, sort_keys=True))


def _note(msg):
    print(msg, file=sys.stderr)


def _parse_graph(spec):
    if spec.startswith("grid:"):
        try:
            m, n = (int(s) for s in spec[5:].split(","))
        except ValueError as exc:
            raise ValueError(f"bad grid spec {spec!r}: expected grid:M,N") from exc
        return build_grid(m, n)
    if spec.startswith("torus:"):
        try:
            a, b, c, d = (int(s) for s in spec[6:].split(","))
        except ValueError as exc:
            raise ValueError(
                f"bad torus spec {spec!r}: expected torus:b1x,b1y,b2x,b2y"
            ) from exc
        return build_torus(((a, b), (c, d)))
    with open(spec, "r", encoding="utf-8") as fh:
        return graph_from_json(json.load(fh))


def _load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def cmd_build(args, config):
    g = build_grid(args.m, args.n)
    bset = None
    if args.broadcast:
        bset = broadcast_from_json(g, _load_json(args.broadcast))
    if args.format == "json":
        _emit(config, graph_to_json(g))
    elif args.format == "svg":
        _emit_text(config, render.to_svg(g, bset))
    else:
        _emit_text(config, render.to_ascii(g, bset))
    _note(f"grid {args.m}x{args.n}: {g.vertex_count} vertices, {len(g.edges())} edges")
    return EXIT_OK


def cmd_verify(args, config):
    g = _parse_graph(args.graph)
    bset = broadcast_from_json(g, _load_json(args.set_file))
    check = is_broadcast(g, bset, args.r)
    doc = {
        "valid": check.valid,
        "t": bset.t,
        "r": args.r,
        "towers": len(bset),
        "deficient": [
            {"vertex": g.coords[i].to_json(), "reception": got}
            for i, got in check.deficient
        ],
    }
    if args.show_reception:
        values = reception_map(g, bset)
        doc["reception"] = [
            {"vertex": v.to_json(), "value": values[i]}
            for i, v in enumerate(g.coords)
        ]
    _emit(config, doc)
    if check.valid:
        _note(f"valid ({bset.t},{args.r}) broadcast with {len(bset)} towers")
        return EXIT_OK
    _note(f"invalid: {len(check.deficient)} deficient vertices")
    return EXIT_INVALID


def cmd_gamma(args, config):
    m, n, t, r = args.m, args.n, args.t, args.r
    record = cache.lookup(config.cache_path, m, n, t, r)
    if record is not None:
        _emit(config, record)
        _note(f"gamma(H_{{{m},{n}}}, {t}, {r}) = {record['gamma']} (cached)")
        return EXIT_OK
    g = build_grid(m, n)
    started = time.monotonic()
    try:
        result = gamma(g, t, r, time_limit=config.time_limit)
    except SolveTimeout as ex:
        doc = {
            "m": m,
            "n": n,
            "t": t,
            "r": r,
            "status": "timeout",
            "lower": ex.lower,
            "upper": ex.upper,
            "witness": sorted(g.coords[i].to_json() for i in ex.witness.vertices)
            if ex.witness
            else None,
        }
        _emit(config, doc)
        _note(f"timed out: gamma in [{ex.lower}, {ex.upper}]")
        return EXIT_TIMEOUT
    runtime_ms = int((time.monotonic() - started) * 1000)
    record = cache.make_record(m, n, t, r, result, g, runtime_ms)
    cache.append(config.cache_path, record)
    _emit(config, record)
    _note(
        f"gamma(H_{{{m},{n}}}, {t}, {r}) = {result.gamma} "
        f"(proved, {result.explored} nodes, {runtime_ms} ms)"
    )
    return EXIT_OK


def cmd_bounds(args, config):
    rep = bounds_mod.report(args.m, args.n, args.t, args.r)
    _emit(config, rep.to_json())
    _note(f"bounds: lower {rep.best_lower}, upper {rep.best_upper}")
    return EXIT_OK


def cmd_radius(args, config):
    g = build_grid(args.m, args.n)
    rad = radius(g)
    _, center = single_tower_threshold(g, 1)
    doc = {
        "m": args.m,
        "n": args.n,
        "radius": rad,
        "center": g.coords[center].to_json(),
    }
    _emit(config, doc)
    _note(f"radius {rad} (single tower dominates at t = r + {rad})")
    return EXIT_OK


def cmd_conjecture61(args, config):
    rows = conjecture61_report(args.m_max, args.r_max)
    _emit(config, {"rows": rows})
    for row in rows:
        mark = "agree" if row["agree"] else "DIFFER"
        _note(
            f"m={row['m']} r={row['r']}: threshold {row['threshold']}, "
            f"conjectured {row['conjectured']} ({mark})"
        )
    return EXIT_OK


def _resolve_pattern(source):
    if source.startswith("catalog:"):
        try:
            t, r = (int(s) for s in source[8:].split(","))
        except ValueError as exc:
            raise ValueError(f"bad catalog spec {source!r}: expected catalog:T,R") from exc
        return catalog_pattern(t, r), r
    return pattern_from_json(_load_json(source)), None


def cmd_pattern_verify(args, config):
    pattern, default_r = _resolve_pattern(args.source)
    r = args.r if args.r is not None else default_r
    if r is None:
        raise ValueError("--r is required for patterns loaded from a file")
    check = verify_infinite(pattern, r)
    doc = {
        "valid": check.valid,
        "t": pattern.t,
        "r": r,
        "density": str(density(pattern)),
        "min_reception": check.min_reception,
        "max_nonbroadcaster_reception": check.max_nonbroadcaster_reception,
        "deficient": [
            {"class": v.to_json(), "reception": got} for v, got in check.deficient
        ],
    }
    _emit(config, doc)
    if check.valid:
        _note(f"valid ({pattern.t},{r}) pattern, density {density(pattern)}")
        return EXIT_OK
    _note(f"invalid: {len(check.deficient)} deficient classes")
    return EXIT_INVALID


def cmd_pattern_density(args, config):
    pattern, _ = _resolve_pattern(args.source)
    lat = pattern.lattice()
    _emit(
        config,
        {
            "density": str(density(pattern)),
            "tower_classes": len(pattern.reps),
            "cell_vertices": 4 * lat.det,
        },
    )
    return EXIT_OK


def cmd_pattern_search(args, config):
    budget = args.budget if args.budget is not None else config.time_limit
    outcome = density_search(
        args.t, args.r, args.max_det, time_limit=budget, threads=config.threads
    )
    doc = {
        "t": args.t,
        "r": args.r,
        "max_det": args.max_det,
        "complete": outcome.complete,
        "lattices_searched": outcome.lattices_searched,
        "density": str(outcome.density) if outcome.density is not None else None,
        "pattern": outcome.pattern.to_json() if outcome.pattern else None,
    }
    _emit(config, doc)
    if outcome.pattern:
        _note(f"best density {outcome.density} "
              f"({'complete' if outcome.complete else 'budget exhausted'})")
    else:
        _note("no verified pattern found in budget")
    return EXIT_OK if outcome.complete else EXIT_TIMEOUT


def cmd_pattern_export(args, config):
    docs = []
    for (t, r), pattern in catalog():
        entry = pattern.to_json()
        entry["r"] = r
        entry["density"] = str(density(pattern))
        docs.append(entry)
        if args.dir:
            path = os.path.join(args.dir, f"pattern-t{t}-r{r}.json")
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(entry, fh, indent=2, sort_keys=True)
                fh.write("\n")
    if args.dir:
        _note(f"wrote {len(docs)} patterns to {args.dir}")
    else:
        _emit(config, {"patterns": docs})
    return EXIT_OK


def _add_global_options(parser, suppress=False):
    # registered on the top parser with real defaults and again on every
    # subparser with SUPPRESS, so the flags work on either side of the
    # subcommand without late defaults clobbering early values
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument(
        "--cache",
        default=d,
        help="results cache path (or $TRUNC_DOM_CACHE)",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=argparse.SUPPRESS if suppress else 1,
        help="worker count for searches (0 = auto)",
    )
    parser.add_argument(
        "--time-limit",
        type=float,
        default=argparse.SUPPRESS if suppress else 300.0,
        help="seconds per solve",
    )
    parser.add_argument(
        "--output", default=d, help="write stdout JSON here instead"
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="truncdom",
        description="Broadcast domination on the truncated square tiling.",
    )
    _add_global_options(parser)
    common = argparse.ArgumentParser(add_help=False)
    _add_global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser(
        "build", parents=[common], help="construct a grid and export or draw it"
    )
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("json", "svg", "ascii"), default="json")
    p.add_argument("--broadcast", help="broadcast-set file to overlay on drawings")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser(
        "verify", parents=[common], help="check a broadcast-set file against a graph"
    )
    p.add_argument("graph", help="grid:M,N | torus:b1x,b1y,b2x,b2y | graph.json")
    p.add_argument("set_file")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--show-reception", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser(
        "gamma", parents=[common], help="exact minimum broadcast size of a grid"
    )
    for name in ("m", "n", "t", "r"):
        p.add_argument(name, type=int)
    p.set_defaults(fn=cmd_gamma)

    p = sub.add_parser("bounds", parents=[common], help="closed-form lower/upper bounds")
    for name in ("m", "n", "t", "r"):
        p.add_argument(name, type=int)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser(
        "radius", parents=[common], help="graph radius and a best tower center"
    )
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(fn=cmd_radius)

    p = sub.add_parser(
        "conjecture61",
        parents=[common],
        help="single-tower thresholds vs the conjectured formula",
    )
    p.add_argument("--m-max", type=int, default=4)
    p.add_argument("--r-max", type=int, default=3)
    p.set_defaults(fn=cmd_conjecture61)

    pat = sub.add_parser("pattern", help="periodic-pattern operations")
    psub = pat.add_subparsers(dest="pattern_cmd", required=True)

    p = psub.add_parser(
        "verify", parents=[common], help="verify a pattern on the infinite tiling"
    )
    p.add_argument("source", help="catalog:T,R or a pattern JSON file")
    p.add_argument("--r", type=int, default=None)
    p.set_defaults(fn=cmd_pattern_verify)

    p = psub.add_parser("density", parents=[common], help="exact density of a pattern")
    p.add_argument("source", help="catalog:T,R or a pattern JSON file")
    p.set_defaults(fn=cmd_pattern_density)

    p = psub.add_parser(
        "search", parents=[common], help="search period lattices for low density"
    )
    p.add_argument("t", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--max-det", type=int, required=True)
    p.add_argument("--budget", type=float, default=None, help="seconds")
    p.set_defaults(fn=cmd_pattern_search)

    p = psub.add_parser(
        "export-catalog", parents=[common], help="write the built-in patterns as JSON"
    )
    p.add_argument("--dir", default=None)
    p.set_defaults(fn=cmd_pattern_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else EXIT_INPUT
    try:
        config = CliConfig(
            cache_path=cache.cache_path(args.cache),
            threads=args.threads,
            time_limit=args.time_limit,
            output=args.output,
        )
        return args.fn(args, config)
    except InjectivityError as ex:
        _note(f"error: {ex}")
        return EXIT_INPUT
    except SolveTimeout as ex:
        _note(f"error: {ex}")
        return EXIT_TIMEOUT
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as ex:
        _note(f"error: {ex}")
        return EXIT_INPUT


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
