"""Command line interface.

Exit codes: 0 ok, 1 verification failure or internal inconsistency,
2 input error, 3 expectation failed, 4 inconclusive search.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import bounds as _bounds
from .constructions import (
    StarSpec,
    make_clique_config,
    make_recursive_tight,
    make_star,
    make_z_config,
    recursive_vertex_budget,
    z_vertex_budget,
)
from .core import initial_state, run
from .encoding import DomainError
from .io import ConfigurationFormatError, dumps, format_configuration, read_configuration, trace_records, write_configuration
from .search import INCONCLUSIVE, min_contagious
from .validation import check_hypergraph, check_params
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_EXPECT = 3
EXIT_INCONCLUSIVE = 4



def _emit(obj) -> None:
    sys.stdout.write(dumps(obj) + "\n")


def cmd_simulate(args) -> int:
    check_params(args.n, args.k, args.j, args.r)
    edges = None
    if args.edges:
        edges = [tuple(int(v) for v in line.split()) for line in open(args.edges, encoding="utf-8")
                 if line.strip() and not line.lstrip().startswith("#")]
    H = check_hypergraph(args.n, args.k, edges)
    A0 = read_configuration(args.input, args.n, args.j)
    result = run(initial_state(A0, H, args.r), args.max_steps)
    records = trace_records(A0, result)
    summary = {
        "percolated": result.percolated,
        "tau": result.tau,
        "final_count": len(result.final),
        "initial_count": len(A0),
        "steps": result.steps,
        "truncated": result.truncated,
    }
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            for rec in records:
                fh.write(dumps(rec) + "\n")
    else:
        summary["trace"] = records
    _emit(summary)
    if args.expect_percolate and not result.percolated:
        return EXIT_EXPECT
    return EXIT_OK


_FAMILY_ARGS = {"zr": ("r",), "star": ("m", "j", "size"), "recursive": ("k", "r"), "clique": ("j", "r")}


def _build(args):
    fam = args.family
    missing = [f"--{a}" for a in _FAMILY_ARGS[fam] if getattr(args, a) is None]
    if missing:
        raise DomainError(f"family {fam} needs {' '.join(missing)}")
    if fam == "zr":
        n = args.n or max(z_vertex_budget(args.r), 2 * args.r + 1)
        config, centers = make_z_config(args.r, n)
        return config, {"r": args.r, "n": n, "centers": centers}
    if fam == "star":
        n = args.n or args.m + args.size * (args.j - args.m)
        return make_star(StarSpec(args.m, args.j, args.size, n)), {"m": args.m, "j": args.j, "size": args.size, "n": n}
    if fam == "recursive":
        n = args.n or max(recursive_vertex_budget(args.k, args.r), args.k + args.r + 1)
        return make_recursive_tight(args.k, args.r, n), {"k": args.k, "r": args.r, "n": n}
    if fam == "clique":
        n = args.n or args.j + args.r - 1
        return make_clique_config(args.j, args.r, n), {"j": args.j, "r": args.r, "n": n}
    raise DomainError(f"unknown family {fam}")


def cmd_construct(args) -> int:
    config, params = _build(args)
    header = None
    if args.describe:
        header = dumps({"family": args.family, "parameters": params, "size": len(config),
                        "vertex_count": len(config.vertices())})
    if args.output:
        write_configuration(args.output, config, header)
    else:
        sys.stdout.write(format_configuration(config, header))
    return EXIT_OK


def cmd_search(args) -> int:
    check_params(args.n, args.k, args.j, args.r)
    cert = min_contagious(args.n, args.k, args.j, args.r, m_lo=args.m_lo, m_hi=args.m_hi,
                          workers=args.workers, max_orbits=args.max_orbits)
    if args.witness and cert.witness is not None:
        write_configuration(args.witness, cert.witness)
    _emit(cert.to_dict(timing=args.timing))
    if cert.verdict == INCONCLUSIVE:
        return EXIT_INCONCLUSIVE
    if cert.bound_inconsistency:
        return EXIT_FAIL
    return EXIT_OK


def cmd_bounds(args) -> int:
    report = _bounds.best_known(args.k, args.j, args.r)
    _emit(report.to_dict())
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        print(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_INPUT
    report = run_suite(args.suite, seed=args.seed, count=args.count)
    _emit(report.to_dict() | {"violations": len(report.violations)})
    if not report.ok:
        with open(args.dump, "w", encoding="utf-8") as fh:
            json.dump(report.violations[0], fh, sort_keys=True, indent=1)
        print(f"violation dumped to {args.dump}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperboot", description="j-set bootstrap percolation in k-uniform hypergraphs")
    p.add_argument("--log-level", default="WARNING")
    sub = p.add_subparsers(dest="command", required=True)

    def nkjr(sp, need_n=True):
        if need_n:
            sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--j", type=int, required=True)
        sp.add_argument("--r", type=int, required=True)

    s = sub.add_parser("simulate", help="run the infection process from a configuration file")
    nkjr(s)
    s.add_argument("--input", required=True)
    s.add_argument("--edges", help="explicit edge list, one k-set per line (complete hypergraph if omitted)")
    s.add_argument("--max-steps", type=int)
    s.add_argument("--expect-percolate", action="store_true")
    s.add_argument("--trace", help="write the per-step trace as JSON lines here")
    s.set_defaults(func=cmd_simulate)

    c = sub.add_parser("construct", help="emit a contagious configuration family")
    c.add_argument("--family", choices=["star", "zr", "recursive", "clique"], required=True)
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--j", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--m", type=int, help="star center size")
    c.add_argument("--size", type=int, help="number of star members")
    c.add_argument("--describe", action="store_true", help="prefix a JSON header comment")
    c.add_argument("--output")
    c.set_defaults(func=cmd_construct)

    q = sub.add_parser("search", help="find a minimum contagious configuration")
    nkjr(q)
    q.add_argument("--m-lo", type=int)
    q.add_argument("--m-hi", type=int)
    q.add_argument("--workers", type=int, default=1)
    q.add_argument("--max-orbits", type=int)
    q.add_argument("--witness", help="write the witness in configuration text format")
    q.add_argument("--timing", action="store_true", help="include elapsed_ms (breaks byte-identical output)")
    q.set_defaults(func=cmd_search)

    b = sub.add_parser("bounds", help="known bounds on the minimum contagious size")
    nkjr(b, need_n=False)
    b.set_defaults(func=cmd_bounds)

    v = sub.add_parser("verify", help="run a seeded property suite")
    v.add_argument("--suite", required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=50)
    v.add_argument("--dump", default="hyperboot-violation.json")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ConfigurationFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DomainError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
