"""Command-line front end.

Exit codes: 0 success / valid, 1 definitive negative answer, 2 input error,
3 timeout.
"""

import argparse
import json
import sys

from . import experiments, solver, theorems
from .formats import graph_to_json, load_graph, parse_ranks, parse_thetas
from .graphs import GraphParameterError
from .representation import RepresentationError, verify

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_TIMEOUT = 0, 1, 2, 3

# Options whose values may legitimately start with "-" (e.g. "-1,1").
_VALUE_OPTS = ("--thetas", "--ranks")


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _glue_negative_values(argv):
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _add_graph(p):
    p.add_argument("--family", help="family DSL, e.g. pk2:4, pk3:2, kpartite:3,3, comp(pk3:2)")
    p.add_argument("--edges", metavar="FILE", help="edge-list file: 'n m' then m lines 'u v'")


def _add_search(p):
    p.add_argument("--timeout", type=float, default=None, help="seconds before giving up")
    p.add_argument("--workers", type=int, default=1, help="worker processes (0 = all CPUs)")


def build_parser():
    parser = _Parser(prog="multithreshold", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="print a JSON document")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="check a rank assignment against a graph")
    _add_graph(p)
    p.add_argument("--thetas", required=True)
    p.add_argument("--ranks", required=True, help="inline list, or a file / @file")
    p.add_argument("--json", action="store_true", dest="json_sub")

    p = sub.add_parser("decide", help="decide membership for fixed thresholds or a given k")
    _add_graph(p)
    p.add_argument("--thetas")
    p.add_argument("--k", type=int)
    _add_search(p)
    p.add_argument("--json", action="store_true", dest="json_sub")

    p = sub.add_parser("tset", help="exact set of t > 1 with the graph (-1,1,t)-threshold")
    _add_graph(p)
    _add_search(p)
    p.add_argument("--json", action="store_true", dest="json_sub")

    p = sub.add_parser("theta", help="threshold number")
    _add_graph(p)
    p.add_argument("--kmax", type=int, default=None)
    _add_search(p)
    p.add_argument("--json", action="store_true", dest="json_sub")

    p = sub.add_parser("tdim", help="threshold dimension by brute force (n <= 7)")
    _add_graph(p)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--json", action="store_true", dest="json_sub")

    p = sub.add_parser("experiment", help="run a registered claim, or 'all'")
    p.add_argument("claim", help="claim id, or 'all' for the whole registry")
    p.add_argument("--json", action="store_true", dest="json_sub")
    return parser


def _emit(args, doc, text):
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        print(text)


def _graph(args):
    try:
        return load_graph(args.family, args.edges)
    except (ValueError, OSError) as exc:
        raise InputError(str(exc)) from None


def cmd_verify(args):
    g = _graph(args)
    try:
        th = parse_thetas(args.thetas)
        r = parse_ranks(args.ranks)
    except (ValueError, OSError, KeyError) as exc:
        raise InputError(str(exc)) from None
    if len(r) != g.n:
        raise InputError(f"{len(r)} ranks given for {g.n} vertices")
    ok, bad = verify(g, th, r, certificate=True)
    doc = {"valid": ok, "certificate": None}
    if bad is not None:
        doc["certificate"] = {
            "pair": list(bad.pair),
            "weight": str(bad.weight),
            "interval": bad.interval.to_json(),
            "is_edge": bad.in_graph,
        }
    _emit(args, doc, "valid" if ok else f"invalid: {bad}")
    return EXIT_OK if ok else EXIT_NEGATIVE


def _rep_json(rep):
    return None if rep is None else rep.to_json()


def cmd_decide(args):
    g = _graph(args)
    if (args.thetas is None) == (args.k is None):
        raise InputError("give exactly one of --thetas or --k")
    if args.thetas is not None:
        try:
            th = parse_thetas(args.thetas)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        rep, stats = solver.decide_fixed(g, th, timeout=args.timeout, workers=args.workers, with_stats=True)
        query = {"thetas": [str(t) for t in th]}
    else:
        if args.k < 1:
            raise InputError("--k must be positive")
        rep, stats = solver.decide_k(g, args.k, timeout=args.timeout, workers=args.workers, with_stats=True)
        query = {"k": args.k}
    outcome = "feasible" if rep is not None else "infeasible"
    doc = {"outcome": outcome, "query": query, "graph": graph_to_json(g),
           "witness": _rep_json(rep), "stats": stats.to_json()}
    text = outcome
    if rep is not None:
        text += f": thresholds {rep.thresholds}, ranks [{', '.join(map(str, rep.ranks))}]"
    _emit(args, doc, text)
    return EXIT_OK if rep is not None else EXIT_NEGATIVE


def cmd_tset(args):
    g = _graph(args)
    result, stats = solver.threshold_set(g, timeout=args.timeout, workers=args.workers, with_stats=True)
    doc = {"outcome": str(result), "intervals": result.to_json(), "stats": stats.to_json()}
    _emit(args, doc, str(result))
    return EXIT_OK if result else EXIT_NEGATIVE


def cmd_theta(args):
    g = _graph(args)
    if args.kmax is not None and args.kmax < 1:
        raise InputError("--kmax must be positive")
    res = solver.theta_number(g, args.kmax, timeout=args.timeout, workers=args.workers)
    doc = {
        "outcome": "exceeded" if res.exceeded else "found",
        "theta_number": res.theta_number,
        "k_max": res.k_max,
        "refuted": res.refuted,
        "witness": _rep_json(res.witness),
        "stats": res.stats.to_json(),
    }
    text = f"exceeds k_max={res.k_max}" if res.exceeded else str(res.theta_number)
    _emit(args, doc, text)
    return EXIT_NEGATIVE if res.exceeded else EXIT_OK


def cmd_tdim(args):
    g = _graph(args)
    try:
        value = theorems.tdim_bruteforce(g, args.limit)
    except theorems.GraphTooLargeError as exc:
        raise InputError(str(exc)) from None
    doc = {"outcome": "exceeds limit" if value is None else "found", "tdim": value, "limit": args.limit}
    _emit(args, doc, "exceeds limit" if value is None else str(value))
    return EXIT_NEGATIVE if value is None else EXIT_OK


def cmd_experiment(args):
    if args.claim != "all" and args.claim not in experiments.BY_ID:
        known = ", ".join(c.id for c in experiments.REGISTRY)
        raise InputError(f"unknown claim {args.claim!r}; known: {known}")
    failed = False
    for rep in experiments.run_claims(args.claim):
        failed |= not rep.passed
        if args.json:
            print(json.dumps(rep.to_json(), sort_keys=True), flush=True)
        else:
            status = "PASS" if rep.passed else "FAIL"
            print(f"{status} {rep.claim}: expected {rep.expected!r}, observed {rep.observed!r} "
                  f"({rep.runtime:.3f}s)", flush=True)
    return EXIT_NEGATIVE if failed else EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "decide": cmd_decide,
    "tset": cmd_tset,
    "theta": cmd_theta,
    "tdim": cmd_tdim,
    "experiment": cmd_experiment,
}


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_glue_negative_values(argv))
        args.json = args.json or getattr(args, "json_sub", False)
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (GraphParameterError, RepresentationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except solver.SearchTimeout as exc:
        doc = {"outcome": "timeout", "stats": exc.stats.to_json()}
        print(json.dumps(doc, sort_keys=True))
        return EXIT_TIMEOUT


if __name__ == "__main__":
    sys.exit(main())
