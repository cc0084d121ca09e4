"""Command line interface.

Every subcommand reads one instance JSON (a path, or ``-`` for stdin) and
streams solutions, one per line, as space separated sorted ids.

Exit codes: 0 success, 1 verify mismatch, 2 malformed input,
3 violated precondition (e.g. the input is not a pair of matroids).
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from collections.abc import Iterable, Iterator

from . import applications as apps
from .exchange import build_exchange_digraph
from .intersection import InvariantViolation, enumerate_large, enumerate_maximum
from .matching import TractablePair, enumerate_large_matchings, pair_from_dict
from .matroids import ContractError, InputError, Matroid, matroid_from_dict
from .ranked import ranked_common_independent, ranked_matchings
from .reference import (
    brute_common_independent,
    brute_matchings,
    brute_min_cvc,
    compare,
    instance_digest,
)
from .stats import EnumerationStats, instrument

APPS = ("b-matching", "colorful-forest", "dcs", "cvc")


def load_instance(path: str) -> dict:
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path) as fh:
                data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read instance {path!r}: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("instance must be a JSON object")
    return data


def instance_kind(data: dict) -> str:
    if "kind" in data:
        return data["kind"]
    if "m1" in data and "m2" in data and data.get("solver") != "intersection":
        return "intersection"
    if "matroid" in data or data.get("solver") == "intersection":
        return "pair"
    if "arcs" in data:
        return "dcs"
    if "colors" in data:
        return "colorful-forest"
    if "left" in data:
        return "b-matching"
    if "edges" in data and "vertices" in data:
        return "cvc"
    raise InputError("cannot tell what kind of instance this is")


def _field(data: dict, key: str):
    try:
        return data[key]
    except KeyError:
        raise InputError(f"instance is missing {key!r}") from None


def matroid_pair(data: dict) -> tuple[Matroid, Matroid]:
    """The two matroids behind an intersection or application instance."""
    kind = instance_kind(data)
    if kind == "intersection":
        m1, m2 = matroid_from_dict(_field(data, "m1")), matroid_from_dict(_field(data, "m2"))
        if m1.ground != m2.ground:
            raise InputError("m1 and m2 must have the same ground set size")
        return m1, m2
    try:
        if kind == "b-matching":
            return apps.encode_b_matching(
                apps.BipartiteInstance(data["vertices"], data["left"], data["edges"], data["b"])
            )
        if kind == "colorful-forest":
            return apps.encode_colorful_forest(
                apps.ColoredGraph(data["vertices"], [tuple(e) for e in data["edges"]], data["colors"])
            )
        if kind == "dcs":
            return apps.encode_degree_constrained(
                apps.DegreeConstrainedInstance(data["vertices"], data["arcs"], data["out_cap"], data["in_cap"])
            )
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad {kind} instance: {exc!r}") from exc
    raise InputError(f"a {kind!r} instance is not a pair of matroids")


def cvc_graph(data: dict) -> tuple[int, list[tuple[int, int]]]:
    try:
        return int(data["vertices"]), [(int(u), int(v)) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad cvc instance: {exc!r}") from exc


# -- running ----------------------------------------------------------------------


def _solutions(data: dict, mode: str, tau: int | None, ranked: bool, k_min: int) -> tuple[Iterator, list[Matroid]]:
    """Solutions stream plus the oracles to meter, for a parsed instance."""
    kind = instance_kind(data)
    if kind == "pair":
        p = pair_from_dict(data)
        if mode == "max":
            tau = len(p.maximum())
        if ranked:
            return ranked_matchings(p, k_min if tau is None else max(k_min, tau)), [p.matroid]
        return enumerate_large_matchings(p, tau or 0), [p.matroid]
    if kind == "cvc":
        n, edges = cvc_graph(data)
        ceiling = n if tau is None else tau
        inst = apps.build_cvc_instance(n, edges) if n >= 3 else None
        stream = apps.enumerate_min_cvc(n, edges, ceiling, ranked=ranked, instance=inst)
        return stream, [inst.pair.matroid] if inst else []
    m1, m2 = matroid_pair(data)
    if mode == "max":
        return enumerate_maximum(m1, m2), [m1, m2]
    if ranked:
        return ranked_common_independent(m1, m2, k_min if tau is None else max(k_min, tau)), [m1, m2]
    return enumerate_large(m1, m2, tau or 0), [m1, m2]


def _emit(solutions: Iterable, as_json: bool, out) -> int:
    count = 0
    for sol in solutions:
        ids = sorted(sol)
        out.write((json.dumps(ids) if as_json else " ".join(map(str, ids))) + "\n")
        out.flush()
        count += 1
    return count


def _run_enumeration(args, mode: str, data: dict | None = None) -> int:
    data = load_instance(args.instance) if data is None else data
    if getattr(args, "dump_digraph", None) is not None:
        m1, m2 = matroid_pair(data)
        ids = [int(x) for x in args.dump_digraph.split(",") if x.strip()]
        sys.stdout.write(build_exchange_digraph(m1, m2, ids).to_dot())
        return 0
    tau = getattr(args, "tau", None)
    if tau is not None and tau < 0:
        raise ContractError("--tau must be non-negative")
    stream, oracles = _solutions(data, mode, tau, getattr(args, "ranked", False), getattr(args, "k_min", 0))
    if getattr(args, "first", None) is not None:
        stream = itertools.islice(stream, args.first)
    stats = EnumerationStats()
    stream = instrument(stream, oracles, stats)
    _emit(stream, args.json, sys.stdout)
    if args.stats:
        sys.stderr.write(json.dumps(stats.to_dict(), sort_keys=True) + "\n")
    return 0


def cmd_max_enum(args) -> int:
    return _run_enumeration(args, "max")


def cmd_large_enum(args) -> int:
    return _run_enumeration(args, "large")


def cmd_match_enum(args) -> int:
    data = load_instance(args.instance)
    if instance_kind(data) != "pair":
        raise InputError("match-enum needs a matroid-graph pair instance")
    return _run_enumeration(args, "large", data)


def cmd_ranked(args) -> int:
    args.ranked = True
    args.tau = None
    return _run_enumeration(args, "large")


def cmd_app(args) -> int:
    data = load_instance(args.instance)
    data.setdefault("kind", args.problem)
    if instance_kind(data) != args.problem:
        raise InputError(f"instance is a {instance_kind(data)!r}, not a {args.problem!r} instance")
    return _run_enumeration(args, "large", data)


def _expected(data: dict, tau: int | None) -> list[tuple[int, ...]]:
    kind = instance_kind(data)
    if kind == "pair":
        return brute_matchings(pair_from_dict(data), "maximal", tau or 0)
    if kind == "cvc":
        n, edges = cvc_graph(data)
        return brute_min_cvc(n, edges, n if tau is None else tau)
    m1, m2 = matroid_pair(data)
    return brute_common_independent(m1, m2, "maximal", tau or 0)


def cmd_verify(args) -> int:
    data = load_instance(args.instance)
    stream, _ = _solutions(data, "large", args.tau, False, 0)
    report = compare(_expected(data, args.tau), stream, instance_digest(data))
    print(f"instance {report.digest} ({instance_kind(data)})")
    print("counts by size: " + json.dumps({str(k): v for k, v in report.counts.items()}))
    for s in report.missing:
        print("- " + " ".join(map(str, s)))
    for s in report.unexpected:
        print("+ " + " ".join(map(str, s)))
    for s in report.duplicates:
        print("2x " + " ".join(map(str, s)))
    print(report.verdict)
    return 0 if report.verdict == "MATCH" else 1


def cmd_stats(args) -> int:
    data = load_instance(args.instance)
    stream, oracles = _solutions(data, "large", args.tau, False, 0)
    stats = EnumerationStats()
    for _ in instrument(stream, oracles, stats):
        pass
    print(json.dumps(stats.to_dict(timing=args.timing), sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matroidenum",
        description="Enumerate maximal common independent sets and matroid matchings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, tau_help=None, ranked=False):
        p.add_argument("instance", help="instance JSON file, or - for stdin")
        p.add_argument("--json", action="store_true", help="print each solution as a JSON list")
        p.add_argument("--stats", action="store_true", help="write delay statistics as JSON to stderr")
        if tau_help:
            p.add_argument("--tau", type=int, default=None, help=tau_help)
        if ranked:
            p.add_argument("--ranked", action="store_true", help="emit in non-increasing cardinality order")
            p.add_argument("--first", type=int, default=None, help="stop after this many solutions")

    p = sub.add_parser("max-enum", help="all maximum common independent sets")
    common(p)
    p.add_argument("--dump-digraph", metavar="IDS", help="print the exchange digraph of IDS (comma separated) as DOT and exit")
    p.set_defaults(func=cmd_max_enum)

    p = sub.add_parser("large-enum", help="maximal common independent sets of size >= tau")
    common(p, "cardinality floor (default 0)", ranked=True)
    p.add_argument("--dump-digraph", metavar="IDS", help="print the exchange digraph of IDS (comma separated) as DOT and exit")
    p.set_defaults(func=cmd_large_enum)

    p = sub.add_parser("ranked", help="all maximal solutions, largest first")
    common(p)
    p.add_argument("--first", type=int, default=None, help="stop after this many solutions")
    p.add_argument("--k-min", type=int, default=0, help="skip solutions smaller than this")
    p.set_defaults(func=cmd_ranked)

    p = sub.add_parser("match-enum", help="maximal matroid matchings of size >= tau")
    common(p, "cardinality floor (default 0)", ranked=True)
    p.set_defaults(func=cmd_match_enum, k_min=0)

    p = sub.add_parser("app", help="application problems")
    p.add_argument("problem", choices=APPS)
    common(
        p,
        "cardinality floor; for cvc a ceiling on the cover size (default |V|), "
        "enumerated as matchings with at least |V| - tau edges",
        ranked=True,
    )
    p.set_defaults(func=cmd_app, k_min=0)

    p = sub.add_parser("verify", help="compare an enumeration against brute force")
    p.add_argument("instance")
    p.add_argument("--tau", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="run an enumeration and print delay statistics")
    p.add_argument("instance")
    p.add_argument("--tau", type=int, default=None)
    p.add_argument("--timing", action="store_true", help="include wall-clock fields (not reproducible)")
    p.set_defaults(func=cmd_stats)
    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ContractError, InvariantViolation) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 3


def main():
    try:
        code = run_cli()
        sys.stdout.flush()
    except BrokenPipeError:
        # reader went away (e.g. `| head`); silence the flush at interpreter exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = 0
    sys.exit(code)
