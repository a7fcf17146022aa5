"""Command-line interface: ``ddyck {count,series,biject,verify}``.

Exit codes: 0 ok, 1 verification failure, 2 usage/parse error,
3 disagreement between computation routes, 4 membership violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import genfunc, verify
from .dyck import DyckPath, count_d_dyck, enumerate_d_dyck, enumerate_dyck, is_d_dyck
from .errors import DDyckError
from .partitions import (
    SetPartition,
    bell_d,
    d_dyck_to_ncd,
    enumerate_set_partitions,
    is_ncd_member,
    is_pid_member,
    ncd_to_d_dyck,
    phi,
    phi_inverse,
)
from .polyomino import Dccp, enumerate_dccp, is_d_restricted, path_to_polyomino, polyomino_to_path

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DISAGREE, EXIT_MEMBERSHIP = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class MembershipError(Exception):
    pass


# count ---------------------------------------------------------------------


def _gf_count(n: int, d: int) -> int:
    return genfunc.series_coeffs(genfunc.v_gf(d), n)[n]


def _count_routes(obj: str, n: int, d: int) -> dict[str, Callable[[], int]]:
    routes: dict[str, Callable[[], int]] = {}
    if obj == "paths":
        if d >= 1:
            routes["formula"] = lambda: count_d_dyck(n, d)
        if d >= 0:
            routes["gf"] = lambda: _gf_count(n, d)
        routes["brute"] = lambda: sum(1 for p in enumerate_dyck(n) if is_d_dyck(p, d))
    elif obj == "polyominoes":
        if d < 0:
            raise UsageError("polyominoes need --d >= 0")
        if d >= 1:
            routes["formula"] = lambda: count_d_dyck(n, d)
        routes["gf"] = lambda: _gf_count(n, d)
        # area 0: the empty polyomino, as in the generating function
        routes["brute"] = lambda: 1 if n == 0 else sum(1 for q in enumerate_dccp(n) if is_d_restricted(q, d))
    elif obj == "ncd":
        if d < 1:
            raise UsageError("ncd needs --d >= 1")
        routes["formula"] = lambda: count_d_dyck(n, d)
        routes["gf"] = lambda: _gf_count(n, d)
        routes["brute"] = lambda: sum(1 for p in enumerate_set_partitions(n) if is_ncd_member(p, d))
    elif obj == "bell":
        if d < 0:
            raise UsageError("bell needs --d >= 0")
        routes["formula"] = lambda: bell_d(n, d)
        routes["brute"] = lambda: sum(1 for p in enumerate_set_partitions(n) if is_pid_member(p, d))
    return routes


def cmd_count(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    routes = _count_routes(args.object, args.n, args.d)
    if args.method == "all":
        chosen = list(routes)
    elif args.method is None:
        chosen = [next(iter(routes))]
    elif args.method in routes:
        chosen = [args.method]
    else:
        raise UsageError(f"method {args.method!r} not available for {args.object} with d={args.d}")
    values = {m: routes[m]() for m in chosen}
    if len(set(values.values())) > 1:
        print(f"routes disagree: {values}", file=sys.stderr)
        return EXIT_DISAGREE
    print(next(iter(values.values())))
    return EXIT_OK


# series --------------------------------------------------------------------

_KINDS = {"v": genfunc.v_gf, "vstar": genfunc.vstar_gf, "t": genfunc.t_gf}


def cmd_series(args: argparse.Namespace) -> int:
    if args.terms < 1:
        raise UsageError("--terms must be >= 1")
    if args.d < 0:
        raise UsageError("--d must be >= 0")
    coeffs = genfunc.series_coeffs(_KINDS[args.kind](args.d), args.terms - 1)
    print(json.dumps([str(c) for c in coeffs]))
    return EXIT_OK


# biject --------------------------------------------------------------------


def _parse_object(text: str):
    text = text.strip()
    try:
        if text.startswith("["):
            return "partition", SetPartition.from_json(text)
        if text.startswith("{"):
            return "polyomino", Dccp.from_json(text)
        return "path", DyckPath(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot parse input: {exc}") from exc
    except DDyckError as exc:
        raise UsageError(f"invalid input: {exc}") from exc


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise MembershipError(message)


def _path_to(p: DyckPath, target: str, d: int | None):
    if target == "partition":
        if d is None:
            return phi(p)
        _require(d >= 1, "--d must be >= 1 for the NC_d bijection")
        _require(is_d_dyck(p, d), f"path is not {d}-Dyck: valley vector {list(p.valleys)}")
        return d_dyck_to_ncd(p, d)
    if target == "polyomino":
        _require(p.semilength > 0, "the empty path has no polyomino")
        _require(is_d_dyck(p, 0), f"valley vector {list(p.valleys)} is not non-decreasing")
        if d is not None:
            _require(is_d_dyck(p, d), f"path is not {d}-Dyck: valley vector {list(p.valleys)}")
        return path_to_polyomino(p)
    return p


def _to_path(kind: str, obj, d: int | None) -> DyckPath:
    if kind == "path":
        return obj
    if kind == "polyomino":
        if d is not None:
            _require(is_d_restricted(obj, d), f"polyomino is not {d}-restricted: a={list(obj.a)}")
        return polyomino_to_path(obj)
    if d is None:
        try:
            return phi_inverse(obj)
        except DDyckError as exc:
            raise MembershipError(str(exc)) from exc
    _require(d >= 1, "--d must be >= 1 for the NC_d bijection")
    _require(is_ncd_member(obj, d), f"partition is not in NC_{d}({obj.n})")
    return ncd_to_d_dyck(obj, d)


def _serialize(obj) -> str:
    if isinstance(obj, DyckPath):
        return obj.word
    return obj.to_json()


def cmd_biject(args: argparse.Namespace) -> int:
    kind, obj = _parse_object(args.input)
    if kind == args.to:
        raise UsageError(f"input is already a {kind}")
    path = _to_path(kind, obj, args.d)
    print(_serialize(_path_to(path, args.to, args.d)))
    return EXIT_OK


# verify --------------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n < 0 or args.max_d < 0:
        raise UsageError("bounds must be >= 0")
    report = verify.run(args.suite, args.max_n, args.max_d, timestamp=not args.no_timestamp)
    print(json.dumps(report.to_dict(), indent=2))
    for c in report.failures():
        print(f"FAIL {c.suite} {c.theorem} d={c.d} n={c.n}: expected {c.expected}, got {c.observed}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ddyck", description="Restricted d-Dyck path combinatorics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count paths, polyominoes, NC_d partitions or restricted d-Bell numbers")
    p.add_argument("--object", choices=["paths", "polyominoes", "ncd", "bell"], required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["formula", "gf", "brute", "all"], default=None)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("series", help="coefficients of a generating function, as a JSON array")
    p.add_argument("--kind", choices=sorted(_KINDS), required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--terms", type=int, required=True)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("biject", help="map a path word, partition JSON or polyomino JSON")
    p.add_argument("input")
    p.add_argument("--to", choices=["partition", "polyomino", "path"], required=True)
    p.add_argument("--d", type=int, default=None)
    p.set_defaults(func=cmd_biject)

    p = sub.add_parser("verify", help="run the closed-form-vs-oracle cross-checks")
    p.add_argument("--suite", choices=sorted(verify.SUITES) + ["all"], default="all")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--max-d", type=int, default=3)
    p.add_argument("--no-timestamp", action="store_true")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MembershipError as exc:
        print(f"membership: {exc}", file=sys.stderr)
        return EXIT_MEMBERSHIP


if __name__ == "__main__":
    sys.exit(main())
