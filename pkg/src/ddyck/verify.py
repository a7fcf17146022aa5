"""Executable cross-checks: every closed form against an independent oracle.

Each suite returns a list of :class:`Check` records; :func:`run` bundles
them into a :class:`VerificationReport`.
"""

from __future__ import annotations

import datetime
import os
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Callable

from . import genfunc as gf
from .dyck import DyckPath, catalan, count_d_dyck, enumerate_d_dyck, enumerate_dyck, is_d_dyck
from .errors import DDyckError
from .genfunc import ONE, X, RationalGF, rational_equal, series_coeffs
from .partitions import (
    SetPartition,
    bell_d,
    d_dyck_to_ncd,
    enumerate_set_partitions,
    graph_representation,
    is_ncd_member,
    is_non_crossing,
    is_pid_member,
    ncd_to_d_dyck,
    phi,
    phi_inverse,
)
from .polyomino import (
    Dccp,
    area,
    enumerate_d_polyominoes,
    enumerate_dccp,
    ipl,
    ipl_bfs_oracle,
    is_d_restricted,
    path_to_polyomino,
    polyomino_to_path,
    tipl,
)

__all__ = [
    "Check",
    "VerificationReport",
    "SUITES",
    "BELL_TABLE",
    "T2_SERIES",
    "TIPL_D0_FORM",
    "run",
    "effective_max_n",
]

TIPL_MAX_N = 8
PHI_MAX_N = 9
TABLE_MAX_D = 4
TABLE_MAX_N = 10

# restricted d-Bell numbers, rows d = 0..4, columns n = 0..10
BELL_TABLE = {
    0: (1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975),
    1: (1, 1, 2, 4, 9, 23, 65, 199, 654, 2296, 8569),
    2: (1, 1, 2, 4, 8, 17, 40, 104, 291, 857, 2634),
    3: (1, 1, 2, 4, 8, 16, 33, 73, 177, 467, 1309),
    4: (1, 1, 2, 4, 8, 16, 32, 65, 138, 315, 782),
}

# reference expansion of the d = 2 path-length series, x^0 .. x^9
T2_SERIES = (0, 1, 6, 23, 65, 165, 401, 932, 2081, 4516)

# x (3x^4 - 9x^3 + 8x^2 - 4x + 1) / ((1 - x)(x^2 - 3x + 1)^3)
TIPL_D0_FORM = RationalGF(
    X * (3 * X**4 - 9 * X**3 + 8 * X**2 - 4 * X + 1),
    (1 - X) * (X**2 - 3 * X + 1) ** 3,
)


@dataclass
class Check:
    suite: str
    theorem: str
    source: str  # formula | series | table | oracle
    expected: str
    observed: str
    passed: bool
    d: int | None = None
    n: int | None = None
    note: str = ""


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    params: dict = field(default_factory=dict)
    timestamp: str | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        out = {"suite": self.suite, "params": self.params, "pass": self.passed}
        if self.timestamp is not None:
            out["timestamp"] = self.timestamp
        out["summary"] = {
            name: {
                "checks": sum(1 for c in self.checks if c.suite == name),
                "failed": sum(1 for c in self.checks if c.suite == name and not c.passed),
            }
            for name in sorted({c.suite for c in self.checks})
        }
        out["checks"] = [_check_dict(c) for c in self.checks]
        return out


def _check_dict(c: Check) -> dict:
    d = asdict(c)
    d["pass"] = d.pop("passed")
    if not d["note"]:
        del d["note"]
    return d


def _mk(suite, theorem, source, expected, observed, d=None, n=None, passed=None, note=""):
    if passed is None:
        passed = expected == observed
    return Check(suite, theorem, source, str(expected), str(observed), bool(passed), d, n, note)


# cached oracle substrates -------------------------------------------------


@lru_cache(maxsize=None)
def _dyck(n: int) -> tuple[DyckPath, ...]:
    return tuple(enumerate_dyck(n))


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[tuple[SetPartition, bool], ...]:
    return tuple((p, is_non_crossing(p)) for p in enumerate_set_partitions(n))


@lru_cache(maxsize=None)
def _dccp(n: int) -> tuple[Dccp, ...]:
    return tuple(enumerate_dccp(n))


def _crosses_by_arcs(p: SetPartition) -> bool:
    arcs = graph_representation(p)
    return any(a < c < b < e for a, b in arcs for c, e in arcs)


def _star_count(n: int, d: int) -> int:
    """|{dccp of area n with every initial-altitude gap >= d}|, the empty one counted at n=0."""
    if n == 0:
        return 1
    return sum(1 for q in _dccp(n) if all(y - x >= d for x, y in zip(q.a, q.a[1:])))


# suites -------------------------------------------------------------------


def suite_eq1(max_n: int, max_d: int) -> list[Check]:
    out = []
    for d in range(1, max_d + 1):
        for n in range(max_n + 1):
            filtered = [p for p in _dyck(n) if is_d_dyck(p, d)]
            direct = list(enumerate_d_dyck(n, d))
            out.append(_mk("eq1", "count_d_dyck", "oracle", len(filtered), count_d_dyck(n, d), d, n))
            out.append(
                _mk("eq1", "enumerate_d_dyck", "oracle", len(filtered), len(direct), d, n,
                    passed=[p.word for p in direct] == [p.word for p in filtered])
            )
    return out


def suite_prop1(max_n: int, max_d: int) -> list[Check]:
    out = []
    for d in range(max_d + 1):
        for n in range(1, max_n + 1):
            paths = list(enumerate_d_dyck(n, d))
            ok = True
            for p in paths:
                q = path_to_polyomino(p)
                if area(q) != n or not is_d_restricted(q, d) or polyomino_to_path(q) != p:
                    ok = False
                    break
            out.append(_mk("prop1", "path<->polyomino roundtrip", "oracle", True, ok, d, n))
            brute = [q for q in _dccp(n) if is_d_restricted(q, d)]
            back_ok = all(path_to_polyomino(polyomino_to_path(q)) == q for q in brute)
            out.append(
                _mk("prop1", "polyomino count", "oracle", len(brute), len(paths), d, n,
                    passed=len(brute) == len(paths) and back_ok)
            )
            if d >= 1:
                out.append(_mk("prop1", "polyomino count = closed form", "formula", count_d_dyck(n, d), len(brute), d, n))
    return out


def suite_thm2(max_n: int, max_d: int) -> list[Check]:
    out = []
    for d in range(max_d + 1):
        series = series_coeffs(gf.v_gf(d), max_n)
        for n in range(max_n + 1):
            brute = sum(1 for p in _dyck(n) if is_d_dyck(p, d))
            out.append(_mk("thm2", "v_gf series", "oracle", brute, series[n], d, n))
        star = series_coeffs(gf.vstar_gf(d), max_n)
        for n in range(max_n + 1):
            out.append(
                _mk("thm2", "vstar_gf series = |P*_d(n+1)|", "oracle", _star_count(n + 1, d), star[n], d, n)
            )
        v, vs = gf.v_gf(d), gf.vstar_gf(d)
        col = RationalGF(ONE, 1 - X)
        labeled = RationalGF(X, (1 - X) ** 2)
        rhs_v = col + labeled * vs
        out.append(
            _mk("thm2", "V_d = 1/(1-x) + x/(1-x)^2 V*_d", "formula", v, rhs_v, d,
                passed=rational_equal(v, rhs_v))
        )
        # the identity that does hold: the glued polyomino is nonempty, x * V*_d
        rhs_fixed = col + RationalGF(X**2, (1 - X) ** 2) * vs
        out.append(
            _mk("thm2", "V_d = 1/(1-x) + x^2/(1-x)^2 V*_d", "formula", v, rhs_fixed, d,
                passed=rational_equal(v, rhs_fixed))
        )
        rhs_star = col + RationalGF(X ** (d + 1), (1 - X) ** 2) * vs
        out.append(
            _mk("thm2", "V*_d = 1/(1-x) + x^(d+1)/(1-x)^2 V*_d", "formula", vs, rhs_star, d,
                passed=rational_equal(vs, rhs_star))
        )
    return out


def suite_thm3(max_n: int, max_d: int) -> list[Check]:
    out = []
    t2 = series_coeffs(gf.t_gf(2), len(T2_SERIES) - 1)
    for n, (want, got) in enumerate(zip(T2_SERIES, t2)):
        out.append(_mk("thm3", "t_gf(2) reference expansion", "series", want, got, 2, n))
    top = min(max_n, TIPL_MAX_N)
    for d in range(max_d + 1):
        series = series_coeffs(gf.t_gf(d), top)
        for n in range(top + 1):
            brute = sum(tipl(q) for q in enumerate_d_polyominoes(n, d))
            out.append(_mk("thm3", "t_gf series vs brute-force TIPL", "oracle", brute, series[n], d, n))
    return out


def suite_cor4(max_n: int, max_d: int) -> list[Check]:
    t0 = gf.t_gf(0)
    return [_mk("cor4", "t_gf(0) = d=0 reduced form", "formula", TIPL_D0_FORM, t0, 0,
                passed=rational_equal(t0, TIPL_D0_FORM))]


def suite_ipl(max_n: int, max_d: int) -> list[Check]:
    out = []
    top = min(max_n, TIPL_MAX_N)
    for d in range(max_d + 1):
        for n in range(1, top + 1):
            bad = 0
            cells = 0
            for q in enumerate_d_polyominoes(n, d):
                for c in q.cells():
                    cells += 1
                    if ipl(q, c) != ipl_bfs_oracle(q, c):
                        bad += 1
            out.append(_mk("ipl", "ipl = bfs oracle", "oracle", 0, bad, d, n, note=f"{cells} cells"))
    for n in range(1, 51):
        out.append(_mk("ipl", "single column TIPL", "formula", n * (n + 1) // 2, tipl(Dccp((0,), (n,))), None, n))
    return out


def suite_thm5(max_n: int, max_d: int) -> list[Check]:
    out = []
    for d in range(1, max_d + 1):
        for n in range(max_n + 1):
            brute = {p for p, nc in _partitions(n) if nc and is_ncd_member(p, d)}
            paths = [p for p in _dyck(n) if is_d_dyck(p, d)]
            image = [d_dyck_to_ncd(p, d) for p in paths] if n else [SetPartition(0, ())]
            injective = len(set(image)) == len(image)
            out.append(
                _mk("thm5", "d_dyck_to_ncd onto NC_d(n)", "oracle", len(brute), len(set(image)), d, n,
                    passed=injective and set(image) == brute)
            )
            out.append(_mk("thm5", "|NC_d(n)| = closed form", "formula", count_d_dyck(n, d), len(brute), d, n))
            if n:
                inverse_ok = all(ncd_to_d_dyck(q, d) == p for p, q in zip(paths, image))
                blocks_ok = all(len(q) == len(p.valleys) + 1 for p, q in zip(paths, image))
                out.append(_mk("thm5", "ncd_to_d_dyck inverse", "oracle", True, inverse_ok, d, n))
                out.append(_mk("thm5", "blocks = valleys + 1", "oracle", True, blocks_ok, d, n))
    return out


def suite_phi(max_n: int, max_d: int) -> list[Check]:
    out = []
    ex = phi(DyckPath("UUUUDDUUUUUDUDDDDDDD"))
    want = SetPartition.from_blocks([[1, 2, 5, 6, 7, 8, 10], [3, 4], [9]])
    out.append(_mk("phi", "worked example", "table", want.to_json(), ex.to_json()))
    for n in range(1, min(max_n, PHI_MAX_N) + 1):
        paths = _dyck(n)
        image = [phi(p) for p in paths]
        nc = {p for p, _ in _partitions(n) if not _crosses_by_arcs(p)}
        out.append(
            _mk("phi", "phi onto NC(n)", "oracle", catalan(n), len(set(image)), None, n,
                passed=len(set(image)) == len(image) == catalan(n) and set(image) == nc)
        )
        both = all(phi_inverse(q) == p for p, q in zip(paths, image)) and all(phi(phi_inverse(q)) == q for q in nc)
        out.append(_mk("phi", "phi_inverse two-sided", "oracle", True, both, None, n))
    return out


def suite_thm6(max_n: int, max_d: int) -> list[Check]:
    out = []
    for d in range(min(max_d, TABLE_MAX_D) + 1):
        for n in range(min(max_n, TABLE_MAX_N) + 1):
            out.append(_mk("thm6", "bell table", "table", BELL_TABLE[d][n], bell_d(n, d), d, n))
    for d in range(max_d + 1):
        for n in range(max_n + 1):
            brute = sum(1 for p, _ in _partitions(n) if is_pid_member(p, d))
            out.append(_mk("thm6", "bell_d vs brute-force Pi_d(n)", "oracle", brute, bell_d(n, d), d, n))
    for n in range(1, max(max_n, 12) + 1):
        for d in (n, n + 1, 2 * n + 5):
            out.append(_mk("thm6", "bell_d = 2^(n-1) for d >= n", "formula", 2 ** (n - 1), bell_d(n, d), d, n))
    return out


SUITES: dict[str, Callable[[int, int], list[Check]]] = {
    "eq1": suite_eq1,
    "prop1": suite_prop1,
    "thm2": suite_thm2,
    "thm3": suite_thm3,
    "cor4": suite_cor4,
    "ipl": suite_ipl,
    "thm5": suite_thm5,
    "phi": suite_phi,
    "thm6": suite_thm6,
}


def effective_max_n(max_n: int) -> int:
    """Apply the ``DDYCK_MAX_N`` ceiling (it can only lower the bound)."""
    env = os.environ.get("DDYCK_MAX_N")
    if env:
        max_n = min(max_n, int(env))
    return max_n


def run(suite: str = "all", max_n: int = 10, max_d: int = 3, timestamp: bool = True) -> VerificationReport:
    max_n = effective_max_n(max_n)
    names = sorted(SUITES) if suite == "all" else [suite]
    if any(s not in SUITES for s in names):
        raise KeyError(f"unknown suite {suite!r}")
    checks: list[Check] = []
    for name in names:
        try:
            checks.extend(SUITES[name](max_n, max_d))
        except DDyckError as exc:
            # e.g. a corrupted numerator whose series is no longer integral
            checks.append(_mk(name, "suite raised", "oracle", "no error", f"{type(exc).__name__}: {exc}", passed=False))
    checks.sort(key=lambda c: (c.suite, -1 if c.d is None else c.d, -1 if c.n is None else c.n))
    report = VerificationReport(suite, checks, {"max_n": max_n, "max_d": max_d})
    if timestamp:
        report.timestamp = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
    return report
