"""Directed column-convex polyominoes (dccp) and internal path lengths.

A dccp with ``k`` columns is stored as the pair of vectors ``a`` (initial
altitudes, bottom row of each column) and ``b`` (final altitudes, one past
the top row).  Column ``i`` occupies rows ``a[i] <= y < b[i]``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .dyck import DyckPath, enumerate_d_dyck
from .errors import CellNotInPolyomino, InvalidPolyomino, NotNonDecreasing

__all__ = [
    "Dccp",
    "CellCoord",
    "area",
    "is_d_restricted",
    "path_to_polyomino",
    "polyomino_to_path",
    "enumerate_d_polyominoes",
    "enumerate_dccp",
    "ipl",
    "ipl_bfs_oracle",
    "tipl",
    "total_tipl",
]


class CellCoord(NamedTuple):
    column: int
    altitude: int


@dataclass(frozen=True)
class Dccp:
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        a, b = tuple(self.a), tuple(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not a or len(a) != len(b):
            raise InvalidPolyomino("need k >= 1 columns and len(a) == len(b)")
        if a[0] != 0:
            raise InvalidPolyomino("first initial altitude must be 0")
        for i in range(len(a)):
            if b[i] <= a[i]:
                raise InvalidPolyomino(f"column {i} is empty (b <= a)")
        for i in range(len(a) - 1):
            if a[i + 1] < a[i]:
                raise InvalidPolyomino(f"initial altitudes decrease at column {i + 1}")
            if a[i + 1] >= b[i]:
                raise InvalidPolyomino(f"columns {i} and {i + 1} share no edge")

    @property
    def columns(self) -> int:
        return len(self.a)

    def cells(self) -> Iterator[CellCoord]:
        for col, (lo, hi) in enumerate(zip(self.a, self.b)):
            for y in range(lo, hi):
                yield CellCoord(col, y)

    def __contains__(self, c: object) -> bool:
        if not isinstance(c, tuple) or len(c) != 2:
            return False
        col, y = c
        return 0 <= col < len(self.a) and self.a[col] <= y < self.b[col]

    def to_json(self) -> str:
        return json.dumps({"a": list(self.a), "b": list(self.b)}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "Dccp":
        obj = json.loads(text)
        if not isinstance(obj, dict) or set(obj) != {"a", "b"}:
            raise InvalidPolyomino('expected an object with keys "a" and "b"')
        a, b = obj["a"], obj["b"]
        if not (isinstance(a, list) and isinstance(b, list)):
            raise InvalidPolyomino('"a" and "b" must be arrays')
        if not all(type(v) is int for v in a + b):
            raise InvalidPolyomino("altitudes must be integers")
        return cls(tuple(a), tuple(b))


def area(p: Dccp) -> int:
    return sum(hi - lo for lo, hi in zip(p.a, p.b))


def is_d_restricted(p: Dccp, d: int) -> bool:
    # the gap a[1] - a[0] is never constrained
    a = p.a
    return all(a[i + 1] - a[i] >= d for i in range(1, len(a) - 1))


def path_to_polyomino(p: DyckPath) -> Dccp:
    """Valleys become initial altitudes (after the leading 0), peaks final ones."""
    if p.semilength == 0:
        raise ValueError("the empty path has no polyomino")
    v = p.valleys
    if any(y < x for x, y in zip(v, v[1:])):
        raise NotNonDecreasing(f"valley vector {v} is not non-decreasing")
    return Dccp((0,) + v, p.peaks)


def polyomino_to_path(q: Dccp) -> DyckPath:
    parts = []
    floor = 0
    for i, top in enumerate(q.b):
        nxt = q.a[i + 1] if i + 1 < len(q.a) else 0
        parts.append("U" * (top - floor) + "D" * (top - nxt))
        floor = nxt
    return DyckPath("".join(parts))


def enumerate_d_polyominoes(n: int, d: int) -> Iterator[Dccp]:
    """All d-restricted dccp of area ``n`` (``d >= 0``), via d-Dyck paths."""
    if d < 0:
        raise ValueError("d must be >= 0")
    if n == 0:
        return
    for p in enumerate_d_dyck(n, d):
        yield path_to_polyomino(p)


def enumerate_dccp(n: int) -> Iterator[Dccp]:
    """All dccp of area ``n``, built column by column (no Dyck paths involved)."""
    a: list[int] = []
    b: list[int] = []

    def rec(rem: int) -> Iterator[Dccp]:
        if rem == 0:
            yield Dccp(tuple(a), tuple(b))
            return
        lows = range(a[-1], b[-1]) if a else (0,)
        for lo in lows:
            for h in range(1, rem + 1):
                a.append(lo)
                b.append(lo + h)
                yield from rec(rem - h)
                a.pop()
                b.pop()

    if n > 0:
        yield from rec(n)


def _check_cell(q: Dccp, c: tuple[int, int]) -> CellCoord:
    if c not in q:
        raise CellNotInPolyomino(f"{tuple(c)} is not a cell of {q}")
    return CellCoord(*c)


def ipl(q: Dccp, c: tuple[int, int]) -> int:
    """Internal path length, counting the origin cell as 1.

    Directedness gives a monotone north/east cell path from the origin, so
    the minimum is the Manhattan offset.
    """
    c = _check_cell(q, c)
    return c.column + c.altitude + 1


def ipl_bfs_oracle(q: Dccp, c: tuple[int, int]) -> int:
    """Breadth-first search over north/east moves inside ``q``."""
    target = _check_cell(q, c)
    cells = set(q.cells())
    dist = {CellCoord(0, 0): 1}
    queue = deque([CellCoord(0, 0)])
    while queue:
        cur = queue.popleft()
        if cur == target:
            return dist[cur]
        for nxt in (CellCoord(cur.column, cur.altitude + 1), CellCoord(cur.column + 1, cur.altitude)):
            if nxt in cells and nxt not in dist:
                dist[nxt] = dist[cur] + 1
                queue.append(nxt)
    raise CellNotInPolyomino(f"{tuple(c)} unreachable from the origin")


def tipl(q: Dccp) -> int:
    """Total internal path length: sum of :func:`ipl` over all cells."""
    return sum(ipl(q, c) for c in q.cells())


def total_tipl(n: int, d: int) -> int:
    return sum(tipl(q) for q in enumerate_d_polyominoes(n, d))
