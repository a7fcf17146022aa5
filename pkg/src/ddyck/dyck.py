"""Dyck paths, valley/peak vectors and restricted d-Dyck paths.

Paths are stored as ASCII words over ``{U, D}``; every public parameter
uses the semilength ``n`` (a path of semilength ``n`` has ``2n`` steps).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .errors import BadCharacter, DipsBelowAxis, NotBalanced, UnsupportedD

__all__ = [
    "Step",
    "DyckPath",
    "RunFactorization",
    "parse_path",
    "valley_vector",
    "peak_vector",
    "is_d_dyck",
    "enumerate_dyck",
    "enumerate_d_dyck",
    "count_d_dyck",
    "binomial",
    "catalan",
    "reflect",
    "run_factorization",
]


class Step(str, enum.Enum):
    U = "U"  # north-east (1, 1)
    D = "D"  # south-east (1, -1)


@dataclass(frozen=True)
class DyckPath:
    word: str

    def __post_init__(self) -> None:
        height = 0
        for i, ch in enumerate(self.word):
            if ch == "U":
                height += 1
            elif ch == "D":
                height -= 1
                if height < 0:
                    raise DipsBelowAxis(f"prefix of length {i + 1} has more D than U steps")
            else:
                raise BadCharacter(f"invalid step {ch!r} at position {i}")
        if height != 0:
            raise NotBalanced(f"word has {height} more U than D steps")

    def __str__(self) -> str:
        return self.word

    def __len__(self) -> int:
        return len(self.word)

    @property
    def semilength(self) -> int:
        return len(self.word) // 2

    @property
    def steps(self) -> tuple[Step, ...]:
        return tuple(Step(ch) for ch in self.word)

    @cached_property
    def valleys(self) -> tuple[int, ...]:
        return _extrema(self.word, "DU")

    @cached_property
    def peaks(self) -> tuple[int, ...]:
        return _extrema(self.word, "UD")


def _extrema(word: str, pattern: str) -> tuple[int, ...]:
    # height of the middle vertex of every occurrence of `pattern`
    out = []
    height = 0
    for i, ch in enumerate(word):
        height += 1 if ch == "U" else -1
        if word[i : i + 2] == pattern:
            out.append(height)
    return tuple(out)


@dataclass(frozen=True)
class RunFactorization:
    """Maximal runs ``U^{a_1} D^{b_1} ... U^{a_m} D^{b_m}`` of a path."""

    runs: tuple[tuple[int, int], ...]

    def word(self) -> str:
        return "".join("U" * a + "D" * b for a, b in self.runs)


def parse_path(word: str) -> DyckPath:
    return DyckPath(word)


def valley_vector(p: DyckPath) -> tuple[int, ...]:
    return p.valleys


def peak_vector(p: DyckPath) -> tuple[int, ...]:
    return p.peaks


def is_d_dyck(p: DyckPath, d: int) -> bool:
    v = p.valleys
    return all(b - a >= d for a, b in zip(v, v[1:]))


def enumerate_dyck(n: int) -> Iterator[DyckPath]:
    """Yield all Dyck paths of semilength ``n`` in lexicographic order (U < D)."""
    for word in _words(n, None):
        yield DyckPath(word)


def enumerate_d_dyck(n: int, d: int) -> Iterator[DyckPath]:
    """Yield the d-Dyck paths of semilength ``n``, same order as :func:`enumerate_dyck`.

    Generation is direct: a branch is cut as soon as it closes a valley whose
    height is less than ``d`` above the previous valley.
    """
    for word in _words(n, d):
        yield DyckPath(word)


def _words(n: int, d: int | None) -> Iterator[str]:
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    buf: list[str] = []

    def rec(ups: int, downs: int, last_valley: int | None) -> Iterator[str]:
        if ups == n and downs == n:
            yield "".join(buf)
            return
        height = ups - downs
        if ups < n:
            valley = last_valley
            closes_valley = bool(buf) and buf[-1] == "D"
            if closes_valley:
                valley = height
            if not (
                closes_valley
                and d is not None
                and last_valley is not None
                and height - last_valley < d
            ):
                buf.append("U")
                yield from rec(ups + 1, downs, valley)
                buf.pop()
        if downs < ups:
            buf.append("D")
            yield from rec(ups, downs + 1, last_valley)
            buf.pop()

    yield from rec(0, 0, None)


def binomial(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def catalan(n: int) -> int:
    return binomial(2 * n, n) // (n + 1)


def count_d_dyck(n: int, d: int) -> int:
    """Closed-form number of d-Dyck paths of semilength ``n`` (``d >= 1``).

    ``sum_{k=0}^{floor((n+d-2)/d)} C(n - (d-1)(k-1), 2k)``
    """
    if d < 1:
        raise UnsupportedD(f"closed form needs d >= 1, got d={d}")
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    if n == 0:
        # empty path; the summation range is empty for d = 1
        return 1
    top = (n + d - 2) // d
    return sum(binomial(n - (d - 1) * (k - 1), 2 * k) for k in range(top + 1))


def reflect(p: DyckPath) -> DyckPath:
    """Reverse the word and swap U and D (mirror about the vertical line x = n)."""
    return DyckPath(p.word[::-1].translate(_SWAP))


_SWAP = str.maketrans("UD", "DU")


def run_factorization(p: DyckPath) -> RunFactorization:
    runs = []
    w = p.word
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == "U":
            j += 1
        k = j
        while k < len(w) and w[k] == "D":
            k += 1
        runs.append((j - i, k - j))
        i = k
    return RunFactorization(tuple(runs))
