"""Set partitions of [n], the Dyck-path bijection and restricted d-partitions.

Blocks are always kept in canonical order: sorted by their minimum element,
each block ascending.  The restricted-partition conditions depend on this
order.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from typing import Iterable, Iterator

from .dyck import DyckPath, binomial, is_d_dyck, reflect
from .errors import CrossingPartition, InvalidPartition, NotDDyck, NotNcdMember

__all__ = [
    "SetPartition",
    "graph_representation",
    "is_non_crossing",
    "phi",
    "phi_inverse",
    "reverse_partition",
    "is_ncd_member",
    "is_pid_member",
    "d_dyck_to_ncd",
    "ncd_to_d_dyck",
    "enumerate_set_partitions",
    "bell_d",
]


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        object.__setattr__(self, "blocks", blocks)
        seen: list[int] = []
        for b in blocks:
            if not b:
                raise InvalidPartition("empty block")
            seen.extend(b)
        if sorted(seen) != list(range(1, self.n + 1)):
            raise InvalidPartition(f"blocks do not partition {{1..{self.n}}}")

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        blocks = [tuple(b) for b in blocks]
        return cls(sum(len(b) for b in blocks), tuple(blocks))

    @classmethod
    def from_json(cls, text: str) -> "SetPartition":
        obj = json.loads(text)
        if not isinstance(obj, list) or not all(isinstance(b, list) for b in obj):
            raise InvalidPartition("expected an array of arrays of integers")
        if not all(type(v) is int for b in obj for v in b):
            raise InvalidPartition("elements must be integers")
        return cls.from_blocks(obj)

    def to_json(self) -> str:
        return json.dumps([list(b) for b in self.blocks], separators=(",", ":"))

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return "/".join(",".join(map(str, b)) for b in self.blocks)


def graph_representation(p: SetPartition) -> frozenset[tuple[int, int]]:
    """Arcs joining numerically consecutive elements of each block."""
    return frozenset((x, y) for b in p.blocks for x, y in zip(b, b[1:]))


def is_non_crossing(p: SetPartition) -> bool:
    # a partition crosses iff some x < y < z < w has x,z in one block and y,w in another;
    # scanning with a stack of open blocks detects this in linear time
    block_of = {}
    last = {}
    for i, b in enumerate(p.blocks):
        for v in b:
            block_of[v] = i
        last[i] = b[-1]
    stack: list[int] = []
    for v in range(1, p.n + 1):
        i = block_of[v]
        if stack and stack[-1] == i:
            pass
        elif i in stack:
            return False
        else:
            stack.append(i)
        if v == last[i]:
            stack.pop()
    return True


def phi(p: DyckPath) -> SetPartition:
    """Label the U steps 1..n; each maximal D-run closes one block of U labels."""
    open_labels: list[int] = []
    blocks: list[list[int]] = []
    label = 0
    prev = ""
    for ch in p.word:
        if ch == "U":
            label += 1
            open_labels.append(label)
        else:
            if prev != "D":
                blocks.append([])
            blocks[-1].append(open_labels.pop())
        prev = ch
    return SetPartition(label, tuple(tuple(b) for b in blocks))


def phi_inverse(p: SetPartition) -> DyckPath:
    block_of = {v: b for b in p.blocks for v in b}
    open_labels: list[int] = []
    parts = []
    for i in range(1, p.n + 1):
        parts.append("U")
        open_labels.append(i)
        b = block_of[i]
        if i == b[-1]:
            closed = open_labels[-len(b):]
            if sorted(closed) != list(b):
                raise CrossingPartition(f"block {list(b)} cannot close at {i}: partition is crossing")
            del open_labels[-len(b):]
            parts.append("D" * len(b))
    return DyckPath("".join(parts))


def reverse_partition(p: SetPartition) -> SetPartition:
    m = p.n + 1
    return SetPartition(p.n, tuple(tuple(m - v for v in b) for b in p.blocks))


def _block_condition(p: SetPartition, d: int) -> bool:
    bl = p.blocks
    return all(sum(1 for v in bl[i] if v > bl[i + 1][-1]) >= d for i in range(1, len(bl) - 1))


def is_ncd_member(p: SetPartition, d: int) -> bool:
    """Non-crossing, and every middle block has >= d elements above the next block's max."""
    if d <= 0:
        raise ValueError(f"d must be positive, got {d}")
    return is_non_crossing(p) and _block_condition(p, d)


def is_pid_member(p: SetPartition, d: int) -> bool:
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    return _block_condition(p, d)


def d_dyck_to_ncd(p: DyckPath, d: int) -> SetPartition:
    if not is_d_dyck(p, d):
        raise NotDDyck(f"valley vector {p.valleys} violates the {d}-Dyck condition")
    return reverse_partition(phi(reflect(p)))


def ncd_to_d_dyck(p: SetPartition, d: int) -> DyckPath:
    if not is_ncd_member(p, d):
        raise NotNcdMember(f"{p.to_json()} is not in NC_{d}({p.n})")
    return reflect(phi_inverse(reverse_partition(p)))


def enumerate_set_partitions(n: int) -> Iterator[SetPartition]:
    """All partitions of [n] in restricted-growth-string order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield SetPartition(0, ())
        return
    rgs = [0] * n
    # Knuth 7.2.1.5, algorithm H style: increment the rightmost growable digit
    maxes = [0] * n  # maxes[i] = max(rgs[:i]) , maxes[0] unused
    while True:
        blocks: list[list[int]] = []
        for v, b in enumerate(rgs, start=1):
            if b == len(blocks):
                blocks.append([])
            blocks[b].append(v)
        yield SetPartition(n, tuple(tuple(b) for b in blocks))
        j = n - 1
        while j > 0 and rgs[j] > maxes[j]:
            j -= 1
        if j == 0:
            return
        rgs[j] += 1
        for i in range(j + 1, n):
            rgs[i] = 0
            maxes[i] = max(maxes[i - 1], rgs[i - 1])


_bell_lock = threading.Lock()
_bell_tables: dict[int, list[int]] = {}


def bell_d(n: int, d: int) -> int:
    """Restricted d-Bell number via ``B(n) = sum_k C(n-1, k) B(k - d)``, ``B(m) = 1`` for m <= 1."""
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    if n <= 1:
        return 1
    with _bell_lock:
        table = _bell_tables.setdefault(d, [1, 1])
        while len(table) <= n:
            m = len(table)
            table.append(sum(binomial(m - 1, k) * (table[k - d] if k - d > 1 else 1) for k in range(m)))
        return table[n]
