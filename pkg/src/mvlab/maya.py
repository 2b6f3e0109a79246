"""Maya diagrams: nonempty proper subsets of [1, n+1] indexing chamber sets.

A Maya diagram decomposes into maximal integer intervals.  The interval
bookkeeping (start gaps, end points) drives both the quiver orientations and
the cokernel formulas, so it is centralized here, together with the
triangular tableaux attached to a diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

__all__ = [
    "MayaDiagram",
    "MayaComponents",
    "all_maya",
    "maya_index",
    "k_tableaux",
]


@dataclass(frozen=True)
class MayaDiagram:
    """A nonempty proper subset of [1, n+1]."""

    n: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("rank must be at least 1")
        if not isinstance(self.members, frozenset):
            object.__setattr__(self, "members", frozenset(self.members))
        if not self.members:
            raise ValueError("Maya diagram must be nonempty")
        if any(not 1 <= k <= self.n + 1 for k in self.members):
            raise ValueError(f"members must lie in [1, {self.n + 1}]")
        if len(self.members) == self.n + 1:
            raise ValueError("Maya diagram must be a proper subset")

    @classmethod
    def of(cls, n: int, members) -> "MayaDiagram":
        return cls(n, frozenset(members))

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def complement(self) -> "MayaDiagram":
        return MayaDiagram(self.n, frozenset(range(1, self.n + 2)) - self.members)

    def reflect(self, i: int) -> "MayaDiagram":
        """Swap membership of i and i+1."""
        if not 1 <= i <= self.n:
            raise ValueError(f"reflection index {i} out of range")
        if (i in self.members) == (i + 1 in self.members):
            return self
        swapped = self.members.symmetric_difference((i, i + 1))
        return MayaDiagram(self.n, swapped)

    def contains(self, k: int) -> bool:
        return k in self.members


class MayaComponents(NamedTuple):
    """Interval decomposition data of a Maya diagram."""

    intervals: tuple[tuple[int, int], ...]  # closed intervals [start, stop]
    outs: tuple[int, ...]  # interval right ends, clipped to [1, n]
    ins: tuple[int, ...]  # gaps just below interval starts, clipped to [1, n]
    first_gap: int  # least element of [1, n+1] outside the diagram
    last_member: int  # greatest member


def components(K: MayaDiagram) -> MayaComponents:
    members = K.sorted_members()
    intervals = []
    start = members[0]
    prev = members[0]
    for k in members[1:]:
        if k == prev + 1:
            prev = k
            continue
        intervals.append((start, prev))
        start = prev = k
    intervals.append((start, prev))
    outs = tuple(stop for _, stop in intervals if stop <= K.n)
    ins = tuple(start - 1 for start, _ in intervals if start >= 2)
    first_gap = min(k for k in range(1, K.n + 2) if k not in K.members)
    return MayaComponents(tuple(intervals), outs, ins, first_gap, members[-1])


@lru_cache(maxsize=None)
def all_maya(n: int) -> tuple[MayaDiagram, ...]:
    """Every Maya diagram at rank n, sorted by size then members."""
    out = []
    universe = list(range(1, n + 2))
    for mask in range(1, 2 ** (n + 1) - 1):
        members = frozenset(universe[k] for k in range(n + 1) if mask >> k & 1)
        out.append(MayaDiagram(n, members))
    out.sort(key=lambda K: (len(K.members), K.sorted_members()))
    return tuple(out)


@lru_cache(maxsize=None)
def maya_index(n: int) -> dict[frozenset[int], int]:
    return {K.members: idx for idx, K in enumerate(all_maya(n))}


def k_tableaux(K: MayaDiagram) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All triangular tableaux attached to K.

    Row p of a tableau holds entries for columns p..l (1-based), the diagonal
    entry being the p-th member of K.  Rows weakly increase, columns strictly
    increase, which caps cell (p, q) at ``members[q] - (q - p)``.
    """
    members = K.sorted_members()
    l = len(members)
    grid = [[0] * l for _ in range(l)]
    for p in range(l):
        grid[p][p] = members[p]
    cells = [(p, q) for q in range(1, l) for p in range(q)]

    def fill(idx: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if idx == len(cells):
            yield tuple(tuple(grid[p][p:]) for p in range(l))
            return
        p, q = cells[idx]
        lo = grid[p][q - 1]
        if p > 0:
            lo = max(lo, grid[p - 1][q] + 1)
        hi = members[q] - (q - p)
        for value in range(lo, hi + 1):
            grid[p][q] = value
            yield from fill(idx + 1)

    yield from fill(0)
