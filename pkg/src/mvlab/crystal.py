"""Kashiwara operators on Lusztig data.

A rank ``n`` Lusztig datum is a nonnegative integer multiplicity for every
root pair ``(i, j)`` with ``1 <= i < j <= n+1``, stored in the order of
:func:`mvlab.weyl.pi_pairs` (the order induced by the lexicographically
minimal reduced word of the longest element).

Reads outside the strict range follow the usual conventions: the ``k = 0``
row, the ``l = n+2`` column, and the diagonal ``(k, k)`` all read as zero.
The operator formulas occasionally write to a diagonal cell; those writes
are discarded.  ``None`` plays the role of the bottom element returned by a
raising operator applied to an extremal datum; it is never conflated with
the all-zero datum.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .weyl import num_positive_roots, pi_index, pi_pairs

__all__ = [
    "LusztigDatum",
    "CrystalOp",
    "parse_ops",
    "apply_op",
    "m_vector",
    "weight",
    "h_pairing",
    "raising_sums",
    "star_sums",
    "epsilon",
    "phi",
    "epsilon_star",
    "phi_star",
    "raising",
    "lowering",
    "star_raising",
    "star_lowering",
    "raising_max",
    "star_raising_max",
    "count_by_height",
    "enumerate_by_height",
    "enumerate_weight_slice",
]

DEFAULT_MAX_CELLS = 5_000_000


@dataclass(frozen=True)
class LusztigDatum:
    """Multiplicities on positive roots, in minimal-word order."""

    n: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("rank must be at least 1")
        if len(self.entries) != num_positive_roots(self.n):
            raise ValueError(
                f"rank {self.n} needs {num_positive_roots(self.n)} entries, "
                f"got {len(self.entries)}"
            )
        if any(not isinstance(v, int) or v < 0 for v in self.entries):
            raise ValueError("entries must be nonnegative integers")

    @classmethod
    def zero(cls, n: int) -> "LusztigDatum":
        return cls(n, (0,) * num_positive_roots(n))

    @classmethod
    def from_dict(cls, n: int, cells: dict[tuple[int, int], int]) -> "LusztigDatum":
        idx = pi_index(n)
        entries = [0] * num_positive_roots(n)
        for pair, value in cells.items():
            entries[idx[pair]] = value
        return cls(n, tuple(entries))

    def get(self, k: int, l: int) -> int:
        """Entry at (k, l), with conventional zeros outside the root range."""
        if k == 0 or l == self.n + 2 or k == l:
            return 0
        if not 1 <= k < l <= self.n + 1:
            raise ValueError(f"cell ({k}, {l}) out of range at rank {self.n}")
        return self.entries[pi_index(self.n)[(k, l)]]

    def nonzero(self) -> dict[tuple[int, int], int]:
        pairs = pi_pairs(self.n)
        return {pairs[k]: v for k, v in enumerate(self.entries) if v}

    def total(self) -> int:
        return sum(self.entries)

    def shifted(self, deltas: dict[tuple[int, int], int]) -> "LusztigDatum":
        """Apply additive changes; diagonal writes are discarded."""
        idx = pi_index(self.n)
        entries = list(self.entries)
        for (k, l), delta in deltas.items():
            if k == l:
                continue
            entries[idx[(k, l)]] += delta
        if any(v < 0 for v in entries):
            raise RuntimeError(
                f"operator drove an entry negative on {self}; this is a bug"
            )
        return LusztigDatum(self.n, tuple(entries))


def m_vector(a: LusztigDatum) -> tuple[int, ...]:
    """m_i = total multiplicity of roots whose support contains alpha_i."""
    m = [0] * a.n
    for (i, j), value in zip(pi_pairs(a.n), a.entries):
        for k in range(i, j):
            m[k - 1] += value
    return tuple(m)


def weight(a: LusztigDatum) -> tuple[int, ...]:
    """Weight in simple-root coordinates: minus the m-vector."""
    return tuple(-m for m in m_vector(a))


def h_pairing(wt: tuple[int, ...], i: int) -> int:
    """Cartan pairing <h_i, wt> for a weight in simple-root coordinates."""
    n = len(wt)
    value = 2 * wt[i - 1]
    if i > 1:
        value -= wt[i - 2]
    if i < n:
        value -= wt[i]
    return value


def raising_sums(a: LusztigDatum, i: int) -> tuple[int, ...]:
    """Partial sums A_k = sum_{s<=k} (a[s, i+1] - a[s-1, i]) for k = 1..i."""
    out = []
    acc = 0
    for k in range(1, i + 1):
        acc += a.get(k, i + 1) - a.get(k - 1, i)
        out.append(acc)
    return tuple(out)


def star_sums(a: LusztigDatum, i: int) -> tuple[int, ...]:
    """Tail sums A*_l = sum_{t>l} (a[i, t] - a[i+1, t+1]) for l = i..n."""
    n = a.n
    out = [0] * (n - i + 1)
    acc = 0
    for l in range(n, i - 1, -1):
        acc += a.get(i, l + 1) - a.get(i + 1, l + 2)
        out[l - i] = acc
    return tuple(out)


def epsilon(a: LusztigDatum, i: int) -> int:
    return max(raising_sums(a, i))


def phi(a: LusztigDatum, i: int) -> int:
    return epsilon(a, i) + h_pairing(weight(a), i)


def epsilon_star(a: LusztigDatum, i: int) -> int:
    return max(star_sums(a, i))


def phi_star(a: LusztigDatum, i: int) -> int:
    return epsilon_star(a, i) + h_pairing(weight(a), i)


def raising(a: LusztigDatum, i: int) -> Optional[LusztigDatum]:
    """Raising operator; None when epsilon_i is zero."""
    sums = raising_sums(a, i)
    eps = max(sums)
    if eps == 0:
        return None
    k_e = 1 + sums.index(eps)  # smallest maximizer
    return a.shifted({(k_e, i): +1, (k_e, i + 1): -1})


def lowering(a: LusztigDatum, i: int) -> LusztigDatum:
    """Lowering operator; always defined."""
    sums = raising_sums(a, i)
    eps = max(sums)
    k_f = i - tuple(reversed(sums)).index(eps)  # largest maximizer
    return a.shifted({(k_f, i): -1, (k_f, i + 1): +1})


def star_raising(a: LusztigDatum, i: int) -> Optional[LusztigDatum]:
    """Starred raising operator; None when epsilon*_i is zero."""
    sums = star_sums(a, i)
    eps = max(sums)
    if eps == 0:
        return None
    l_e = a.n - tuple(reversed(sums)).index(eps)  # largest maximizer
    return a.shifted({(i, l_e + 1): -1, (i + 1, l_e + 1): +1})


def star_lowering(a: LusztigDatum, i: int) -> LusztigDatum:
    """Starred lowering operator; always defined."""
    sums = star_sums(a, i)
    eps = max(sums)
    l_f = i + sums.index(eps)  # smallest maximizer
    return a.shifted({(i, l_f + 1): +1, (i + 1, l_f + 1): -1})


def raising_max(a: LusztigDatum, i: int) -> LusztigDatum:
    """Apply the raising operator until it returns None."""
    while True:
        lifted = raising(a, i)
        if lifted is None:
            return a
        a = lifted


def star_raising_max(a: LusztigDatum, i: int) -> LusztigDatum:
    while True:
        lifted = star_raising(a, i)
        if lifted is None:
            return a
        a = lifted


@dataclass(frozen=True)
class CrystalOp:
    """One operator token: kind in {"e", "f", "e*", "f*"} and a direction index."""

    kind: str
    index: int

    def __post_init__(self) -> None:
        if self.kind not in ("e", "f", "e*", "f*"):
            raise ValueError(f"unknown operator kind {self.kind!r}")
        if self.index < 1:
            raise ValueError("operator index is 1-based")

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


_OP_TOKEN = re.compile(r"^(e\*|f\*|e|f)(\d+)$")


def parse_ops(text: str, n: int) -> tuple[CrystalOp, ...]:
    """Parse a whitespace-separated operator word like ``"f1 f2 e*1"``."""
    ops = []
    for token in text.split():
        match = _OP_TOKEN.match(token)
        if match is None:
            raise ValueError(f"bad operator token {token!r}")
        index = int(match.group(2))
        if not 1 <= index <= n:
            raise ValueError(f"operator index {index} out of range for rank {n}")
        ops.append(CrystalOp(match.group(1), index))
    return tuple(ops)


def apply_op(a: LusztigDatum, op: CrystalOp) -> Optional[LusztigDatum]:
    if op.kind == "e":
        return raising(a, op.index)
    if op.kind == "f":
        return lowering(a, op.index)
    if op.kind == "e*":
        return star_raising(a, op.index)
    return star_lowering(a, op.index)


def count_by_height(n: int, max_height: int) -> int:
    """Number of data with entry sum at most ``max_height``."""
    return math.comb(num_positive_roots(n) + max_height, num_positive_roots(n))


def _cell_budget() -> int:
    raw = os.environ.get("MVLAB_MAX_CELLS")
    return int(raw) if raw else DEFAULT_MAX_CELLS


def enumerate_by_height(n: int, max_height: int) -> Iterator[LusztigDatum]:
    """All data with entry sum <= max_height, in lexicographic entry order.

    The environment variable MVLAB_MAX_CELLS caps the total number of cells
    (data count times tuple length) this call may produce.
    """
    if max_height < 0:
        raise ValueError("max height must be nonnegative")
    length = num_positive_roots(n)
    cells = count_by_height(n, max_height) * length
    budget = _cell_budget()
    if cells > budget:
        raise ValueError(
            f"enumeration of {cells} cells exceeds the MVLAB_MAX_CELLS budget {budget}"
        )

    def rec(pos: int, remaining: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if pos == length:
            yield tuple(prefix)
            return
        for value in range(remaining + 1):
            prefix.append(value)
            yield from rec(pos + 1, remaining - value, prefix)
            prefix.pop()

    for entries in rec(0, max_height, []):
        yield LusztigDatum(n, entries)


def enumerate_weight_slice(n: int, m: tuple[int, ...]) -> Iterator[LusztigDatum]:
    """All data whose m-vector equals ``m``.

    Composite roots are assigned first with budget pruning; the simple-root
    cells then absorb whatever remains, so every branch that survives yields
    exactly one datum.
    """
    if len(m) != n or any(v < 0 for v in m):
        raise ValueError("m-vector must be a nonnegative tuple of length n")
    composite = [(i, j) for (i, j) in pi_pairs(n) if j - i >= 2]

    def rec(pos: int, budgets: list[int]) -> Iterator[dict[tuple[int, int], int]]:
        if pos == len(composite):
            yield {}
            return
        i, j = composite[pos]
        cap = min(budgets[i - 1 : j - 1])
        for value in range(cap + 1):
            for k in range(i - 1, j - 1):
                budgets[k] -= value
            for rest in rec(pos + 1, budgets):
                if value:
                    rest = dict(rest)
                    rest[(i, j)] = value
                yield rest
            for k in range(i - 1, j - 1):
                budgets[k] += value

    budgets = list(m)
    for cells in rec(0, budgets):
        filled = dict(cells)
        used = [0] * n
        for (i, j), value in cells.items():
            for k in range(i, j):
                used[k - 1] += value
        for i in range(1, n + 1):
            leftover = m[i - 1] - used[i - 1]
            if leftover:
                filled[(i, i + 1)] = leftover
        yield LusztigDatum.from_dict(n, filled)
