"""Type A quiver orientations, interval modules, and Maya-diagram invariants.

An orientation of the A_n diagram is a string over {'L', 'R'}, one letter per
edge {k, k+1}: 'R' means the arrow points k -> k+1 and 'L' means k+1 -> k.
The base orientation has every arrow pointing toward vertex 1.

Each Maya diagram K determines an orientation whose sources and sinks are
pinned by the gaps and members of K, a characterizing positive root, and a
reduced word adapted to that orientation.  Interval modules and their direct
sums give two module-theoretic formulas for the components of the prime-field
free crystal datum, both implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import linalg
from .crystal import LusztigDatum
from .maya import MayaDiagram, components
from .weyl import (
    identity_perm,
    is_reduced_word_of_w0,
    num_positive_roots,
    right_mult_simple,
)

__all__ = [
    "Orientation",
    "omega0",
    "orientation_from_maya",
    "characterizing_root",
    "adapted_word",
    "is_adapted",
    "QuiverModule",
    "indecomposable",
    "build_module",
    "hom_dim",
    "m_k_via_hom",
    "m_k_via_coker",
]


@dataclass(frozen=True)
class Orientation:
    """An orientation of the A_n Dynkin diagram, one direction per edge."""

    n: int
    dirs: tuple[str, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank must be at least 1")
        if len(self.dirs) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} edge directions, got {len(self.dirs)}")
        for d in self.dirs:
            if d not in ("L", "R"):
                raise ValueError(f"edge direction must be 'L' or 'R', got {d!r}")

    def arrows(self) -> tuple[tuple[int, int], ...]:
        """All arrows as (tail, head) pairs, one per edge."""
        out = []
        for k, d in enumerate(self.dirs, start=1):
            out.append((k, k + 1) if d == "R" else (k + 1, k))
        return tuple(out)

    def heads_at(self, v: int) -> tuple[int, ...]:
        """Neighbors u such that there is an arrow u -> v."""
        return tuple(t for t, h in self.arrows() if h == v)

    def sinks(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if not self._points_out(v))

    def sources(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if not self._points_in(v))

    def _points_out(self, v: int) -> bool:
        if v >= 2 and self.dirs[v - 2] == "L":
            return True
        if v <= self.n - 1 and self.dirs[v - 1] == "R":
            return True
        return False

    def _points_in(self, v: int) -> bool:
        if v >= 2 and self.dirs[v - 2] == "R":
            return True
        if v <= self.n - 1 and self.dirs[v - 1] == "L":
            return True
        return False

    def reflect(self, v: int) -> "Orientation":
        """Reverse every arrow incident to vertex v."""
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range")
        dirs = list(self.dirs)
        if v >= 2:
            dirs[v - 2] = "L" if dirs[v - 2] == "R" else "R"
        if v <= self.n - 1:
            dirs[v - 1] = "L" if dirs[v - 1] == "R" else "R"
        return Orientation(self.n, tuple(dirs))


def omega0(n: int) -> Orientation:
    """The base orientation, every arrow pointing toward vertex 1."""
    return Orientation(n, ("L",) * (n - 1))


def orientation_from_maya(K: MayaDiagram) -> Orientation:
    """The orientation whose source set and sink set are carved out by K.

    Sources are the component right endpoints inside [1, n], sinks the left
    fenceposts inside [1, n], with boundary vertices 1 and n adjoined to one
    of the two sets depending on how K meets the ends of [1, n+1].  The
    directions follow from the special vertices: every arrow points toward
    its nearest sink.  The construction double-checks itself by recomputing
    the source and sink sets of the result.
    """
    n = K.n
    comp = components(K)
    s_first = comp.intervals[0][0] - 1
    t_first = comp.intervals[0][1]
    s_last = comp.intervals[-1][0] - 1
    t_last = comp.intervals[-1][1]

    sources = set(comp.outs)
    sinks = set(comp.ins)
    if s_first >= 2:
        sources.add(1)
    elif s_first == 0 and t_first >= 2:
        sinks.add(1)
    if t_last <= n - 1:
        sinks.add(n)
    elif t_last == n + 1 and s_last <= n - 1:
        sources.add(n)

    if n == 1:
        return Orientation(1, ())

    if sources & sinks:
        raise RuntimeError(f"source/sink sets overlap for {sorted(K.members)}: {sources & sinks}")
    special = sorted(sources | sinks)
    if not special:
        raise RuntimeError(f"no special vertices for {sorted(K.members)}")

    dirs = []
    for k in range(1, n):
        right = next((v for v in special if v >= k + 1), None)
        if right is not None:
            dirs.append("R" if right in sinks else "L")
        else:
            left = max(v for v in special if v <= k)
            dirs.append("L" if left in sinks else "R")
    orient = Orientation(n, tuple(dirs))

    if set(orient.sources()) != sources or set(orient.sinks()) != sinks:
        raise RuntimeError(
            f"no orientation realizes sources={sorted(sources)} sinks={sorted(sinks)} "
            f"for K={sorted(K.members)}"
        )
    return orient


def characterizing_root(K: MayaDiagram) -> tuple[int, int] | None:
    """The root (s_K, t_K) attached to K, or None when it degenerates.

    s_K is the smallest gap of K and t_K its largest member; the root only
    exists when s_K < t_K, which fails exactly for the prefix sets [1, t].
    """
    comp = components(K)
    s_K = comp.first_gap
    t_K = comp.last_member
    return (s_K, t_K) if s_K < t_K else None


@lru_cache(maxsize=None)
def adapted_word(orient: Orientation) -> tuple[int, ...]:
    """A reduced word for the longest element adapted to the orientation.

    Letters are picked sink-first: each letter must be a sink of the current
    orientation, and the orientation is reflected at that vertex before the
    next letter.  Depth-first search with the smallest admissible sink first
    keeps the result deterministic.
    """
    n = orient.n
    target = num_positive_roots(n)

    def grow(word: tuple[int, ...], perm: tuple[int, ...], cur: Orientation):
        if len(word) == target:
            return word
        for i in cur.sinks():
            if perm[i - 1] < perm[i]:
                found = grow(word + (i,), right_mult_simple(perm, i), cur.reflect(i))
                if found is not None:
                    return found
        return None

    word = grow((), identity_perm(n), orient)
    if word is None:
        raise RuntimeError(f"no adapted reduced word for {orient}")
    return word


def is_adapted(word: tuple[int, ...], orient: Orientation) -> bool:
    """Whether the word is reduced for the longest element and sink-adapted."""
    if not is_reduced_word_of_w0(orient.n, word):
        return False
    cur = orient
    for letter in word:
        if letter not in cur.sinks():
            return False
        cur = cur.reflect(letter)
    return True


@dataclass
class QuiverModule:
    """A finite-dimensional representation of an oriented A_n quiver.

    maps[k] is the matrix of the arrow on edge {k+1, k+2} (0-indexed edge k),
    written head-dimension by tail-dimension as a list of rows.
    """

    orientation: Orientation
    dims: tuple[int, ...]
    maps: list[list[list[int]]]

    def __post_init__(self):
        n = self.orientation.n
        if len(self.dims) != n:
            raise ValueError(f"expected {n} dimensions, got {len(self.dims)}")
        if len(self.maps) != n - 1:
            raise ValueError(f"expected {n - 1} arrow matrices, got {len(self.maps)}")
        for k, (tail, head) in enumerate(self.orientation.arrows()):
            rows, cols = self.dims[head - 1], self.dims[tail - 1]
            mat = self.maps[k]
            if len(mat) != rows or any(len(r) != cols for r in mat):
                raise ValueError(f"arrow matrix on edge {k + 1} has the wrong shape")

    def arrow_matrix(self, k: int) -> np.ndarray:
        """The matrix on edge {k, k+1} (1-indexed edge), as int64."""
        tail, head = self.orientation.arrows()[k - 1]
        rows, cols = self.dims[head - 1], self.dims[tail - 1]
        return np.array(self.maps[k - 1], dtype=np.int64).reshape(rows, cols)


def _support(pair: tuple[int, int]) -> range:
    i, j = pair
    return range(i, j)


def indecomposable(pair: tuple[int, int], orient: Orientation) -> QuiverModule:
    """The interval module: one-dimensional on vertices i..j-1, identity arrows."""
    i, j = pair
    n = orient.n
    if not (1 <= i < j <= n + 1):
        raise ValueError(f"not a positive root pair: {pair}")
    return build_module(n, {pair: 1}, orient)


def build_module(n: int, mult: dict[tuple[int, int], int], orient: Orientation) -> QuiverModule:
    """Direct sum of interval modules with the given multiplicities.

    The basis at each vertex is ordered by (pair, copy) with pairs in the
    standard enumeration order, so arrow matrices are 0/1 block permutation
    matrices matching identity maps inside each interval summand.
    """
    if orient.n != n:
        raise ValueError("orientation rank mismatch")
    for pair, count in mult.items():
        i, j = pair
        if not (1 <= i < j <= n + 1):
            raise ValueError(f"not a positive root pair: {pair}")
        if count < 0:
            raise ValueError(f"negative multiplicity for {pair}")

    ordered = sorted((pair, c) for pair, count in mult.items() for c in range(count))
    basis = []
    for v in range(1, n + 1):
        basis.append([item for item in ordered if v in _support(item[0])])
    dims = tuple(len(b) for b in basis)
    index = [{item: pos for pos, item in enumerate(b)} for b in basis]

    maps = []
    for tail, head in orient.arrows():
        mat = [[0] * dims[tail - 1] for _ in range(dims[head - 1])]
        for item in basis[tail - 1]:
            if item in index[head - 1]:
                mat[index[head - 1][item]][index[tail - 1][item]] = 1
        maps.append(mat)
    return QuiverModule(orient, dims, maps)


def hom_dim(V: QuiverModule, W: QuiverModule) -> int:
    """Dimension of the space of module homomorphisms V -> W.

    A homomorphism is a tuple of linear maps phi_v commuting with every
    arrow; the dimension is the kernel dimension of the induced exact
    integer linear system.
    """
    if V.orientation != W.orientation:
        raise ValueError("modules live over different orientations")
    n = V.orientation.n
    offsets = []
    total = 0
    for v in range(n):
        offsets.append(total)
        total += W.dims[v] * V.dims[v]
    if total == 0:
        return 0

    rows: list[list[int | Fraction]] = []
    for k, (tail, head) in enumerate(V.orientation.arrows(), start=1):
        B = V.arrow_matrix(k)
        C = W.arrow_matrix(k)
        t, h = tail - 1, head - 1
        for r in range(W.dims[h]):
            for c in range(V.dims[t]):
                row = [0] * total
                for s in range(V.dims[h]):
                    row[offsets[h] + r * V.dims[h] + s] += int(B[s, c])
                for s in range(W.dims[t]):
                    row[offsets[t] + s * V.dims[t] + c] -= int(C[r, s])
                rows.append(row)
    if not rows:
        return total
    return total - linalg.rank_exact(rows)


def m_k_via_hom(mult: dict[tuple[int, int], int], K: MayaDiagram) -> int:
    """Datum component of K from interval multiplicities by the Hom formula."""
    return -sum(
        count for (i, j), count in mult.items() if not K.contains(i) and K.contains(j)
    )


def _path_composite(module: QuiverModule, src: int, dst: int) -> np.ndarray | None:
    """Matrix of the directed path src -> dst, or None when no path exists."""
    dirs = module.orientation.dirs
    if src == dst:
        d = module.dims[src - 1]
        return np.eye(d, dtype=np.int64)
    if src < dst:
        if any(dirs[e - 1] != "R" for e in range(src, dst)):
            return None
        out = module.arrow_matrix(src)
        for e in range(src + 1, dst):
            out = module.arrow_matrix(e) @ out
        return out
    if any(dirs[e - 1] != "L" for e in range(dst, src)):
        return None
    out = module.arrow_matrix(src - 1)
    for e in range(src - 2, dst - 1, -1):
        out = module.arrow_matrix(e) @ out
    return out


def m_k_via_coker(module: QuiverModule, K: MayaDiagram) -> int:
    """Datum component of K as minus a cokernel dimension.

    The map collects every directed-path composite from the source vertices
    attached to K into the sink vertices attached to K; missing paths
    contribute zero blocks.  The module must live over the orientation of K.
    """
    if module.orientation != orientation_from_maya(K):
        raise ValueError("module orientation does not match the one attached to K")
    comp = components(K)
    outs, ins = comp.outs, comp.ins
    target = sum(module.dims[l - 1] for l in ins)
    if target == 0:
        return 0
    blocks = []
    for l in ins:
        row_blocks = []
        for k in outs:
            piece = _path_composite(module, k, l)
            if piece is None:
                piece = np.zeros((module.dims[l - 1], module.dims[k - 1]), dtype=np.int64)
            row_blocks.append(piece)
        if row_blocks:
            blocks.append(np.hstack(row_blocks))
    if not blocks:
        return -target
    stacked = np.vstack(blocks)
    rank = linalg.rank_exact(stacked.tolist())
    return -(target - rank)


def datum_multiplicities(a: LusztigDatum) -> dict[tuple[int, int], int]:
    """Nonzero entries of a datum as interval-module multiplicities."""
    return dict(a.nonzero())
