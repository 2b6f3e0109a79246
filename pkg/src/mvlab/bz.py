"""Integer collections indexed by Maya diagrams and their crystal structure.

A datum assigns an integer to every Maya diagram at rank ``n`` and comes in
two flavors distinguished by which chamber sets are pinned to zero:

* flavor ``"w0"``: the suffix intervals ``[n-i+2, n+1]`` vanish,
* flavor ``"e"``: the prefix intervals ``[1, i]`` vanish.

The virtual components at the empty set and the full set always read zero.
Complementing every index set swaps the two flavors.  The collection of
components doubles as the hyperplane data of a lattice polytope whose
vertices are indexed by permutations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import crystal
from .crystal import LusztigDatum
from .maya import MayaDiagram, all_maya, maya_index

__all__ = [
    "BZDatum",
    "BZViolation",
    "BZAudit",
    "bz_from_lusztig",
    "bz_component_from_lusztig",
    "check_axioms",
    "star",
    "bz_weight",
    "bz_epsilon",
    "c_shift",
    "c_shift_star",
    "bz_lowering",
    "bz_star_lowering",
    "bz_raising",
    "lusztig_from_bz",
    "MVPolytopeGeometry",
    "mv_vertices",
    "support_sum",
]

FLAVORS = ("w0", "e")


def prefix_set(i: int) -> frozenset[int]:
    return frozenset(range(1, i + 1))


def suffix_set(n: int, k: int) -> frozenset[int]:
    return frozenset(range(k, n + 2))


@dataclass(frozen=True)
class BZDatum:
    """Component values over all Maya diagrams, in ``all_maya`` order."""

    n: int
    flavor: str
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.flavor not in FLAVORS:
            raise ValueError(f"flavor must be one of {FLAVORS}")
        if len(self.values) != len(all_maya(self.n)):
            raise ValueError("component vector does not match the diagram count")
        if any(not isinstance(v, int) for v in self.values):
            raise ValueError("components must be integers")

    @classmethod
    def from_dict(
        cls, n: int, flavor: str, mapping: dict[frozenset[int], int]
    ) -> "BZDatum":
        values = [0] * len(all_maya(n))
        index = maya_index(n)
        for members, value in mapping.items():
            values[index[frozenset(members)]] = value
        return cls(n, flavor, tuple(values))

    def get(self, key) -> int:
        """Component at an index set; the empty and full sets read zero."""
        members = key.members if isinstance(key, MayaDiagram) else frozenset(key)
        if not members or len(members) == self.n + 1:
            return 0
        return self.values[maya_index(self.n)[members]]

    def with_component(self, key, value: int) -> "BZDatum":
        members = key.members if isinstance(key, MayaDiagram) else frozenset(key)
        values = list(self.values)
        values[maya_index(self.n)[members]] = value
        return BZDatum(self.n, self.flavor, tuple(values))

    def as_dict(self) -> dict[frozenset[int], int]:
        return {K.members: v for K, v in zip(all_maya(self.n), self.values)}


def _tableau_min(a: LusztigDatum, members: tuple[int, ...]) -> int:
    """Minimal off-diagonal tableau sum; entries are nonnegative, so partial
    sums prune the search."""
    l = len(members)
    if l == 1:
        return 0
    grid = [[0] * l for _ in range(l)]
    for p in range(l):
        grid[p][p] = members[p]
    cells = [(p, q) for q in range(1, l) for p in range(q)]
    best: Optional[int] = None

    def fill(idx: int, acc: int) -> None:
        nonlocal best
        if best is not None and acc >= best:
            return
        if idx == len(cells):
            best = acc
            return
        p, q = cells[idx]
        lo = grid[p][q - 1]
        if p > 0:
            lo = max(lo, grid[p - 1][q] + 1)
        hi = members[q] - (q - p)
        for value in range(lo, hi + 1):
            grid[p][q] = value
            fill(idx + 1, acc + a.get(value, value + q - p))

    fill(0, 0)
    assert best is not None, "every Maya diagram admits at least one tableau"
    return best


def bz_component_from_lusztig(a: LusztigDatum, K: MayaDiagram) -> int:
    members = K.sorted_members()
    head = -sum(a.get(i, k) for k in members for i in range(1, k))
    return head + _tableau_min(a, members)


@lru_cache(maxsize=None)
def bz_from_lusztig(a: LusztigDatum) -> BZDatum:
    """The e-flavored datum collecting every component of ``a``."""
    values = tuple(bz_component_from_lusztig(a, K) for K in all_maya(a.n))
    return BZDatum(a.n, "e", values)


@dataclass(frozen=True)
class BZViolation:
    kind: str  # "normalization", "edge", or "three_term"
    detail: tuple[tuple[str, object], ...]

    def as_dict(self) -> dict:
        return {"kind": self.kind, **dict(self.detail)}


@dataclass(frozen=True)
class BZAudit:
    violations: tuple[BZViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _sorted_list(members) -> list[int]:
    return sorted(members)


def check_axioms(M: BZDatum) -> BZAudit:
    """Full audit: flavor normalization, all edge inequalities, and all
    three-term relations, each failure reported with its witness."""
    n = M.n
    violations = []

    for i in range(1, n + 1):
        pinned = prefix_set(i) if M.flavor == "e" else suffix_set(n, n - i + 2)
        value = M.get(pinned)
        if value != 0:
            violations.append(
                BZViolation(
                    "normalization",
                    (("K", _sorted_list(pinned)), ("value", value)),
                )
            )

    universe = range(1, n + 2)
    for i, j in itertools.combinations(universe, 2):
        rest = [k for k in universe if k not in (i, j)]
        for size in range(len(rest) + 1):
            for extra in itertools.combinations(rest, size):
                S = frozenset(extra)
                lhs = M.get(S | {i}) + M.get(S | {j})
                rhs = M.get(S | {i, j}) + M.get(S)
                if lhs > rhs:
                    violations.append(
                        BZViolation(
                            "edge",
                            (
                                ("i", i),
                                ("j", j),
                                ("S", _sorted_list(S)),
                                ("lhs", lhs),
                                ("rhs", rhs),
                            ),
                        )
                    )

    for i, j, k in itertools.combinations(universe, 3):
        rest = [m for m in universe if m not in (i, j, k)]
        for size in range(len(rest) + 1):
            for extra in itertools.combinations(rest, size):
                S = frozenset(extra)
                lhs = M.get(S | {i, k}) + M.get(S | {j})
                rhs = min(
                    M.get(S | {i, j}) + M.get(S | {k}),
                    M.get(S | {j, k}) + M.get(S | {i}),
                )
                if lhs != rhs:
                    violations.append(
                        BZViolation(
                            "three_term",
                            (
                                ("i", i),
                                ("j", j),
                                ("k", k),
                                ("S", _sorted_list(S)),
                                ("lhs", lhs),
                                ("rhs", rhs),
                            ),
                        )
                    )

    return BZAudit(tuple(violations))


def star(M: BZDatum) -> BZDatum:
    """Complement every index set; flips the flavor.  An involution."""
    index = maya_index(M.n)
    full = frozenset(range(1, M.n + 2))
    values = [0] * len(M.values)
    for K, idx in index.items():
        values[idx] = M.values[index[full - K]]
    flavor = "e" if M.flavor == "w0" else "w0"
    return BZDatum(M.n, flavor, tuple(values))


def _require_flavor(M: BZDatum, flavor: str, what: str) -> None:
    if M.flavor != flavor:
        raise ValueError(f"{what} needs a {flavor}-flavored datum, got {M.flavor}")


def bz_weight(M: BZDatum) -> tuple[int, ...]:
    """Weight in simple-root coordinates.

    On w0-flavored data the coefficients sit in the prefix components; on
    e-flavored data in the suffix components, by complement symmetry.
    """
    if M.flavor == "w0":
        return tuple(M.get(prefix_set(i)) for i in range(1, M.n + 1))
    return tuple(M.get(suffix_set(M.n, i + 1)) for i in range(1, M.n + 1))


def bz_epsilon(M: BZDatum, i: int) -> int:
    _require_flavor(M, "w0", "bz_epsilon")
    value = -(
        M.get(prefix_set(i))
        + M.get(prefix_set(i + 1) - {i})
        - M.get(prefix_set(i + 1))
        - M.get(prefix_set(i - 1))
    )
    if value < 0:
        raise RuntimeError(f"negative epsilon {value} on {M}; datum is corrupt")
    return value


def bz_epsilon_star(M: BZDatum, i: int) -> int:
    """Starred epsilon read off an e-flavored datum; mirrors bz_epsilon."""
    _require_flavor(M, "e", "bz_epsilon_star")
    n = M.n
    value = -(
        M.get(suffix_set(n, i + 1))
        + M.get(frozenset({i}) | suffix_set(n, i + 2))
        - M.get(suffix_set(n, i + 2))
        - M.get(suffix_set(n, i))
    )
    if value < 0:
        raise RuntimeError(f"negative starred epsilon {value} on {M}; datum is corrupt")
    return value


def c_shift(M: BZDatum, i: int) -> int:
    """Offset used by the lowering minimum formula on w0-flavored data."""
    _require_flavor(M, "w0", "c_shift")
    return M.get(prefix_set(i)) - M.get(prefix_set(i + 1) - {i}) - 1


def c_shift_star(M: BZDatum, i: int) -> int:
    """Complemented offset for the starred lowering on e-flavored data."""
    _require_flavor(M, "e", "c_shift_star")
    n = M.n
    return M.get(suffix_set(n, i + 1)) - M.get(frozenset({i}) | suffix_set(n, i + 2)) - 1


def _min_update(M: BZDatum, i: int, offset: int, star_side: bool) -> BZDatum:
    """min(M_K, M_{s_i K} + offset) on the diagrams split by i, others frozen."""
    values = list(M.values)
    for idx, K in enumerate(all_maya(M.n)):
        has_i = i in K.members
        has_next = (i + 1) in K.members
        active = (not has_i and has_next) if star_side else (has_i and not has_next)
        if not active:
            continue
        values[idx] = min(M.values[idx], M.get(K.reflect(i)) + offset)
    return BZDatum(M.n, M.flavor, tuple(values))


def bz_lowering(M: BZDatum, i: int) -> BZDatum:
    """Lowering operator on w0-flavored data via the minimum formula."""
    _require_flavor(M, "w0", "bz_lowering")
    return _min_update(M, i, c_shift(M, i), star_side=False)


def bz_star_lowering(M: BZDatum, i: int) -> BZDatum:
    """Starred lowering on e-flavored data; conjugate of bz_lowering by star."""
    _require_flavor(M, "e", "bz_star_lowering")
    return _min_update(M, i, c_shift_star(M, i), star_side=True)


@lru_cache(maxsize=None)
def _slice_table(n: int, m: tuple[int, ...]) -> dict[tuple[int, ...], LusztigDatum]:
    table = {}
    for a in crystal.enumerate_weight_slice(n, m):
        table[bz_from_lusztig(a).values] = a
    return table


def lusztig_from_bz(M: BZDatum) -> LusztigDatum:
    """Invert ``bz_from_lusztig`` by searching the weight slice of ``M``."""
    _require_flavor(M, "e", "lusztig_from_bz")
    m = tuple(-M.get(suffix_set(M.n, i + 1)) for i in range(1, M.n + 1))
    if any(v < 0 for v in m):
        raise ValueError("datum has positive suffix components; not in the image")
    table = _slice_table(M.n, m)
    try:
        return table[M.values]
    except KeyError:
        raise ValueError("datum is not in the image of bz_from_lusztig") from None


def bz_raising(M: BZDatum, i: int) -> Optional[BZDatum]:
    """Raising operator on w0-flavored data; None when epsilon_i vanishes.

    Computed by pulling back through the star-twisted isomorphism with
    Lusztig data, then validated against its two characterizing properties:
    the component at [1, i] rises by one and every diagram not split by i
    keeps its value.  Validation failure is a hard error.
    """
    _require_flavor(M, "w0", "bz_raising")
    if bz_epsilon(M, i) == 0:
        return None
    a = lusztig_from_bz(star(M))
    lifted = crystal.star_raising(a, i)
    if lifted is None:
        raise RuntimeError("positive epsilon but the pulled-back datum is extremal")
    out = star(bz_from_lusztig(lifted))
    if out.get(prefix_set(i)) != M.get(prefix_set(i)) + 1:
        raise RuntimeError("raising failed to increase the [1,i] component by one")
    for K in all_maya(M.n):
        if i in K.members and i + 1 not in K.members:
            continue
        if out.get(K) != M.get(K):
            raise RuntimeError(
                f"raising moved the off-support component at {K.sorted_members()}"
            )
    return out


@dataclass(frozen=True)
class MVPolytopeGeometry:
    """Vertices mu_w of the polytope cut out by the component halfspaces."""

    n: int
    vertices: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def vertex(self, w: tuple[int, ...]) -> tuple[int, ...]:
        for perm, mu in self.vertices:
            if perm == w:
                return mu
        raise KeyError(w)


def support_sum(mu: tuple[int, ...], members) -> int:
    return sum(mu[k - 1] for k in members)


def mv_vertices(M: BZDatum, max_rank: int = 5) -> MVPolytopeGeometry:
    """One lattice point per permutation, each attaining its own chamber sets.

    The vertex for w accumulates M over the sets w[1..i] along the coordinate
    vectors e_{w(i)} - e_{w(i+1)}.  Kept to small rank: the vertex count is
    (n+1)!.
    """
    _require_flavor(M, "w0", "mv_vertices")
    if M.n > max_rank:
        raise ValueError(f"vertex enumeration capped at rank {max_rank}")
    vertices = []
    for w in itertools.permutations(range(1, M.n + 2)):
        mu = [0] * (M.n + 1)
        for i in range(1, M.n + 1):
            coeff = M.get(frozenset(w[:i]))
            mu[w[i - 1] - 1] += coeff
            mu[w[i] - 1] -= coeff
        vertices.append((w, tuple(mu)))
    return MVPolytopeGeometry(M.n, tuple(vertices))
