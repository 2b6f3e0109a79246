"""Reduced words for the longest permutation, braid moves, and transition maps.

A rank ``n`` instance lives in the symmetric group on ``[1, n+1]``.
Permutations are stored as tuples of images, so ``w[k-1]`` is the image of
``k``.  Words are tuples of simple-reflection indices in ``[1, n]``; the
longest element has length ``N = n(n+1)/2``.

Positive roots are encoded as pairs ``(i, j)`` with ``1 <= i < j <= n+1``,
standing for ``alpha_i + ... + alpha_{j-1}``.  A reduced word of the longest
element enumerates all ``N`` positive roots; coordinates attached to a word
are transported to another word by composing local braid-move rules:

* a 2-move swaps the two coordinates under the commuting letters,
* a 3-move maps ``(a, b, c)`` to ``(b+c-p, p, a+b-p)`` with ``p = min(a, c)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "num_positive_roots",
    "identity_perm",
    "longest_perm",
    "perm_mul",
    "right_mult_simple",
    "word_to_perm",
    "is_reduced_word_of_w0",
    "lex_min_word",
    "pi_pairs",
    "pi_index",
    "roots_in_order",
    "root_vector",
    "Move",
    "available_moves",
    "apply_move",
    "braid_path",
    "apply_move_to_coords",
    "transition_along",
    "transition",
]

MAX_BRAID_RANK = 6


def num_positive_roots(n: int) -> int:
    return n * (n + 1) // 2


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 2))


def longest_perm(n: int) -> tuple[int, ...]:
    """The order-reversing permutation k -> n+2-k."""
    return tuple(range(n + 1, 0, -1))


def perm_mul(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """Compose permutations: (u v)(k) = u(v(k))."""
    return tuple(u[v[k] - 1] for k in range(len(v)))


def right_mult_simple(w: tuple[int, ...], i: int) -> tuple[int, ...]:
    """w * s_i, which swaps the images of i and i+1."""
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def word_to_perm(n: int, word: tuple[int, ...]) -> tuple[int, ...]:
    w = identity_perm(n)
    for letter in word:
        if not 1 <= letter <= n:
            raise ValueError(f"letter {letter} out of range for rank {n}")
        w = right_mult_simple(w, letter)
    return w


def is_reduced_word_of_w0(n: int, word: tuple[int, ...]) -> bool:
    """True iff the word has full length N and multiplies to the longest element.

    A word of length N whose product is the longest element is automatically
    reduced, because N bounds the length of any product of N reflections.
    """
    if len(word) != num_positive_roots(n):
        return False
    if any(not 1 <= letter <= n for letter in word):
        return False
    return word_to_perm(n, word) == longest_perm(n)


@lru_cache(maxsize=None)
def lex_min_word(n: int) -> tuple[int, ...]:
    """The lexicographically minimal reduced word (1, 2,1, 3,2,1, ...)."""
    return tuple(k for j in range(1, n + 1) for k in range(j, 0, -1))


@lru_cache(maxsize=None)
def pi_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """All root pairs (i, j), ordered the way lex_min_word enumerates them.

    The order is j ascending, then i ascending: (1,2), (1,3), (2,3), (1,4), ...
    """
    return tuple((i, j) for j in range(2, n + 2) for i in range(1, j))


@lru_cache(maxsize=None)
def pi_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: k for k, pair in enumerate(pi_pairs(n))}


def roots_in_order(n: int, word: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """The positive roots beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) as pairs.

    Raises ValueError if the word is not reduced (some beta_k would be
    negative).
    """
    w = identity_perm(n)
    out = []
    for letter in word:
        if not 1 <= letter <= n:
            raise ValueError(f"letter {letter} out of range for rank {n}")
        a, b = w[letter - 1], w[letter]
        if a > b:
            raise ValueError("word is not reduced")
        out.append((a, b))
        w = right_mult_simple(w, letter)
    return tuple(out)


def root_vector(n: int, pair: tuple[int, int]) -> tuple[int, ...]:
    """Simple-root coordinates of the positive root (i, j)."""
    i, j = pair
    if not 1 <= i < j <= n + 1:
        raise ValueError(f"{pair} is not a root pair at rank {n}")
    return tuple(1 if i <= k <= j - 1 else 0 for k in range(1, n + 1))


@dataclass(frozen=True)
class Move:
    """A braid move located at 1-based position ``pos`` (leftmost letter moved)."""

    kind: str  # "2move" or "3move"
    pos: int

    def __post_init__(self) -> None:
        if self.kind not in ("2move", "3move"):
            raise ValueError(f"unknown move kind {self.kind!r}")
        if self.pos < 1:
            raise ValueError("move position is 1-based")


def available_moves(word: tuple[int, ...]) -> list[Move]:
    moves = []
    for k in range(len(word) - 1):
        if abs(word[k] - word[k + 1]) >= 2:
            moves.append(Move("2move", k + 1))
    for k in range(len(word) - 2):
        if word[k] == word[k + 2] and abs(word[k] - word[k + 1]) == 1:
            moves.append(Move("3move", k + 1))
    return moves


def apply_move(word: tuple[int, ...], move: Move) -> tuple[int, ...]:
    k = move.pos - 1
    out = list(word)
    if move.kind == "2move":
        if k + 1 >= len(word) or abs(word[k] - word[k + 1]) < 2:
            raise ValueError(f"{move} does not apply to {word}")
        out[k], out[k + 1] = out[k + 1], out[k]
    else:
        if k + 2 >= len(word) or word[k] != word[k + 2] or abs(word[k] - word[k + 1]) != 1:
            raise ValueError(f"{move} does not apply to {word}")
        out[k], out[k + 1], out[k + 2] = out[k + 1], out[k], out[k + 1]
    return tuple(out)


def _neighbors(word: tuple[int, ...]) -> list[tuple[Move, tuple[int, ...]]]:
    return [(m, apply_move(word, m)) for m in available_moves(word)]


@lru_cache(maxsize=None)
def braid_path(n: int, src: tuple[int, ...], dst: tuple[int, ...]) -> tuple[Move, ...]:
    """A shortest braid-move path turning ``src`` into ``dst``.

    Bidirectional breadth-first search over the braid-move graph.  Every move
    is an involution, so the half discovered from ``dst`` is replayed in
    reverse.  Kept to desk scale: rank above MAX_BRAID_RANK is refused.
    """
    if n > MAX_BRAID_RANK:
        raise ValueError(f"braid_path supports rank <= {MAX_BRAID_RANK}")
    for word in (src, dst):
        if not is_reduced_word_of_w0(n, word):
            raise ValueError(f"{word} is not a reduced word of the longest element")
    if src == dst:
        return ()
    fwd: dict[tuple[int, ...], tuple[Move, ...]] = {src: ()}
    bwd: dict[tuple[int, ...], tuple[Move, ...]] = {dst: ()}
    fwd_frontier = [src]
    bwd_frontier = [dst]
    while True:
        grow_fwd = len(fwd_frontier) <= len(bwd_frontier)
        frontier, seen, other = (
            (fwd_frontier, fwd, bwd) if grow_fwd else (bwd_frontier, bwd, fwd)
        )
        next_frontier = []
        for word in frontier:
            path = seen[word]
            for move, neighbor in _neighbors(word):
                if neighbor in seen:
                    continue
                seen[neighbor] = path + (move,)
                if neighbor in other:
                    return fwd[neighbor] + tuple(reversed(bwd[neighbor]))
                next_frontier.append(neighbor)
        if not next_frontier:
            raise RuntimeError("braid-move graph disconnected; this is a bug")
        if grow_fwd:
            fwd_frontier = next_frontier
        else:
            bwd_frontier = next_frontier


def apply_move_to_coords(coords: tuple[int, ...], move: Move) -> tuple[int, ...]:
    """Transport word coordinates through one braid move."""
    k = move.pos - 1
    out = list(coords)
    if move.kind == "2move":
        out[k], out[k + 1] = out[k + 1], out[k]
    else:
        a, b, c = out[k], out[k + 1], out[k + 2]
        p = min(a, c)
        out[k], out[k + 1], out[k + 2] = b + c - p, p, a + b - p
    return tuple(out)


def transition_along(coords: tuple[int, ...], moves: tuple[Move, ...]) -> tuple[int, ...]:
    for move in moves:
        coords = apply_move_to_coords(coords, move)
    return coords


def transition(
    n: int,
    coords: tuple[int, ...],
    src: tuple[int, ...],
    dst: tuple[int, ...],
) -> tuple[int, ...]:
    """Transport a coordinate vector from ``src``-word order to ``dst``-word order.

    ``coords[k]`` is the multiplicity attached to the k-th root that ``src``
    enumerates; the result is aligned with ``roots_in_order(n, dst)``.
    """
    if len(coords) != len(src):
        raise ValueError("coordinate vector does not match the word length")
    if any(c < 0 for c in coords):
        raise ValueError("coordinates must be nonnegative")
    return transition_along(coords, braid_path(n, src, dst))


def all_perms(n: int) -> itertools.permutations:
    """Every permutation of [1, n+1] as an image tuple."""
    return itertools.permutations(range(1, n + 2))


@lru_cache(maxsize=None)
def all_reduced_words(n: int) -> tuple[tuple[int, ...], ...]:
    """Every reduced word of the longest element, in sorted order.

    Breadth-first closure of the lexicographically minimal word under braid
    moves; by the word property this reaches all reduced words.  Desk scale
    only, same rank cap as braid_path.
    """
    if n > MAX_BRAID_RANK:
        raise ValueError(f"all_reduced_words supports rank <= {MAX_BRAID_RANK}")
    start = lex_min_word(n)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for word in frontier:
            for move in available_moves(word):
                other = apply_move(word, move)
                if other not in seen:
                    seen.add(other)
                    nxt.append(other)
        frontier = nxt
    return tuple(sorted(seen))
