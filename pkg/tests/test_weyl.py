import pytest

from mvlab.weyl import (
    Move,
    all_reduced_words,
    apply_move,
    available_moves,
    braid_path,
    is_reduced_word_of_w0,
    lex_min_word,
    num_positive_roots,
    pi_pairs,
    root_vector,
    roots_in_order,
    transition,
    transition_along,
    word_to_perm,
)


def test_lex_min_words():
    assert lex_min_word(1) == (1,)
    assert lex_min_word(2) == (1, 2, 1)
    assert lex_min_word(3) == (1, 2, 1, 3, 2, 1)


def test_pi_pairs_order():
    assert pi_pairs(2) == ((1, 2), (1, 3), (2, 3))
    assert pi_pairs(3) == ((1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4))
    assert len(pi_pairs(4)) == num_positive_roots(4) == 10


def test_roots_in_order_matches_word():
    assert roots_in_order(2, (1, 2, 1)) == ((1, 2), (1, 3), (2, 3))
    assert roots_in_order(2, (2, 1, 2)) == ((2, 3), (1, 3), (1, 2))
    # the lexicographically minimal word lists roots in the pi order
    for n in (1, 2, 3, 4):
        assert roots_in_order(n, lex_min_word(n)) == pi_pairs(n)


def test_roots_in_order_rejects_non_reduced():
    with pytest.raises(ValueError):
        roots_in_order(2, (1, 1, 2))


def test_is_reduced_word_of_w0():
    assert is_reduced_word_of_w0(2, (1, 2, 1))
    assert is_reduced_word_of_w0(2, (2, 1, 2))
    assert not is_reduced_word_of_w0(2, (1, 2, 2))
    assert not is_reduced_word_of_w0(2, (1, 2))


def test_word_to_perm_longest():
    # w0 reverses 1..n+1
    assert word_to_perm(2, (1, 2, 1)) == (3, 2, 1)
    assert word_to_perm(3, lex_min_word(3)) == (4, 3, 2, 1)


def test_all_reduced_words_counts():
    """Reduced word counts for the longest element: 1, 2, 16 at ranks 1..3."""
    assert len(all_reduced_words(1)) == 1
    assert len(all_reduced_words(2)) == 2
    words3 = all_reduced_words(3)
    assert len(words3) == 16
    assert all(is_reduced_word_of_w0(3, w) for w in words3)
    assert len(set(words3)) == 16


def test_root_vector():
    assert root_vector(3, (1, 2)) == (1, 0, 0)
    assert root_vector(3, (2, 4)) == (0, 1, 1)
    with pytest.raises(ValueError):
        root_vector(2, (2, 2))


def test_transition_three_move():
    # swapping 121 -> 212 sends (a, b, c) to (b+c-p, p, a+b-p) with p = min(a, c)
    assert transition(2, (1, 0, 0), (1, 2, 1), (2, 1, 2)) == (0, 0, 1)
    assert transition(2, (1, 2, 0), (1, 2, 1), (2, 1, 2)) == (2, 0, 3)
    assert transition(2, (0, 0, 1), (2, 1, 2), (1, 2, 1)) == (1, 0, 0)


def test_transition_round_trip():
    data = [(0, 0, 0), (1, 2, 3), (5, 0, 2), (2, 2, 2)]
    for entries in data:
        moved = transition(2, entries, (1, 2, 1), (2, 1, 2))
        assert transition(2, moved, (2, 1, 2), (1, 2, 1)) == entries


def test_transition_preserves_nonnegativity():
    for word in all_reduced_words(3):
        out = transition(3, (1, 2, 0, 3, 1, 1), lex_min_word(3), word)
        assert all(v >= 0 for v in out)


def test_braid_path_single_move():
    path = braid_path(2, (1, 2, 1), (2, 1, 2))
    assert path == (Move(kind="3move", pos=1),)


def test_braid_path_replays_to_target():
    words = all_reduced_words(3)
    start = lex_min_word(3)
    for target in words:
        cur = start
        for move in braid_path(3, start, target):
            cur = apply_move(cur, move)
        assert cur == target


def test_transition_along_matches_transition():
    start, target = (1, 2, 1, 3, 2, 1), (3, 2, 1, 3, 2, 3)
    assert is_reduced_word_of_w0(3, target)
    path = braid_path(3, start, target)
    entries = (1, 0, 2, 0, 1, 3)
    assert transition_along(entries, path) == transition(3, entries, start, target)


def test_available_moves_cover_both_kinds():
    kinds = {m.kind for m in available_moves((1, 2, 1, 3, 2, 1))}
    assert "3move" in kinds
    assert any(m.kind == "2move" for m in available_moves((2, 1, 3, 2, 1, 2)))
