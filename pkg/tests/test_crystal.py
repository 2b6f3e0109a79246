import pytest

from mvlab.crystal import (
    CrystalOp,
    LusztigDatum,
    apply_op,
    count_by_height,
    enumerate_by_height,
    epsilon,
    epsilon_star,
    h_pairing,
    lowering,
    m_vector,
    parse_ops,
    phi,
    phi_star,
    raising,
    star_lowering,
    star_raising,
    weight,
)


def _lower_word(n, letters):
    a = LusztigDatum.zero(n)
    for i in letters:
        a = lowering(a, i)
    return a


def test_datum_validation():
    with pytest.raises(ValueError):
        LusztigDatum(2, (1, 0))
    with pytest.raises(ValueError):
        LusztigDatum(2, (1, -1, 0))
    with pytest.raises(ValueError):
        LusztigDatum(0, ())


def test_datum_get_conventional_zeros():
    a = LusztigDatum(2, (1, 2, 3))
    assert a.get(1, 2) == 1
    assert a.get(0, 1) == 0
    assert a.get(2, 4) == 0
    assert a.get(1, 1) == 0
    with pytest.raises(ValueError):
        a.get(3, 2)


def test_from_dict_and_nonzero_round_trip():
    cells = {(1, 3): 2, (2, 3): 5}
    a = LusztigDatum.from_dict(2, cells)
    assert a.entries == (0, 2, 5)
    assert a.nonzero() == cells


def test_weight_and_m_vector():
    a = LusztigDatum(2, (1, 2, 0))
    assert m_vector(a) == (3, 2)
    assert weight(a) == (-3, -2)
    assert h_pairing(weight(a), 1) == -4
    assert h_pairing(weight(a), 2) == -1


def test_lowering_chain():
    assert _lower_word(2, [1]).entries == (1, 0, 0)
    assert _lower_word(2, [1, 1]).entries == (2, 0, 0)
    assert _lower_word(2, [1, 2]).entries == (0, 1, 0)
    assert _lower_word(2, [2, 1]).entries == (1, 0, 1)


def test_raising_at_bottom():
    zero = LusztigDatum.zero(2)
    assert raising(zero, 1) is None
    assert raising(zero, 2) is None
    assert star_raising(zero, 1) is None


def test_raising_inverts_lowering():
    for entries in [(0, 0, 0), (1, 2, 0), (2, 1, 3), (0, 0, 4)]:
        a = LusztigDatum(2, entries)
        for i in (1, 2):
            assert raising(lowering(a, i), i) == a
            assert star_raising(star_lowering(a, i), i) == a


def test_lowering_changes_statistics_by_one():
    a = LusztigDatum(3, (1, 0, 2, 1, 0, 1))
    for i in (1, 2, 3):
        b = lowering(a, i)
        assert epsilon(b, i) == epsilon(a, i) + 1
        assert phi(b, i) == phi(a, i) - 1
        # the weight drops by the i-th simple root
        wa, wb = weight(a), weight(b)
        assert tuple(x - y for x, y in zip(wa, wb)) == tuple(
            1 if k == i else 0 for k in range(1, 4)
        )


def test_epsilon_values():
    a = LusztigDatum(2, (1, 0, 0))
    assert epsilon(a, 1) == 1
    assert epsilon(a, 2) == 0
    assert epsilon_star(a, 1) == 1
    assert epsilon_star(a, 2) == 0


def test_star_lowering_values():
    a = LusztigDatum(2, (1, 0, 0))
    assert star_lowering(a, 1).entries == (2, 0, 0)
    assert star_lowering(a, 2).entries == (1, 0, 1)


def test_phi_can_go_negative():
    """In this crystal phi is epsilon plus a pairing and may be negative."""
    b = LusztigDatum(2, (0, 1, 0))
    assert phi(b, 1) == -1
    assert phi_star(b, 1) == 0


def test_ordered_lowering_identity():
    """Applying f1^m f2^{m+k} f1^k to the bottom equals f2^k f1^{m+k} f2^m."""
    for m in range(4):
        for k in range(4):
            left = _lower_word(2, [1] * k + [2] * (m + k) + [1] * m)
            right = _lower_word(2, [2] * m + [1] * (m + k) + [2] * k)
            assert left == right


def test_ordered_lowering_identity_concrete():
    left = _lower_word(2, [1, 2, 2, 2, 1, 1])    # f1^2 f2^3 f1^1
    right = _lower_word(2, [2, 2, 1, 1, 1, 2])   # f2^1 f1^3 f2^2
    assert left.entries == (2, 1, 2)
    assert left == right


def test_commuting_word_pair():
    assert _lower_word(2, [1, 2, 2, 1]) == _lower_word(2, [2, 1, 1, 2])


def test_parse_ops():
    ops = parse_ops("f1 f2 e*1", 2)
    assert ops == (CrystalOp("f", 1), CrystalOp("f", 2), CrystalOp("e*", 1))
    with pytest.raises(ValueError):
        parse_ops("g1", 2)
    with pytest.raises(ValueError):
        parse_ops("f3", 2)
    with pytest.raises(ValueError):
        parse_ops("f0", 2)


def test_apply_op_dispatch():
    a = LusztigDatum(2, (1, 0, 0))
    assert apply_op(a, CrystalOp("f", 1)) == lowering(a, 1)
    assert apply_op(a, CrystalOp("e", 1)) == raising(a, 1)
    assert apply_op(a, CrystalOp("f*", 2)) == star_lowering(a, 2)
    assert apply_op(LusztigDatum.zero(2), CrystalOp("e*", 1)) is None


def test_count_by_height():
    assert count_by_height(2, 1) == 4
    assert count_by_height(2, 2) == 10
    assert count_by_height(3, 5) == 462


def test_enumerate_by_height():
    items = list(enumerate_by_height(2, 2))
    assert len(items) == 10
    assert len({a.entries for a in items}) == 10
    assert all(a.total() <= 2 for a in items)


def test_enumerate_budget_guard(monkeypatch):
    monkeypatch.setenv("MVLAB_MAX_CELLS", "10")
    with pytest.raises(ValueError):
        list(enumerate_by_height(3, 5))
    monkeypatch.delenv("MVLAB_MAX_CELLS")
    assert len(list(enumerate_by_height(2, 1))) == 4
