import pytest

from mvlab.maya import MayaDiagram, all_maya, components, k_tableaux


def test_of_validates():
    K = MayaDiagram.of(2, (1, 3))
    assert K.members == frozenset({1, 3})
    with pytest.raises(ValueError):
        MayaDiagram.of(2, ())
    with pytest.raises(ValueError):
        MayaDiagram.of(2, (1, 2, 3))  # the full set is excluded
    with pytest.raises(ValueError):
        MayaDiagram.of(2, (0, 1))
    with pytest.raises(ValueError):
        MayaDiagram.of(2, (4,))


def test_all_maya_counts():
    # proper nonempty subsets of [1, n+1]
    assert len(all_maya(1)) == 2
    assert len(all_maya(2)) == 6
    assert len(all_maya(3)) == 14
    assert len(set(all_maya(3))) == 14


def test_components_intervals():
    K = MayaDiagram.of(17, (3, 4, 7, 8, 10, 11, 12, 14, 15))
    comps = components(K)
    assert comps.intervals == ((3, 4), (7, 8), (10, 12), (14, 15))
    assert comps.outs == (4, 8, 12, 15)
    assert comps.ins == (2, 6, 9, 13)


def test_components_single_interval():
    comps = components(MayaDiagram.of(3, (2, 3)))
    assert comps.intervals == ((2, 3),)
    assert comps.outs == (3,)
    assert comps.ins == (1,)
    assert comps.first_gap == 1
    assert comps.last_member == 3


def test_reflect_swaps_membership():
    K = MayaDiagram.of(3, (2, 4))
    assert K.reflect(1).members == frozenset({1, 4})
    assert K.reflect(2).members == frozenset({3, 4})
    assert K.reflect(3).members == frozenset({2, 3})
    both_in = MayaDiagram.of(3, (2, 3))
    assert both_in.reflect(2) is both_in  # both in the set: nothing to do


def test_k_tableaux_suffix_is_unique():
    # a suffix interval forces every row, so exactly one tableau exists
    assert len(list(k_tableaux(MayaDiagram.of(2, (3,))))) == 1
    assert len(list(k_tableaux(MayaDiagram.of(3, (2, 3, 4))))) == 1


def test_k_tableaux_split_count():
    # K = {i} followed by the suffix [i+2, n+1] admits n+1-i tableaux
    assert len(list(k_tableaux(MayaDiagram.of(2, (1, 3))))) == 2
    assert len(list(k_tableaux(MayaDiagram.of(3, (2, 4))))) == 2
    assert len(list(k_tableaux(MayaDiagram.of(3, (1, 3, 4))))) == 3


def test_k_tableaux_shape_and_monotonicity():
    K = MayaDiagram.of(3, (2, 4))
    for tab in k_tableaux(K):
        # row p spans columns p..l with the diagonal pinned to sorted members
        assert tab[0][0] == 2 and tab[1][0] == 4
        for row in tab:
            assert all(x <= y for x, y in zip(row, row[1:]))
        # columns strictly increase: row 0 col 1 sits above row 1 col 1
        assert tab[0][1] < tab[1][0]
