import pytest

from spinhom.dimensions import spin_dim
from spinhom.ladders import content
from spinhom.partitions import PartitionError, scaled_add, strict_partitions_of
from spinhom.tableaux import (
    ShiftedTableau,
    count_sst,
    enumerate_sst,
    find_patterned_tableau,
)


def test_single_row_single_tableau():
    tabs = list(enumerate_sst((5,)))
    assert tabs == [ShiftedTableau(((1, 2, 3, 4, 5),))]


def test_small_counts():
    assert count_sst((2, 1)) == 1
    assert count_sst((3, 2, 1)) == 2
    assert len(list(enumerate_sst((3, 2, 1)))) == 2


def test_counts_match_bar_length_factor():
    for n in range(13):
        for lam in strict_partitions_of(n):
            tabs = list(enumerate_sst(lam))
            assert len(tabs) == len(set(tabs)) == count_sst(lam) == spin_dim(lam).g, lam


def test_every_tableau_is_standard():
    for n in range(11):
        for lam in strict_partitions_of(n):
            for tab in enumerate_sst(lam):
                assert tab.is_standard(), (lam, tab)


def test_enumeration_deterministic():
    first = list(enumerate_sst((5, 3, 1)))
    second = list(enumerate_sst((5, 3, 1)))
    assert first == second


def test_residue_words():
    (tab,) = enumerate_sst((2, 1))
    assert tab.residue_word(3) == (0, 1, 0)
    for lam in ((4, 2, 1), (5, 3)):
        want = sorted(k for k, v in content(lam, 3).items() for _ in range(v))
        for tab in enumerate_sst(lam):
            assert sorted(tab.residue_word(3)) == want


def test_patterned_tableau_families():
    for l in (3, 4):
        nu = tuple(range(3 * l - 2, 0, -3))
        for d in range(1, min(l, 3) + 1):
            lam = scaled_add(nu, 3, (1,) * d)
            tab = find_patterned_tableau(lam, nu, 3)
            assert tab is not None, (l, d)
            word = tab.residue_word(3)
            base = sum(nu)
            for j in range(d):
                assert sorted(word[base + 3 * j : base + 3 * j + 3]) == [0, 0, 1]
            # the prefix entries really fill the core shape
            for k in range(1, base + 1):
                r, c = tab.position(k)
                assert c <= nu[r - 1]


def test_patterned_tableau_full_prefix():
    tab = find_patterned_tableau((4, 3, 1), (4, 3, 1), 3)
    assert tab is not None and tab.shape == (4, 3, 1)


def test_patterned_tableau_malformed_region():
    with pytest.raises(PartitionError):
        find_patterned_tableau((5, 3, 1), (4, 3, 1), 3)
    with pytest.raises(PartitionError):
        find_patterned_tableau((4, 3, 1), (5,), 3)
