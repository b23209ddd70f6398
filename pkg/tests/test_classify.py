import pytest

from spinhom.branching import extremal, phi_hat
from spinhom.classify import (
    CONJ_HOM,
    CONJ_NOT,
    EXCEPTIONAL_HOMOGENEOUS,
    PROVEN_HOM,
    PROVEN_NOT,
    IrredVerdict,
    SpecialDecomposition,
    Verdict,
    carter3,
    classify_homogeneous,
    classify_irreducible,
    homogeneity_obstruction,
    special_decompose,
)
from spinhom.partitions import PartitionError, parity_stats, scaled_add, strict_partitions_of
from spinhom.verify import matches_module_list


def test_special_decompose():
    assert special_decompose((7, 4)) == SpecialDecomposition((4, 1), (1, 1), 1)
    assert special_decompose((4, 1)) == SpecialDecomposition((4, 1), (), 1)
    assert special_decompose((6, 3)) is None
    assert special_decompose((5, 2)) == SpecialDecomposition((5, 2), (), 2)
    assert special_decompose((2, 1)) is None
    assert special_decompose(()) is None
    dec = special_decompose((11, 5, 2))
    assert dec is not None
    assert scaled_add(dec.core, 3, dec.alpha) == (11, 5, 2)


def test_carter3():
    assert carter3(())
    assert carter3((7,))
    assert not carter3((2, 1))
    assert not carter3((1, 1, 1))
    assert carter3((3, 1))
    assert carter3((1, 1))
    # any column of height 3 and the double-column pattern fail
    assert not carter3((2, 2, 2))
    assert not carter3((3, 3))


def test_classify_examples():
    assert classify_homogeneous((6, 4, 3, 2, 1)) == Verdict(PROVEN_NOT, "Theorem_list")
    assert classify_homogeneous((8, 5, 3, 2, 1)) == Verdict(PROVEN_HOM, "H3_exceptional")
    assert classify_homogeneous((10, 7)) == Verdict(PROVEN_NOT, "Special_rect_not")
    assert classify_homogeneous((6,)) == Verdict(PROVEN_HOM, "H1_row")
    assert classify_homogeneous((9,)) == Verdict(PROVEN_HOM, "H1_row")
    assert classify_homogeneous((3,)) == Verdict(PROVEN_HOM, "H2_core_join_3")
    assert classify_homogeneous((5, 3, 2)) == Verdict(PROVEN_HOM, "H2_core_join_3")
    assert classify_homogeneous((4, 1)) == Verdict(PROVEN_HOM, "BarCore_weight0")
    assert classify_homogeneous(()) == Verdict(PROVEN_HOM, "BarCore_weight0")
    assert classify_homogeneous((10, 1)) == Verdict(PROVEN_HOM, "Special_l1")
    assert classify_homogeneous((7, 4)) == Verdict(PROVEN_HOM, "Special_rect_1_2")
    assert classify_homogeneous((13, 10, 1)) == Verdict(PROVEN_NOT, "Special_rect_not")
    assert classify_homogeneous((16, 13, 10, 4)) == Verdict(PROVEN_NOT, "Special_lastcol_ge3")
    assert classify_homogeneous((16, 13, 4)) == Verdict(PROVEN_NOT, "Special_two_cols_len2")
    assert classify_homogeneous((13, 7, 1)) == Verdict(PROVEN_NOT, "Special_known_small")
    assert classify_homogeneous((16, 7, 1)) == Verdict(PROVEN_HOM, "Special_known_small")
    with pytest.raises(PartitionError):
        classify_homogeneous((3, 3))


def test_one_row_family():
    # single rows are always homogeneous, whatever the residue
    for m in range(1, 30):
        assert classify_homogeneous((m,)).status == PROVEN_HOM


def test_two_row_hook_family():
    # (m, 1) with m + 1 >= 5: homogeneous exactly when m + 1 is not 0 or 1 mod 3
    for m in range(4, 25):
        verdict = classify_homogeneous((m, 1))
        want = (m + 1) % 3 == 2
        assert verdict.homogeneous == want, m
        assert verdict.proven


def test_conjectural_verdicts():
    # smallest shapes outside every settled case
    v = classify_homogeneous(scaled_add((10, 7, 4, 1), 3, (2, 2, 1)))
    assert v.status in (CONJ_HOM, CONJ_NOT) and v.reason == "Carter_conjecture"
    assert v.status == (CONJ_HOM if carter3((2, 2, 1)) else CONJ_NOT)
    v41 = classify_homogeneous(scaled_add((13, 10, 7, 4, 1), 3, (4, 1)))
    assert v41.status == (CONJ_HOM if carter3((4, 1)) else CONJ_NOT)


def test_exceptional_list_is_homogeneous_and_nonspecial():
    for lam in EXCEPTIONAL_HOMOGENEOUS:
        assert special_decompose(lam) is None
        assert classify_homogeneous(lam).status == PROVEN_HOM


def test_obstruction_examples():
    cert = homogeneity_obstruction((9, 6, 3))
    assert cert is not None and cert.kind == "Degree_witness" and cert.witness == (8, 7, 3)
    assert homogeneity_obstruction((8, 5, 3, 2, 1)) is None
    assert homogeneity_obstruction((6,)) is None


def test_obstruction_soundness_small():
    for n in range(20):
        for lam in strict_partitions_of(n):
            if classify_homogeneous(lam).status == PROVEN_HOM:
                assert homogeneity_obstruction(lam) is None, lam


def test_classify_irreducible_examples():
    verdict = classify_irreducible((6,), "sn")
    assert verdict.irreducible and verdict.proven
    assert verdict.labels == ("S^{lam,+}", "S^{lam,-}")
    assert not classify_irreducible((6,), "an").irreducible  # l_3 = 1 > bound 0 for odd
    assert not classify_irreducible((4, 3, 2), "sn").irreducible
    assert classify_irreducible((4, 3, 2), "an").irreducible
    assert classify_irreducible((2, 1), "an") == IrredVerdict("an", ("T^lam",), True, True)
    assert classify_irreducible((2, 1), "sn").irreducible
    with pytest.raises(PartitionError):
        classify_irreducible((5,), "weird")


def test_super_bounds():
    # odd partitions need l_3 = 0 as supermodules, even ones allow 1
    assert parity_stats((3, 2, 1), 3).spin_parity == "odd"
    assert classify_irreducible((3, 2, 1), "super").irreducible is False
    assert classify_irreducible((3, 2, 1), "sn").irreducible is True
    assert classify_irreducible((4, 3, 2), "super").irreducible  # even, l_3 = 1


def test_phi_zero_corollary_small():
    for n in range(1, 18):
        for lam in strict_partitions_of(n):
            verdict = classify_homogeneous(lam)
            for i in (0, 1):
                if phi_hat(lam, i, 3) != 0:
                    continue
                down = extremal(lam, i, 3, "down").result
                sub = classify_homogeneous(down)
                if verdict.proven and sub.proven:
                    assert (verdict.status == PROVEN_HOM) == (sub.status == PROVEN_HOM), (lam, i)


def test_module_list_membership():
    assert matches_module_list((6,), "sn")
    assert matches_module_list((3,), "an")
    assert matches_module_list((9,), "an")
    assert not matches_module_list((9,), "sn")
    assert matches_module_list((5, 3, 2, 1), "sn")
    assert matches_module_list((8, 5, 3, 2, 1), "an")
    assert not matches_module_list((8, 5, 3, 2, 1), "sn")
