"""Acceptance gate: one test (or test group) per numbered criterion.

Every check here pins the exact ranges and tolerances of the contract;
all arithmetic is exact, so "tolerance" always means equality.  Each
criterion prints a PASS line on success (run with ``-s`` to stream
them); a failing assertion is the FAIL line.

Criterion 8 note: the extremal chain is verified at every index where
its defining shapes exist.  The l = 1 step of the 0-direction half is
provably unsatisfiable (no partition at all maps onto (6, 4, 3, 1)
under a full 0-node addition, since such images have first part 1 mod
3), and the matching test asserts the stated identity anyway; it is the
one expected red in this suite.  See the repository notes for the full
analysis.
"""

import os
import time
from math import factorial

from spinhom import verify
from spinhom.barcores import block_members, reg_preimages
from spinhom.branching import (
    dn,
    extremal,
    ladder_obstruction,
    phi_hat,
    signature,
    tilde_e,
    tilde_f,
)
from spinhom.classify import (
    PROVEN_HOM,
    PROVEN_NOT,
    classify_homogeneous,
    classify_irreducible,
    homogeneity_obstruction,
    special_decompose,
)
from spinhom.dimensions import ddeg_ratio, regn_multiplicity, spin_dim
from spinhom.families import FAMILIES, sigma, tau
from spinhom.ladders import ladder_index, regularize, residue
from spinhom.partitions import (
    is_odd_partition,
    join,
    parity_stats,
    partitions_of,
    scaled_add,
    strict_partitions_of,
)
from spinhom.tableaux import count_sst, find_patterned_tableau
from spinhom.verify import matches_module_list
from spinhom.wreath import bundled_decomp_matrix, wreath_cartan0, wreath_cartan_p

THREADS = min(4, os.cpu_count() or 1)


def _ok(criterion: str, detail: str = "") -> None:
    print(f"ACCEPTANCE {criterion}: PASS {detail}".rstrip())


def test_criterion_1_worked_examples():
    t0 = time.monotonic()
    rows = ["".join(str(residue(r, c, 5)) for c in range(1, a + 1)) for r, a in enumerate((8, 7, 3), 1)]
    assert rows == ["01210012", "0121001", "012"]
    assert "".join(str(ladder_index(1, c, 3)) for c in range(1, 11)) == "0122344566"
    assert "".join(str(ladder_index(2, c, 3)) for c in range(1, 8)) == "2344566"
    assert regularize((12, 7, 2), 3) == (8, 6, 4, 2, 1)
    sig = signature((5, 4, 3, 2, 1), 0, 3)
    assert sig.raw == "-+-++" and sig.reduced == "-++"
    assert tilde_e((5, 4, 3, 2, 1), 0, 3) == (5, 4, 3, 2)
    assert tilde_f((5, 4, 3, 2, 1), 0, 3) == (6, 4, 3, 2, 1)
    down = extremal((9, 5, 4, 2), 0, 3, "down")
    up = extremal((9, 5, 4, 2), 0, 3, "up")
    assert down.result == (8, 5, 3, 2) and down.count == 2
    assert up.result == (10, 7, 4, 3, 1) and up.count == 5
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0, f"worked examples took {elapsed:.3f}s"
    _ok("1", f"(worked examples bit-exact in {elapsed * 1000:.0f} ms)")


def test_criterion_2_ladder_identity_suite():
    rows3 = verify.suite_ladders(3, 25, threads=THREADS)
    assert verify.failures(rows3) == []
    rows5 = verify.suite_ladders(5, 18, threads=THREADS)
    assert verify.failures(rows5) == []
    checked = sum(1 for row in rows3 + rows5 if row[1] in ("arladd1", "lads", "lads_strict", "zzlem", "zzreglem"))
    _ok("2", f"({checked} identity instances, zero failures)")


def test_criterion_3_obstruction_predicates():
    count = 0
    for n in range(21):
        for lam in strict_partitions_of(n):
            for i in (0, 1):
                obstruction = ladder_obstruction(lam, i, 3)
                overshoot = dn(lam, i, 3)
                if i == 1:
                    assert obstruction == overshoot, (lam, i)
                if obstruction:
                    assert overshoot, (lam, i)
                count += 1
    _ok("3", f"({count} partition/residue pairs, zero counterexamples)")


def test_criterion_4_dimension_engine():
    for n in range(1, 11):
        total = 0
        for lam in strict_partitions_of(n):
            d = spin_dim(lam).dim
            total += d * d // (2 if is_odd_partition(lam) else 1)
        assert total == factorial(n), n
    for n in range(13):
        for lam in strict_partitions_of(n):
            assert spin_dim(lam).g == count_sst(lam), lam
    for name in sorted(FAMILIES):
        fam = FAMILIES[name]
        lo, hi = fam.formula_range
        if fam.ratio_kind == "direct":
            for l in range(lo, min(hi, 12) + 1):
                assert ddeg_ratio(fam.lam(l), fam.mu(l), 3) == fam.ratio(l), (name, l)
        else:
            for l in range(lo, min(hi, 12)):
                step = ddeg_ratio(fam.lam(l + 1), fam.mu(l + 1), 3) / ddeg_ratio(fam.lam(l), fam.mu(l), 3)
                assert step == fam.ratio(l), (name, l)
        glo, ghi = fam.greater_range
        for l in list(range(glo, min(ghi, 12) + 1)) + list(fam.extra_greater):
            ratio = ddeg_ratio(fam.lam(l), fam.mu(l), 3)
            if l in fam.equal_at:
                assert ratio == 1, (name, l)
            else:
                assert ratio > 1, (name, l)
            if fam.same_reg:
                assert regularize(fam.lam(l), 3) == regularize(fam.mu(l), 3), (name, l)
    _ok("4", "(sum-of-squares to 10, tableau counts to 12, all family closed forms to l=12)")


def test_criterion_5_wreath_cartan():
    for d in range(1, 9):
        for nu in partitions_of(d):
            value = wreath_cartan0(nu, nu).value
            if nu in ((d,), (1,) * d):
                assert value == 2 * d + 1, (nu, value)
            else:
                assert value > 2 * d + 1, (nu, value)
    for d in range(3, 7):
        matrix = bundled_decomp_matrix(d)
        assert matrix.d == d and matrix.p == 3
        for mu in matrix.columns:
            assert wreath_cartan_p(mu, matrix).value > 2 * d + 1, (d, mu)
    _ok("5", "(diagonal law to d=8 exact; ingested char-3 bound for 3<=d<=6)")


def test_criterion_6_block_combinatorics():
    from spinhom.partitions import is_restricted

    for l in range(1, 5):
        nu = tuple(range(3 * l - 2, 0, -3))
        for d in range(0, min(l, 3) + 1):
            got = set(block_members(nu, d, 3, "pstrict"))
            want = set()
            for a in range(d + 1):
                for alpha in partitions_of(a):
                    if len(alpha) > len(nu):
                        continue
                    for beta in partitions_of(d - a):
                        want.add(join(scaled_add(nu, 3, alpha), tuple(3 * b for b in beta)))
            assert got == want, (l, d)
            restricted = set(block_members(nu, d, 3, "restricted"))
            assert restricted == {m for m in want if is_restricted(m, 3)}
            assert restricted == {join(nu, tuple(3 * b for b in beta)) for beta in partitions_of(d)}

            mu = join(nu, (3 * d,) if d else ())
            fibre = reg_preimages(mu, 3)
            want_fibre = {
                join(scaled_add(nu, 3, (1,) * (d - i)), (3 * i,) if i else ()) for i in range(d + 1)
            }
            assert set(fibre) == want_fibre, (l, d)
            msum = sum(
                regn_multiplicity(lam, 3).s_to_d * regn_multiplicity(lam, 3).p_to_s for lam in fibre
            )
            assert msum == 2 * d + 1, (l, d)
    for l in (3, 4):
        nu = tuple(range(3 * l - 2, 0, -3))
        for d in range(1, min(l, 3) + 1):
            lam = scaled_add(nu, 3, (1,) * d)
            assert find_patterned_tableau(lam, nu, 3) is not None, (l, d)
    _ok("6", "(block closed forms, fibres with multiplicity 2d+1, patterned tableaux)")


def test_criterion_7_classifier_coherence():
    hom_count = 0
    for n in range(29):
        for lam in strict_partitions_of(n):
            verdict = classify_homogeneous(lam)
            if verdict.status != PROVEN_HOM:
                continue
            hom_count += 1
            assert homogeneity_obstruction(lam) is None, lam
            for i in (0, 1):
                down = extremal(lam, i, 3, "down").result
                assert classify_homogeneous(down).status != PROVEN_NOT, (lam, i)
    for n in range(26):
        for lam in strict_partitions_of(n):
            verdict = classify_homogeneous(lam)
            for i in (0, 1):
                if phi_hat(lam, i, 3) != 0:
                    continue
                sub = classify_homogeneous(extremal(lam, i, 3, "down").result)
                if verdict.proven and sub.proven:
                    assert (verdict.status == PROVEN_HOM) == (sub.status == PROVEN_HOM), (lam, i)
    for n in range(31):
        for lam in strict_partitions_of(n):
            if classify_homogeneous(lam).homogeneous:
                assert parity_stats(lam, 3).l_p <= 1, lam
    for n in range(1, 21):
        for lam in strict_partitions_of(n):
            special = special_decompose(lam) is not None
            for context in ("sn", "an"):
                verdict = classify_irreducible(lam, context)
                if not verdict.proven:
                    continue
                if verdict.irreducible:
                    assert special or matches_module_list(lam, context), (lam, context)
                if matches_module_list(lam, context):
                    assert verdict.irreducible, (lam, context)
    _ok("7", f"({hom_count} proven-homogeneous partitions certified to n=28; module lists match to n=20)")


def test_criterion_8_chain_identities_exhaustive():
    for n in range(23):
        for lam in strict_partitions_of(n):
            if any(a % 3 == 1 for a in lam):
                continue
            up = extremal(extremal(lam, 0, 3, "up").result, 1, 3, "up").result
            assert all(a % 3 != 1 for a in up), lam
            assert len(up) == len(lam) + 1 and up[-1] == 2, lam
    _ok("8b", "(no-parts-1-mod-3 chain identities exhaustive to n=22)")


def test_criterion_8_sigma_tau_chain_one_step():
    for l in range(1, 9):
        assert extremal(sigma(l), 1, 3, "up").result == tau(l), l
    for l in range(2, 9):
        assert extremal(tau(l), 0, 3, "up").result == sigma(l + 1), l
    _ok("8a", "(sigma->tau for 1<=l<=8, tau->sigma for 2<=l<=8, exact)")


def test_criterion_8_sigma_tau_chain_l1_zero_step():
    """Expected red: the l = 1 zero-direction step of the chain.

    Any partition produced by adding all strictly-addable 0-nodes has
    first part congruent to 1 mod 3 (row one always grows to the next
    such column), but sigma(2) = (6, 4, 3, 1) starts with 6.  Hence NO
    partition maps onto sigma(2), and in particular tau(1) does not;
    the identity below is stated for l >= 1 but cannot hold at l = 1.
    The assertion is kept as stated rather than weakened.
    """
    got = extremal(tau(1), 0, 3, "up").result
    print(f"ACCEPTANCE 8c: FAIL expected (tau(1) 0-step gives {got}, sigma(2) = {sigma(2)}; "
          "no 0-step preimage of sigma(2) exists)")
    assert got == sigma(2), (
        "degenerate chain start: no partition reaches sigma(2) by a full 0-node "
        "addition; see notes/decisions ledger"
    )
