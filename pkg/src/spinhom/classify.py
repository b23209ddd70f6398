"""Homogeneity and irreducibility classification at p = 3.

A strict partition is homogeneous when the modular reduction of its
character has all composition factors isomorphic.  The classifier is
table driven:

* non-special partitions (parts not all sharing one non-zero residue
  mod 3) are homogeneous exactly when they are a single row of size
  divisible by 3 (at least 6), a 3-bar core with a part 3 adjoined, or
  one of ten exceptional partitions;
* special partitions lam = nu + 3*alpha (nu the 3-bar core with the
  same length and residue class) are settled when alpha is empty, a
  single row, (1,1), (3,1) (homogeneous) or (2,1), a rectangle of
  height at least 2 other than (1,1), a shape whose last column has
  height at least 3, or one whose last two columns both have height 2
  (not homogeneous); every remaining special shape gets a conjectural
  verdict equal to the 3-Carter property of alpha.

``homogeneity_obstruction`` is the independent cross-check: it hunts
for any of four certificates that are impossible for a homogeneous
partition, so a certificate on a partition classified homogeneous is a
bug by construction.  ``classify_irreducible`` converts homogeneity
verdicts into irreducibility of the labelled modules for the three
module contexts via spin parity and the count of parts divisible by 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .barcores import bar_removals
from .branching import eps_hat, eps_i, extremal, ladder_obstruction, normal_extremal
from .dimensions import degree_witness
from .ladders import regularize
from .partitions import (
    Partition,
    PartitionError,
    conjugate,
    is_odd_partition,
    is_strict,
    parity_stats,
)

PROVEN_HOM = "ProvenHomogeneous"
PROVEN_NOT = "ProvenNotHomogeneous"
CONJ_HOM = "ConjecturallyHomogeneous"
CONJ_NOT = "ConjecturallyNotHomogeneous"

EXCEPTIONAL_HOMOGENEOUS: frozenset[Partition] = frozenset(
    {
        (2, 1),
        (3, 2, 1),
        (4, 3, 2),
        (4, 3, 2, 1),
        (5, 3, 2, 1),
        (5, 4, 3, 1),
        (5, 4, 3, 2),
        (5, 4, 3, 2, 1),
        (7, 4, 3, 2, 1),
        (8, 5, 3, 2, 1),
    }
)


@dataclass(frozen=True)
class SpecialDecomposition:
    core: Partition
    alpha: Partition
    residue_class: int  # 1 or 2, the common residue mod 3 of all parts


def special_decompose(lam: Partition) -> SpecialDecomposition | None:
    """Write lam as core + 3*alpha when all parts share a non-zero residue."""
    if not lam:
        return None
    residues = {a % 3 for a in lam}
    if len(residues) != 1 or residues == {0}:
        return None
    i = residues.pop()
    l = len(lam)
    core = tuple(3 * (l - r - 1) + i for r in range(l))
    alpha = tuple((lam[r] - core[r]) // 3 for r in range(l))
    alpha = tuple(a for a in alpha if a > 0)
    assert all((lam[r] - core[r]) % 3 == 0 and lam[r] >= core[r] for r in range(l))
    return SpecialDecomposition(core, alpha, i)


def carter3(alpha: Partition) -> bool:
    """Hook lengths in each column share their 3-adic valuation.

    Compared pairwise over rows r < s at every column of row s.
    """
    def val3(m: int) -> int:
        v = 0
        while m % 3 == 0:
            m //= 3
            v += 1
        return v

    conj = conjugate(alpha)

    def hook(r: int, c: int) -> int:
        return alpha[r - 1] - c + conj[c - 1] - r + 1

    for s in range(2, len(alpha) + 1):
        for r in range(1, s):
            for c in range(1, alpha[s - 1] + 1):
                if val3(hook(r, c)) != val3(hook(s, c)):
                    return False
    return True


@dataclass(frozen=True)
class Verdict:
    status: str
    reason: str

    @property
    def proven(self) -> bool:
        return self.status in (PROVEN_HOM, PROVEN_NOT)

    @property
    def homogeneous(self) -> bool:
        return self.status in (PROVEN_HOM, CONJ_HOM)


def _is_core_join_three(lam: Partition) -> bool:
    if 3 not in lam:
        return False
    rest = tuple(a for a in lam if a != 3)
    return not bar_removals(rest, 3)


def classify_homogeneous(lam: Partition) -> Verdict:
    """Homogeneity verdict of a strict partition at p = 3."""
    if not is_strict(lam):
        raise PartitionError(f"{lam} is not strict")
    if not bar_removals(lam, 3):
        return Verdict(PROVEN_HOM, "BarCore_weight0")
    special = special_decompose(lam)
    if special is None:
        if len(lam) == 1 and lam[0] % 3 == 0 and lam[0] >= 6:
            return Verdict(PROVEN_HOM, "H1_row")
        if _is_core_join_three(lam):
            return Verdict(PROVEN_HOM, "H2_core_join_3")
        if lam in EXCEPTIONAL_HOMOGENEOUS:
            return Verdict(PROVEN_HOM, "H3_exceptional")
        return Verdict(PROVEN_NOT, "Theorem_list")
    alpha = special.alpha
    if len(alpha) <= 1:
        return Verdict(PROVEN_HOM, "Special_l1")
    if alpha == (1, 1):
        return Verdict(PROVEN_HOM, "Special_rect_1_2")
    if len(set(alpha)) == 1:
        # rectangles of height >= 2 other than (1, 1)
        return Verdict(PROVEN_NOT, "Special_rect_not")
    cols = conjugate(alpha)
    if cols[alpha[0] - 1] >= 3:
        return Verdict(PROVEN_NOT, "Special_lastcol_ge3")
    if alpha[0] >= 2 and cols[alpha[0] - 1] == 2 and cols[alpha[0] - 2] == 2:
        return Verdict(PROVEN_NOT, "Special_two_cols_len2")
    if alpha == (2, 1):
        return Verdict(PROVEN_NOT, "Special_known_small")
    if alpha == (3, 1):
        return Verdict(PROVEN_HOM, "Special_known_small")
    return Verdict(CONJ_HOM if carter3(alpha) else CONJ_NOT, "Carter_conjecture")


# ---------------------------------------------------------------------------
# independent certificates of inhomogeneity


@dataclass(frozen=True)
class Certificate:
    kind: str  # "Obstruction_certificate", "Eps_mismatch", "Restriction_mismatch", "Degree_witness"
    residue: int | None = None
    witness: Partition | None = None


def homogeneity_obstruction(lam: Partition, p: int = 3) -> Certificate | None:
    """First found certificate incompatible with homogeneity, if any.

    Checked in order, over every residue: a removable node below an
    addable one in a longer ladder; a mismatch between the strict and
    regularised node counts; a mismatch between restricting then
    regularising and regularising then removing normal nodes; and a
    same-fibre partner of smaller reduced degree.
    """
    if not is_strict(lam):
        raise PartitionError(f"{lam} is not strict")
    reg = regularize(lam, p)
    for i in range((p - 1) // 2 + 1):
        if ladder_obstruction(lam, i, p):
            return Certificate("Obstruction_certificate", residue=i)
        if eps_hat(lam, i, p) != eps_i(reg, i, p):
            return Certificate("Eps_mismatch", residue=i)
        down = extremal(lam, i, p, "down").result
        if regularize(down, p) != normal_extremal(reg, i, p, "down"):
            return Certificate("Restriction_mismatch", residue=i)
    witness = degree_witness(lam, p)
    if witness is not None:
        return Certificate("Degree_witness", witness=witness)
    return None


# ---------------------------------------------------------------------------
# module-level irreducibility


@dataclass(frozen=True)
class IrredVerdict:
    context: str  # "super", "sn", "an"
    labels: tuple[str, ...]
    irreducible: bool
    proven: bool


def _label_names(lam: Partition, context: str) -> tuple[str, ...]:
    odd = is_odd_partition(lam)
    if context == "super":
        return ("S^lam [type Q]",) if odd else ("S^lam [type M]",)
    if context == "sn":
        return ("S^{lam,+}", "S^{lam,-}") if odd else ("S^lam",)
    if context == "an":
        return ("T^lam",) if odd else ("T^{lam,+}", "T^{lam,-}")
    raise PartitionError(f"unknown context {context!r}")


def classify_irreducible(lam: Partition, context: str, p: int = 3) -> IrredVerdict:
    """Irreducibility of the modules labelled by lam in the given context.

    The criterion is always "homogeneous and l_p small", where the
    bound on l_p (0 or 1) depends on the context and the spin parity:
    the relaxed bound 1 applies to supermodules of even partitions, the
    module pairs of odd partitions, and alternating-side pairs of even
    partitions.  A conjectural homogeneity verdict propagates whenever
    it is the deciding factor.
    """
    if p != 3:
        raise PartitionError("irreducibility classification is pinned to p=3")
    verdict = classify_homogeneous(lam)
    lp = parity_stats(lam, p).l_p
    odd = is_odd_partition(lam)
    if context == "super":
        bound = 0 if odd else 1
    elif context == "sn":
        bound = 1 if odd else 0
    elif context == "an":
        bound = 0 if odd else 1
    else:
        raise PartitionError(f"unknown context {context!r}")
    labels = _label_names(lam, context)
    if lp > bound:
        return IrredVerdict(context, labels, False, True)
    return IrredVerdict(context, labels, verdict.homogeneous, verdict.proven)
