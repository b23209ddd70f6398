"""Exact dimension arithmetic for strict-partition labelled characters.

The dimension of the character labelled by a strict partition lam of n
is given by Schur's bar-length product formula

    dim = 2^ceil((n - l)/2) * n! / prod(lam_r!)
          * prod_{r<s} (lam_r - lam_s) / prod_{r<s} (lam_r + lam_s),

with l = l(lam).  Writing g for the factor after the power of two, g is
a positive integer (asserted on every call) equal to the number of
standard shifted tableaux of shape lam.

Dividing the dimension by the regularisation multiplicity
2^((l_p + x - y)/2) (x the spin parity of lam, y its p-parity) leaves
the reduced degree

    ddeg = 2^ceil((n - l - l_p)/2) * g,

the statistic compared inside a regularisation fibre: a strict partner
with the same regularisation and smaller ddeg certifies inhomogeneity.
Every quantity here is exact; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .barcores import reg_preimages
from .ladders import is_p_odd, regularize
from .partitions import Partition, PartitionError, is_strict, parity_stats


@dataclass(frozen=True)
class DimensionReport:
    dim: int
    g: int
    two_exp: int


def _tableau_factor(lam: Partition) -> int:
    """n!/prod(lam_r!) * prod(lam_r - lam_s)/prod(lam_r + lam_s), exactly."""
    n = sum(lam)
    val = Fraction(factorial(n))
    for a in lam:
        val /= factorial(a)
    for r in range(len(lam)):
        for s in range(r + 1, len(lam)):
            val *= Fraction(lam[r] - lam[s], lam[r] + lam[s])
    assert val.denominator == 1, f"bar-length product not integral on {lam}"
    return int(val)


def spin_dim(lam: Partition) -> DimensionReport:
    if not is_strict(lam):
        raise PartitionError(f"{lam} is not strict")
    n = sum(lam)
    two_exp = (n - len(lam) + 1) // 2
    g = _tableau_factor(lam)
    assert g >= 1 or not lam
    return DimensionReport((1 << two_exp) * g, g, two_exp)


@dataclass(frozen=True)
class RegnMultiplicities:
    s_to_d: int
    p_to_s: int
    x: int
    y: int


def regn_multiplicity(lam: Partition, p: int) -> RegnMultiplicities:
    """The two regularisation-column multiplicities, both powers of two.

    Their product is 2^l_p(lam); the exponents (l_p +- (x - y))/2 are
    non-negative integers (asserted, not assumed).
    """
    if not is_strict(lam):
        raise PartitionError(f"{lam} is not strict")
    stats = parity_stats(lam, p)
    x = stats.x
    y = 1 if is_p_odd(lam, p) else 0
    up, down = stats.l_p + x - y, stats.l_p + y - x
    assert up % 2 == 0 and up >= 0 and down >= 0, (lam, p, up, down)
    return RegnMultiplicities(1 << (up // 2), 1 << (down // 2), x, y)


def ddeg(lam: Partition, p: int) -> int:
    """Reduced degree: dimension divided by the regularisation multiplicity."""
    report = spin_dim(lam)
    stats = parity_stats(lam, p)
    exp = (sum(lam) - len(lam) - stats.l_p + 1) // 2
    value = (1 << exp) * report.g
    mult = regn_multiplicity(lam, p)
    assert value * mult.s_to_d == report.dim
    return value


def ddeg_ratio(lam: Partition, mu: Partition, p: int) -> Fraction:
    """ddeg(lam)/ddeg(mu) as an exact rational in lowest terms."""
    return Fraction(ddeg(lam, p), ddeg(mu, p))


def degree_witness(lam: Partition, p: int, whole_block: bool = False) -> Partition | None:
    """A strict partner with the same regularisation and smaller ddeg.

    Searches the regularisation fibre of lam; with ``whole_block`` the
    search widens to every strict partition of the block (exploratory
    only, the certificate still requires the matching regularisation).
    Returns the lexicographically greatest partition among those of
    minimal ddeg, or None.
    """
    if not is_strict(lam):
        raise PartitionError(f"{lam} is not strict")
    mu_reg = regularize(lam, p)
    fibre = reg_preimages(mu_reg, p)
    if whole_block:
        from .barcores import bar_core, block_members

        bc = bar_core(lam, p)
        fibre = [
            nu
            for nu in block_members(bc.core, bc.weight, p, "strict")
            if regularize(nu, p) == mu_reg
        ]
    own = ddeg(lam, p)
    scored = [(ddeg(nu, p), nu) for nu in fibre if nu != lam]
    smaller = [(val, nu) for val, nu in scored if val < own]
    if not smaller:
        return None
    least = min(val for val, _ in smaller)
    return max(nu for val, nu in smaller if val == least)
