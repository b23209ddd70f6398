"""Node residues, ladders, regularisation, and per-ladder statistics.

For an odd prime p the residue of a node (r, c) depends only on the
column: with b = (c-1) mod p it is min(b, p-1-b), an element of
I = {0, ..., (p-1)/2}.  The l-th ladder is the set of nodes with

    floor((p-1) * c / p) + (p-1) * (r-1) == l,

and all nodes of one ladder share one residue.  Regularisation slides
every node of a p-strict partition to the leftmost free position of its
ladder; the result is restricted p-strict with the same ladder profile.

The per-ladder counts defined here (lad, add, badd, rem, brem, str, zz)
satisfy a family of exact identities that ``check_ladder_identities``
evaluates ladder by ladder; the verification suites run them
exhaustively over small partitions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .partitions import (
    Partition,
    PartitionError,
    is_p_strict,
    is_restricted,
    is_strict,
    part,
)


def residue(r: int, c: int, p: int) -> int:
    """Residue of the node (r, c): folded column residue, independent of r."""
    b = (c - 1) % p
    return min(b, p - 1 - b)


def ladder_index(r: int, c: int, p: int) -> int:
    return ((p - 1) * c) // p + (p - 1) * (r - 1)


def ladder_residue(l: int, p: int) -> int:
    """Common residue of all nodes in ladder l."""
    m = l % (p - 1)
    return min(m, p - 1 - m)


def nodes(lam: Partition) -> Iterator[tuple[int, int]]:
    for r, a in enumerate(lam, start=1):
        for c in range(1, a + 1):
            yield (r, c)


def content(lam: Partition, p: int) -> dict[int, int]:
    """Residue multiset of all nodes, as a residue -> count dict."""
    if not is_p_strict(lam, p):
        raise PartitionError(f"{lam} is not {p}-strict")
    counts: Counter[int] = Counter()
    for r, c in nodes(lam):
        counts[residue(r, c, p)] += 1
    return dict(counts)


def is_p_odd(lam: Partition, p: int) -> bool:
    """True if lam has an odd number of nodes of non-zero residue."""
    nz = sum(1 for r, c in nodes(lam) if residue(r, c, p) != 0)
    return nz % 2 == 1


def ladder_positions(l: int, p: int) -> list[tuple[int, int]]:
    """All positions of ladder l in the quarter plane, by ascending column.

    Within a ladder the column increases as the row decreases, so this
    order runs from the bottom-left end upwards.
    """
    out = []
    r_max = l // (p - 1) + 1
    for r in range(r_max, 0, -1):
        m = l - (p - 1) * (r - 1)
        if m < 0:
            continue
        # columns c with floor((p-1)c/p) == m form a window of width 1 or 2
        c = (m * p + p - 2) // (p - 1)  # smallest c with (p-1)c/p >= m
        while ((p - 1) * c) // p < m:
            c += 1
        while ((p - 1) * c) // p == m:
            if c >= 1:
                out.append((r, c))
            c += 1
    return out


def ladder_profile(lam: Partition, p: int) -> dict[int, int]:
    counts: Counter[int] = Counter()
    for r, c in nodes(lam):
        counts[ladder_index(r, c, p)] += 1
    return dict(counts)


def regularize(lam: Partition, p: int) -> Partition:
    """Slide all nodes to the leftmost free positions of their ladders.

    The input must be p-strict; the output is restricted p-strict and
    has the same number of nodes in every ladder.
    """
    if not is_p_strict(lam, p):
        raise PartitionError(f"{lam} is not {p}-strict")
    profile = ladder_profile(lam, p)
    row_cells: Counter[int] = Counter()
    cells: set[tuple[int, int]] = set()
    for l, k in profile.items():
        for r, c in ladder_positions(l, p)[:k]:
            row_cells[r] += 1
            cells.add((r, c))
    out = tuple(row_cells[r] for r in range(1, max(row_cells, default=0) + 1))
    # the filled positions must tile initial row segments
    assert all((r, c) in cells for r, a in enumerate(out, start=1) for c in range(1, a + 1))
    assert is_restricted(out, p), (lam, out)
    return out


@dataclass(frozen=True)
class LadderStats:
    """Counts attached to one ladder of a p-strict partition.

    ``add``/``rem`` use the strict sense of addable/removable and are
    None unless the partition is strict; ``str_count`` is defined only
    on ladders of residue 0 (l divisible by p-1) and ``zz`` only on
    ladders with l not divisible by (p-1)/2, hence never at p=3.
    """

    l: int
    lad: int
    badd: int
    brem: int
    add: int | None
    rem: int | None
    str_count: int | None
    zz: int | None


def str_count(lam: Partition, p: int, l: int) -> int:
    """Nodes (r, c) of ladder l with c divisible by p, r >= 2 and rows
    (r-1, r, r+1) of lengths exactly (c+1, c, c-1)."""
    if l < 0:
        return 0
    total = 0
    for r in range(2, len(lam) + 1):
        c = lam[r - 1]
        if c % p != 0:
            continue
        if part(lam, r - 1) == c + 1 and part(lam, r + 1) == c - 1:
            if ladder_index(r, c, p) == l:
                total += 1
    return total


def zz_count(lam: Partition, p: int, l: int) -> int:
    """Nodes (r, c) of ladder l with rows (r, r+1) of lengths (c, c-1)."""
    if l < 0:
        return 0
    total = 0
    for r in range(1, len(lam) + 1):
        c = lam[r - 1]
        if part(lam, r + 1) == c - 1 and ladder_index(r, c, p) == l:
            total += 1
    return total


def _boundary_by_ladder(lam: Partition, p: int, mode: str) -> tuple[Counter, Counter]:
    from .branching import boundary_nodes  # local import: branching builds on this module

    adds: Counter[int] = Counter()
    rems: Counter[int] = Counter()
    for i in range(0, (p - 1) // 2 + 1):
        a, r = boundary_nodes(lam, i, p, mode)
        for rr, cc in a:
            adds[ladder_index(rr, cc, p)] += 1
        for rr, cc in r:
            rems[ladder_index(rr, cc, p)] += 1
    return adds, rems


def ladder_stats(lam: Partition, p: int, l: int) -> LadderStats:
    """All per-ladder counts for ladder l (zeros for l < 0)."""
    if not is_p_strict(lam, p):
        raise PartitionError(f"{lam} is not {p}-strict")
    strict = is_strict(lam)
    if l < 0:
        z = 0 if strict else None
        return LadderStats(l, 0, 0, 0, z, z, 0, 0 if p >= 5 else None)
    lad = sum(1 for r, c in nodes(lam) if ladder_index(r, c, p) == l)
    badds, brems = _boundary_by_ladder(lam, p, "pstrict")
    if strict:
        sadds, srems = _boundary_by_ladder(lam, p, "strict")
        add, rem = sadds[l], srems[l]
    else:
        add = rem = None
    sc = str_count(lam, p, l) if l % (p - 1) == 0 else None
    half = (p - 1) // 2
    zz = zz_count(lam, p, l) if (half >= 2 and l % half != 0) else None
    return LadderStats(l, lad, badds[l], brems[l], add, rem, sc, zz)


@dataclass(frozen=True)
class IdentityRow:
    identity: str
    l: int
    lhs: int
    rhs: int
    ok: bool


def max_relevant_ladder(lam: Partition, p: int) -> int:
    """Upper bound on ladder indices carrying any statistic of lam."""
    top = ladder_index(len(lam) + 1, 1, p)
    if lam:
        top = max(top, ladder_index(1, lam[0] + p, p))
        top = max(top, ladder_index(len(lam), lam[-1] + p, p))
        for r, a in enumerate(lam, start=1):
            top = max(top, ladder_index(r, a + p, p))
    return top + p


def check_ladder_identities(lam: Partition, p: int) -> list[IdentityRow]:
    """Evaluate every applicable per-ladder identity of lam.

    Three families, by the residue class of l mod (p-1):

    * residue (p-1)/2 ladders ("arladd1"),
    * residue 0 ladders ("lads", with the strict refinement using the
      str statistic when lam is strict),
    * other non-zero residues ("zzlem", p >= 5 only), plus the
      regularisation inequality on zz ("zzreglem").

    Counts in negative ladders are zero; the l == 0 case of the
    residue-0 identity carries a -1 correction.
    """
    if not is_p_strict(lam, p):
        raise PartitionError(f"{lam} is not {p}-strict")
    strict = is_strict(lam)
    badds, brems = _boundary_by_ladder(lam, p, "pstrict")
    sadds, srems = _boundary_by_ladder(lam, p, "strict") if strict else (Counter(), Counter())
    profile = Counter(ladder_profile(lam, p))
    reg = regularize(lam, p)

    def lad(l: int) -> int:
        return profile[l] if l >= 0 else 0

    def stat(counter: Counter, l: int) -> int:
        return counter[l] if l >= 0 else 0

    rows: list[IdentityRow] = []
    half = (p - 1) // 2
    for l in range(0, max_relevant_ladder(lam, p) + 1):
        m = l % (p - 1)
        if m == half:
            lhs = stat(brems, l - p + 1) - stat(badds, l)
            if p == 3:
                rhs = lad(l) - lad(l - 1) + lad(l - 2)
            else:
                rhs = lad(l) - lad(l - 1) - lad(l - p + 2) + lad(l - p + 1)
            rows.append(IdentityRow("arladd1", l, lhs, rhs, lhs == rhs))
        if m == 0:
            base = (
                lad(l)
                - 2 * lad(l - 1)
                - 2 * lad(l - p + 2)
                + lad(l - p + 1)
                - (1 if l == 0 else 0)
            )
            lhs = stat(brems, l - p + 1) - stat(badds, l)
            rows.append(IdentityRow("lads", l, lhs, base, lhs == base))
            if strict:
                lhs_s = stat(srems, l - p + 1) - stat(sadds, l)
                rhs_s = base - str_count(lam, p, l) + str_count(lam, p, l - p + 1)
                rows.append(IdentityRow("lads_strict", l, lhs_s, rhs_s, lhs_s == rhs_s))
        if half >= 2 and m != 0 and m != half:
            # k is the largest index below l with k + l divisible by p-1
            k = l - ((2 * l - 1) % (p - 1) + 1)
            lhs = stat(brems, k) - stat(badds, l)
            if m == 1:
                rhs = lad(l) - lad(l - 1) + lad(k) - zz_count(lam, p, k) + zz_count(lam, p, l - p + 1)
            else:
                rhs = (
                    lad(l)
                    - lad(l - 1)
                    - lad(k + 1)
                    + lad(k)
                    - zz_count(lam, p, k)
                    + zz_count(lam, p, l - p + 1)
                )
            rows.append(IdentityRow("zzlem", l, lhs, rhs, lhs == rhs))
            zl, zr = zz_count(reg, p, l), zz_count(lam, p, l)
            rows.append(IdentityRow("zzreglem", l, zl, zr, zl <= zr))
    return rows
