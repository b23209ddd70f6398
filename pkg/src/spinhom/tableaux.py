"""Standard shifted tableaux, residue words, and patterned fillings.

A standard shifted tableau of a strict shape lam is a bijection t from
the nodes of lam to 1..n with

    t(r, c) < t(r, c+1)    and    t(r, c+1) < t(r+1, c)

for all admissible nodes.  The count of such tableaux equals the odd
factor g of the bar-length formula, which the tests exploit as a
cross-check.  Enumeration recurses on the node holding n, which must be
a row end whose removal leaves a strict shape; corners are tried in
ascending row order, so the stream order is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .ladders import residue
from .partitions import Partition, PartitionError, contains, is_strict


@dataclass(frozen=True)
class ShiftedTableau:
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def entry(self, r: int, c: int) -> int:
        return self.rows[r - 1][c - 1]

    def position(self, k: int) -> tuple[int, int]:
        for r, row in enumerate(self.rows, start=1):
            for c, v in enumerate(row, start=1):
                if v == k:
                    return (r, c)
        raise KeyError(k)

    def is_standard(self) -> bool:
        shape = self.shape
        if not is_strict(shape):
            return False
        if sorted(v for row in self.rows for v in row) != list(range(1, self.size + 1)):
            return False
        for r in range(1, len(shape) + 1):
            for c in range(1, shape[r - 1] + 1):
                if c < shape[r - 1] and not self.entry(r, c) < self.entry(r, c + 1):
                    return False
                # the shifted column condition pairs (r, c+1) with (r+1, c)
                if r < len(shape) and c <= shape[r] and c + 1 <= shape[r - 1]:
                    if not self.entry(r, c + 1) < self.entry(r + 1, c):
                        return False
        return True

    def residue_word(self, p: int) -> tuple[int, ...]:
        """Entry-ordered residues: position k holds the residue of t^{-1}(k)."""
        word = [0] * self.size
        for r, row in enumerate(self.rows, start=1):
            for c, v in enumerate(row, start=1):
                word[v - 1] = residue(r, c, p)
        return tuple(word)


def _strict_corners(lam: Partition) -> list[int]:
    """Rows whose last node can go while leaving a strict shape."""
    out = []
    for r in range(1, len(lam) + 1):
        below = lam[r] if r < len(lam) else 0
        if lam[r - 1] - 1 > below or (lam[r - 1] == 1 and r == len(lam)):
            out.append(r)
    return out


def _drop(lam: Partition, r: int) -> Partition:
    rows = list(lam)
    rows[r - 1] -= 1
    return tuple(a for a in rows if a > 0)


def enumerate_sst(lam: Partition) -> Iterator[ShiftedTableau]:
    """Every standard shifted tableau of shape lam, exactly once."""
    if not is_strict(lam):
        raise PartitionError(f"{lam} is not strict")
    n = sum(lam)
    if n == 0:
        yield ShiftedTableau(())
        return
    for r in _strict_corners(lam):
        for sub in enumerate_sst(_drop(lam, r)):
            rows = [list(row) for row in sub.rows]
            while len(rows) < r:
                rows.append([])
            rows[r - 1].append(n)
            yield ShiftedTableau(tuple(tuple(row) for row in rows))


@lru_cache(maxsize=None)
def count_sst(lam: Partition) -> int:
    if sum(lam) == 0:
        return 1
    return sum(count_sst(_drop(lam, r)) for r in _strict_corners(lam))


def find_patterned_tableau(
    lam: Partition, prefix_shape: Partition, p: int
) -> ShiftedTableau | None:
    """A standard shifted tableau of shape lam whose entries split into a
    prefix filling ``prefix_shape`` and consecutive triples beyond it.

    Entries 1..|prefix| must fill ``prefix_shape``; afterwards entries
    arrive in blocks of three occupying three adjacent columns of one
    row, and each block's residues must be 0, 0, 1 in some order.  The
    region outside the prefix must split rowwise into such triples
    (every row difference divisible by three), otherwise the region is
    malformed.  Returns the first tableau found by depth-first search,
    or None.
    """
    if not is_strict(lam):
        raise PartitionError(f"{lam} is not strict")
    if not contains(lam, prefix_shape):
        raise PartitionError("prefix shape must sit inside the outer shape")
    pre = list(prefix_shape) + [0] * (len(lam) - len(prefix_shape))
    if any((lam[r] - pre[r]) % 3 != 0 for r in range(len(lam))):
        raise PartitionError("region outside the prefix must split into row triples")
    n_pre = sum(prefix_shape)
    n = sum(lam)

    def triple_ok(r: int, c: int) -> bool:
        residues = sorted(residue(r, c + k, p) for k in range(3))
        return residues == [0, 0, 1]

    def predecessors_filled(filled: list[int], r: int, c_hi: int) -> bool:
        # entries grow along rows and along the shifted columns, so a
        # block (r, c..c+2) may start once row r reaches c-1 and row r-1
        # reaches c+3 (row r-1 always extends that far inside lam)
        if r >= 2 and filled[r - 2] < min(c_hi + 1, lam[r - 2]):
            return False
        return True

    for prefix in enumerate_sst(prefix_shape):
        filled = list(pre)
        rows: list[list[int]] = []
        for r in range(len(lam)):
            row = list(prefix.rows[r]) if r < len(prefix.rows) else []
            rows.append(row)

        def rec(next_entry: int) -> bool:
            if next_entry > n:
                return True
            for r in range(1, len(lam) + 1):
                c = filled[r - 1] + 1
                if c + 2 > lam[r - 1]:
                    continue
                if not triple_ok(r, c):
                    continue
                if not predecessors_filled(filled, r, c + 2):
                    continue
                rows[r - 1].extend(range(next_entry, next_entry + 3))
                filled[r - 1] += 3
                if rec(next_entry + 3):
                    return True
                filled[r - 1] -= 3
                del rows[r - 1][-3:]
            return False

        if rec(n_pre + 1):
            tab = ShiftedTableau(tuple(tuple(row) for row in rows))
            assert tab.is_standard() and tab.shape == lam
            return tab
    return None
