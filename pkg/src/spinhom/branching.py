"""Addable and removable nodes, signatures, and the branching operators.

Two senses of addable/removable are in play for a residue i:

* the p-strict sense ("pstrict" mode): an i-node counts if it can be
  added/removed, possibly together with other i-nodes, leaving a
  p-strict partition;
* the strict sense ("strict" mode): the same with "strict partition"
  in place of "p-strict" (input and output).

For i != 0 the two senses agree on strict partitions; for i = 0 they
differ, and the difference drives everything downstream.

Because same-residue columns come in runs of length at most two, a
joint addition/removal touches each row in at most two cells, and its
per-row amounts are constrained only between consecutive rows.  Nodes
are therefore classified by a small feasibility sweep over per-row
choices rather than by any closed-form rule.

On restricted p-strict partitions the i-signature (boundary nodes read
by increasing column, "+" for addable, "-" for removable) reduces by
cancelling adjacent "+-" pairs to -^eps +^phi; the surviving nodes are
the normal and conormal ones, and removing the rightmost normal /
adding the leftmost conormal node gives the operators tilde_e and
tilde_f.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ladders import ladder_index, regularize, residue
from .partitions import (
    Partition,
    PartitionError,
    is_odd_partition,
    is_p_strict,
    is_restricted,
    is_strict,
)

Node = tuple[int, int]

STRICT = "strict"
PSTRICT = "pstrict"


def _check_mode(lam: Partition, p: int, mode: str) -> None:
    if mode == STRICT:
        if not is_strict(lam):
            raise PartitionError(f"{lam} is not strict")
    elif mode == PSTRICT:
        if not is_p_strict(lam, p):
            raise PartitionError(f"{lam} is not {p}-strict")
    else:
        raise PartitionError(f"unknown mode {mode!r}")


def _pair_ok(a: int, b: int, p: int, mode: str) -> bool:
    # consecutive result rows a >= b with equality allowed per the mode
    if a < b:
        return False
    if a > b:
        return True
    return a == 0 if mode == STRICT else a % p == 0


def _feasible_levels(lam: Partition, i: int, p: int, mode: str, direction: int) -> list[set[int]]:
    """Per-row joint-change amounts that occur in some valid i-node move.

    direction +1 grows rows (one phantom row below), -1 shrinks them.
    Row r may change by 0, 1 or 2 cells; the changed cells must all be
    i-nodes, and the changed shape must be a valid partition of the
    mode's class.  Returns, per row, the set of amounts e_r realised by
    at least one globally valid assignment.
    """
    n_rows = len(lam) + (1 if direction > 0 else 0)
    if n_rows == 0:
        return []
    options: list[list[int]] = []
    for r in range(1, n_rows + 1):
        base = lam[r - 1] if r <= len(lam) else 0
        opts = [0]
        if direction > 0:
            for j in (1, 2):
                if residue(r, base + j, p) != i:
                    break
                opts.append(j)
        else:
            for j in (1, 2):
                c = base - j + 1
                if c < 1 or residue(r, c, p) != i:
                    break
                opts.append(-j)
        options.append(opts)

    def result(r: int, e: int) -> int:
        base = lam[r - 1] if r <= len(lam) else 0
        return base + e

    # forward[r] / backward[r]: options of row r+1 consistent with some
    # prefix / suffix assignment
    forward: list[set[int]] = [set(options[0])]
    for r in range(1, n_rows):
        ok = {
            e
            for e in options[r]
            if any(_pair_ok(result(r, f), result(r + 1, e), p, mode) for f in forward[r - 1])
        }
        forward.append(ok)
    backward: list[set[int]] = [set()] * n_rows
    backward[n_rows - 1] = set(options[n_rows - 1])
    for r in range(n_rows - 2, -1, -1):
        backward[r] = {
            e
            for e in options[r]
            if any(_pair_ok(result(r + 1, e), result(r + 2, b), p, mode) for b in backward[r + 1])
        }
    return [forward[r] & backward[r] for r in range(n_rows)]


def boundary_nodes(lam: Partition, i: int, p: int, mode: str) -> tuple[list[Node], list[Node]]:
    """Addable and removable i-nodes of lam in the given sense.

    Both lists come back ordered by increasing column; across the two
    lists all columns are distinct (asserted), which is what makes the
    signature reading order well defined.
    """
    _check_mode(lam, p, mode)
    if not 0 <= i <= (p - 1) // 2:
        raise PartitionError(f"residue {i} out of range for p={p}")
    add_levels = _feasible_levels(lam, i, p, mode, +1)
    rem_levels = _feasible_levels(lam, i, p, mode, -1)
    addables: list[Node] = []
    removables: list[Node] = []
    for r, levels in enumerate(add_levels, start=1):
        base = lam[r - 1] if r <= len(lam) else 0
        top = max(levels, default=0)
        for j in range(1, top + 1):
            addables.append((r, base + j))
    for r, levels in enumerate(rem_levels, start=1):
        base = lam[r - 1]
        depth = -min(levels, default=0)
        for j in range(1, depth + 1):
            removables.append((r, base - j + 1))
    addables.sort(key=lambda rc: rc[1])
    removables.sort(key=lambda rc: rc[1])
    cols = [c for _, c in addables] + [c for _, c in removables]
    assert len(cols) == len(set(cols)), (lam, i, p, mode)
    return addables, removables


# ---------------------------------------------------------------------------
# signatures and the tilde operators


@dataclass(frozen=True)
class SignatureReport:
    boundary: tuple[tuple[Node, str], ...]  # ((r, c), "+" or "-") by column
    raw: str
    reduced: str
    normals: tuple[Node, ...]
    conormals: tuple[Node, ...]

    @property
    def eps(self) -> int:
        return len(self.normals)

    @property
    def phi(self) -> int:
        return len(self.conormals)


def signature(mu: Partition, i: int, p: int) -> SignatureReport:
    """The i-signature of a restricted p-strict partition."""
    if not is_restricted(mu, p):
        raise PartitionError(f"{mu} is not restricted {p}-strict")
    adds, rems = boundary_nodes(mu, i, p, PSTRICT)
    entries = sorted(
        [(rc, "+") for rc in adds] + [(rc, "-") for rc in rems], key=lambda e: e[0][1]
    )
    raw = "".join(sign for _, sign in entries)
    stack: list[int] = []  # indices into entries of surviving signs
    for k, (_, sign) in enumerate(entries):
        if sign == "-" and stack and entries[stack[-1]][1] == "+":
            stack.pop()
        else:
            stack.append(k)
    reduced = "".join(entries[k][1] for k in stack)
    assert "+-" not in reduced
    normals = tuple(entries[k][0] for k in stack if entries[k][1] == "-")
    conormals = tuple(entries[k][0] for k in stack if entries[k][1] == "+")
    return SignatureReport(tuple(entries), raw, reduced, normals, conormals)


def _with_row(lam: Partition, r: int, value: int) -> Partition:
    rows = list(lam)
    if r == len(rows) + 1:
        rows.append(value)
    else:
        rows[r - 1] = value
    return tuple(a for a in rows if a > 0)


def tilde_e(mu: Partition, i: int, p: int) -> Partition:
    """Remove the rightmost normal i-node."""
    sig = signature(mu, i, p)
    if not sig.normals:
        raise PartitionError(f"{mu} has no normal {i}-node")
    r, c = sig.normals[-1]
    out = _with_row(mu, r, c - 1)
    assert is_restricted(out, p)
    return out


def tilde_f(mu: Partition, i: int, p: int) -> Partition:
    """Add the leftmost conormal i-node."""
    sig = signature(mu, i, p)
    if not sig.conormals:
        raise PartitionError(f"{mu} has no conormal {i}-node")
    r, c = sig.conormals[0]
    out = _with_row(mu, r, c)
    assert is_restricted(out, p)
    return out


def eps_i(mu: Partition, i: int, p: int) -> int:
    return signature(mu, i, p).eps


def phi_i(mu: Partition, i: int, p: int) -> int:
    return signature(mu, i, p).phi


def normal_extremal(mu: Partition, i: int, p: int, direction: str) -> Partition:
    """Iterate tilde_e (direction "down") or tilde_f ("up") to exhaustion."""
    if direction not in ("down", "up"):
        raise PartitionError(f"direction must be 'down' or 'up', got {direction!r}")
    out = mu
    if direction == "down":
        for _ in range(eps_i(mu, i, p)):
            out = tilde_e(out, i, p)
    else:
        for _ in range(phi_i(mu, i, p)):
            out = tilde_f(out, i, p)
    return out


# ---------------------------------------------------------------------------
# extremal node moves on strict partitions


@dataclass(frozen=True)
class ExtremalResult:
    result: Partition
    count: int


def extremal(lam: Partition, i: int, p: int, direction: str) -> ExtremalResult:
    """Remove all strictly-removable / add all strictly-addable i-nodes.

    The joint move must itself leave a strict partition; that the full
    set of boundary nodes can be moved at once is asserted rather than
    assumed.
    """
    if direction not in ("down", "up"):
        raise PartitionError(f"direction must be 'down' or 'up', got {direction!r}")
    adds, rems = boundary_nodes(lam, i, p, STRICT)
    moved = adds if direction == "up" else rems
    rows = list(lam) + [0]
    for r, _ in moved:
        if r > len(rows):
            rows.append(0)
        rows[r - 1] += 1 if direction == "up" else -1
    out = tuple(a for a in rows if a > 0)
    if not is_strict(out):
        raise PartitionError(f"joint {direction} move of all {i}-nodes breaks strictness: {lam}")
    assert abs(sum(out) - sum(lam)) == len(moved)
    return ExtremalResult(out, len(moved))


def eps_hat(lam: Partition, i: int, p: int) -> int:
    return extremal(lam, i, p, "down").count


def phi_hat(lam: Partition, i: int, p: int) -> int:
    return extremal(lam, i, p, "up").count


def branch_multiset(lam: Partition, i: int, p: int, direction: str) -> list[tuple[Partition, int]]:
    """Single i-node moves with their characteristic-zero multiplicities.

    Each strict partition obtainable from lam by removing ("down") or
    adding ("up") one i-node appears with coefficient 2 when lam is odd
    and the neighbour is even, and 1 otherwise.
    """
    if not is_strict(lam):
        raise PartitionError(f"{lam} is not strict")
    if direction not in ("down", "up"):
        raise PartitionError(f"direction must be 'down' or 'up', got {direction!r}")
    lam_odd = is_odd_partition(lam)
    out: list[tuple[Partition, int]] = []
    top = len(lam) if direction == "down" else len(lam) + 1
    for r in range(1, top + 1):
        base = lam[r - 1] if r <= len(lam) else 0
        c = base if direction == "down" else base + 1
        if c < 1 or residue(r, c, p) != i:
            continue
        mu = _with_row(lam, r, base - 1 if direction == "down" else base + 1)
        if sum(mu) != sum(lam) + (1 if direction == "up" else -1):
            continue
        if not is_strict(mu):
            continue
        coeff = 2 if lam_odd and not is_odd_partition(mu) else 1
        out.append((mu, coeff))
    return out


def ladder_obstruction(lam: Partition, i: int, p: int) -> bool:
    """A strictly-removable i-node with a strictly-addable i-node in a
    longer (higher-index) ladder."""
    adds, rems = boundary_nodes(lam, i, p, STRICT)
    if not adds or not rems:
        return False
    max_add = max(ladder_index(r, c, p) for r, c in adds)
    min_rem = min(ladder_index(r, c, p) for r, c in rems)
    return max_add > min_rem


def dn(lam: Partition, i: int, p: int) -> bool:
    """True when removing all strict i-nodes overshoots the normal-node
    count of the regularisation: eps_hat(lam) > eps_i(lam^reg)."""
    return eps_hat(lam, i, p) > eps_i(regularize(lam, p), i, p)
