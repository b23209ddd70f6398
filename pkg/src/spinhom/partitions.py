"""Partitions and their basic arithmetic.

A partition is stored as a plain tuple of weakly decreasing positive
integers; the empty partition is ``()``.  Everything here is pure and
works on tuples, so values can be hashed, cached and compared freely.

Three shape classes recur throughout the package, always relative to an
odd prime p:

* strict: strictly decreasing parts;
* p-strict: for every row r, either ``lam[r] > lam[r+1]`` or
  ``lam[r]`` is divisible by p (so repeats are allowed only among parts
  divisible by p);
* restricted p-strict: p-strict, and every gap satisfies
  ``lam[r] - lam[r+1] < p``, or ``== p`` with ``lam[r]`` not divisible
  by p.  The gap condition is applied to the last part as well (against
  a trailing zero), so e.g. (3,) is p-strict but not restricted at p=3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Partition = tuple[int, ...]

EMPTY: Partition = ()


class PartitionError(ValueError):
    """Raised for malformed partition input or violated preconditions."""


def check_partition(parts: Iterable[int]) -> Partition:
    """Validate and canonicalise an iterable of parts (trailing zeros dropped)."""
    out = []
    prev = None
    for a in parts:
        if a == 0:
            prev = 0
            continue
        if prev == 0:
            raise PartitionError("zero part followed by a positive part")
        if a < 0:
            raise PartitionError(f"negative part {a}")
        if prev is not None and prev != 0 and a > prev:
            raise PartitionError(f"parts not weakly decreasing: {a} after {prev}")
        out.append(a)
        prev = a
    return tuple(out)


def parse_partition(text: str) -> Partition:
    """Parse the canonical comma form, e.g. ``"5,4,3"``.

    The empty string (or the symbol for the empty partition) parses to ().
    A token ``a..b`` abbreviates the arithmetic run a, a-3, ..., b and
    requires a >= b with a == b (mod 3).  Input order is irrelevant: the
    parts are sorted decreasingly, so the parser accepts any ordering and
    strictness is a separate check (``classify_shape``).
    """
    text = text.strip()
    if text in ("", "-", "0", "∅"):
        return EMPTY
    parts: list[int] = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            raise PartitionError("empty token in partition string")
        if ".." in tok:
            lo_hi = tok.split("..")
            if len(lo_hi) != 2:
                raise PartitionError(f"malformed range token {tok!r}")
            try:
                a, b = int(lo_hi[0]), int(lo_hi[1])
            except ValueError as exc:
                raise PartitionError(f"malformed range token {tok!r}") from exc
            if a < b:
                raise PartitionError(f"range {tok!r} must decrease")
            if (a - b) % 3 != 0:
                raise PartitionError(f"range {tok!r} endpoints differ mod 3")
            run = list(range(a, b - 1, -3))
            parts.extend(run)
        else:
            try:
                parts.append(int(tok))
            except ValueError as exc:
                raise PartitionError(f"malformed token {tok!r}") from exc
    if any(a <= 0 for a in parts):
        bad = next(a for a in parts if a <= 0)
        raise PartitionError(f"non-positive part {bad}")
    return tuple(sorted(parts, reverse=True))


def format_partition(lam: Partition) -> str:
    """Canonical text form: comma separated parts, or the empty symbol."""
    if not lam:
        return "∅"
    return ",".join(str(a) for a in lam)


def part(lam: Partition, r: int) -> int:
    """Part in row r (1-based); zero beyond the length."""
    return lam[r - 1] if 1 <= r <= len(lam) else 0


def is_strict(lam: Partition) -> bool:
    return all(lam[k] > lam[k + 1] for k in range(len(lam) - 1))


def is_p_strict(lam: Partition, p: int) -> bool:
    return all(lam[k] > lam[k + 1] or lam[k] % p == 0 for k in range(len(lam) - 1))


def is_restricted(lam: Partition, p: int) -> bool:
    if not is_p_strict(lam, p):
        return False
    for k in range(len(lam)):
        nxt = lam[k + 1] if k + 1 < len(lam) else 0
        gap = lam[k] - nxt
        if gap < p:
            continue
        if gap == p and lam[k] % p != 0:
            continue
        return False
    return True


@dataclass(frozen=True)
class ShapeFlags:
    is_strict: bool
    is_p_strict: bool
    is_restricted: bool


def classify_shape(lam: Partition, p: int) -> ShapeFlags:
    """Shape predicates of lam relative to the odd prime p."""
    if p < 3 or p % 2 == 0:
        raise PartitionError(f"p must be an odd prime, got {p}")
    return ShapeFlags(is_strict(lam), is_p_strict(lam, p), is_restricted(lam, p))


@dataclass(frozen=True)
class ParityStats:
    spin_parity: str  # "even" or "odd"
    l_p: int
    length: int

    @property
    def x(self) -> int:
        """1 for an odd partition, 0 for an even one."""
        return 1 if self.spin_parity == "odd" else 0


def parity_stats(lam: Partition, p: int) -> ParityStats:
    """Spin parity (parity of the number of even parts) and l_p.

    l_p counts the positive parts divisible by p.
    """
    evens = sum(1 for a in lam if a % 2 == 0)
    lp = sum(1 for a in lam if a % p == 0)
    return ParityStats("odd" if evens % 2 else "even", lp, len(lam))


def is_odd_partition(lam: Partition) -> bool:
    return sum(1 for a in lam if a % 2 == 0) % 2 == 1


def scaled_add(lam: Partition, m: int, mu: Partition) -> Partition:
    """Componentwise lam + m*mu; the result must again be a partition."""
    if m < 0:
        raise PartitionError("scale factor must be non-negative")
    n = max(len(lam), len(mu))
    comps = tuple(part(lam, r) + m * part(mu, r) for r in range(1, n + 1))
    if any(comps[k] < comps[k + 1] for k in range(len(comps) - 1)):
        raise PartitionError(f"componentwise sum {comps} is not weakly decreasing")
    return tuple(a for a in comps if a > 0)


def join(lam: Partition, mu: Partition) -> Partition:
    """Multiset union of the parts, sorted decreasingly."""
    return tuple(sorted(lam + mu, reverse=True))


def conjugate(alpha: Partition) -> Partition:
    """Transpose of the Young diagram: column lengths of alpha."""
    if not alpha:
        return EMPTY
    return tuple(sum(1 for a in alpha if a >= c) for c in range(1, alpha[0] + 1))


def dominates(mu: Partition, lam: Partition) -> bool:
    """True if mu dominates lam: every prefix sum of mu is >= that of lam.

    Both partitions must have the same size.
    """
    if sum(mu) != sum(lam):
        raise PartitionError("dominance compares partitions of equal size only")
    s_mu = s_lam = 0
    for r in range(max(len(mu), len(lam))):
        s_mu += mu[r] if r < len(mu) else 0
        s_lam += lam[r] if r < len(lam) else 0
        if s_mu < s_lam:
            return False
    return True


def contains(lam: Partition, mu: Partition) -> bool:
    """Diagram containment: mu_r <= lam_r for every row."""
    return len(mu) <= len(lam) and all(mu[k] <= lam[k] for k in range(len(mu)))


# ---------------------------------------------------------------------------
# enumeration helpers (workhorses of the exhaustive verification suites)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest part first, lexicographically decreasing."""
    if n == 0:
        yield EMPTY
        return
    top = n if max_part is None else min(max_part, n)
    for head in range(top, 0, -1):
        for tail in partitions_of(n - head, head):
            yield (head,) + tail


def strict_partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    if n == 0:
        yield EMPTY
        return
    top = n if max_part is None else min(max_part, n)
    for head in range(top, 0, -1):
        for tail in strict_partitions_of(n - head, head - 1):
            yield (head,) + tail


def p_strict_partitions_of(n: int, p: int, max_part: int | None = None) -> Iterator[Partition]:
    """All p-strict partitions of n (repeats only among parts divisible by p)."""
    if n == 0:
        yield EMPTY
        return
    top = n if max_part is None else min(max_part, n)
    for head in range(top, 0, -1):
        nxt = head if head % p == 0 else head - 1
        for tail in p_strict_partitions_of(n - head, p, nxt):
            yield (head,) + tail


def restricted_partitions_of(n: int, p: int) -> Iterator[Partition]:
    for lam in p_strict_partitions_of(n, p):
        if is_restricted(lam, p):
            yield lam
