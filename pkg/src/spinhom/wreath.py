"""Littlewood-Richardson coefficients and wreath-product Cartan values.

``lr2`` counts LR skew tableaux of shape nu/alpha and content beta
(column-strict fillings whose reverse reading word is a lattice word);
``lr3`` composes two-factor coefficients.  The characteristic-zero
diagonal Cartan invariant of the rank-d wreath model is

    c(nu, pi) = sum over (alpha, beta, gamma), sizes summing to d, of
                lr3(alpha, beta, gamma; nu) * lr3(alpha, beta', gamma; pi),

whose diagonal equals 2d+1 exactly for the row and the column shape and
exceeds it otherwise.  The characteristic-3 analogue conjugates by an
ingested decomposition matrix: matrices are read from a small text
format, never computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .partitions import Partition, PartitionError, conjugate, format_partition, parse_partition, partitions_of


@lru_cache(maxsize=None)
def lr2(alpha: Partition, beta: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient c^nu_{alpha, beta}."""
    if sum(alpha) + sum(beta) != sum(nu):
        return 0
    if not _skew_ok(nu, alpha):
        return 0
    if not beta:
        return 1
    # cells of nu/alpha in reverse reading order: rows top to bottom,
    # each row right to left
    cells = []
    for r in range(len(nu)):
        inner = alpha[r] if r < len(alpha) else 0
        for c in range(nu[r] - 1, inner - 1, -1):
            cells.append((r, c))
    k = len(beta)

    def rec(idx: int, counts: tuple[int, ...], fill: dict) -> int:
        if idx == len(cells):
            return 1 if list(counts) == list(beta) else 0
        r, c = cells[idx]
        total = 0
        for v in range(k):
            if counts[v] >= beta[v]:
                continue
            # lattice condition on the reverse reading word
            if v > 0 and counts[v] >= counts[v - 1]:
                continue
            # rows weakly increase left to right
            right = fill.get((r, c + 1))
            if right is not None and v > right:
                continue
            # columns strictly increase downwards
            up = fill.get((r - 1, c))
            if up is not None and v <= up:
                continue
            fill[(r, c)] = v
            new_counts = counts[:v] + (counts[v] + 1,) + counts[v + 1:]
            total += rec(idx + 1, new_counts, fill)
            del fill[(r, c)]
        return total

    return rec(0, (0,) * k, {})


def _skew_ok(nu: Partition, alpha: Partition) -> bool:
    return len(alpha) <= len(nu) and all(alpha[r] <= nu[r] for r in range(len(alpha)))


@lru_cache(maxsize=None)
def lr3(alpha: Partition, beta: Partition, gamma: Partition, nu: Partition) -> int:
    """Three-factor coefficient via associativity of the two-factor one."""
    if sum(alpha) + sum(beta) + sum(gamma) != sum(nu):
        return 0
    total = 0
    for sigma in partitions_of(sum(alpha) + sum(beta)):
        left = lr2(alpha, beta, sigma)
        if left:
            total += left * lr2(sigma, gamma, nu)
    return total


@dataclass(frozen=True)
class CartanValue:
    value: int


def wreath_cartan0(nu: Partition, pi: Partition) -> CartanValue:
    """Characteristic-zero composition multiplicity c(nu, pi)."""
    d = sum(nu)
    if sum(pi) != d:
        raise PartitionError("both labels must have the same size")
    total = 0
    for a in range(d + 1):
        for b in range(d - a + 1):
            c = d - a - b
            for beta in partitions_of(b):
                beta_c = conjugate(beta)
                for alpha in partitions_of(a):
                    for gamma in partitions_of(c):
                        left = lr3(alpha, beta, gamma, nu)
                        if left:
                            total += left * lr3(alpha, beta_c, gamma, pi)
    return CartanValue(total)


# ---------------------------------------------------------------------------
# ingested decomposition matrices


def is_p_regular(lam: Partition, p: int) -> bool:
    """No part repeated p or more times."""
    return all(lam.count(a) < p for a in set(lam))


@dataclass(frozen=True)
class DecompMatrix:
    p: int
    d: int
    entries: tuple[tuple[tuple[Partition, Partition], int], ...]

    def mult(self, row: Partition, col: Partition) -> int:
        return dict(self.entries).get((row, col), 0)

    @property
    def columns(self) -> tuple[Partition, ...]:
        return tuple(sorted({col for (_, col), _ in self.entries}, reverse=True))


def parse_decomp_matrix(text: str) -> DecompMatrix:
    """Parse the line-based matrix format.

    Line 1 is ``p=3 d=<int>``; every further non-comment line reads
    ``<partition> : <col>=<mult>[, <col>=<mult>]*`` with partitions in
    canonical comma form.  Column labels must be p-regular and the
    diagonal entries of p-regular rows must equal one.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise PartitionError("empty decomposition matrix file")
    header = lines[0].split()
    try:
        fields = dict(tok.split("=") for tok in header)
        p, d = int(fields["p"]), int(fields["d"])
    except (ValueError, KeyError) as exc:
        raise PartitionError(f"bad header line {lines[0]!r}") from exc
    entries: dict[tuple[Partition, Partition], int] = {}
    for ln in lines[1:]:
        if ":" not in ln:
            raise PartitionError(f"missing ':' in line {ln!r}")
        row_text, rhs = ln.split(":", 1)
        row = parse_partition(row_text)
        if sum(row) != d:
            raise PartitionError(f"row label {row_text.strip()!r} is not a partition of {d}")
        # multiplicities terminate each entry, so split on ',' and regroup
        chunk: list[str] = []
        for tok in rhs.split(","):
            chunk.append(tok.strip())
            if "=" in tok:
                col_text, mult_text = ",".join(chunk).rsplit("=", 1)
                col = parse_partition(col_text)
                if not is_p_regular(col, p):
                    raise PartitionError(f"column label {col} is not {p}-regular")
                entries[(row, col)] = int(mult_text)
                chunk = []
        if chunk:
            raise PartitionError(f"dangling tokens {chunk} in line {ln!r}")
    for col in {c for (_, c) in entries}:
        if entries.get((col, col), 0) != 1:
            raise PartitionError(f"diagonal entry for {col} must be 1")
    return DecompMatrix(p, d, tuple(sorted(entries.items(), reverse=True)))


def load_decomp_matrix(source: str) -> DecompMatrix:
    from pathlib import Path

    return parse_decomp_matrix(Path(source).read_text(encoding="utf-8"))


def bundled_decomp_matrix(d: int, p: int = 3) -> DecompMatrix:
    """Decomposition matrix shipped with the package (p=3, d <= 6)."""
    name = f"s{d}_p{p}.txt"
    data = resources.files("spinhom").joinpath("data/decomp").joinpath(name)
    return parse_decomp_matrix(data.read_text(encoding="utf-8"))


def wreath_cartan_p(mu: Partition, matrix: DecompMatrix) -> CartanValue:
    """Characteristic-p diagonal Cartan value for a p-regular label mu.

    Conjugates the characteristic-zero Cartan matrix by the ingested
    decomposition matrix: sum over rows nu, pi of
    d(nu, mu) * c(nu, pi) * d(pi, mu).
    """
    if mu not in matrix.columns:
        raise PartitionError(f"{format_partition(mu)} is not a column of the matrix")
    rows = [nu for nu in partitions_of(matrix.d) if matrix.mult(nu, mu)]
    total = 0
    for nu in rows:
        for pi in rows:
            total += (
                matrix.mult(nu, mu)
                * wreath_cartan0(nu, pi).value
                * matrix.mult(pi, mu)
            )
    return CartanValue(total)
