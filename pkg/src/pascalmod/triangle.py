"""Pascal's triangle modulo m: rows, per-entry residues, divisibility masks.

Rows are produced by the additive recurrence on a rolling buffer (the
cellular-automaton view).  For prime moduli the same black/white mask
can also be computed cell by cell from carry counts or from base-p
digit domination; all three must agree, and the verify harness checks
that they do.
"""

import math
from dataclasses import dataclass

from .digits import check_natural, to_digits
from .valuation import check_prime, kummer_valuation

MASK_METHODS = ("recurrence", "kummer", "digit-domination")


@dataclass(frozen=True)
class TriangleRow:
    modulus: int
    n: int
    entries: tuple

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        if len(self.entries) != self.n + 1:
            raise ValueError(f"row {self.n} must have {self.n + 1} entries")


def next_row(r: TriangleRow) -> TriangleRow:
    """Row n+1 from row n: each entry is the sum of its two upstairs neighbors mod m."""
    m = r.modulus
    prev = r.entries
    entries = [1] * (r.n + 2)
    for i in range(1, r.n + 1):
        entries[i] = (prev[i - 1] + prev[i]) % m
    return TriangleRow(modulus=m, n=r.n + 1, entries=tuple(entries))


def iter_rows(m: int, count: int):
    """Stream rows 0..count-1 of the triangle mod m."""
    check_natural(m, "modulus")
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    check_natural(count, "row count")
    row = TriangleRow(modulus=m, n=0, entries=(1,))
    for _ in range(count):
        yield row
        row = next_row(row)


def generate_rows(m: int, count: int) -> list:
    """Rows 0..count-1 of the triangle mod m, materialized."""
    return list(iter_rows(m, count))


def entry_mod_prime(n: int, i: int, p: int) -> int:
    """C(n, i) mod p as the digit-wise product of small binomials in base p."""
    check_natural(n, "n")
    check_natural(i, "i")
    check_prime(p)
    if i > n:
        raise ValueError(f"i = {i} exceeds n = {n}")
    result = 1
    while n or i:
        nk, ik = n % p, i % p
        if ik > nk:
            return 0
        result = result * math.comb(nk, ik) % p
        n //= p
        i //= p
    return result


def _dominates(n: int, i: int, p: int) -> bool:
    """Every base-p digit of i is <= the matching digit of n."""
    while i:
        if i % p > n % p:
            return False
        i //= p
        n //= p
    return True


@dataclass(frozen=True)
class DivisibilityMask:
    """Which triangle entries are nonzero mod the modulus (True = nonzero = black)."""

    modulus: int
    rows: int
    grid: tuple  # grid[n][i] for 0 <= i <= n < rows

    def nonzero(self, n: int, i: int) -> bool:
        return self.grid[n][i]

    def black_cells(self) -> set:
        return {(n, i) for n in range(self.rows) for i in range(n + 1) if self.grid[n][i]}

    def white_cells(self) -> set:
        return {(n, i) for n in range(self.rows) for i in range(n + 1) if not self.grid[n][i]}


def _recurrence_grid(m: int, rows: int) -> tuple:
    return tuple(tuple(e != 0 for e in r.entries) for r in iter_rows(m, rows))


def divisibility_mask(p: int, rows: int, method: str = "digit-domination") -> DivisibilityMask:
    """Black/white mask of the first `rows` rows mod a prime p.

    All three methods compute the same mask; keeping them separate is
    the point, since their agreement is Kummer's theorem.
    """
    check_prime(p)
    check_natural(rows, "rows")
    if rows < 1:
        raise ValueError("rows must be at least 1")
    if method == "recurrence":
        grid = _recurrence_grid(p, rows)
    elif method == "kummer":
        grid = tuple(tuple(kummer_valuation(n, i, p) == 0 for i in range(n + 1)) for n in range(rows))
    elif method == "digit-domination":
        grid = tuple(tuple(_dominates(n, i, p) for i in range(n + 1)) for n in range(rows))
    else:
        raise ValueError(f"unknown mask method {method!r}")
    return DivisibilityMask(modulus=p, rows=rows, grid=grid)


def composite_mask(m: int, rows: int) -> DivisibilityMask:
    """Mask for an arbitrary modulus m >= 2, via the recurrence.

    Digit domination and single-prime carry counts do not apply to
    composite m; cross-checking against binomial_divisible_by is the
    verify harness's job.
    """
    check_natural(m, "modulus")
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    check_natural(rows, "rows")
    if rows < 1:
        raise ValueError("rows must be at least 1")
    return DivisibilityMask(modulus=m, rows=rows, grid=_recurrence_grid(m, rows))


def row_nonzero_count(n: int, p: int) -> int:
    """How many entries of row n are nonzero mod p: product of (digit + 1) in base p."""
    check_natural(n, "n")
    check_prime(p)
    count = 1
    for d in to_digits(n, p).digits:
        count *= d + 1
    return count


def all_interior_divisible_rows(p: int, rows: int) -> set:
    """Rows n in [2, rows) whose interior entries are all divisible by p.

    These are exactly the powers of p below `rows`: row p^k starts the
    next-sized white triangle.
    """
    check_prime(p)
    check_natural(rows, "rows")
    if rows < 2:
        raise ValueError("rows must be at least 2")
    result = set()
    for n in range(2, rows):
        if all(not _dominates(n, i, p) for i in range(1, n)):
            result.add(n)
    return result
