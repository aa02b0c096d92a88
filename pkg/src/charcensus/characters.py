"""Exact symmetric-group character values and zero censuses.

Character values come from the classical border-strip recursion: pick a
part t of the cycle type mu, strip every border strip of length t from
lambda, and sum the signed sub-characters.  Removing the largest part
first prunes fastest (a long strip usually does not exist, so whole
branches collapse to zero immediately).

The census side counts zeros in the full p(N) x p(N) table, both in
total and restricted to t-core rows, and evaluates the guaranteed-zero
lower bound sum_t c_t(N) * p_t(N-t) that needs no character computation
at all: whenever mu has a part of size t and lambda is a t-core, the
character vanishes, and grouping mu by its largest part makes those
zero sets disjoint.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .counting import partition_count, tcore_count
from .errors import GuardError
from .partitions import Partition, enumerate_partitions, hook_multiset, raw_strips

TABLE_GUARD = 20


class BudgetExceeded(Exception):
    """Internal signal: one character evaluation exceeded its step budget."""


def _chi(lam: tuple[int, ...], mu: tuple[int, ...], memo: dict,
         largest_first: bool, budget: list[int] | None = None) -> int:
    if not mu:
        return 1
    key = (lam, mu)
    val = memo.get(key)
    if val is not None:
        return val
    if budget is not None:
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceeded
    if largest_first:
        t, rest = mu[0], mu[1:]
    else:
        t, rest = mu[-1], mu[:-1]
    total = 0
    for _, height, rem in raw_strips(lam, t):
        sub = _chi(rem, rest, memo, largest_first, budget)
        total += -sub if height % 2 else sub
    memo[key] = total
    return total


def character_value(lam: Partition, mu: Partition, *, memo: dict | None = None,
                    order: str = "largest") -> int:
    """Exact character value of the irreducible indexed by lam at the
    conjugacy class of cycle type mu.

    Both partitions must have the same size.  ``order`` selects which
    part of mu is stripped first ("largest" or "smallest"); the result
    is independent of it, which the test suite exploits as an oracle.
    An optional ``memo`` dict is shared across calls.
    """
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: |{lam}| = {lam.size}, |{mu}| = {mu.size}")
    if order not in ("largest", "smallest"):
        raise ValueError(f"unknown order {order!r}")
    if memo is None:
        memo = {}
    return _chi(lam.parts, mu.parts, memo, order == "largest")


@dataclass(frozen=True)
class CharacterTable:
    """Complete character table of S_n.

    Rows index lam and columns index mu, both in enumeration order
    (largest-first), so ``rows[i][j]`` is the character of partition i
    at class j.
    """

    n: int
    partitions: tuple[Partition, ...]
    rows: tuple[tuple[int, ...], ...]

    def value(self, lam: Partition, mu: Partition) -> int:
        i = self.partitions.index(lam)
        j = self.partitions.index(mu)
        return self.rows[i][j]

    def write_csv(self, fh) -> None:
        """CSV with a header row of mu strings and a leading lam column."""
        import csv

        writer = csv.writer(fh)
        writer.writerow(["lambda"] + [str(p) for p in self.partitions])
        for lam, row in zip(self.partitions, self.rows):
            writer.writerow([str(lam)] + [str(v) for v in row])


def character_table(n: int, *, max_n: int = TABLE_GUARD, threads: int = 1,
                    order: str = "largest") -> CharacterTable:
    """Build the full p(n) x p(n) character table of S_n.

    Guarded by ``max_n`` (default 20): beyond that the exact table is
    infeasible at desk scale and the sampling module applies.  Rows can
    be built by a thread pool; values are exact integers, so the result
    is identical for every thread count.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise GuardError(f"full table limited to n <= {max_n}, got {n}; "
                         "use density sampling beyond this scale")
    parts = tuple(enumerate_partitions(n))
    mus = [p.parts for p in parts]
    memo: dict = {}
    largest = order == "largest"

    def build_row(lam: Partition) -> tuple[int, ...]:
        return tuple(_chi(lam.parts, mu, memo, largest) for mu in mus)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = tuple(pool.map(build_row, parts))
    else:
        rows = tuple(build_row(lam) for lam in parts)
    return CharacterTable(n=n, partitions=parts, rows=rows)


@dataclass(frozen=True)
class ZeroCensus:
    """Zero counts of one character table.

    ``per_core_zeros[t]`` restricts to rows whose partition is a t-core,
    for every 1 <= t <= n; ``table_dim`` is p(n).
    """

    n: int
    table_dim: int
    total_zeros: int
    per_core_zeros: dict[int, int]

    def to_json_dict(self) -> dict:
        return {
            "N": self.n,
            "p_N": str(self.table_dim),
            "Z": str(self.total_zeros),
            "Z_t": {str(t): str(z) for t, z in sorted(self.per_core_zeros.items())},
        }


def zero_count(n: int, *, max_n: int = TABLE_GUARD, threads: int = 1,
               table: CharacterTable | None = None) -> ZeroCensus:
    """Exact zero census of the S_n character table, in one table pass."""
    if table is None:
        table = character_table(n, max_n=max_n, threads=threads)
    total = 0
    per_core = {t: 0 for t in range(1, n + 1)}
    for lam, row in zip(table.partitions, table.rows):
        row_zeros = sum(1 for v in row if v == 0)
        total += row_zeros
        if row_zeros:
            hooks = hook_multiset(lam)
            for t in range(1, n + 1):
                if all(h % t for h in hooks):
                    per_core[t] += row_zeros
    return ZeroCensus(n=n, table_dim=len(table.partitions), total_zeros=total,
                      per_core_zeros=per_core)


def lower_bound_partial(n: int, t_lo: int, t_hi: int) -> int:
    """Exact partial sum over t in [t_lo, t_hi] of c_t(n) * p_t(n-t).

    Each term counts the guaranteed zeros contributed by pairs where mu
    has largest part exactly t and lambda is a t-core.
    """
    if not (1 <= t_lo <= t_hi <= n):
        raise ValueError(f"need 1 <= t_lo <= t_hi <= n, got ({t_lo}, {t_hi}, {n})")
    dp = [1] + [0] * n  # p_t(m) built incrementally over t
    total = 0
    for t in range(1, t_hi + 1):
        for m in range(t, n + 1):
            dp[m] += dp[m - t]
        if t >= t_lo:
            total += tcore_count(t, n) * dp[n - t]
    return total


def lower_bound_sum(n: int) -> int:
    """Exact guaranteed-zero lower bound for Z(n); no characters needed."""
    if n < 1:
        raise ValueError("n must be positive")
    return lower_bound_partial(n, 1, n)


def class_size(mu: Partition) -> int:
    """Number of elements of S_n with cycle type mu, exactly."""
    n = mu.size
    centralizer = 1
    mult = 1
    prev = None
    for part in mu.parts:
        centralizer *= part
        if part == prev:
            mult += 1
        else:
            mult = 1
        centralizer *= mult
        prev = part
    num = math.factorial(n)
    assert num % centralizer == 0
    return num // centralizer
