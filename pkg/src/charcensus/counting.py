"""Exact arbitrary-precision counting of partitions, bounded partitions
and t-cores.

Three count families, all plain Python ints (never floats):

* p(n)        -- partitions of n, via Euler's pentagonal recurrence;
* p_t(n)      -- partitions of n into parts of size at most t, via the
                 classic part-by-part DP;
* c_t(n)      -- t-core partitions of n, as the q^n coefficient of
                 prod (1-q^{tn})^t / prod (1-q^n), with the denominator
                 inverted through the pentagonal recurrence.

A brute-force t-core counter over full enumeration serves as the
independent oracle for c_t at small n.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path

from .errors import GuardError
from .partitions import enumerate_partitions, is_t_core

BRUTEFORCE_GUARD = 40

_p_cache: list[int] = [1]
_tcore_cache: dict[int, list[int]] = {}


def _pentagonal_pairs(limit: int):
    """Generalized pentagonal numbers g <= limit with the recurrence sign."""
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > limit:
            return
        sign = 1 if k % 2 else -1
        yield g1, sign
        g2 = k * (3 * k + 1) // 2
        if g2 <= limit:
            yield g2, sign
        k += 1


def partition_count(n: int) -> int:
    """Exact p(n), the number of partitions of n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n < len(_p_cache):
        return _p_cache[n]
    pents = list(_pentagonal_pairs(n))
    for m in range(len(_p_cache), n + 1):
        total = 0
        for g, sign in pents:
            if g > m:
                break
            total += sign * _p_cache[m - g]
        _p_cache.append(total)
    return _p_cache[n]


def bounded_partition_count(t: int, n: int) -> int:
    """Exact p_t(n): partitions of n with every part at most t."""
    if t < 1:
        raise ValueError("t must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if t >= n:
        return partition_count(n)
    dp = [1] + [0] * n
    for part in range(1, t + 1):
        for m in range(part, n + 1):
            dp[m] += dp[m - part]
    return dp[n]


def _core_series(t: int, limit: int) -> list[int]:
    """Coefficients of prod (1-q^{tn})^t / prod (1-q^n) up to q^limit."""
    # Numerator: multiply in (1 - q^{t n})^t one n at a time, expanded
    # binomially; descending index keeps the update in place.
    num = [0] * (limit + 1)
    num[0] = 1
    for n in range(1, limit // t + 1):
        step = t * n
        jmax = min(t, limit // step)
        coeffs = [0] * (jmax + 1)
        c = 1
        for j in range(1, jmax + 1):
            c = c * (t - j + 1) // j
            coeffs[j] = -c if j % 2 else c
        for m in range(limit, step - 1, -1):
            acc = num[m]
            for j in range(1, min(jmax, m // step) + 1):
                acc += coeffs[j] * num[m - j * step]
            num[m] = acc
    # Divide by the Euler product via the pentagonal recurrence.
    pents = list(_pentagonal_pairs(limit))
    out = [0] * (limit + 1)
    for m in range(limit + 1):
        acc = num[m]
        for g, sign in pents:
            if g > m:
                break
            acc += sign * out[m - g]
        out[m] = acc
    return out


def tcore_count(t: int, n: int) -> int:
    """Exact c_t(n), the number of t-core partitions of n."""
    if t < 1:
        raise ValueError("t must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    cached = _tcore_cache.get(t)
    if cached is None or len(cached) <= n:
        cached = _core_series(t, n)
        _tcore_cache[t] = cached
    return cached[n]


def tcore_count_bruteforce(t: int, n: int, guard: int = BRUTEFORCE_GUARD) -> int:
    """c_t(n) straight from the definition: enumerate and test hooks.

    Refuses n above the enumeration guard; this is an oracle, not a
    production path.
    """
    if t < 1:
        raise ValueError("t must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > guard:
        raise GuardError(f"brute-force t-core count limited to n <= {guard}, got {n}")
    return sum(1 for lam in enumerate_partitions(n) if is_t_core(lam, t))


# ---------------------------------------------------------------------------
# Persistent count tables

_MAGIC = b"CCTB"
_VERSION = 1
_KINDS = ("P", "P_BOUNDED", "TCORE")


@dataclass(frozen=True)
class CountTable:
    """Immutable dense table of exact counts.

    kind P holds p(0..limit_n); P_BOUNDED holds p_t(0..limit_n) for
    t = 0..limit_t; TCORE holds c_t(0..limit_n) for t = 1..limit_t.
    """

    kind: str
    limit_n: int
    limit_t: int | None
    rows: tuple[tuple[int, ...], ...]

    def value(self, n: int, t: int | None = None) -> int:
        if self.kind == "P":
            return self.rows[0][n]
        if t is None:
            raise ValueError(f"kind {self.kind} needs a t index")
        row = t if self.kind == "P_BOUNDED" else t - 1
        return self.rows[row][n]

    def save(self, path: str | Path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "wb") as fh:
            fh.write(_MAGIC)
            fh.write(struct.pack("<HBII", _VERSION, _KINDS.index(self.kind),
                                 self.limit_n, 0 if self.limit_t is None else self.limit_t))
            fh.write(struct.pack("<I", len(self.rows)))
            for row in self.rows:
                fh.write(struct.pack("<I", len(row)))
                for v in row:
                    s = str(v).encode("ascii")
                    fh.write(struct.pack("<I", len(s)))
                    fh.write(s)

    @classmethod
    def load(cls, path: str | Path) -> "CountTable":
        with open(path, "rb") as fh:
            if fh.read(4) != _MAGIC:
                raise ValueError(f"{path}: not a count-table file")
            version, kind_idx, limit_n, limit_t = struct.unpack("<HBII", fh.read(11))
            if version != _VERSION:
                raise ValueError(f"{path}: unsupported table version {version}")
            kind = _KINDS[kind_idx]
            (nrows,) = struct.unpack("<I", fh.read(4))
            rows = []
            for _ in range(nrows):
                (rowlen,) = struct.unpack("<I", fh.read(4))
                row = []
                for _ in range(rowlen):
                    (slen,) = struct.unpack("<I", fh.read(4))
                    row.append(int(fh.read(slen).decode("ascii")))
                rows.append(tuple(row))
        return cls(kind=kind, limit_n=limit_n,
                   limit_t=None if kind == "P" else limit_t, rows=tuple(rows))


def build_p_table(limit_n: int) -> CountTable:
    partition_count(limit_n)
    return CountTable("P", limit_n, None, (tuple(_p_cache[: limit_n + 1]),))


def build_bounded_table(limit_t: int, limit_n: int) -> CountTable:
    """p_t(n) for all 0 <= t <= limit_t, 0 <= n <= limit_n."""
    dp = [1] + [0] * limit_n
    rows = [tuple(dp)]
    for part in range(1, limit_t + 1):
        for m in range(part, limit_n + 1):
            dp[m] += dp[m - part]
        rows.append(tuple(dp))
    return CountTable("P_BOUNDED", limit_n, limit_t, tuple(rows))


def build_tcore_table(limit_t: int, limit_n: int) -> CountTable:
    """c_t(n) for all 1 <= t <= limit_t, 0 <= n <= limit_n."""
    rows = tuple(tuple(_core_series(t, limit_n)) for t in range(1, limit_t + 1))
    return CountTable("TCORE", limit_n, limit_t, rows)


def table_path(cache_dir: str | Path, kind: str, limit_n: int,
               limit_t: int | None = None) -> Path:
    suffix = "" if limit_t is None else f"-t{limit_t}"
    return Path(cache_dir) / f"{kind.lower()}-n{limit_n}{suffix}.tbl"


def load_or_build(kind: str, limit_n: int, limit_t: int | None = None,
                  cache_dir: str | Path | None = None) -> CountTable:
    """Fetch a table from the cache directory, building and storing it
    on a miss.  With cache_dir=None the table is built in memory only."""
    if kind not in _KINDS:
        raise ValueError(f"unknown table kind {kind!r}")
    path = None
    if cache_dir is not None:
        path = table_path(cache_dir, kind, limit_n, limit_t)
        if path.exists():
            return CountTable.load(path)
    if kind == "P":
        table = build_p_table(limit_n)
    elif kind == "P_BOUNDED":
        table = build_bounded_table(limit_t, limit_n)
    else:
        table = build_tcore_table(limit_t, limit_n)
    if path is not None:
        table.save(path)
    return table
