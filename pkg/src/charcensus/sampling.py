"""Exactly-uniform random partitions and Monte Carlo zero-density
estimation for the character table.

The sampler draws the largest part k of a partition of n with its true
probability (p_k(n) - p_{k-1}(n)) / p(n) straight from exact bounded
count tables, then recurses on n - k with parts capped at k, so the
distribution over partitions of n is uniform with no approximation.
The density probe then draws independent uniform pairs (lambda, mu),
which matches counting cells of the table: it deliberately does not
weight mu by conjugacy-class size.

Randomness: every run is driven by one 64-bit seed.  Sample chunks of
fixed size draw from independent substreams whose seeds are derived
from (seed, chunk index) by SHA-256, so the merged estimate is
bit-identical for every worker count.
"""

from __future__ import annotations

import hashlib
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .characters import BudgetExceeded, _chi
from .counting import CountTable, build_bounded_table
from .errors import GuardError
from .partitions import Partition

DENSITY_GUARD = 60
RNG_ALGORITHM = "mt19937-sha256-streams-v1"
_CHUNK = 2048  # samples per substream; fixed so results ignore worker count
# memo misses allowed per character evaluation; sized above the worst-case
# cold-start state count at n = 60 (~2.5e6), so within the guard no sample
# can fail and reports stay identical for every worker count.  Past a
# raised guard, failure accounting may depend on memo warmth.
_STEP_BUDGET = 10_000_000


def _stream_rng(seed: int, index: int) -> random.Random:
    digest = hashlib.sha256(f"charcensus:{seed}:{index}".encode()).digest()
    return random.Random(int.from_bytes(digest[:16], "big"))


def random_partition(n: int, rng: random.Random,
                     table: CountTable | None = None) -> Partition:
    """Draw one partition of n, exactly uniformly.

    ``table`` must be a P_BOUNDED count table covering n (built on the
    fly when omitted; pass one in when drawing repeatedly).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if table is None:
        table = build_bounded_table(n, n)
    if table.kind != "P_BOUNDED" or table.limit_n < n or table.limit_t < n:
        raise GuardError(f"need a P_BOUNDED table covering n={n}")
    parts = []
    remaining, cap = n, n
    while remaining:
        r = rng.randrange(table.value(remaining, t=cap))
        lo, hi = 1, cap  # p_k(remaining) is cumulative in k; invert it
        while lo < hi:
            mid = (lo + hi) // 2
            if table.value(remaining, t=mid) > r:
                hi = mid
            else:
                lo = mid + 1
        parts.append(lo)
        remaining -= lo
        cap = lo
    return Partition(parts)


@dataclass(frozen=True)
class DensityEstimate:
    """Monte Carlo estimate of the zero density Z(n)/p(n)^2.

    ``failures`` counts evaluations abandoned by the per-sample step
    budget; they are excluded from both numerator and denominator, never
    silently counted as zeros.  ``conjecture_value`` is the conjectured
    limit 2/log n.  Deterministic given (n, samples, seed).
    """

    n: int
    samples: int
    zeros_observed: int
    failures: int
    point_estimate: float
    ci_low: float
    ci_high: float
    conjecture_value: float
    seed: int
    rng_algorithm: str = RNG_ALGORITHM

    def to_json_dict(self) -> dict:
        return {
            "N": self.n,
            "samples": self.samples,
            "zeros_observed": self.zeros_observed,
            "failures": self.failures,
            "point_estimate": self.point_estimate,
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
            "conjecture_value": self.conjecture_value,
            "seed": self.seed,
            "rng_algorithm": self.rng_algorithm,
        }


def estimate_zero_density(n: int, samples: int, seed: int, *,
                          threads: int = 1, max_n: int = DENSITY_GUARD,
                          step_budget: int = _STEP_BUDGET) -> DensityEstimate:
    """Estimate Z(n)/p(n)^2 from ``samples`` uniform (lambda, mu) pairs.

    Reports the zero fraction with a normal-approximation 95% interval
    and the conjectured 2/log n alongside.  Guarded by ``max_n``: one
    character evaluation gets combinatorially expensive past desk scale.
    """
    if n < 2:
        raise GuardError("density estimation requires n >= 2")
    if n > max_n:
        raise GuardError(f"density estimation limited to n <= {max_n}, got {n}")
    if samples < 1:
        raise ValueError("samples must be positive")
    table = build_bounded_table(n, n)
    memo: dict = {}

    def run_chunk(index: int) -> tuple[int, int]:
        rng = _stream_rng(seed, index)
        count = min(_CHUNK, samples - index * _CHUNK)
        zeros = failures = 0
        for _ in range(count):
            lam = random_partition(n, rng, table)
            mu = random_partition(n, rng, table)
            try:
                value = _chi(lam.parts, mu.parts, memo, True, [step_budget])
            except BudgetExceeded:
                failures += 1
                continue
            if value == 0:
                zeros += 1
        return zeros, failures

    n_chunks = (samples + _CHUNK - 1) // _CHUNK
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_chunk, range(n_chunks)))
    else:
        results = [run_chunk(i) for i in range(n_chunks)]
    zeros = sum(z for z, _ in results)
    failures = sum(f for _, f in results)
    evaluated = samples - failures
    point = zeros / evaluated if evaluated else 0.0
    half_width = 1.96 * math.sqrt(point * (1 - point) / evaluated) if evaluated else 0.0
    return DensityEstimate(
        n=n, samples=samples, zeros_observed=zeros, failures=failures,
        point_estimate=point,
        ci_low=max(0.0, point - half_width),
        ci_high=min(1.0, point + half_width),
        conjecture_value=2 / math.log(n),
        seed=seed,
    )
