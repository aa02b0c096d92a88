"""Real-analytic machinery: eta evaluation, the saddle-point t-core
estimate, regime bounds for core counts and zero counts, and the
partition asymptotics they lean on.

Every magnitude is carried as a ``LogReal``; only saddle ordinates,
residuals and regime thresholds live on the linear scale.  The eta
function and its scaled log-derivatives are summed from the divisor
series log eta(iy) = -pi*y/12 - sum_n sigma(n)/n * exp(-2*pi*n*y),
with the modular transformation eta(iy) = y^(-1/2) * eta(i/y) applied
first whenever the argument is below 1, so the series always converges
geometrically with ratio at most exp(-2*pi).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace

from .counting import partition_count
from .errors import GuardError, NumericError
from .logreal import LogReal

GROWTH_CONSTANT = 2 * math.pi / math.sqrt(6)  # C in p(N) ~ exp(C sqrt N) / (4 N sqrt 3)
ETA_TAIL_CAP = 1.00873  # upper bound for the eta tail witness v, any y >= sqrt(3)/2
P_EXACT_LIMIT = 100_000  # largest n for which bound evaluators use exact p(n)

_SERIES_CAP = 64
_SIGMA = [0] * (_SERIES_CAP + 1)  # sigma(n) = sum of divisors
for _d in range(1, _SERIES_CAP + 1):
    for _m in range(_d, _SERIES_CAP + 1, _d):
        _SIGMA[_m] += _d


def _check_tol(tol: float) -> None:
    if not 0 < tol < 1e-6:
        raise ValueError(f"tol must be in (0, 1e-6), got {tol}")


def _divisor_series(u: float, weight, tol: float) -> float:
    """sum_n weight(n) * exp(-2*pi*n*u), truncated when a term drops
    below tol times the running magnitude.  Requires u >= 1 so the
    ratio between consecutive terms stays tiny."""
    acc = 0.0
    for n in range(1, _SERIES_CAP + 1):
        term = weight(n) * math.exp(-2 * math.pi * n * u)
        acc += term
        if abs(term) <= tol * (abs(acc) + 1e-300):
            break
    return acc


@dataclass(frozen=True)
class EtaValue:
    """log eta(iy) together with the evaluation regime and the tail
    witness v defined by the direct series: in the DIRECT regime
    log_eta = -pi*y/12 - v*exp(-2*pi*y); in the TRANSFORMED regime
    log_eta = -ln(y)/2 - pi/(12*y) - v*exp(-2*pi/y).

    ``v_excess`` is v - 1 computed without cancellation; for large y the
    rounded v_witness alone cannot resolve that v stays strictly above 1.
    """

    y: float
    log_eta: float
    regime: str
    v_witness: float
    v_excess: float


def _eta_direct(u: float, tol: float) -> tuple[float, float, float]:
    # Returns (log_eta at iu via the direct series, v, v - 1) where the
    # tail sum_n sigma(n)/n exp(-2 pi n u) is factored as v exp(-2 pi u),
    # so v - 1 = sum_{n>=2} sigma(n)/n exp(-2 pi (n-1) u) survives rounding.
    excess = 0.0
    for n in range(2, _SERIES_CAP + 1):
        term = _SIGMA[n] / n * math.exp(-2 * math.pi * (n - 1) * u)
        excess += term
        if term <= tol * (excess + 1e-300):
            break
    v = 1.0 + excess
    tail = v * math.exp(-2 * math.pi * u)
    return -math.pi * u / 12 - tail, v, excess


def eta(y: float, tol: float = 1e-12) -> EtaValue:
    """Evaluate log eta(iy) for y > 0.

    Uses the direct divisor series for y >= 1 and the modular
    transformation for y < 1.
    """
    if y <= 0:
        raise ValueError("y must be positive")
    _check_tol(tol)
    if y >= 1:
        log_eta, v, excess = _eta_direct(y, tol)
        return EtaValue(y=y, log_eta=log_eta, regime="DIRECT",
                        v_witness=v, v_excess=excess)
    w = 1.0 / y
    log_eta_w, v, excess = _eta_direct(w, tol)
    return EtaValue(y=y, log_eta=-0.5 * math.log(y) + log_eta_w,
                    regime="TRANSFORMED", v_witness=v, v_excess=excess)


def _mu1_large(u: float, tol: float) -> float:
    # u^2/24 - u^2 * sum sigma(n) exp(-2 pi n u), valid for u >= 1
    s0 = _divisor_series(u, lambda n: float(_SIGMA[n]), tol)
    return u * u / 24 - u * u * s0


def _mu1_small(u: float, tol: float) -> float:
    # transform of the above: sum sigma(n) exp(-2 pi n / u) - 1/24 + u/(4 pi)
    w = _divisor_series(1.0 / u, lambda n: float(_SIGMA[n]), tol)
    return w - 1.0 / 24 + u / (4 * math.pi)


def _mu2_large(u: float, tol: float) -> float:
    # 2 pi u^3 * sum n sigma(n) exp(-2 pi n u)
    s1 = _divisor_series(u, lambda n: float(n * _SIGMA[n]), tol)
    return 2 * math.pi * u ** 3 * s1


def _mu2_small(u: float, tol: float) -> float:
    # 1/12 - u/(4 pi) + sum sigma(n) (2 pi n / u - 2) exp(-2 pi n / u)
    w = _divisor_series(1.0 / u,
                        lambda n: _SIGMA[n] * (2 * math.pi * n / u - 2.0), tol)
    return 1.0 / 12 - u / (4 * math.pi) + w


def eta_log_deriv(y: float, k: int, tol: float = 1e-12) -> float:
    """The k-th scaled log-derivative of eta at iy, for k in {1, 2}:
    -(z^(k+1) / (2 pi i)) (d/dz)^k log eta(z) evaluated at z = iy.

    k=1 grows like y^2/24 for large y and tends to -1/24 as y -> 0;
    k=2 is positive, ~1/12 as y -> 0 and exponentially small for large y.
    """
    if y <= 0:
        raise ValueError("y must be positive")
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    _check_tol(tol)
    if k == 1:
        return _mu1_large(y, tol) if y >= 1 else _mu1_small(y, tol)
    return _mu2_large(y, tol) if y >= 1 else _mu2_small(y, tol)


def _mu1_prime(u: float, tol: float) -> float:
    # d/du of eta_log_deriv(u, 1), used by the Newton polish
    if u >= 1:
        s0 = _divisor_series(u, lambda n: float(_SIGMA[n]), tol)
        s1 = _divisor_series(u, lambda n: float(n * _SIGMA[n]), tol)
        return u / 12 - 2 * u * s0 + 2 * math.pi * u * u * s1
    s1w = _divisor_series(1.0 / u, lambda n: float(n * _SIGMA[n]), tol)
    return 2 * math.pi / (u * u) * s1w + 1.0 / (4 * math.pi)


@dataclass(frozen=True)
class SaddleSolution:
    """Solved saddle ordinate for the t-core count of n.

    The solution satisfies (mu1(i t y) - mu1(i y)) / y^2 = n + (t^2-1)/24
    within ``residual`` (same units as the right-hand side), and sits
    strictly inside (bracket_lo, bracket_hi).  ty_regime records whether
    t*y landed below 1 (SMALL) or not (LARGE).
    """

    n: int
    t: int
    y: float
    bracket_lo: float
    bracket_hi: float
    residual: float
    ty_regime: str


def saddle_bracket(n: int, t: int) -> tuple[float, float]:
    """A-priori bracket for the saddle ordinate: the root lies in
    ((t-1) / (4 pi (n + (t^2-1)/24)),  1 / (3/pi + sqrt(24n - 1 + 9/pi^2)))."""
    m = n + (t * t - 1) / 24.0
    lo = (t - 1) / (4 * math.pi * m)
    hi = 1.0 / (3 / math.pi + math.sqrt(24 * n - 1 + 9 / math.pi ** 2))
    return lo, hi


def solve_saddle(n: int, t: int, tol: float = 1e-9) -> SaddleSolution:
    """Solve (mu1(i t y) - mu1(i y)) / y^2 = n + (t^2-1)/24 for y > 0.

    Bisection from the a-priori bracket down to relative width 1e-12,
    then three safeguarded Newton steps on the analytic derivative.
    Raises NumericError when the bracket fails to straddle the root.
    """
    if t < 6:
        raise GuardError(f"saddle solve requires t >= 6, got {t}")
    if n < 1:
        raise GuardError("saddle solve requires n >= 1 (the a-priori upper "
                         "bracket is not real at n = 0)")
    if not 0 < tol < 1:
        raise ValueError(f"tol must be in (0, 1), got {tol}")
    m = n + (t * t - 1) / 24.0
    series_tol = 1e-15

    def f(y: float) -> float:
        return (eta_log_deriv(t * y, 1, series_tol)
                - eta_log_deriv(y, 1, series_tol)) / (y * y) - m

    def f_prime(y: float) -> float:
        d = (eta_log_deriv(t * y, 1, series_tol)
             - eta_log_deriv(y, 1, series_tol))
        dp = t * _mu1_prime(t * y, series_tol) - _mu1_prime(y, series_tol)
        return dp / (y * y) - 2 * d / (y ** 3)

    lo, hi = saddle_bracket(n, t)
    f_lo, f_hi = f(lo), f(hi)
    # When t*y < 1 the root sits within ~exp(-2 pi / y) of the lower
    # endpoint, far below double resolution, so f(lo) may round to a
    # tiny negative; only a sign failure beyond the noise floor is a
    # genuine breakdown.
    noise = 1e-10 * m
    if not (f_lo > -noise and f_hi < noise and f_lo > f_hi):
        raise NumericError(
            f"saddle bracket does not straddle the root at n={n}, t={t}: "
            f"residual {f_lo:.6g} at {lo:.6g}, {f_hi:.6g} at {hi:.6g}")
    a, b = lo, hi
    while b - a > 1e-12 * a:
        mid = 0.5 * (a + b)
        if f(mid) > 0:
            a = mid
        else:
            b = mid
    y = 0.5 * (a + b)
    for _ in range(3):
        fy = f(y)
        dfy = f_prime(y)
        if dfy == 0:
            break
        step = y - fy / dfy
        y = step if a < step < b else 0.5 * (a + b)
    residual = f(y)
    if abs(residual) > tol * m:
        raise NumericError(
            f"saddle residual {residual:.3e} exceeds {tol:.1e} * {m:.6g} "
            f"at n={n}, t={t}")
    return SaddleSolution(n=n, t=t, y=y, bracket_lo=lo, bracket_hi=hi,
                          residual=residual,
                          ty_regime="SMALL" if t * y < 1 else "LARGE")


def tcore_count_estimate(n: int, t: int, tol: float = 1e-9) -> LogReal:
    """Saddle-point main term for the t-core count of n (log scale):

        y^(3/2) * exp(2 pi y (n + (t^2-1)/24)) * eta(i t y)^t
          / (sqrt(mu2(i y) - mu2(i t y)) * eta(i y))

    with y the solved saddle ordinate.  Valid for 6 <= t <= n; the
    relative error decays like 1 / min(t, sqrt n).
    """
    if not 6 <= t <= n:
        raise GuardError(f"t-core estimate requires 6 <= t <= n, got t={t}, n={n}")
    sol = solve_saddle(n, t, tol)
    y = sol.y
    m = n + (t * t - 1) / 24.0
    mu2_diff = eta_log_deriv(y, 2) - eta_log_deriv(t * y, 2)
    if mu2_diff <= 0:
        raise NumericError(f"nonpositive curvature term {mu2_diff:.3e} at n={n}, t={t}")
    log_val = (1.5 * math.log(y) + 2 * math.pi * y * m
               + t * eta(t * y).log_eta - 0.5 * math.log(mu2_diff)
               - eta(y).log_eta)
    return LogReal.from_log(log_val)


# ---------------------------------------------------------------------------
# Partition asymptotics

def rademacher_main_term(n: int) -> LogReal:
    """Main term of p(n): exp(C sqrt n) / (4 n sqrt 3), C = 2 pi / sqrt 6.

    Relative error decays like n^(-1/2)."""
    if n < 1:
        raise ValueError("n must be positive")
    return LogReal.from_log(GROWTH_CONSTANT * math.sqrt(n)
                            - math.log(4 * math.sqrt(3) * n))


def _log_p(n: int, p_exact_limit: int) -> tuple[float, str]:
    if n <= p_exact_limit:
        return math.log(partition_count(n)), "exact"
    return rademacher_main_term(n).log, "rademacher"


def bounded_count_estimate(n: int, t: int,
                           p_exact_limit: int = P_EXACT_LIMIT) -> LogReal:
    """Estimate of p_t(n), partitions of n with parts at most t:

        p(n) * exp(-(2/C) sqrt(n) exp(-C t / (2 sqrt n)))

    Sharp near t ~ C^(-1) sqrt(n) log n; a warning is emitted when the
    normalized offset x = t/sqrt(n) - log(n)/C leaves [-n^(1/4), n^(1/4)],
    outside which the estimate degrades.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if t < 1:
        raise ValueError("t must be positive")
    sqrt_n = math.sqrt(n)
    x = t / sqrt_n - math.log(n) / GROWTH_CONSTANT
    if abs(x) > n ** 0.25:
        warnings.warn(f"offset x = {x:.3g} outside the validity window "
                      f"|x| <= n^(1/4) = {n ** 0.25:.3g}; estimate is unreliable",
                      stacklevel=2)
    log_p, _ = _log_p(n, p_exact_limit)
    damping = (2 / GROWTH_CONSTANT) * sqrt_n \
        * math.exp(-GROWTH_CONSTANT * t / (2 * sqrt_n))
    return LogReal.from_log(log_p - damping)


# ---------------------------------------------------------------------------
# Regime thresholds and bound reports

@dataclass(frozen=True)
class Thresholds:
    """Range constants splitting the guaranteed-zero sum by largest part.

    b solves n^(1/(2b)) = (sqrt 6 / 2 pi) log n; t1 and t2 are
    (sqrt 6 / 2 pi) sqrt(n) log(n) scaled by (1 + 1/(2b)) and (1 + 1/b);
    f ~ sqrt(24 n) / sqrt(6/pi - 1) separates the mid and top core-count
    regimes; c is the exponential growth constant 2 pi / sqrt 6.
    """

    t1: float
    t2: float
    b: float
    f: float
    c: float


def split_thresholds(n: int) -> Thresholds:
    """Evaluate the regime thresholds at n (requires n >= 3)."""
    if n < 3:
        raise ValueError("n must be at least 3")
    log_n = math.log(n)
    scaled_log = math.sqrt(6) / (2 * math.pi) * log_n
    b = log_n / (2 * math.log(scaled_log))
    base = scaled_log * math.sqrt(n)  # (sqrt6 / 2pi) sqrt(n) log(n)
    return Thresholds(
        t1=base * (1 + 1 / (2 * b)),
        t2=base * (1 + 1 / b),
        b=b,
        f=math.sqrt(24 * n) / math.sqrt(6 / math.pi - 1),
        c=GROWTH_CONSTANT,
    )


@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound, optionally paired with an exact comparison.

    ``ratio`` is exact / bound on the linear scale when a comparison is
    attached.  ``p_source`` records whether p(n) entered exactly or
    through its main term.
    """

    n: int
    t: int | None
    regime: str
    bound: LogReal
    p_source: str | None = None
    epsilon: float | None = None
    comparison: LogReal | None = None
    ratio: float | None = None

    def with_comparison(self, exact: LogReal) -> "BoundReport":
        return replace(self, comparison=exact, ratio=exact.ratio_to(self.bound))

    def to_json_dict(self) -> dict:
        return {
            "N": self.n,
            "t": self.t,
            "regime": self.regime,
            "log_bound": self.bound.log,
            "log_exact": None if self.comparison is None else self.comparison.log,
            "ratio": self.ratio,
            "p_source": self.p_source,
        }


def _core_log_i(n: int, t: int) -> float:
    # (4 pi e)^((t-1)/2) (t-1) / (sqrt(4 pi) (t^2-t)^(t/2)) * m^((t-3)/2)
    m = n + (t * t - 1) / 24.0
    return ((t - 1) / 2 * (math.log(4 * math.pi) + 1) + math.log(t - 1)
            - 0.5 * math.log(4 * math.pi) - t / 2 * math.log(t * t - t)
            + (t - 3) / 2 * math.log(m))


def _core_log_ii(n: int, t: int) -> float:
    # 2 sqrt(pi) exp((t-1)/2 - 1.00873 t e^(-2 pi)) (pi/6 (24n+t^2-1))^((t-3)/2) / t^(t-1)
    return (math.log(2 * math.sqrt(math.pi)) + (t - 1) / 2
            - ETA_TAIL_CAP * t * math.exp(-2 * math.pi)
            + (t - 3) / 2 * math.log(math.pi / 6 * (24 * n + t * t - 1))
            - (t - 1) * math.log(t))


def _core_damping_iii(n: int, t: int) -> float:
    m = n + (t * t - 1) / 24.0
    return ETA_TAIL_CAP * t * math.exp(-t * (t - 1) / (2 * m))


def _core_damping_iv(n: int, t: int) -> float:
    return t * math.exp(-math.pi * t / math.sqrt(6 * n))


def core_count_bound_gamma_form(n: int, t: int) -> LogReal:
    """Pre-Stirling variant of the regime-i core-count form:
    (2 pi)^((t-1)/2) / (t^(t/2) Gamma((t-1)/2)) * m^((t-3)/2)."""
    m = n + (t * t - 1) / 24.0
    return LogReal.from_log((t - 1) / 2 * math.log(2 * math.pi)
                            - t / 2 * math.log(t) - math.lgamma((t - 1) / 2)
                            + (t - 3) / 2 * math.log(m))


P32_REGIMES = ("P32_I", "P32_II", "P32_III", "P32_IV")


def _select_core_regime(n: int, t: int, epsilon: float, f: float) -> str | None:
    log_n = math.log(n)
    part_i_hi = 2 * math.pi * math.sqrt(2 * n) / math.sqrt((1 + epsilon) * log_n)
    part_ii_lo = 2 * math.pi * math.sqrt(2 * n) / math.sqrt(log_n)
    part_iv_lo = math.sqrt(6) / (2 * math.pi) * math.sqrt(n) * log_n
    if t <= part_i_hi:
        return "P32_I"
    if n >= 300_000 and t > part_iv_lo:
        return "P32_IV"
    if t >= f:
        return "P32_III"
    if t > part_ii_lo:
        return "P32_II"
    return None  # gap between the regime-i and regime-ii ranges


def core_count_bound(n: int, t: int, epsilon: float = 0.5,
                     regime: str | None = None,
                     p_exact_limit: int = P_EXACT_LIMIT) -> BoundReport:
    """Evaluate the core-count bound main term in the regime that the
    (n, t) ranges select (or a caller-forced regime).

    Regime I is an asymptotic equality; II, III and IV are lower-bound
    main terms.  III and IV go through p(n), exact when n is within
    ``p_exact_limit``.  Raises GuardError when t falls in the uncovered
    gap between the regime-i and regime-ii ranges.
    """
    if n < 100:
        raise GuardError(f"core-count bounds require n >= 100, got {n}")
    if not 6 <= t <= n:
        raise GuardError(f"core-count bounds require 6 <= t <= n, got t={t}")
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
    if regime is None:
        regime = _select_core_regime(n, t, epsilon, split_thresholds(n).f)
        if regime is None:
            raise GuardError(
                f"no bound regime applies at n={n}, t={t}: t falls in the gap "
                f"between the regime-i range (epsilon={epsilon}) and the "
                f"regime-ii range")
    elif regime not in P32_REGIMES:
        raise ValueError(f"unknown regime {regime!r}")
    p_source = None
    if regime == "P32_I":
        log_bound = _core_log_i(n, t)
    elif regime == "P32_II":
        log_bound = _core_log_ii(n, t)
    else:
        log_p, p_source = _log_p(n, p_exact_limit)
        damping = _core_damping_iii(n, t) if regime == "P32_III" \
            else _core_damping_iv(n, t)
        log_bound = log_p - damping
    return BoundReport(n=n, t=t, regime=regime, bound=LogReal.from_log(log_bound),
                       p_source=p_source, epsilon=epsilon)


def full_table_bound(n: int, exact_zeros: int | None = None,
                     p_exact_limit: int = P_EXACT_LIMIT) -> BoundReport:
    """Asymptotic lower-bound main term for the total zero count:
    2 p(n)^2 / log n.  Purely asymptotic; at desk scale the report is
    meant to carry the exact-census ratio, not an inequality claim.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    log_p, p_source = _log_p(n, p_exact_limit)
    log_bound = math.log(2) + 2 * log_p - math.log(math.log(n))
    report = BoundReport(n=n, t=None, regime="T12",
                         bound=LogReal.from_log(log_bound), p_source=p_source)
    if exact_zeros is not None:
        report = report.with_comparison(LogReal.from_value(exact_zeros))
    return report


def strip_zero_bound(n: int, t: int, epsilon: float = 0.5,
                     p_exact_limit: int = P_EXACT_LIMIT) -> BoundReport:
    """Lower-bound main term for the zero count restricted to t-core rows.

    Multiplies the regime-appropriate core-count form by p(n) (regimes
    T13_I, T13_II), or uses p(n)^2 damped by the top-regime exponential
    plus the p(n-t)/p(n) decay (T13_III, for t >= f).
    """
    if n < 100:
        raise GuardError(f"strip bounds require n >= 100, got {n}")
    if not 6 <= t <= n:
        raise GuardError(f"strip bounds require 6 <= t <= n, got t={t}")
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
    log_n = math.log(n)
    part_i_hi = 2 * math.pi * math.sqrt(2 * n) / math.sqrt((1 + epsilon) * log_n)
    part_ii_lo = 2 * math.pi * math.sqrt(2 * n) / math.sqrt(log_n)
    f = split_thresholds(n).f
    log_p, p_source = _log_p(n, p_exact_limit)
    if t <= part_i_hi:
        regime = "T13_I"
        log_bound = _core_log_i(n, t) + log_p
    elif t >= f:
        regime = "T13_III"
        decay = GROWTH_CONSTANT * t / (math.sqrt(n - t) + math.sqrt(n))
        log_bound = 2 * log_p - (_core_damping_iii(n, t) + decay)
    elif t > part_ii_lo:
        regime = "T13_II"
        log_bound = _core_log_ii(n, t) + log_p
    else:
        raise GuardError(
            f"no bound regime applies at n={n}, t={t}: t falls in the gap "
            f"between the regime-i range (epsilon={epsilon}) and the "
            f"regime-ii range")
    return BoundReport(n=n, t=t, regime=regime, bound=LogReal.from_log(log_bound),
                       p_source=p_source, epsilon=epsilon)
