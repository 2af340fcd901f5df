"""Reference computations of the generalized Stieltjes constants.

Two independent paths are provided.

* The Hasse series gamma_n(y) = -(1/(n+1)) sum_j 1/(j+1) sum_k C(j,k) (-1)^k log^{n+1}(y+k),
  evaluated at a raised argument y = x + N together with the exact correction
  gamma_n(x) = gamma_n(x + N) + sum_{k<N} log^n(x+k) / (x+k). At small y the series
  converges only algebraically; at y of the order of the working digits it converges
  geometrically and a few hundred terms are enough.
* A Cauchy ring around s = 1 applied to zeta(s, x) - 1/(s - 1), whose Taylor
  coefficients are (-1)^n gamma_n(x) / n!.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional

from mpmath import mp, mpf

from .hurwitz import CauchyRingParams, real_part_checked, ring_peak, ring_taylor_coefficients
from .precision import (
    DomainError,
    PrecisionContext,
    RealLike,
    StieltjesError,
    ensure_finite,
    to_big,
)
from .reports import IdentityReport

MAX_STIELTJES_INDEX = 8
MAX_CROSS_CHECK_INDEX = 4
DEFAULT_J_MAX = 400
MIN_J_MAX = 10
HASSE_EXTRA_RATIO = 0.4
HASSE_MAX_DIGITS = 4000


class OracleError(StieltjesError):
    """Raised when a reference computation cannot be carried out."""


class CancellationError(OracleError):
    """Raised when the Hasse binomial sums need more digits than the hard cap allows."""


class Method(str, Enum):
    HASSE = "hasse"
    CAUCHY = "cauchy"
    CLOSED_FORM_BELL = "bell"
    CLOSED_FORM_CCK = "cck"
    CLOSED_FORM_SPLIT = "split"
    AT_ONE = "at_one"


@dataclass(frozen=True, slots=True)
class StieltjesIndex:
    n: int

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise DomainError(f"Stieltjes index must be a nonnegative integer, got {self.n!r}")
        if self.n > MAX_STIELTJES_INDEX:
            raise DomainError(
                f"Stieltjes index {self.n} exceeds the supported cap {MAX_STIELTJES_INDEX}"
            )


@dataclass(slots=True)
class StieltjesResult:
    value: mpf
    err_estimate: mpf
    method: Method
    trace: Optional[Any] = None

    def __post_init__(self) -> None:
        ensure_finite(self.value, f"{self.method.value} result")
        if self.err_estimate < 0:
            raise OracleError("error estimates are nonnegative")


def _index(n: int | StieltjesIndex) -> int:
    return n.n if isinstance(n, StieltjesIndex) else StieltjesIndex(n).n


def _positive(x: RealLike) -> mpf:
    value = to_big(x)
    if value <= 0:
        raise DomainError(f"Stieltjes constants need x > 0, got {x}")
    return value


@dataclass(slots=True)
class _HasseSum:
    series: mpf
    last_term: mpf
    allowance: mpf
    raised: mpf
    shift: int


def _hasse_double_sum(power: int, x: mpf, ctx: PrecisionContext, j_max: int) -> _HasseSum:
    """sum_{j<=j_max} 1/(j+1) sum_k C(j,k)(-1)^k log^power(x+N+k) by forward differencing."""
    if j_max < MIN_J_MAX:
        raise DomainError(f"j_max must be >= {MIN_J_MAX}, got {j_max}")
    digits = ctx.working_digits + math.ceil(HASSE_EXTRA_RATIO * j_max)
    if digits > HASSE_MAX_DIGITS:
        raise CancellationError(
            f"Hasse sums at j_max={j_max} need {digits} digits (cap {HASSE_MAX_DIGITS}); "
            "raise ctx digits or lower j_max"
        )
    shift = ctx.working_digits
    with mp.workdps(digits):
        raised = x + shift
        row = [mp.log(raised + k) ** power for k in range(j_max + 1)]
        peak = max(abs(value) for value in row)
        terms = []
        for j in range(j_max + 1):
            leading = row[0] if j % 2 == 0 else -row[0]
            terms.append(leading / (j + 1))
            row = [row[k + 1] - row[k] for k in range(len(row) - 1)]
        series = mp.fsum(terms)
        allowance = mp.mpf(2) ** j_max * peak * mp.mpf(10) ** (-digits)
    return _HasseSum(series, terms[-1], allowance, raised, shift)


def _hasse_error(total: _HasseSum, j_max: int, scale: mpf, ctx: PrecisionContext) -> mpf:
    tail = abs(total.last_term) * (j_max + 1) / total.raised
    return tail + total.allowance + 10 * ctx.epsilon * max(1, abs(scale))


def stieltjes_hasse(
    n: int | StieltjesIndex, x: RealLike, ctx: PrecisionContext, j_max: int = DEFAULT_J_MAX
) -> StieltjesResult:
    index = _index(n)
    with ctx.workdps():
        x_value = _positive(x)
    total = _hasse_double_sum(index + 1, x_value, ctx, j_max)
    with ctx.workdps():
        correction = mp.fsum(
            mp.log(x_value + k) ** index / (x_value + k) for k in range(total.shift)
        )
        value = correction - total.series / (index + 1)
        err = _hasse_error(total, j_max, correction, ctx) / (index + 1)
        return StieltjesResult(value=+value, err_estimate=err, method=Method.HASSE)


def hasse_x_derivative(
    n: int, x: RealLike, ctx: PrecisionContext, j_max: int = DEFAULT_J_MAX
) -> StieltjesResult:
    """d/dx zeta^{(n)}(0, x) from the Hasse double sum with log^n weights."""
    if n < 1:
        raise DomainError(f"the x-derivative series needs n >= 1, got {n}")
    with ctx.workdps():
        x_value = _positive(x)
    total = _hasse_double_sum(n, x_value, ctx, j_max)
    with ctx.workdps():
        sign = -1 if n % 2 else 1
        correction = n * mp.fsum(
            mp.log(x_value + k) ** (n - 1) / (x_value + k) for k in range(total.shift)
        )
        value = sign * correction - sign * total.series
        err = _hasse_error(total, j_max, correction, ctx)
        return StieltjesResult(value=+value, err_estimate=err, method=Method.HASSE)


def stieltjes_cauchy_all(
    x: RealLike, count: int, ctx: PrecisionContext, ring: CauchyRingParams | None = None
) -> list[StieltjesResult]:
    """gamma_0(x) .. gamma_{count-1}(x) from one ring around s = 1."""
    if count < 1 or count > MAX_STIELTJES_INDEX + 1:
        raise DomainError(f"count must lie in 1..{MAX_STIELTJES_INDEX + 1}, got {count}")
    with ctx.workdps():
        _positive(x)
    ring = ring or CauchyRingParams.for_context(ctx)
    coefficients = ring_taylor_coefficients(x, 1, count, ctx, ring)
    peak = ring_peak(x, 1, ctx, ring)
    results = []
    with ctx.workdps():
        radius = mp.mpmathify(ring.radius)
        aliasing = (radius / (1 + radius)) ** ring.points
        for n, coefficient in enumerate(coefficients):
            scale = math.factorial(n)
            value = real_part_checked(coefficient * scale, ctx, f"Stieltjes ring n={n}")
            if n % 2:
                value = -value
            err = scale * peak * (ring.points * ctx.epsilon + aliasing) / radius**n
            results.append(StieltjesResult(value=value, err_estimate=err, method=Method.CAUCHY))
    return results


def stieltjes_cauchy(
    n: int | StieltjesIndex,
    x: RealLike,
    ctx: PrecisionContext,
    ring: CauchyRingParams | None = None,
) -> StieltjesResult:
    index = _index(n)
    return stieltjes_cauchy_all(x, index + 1, ctx, ring)[index]


def oracle_cross_check(
    n: int, x: RealLike, ctx: PrecisionContext, j_max: int = DEFAULT_J_MAX
) -> IdentityReport:
    if n > MAX_CROSS_CHECK_INDEX:
        raise DomainError(f"cross-check is limited to n <= {MAX_CROSS_CHECK_INDEX}")
    hasse = stieltjes_hasse(n, x, ctx, j_max)
    cauchy = stieltjes_cauchy(n, x, ctx)
    with ctx.workdps():
        return IdentityReport.compare(
            "oracle-cross-check",
            {"n": n, "x": x},
            hasse.value,
            cauchy.value,
            hasse.err_estimate + cauchy.err_estimate,
        )


__all__ = [
    "CancellationError",
    "DEFAULT_J_MAX",
    "Method",
    "OracleError",
    "StieltjesIndex",
    "StieltjesResult",
    "hasse_x_derivative",
    "oracle_cross_check",
    "stieltjes_cauchy",
    "stieltjes_cauchy_all",
    "stieltjes_hasse",
]
