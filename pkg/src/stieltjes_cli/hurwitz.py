from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Hashable, Union

from mpmath import mp, mpc, mpf

from .precision import (
    DomainError,
    PrecisionContext,
    RealLike,
    StieltjesError,
    bernoulli,
    ensure_finite,
    to_big,
    to_scalar,
)

CUTOFF_RATIO = 0.7
DEFAULT_RING_RADIUS = Fraction(1, 2)
RING_POINTS_PER_DIGIT = 4
MIN_RING_POINTS = 16


class HurwitzError(StieltjesError):
    """Raised when the Euler-Maclaurin engine cannot reach the requested precision."""


class HurwitzPoleError(HurwitzError):
    """Raised when s lies within tolerance of the pole at s = 1."""


class QuadratureError(HurwitzError):
    """Raised when a Cauchy ring leaves an imaginary residue above tolerance."""


@dataclass(frozen=True, slots=True)
class HurwitzParams:
    em_cutoff: int
    em_order: int

    def __post_init__(self) -> None:
        if self.em_cutoff < 1 or self.em_order < 1:
            raise DomainError("Euler-Maclaurin cutoff and order must both be >= 1")

    @classmethod
    def for_context(cls, ctx: PrecisionContext, s_abs: float = 0.0) -> HurwitzParams:
        cutoff = max(math.ceil(CUTOFF_RATIO * ctx.working_digits), math.ceil(2 * s_abs), 1)
        return cls(em_cutoff=cutoff, em_order=2 * ctx.working_digits + 20)


@dataclass(frozen=True, slots=True)
class CauchyRingParams:
    radius: Fraction = DEFAULT_RING_RADIUS
    points: int = 64

    def __post_init__(self) -> None:
        radius = Fraction(self.radius)
        if not 0 < radius < 1:
            raise DomainError(f"ring radius must lie in (0, 1), got {self.radius}")
        if self.points < MIN_RING_POINTS or self.points % 2:
            raise DomainError(f"ring points must be even and >= {MIN_RING_POINTS}")
        object.__setattr__(self, "radius", radius)

    @classmethod
    def for_context(cls, ctx: PrecisionContext) -> CauchyRingParams:
        return cls(radius=DEFAULT_RING_RADIUS, points=RING_POINTS_PER_DIGIT * ctx.working_digits)

    def doubled(self) -> CauchyRingParams:
        return CauchyRingParams(radius=self.radius, points=2 * self.points)

    def offsets(self) -> list[mpc]:
        """Ring nodes relative to the centre, at the current precision."""
        radius = mp.mpmathify(self.radius)
        return [radius * mp.expjpi(mp.mpf(2 * k) / self.points) for k in range(self.points)]


@lru_cache(maxsize=8192)
def _em_coefficient(j: int, dps: int) -> mpf:
    with mp.workdps(dps):
        return mp.mpmathify(bernoulli(2 * j) / math.factorial(2 * j))


@lru_cache(maxsize=8192)
def _stirling_coefficient(j: int, dps: int, derivative: bool) -> mpf:
    denominator = 2 * j if derivative else 2 * j * (2 * j - 1)
    with mp.workdps(dps):
        return mp.mpmathify(bernoulli(2 * j) / denominator)


class _EulerMaclaurin:
    """Direct head plus Bernoulli tail for one x, reusable across many s."""

    def __init__(self, x: mpf, params: HurwitzParams, ctx: PrecisionContext) -> None:
        self._params = params
        self._dps = ctx.working_digits
        self._eps = ctx.epsilon
        self._logs = [mp.log(x + k) for k in range(params.em_cutoff)]
        self._shifted = x + params.em_cutoff
        self._log_shifted = mp.log(self._shifted)
        self._inv_square = 1 / (self._shifted * self._shifted)

    def __call__(self, s: Union[mpf, mpc]) -> Union[mpf, mpc]:
        head = mp.fsum(mp.exp(-s * log_term) for log_term in self._logs)
        power = mp.exp(-s * self._log_shifted)
        total = head + power * self._shifted / (s - 1) + power / 2
        rising = s
        factor = power / self._shifted
        for j in range(1, self._params.em_order + 1):
            term = _em_coefficient(j, self._dps) * rising * factor
            total += term
            if abs(term) <= self._eps * max(1, abs(total)):
                return total
            rising *= (s + 2 * j - 1) * (s + 2 * j)
            factor *= self._inv_square
        raise HurwitzError(
            f"Euler-Maclaurin tail did not converge within {self._params.em_order} terms "
            f"(cutoff N={self._params.em_cutoff}); raise the cutoff or lower |s|"
        )


def _positive(x: RealLike, what: str) -> mpf:
    value = to_big(x)
    if value <= 0:
        raise DomainError(f"{what} requires x > 0, got {x}")
    return value


def hurwitz_zeta(
    s: Union[RealLike, complex, mpc],
    x: RealLike,
    ctx: PrecisionContext,
    params: HurwitzParams | None = None,
) -> Union[mpf, mpc]:
    """Hurwitz zeta by Euler-Maclaurin; real s gives an mpf, complex s an mpc."""
    with ctx.workdps():
        s_value = to_scalar(s)
        x_value = _positive(x, "hurwitz_zeta")
        if abs(s_value - 1) <= ctx.tolerance:
            raise HurwitzPoleError(f"hurwitz_zeta is singular at s = 1 (got s = {s})")
        params = params or HurwitzParams.for_context(ctx, float(abs(s_value)))
        value = _EulerMaclaurin(x_value, params, ctx)(s_value)
        return ensure_finite(value, "hurwitz_zeta")


@lru_cache(maxsize=1024)
def _ring_samples(
    x: Hashable, centre: int, ctx: PrecisionContext, ring: CauchyRingParams
) -> tuple[mpc, ...]:
    with ctx.workdps():
        x_value = to_big(x)
        params = HurwitzParams.for_context(ctx, centre + float(ring.radius))
        engine = _EulerMaclaurin(x_value, params, ctx)
        if centre == 0:
            return tuple(mp.mpc(engine(offset)) for offset in ring.offsets())
        return tuple(mp.mpc(engine(1 + offset) - 1 / offset) for offset in ring.offsets())


def ring_taylor_coefficients(
    x: RealLike, centre: int, count: int, ctx: PrecisionContext, ring: CauchyRingParams
) -> list[mpc]:
    """Taylor coefficients about `centre` by trapezoidal Cauchy quadrature.

    centre 0 expands zeta(s, x); centre 1 expands zeta(s, x) - 1/(s - 1).
    """
    if count < 1:
        raise DomainError("at least one Taylor coefficient must be requested")
    _positive(x, "ring quadrature")
    samples = _ring_samples(x, centre, ctx, ring)
    with ctx.workdps():
        radius = mp.mpmathify(ring.radius)
        points = ring.points
        coefficients = []
        for j in range(count):
            total = mp.fsum(
                sample * mp.expjpi(mp.mpf(-2 * ((j * k) % points)) / points)
                for k, sample in enumerate(samples)
            )
            coefficients.append(total / (points * radius**j))
        return coefficients


def ring_peak(x: RealLike, centre: int, ctx: PrecisionContext, ring: CauchyRingParams) -> mpf:
    samples = _ring_samples(x, centre, ctx, ring)
    with ctx.workdps():
        return max(abs(sample) for sample in samples)


def real_part_checked(value: mpc, ctx: PrecisionContext, what: str) -> mpf:
    with ctx.workdps():
        if abs(value.imag) > ctx.tolerance * max(1, abs(value.real)):
            raise QuadratureError(
                f"{what}: imaginary residue {mp.nstr(value.imag, 5)} exceeds tolerance; "
                "increase ring points"
            )
        return ensure_finite(value.real, what)


def zeta_derivs_at0(
    x: RealLike, count: int, ctx: PrecisionContext, ring: CauchyRingParams | None = None
) -> tuple[mpf, ...]:
    """zeta^{(j)}(0, x) for j = 0 .. count - 1 from a single ring."""
    ring = ring or CauchyRingParams.for_context(ctx)
    coefficients = ring_taylor_coefficients(x, 0, count, ctx, ring)
    with ctx.workdps():
        return tuple(
            real_part_checked(coefficient * math.factorial(j), ctx, f"zeta derivative {j}")
            for j, coefficient in enumerate(coefficients)
        )


def zeta_deriv_at0(
    j: int, x: RealLike, ctx: PrecisionContext, ring: CauchyRingParams | None = None
) -> mpf:
    if j < 0:
        raise DomainError(f"derivative order must be >= 0, got {j}")
    return zeta_derivs_at0(x, j + 1, ctx, ring)[j]


def _raised_argument(x: mpf, ctx: PrecisionContext) -> tuple[mpf, int]:
    threshold = CUTOFF_RATIO * ctx.working_digits + 1
    shift = max(0, math.ceil(threshold - float(x)))
    return x + shift, shift


def _stirling_series(z: mpf, ctx: PrecisionContext, derivative: bool) -> mpf:
    eps = ctx.epsilon
    inv_square = 1 / (z * z)
    if derivative:
        total = mp.log(z) - 1 / (2 * z)
        power = inv_square
    else:
        total = (z - mp.mpf(1) / 2) * mp.log(z) - z + mp.log(2 * mp.pi) / 2
        power = 1 / z
    for j in range(1, 2 * ctx.working_digits + 20):
        term = _stirling_coefficient(j, ctx.working_digits, derivative) * power
        total = total - term if derivative else total + term
        if abs(term) <= eps * max(1, abs(total)):
            return total
        power *= inv_square
    raise HurwitzError("Stirling series did not converge; argument raising too small")


def log_gamma(x: RealLike, ctx: PrecisionContext) -> mpf:
    """lnGamma(x) by Stirling's series after raising the argument."""
    with ctx.workdps():
        x_value = _positive(x, "log_gamma")
        z, shift = _raised_argument(x_value, ctx)
        correction = mp.fsum(mp.log(x_value + k) for k in range(shift))
        return ensure_finite(_stirling_series(z, ctx, False) - correction, "log_gamma")


def gamma_real(x: RealLike, ctx: PrecisionContext) -> mpf:
    """Gamma(x) for real x off the non-positive integers, shifted up into log_gamma's domain."""
    with ctx.workdps():
        x_value = to_big(x)
        if x_value <= 0 and x_value == mp.floor(x_value):
            raise DomainError(f"gamma_real has a pole at x = {x}")
        shift = max(0, math.ceil(1 - float(x_value)))
        product = mp.fprod(x_value + k for k in range(shift)) if shift else mp.mpf(1)
        return ensure_finite(mp.exp(log_gamma(x_value + shift, ctx)) / product, "gamma_real")


def digamma(x: RealLike, ctx: PrecisionContext) -> mpf:
    with ctx.workdps():
        x_value = _positive(x, "digamma")
        z, shift = _raised_argument(x_value, ctx)
        correction = mp.fsum(1 / (x_value + k) for k in range(shift))
        return ensure_finite(_stirling_series(z, ctx, True) - correction, "digamma")


def polygamma(order: int, x: RealLike, ctx: PrecisionContext) -> mpf:
    """psi^{(order)}(x) = (-1)^{order+1} order! zeta(order+1, x)."""
    if order < 1:
        raise DomainError(f"polygamma order must be >= 1, got {order}")
    with ctx.workdps():
        sign = -1 if order % 2 == 0 else 1
        return sign * math.factorial(order) * hurwitz_zeta(order + 1, x, ctx)


__all__ = [
    "CauchyRingParams",
    "HurwitzError",
    "HurwitzParams",
    "HurwitzPoleError",
    "QuadratureError",
    "digamma",
    "gamma_real",
    "hurwitz_zeta",
    "log_gamma",
    "polygamma",
    "real_part_checked",
    "ring_peak",
    "ring_taylor_coefficients",
    "zeta_deriv_at0",
    "zeta_derivs_at0",
]
