from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from numbers import Rational
from typing import ContextManager, Union

from mpmath import mp, mpc, mpf

RealLike = Union[mpf, Fraction, int, str]

GUARD_FLOOR = 20
GUARD_RATIO = Fraction(1, 4)
SLACK_DIGITS = 10


class StieltjesError(RuntimeError):
    """Base class for numeric failures raised by the library."""


class DomainError(StieltjesError):
    """Raised when an argument lies outside an operation's domain."""


@dataclass(frozen=True, slots=True)
class PrecisionContext:
    target_digits: int
    guard_digits: int

    def __post_init__(self) -> None:
        if self.target_digits < 1:
            raise DomainError(f"target_digits must be >= 1, got {self.target_digits}")
        if self.guard_digits < 1:
            raise DomainError(f"guard_digits must be >= 1, got {self.guard_digits}")

    @property
    def working_digits(self) -> int:
        return self.target_digits + self.guard_digits

    @property
    def slack_digits(self) -> int:
        return min(SLACK_DIGITS, self.target_digits // 2)

    @property
    def tolerance_digits(self) -> int:
        return self.target_digits - self.slack_digits

    @property
    def tolerance(self) -> mpf:
        with self.workdps():
            return mpf(10) ** (-self.tolerance_digits)

    @property
    def epsilon(self) -> mpf:
        """Unit roundoff at working precision, as a power of ten."""
        with self.workdps():
            return mpf(10) ** (-self.working_digits)

    def workdps(self) -> ContextManager:
        return mp.workdps(self.working_digits)


def make_context(target_digits: int) -> PrecisionContext:
    if isinstance(target_digits, bool) or not isinstance(target_digits, int):
        raise DomainError(f"target_digits must be an integer, got {target_digits!r}")
    if target_digits < 1:
        raise DomainError(f"target_digits must be >= 1, got {target_digits}")
    guard = max(GUARD_FLOOR, math.ceil(GUARD_RATIO * target_digits))
    return PrecisionContext(target_digits=target_digits, guard_digits=guard)


def to_big(value: RealLike) -> mpf:
    """Convert an exact or decimal input to an mpf at the current precision."""
    if isinstance(value, mpf):
        return value
    if isinstance(value, bool):
        raise DomainError("booleans are not numeric arguments")
    if isinstance(value, (int, Rational, str, float)):
        try:
            converted = mp.mpmathify(value)
        except (TypeError, ValueError) as exc:
            raise DomainError(f"cannot parse {value!r} as a real number") from exc
        if isinstance(converted, mpc):
            raise DomainError(f"expected a real value, got {value!r}")
        return converted
    raise DomainError(f"cannot convert {value!r} to a real scalar")


def to_scalar(value: Union[RealLike, complex, mpc]) -> Union[mpf, mpc]:
    if isinstance(value, mpc):
        return value
    if isinstance(value, complex):
        return mp.mpc(value.real, value.imag)
    return to_big(value)


def ensure_finite(value: Union[mpf, mpc], what: str) -> Union[mpf, mpc]:
    parts = (value.real, value.imag) if isinstance(value, mpc) else (value,)
    for part in parts:
        if mp.isnan(part) or mp.isinf(part):
            raise StieltjesError(f"{what} produced a non-finite value")
    return value


_BERNOULLI: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n with B_1 = -1/2."""
    if n < 0:
        raise DomainError(f"bernoulli index must be >= 0, got {n}")
    if n < len(_BERNOULLI):
        return _BERNOULLI[n]
    with _BERNOULLI_LOCK:
        for m in range(len(_BERNOULLI), n + 1):
            if m > 1 and m % 2:
                _BERNOULLI.append(Fraction(0))
                continue
            total = sum(
                (comb(m + 1, k) * _BERNOULLI[k] for k in range(m) if _BERNOULLI[k]),
                Fraction(0),
            )
            _BERNOULLI.append(-total / (m + 1))
    return _BERNOULLI[n]


def euler_gamma(ctx: PrecisionContext) -> mpf:
    with ctx.workdps():
        return +mp.euler


@lru_cache(maxsize=256)
def zeta_int(k: int, ctx: PrecisionContext) -> mpf:
    """Riemann zeta at an integer k >= 2 through the Hurwitz engine at x = 1."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise DomainError(f"zeta_int requires an integer k >= 2, got {k!r}")
    from .hurwitz import hurwitz_zeta

    return hurwitz_zeta(k, 1, ctx)


def cos_sin_2pi(turns: Fraction) -> tuple[mpf, mpf]:
    """cos and sin of 2*pi*turns at the current precision, exact at quarter turns."""
    reduced = (2 * Fraction(turns)) % 2
    half_turns = mp.mpmathify(reduced)
    return mp.cospi(half_turns), mp.sinpi(half_turns)


@dataclass(frozen=True, slots=True)
class RationalArg:
    p: int
    q: int

    def __post_init__(self) -> None:
        if isinstance(self.p, bool) or isinstance(self.q, bool):
            raise DomainError("p and q must be integers")
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise DomainError(f"p and q must be integers, got {self.p!r}/{self.q!r}")
        if not 1 <= self.p <= self.q:
            raise DomainError(f"rational argument requires 1 <= p <= q, got {self.p}/{self.q}")
        divisor = gcd(self.p, self.q)
        object.__setattr__(self, "p", self.p // divisor)
        object.__setattr__(self, "q", self.q // divisor)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def is_one(self) -> bool:
        return self.p == self.q

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


__all__ = [
    "DomainError",
    "PrecisionContext",
    "RationalArg",
    "RealLike",
    "StieltjesError",
    "bernoulli",
    "cos_sin_2pi",
    "ensure_finite",
    "euler_gamma",
    "make_context",
    "to_big",
    "to_scalar",
    "zeta_int",
]
