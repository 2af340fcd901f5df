from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence, TypeVar

from mpmath import mp, mpf

from .precision import PrecisionContext, StieltjesError, euler_gamma, zeta_int

Number = TypeVar("Number")


class BellError(StieltjesError):
    """Raised when a Bell polynomial or argument vector cannot be formed."""


class BellKind(str, Enum):
    G = "G"
    H = "H"
    PSI_STAR = "PSI_STAR"


@dataclass(frozen=True, slots=True)
class BellArgumentSet:
    kind: BellKind
    q: int
    values: tuple[mpf, ...]

    def bell_table(self, n: int) -> list[mpf]:
        """Y_0 .. Y_n evaluated at this argument vector."""
        return complete_bell_table(self.values, n)


def complete_bell_table(args: Sequence[Number], n: int) -> list[Number]:
    if n < 0:
        raise BellError(f"Bell index must be >= 0, got {n}")
    if len(args) < n:
        raise BellError(f"Y_{n} needs {n} arguments, got {len(args)}")
    table: list = [1]
    for m in range(n):
        table.append(sum(comb(m, k) * table[m - k] * args[k] for k in range(m + 1)))
    return table


def complete_bell(args: Sequence[Number], n: int) -> Number:
    """Y_n(x_1, ..., x_n) by Y_{n+1} = sum_k C(n, k) Y_{n-k} x_{k+1}."""
    return complete_bell_table(args, n)[n]


@lru_cache(maxsize=64)
def _zeta_values(count: int, ctx: PrecisionContext) -> tuple[mpf, ...]:
    # entry i holds zeta(i + 1); entry 0 is unused
    return (mp.mpf(0),) + tuple(zeta_int(k, ctx) for k in range(2, count + 1))


def bell_args(kind: BellKind, q: int, count: int, ctx: PrecisionContext) -> BellArgumentSet:
    kind = BellKind(kind)
    if count < 1:
        raise BellError("argument count must be >= 1")
    if q < 1:
        raise BellError(f"q must be >= 1, got {q}")
    zetas = _zeta_values(count, ctx)
    with ctx.workdps():
        base = euler_gamma(ctx) + mp.log(2 * mp.pi * q)
        values = [base if kind is BellKind.PSI_STAR else -base]
        for i in range(1, count):
            scaled = math.factorial(i) * zetas[i]
            if kind is BellKind.G:
                factor = Fraction((-1) ** (i + 1) + 1, 2 ** (i + 1)) - 1
            elif kind is BellKind.H:
                # psi^{(i)}(1) [1 - (1 - (-1)^i) / 2^{i+1}], psi^{(i)}(1) = (-1)^{i+1} i! zeta(i+1)
                factor = (-1) ** (i + 1) * (1 - Fraction(1 - (-1) ** i, 2 ** (i + 1)))
            else:
                factor = Fraction(1)
            values.append(mp.mpmathify(factor) * scaled)
        return BellArgumentSet(kind=kind, q=q, values=tuple(values))


__all__ = [
    "BellArgumentSet",
    "BellError",
    "BellKind",
    "bell_args",
    "complete_bell",
    "complete_bell_table",
]
