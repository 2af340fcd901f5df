from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from mpmath import mp, mpf

from .bell import BellKind, bell_args, complete_bell_table
from .hurwitz import digamma, log_gamma, polygamma, zeta_derivs_at0
from .oracle import Method, StieltjesResult, stieltjes_cauchy
from .precision import (
    DomainError,
    PrecisionContext,
    RationalArg,
    cos_sin_2pi,
    euler_gamma,
)

MAX_RATIONAL_INDEX = 7


class ClosedFormError(DomainError):
    """Raised when a cot-bearing closed form is asked for p = q."""


@dataclass(slots=True)
class ClosedFormTrace:
    arg: RationalArg
    n: int
    contributions: list[mpf] = field(default_factory=list)
    bell_values_used: list[mpf] = field(default_factory=list)
    zeta_derivs_used: tuple[tuple[mpf, ...], ...] = ()


def _derivative_order(m: int) -> int:
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise DomainError(f"Stieltjes index must be a nonnegative integer, got {m!r}")
    if m > MAX_RATIONAL_INDEX:
        raise DomainError(f"closed forms are capped at m <= {MAX_RATIONAL_INDEX}, got {m}")
    return m + 1


def _rational(arg: RationalArg | tuple[int, int]) -> RationalArg:
    if isinstance(arg, RationalArg):
        return arg
    p, q = arg
    return RationalArg(p, q)


def _proper(arg: RationalArg | tuple[int, int], operation: str) -> RationalArg:
    arg = _rational(arg)
    if arg.is_one:
        raise ClosedFormError(f"{operation} needs p < q (cot(p*pi/q) is singular at p = q)")
    return arg


@lru_cache(maxsize=256)
def zeta_matrix(q: int, n: int, ctx: PrecisionContext) -> tuple[tuple[mpf, ...], ...]:
    """Row r - 1 holds zeta^{(j)}(0, r/q) for j = 0 .. n."""
    return tuple(zeta_derivs_at0(Fraction(r, q), n + 1, ctx) for r in range(1, q + 1))


def _error_from(contributions: list[mpf], n: int, ctx: PrecisionContext) -> mpf:
    scale = max(1, mp.fsum(abs(value) for value in contributions))
    return scale * ctx.epsilon * math.factorial(n) * 2**n


def _bell_contribution(
    n: int, turns: Fraction, row: tuple[mpf, ...], g_table: list, h_table: list
) -> mpf:
    cosine, sine = cos_sin_2pi(turns)
    half_pi = mp.pi / 2
    terms = []
    for i in range(n + 1):
        weight = g_table[i] * cosine
        if i:
            weight += half_pi * i * h_table[i - 1] * sine
        terms.append(comb(n, i) * weight * row[n - i])
    return 2 * mp.fsum(terms)


def stieltjes_rational_bell(
    m: int, arg: RationalArg | tuple[int, int], ctx: PrecisionContext
) -> StieltjesResult:
    """gamma_m(p/q) from the Bell-polynomial closed form with n = m + 1."""
    n = _derivative_order(m)
    arg = _rational(arg)
    zetas = zeta_matrix(arg.q, n, ctx)
    with ctx.workdps():
        g_table = bell_args(BellKind.G, arg.q, n, ctx).bell_table(n)
        h_table = bell_args(BellKind.H, arg.q, max(1, n - 1), ctx).bell_table(n - 1)
        contributions = [
            _bell_contribution(n, Fraction(r * arg.p, arg.q), zetas[r - 1], g_table, h_table)
            for r in range(1, arg.q + 1)
        ]
        value = mp.fsum(contributions) / n
        trace = ClosedFormTrace(
            arg=arg,
            n=n,
            contributions=contributions,
            bell_values_used=list(g_table) + list(h_table),
            zeta_derivs_used=zetas,
        )
        return StieltjesResult(
            value=value,
            err_estimate=_error_from(contributions, n, ctx),
            method=Method.CLOSED_FORM_BELL,
            trace=trace,
        )


def stieltjes_at_one(m: int, ctx: PrecisionContext) -> StieltjesResult:
    """Classical gamma_m from zeta^{(j)}(0) and the q = 1 Bell arguments."""
    n = _derivative_order(m)
    zetas = zeta_derivs_at0(Fraction(1), n + 1, ctx)
    with ctx.workdps():
        g_table = bell_args(BellKind.G, 1, n, ctx).bell_table(n)
        terms = [comb(n, i) * g_table[i] * zetas[n - i] for i in range(n + 1)]
        value = 2 * mp.fsum(terms) / n
        return StieltjesResult(
            value=value,
            err_estimate=_error_from(terms, n, ctx),
            method=Method.AT_ONE,
        )


def stieltjes_rational_split(
    m: int, arg: RationalArg | tuple[int, int], ctx: PrecisionContext
) -> StieltjesResult:
    """Closed form with the r = q term rebuilt from the classical constants.

    With Y_i(g_q) = sum_k C(i,k) Y_k(g_1) (-log q)^{i-k}, the r = q term equals
    sum_t C(n,t) (-log q)^t A_{n-t}, where A_j = j gamma_{j-1} and A_0 = -1.
    """
    n = _derivative_order(m)
    arg = _rational(arg)
    zetas = zeta_matrix(arg.q, n, ctx)
    classical = [stieltjes_at_one(j - 1, ctx).value for j in range(1, n + 1)]
    with ctx.workdps():
        g_table = bell_args(BellKind.G, arg.q, n, ctx).bell_table(n)
        h_table = bell_args(BellKind.H, arg.q, max(1, n - 1), ctx).bell_table(n - 1)
        contributions = [
            _bell_contribution(n, Fraction(r * arg.p, arg.q), zetas[r - 1], g_table, h_table)
            for r in range(1, arg.q)
        ]
        weights = [mp.mpf(-1)] + [j * classical[j - 1] for j in range(1, n + 1)]
        log_q = mp.log(arg.q)
        contributions.append(
            mp.fsum(comb(n, t) * (-log_q) ** t * weights[n - t] for t in range(n + 1))
        )
        value = mp.fsum(contributions) / n
        return StieltjesResult(
            value=value,
            err_estimate=_error_from(contributions, n, ctx),
            method=Method.CLOSED_FORM_SPLIT,
            trace=ClosedFormTrace(arg=arg, n=n, contributions=contributions),
        )


def half_argument_bell(m: int, ctx: PrecisionContext) -> StieltjesResult:
    return stieltjes_rational_split(m, RationalArg(1, 2), ctx)


def _gamma_function_derivatives(count: int, ctx: PrecisionContext) -> list[mpf]:
    """Gamma^{(k)}(1) = Y_k(psi(1), psi'(1), ..., psi^{(k-1)}(1)) for k < count."""
    args = [digamma(1, ctx)] + [polygamma(k, 1, ctx) for k in range(1, count - 1)]
    return complete_bell_table(args, count - 1)


def _t_factor(order: int, turns: Fraction) -> mpf:
    cosine, sine = cos_sin_2pi(turns)
    if order % 2 == 0:
        return (-1) ** (order // 2) * cosine
    return (-1) ** ((order + 1) // 2) * sine


def stieltjes_rational_cck(
    m: int, arg: RationalArg | tuple[int, int], ctx: PrecisionContext
) -> StieltjesResult:
    """gamma_m(p/q) through the K_l / delta_l representation.

    n gamma_{n-1}(p/q) = 2 (-1)^n sum_l C(n,l) delta_{n-l} sum_r K_l(p/q, r) with
    R_k(x) = (-1)^{k+1} zeta^{(k)}(0, x) for every k >= 0.
    """
    n = _derivative_order(m)
    arg = _rational(arg)
    zetas = zeta_matrix(arg.q, n, ctx)
    with ctx.workdps():
        gamma_derivs = _gamma_function_derivatives(n + 1, ctx)
        log_term = mp.log(2 * mp.pi * arg.q)
        deltas = [
            mp.fsum(
                (-1) ** k * comb(order, k) * gamma_derivs[k] * log_term ** (order - k)
                for k in range(order + 1)
            )
            for order in range(n + 1)
        ]
        half_pi = mp.pi / 2
        sign = -1 if n % 2 else 1
        contributions = []
        for r in range(1, arg.q + 1):
            turns = Fraction(r * arg.p, arg.q)
            row = zetas[r - 1]
            r_values = [(-1) ** (k + 1) * row[k] for k in range(n + 1)]
            t_values = [_t_factor(k, turns) for k in range(n + 1)]
            k_values = [
                -mp.fsum(
                    comb(order, k) * r_values[order - k] * half_pi**k * t_values[k]
                    for k in range(order + 1)
                )
                for order in range(n + 1)
            ]
            contributions.append(
                2 * sign * mp.fsum(comb(n, l) * deltas[n - l] * k_values[l] for l in range(n + 1))
            )
        value = mp.fsum(contributions) / n
        trace = ClosedFormTrace(
            arg=arg,
            n=n,
            contributions=contributions,
            bell_values_used=list(gamma_derivs),
            zeta_derivs_used=zetas,
        )
        return StieltjesResult(
            value=value,
            err_estimate=_error_from(contributions, n, ctx),
            method=Method.CLOSED_FORM_CCK,
            trace=trace,
        )


def _cot_pi(turns: Fraction) -> mpf:
    half = mp.mpmathify(turns)
    return mp.cospi(half) / mp.sinpi(half)


def digamma_rational(arg: RationalArg | tuple[int, int], ctx: PrecisionContext) -> mpf:
    """psi(p/q) = -gamma - log 2q - (pi/2) cot(p pi/q) + sum cos(2 pi r p/q) log sin(pi r/q)."""
    arg = _proper(arg, "digamma_rational")
    with ctx.workdps():
        total = mp.fsum(
            cos_sin_2pi(Fraction(r * arg.p, arg.q))[0] * mp.log(mp.sinpi(mp.mpf(r) / arg.q))
            for r in range(1, arg.q)
        )
        return (
            -euler_gamma(ctx)
            - mp.log(2 * arg.q)
            - mp.pi / 2 * _cot_pi(arg.fraction)
            + total
        )


def digamma_rational_loggamma(arg: RationalArg | tuple[int, int], ctx: PrecisionContext) -> mpf:
    arg = _proper(arg, "digamma_rational_loggamma")
    with ctx.workdps():
        total = mp.fsum(
            cos_sin_2pi(Fraction(r * arg.p, arg.q))[0] * log_gamma(Fraction(r, arg.q), ctx)
            for r in range(1, arg.q + 1)
        )
        return (
            -euler_gamma(ctx)
            - mp.log(2 * mp.pi * arg.q)
            - mp.pi / 2 * _cot_pi(arg.fraction)
            - 2 * total
        )


def _gamma1_pieces(arg: RationalArg, ctx: PrecisionContext) -> tuple[mpf, mpf, mpf]:
    """Sums over r < q of zeta''(0,r/q) cos, lnGamma(r/q) cos and lnGamma(r/q) sin."""
    second, log_cos, log_sin = [], [], []
    for r in range(1, arg.q):
        cosine, sine = cos_sin_2pi(Fraction(r * arg.p, arg.q))
        zeta_second = zeta_derivs_at0(Fraction(r, arg.q), 3, ctx)[2]
        lg = log_gamma(Fraction(r, arg.q), ctx)
        second.append(zeta_second * cosine)
        log_cos.append(lg * cosine)
        log_sin.append(lg * sine)
    return mp.fsum(second), mp.fsum(log_cos), mp.fsum(log_sin)


def gamma1_rational(arg: RationalArg | tuple[int, int], ctx: PrecisionContext) -> mpf:
    """First generalized Stieltjes constant at p/q with p < q."""
    arg = _proper(arg, "gamma1_rational")
    gamma1 = stieltjes_at_one(1, ctx).value
    with ctx.workdps():
        gamma = euler_gamma(ctx)
        log_2pi = mp.log(2 * mp.pi)
        log_2piq = mp.log(2 * mp.pi * arg.q)
        log_q = mp.log(arg.q)
        second, log_cos, log_sin = _gamma1_pieces(arg, ctx)
        return (
            gamma1
            - (gamma + log_2pi) * log_2piq
            - log_q**2 / 2
            + second
            - 2 * (gamma + log_2piq) * log_cos
            + mp.pi * log_sin
            - mp.pi / 2 * (gamma + log_2piq) * _cot_pi(arg.fraction)
        )


def gamma1_deninger(arg: RationalArg | tuple[int, int], ctx: PrecisionContext) -> mpf:
    """Rearranged form gamma_1 + [gamma + log 2 pi q][gamma + psi(p/q)] + ... ."""
    arg = _proper(arg, "gamma1_deninger")
    gamma1 = stieltjes_cauchy(1, 1, ctx).value
    with ctx.workdps():
        gamma = euler_gamma(ctx)
        log_q = mp.log(arg.q)
        deninger_r = [-zeta_derivs_at0(Fraction(j, arg.q), 3, ctx)[2] for j in range(1, arg.q)]
        cos_r = mp.fsum(
            cos_sin_2pi(Fraction(j * arg.p, arg.q))[0] * deninger_r[j - 1]
            for j in range(1, arg.q)
        )
        sin_log = mp.fsum(
            cos_sin_2pi(Fraction(j * arg.p, arg.q))[1] * log_gamma(Fraction(j, arg.q), ctx)
            for j in range(1, arg.q)
        )
        return (
            gamma1
            + (gamma + mp.log(2 * mp.pi * arg.q)) * (gamma + digamma(arg.fraction, ctx))
            - cos_r
            + mp.pi * sin_log
            + log_q**2 / 2
            + log_q * mp.log(2 * mp.pi)
        )


WORKED_EXAMPLES = (Fraction(1, 4), Fraction(3, 4), Fraction(1, 5))


def gamma1_worked_example(arg: RationalArg | tuple[int, int], ctx: PrecisionContext) -> mpf:
    """Explicit gamma_1 values at 1/4, 3/4 and 1/5 from gamma, gamma_1, lnGamma and zeta''."""
    arg = _rational(arg)
    if arg.fraction not in WORKED_EXAMPLES:
        raise DomainError(f"no worked example for {arg}")
    gamma1 = stieltjes_cauchy(1, 1, ctx).value
    with ctx.workdps():
        gamma = euler_gamma(ctx)
        pi = mp.pi
        if arg.q == 4:
            log2 = mp.log(2)
            symmetric = (2 * gamma1 - 7 * log2**2 - 6 * gamma * log2) / 2
            odd = pi / 2 * (gamma + 4 * log2 + 3 * mp.log(pi) - 4 * log_gamma(Fraction(1, 4), ctx))
            return symmetric - odd if arg.p == 1 else symmetric + odd
        log5 = mp.log(5)
        root5 = mp.sqrt(5)
        second = [zeta_derivs_at0(Fraction(j, 5), 3, ctx)[2] for j in range(1, 5)]
        lg = [log_gamma(Fraction(j, 5), ctx) for j in range(1, 5)]
        gamma_log = gamma + mp.log(10 * pi)
        return (
            (4 * gamma1 - mp.mpf(5) / 2 * log5**2 - 5 * gamma * log5) / 4
            - pi / 2 * gamma_log * mp.cot(pi / 5)
            + root5
            / 4
            * (
                second[0]
                - second[1]
                - second[2]
                + second[3]
                - gamma_log * mp.log((3 + root5) / 2)
            )
            + pi
            * (
                mp.sin(2 * pi / 5) * (lg[0] - lg[3])
                + mp.sin(pi / 5) * (lg[1] - lg[2])
            )
        )


__all__ = [
    "ClosedFormError",
    "ClosedFormTrace",
    "MAX_RATIONAL_INDEX",
    "WORKED_EXAMPLES",
    "digamma_rational",
    "digamma_rational_loggamma",
    "gamma1_deninger",
    "gamma1_rational",
    "gamma1_worked_example",
    "half_argument_bell",
    "stieltjes_at_one",
    "stieltjes_rational_bell",
    "stieltjes_rational_cck",
    "stieltjes_rational_split",
    "zeta_matrix",
]
