from __future__ import annotations

import fnmatch
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Any, Callable, Iterable, Mapping, Optional, Union

from mpmath import mp, mpc, mpf

from .hurwitz import (
    digamma,
    gamma_real,
    hurwitz_zeta,
    log_gamma,
    zeta_deriv_at0,
    zeta_derivs_at0,
)
from .oracle import (
    DEFAULT_J_MAX,
    hasse_x_derivative,
    oracle_cross_check,
    stieltjes_cauchy,
    stieltjes_cauchy_all,
)
from .precision import (
    DomainError,
    PrecisionContext,
    RationalArg,
    StieltjesError,
    cos_sin_2pi,
    euler_gamma,
    make_context,
)
from .rational import (
    WORKED_EXAMPLES,
    digamma_rational,
    digamma_rational_loggamma,
    gamma1_deninger,
    gamma1_rational,
    gamma1_worked_example,
    half_argument_bell,
    stieltjes_at_one,
    stieltjes_rational_bell,
    stieltjes_rational_cck,
    stieltjes_rational_split,
)
from .reports import IdentityReport

DEFAULT_Q_MAX = 5
DEFAULT_RAMANUJAN_TERMS = 1_000_000
RAMANUJAN_TAIL = 1000
RAMANUJAN_LEAN_DIGITS = 20
RAMANUJAN_TOLERANCE = Fraction(1, 10**4)
FINITE_DIFFERENCE_STEP = Fraction(1, 10**6)
FINITE_DIFFERENCE_TOLERANCE = Fraction(1, 10**8)
INTEGRAL_DIGITS = 20
INTEGRAL_TOLERANCE = Fraction(1, 10**10)

RADEMACHER_S = (Fraction(-5, 2), Fraction(-3, 2), Fraction(-1, 2), Fraction(23, 10))
RADEMACHER_REFLECTED_S = (Fraction(7, 2), Fraction(5, 2), Fraction(3, 2), Fraction(-13, 10))
RADEMACHER_ARGS = ((1, 3), (2, 5), (3, 7))
KUBERT_S = (Fraction(-1, 2), Fraction(23, 10))
LCK_S = (Fraction(3, 10), Fraction(7, 10))
MULTIPLICATION_QS = (2, 3, 5)
MULTIPLICATION_X = (Fraction(3, 10), Fraction(7, 10))
FUNCTIONAL_X = (Fraction(1, 8), Fraction(1, 6), Fraction(1, 5))
ORACLE_X = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1))
DIGAMMA_X = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(5, 2))
RAMANUJAN_X = (Fraction(1, 3), Fraction(1, 4))
TRIG_KINDS = ("sin", "cos", "r-sin", "r-cos")

Params = Mapping[str, Any]
Scalar = Union[mpf, mpc]


class IdentityError(StieltjesError):
    """Raised when identity parameters fall outside the identity's domain."""


class UnknownIdentityError(IdentityError):
    """Raised when no registered identity matches a name or pattern."""


@dataclass(slots=True)
class SuiteGrid:
    q_max: int = DEFAULT_Q_MAX
    ramanujan_terms: int = DEFAULT_RAMANUJAN_TERMS
    j_max: int = DEFAULT_J_MAX

    def __post_init__(self) -> None:
        if self.q_max < 2:
            raise IdentityError(f"q_max must be >= 2, got {self.q_max}")
        if self.ramanujan_terms <= RAMANUJAN_TAIL:
            raise IdentityError(f"ramanujan_terms must exceed {RAMANUJAN_TAIL}")

    def proper_rationals(self) -> list[RationalArg]:
        return [
            RationalArg(p, q)
            for q in range(2, self.q_max + 1)
            for p in range(1, q)
            if gcd(p, q) == 1
        ]

    def rationals(self) -> list[RationalArg]:
        return [RationalArg(1, 1)] + self.proper_rationals()


@dataclass(slots=True)
class Sides:
    lhs: Scalar
    rhs: Scalar
    tolerance: Optional[mpf] = None


@dataclass(slots=True)
class IdentitySpec:
    name: str
    evaluate: Callable[[Params, PrecisionContext], Sides]
    grid: Callable[[SuiteGrid], list[dict[str, Any]]]
    tolerance: Optional[Fraction] = None
    summary: str = ""

    def tolerance_for(self, ctx: PrecisionContext) -> mpf:
        if self.tolerance is None:
            return ctx.tolerance
        with ctx.workdps():
            return mp.mpmathify(self.tolerance)


@dataclass(slots=True)
class SuiteSummary:
    total: int = 0
    passed: int = 0
    failed: list[IdentityReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failed


def _arg(params: Params) -> RationalArg:
    return RationalArg(int(params["p"]), int(params["q"]))


def _proper(params: Params, name: str) -> RationalArg:
    arg = _arg(params)
    if arg.is_one:
        raise IdentityError(f"{name} needs p < q, got {arg}")
    return arg


def _second(x: Fraction, ctx: PrecisionContext) -> mpf:
    return zeta_deriv_at0(2, x, ctx)


def _cot_pi(turns: Fraction) -> mpf:
    value = mp.mpmathify(turns)
    return mp.cospi(value) / mp.sinpi(value)


def _rational_grid(grid: SuiteGrid) -> list[dict[str, Any]]:
    return [{"p": arg.p, "q": arg.q} for arg in grid.proper_rationals()]


def _indexed_grid(m_max: int, with_one: bool = False) -> Callable[[SuiteGrid], list[dict]]:
    def build(grid: SuiteGrid) -> list[dict[str, Any]]:
        args = grid.rationals() if with_one else grid.proper_rationals()
        return [{"m": m, "p": arg.p, "q": arg.q} for m in range(m_max + 1) for arg in args]

    return build


def _fixed(points: Iterable[dict[str, Any]]) -> Callable[[SuiteGrid], list[dict]]:
    frozen = [dict(point) for point in points]
    return lambda grid: [dict(point) for point in frozen]


# Functional equations


def _rademacher(params: Params, ctx: PrecisionContext) -> Sides:
    s = Fraction(params["s"])
    arg = _arg(params)
    if s in (0, 1):
        raise IdentityError(f"rademacher needs s outside {{0, 1}}, got {s}")
    lhs = hurwitz_zeta(s, arg.fraction, ctx)
    gamma_term = gamma_real(1 - s, ctx)
    with ctx.workdps():
        terms = [
            mp.sinpi(mp.mpmathify(s / 2 + Fraction(2 * j * arg.p, arg.q)))
            * hurwitz_zeta(1 - s, Fraction(j, arg.q), ctx)
            for j in range(1, arg.q + 1)
        ]
        rhs = 2 * gamma_term * (2 * mp.pi * arg.q) ** (mp.mpmathify(s) - 1) * mp.fsum(terms)
        return Sides(lhs, rhs)


def _rademacher_reflected(params: Params, ctx: PrecisionContext) -> Sides:
    s = Fraction(params["s"])
    arg = _arg(params)
    if s == 1 or (s <= 0 and s.denominator == 1):
        raise IdentityError(
            f"rademacher-reflected needs s off 1 and the non-positive integers, got {s}"
        )
    lhs = hurwitz_zeta(1 - s, arg.fraction, ctx)
    gamma_term = gamma_real(s, ctx)
    with ctx.workdps():
        terms = [
            mp.cospi(mp.mpmathify(Fraction(2 * j * arg.p, arg.q) - s / 2))
            * hurwitz_zeta(s, Fraction(j, arg.q), ctx)
            for j in range(1, arg.q + 1)
        ]
        rhs = 2 * gamma_term * (2 * mp.pi * arg.q) ** (-mp.mpmathify(s)) * mp.fsum(terms)
        return Sides(lhs, rhs)


def _lck_weighted(
    params: Params, ctx: PrecisionContext, weight: Callable[[Fraction], Scalar]
) -> tuple[Fraction, RationalArg, Scalar, mpf, mpf, mpf]:
    s = Fraction(params["s"])
    arg = _proper(params, "lck")
    if not 0 < s < 1:
        raise IdentityError(f"lck identities are checked on 0 < s < 1, got {s}")
    with ctx.workdps():
        s_value = mp.mpmathify(s)
        total = mp.fsum(
            weight(Fraction(j * arg.p, arg.q)) * hurwitz_zeta(s, Fraction(j, arg.q), ctx)
            for j in range(1, arg.q + 1)
        )
        lhs = total / mp.mpf(arg.q) ** s_value
        factor = gamma_real(1 - s, ctx) / (2 * mp.pi) ** (1 - s_value)
        direct = hurwitz_zeta(1 - s, arg.fraction, ctx)
        mirrored = hurwitz_zeta(1 - s, 1 - arg.fraction, ctx)
        return s, arg, lhs, factor, direct, mirrored


def _lck_real(params: Params, ctx: PrecisionContext) -> Sides:
    s, _, lhs, factor, direct, mirrored = _lck_weighted(
        params, ctx, lambda turns: cos_sin_2pi(turns)[0]
    )
    with ctx.workdps():
        return Sides(lhs, factor * mp.sinpi(mp.mpmathify(s) / 2) * (direct + mirrored))


def _lck_imag(params: Params, ctx: PrecisionContext) -> Sides:
    s, _, lhs, factor, direct, mirrored = _lck_weighted(
        params, ctx, lambda turns: cos_sin_2pi(turns)[1]
    )
    with ctx.workdps():
        return Sides(lhs, factor * mp.cospi(mp.mpmathify(s) / 2) * (direct - mirrored))


def _lck_complex(params: Params, ctx: PrecisionContext) -> Sides:
    def weight(turns: Fraction) -> mpc:
        cosine, sine = cos_sin_2pi(turns)
        return mp.mpc(cosine, sine)

    s, _, lhs, factor, direct, mirrored = _lck_weighted(params, ctx, weight)
    with ctx.workdps():
        half = mp.mpmathify(s) / 2
        rhs = mp.j * factor * (mp.expjpi(-half) * direct - mp.expjpi(half) * mirrored)
        return Sides(lhs, rhs)


# Multiplication theorems


def _kubert(params: Params, ctx: PrecisionContext) -> Sides:
    s = Fraction(params["s"])
    q = int(params["q"])
    x = Fraction(params["x"])
    lhs_zeta = hurwitz_zeta(s, x, ctx)
    with ctx.workdps():
        lhs = mp.mpf(q) ** mp.mpmathify(s) * lhs_zeta
        rhs = mp.fsum(hurwitz_zeta(s, (r + x) / q, ctx) for r in range(q))
        return Sides(lhs, rhs)


def _gauss_mult_gamma(params: Params, ctx: PrecisionContext) -> Sides:
    q = int(params["q"])
    x = Fraction(params["x"])
    lhs = log_gamma(x, ctx)
    with ctx.workdps():
        rhs = (
            mp.fsum(log_gamma((r + x) / q, ctx) for r in range(q))
            - mp.mpf(q - 1) / 2 * mp.log(2 * mp.pi)
            - mp.mpmathify(Fraction(1, 2) - x) * mp.log(q)
        )
        return Sides(lhs, rhs)


def _mult_zeta_dd(params: Params, ctx: PrecisionContext) -> Sides:
    q = int(params["q"])
    x = Fraction(params["x"])
    with ctx.workdps():
        log_q = mp.log(q)
        lhs = (
            _second(x, ctx)
            + 2 * log_q * (log_gamma(x, ctx) - mp.log(2 * mp.pi) / 2)
            + mp.mpmathify(Fraction(1, 2) - x) * log_q**2
        )
        rhs = mp.fsum(_second((r + x) / q, ctx) for r in range(q))
        return Sides(lhs, rhs)


def _mult_zeta_dd_doubling(params: Params, ctx: PrecisionContext) -> Sides:
    x = Fraction(params["x"])
    with ctx.workdps():
        log2 = mp.log(2)
        lhs = _second(2 * x, ctx) - _second(x + Fraction(1, 2), ctx)
        rhs = (
            _second(x, ctx)
            - 2 * log2 * (log_gamma(2 * x, ctx) - mp.log(2 * mp.pi) / 2)
            - log2**2 * mp.mpmathify(Fraction(1, 2) - 2 * x)
        )
        return Sides(lhs, rhs)


def _zeta_dd_sum(params: Params, ctx: PrecisionContext) -> Sides:
    q = int(params["q"])
    with ctx.workdps():
        lhs = mp.fsum(_second(Fraction(r, q), ctx) for r in range(1, q))
        log_q = mp.log(q)
        return Sides(lhs, -log_q * mp.log(2 * mp.pi) - log_q**2 / 2)


def _func_eq_zdd(params: Params, ctx: PrecisionContext) -> Sides:
    x = Fraction(params["x"])
    if not 0 < x < Fraction(1, 2):
        raise IdentityError(f"func-eq-zdd needs 0 < x < 1/2, got {x}")
    half = Fraction(1, 2)
    with ctx.workdps():
        lhs = _second(x + half, ctx) + _second(half - x, ctx)
        rhs = (
            _second(2 * x, ctx)
            + _second(1 - 2 * x, ctx)
            - (_second(x, ctx) + _second(1 - x, ctx))
            - 2 * mp.log(2) * mp.log(2 * mp.sinpi(mp.mpmathify(2 * x)))
        )
        return Sides(lhs, rhs)


def _func_eq_gamma1(params: Params, ctx: PrecisionContext) -> Sides:
    x = Fraction(params["x"])
    if not 0 < x < Fraction(1, 2):
        raise IdentityError(f"func-eq-gamma1 needs 0 < x < 1/2, got {x}")
    half = Fraction(1, 2)

    def gamma1(t: Fraction) -> mpf:
        return stieltjes_cauchy(1, t, ctx).value

    with ctx.workdps():
        lhs = gamma1(x + half) - gamma1(half - x)
        rhs = (
            2 * (gamma1(2 * x) - gamma1(1 - 2 * x))
            - (gamma1(x) - gamma1(1 - x))
            - 2 * mp.pi * mp.log(2) * _cot_pi(2 * x)
        )
        return Sides(lhs, rhs)


def ramanujan_cos_sum(x: Fraction, terms: int, tail: int = RAMANUJAN_TAIL) -> mpf:
    """Mean of the last `tail` partial sums of sum_{n <= terms} log(n)/n cos(2 pi n x)."""
    x = Fraction(x)
    if tail < 1 or terms <= tail:
        raise IdentityError(f"need terms > tail >= 1, got terms={terms}, tail={tail}")
    with mp.workdps(RAMANUJAN_LEAN_DIGITS):
        period = x.denominator
        cosines = [cos_sin_2pi(k * x)[0] for k in range(period)]
        partial = mp.zero
        window = mp.zero
        for n in range(2, terms + 1):
            partial += mp.log(n) / n * cosines[n % period]
            if n > terms - tail:
                window += partial
        return window / tail


def _ramanujan(params: Params, ctx: PrecisionContext) -> Sides:
    x = Fraction(params["x"])
    if not 0 < x < 1:
        raise IdentityError(f"ramanujan-cos-sum needs 0 < x < 1, got {x}")
    terms = int(params.get("terms", DEFAULT_RAMANUJAN_TERMS))
    lhs = ramanujan_cos_sum(x, terms)
    with ctx.workdps():
        rhs = (_second(x, ctx) + _second(1 - x, ctx)) / 2 + (
            euler_gamma(ctx) + mp.log(2 * mp.pi)
        ) * mp.log(2 * mp.sinpi(mp.mpmathify(x)))
        return Sides(+lhs, rhs)


# Stieltjes constants at one and their building blocks


def _apostol(params: Params, ctx: PrecisionContext) -> Sides:
    lhs = _second(Fraction(1), ctx)
    gamma1 = stieltjes_cauchy(1, 1, ctx).value
    with ctx.workdps():
        gamma = euler_gamma(ctx)
        rhs = gamma1 + gamma**2 / 2 - mp.pi**2 / 24 - mp.log(2 * mp.pi) ** 2 / 2
        return Sides(lhs, rhs)


def _bell_at_one(params: Params, ctx: PrecisionContext) -> Sides:
    m = int(params["m"])
    return Sides(stieltjes_at_one(m, ctx).value, stieltjes_cauchy(m, 1, ctx).value)


def _gamma0_digamma(params: Params, ctx: PrecisionContext) -> Sides:
    x = Fraction(params["x"])
    gamma0 = stieltjes_cauchy(0, x, ctx).value
    psi = digamma(x, ctx)
    with ctx.workdps():
        return Sides(gamma0, -psi)


def _hasse_x_derivative(params: Params, ctx: PrecisionContext) -> Sides:
    n = int(params["n"])
    x = Fraction(params["x"])
    h = FINITE_DIFFERENCE_STEP
    if x <= h:
        raise IdentityError(f"hasse-x-derivative needs x > {h}, got {x}")
    lhs = hasse_x_derivative(n, x, ctx, int(params.get("j_max", DEFAULT_J_MAX))).value
    with ctx.workdps():
        upper = zeta_deriv_at0(n, x + h, ctx)
        lower = zeta_deriv_at0(n, x - h, ctx)
        return Sides(lhs, (upper - lower) / (2 * mp.mpmathify(h)))


def _stieltjes_integral(params: Params, ctx: PrecisionContext) -> Sides:
    n = int(params["n"])
    x = Fraction(params["x"])
    if x <= 0:
        raise IdentityError(f"stieltjes-integral needs x > 0, got {x}")
    lean = make_context(min(INTEGRAL_DIGITS, ctx.target_digits))
    with lean.workdps():
        lhs = mp.quad(
            lambda t: stieltjes_cauchy(n, t, lean).value,
            [1, mp.mpmathify(x)],
            method="gauss-legendre",
        )
    with ctx.workdps():
        at_x = zeta_derivs_at0(x, n + 2, ctx)[n + 1]
        at_one = zeta_derivs_at0(Fraction(1), n + 2, ctx)[n + 1]
        sign = 1 if n % 2 else -1
        return Sides(+lhs, sign * (at_x - at_one) / (n + 1))


def _oracle_cross_check(params: Params, ctx: PrecisionContext) -> Sides:
    report = oracle_cross_check(
        int(params["n"]), Fraction(params["x"]), ctx, int(params.get("j_max", DEFAULT_J_MAX))
    )
    with ctx.workdps():
        return Sides(report.lhs, report.rhs, max(report.tolerance, ctx.tolerance))


# Closed forms at rational arguments


def _gauss_digamma(params: Params, ctx: PrecisionContext) -> Sides:
    arg = _proper(params, "gauss-digamma")
    return Sides(digamma_rational(arg, ctx), digamma(arg.fraction, ctx))


def _gauss_digamma_loggamma(params: Params, ctx: PrecisionContext) -> Sides:
    arg = _proper(params, "gauss-digamma-loggamma")
    return Sides(digamma_rational_loggamma(arg, ctx), digamma(arg.fraction, ctx))


def _deninger(params: Params, ctx: PrecisionContext) -> Sides:
    arg = _proper(params, "deninger-gamma1")
    return Sides(gamma1_rational(arg, ctx), gamma1_deninger(arg, ctx))


def _worked_examples(params: Params, ctx: PrecisionContext) -> Sides:
    arg = _proper(params, "gamma1-worked-examples")
    return Sides(gamma1_rational(arg, ctx), gamma1_worked_example(arg, ctx))


def _half_argument(params: Params, ctx: PrecisionContext) -> Sides:
    m = int(params["m"])
    return Sides(half_argument_bell(m, ctx).value, stieltjes_cauchy(m, Fraction(1, 2), ctx).value)


def _bell_split(params: Params, ctx: PrecisionContext) -> Sides:
    m, arg = int(params["m"]), _arg(params)
    return Sides(
        stieltjes_rational_bell(m, arg, ctx).value, stieltjes_rational_split(m, arg, ctx).value
    )


def _rational_paths(params: Params, ctx: PrecisionContext) -> Sides:
    m, arg = int(params["m"]), _arg(params)
    return Sides(
        stieltjes_rational_bell(m, arg, ctx).value, stieltjes_rational_cck(m, arg, ctx).value
    )


def _rational_oracle(params: Params, ctx: PrecisionContext) -> Sides:
    m, arg = int(params["m"]), _arg(params)
    return Sides(
        stieltjes_rational_bell(m, arg, ctx).value,
        stieltjes_cauchy(m, arg.fraction, ctx).value,
    )


def _trig_sums(params: Params, ctx: PrecisionContext) -> Sides:
    kind = params["kind"]
    if kind not in TRIG_KINDS:
        raise IdentityError(f"trig-sums kind must be one of {TRIG_KINDS}, got {kind!r}")
    arg = _proper(params, "trig-sums")
    with ctx.workdps():
        pairs = [cos_sin_2pi(Fraction(r * arg.p, arg.q)) for r in range(1, arg.q + 1)]
        if kind == "sin":
            return Sides(mp.fsum(sine for _, sine in pairs), mp.zero)
        if kind == "cos":
            return Sides(mp.fsum(cosine for cosine, _ in pairs), mp.zero)
        if kind == "r-sin":
            lhs = mp.fsum(r * sine for r, (_, sine) in enumerate(pairs, start=1))
            return Sides(lhs, -mp.mpf(arg.q) / 2 * _cot_pi(arg.fraction))
        lhs = mp.fsum(r * cosine for r, (cosine, _) in enumerate(pairs, start=1))
        return Sides(lhs, mp.mpf(arg.q) / 2)


# Sums over j/q of digamma and gamma_1 (gamma_1 from the oracle)


def _weighted(arg: RationalArg, values: Callable[[Fraction], mpf], use_sine: bool) -> mpf:
    return mp.fsum(
        cos_sin_2pi(Fraction(j * arg.p, arg.q))[1 if use_sine else 0] * values(Fraction(j, arg.q))
        for j in range(1, arg.q + 1)
    )


def _gamma_log_term(arg: RationalArg, ctx: PrecisionContext) -> mpf:
    return euler_gamma(ctx) + mp.log(2 * mp.pi * arg.q)


def _prop_6_1(params: Params, ctx: PrecisionContext) -> Sides:
    arg = _proper(params, "prop-6-1")
    with ctx.workdps():
        lhs = _weighted(arg, lambda t: digamma(t, ctx), use_sine=True)
        return Sides(lhs, mp.pi * arg.q * mp.mpmathify(arg.fraction - Fraction(1, 2)))


def _prop_6_2(params: Params, ctx: PrecisionContext) -> Sides:
    arg = _proper(params, "prop-6-2")
    with ctx.workdps():
        lhs = _weighted(arg, lambda t: digamma(t, ctx), use_sine=False)
        return Sides(lhs, arg.q * mp.log(2 * mp.sinpi(mp.mpmathify(arg.fraction))))


def _gamma1_oracle(ctx: PrecisionContext) -> Callable[[Fraction], mpf]:
    return lambda t: stieltjes_cauchy_all(t, 2, ctx)[1].value


def _prop_6_3(params: Params, ctx: PrecisionContext) -> Sides:
    arg = _proper(params, "prop-6-3")
    with ctx.workdps():
        lhs = _weighted(arg, _gamma1_oracle(ctx), use_sine=True)
        bracket = (
            2 * log_gamma(arg.fraction, ctx)
            - mp.log(mp.pi)
            + mp.log(mp.sinpi(mp.mpmathify(arg.fraction)))
        )
        rhs = mp.pi * arg.q / 2 * bracket + mp.pi * arg.q * _gamma_log_term(
            arg, ctx
        ) * mp.mpmathify(arg.fraction - Fraction(1, 2))
        return Sides(lhs, rhs)


def _prop_6_4(params: Params, ctx: PrecisionContext) -> Sides:
    arg = _proper(params, "prop-6-4")
    with ctx.workdps():
        lhs = _weighted(arg, _gamma1_oracle(ctx), use_sine=False)
        rhs = mp.mpf(arg.q) / 2 * (
            _second(arg.fraction, ctx) + _second(1 - arg.fraction, ctx)
        ) + arg.q * _gamma_log_term(arg, ctx) * mp.log(2 * mp.sinpi(mp.mpmathify(arg.fraction)))
        return Sides(lhs, rhs)


def _prop_6_5(params: Params, ctx: PrecisionContext) -> Sides:
    arg = _proper(params, "prop-6-5")
    gamma1 = _gamma1_oracle(ctx)
    with ctx.workdps():
        lhs = mp.fsum(
            cos_sin_2pi(Fraction(j * arg.p, arg.q))[1] * log_gamma(Fraction(j, arg.q), ctx)
            for j in range(1, arg.q)
        )
        rhs = (gamma1(arg.fraction) - gamma1(1 - arg.fraction)) / (2 * mp.pi) + _gamma_log_term(
            arg, ctx
        ) / 2 * _cot_pi(arg.fraction)
        return Sides(lhs, rhs)


def _prop_6_6(params: Params, ctx: PrecisionContext) -> Sides:
    arg = _proper(params, "prop-6-6")
    with ctx.workdps():
        lhs = 2 * _weighted(arg, lambda t: log_gamma(t, ctx), use_sine=False)
        rhs = (
            -mp.pi / 2 * _cot_pi(arg.fraction)
            - _gamma_log_term(arg, ctx)
            - digamma(arg.fraction, ctx)
        )
        return Sides(lhs, rhs)


def _prop_6_7(params: Params, ctx: PrecisionContext) -> Sides:
    arg = _proper(params, "prop-6-7")
    with ctx.workdps():
        lhs = (
            stieltjes_cauchy(2, arg.fraction, ctx).value
            - stieltjes_cauchy(2, 1 - arg.fraction, ctx).value
        )
        log_term = _gamma_log_term(arg, ctx)
        second_sine = mp.fsum(
            cos_sin_2pi(Fraction(j * arg.p, arg.q))[1] * _second(Fraction(j, arg.q), ctx)
            for j in range(1, arg.q)
        )
        rhs = (
            2 * mp.pi * second_sine
            - 4 * mp.pi * log_term * _weighted(arg, lambda t: log_gamma(t, ctx), use_sine=True)
            + mp.pi / 2 * (2 * log_term**2 + mp.pi**2 / 6) * _cot_pi(arg.fraction)
        )
        return Sides(lhs, rhs)


def _build_registry() -> dict[str, IdentitySpec]:
    rational = _rational_grid
    specs = [
        IdentitySpec(
            "rademacher",
            _rademacher,
            _fixed({"s": s, "p": p, "q": q} for s in RADEMACHER_S for p, q in RADEMACHER_ARGS),
            summary="zeta(s,p/q) through zeta(1-s,j/q) with sine weights",
        ),
        IdentitySpec(
            "rademacher-reflected",
            _rademacher_reflected,
            _fixed(
                {"s": s, "p": p, "q": q}
                for s in RADEMACHER_REFLECTED_S
                for p, q in RADEMACHER_ARGS
            ),
            summary="zeta(1-s,p/q) through zeta(s,j/q) with cosine weights",
        ),
        IdentitySpec(
            "hasse-x-derivative",
            _hasse_x_derivative,
            lambda grid: [
                {"n": n, "x": x, "j_max": grid.j_max}
                for n in (1, 2, 3)
                for x in (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))
            ],
            tolerance=FINITE_DIFFERENCE_TOLERANCE,
            summary="x-derivative series against a central difference",
        ),
        IdentitySpec(
            "stieltjes-integral",
            _stieltjes_integral,
            _fixed({"n": n, "x": x} for n in (0, 1, 2) for x in (Fraction(1, 2), Fraction(2))),
            tolerance=INTEGRAL_TOLERANCE,
            summary="integral of gamma_n from 1 to x against zeta^{(n+1)}(0,x)",
        ),
        IdentitySpec(
            "kubert",
            _kubert,
            _fixed(
                {"s": s, "q": q, "x": x}
                for s in KUBERT_S
                for q in MULTIPLICATION_QS
                for x in MULTIPLICATION_X
            ),
            summary="q^s zeta(s,x) = sum_r zeta(s,(r+x)/q)",
        ),
        IdentitySpec(
            "zeta-dd-sum",
            _zeta_dd_sum,
            lambda grid: [{"q": q} for q in range(2, grid.q_max + 1)],
            summary="sum_{r<q} zeta''(0,r/q)",
        ),
        IdentitySpec(
            "gauss-mult-gamma",
            _gauss_mult_gamma,
            _fixed({"q": q, "x": x} for q in MULTIPLICATION_QS for x in MULTIPLICATION_X),
            summary="Gauss multiplication theorem for lnGamma",
        ),
        IdentitySpec(
            "mult-zeta-dd",
            _mult_zeta_dd,
            _fixed({"q": q, "x": x} for q in MULTIPLICATION_QS for x in MULTIPLICATION_X),
            summary="multiplication theorem for zeta''(0,x)",
        ),
        IdentitySpec(
            "mult-zeta-dd-doubling",
            _mult_zeta_dd_doubling,
            _fixed({"x": x} for x in MULTIPLICATION_X),
            summary="q = 2 case of the zeta'' multiplication theorem",
        ),
        IdentitySpec(
            "func-eq-zdd",
            _func_eq_zdd,
            _fixed({"x": x} for x in FUNCTIONAL_X),
            summary="zeta''(0, x + 1/2) + zeta''(0, 1/2 - x) functional equation",
        ),
        IdentitySpec(
            "func-eq-gamma1",
            _func_eq_gamma1,
            _fixed({"x": x} for x in FUNCTIONAL_X),
            summary="gamma_1 functional equation with the cot(2 pi x) term",
        ),
        IdentitySpec(
            "ramanujan-cos-sum",
            _ramanujan,
            lambda grid: [{"x": x, "terms": grid.ramanujan_terms} for x in RAMANUJAN_X],
            tolerance=RAMANUJAN_TOLERANCE,
            summary="Cesaro-averaged sum of log(n)/n cos(2 pi n x)",
        ),
        IdentitySpec(
            "apostol-zeta-dd",
            _apostol,
            _fixed([{}]),
            summary="zeta''(0) from gamma, gamma_1 and log(2 pi)",
        ),
        IdentitySpec(
            "bell-gamma-at-one",
            _bell_at_one,
            _fixed({"m": m} for m in range(5)),
            summary="Bell form at p = q = 1 against the ring oracle",
        ),
        IdentitySpec(
            "gamma0-digamma",
            _gamma0_digamma,
            _fixed({"x": x} for x in DIGAMMA_X),
            summary="gamma_0(x) = -psi(x)",
        ),
        IdentitySpec(
            "oracle-cross-check",
            _oracle_cross_check,
            lambda grid: [
                {"n": n, "x": x, "j_max": grid.j_max} for n in range(4) for x in ORACLE_X
            ],
            summary="Hasse series against the ring oracle",
        ),
        IdentitySpec(
            "gauss-digamma",
            _gauss_digamma,
            rational,
            summary="psi(p/q) from log sin(pi r/q)",
        ),
        IdentitySpec(
            "gauss-digamma-loggamma",
            _gauss_digamma_loggamma,
            rational,
            summary="psi(p/q) from lnGamma(r/q)",
        ),
        IdentitySpec(
            "deninger-gamma1",
            _deninger,
            rational,
            summary="gamma_1(p/q) closed form against the rearranged form",
        ),
        IdentitySpec(
            "gamma1-worked-examples",
            _worked_examples,
            _fixed({"p": value.numerator, "q": value.denominator} for value in WORKED_EXAMPLES),
            summary="explicit gamma_1 at 1/4, 3/4 and 1/5",
        ),
        IdentitySpec(
            "bell-half-argument",
            _half_argument,
            _fixed({"m": m} for m in range(4)),
            summary="split form at 1/2 against the ring oracle",
        ),
        IdentitySpec(
            "bell-split",
            _bell_split,
            _indexed_grid(3, with_one=True),
            summary="full Bell form against the split form",
        ),
        IdentitySpec(
            "rational-paths",
            _rational_paths,
            _indexed_grid(3, with_one=True),
            summary="Bell closed form against the K_l / delta_l form",
        ),
        IdentitySpec(
            "rational-oracle",
            _rational_oracle,
            _indexed_grid(3, with_one=True),
            summary="Bell closed form against the ring oracle",
        ),
        IdentitySpec(
            "trig-sums",
            _trig_sums,
            lambda grid: [
                {"kind": kind, "p": arg.p, "q": arg.q}
                for kind in TRIG_KINDS
                for arg in grid.proper_rationals()
            ],
            summary="sums of sin, cos, r sin and r cos over r = 1 .. q",
        ),
        IdentitySpec(
            "lck-real",
            _lck_real,
            lambda grid: [
                {"s": s, "p": arg.p, "q": arg.q} for s in LCK_S for arg in grid.proper_rationals()
            ],
            summary="cosine-weighted zeta(s,j/q) sum",
        ),
        IdentitySpec(
            "lck-imag",
            _lck_imag,
            lambda grid: [
                {"s": s, "p": arg.p, "q": arg.q} for s in LCK_S for arg in grid.proper_rationals()
            ],
            summary="sine-weighted zeta(s,j/q) sum",
        ),
        IdentitySpec(
            "lck-complex",
            _lck_complex,
            lambda grid: [
                {"s": s, "p": arg.p, "q": arg.q} for s in LCK_S for arg in grid.proper_rationals()
            ],
            summary="exponential-weighted zeta(s,j/q) sum",
        ),
        IdentitySpec("prop-6-1", _prop_6_1, rational, summary="sum_j sin psi(j/q)"),
        IdentitySpec("prop-6-2", _prop_6_2, rational, summary="sum_j cos psi(j/q)"),
        IdentitySpec("prop-6-3", _prop_6_3, rational, summary="sum_j sin gamma_1(j/q)"),
        IdentitySpec("prop-6-4", _prop_6_4, rational, summary="sum_j cos gamma_1(j/q)"),
        IdentitySpec("prop-6-5", _prop_6_5, rational, summary="sum_j sin lnGamma(j/q)"),
        IdentitySpec("prop-6-6", _prop_6_6, rational, summary="sum_j cos lnGamma(j/q)"),
        IdentitySpec("prop-6-7", _prop_6_7, rational, summary="gamma_2(p/q) - gamma_2(1 - p/q)"),
    ]
    return {spec.name: spec for spec in specs}


REGISTRY: dict[str, IdentitySpec] = _build_registry()


def identity_names() -> list[str]:
    return list(REGISTRY)


def matching_identities(pattern: Optional[str]) -> list[IdentitySpec]:
    if not pattern or pattern == "all":
        return list(REGISTRY.values())
    matches = [spec for name, spec in REGISTRY.items() if fnmatch.fnmatchcase(name, pattern)]
    if not matches:
        raise UnknownIdentityError(f"unknown identity: {pattern}")
    return matches


def run_identity(name: str, params: Params, ctx: PrecisionContext) -> IdentityReport:
    spec = REGISTRY.get(name)
    if spec is None:
        raise UnknownIdentityError(f"unknown identity: {name}")
    try:
        sides = spec.evaluate(params, ctx)
    except (DomainError, KeyError, TypeError, ValueError) as exc:
        raise IdentityError(f"{name}: bad parameters {dict(params)!r}: {exc}") from exc
    tolerance = sides.tolerance if sides.tolerance is not None else spec.tolerance_for(ctx)
    with ctx.workdps():
        return IdentityReport.compare(name, params, sides.lhs, sides.rhs, tolerance)


def run_suite(
    pattern: Optional[str], grid: SuiteGrid, ctx: PrecisionContext
) -> list[IdentityReport]:
    """Every matching identity over its grid, in registry order then grid order."""
    reports = []
    for spec in matching_identities(pattern):
        for params in spec.grid(grid):
            reports.append(run_identity(spec.name, params, ctx))
    return reports


def summarize(reports: Iterable[IdentityReport]) -> SuiteSummary:
    summary = SuiteSummary()
    for report in reports:
        summary.total += 1
        if report.passed:
            summary.passed += 1
        else:
            summary.failed.append(report)
    return summary


__all__ = [
    "IdentityError",
    "IdentitySpec",
    "REGISTRY",
    "Sides",
    "SuiteGrid",
    "SuiteSummary",
    "UnknownIdentityError",
    "identity_names",
    "matching_identities",
    "ramanujan_cos_sum",
    "run_identity",
    "run_suite",
    "summarize",
]
