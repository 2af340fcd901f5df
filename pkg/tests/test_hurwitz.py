from fractions import Fraction

import pytest
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st
from mpmath import mp

from stieltjes_cli.hurwitz import (
    CauchyRingParams,
    HurwitzPoleError,
    digamma,
    gamma_real,
    hurwitz_zeta,
    log_gamma,
    polygamma,
    zeta_deriv_at0,
    zeta_derivs_at0,
)
from stieltjes_cli.precision import DomainError, euler_gamma, make_context

small_s = st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False).filter(
    lambda s: abs(s - 1) > 0.1
)


def test_riemann_values(ctx) -> None:
    with ctx.workdps():
        assert abs(hurwitz_zeta(2, 1, ctx) - mp.mpf("1.644934066848226436472415166646")) < 1e-29
        assert abs(hurwitz_zeta(-1, Fraction(1, 3), ctx) - mp.mpf(1) / 36) < ctx.tolerance
    ctx20 = make_context(20)
    with ctx20.workdps():
        assert abs(hurwitz_zeta(3, 1, ctx20) - mp.mpf("1.20205690315959428540")) < 1e-19


@pytest.mark.parametrize("s", ["-2.5", "0.5", "2.3"])
@pytest.mark.parametrize("x", [Fraction(3, 10), Fraction(17, 10)])
def test_agrees_with_reference(ctx, s: str, x: Fraction) -> None:
    with ctx.workdps():
        expected = mp.zeta(mp.mpf(s), mp.mpmathify(x))
        assert abs(hurwitz_zeta(s, x, ctx) - expected) < ctx.tolerance


def test_complex_argument(ctx) -> None:
    with ctx.workdps():
        s = mp.mpc("0.5", "3")
        expected = mp.zeta(s, mp.mpf("0.25"))
        assert abs(hurwitz_zeta(s, Fraction(1, 4), ctx) - expected) < ctx.tolerance


@hypothesis_settings(max_examples=25, deadline=None)
@given(s=small_s, x=st.fractions(min_value=Fraction(1, 10), max_value=2, max_denominator=100))
def test_forward_recurrence(ctx, s: complex, x: Fraction) -> None:
    with ctx.workdps():
        s_big = mp.mpc(s.real, s.imag)
        here = hurwitz_zeta(s_big, x, ctx)
        power = mp.power(mp.mpmathify(x), -s_big)
        residual = here - hurwitz_zeta(s_big, x + 1, ctx) - power
        assert abs(residual) < ctx.tolerance * max(1, abs(here), abs(power))


@pytest.mark.parametrize("j", range(1, 7))
def test_value_at_zero_is_linear(ctx, j: int) -> None:
    x = Fraction(j, 7)
    with ctx.workdps():
        assert abs(zeta_deriv_at0(0, x, ctx) + mp.mpmathify(x) - mp.mpf(1) / 2) < ctx.tolerance
        assert abs(hurwitz_zeta(0, x, ctx) + mp.mpmathify(x) - mp.mpf(1) / 2) < ctx.tolerance


def test_domain_guards(ctx) -> None:
    with pytest.raises(HurwitzPoleError):
        hurwitz_zeta(1, Fraction(1, 2), ctx)
    with pytest.raises(DomainError):
        hurwitz_zeta(2, 0, ctx)
    with pytest.raises(DomainError):
        zeta_deriv_at0(-1, 1, ctx)


def test_derivatives_at_zero(ctx) -> None:
    x = Fraction(2, 5)
    values = zeta_derivs_at0(x, 4, ctx)
    with ctx.workdps():
        assert abs(values[0] - mp.mpf("0.1")) < ctx.tolerance
        lerch = mp.loggamma(mp.mpmathify(x)) - mp.log(2 * mp.pi) / 2
        assert abs(values[1] - lerch) < ctx.tolerance
        for j in (2, 3):
            assert abs(values[j] - mp.zeta(0, mp.mpmathify(x), j)) < ctx.tolerance


@hypothesis_settings(max_examples=20, deadline=None)
@given(st.fractions(min_value=Fraction(1, 100), max_value=2, max_denominator=1000))
def test_lerch_formula(ctx, x: Fraction) -> None:
    with ctx.workdps():
        lerch = log_gamma(x, ctx) - mp.log(2 * mp.pi) / 2
        assert abs(zeta_deriv_at0(1, x, ctx) - lerch) < ctx.tolerance


def test_riemann_derivatives_at_zero(ctx) -> None:
    values = zeta_derivs_at0(1, 3, ctx)
    with ctx.workdps():
        assert abs(values[0] + mp.mpf(1) / 2) < ctx.tolerance
        assert abs(values[1] + mp.log(2 * mp.pi) / 2) < ctx.tolerance
        assert abs(values[2] - mp.zeta(0, 1, 2)) < ctx.tolerance


def test_ring_doubling_is_stable(ctx) -> None:
    ring = CauchyRingParams.for_context(ctx)
    base = zeta_derivs_at0(Fraction(1, 3), 5, ctx, ring)
    doubled = zeta_derivs_at0(Fraction(1, 3), 5, ctx, ring.doubled())
    with ctx.workdps():
        assert all(abs(a - b) < ctx.tolerance for a, b in zip(base, doubled))


def test_ring_validation() -> None:
    with pytest.raises(DomainError):
        CauchyRingParams(points=15)
    with pytest.raises(DomainError):
        CauchyRingParams(points=8)
    with pytest.raises(DomainError):
        CauchyRingParams(radius=Fraction(1))


@pytest.mark.parametrize("x", [Fraction(1, 4), Fraction(1, 3), Fraction(5, 2), Fraction(10)])
def test_log_gamma_and_digamma(ctx, x: Fraction) -> None:
    with ctx.workdps():
        value = mp.mpmathify(x)
        assert abs(log_gamma(x, ctx) - mp.loggamma(value)) < ctx.tolerance
        assert abs(digamma(x, ctx) - mp.digamma(value)) < ctx.tolerance


def test_classical_digamma_value(ctx) -> None:
    with ctx.workdps():
        expected = -mp.euler - 3 * mp.log(2) - mp.pi / 2
        assert abs(digamma(Fraction(1, 4), ctx) - expected) < ctx.tolerance


def test_digamma_at_one_is_minus_euler_gamma(ctx) -> None:
    with ctx.workdps():
        assert abs(euler_gamma(ctx) + digamma(1, ctx)) < ctx.tolerance


def test_polygamma_and_gamma(ctx) -> None:
    with ctx.workdps():
        assert abs(polygamma(1, 1, ctx) - mp.pi**2 / 6) < ctx.tolerance
        assert abs(polygamma(2, Fraction(1, 2), ctx) - mp.polygamma(2, 0.5)) < ctx.tolerance
        assert abs(gamma_real("-1.3", ctx) - mp.gamma(mp.mpf("-1.3"))) < ctx.tolerance
        assert abs(gamma_real(Fraction(7, 2), ctx) - mp.gamma(mp.mpf("3.5"))) < ctx.tolerance
    with pytest.raises(DomainError):
        gamma_real(-2, ctx)
    with pytest.raises(DomainError):
        polygamma(0, 1, ctx)
