import pytest
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st
from mpmath import mp

from stieltjes_cli.bell import BellError, BellKind, bell_args, complete_bell, complete_bell_table
from stieltjes_cli.precision import euler_gamma, make_context, zeta_int

small_ints = st.integers(min_value=-9, max_value=9)


def _explicit(x: list[int], n: int) -> int:
    x1, x2, x3, x4, x5 = (x + [0] * 5)[:5]
    return [
        1,
        x1,
        x1**2 + x2,
        x1**3 + 3 * x1 * x2 + x3,
        x1**4 + 6 * x1**2 * x2 + 4 * x1 * x3 + 3 * x2**2 + x4,
        x1**5
        + 10 * x1**3 * x2
        + 15 * x1 * x2**2
        + 10 * x1**2 * x3
        + 10 * x2 * x3
        + 5 * x1 * x4
        + x5,
    ][n]


@hypothesis_settings(max_examples=100, deadline=None)
@given(st.lists(small_ints, min_size=5, max_size=5))
def test_recurrence_matches_explicit_polynomials(args: list[int]) -> None:
    table = complete_bell_table(args, 5)
    assert table == [_explicit(args, n) for n in range(6)]


def test_bell_numbers() -> None:
    assert complete_bell_table([1] * 6, 6) == [1, 1, 2, 5, 15, 52, 203]


@hypothesis_settings(max_examples=100, deadline=None)
@given(st.lists(small_ints, min_size=6, max_size=6), st.integers(min_value=-4, max_value=4))
def test_homogeneity(args: list[int], scale: int) -> None:
    scaled = [scale ** (k + 1) * value for k, value in enumerate(args)]
    for n in range(7):
        assert complete_bell(scaled, n) == scale**n * complete_bell(args, n)


@hypothesis_settings(max_examples=100, deadline=None)
@given(st.lists(small_ints, min_size=6, max_size=6))
def test_alternating_signs(args: list[int]) -> None:
    flipped = [(-1) ** (k + 1) * value for k, value in enumerate(args)]
    for n in range(7):
        assert complete_bell(flipped, n) == (-1) ** n * complete_bell(args, n)


@hypothesis_settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=20), min_size=6, max_size=6))
def test_positive_arguments_give_positive_values(args: list[int]) -> None:
    assert all(value > 0 for value in complete_bell_table(args, 6))


def test_too_few_arguments() -> None:
    with pytest.raises(BellError):
        complete_bell([1, 2], 3)
    with pytest.raises(BellError):
        complete_bell_table([1], -1)


def test_argument_vectors() -> None:
    ctx = make_context(30)
    g = bell_args(BellKind.G, 3, 6, ctx).values
    h = bell_args(BellKind.H, 3, 6, ctx).values
    star = bell_args(BellKind.PSI_STAR, 3, 6, ctx).values
    with ctx.workdps():
        base = euler_gamma(ctx) + mp.log(6 * mp.pi)
        assert abs(g[0] + base) < ctx.tolerance
        assert abs(star[0] - base) < ctx.tolerance
        assert abs(g[1] + zeta_int(2, ctx) / 2) < ctx.tolerance
        for i in range(6):
            assert abs(h[i] - (-1) ** i * g[i]) < ctx.tolerance
        for i in range(1, 6):
            assert abs(star[i] - mp.factorial(i) * zeta_int(i + 1, ctx)) < ctx.tolerance


def test_argument_set_validation() -> None:
    ctx = make_context(15)
    with pytest.raises(BellError):
        bell_args(BellKind.G, 0, 3, ctx)
    with pytest.raises(BellError):
        bell_args(BellKind.G, 2, 0, ctx)
    assert bell_args("H", 2, 2, ctx).kind is BellKind.H
