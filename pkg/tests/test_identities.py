from fractions import Fraction

import pytest
from mpmath import mp

from stieltjes_cli.identities import (
    REGISTRY,
    IdentityError,
    SuiteGrid,
    UnknownIdentityError,
    identity_names,
    matching_identities,
    ramanujan_cos_sum,
    run_identity,
    run_suite,
    summarize,
)

SMALL_GRID = SuiteGrid(q_max=3, ramanujan_terms=20_000, j_max=200)


def test_registry_order_and_names() -> None:
    names = identity_names()
    assert names[0] == "rademacher"
    assert names[-1] == "prop-6-7"
    assert len(names) == len(set(names))
    for required in ("kubert", "apostol-zeta-dd", "oracle-cross-check", "ramanujan-cos-sum"):
        assert required in REGISTRY


def test_pattern_matching() -> None:
    assert len(matching_identities("all")) == len(REGISTRY)
    assert len(matching_identities(None)) == len(REGISTRY)
    assert [spec.name for spec in matching_identities("prop-6-*")] == [
        f"prop-6-{k}" for k in range(1, 8)
    ]
    with pytest.raises(UnknownIdentityError, match="unknown identity: nothing-*"):
        matching_identities("nothing-*")


def test_rademacher_example(ctx) -> None:
    report = run_identity("rademacher", {"s": Fraction(-3, 2), "p": 1, "q": 3}, ctx)
    assert report.passed
    assert report.params == {"s": "-3/2", "p": "1", "q": "3"}
    assert report.tolerance == ctx.tolerance


def test_digamma_sine_sum_at_quarter(ctx) -> None:
    report = run_identity("prop-6-1", {"p": 1, "q": 4}, ctx)
    with ctx.workdps():
        assert abs(report.rhs + mp.pi) < ctx.tolerance
    assert report.passed


def test_half_argument_sums_are_exact(ctx) -> None:
    assert run_identity("prop-6-1", {"p": 1, "q": 2}, ctx).rhs == 0
    assert run_identity("trig-sums", {"kind": "sin", "p": 1, "q": 2}, ctx).residual == 0


def test_gauss_multiplication(ctx) -> None:
    report = run_identity("gauss-mult-gamma", {"q": 3, "x": Fraction(3, 10)}, ctx)
    assert report.passed
    assert report.residual < report.tolerance


def test_parameter_errors(ctx) -> None:
    with pytest.raises(UnknownIdentityError):
        run_identity("no-such-identity", {}, ctx)
    with pytest.raises(IdentityError):
        run_identity("rademacher", {"s": 1, "p": 1, "q": 3}, ctx)
    with pytest.raises(IdentityError):
        run_identity("prop-6-1", {"p": 2, "q": 2}, ctx)
    with pytest.raises(IdentityError):
        run_identity("kubert", {"s": Fraction(1, 2)}, ctx)


def test_suite_grid_validation() -> None:
    with pytest.raises(IdentityError):
        SuiteGrid(q_max=1)
    with pytest.raises(IdentityError):
        SuiteGrid(ramanujan_terms=10)
    assert [str(arg) for arg in SuiteGrid(q_max=4).rationals()] == [
        "1/1",
        "1/2",
        "1/3",
        "2/3",
        "1/4",
        "3/4",
    ]


SLOW_IDENTITIES = ("stieltjes-integral", "ramanujan-cos-sum")


def _assert_all_pass(reports) -> None:
    assert reports
    failed = [report for report in reports if not report.passed]
    assert not failed, [(report.params_text, mp.nstr(report.residual, 3)) for report in failed]


@pytest.mark.parametrize(
    "name", [name for name in identity_names() if name not in SLOW_IDENTITIES]
)
def test_identity_holds_at_working_digits(ctx, name: str) -> None:
    _assert_all_pass(run_suite(name, SMALL_GRID, ctx))


@pytest.mark.parametrize("name", identity_names())
def test_identity_holds_on_small_grid(ctx_fast, name: str) -> None:
    _assert_all_pass(run_suite(name, SMALL_GRID, ctx_fast))


def test_gamma0_digamma_at_thirty_digits(ctx) -> None:
    report = run_identity("gamma0-digamma", {"x": Fraction(1, 3)}, ctx)
    assert report.passed
    assert report.residual < ctx.tolerance
    with mp.workdps(40):
        assert abs(report.rhs + mp.digamma(mp.mpf(1) / 3)) < mp.mpf("1e-25")
    _assert_all_pass(run_suite("gamma0-digamma", SMALL_GRID, ctx))


def test_suite_is_deterministic(ctx_fast) -> None:
    first = run_suite("trig-*", SMALL_GRID, ctx_fast)
    second = run_suite("trig-*", SMALL_GRID, ctx_fast)
    assert [(r.name, r.params, r.lhs, r.rhs) for r in first] == [
        (r.name, r.params, r.lhs, r.rhs) for r in second
    ]


def test_summary_counts(ctx_fast) -> None:
    reports = run_suite("trig-*", SMALL_GRID, ctx_fast)
    summary = summarize(reports)
    assert summary.total == len(reports) == 4 * 3
    assert summary.passed == summary.total
    assert summary.ok


def test_ramanujan_cos_sum_converges() -> None:
    value = ramanujan_cos_sum(Fraction(1, 2), 20_000)
    with mp.workdps(20):
        # sum (-1)^n log(n)/n = gamma log 2 - log(2)^2 / 2
        expected = mp.euler * mp.log(2) - mp.log(2) ** 2 / 2
        assert abs(value - expected) < 1e-4
    with pytest.raises(IdentityError):
        ramanujan_cos_sum(Fraction(1, 3), 100, tail=1000)
