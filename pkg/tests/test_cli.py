import json
from pathlib import Path

import pytest
from mpmath import mp

from stieltjes_cli.cli import main
from stieltjes_cli.records import CSV_COLUMNS


def _lines(capsys: pytest.CaptureFixture[str]) -> list[str]:
    return capsys.readouterr().out.splitlines()


def test_compute_rational_default_method(settings, capsys) -> None:
    assert main(["compute", "--n", "0", "--p", "1", "--q", "2"]) == 0
    (line,) = _lines(capsys)
    assert line.startswith("gamma_0(1/2) [bell] = 1.96351002602")


def test_compute_at_one(settings, capsys) -> None:
    assert main(["compute", "--n", "0", "--p", "1", "--q", "1", "--format", "json"]) == 0
    (line,) = _lines(capsys)
    payload = json.loads(line)
    assert payload["kind"] == "VALUE"
    assert payload["x"] == "1/1"
    assert payload["value"].startswith("5.7721566490153286")


def test_compute_reports_reduced_argument(settings, capsys) -> None:
    assert main(["compute", "--n", "0", "--p", "2", "--q", "4", "--format", "json"]) == 0
    payload = json.loads(_lines(capsys)[0])
    assert (payload["p"], payload["q"], payload["x"]) == (1, 2, "1/2")


def test_compute_decimal_argument_uses_ring(settings, capsys) -> None:
    assert main(["compute", "--n", "1", "--x", "0.5"]) == 0
    (line,) = _lines(capsys)
    assert line.startswith("gamma_1(0.5) [cauchy] = ")


def test_compute_all_methods_reports_deviation(settings, capsys) -> None:
    argv = ["compute", "--n", "1", "--p", "1", "--q", "3", "--method", "all", "--format", "json"]
    assert main(argv) == 0
    payloads = [json.loads(line) for line in _lines(capsys)]
    assert [p["method"] for p in payloads] == ["bell", "cck", "split", "hasse", "cauchy", "all"]
    summary = payloads[-1]
    assert summary["kind"] == "SUMMARY"
    assert mp.mpf(summary["value"]) < mp.mpf("1e-12")


def test_compute_digits_refine(settings, capsys) -> None:
    values = []
    for digits in ("15", "25"):
        main(["compute", "--n", "2", "--p", "2", "--q", "5", "--digits", digits])
        values.append(_lines(capsys)[0].split(" = ")[1].split(" ")[0])
    with mp.workdps(30):
        assert abs(mp.mpf(values[0]) - mp.mpf(values[1])) < mp.mpf("1e-14")
    assert len(values[1].split("e")[0].replace("-", "").replace(".", "")) == 25


def test_compute_is_deterministic(settings, capsys) -> None:
    argv = ["compute", "--n", "3", "--p", "3", "--q", "4"]
    main(argv)
    first = _lines(capsys)
    main(argv)
    assert _lines(capsys) == first


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--n", "0"],
        ["compute", "--n", "0", "--p", "1"],
        ["compute", "--n", "0", "--p", "3", "--q", "2"],
        ["compute", "--n", "0", "--x", "-1"],
        ["compute", "--n", "0", "--x", "abc"],
        ["compute", "--n", "0", "--x", "0.5", "--method", "bell"],
        ["compute", "--n", "0", "--p", "1", "--q", "2", "--digits", "0"],
        ["table", "--n-max", "1"],
        ["verify", "--q-max", "1"],
        ["bogus"],
    ],
)
def test_usage_errors_exit_two(settings, argv: list[str]) -> None:
    assert main(argv) == 2


def test_index_above_cap_exits_three(settings, capsys) -> None:
    assert main(["compute", "--n", "9", "--p", "1", "--q", "2"]) == 3
    assert "error:" in capsys.readouterr().err


def test_unknown_suite_exits_two(settings, capsys, tmp_path: Path) -> None:
    assert main(["verify", "--suite", "no-such-*"]) == 2
    assert "unknown identity: no-such-*" in capsys.readouterr().err
    log = (tmp_path / "logs" / "run.log").read_text(encoding="utf-8")
    assert "failure command=verify" in log


def test_table_csv(settings, capsys) -> None:
    assert main(["table", "--n-max", "1", "--q", "3", "--format", "csv"]) == 0
    lines = _lines(capsys)
    assert lines[0] == ",".join(CSV_COLUMNS)
    rows = lines[1:]
    assert len(rows) == 6
    assert all(row.startswith("TABLE_ROW,") for row in rows)
    assert rows[0].startswith("TABLE_ROW,,0,1,3,1/3,bell,20,")


def test_table_json_uses_requested_method(settings, capsys) -> None:
    assert main(["table", "--n-max", "0", "--q", "4", "--method", "cck", "--format", "json"]) == 0
    payloads = [json.loads(line) for line in _lines(capsys)]
    assert [p["x"] for p in payloads] == ["1/4", "3/4", "1/1"]
    assert {p["method"] for p in payloads} == {"cck"}


def test_verify_passes_and_logs(settings, capsys, tmp_path: Path) -> None:
    assert main(["verify", "--suite", "prop-6-1", "--q-max", "6"]) == 0
    lines = _lines(capsys)
    assert all(line.startswith("PASS prop-6-1 ") for line in lines[:-1])
    assert lines[-1].startswith("verify total=")
    assert lines[-1].endswith("ok")
    log = (tmp_path / "logs" / "run.log").read_text(encoding="utf-8")
    assert "verify suite=prop-6-1" in log
    assert "failed=0" in log


def test_log_flag_overrides_settings(settings, capsys, tmp_path: Path) -> None:
    target = tmp_path / "custom.log"
    assert main(["compute", "--n", "0", "--p", "1", "--q", "2", "--log", str(target)]) == 0
    capsys.readouterr()
    assert "compute n=0 x=1/2 method=bell digits=20" in target.read_text(encoding="utf-8")
    assert not (tmp_path / "logs" / "run.log").exists()


def test_environment_sets_default_digits(monkeypatch: pytest.MonkeyPatch, capsys) -> None:
    monkeypatch.setenv("STIELTJES_DEFAULT_DIGITS", "12")
    assert main(["compute", "--n", "0", "--p", "1", "--q", "1", "--format", "json"]) == 0
    assert json.loads(_lines(capsys)[0])["digits"] == 12


def test_version_and_help(settings, capsys) -> None:
    assert main(["--version"]) == 0
    assert capsys.readouterr().out.strip() == f"stieltjes {settings.version}"
    assert main([]) == 0
    assert "compute" in capsys.readouterr().out
