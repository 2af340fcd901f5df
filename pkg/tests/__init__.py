from pathlib import Path

import pytest

from stieltjes_cli.config import Settings, load_settings
from stieltjes_cli.precision import PrecisionContext, make_context

_ENV_KEYS = (
    "STIELTJES_DEFAULT_DIGITS",
    "STIELTJES_HASSE_J_MAX",
    "STIELTJES_RAMANUJAN_TERMS",
    "STIELTJES_RUN_LOG",
    "STIELTJES_DEBUG",
)


@pytest.fixture(autouse=True)
def isolated_env(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    for key in _ENV_KEYS:
        monkeypatch.delenv(key, raising=False)
    monkeypatch.chdir(tmp_path)


@pytest.fixture(scope="session")
def ctx() -> PrecisionContext:
    return make_context(30)


@pytest.fixture(scope="session")
def ctx_fast() -> PrecisionContext:
    return make_context(15)


@pytest.fixture
def settings(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Settings:
    monkeypatch.setenv("STIELTJES_DEFAULT_DIGITS", "20")
    monkeypatch.setenv("STIELTJES_HASSE_J_MAX", "200")
    monkeypatch.setenv("STIELTJES_RAMANUJAN_TERMS", "20000")
    monkeypatch.setenv("STIELTJES_RUN_LOG", str(tmp_path / "logs" / "run.log"))
    return load_settings()


__all__ = ["ctx", "ctx_fast", "isolated_env", "settings"]
