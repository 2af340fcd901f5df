from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

DEFAULT_DIGITS = 30
DEFAULT_HASSE_J_MAX = 400
DEFAULT_RAMANUJAN_TERMS = 1_000_000

_VERSION_FILE = Path(__file__).resolve().parent.parent.parent / "VERSION"
_TRUTHY = {"1", "true", "yes", "on"}


def _read_version() -> str:
    if _VERSION_FILE.exists():
        return _VERSION_FILE.read_text(encoding="utf-8").strip() or "0.0.0"
    return "0.0.0"


def _positive_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        return default
    return value if value > 0 else default


@dataclass(slots=True)
class Settings:
    default_digits: int
    hasse_j_max: int
    ramanujan_terms: int
    run_log: Optional[Path]
    debug_mode: bool
    package_name: str = "stieltjes-rational"
    version: str = _read_version()


def load_settings() -> Settings:
    load_dotenv()

    run_log_env = os.getenv("STIELTJES_RUN_LOG")
    run_log = Path(run_log_env).expanduser() if run_log_env else None

    debug_env = os.getenv("STIELTJES_DEBUG") or "false"

    return Settings(
        default_digits=_positive_int("STIELTJES_DEFAULT_DIGITS", DEFAULT_DIGITS),
        hasse_j_max=_positive_int("STIELTJES_HASSE_J_MAX", DEFAULT_HASSE_J_MAX),
        ramanujan_terms=_positive_int("STIELTJES_RAMANUJAN_TERMS", DEFAULT_RAMANUJAN_TERMS),
        run_log=run_log,
        debug_mode=debug_env.lower() in _TRUTHY,
    )


__all__ = ["Settings", "load_settings"]
