from __future__ import annotations

from datetime import datetime, timezone
from pathlib import Path
from typing import Optional


def format_fields(**fields: object) -> str:
    return " ".join(f"{key}={value}" for key, value in fields.items() if value is not None)


def append_run_log(path: Optional[Path], event: str, **fields: object) -> None:
    """Append `[timestamp] event key=value ...`; a missing path disables logging."""
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    timestamp = datetime.now(timezone.utc).isoformat()
    message = " ".join(part for part in (event, format_fields(**fields)) if part)
    with path.open("a", encoding="utf-8") as handle:
        handle.write(f"[{timestamp}] {message}\n")


__all__ = ["append_run_log", "format_fields"]
