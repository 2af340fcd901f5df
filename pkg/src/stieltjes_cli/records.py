from __future__ import annotations

import csv
from enum import Enum
from typing import IO, Optional, Union

from mpmath import mp, mpc, mpf
from pydantic import BaseModel, ConfigDict, Field

from .oracle import StieltjesResult
from .reports import IdentityReport

ERROR_DIGITS = 3
FORMATS = ("plain", "json", "csv")

CSV_COLUMNS = (
    "kind",
    "name",
    "n",
    "p",
    "q",
    "x",
    "method",
    "digits",
    "value",
    "err_estimate",
    "rhs",
    "residual",
    "tolerance",
    "pass",
    "params",
)


class RecordKind(str, Enum):
    VALUE = "VALUE"
    TABLE_ROW = "TABLE_ROW"
    IDENTITY = "IDENTITY"
    SUMMARY = "SUMMARY"


def _scientific(value: mpf, digits: int) -> str:
    text = mp.nstr(
        value, digits, strip_zeros=False, min_fixed=0, max_fixed=0, show_zero_exponent=True
    )
    # one significant digit leaves a bare point before the exponent
    return text.replace(".e", "e")


def format_decimal(value: Union[mpf, mpc, int], digits: int) -> str:
    """Scientific notation with exactly `digits` significant digits."""
    with mp.workdps(digits + 5):
        if isinstance(value, mpc):
            real = _scientific(value.real, digits)
            imag = _scientific(value.imag, digits)
            return f"{real}{'' if imag.startswith('-') else '+'}{imag}j"
        return _scientific(mp.mpf(value), digits)


class OutputRecord(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    kind: RecordKind
    name: Optional[str] = None
    n: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    x: Optional[str] = None
    method: Optional[str] = None
    digits: int
    value: Optional[str] = None
    err_estimate: Optional[str] = None
    rhs: Optional[str] = None
    residual: Optional[str] = None
    tolerance: Optional[str] = None
    passed: Optional[bool] = Field(default=None, alias="pass")
    params: Optional[str] = None

    @classmethod
    def from_result(
        cls,
        result: StieltjesResult,
        *,
        kind: RecordKind,
        digits: int,
        n: int,
        p: Optional[int] = None,
        q: Optional[int] = None,
        x: Optional[str] = None,
    ) -> OutputRecord:
        return cls(
            kind=kind,
            n=n,
            p=p,
            q=q,
            x=x,
            method=result.method.value,
            digits=digits,
            value=format_decimal(result.value, digits),
            err_estimate=format_decimal(result.err_estimate, ERROR_DIGITS),
        )

    @classmethod
    def from_report(cls, report: IdentityReport, digits: int) -> OutputRecord:
        return cls(
            kind=RecordKind.IDENTITY,
            name=report.name,
            digits=digits,
            value=format_decimal(report.lhs, digits),
            rhs=format_decimal(report.rhs, digits),
            residual=format_decimal(report.residual, ERROR_DIGITS),
            tolerance=format_decimal(report.tolerance, ERROR_DIGITS),
            passed=report.passed,
            params=report.params_text,
        )

    def as_row(self) -> dict[str, object]:
        return self.model_dump(by_alias=True, mode="json")

    def plain(self) -> str:
        if self.kind is RecordKind.IDENTITY:
            verdict = "PASS" if self.passed else "FAIL"
            return (
                f"{verdict} {self.name} [{self.params}] "
                f"residual={self.residual} tolerance={self.tolerance}"
            )
        if self.kind is RecordKind.SUMMARY:
            fields = [self.name or "summary"]
            if self.value is not None:
                fields.append(f"value={self.value}")
            if self.params:
                fields.append(self.params)
            if self.passed is not None:
                fields.append("ok" if self.passed else "failed")
            return " ".join(fields)
        return (
            f"gamma_{self.n}({self.x}) [{self.method}] = {self.value} "
            f"(err ~ {self.err_estimate})"
        )


class RecordWriter:
    def __init__(self, fmt: str, stream: IO[str]) -> None:
        if fmt not in FORMATS:
            raise ValueError(f"unknown output format {fmt!r}")
        self._format = fmt
        self._stream = stream
        self._csv: Optional[csv.DictWriter] = None
        if fmt == "csv":
            self._csv = csv.DictWriter(stream, fieldnames=CSV_COLUMNS, lineterminator="\n")
            self._csv.writeheader()

    def write(self, record: OutputRecord) -> None:
        if self._csv is not None:
            row = record.as_row()
            self._csv.writerow({key: "" if row[key] is None else row[key] for key in CSV_COLUMNS})
        elif self._format == "json":
            self._stream.write(record.model_dump_json(by_alias=True) + "\n")
        else:
            self._stream.write(record.plain() + "\n")


__all__ = [
    "CSV_COLUMNS",
    "FORMATS",
    "OutputRecord",
    "RecordKind",
    "RecordWriter",
    "format_decimal",
]
