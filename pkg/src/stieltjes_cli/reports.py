from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Union

from mpmath import mp, mpc, mpf


@dataclass(slots=True)
class IdentityReport:
    name: str
    params: dict[str, str]
    lhs: Union[mpf, mpc]
    rhs: Union[mpf, mpc]
    residual: mpf
    tolerance: mpf
    passed: bool

    @classmethod
    def compare(
        cls,
        name: str,
        params: Mapping[str, Any],
        lhs: Union[mpf, mpc],
        rhs: Union[mpf, mpc],
        tolerance: mpf,
    ) -> IdentityReport:
        residual = abs(lhs - rhs)
        if isinstance(residual, mpc):
            residual = residual.real
        return cls(
            name=name,
            params={key: format_param(value) for key, value in params.items()},
            lhs=lhs,
            rhs=rhs,
            residual=residual,
            tolerance=tolerance,
            passed=bool(residual < tolerance),
        )

    @property
    def params_text(self) -> str:
        return ",".join(f"{key}={value}" for key, value in self.params.items())


def format_param(value: Any) -> str:
    if isinstance(value, (mpf, mpc)):
        return mp.nstr(value, 15)
    if isinstance(value, complex):
        return f"{value.real:g}{value.imag:+g}j"
    return str(value)


__all__ = ["IdentityReport", "format_param"]
