"""Report containers and the reference dimension tables they are checked against.

Everything here is plain data: frozen dataclasses with a ``to_json()``
encoding whose key order and list order are fixed, so serializing the same
run twice gives identical bytes.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Any, Optional, Sequence

from supercohom.superfield import format_scalar

# -- H^1 reports ------------------------------------------------------------


@dataclasses.dataclass(frozen=True, slots=True)
class H1Report:
    """Truncated first cohomology of one (lambda, mu) cell."""

    lam: Fraction
    mu: Fraction
    relative: bool
    z1_dim: int
    b1_dim: int
    order: int
    degree: int
    plateau: bool
    algebra: str = "osp22"

    @property
    def h1_dim(self) -> int:
        return self.z1_dim - self.b1_dim

    @property
    def truncation(self) -> tuple[int, int]:
        return (self.order, self.degree)

    def to_json(self) -> dict[str, Any]:
        return {
            "algebra": self.algebra,
            "lambda": format_scalar(self.lam),
            "mu": format_scalar(self.mu),
            "relative": self.relative,
            "z1_dim": self.z1_dim,
            "b1_dim": self.b1_dim,
            "h1_dim": self.h1_dim,
            "truncation": {"order": self.order, "degree": self.degree},
            "plateau": self.plateau,
        }


def _is_positive_int(value: Fraction) -> bool:
    return value.denominator == 1 and value >= 1


def predicted_h1(lam: Fraction, mu: Fraction, *, relative: bool = False,
                 algebra: str = "osp22") -> int:
    """Dimension of H^1 predicted by the classification for the given cell."""
    lam, mu = Fraction(lam), Fraction(mu)
    if algebra == "osp12":
        if lam == mu:
            return 1
        k = 2 * mu
        return 2 if _is_positive_int(k) and lam == (1 - k) / 2 else 0
    k = 2 * mu
    on_diagonal_family = lam == -mu and _is_positive_int(k)
    if relative:
        return 1 if (lam == mu and lam != 0) or on_diagonal_family else 0
    if lam == mu:
        return 2
    return 3 if on_diagonal_family else 0


# -- verification reports ---------------------------------------------------


@dataclasses.dataclass(frozen=True, slots=True)
class CaseResult:
    """One named check with its outcome and, on failure, a witness."""

    case_id: str
    passed: bool
    detail: dict[str, Any] = dataclasses.field(default_factory=dict)
    witness: Optional[dict[str, Any]] = None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"case": self.case_id, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclasses.dataclass(frozen=True, slots=True)
class VerificationReport:
    """Ordered list of case results plus the run parameters."""

    kind: str
    cases: tuple[CaseResult, ...]
    engine_version: str
    parameters: tuple[tuple[str, Any], ...] = ()
    rows: tuple[dict[str, Any], ...] = ()

    @property
    def n_passed(self) -> int:
        return sum(1 for c in self.cases if c.passed)

    @property
    def n_failed(self) -> int:
        return len(self.cases) - self.n_passed

    @property
    def all_passed(self) -> bool:
        return self.n_failed == 0

    @property
    def exit_code(self) -> int:
        return 0 if self.all_passed else 1

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "engine_version": self.engine_version,
            "parameters": dict(self.parameters),
            "summary": {
                "cases": len(self.cases),
                "passed": self.n_passed,
                "failed": self.n_failed,
            },
            "cases": [c.to_json() for c in self.cases],
            "rows": list(self.rows),
        }


def _build_verification_report(
    kind: str,
    cases: Sequence[CaseResult],
    engine_version: str,
    parameters: Optional[dict[str, Any]] = None,
    rows: Sequence[dict[str, Any]] = (),
) -> VerificationReport:
    """Construct a :class:`VerificationReport`, enforcing the witness rule."""
    for case in cases:
        if not case.passed and case.witness is None:
            raise ValueError(f"Failed case {case.case_id!r} carries no witness")
    return VerificationReport(
        kind=kind,
        cases=tuple(cases),
        engine_version=engine_version,
        parameters=tuple(sorted((parameters or {}).items())),
        rows=tuple(rows),
    )


__all__ = [
    "H1Report",
    "predicted_h1",
    "CaseResult",
    "VerificationReport",
]
