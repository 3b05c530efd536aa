"""Base classes for named, parameterized cochain families.

A family turns one parameter (a weight lambda or an integer k) into a
concrete cochain.  To add a family, subclass :class:`FormulaFamily` and
implement ``weights()`` and ``summands()``, or subclass
:class:`CoboundaryFamily` and implement ``weights()`` and ``operator()``.
See supercohom/catalog/ for the registered families.
"""

from __future__ import annotations

import dataclasses
import enum
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Union

from supercohom.cohomology import Cochain1, delta0
from supercohom.contact import Algebra
from supercohom.operators import SuperDiffOp, weight_decompose
from supercohom.superfield import SuperFunction, as_scalar, format_scalar

Parameter = Union[int, Fraction, str]


class Status(enum.Enum):
    NONTRIVIAL = "nontrivial cocycle"
    COBOUNDARY = "coboundary generator"


class ParameterKind(enum.Enum):
    LAMBDA = "lambda"
    K = "k"


@dataclasses.dataclass(frozen=True, slots=True)
class CatalogEntry:
    """A family evaluated at one parameter value."""

    name: str
    parameter: Fraction
    cochain: Cochain1
    claimed_status: Status
    source: str
    operator: SuperDiffOp | None = None

    @property
    def weights(self) -> tuple[Fraction, Fraction]:
        return self.cochain.source_weight, self.cochain.target_weight

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "parameter": format_scalar(self.parameter),
            "status": self.claimed_status.value,
            "source": self.source,
            "cochain": self.cochain.to_json(),
        }


class CatalogFamily(ABC):
    """A named rule parameter -> cochain."""

    name: str = ""
    parameter_kind: ParameterKind = ParameterKind.LAMBDA
    status: Status = Status.NONTRIVIAL
    algebra: Algebra = Algebra.OSP22
    source: str = ""
    summary: str = ""
    min_k: int = 1

    def check_parameter(self, parameter: Parameter) -> Fraction:
        """Coerce and validate; k-families need a positive integer."""
        value = as_scalar(parameter)
        if self.parameter_kind is ParameterKind.K:
            if value.denominator != 1 or value < self.min_k:
                raise ValueError(
                    f"{self.name} needs an integer k >= {self.min_k}, got {format_scalar(value)}"
                )
        self._check(value)
        return value

    def _check(self, value: Fraction) -> None:
        """Extra range restrictions; raise ValueError to reject."""

    @abstractmethod
    def weights(self, parameter: Fraction) -> tuple[Fraction, Fraction]:
        """(lambda, mu) of the operator space the cochain takes values in."""
        ...

    @abstractmethod
    def cochain(self, parameter: Fraction) -> Cochain1:
        ...

    def make(self, parameter: Parameter) -> CatalogEntry:
        value = self.check_parameter(parameter)
        return CatalogEntry(
            name=self.name,
            parameter=value,
            cochain=self.cochain(value),
            claimed_status=self.status,
            source=self.source,
            operator=self.coboundary_of(value),
        )

    def coboundary_of(self, parameter: Fraction) -> SuperDiffOp | None:
        return None

    def describe(self) -> dict[str, str]:
        return {
            "name": self.name,
            "parameter": self.parameter_kind.value,
            "range": self.parameter_range,
            "status": self.status.value,
            "algebra": self.algebra.value,
            "source": self.source,
            "summary": self.summary,
        }

    @property
    def parameter_range(self) -> str:
        if self.parameter_kind is ParameterKind.K:
            return f"k >= {self.min_k}"
        return "any rational"


class FormulaFamily(CatalogFamily):
    """Cochain given by a closed formula X_G -> sum of operator summands."""

    @abstractmethod
    def summands(self, G: SuperFunction, parameter: Fraction) -> list[SuperDiffOp]:
        """The formula's summands at generator G, already in normal form."""
        ...

    def value(self, G: SuperFunction, parameter: Fraction) -> SuperDiffOp:
        lam, mu = self.weights(parameter)
        total = SuperDiffOp.zero(lam, mu)
        for term in self.summands(G, parameter):
            total = total + term
        return total

    def cochain(self, parameter: Fraction) -> Cochain1:
        lam, mu = self.weights(parameter)
        return Cochain1.from_rule(
            lambda G: self.value(G, parameter), lam, mu, algebra=self.algebra
        )

    def summand_weights(self, parameter: Parameter) -> list[dict[str, Any]]:
        """ad(X_x)-weights of every summand at every generator.

        A well-formed formula gives each nonzero summand the single weight 0.
        """
        value = self.check_parameter(parameter)
        rows = []
        for g in self.algebra.generators:
            for index, term in enumerate(self.summands(g.function, value)):
                if not term:
                    continue
                weights = sorted(w - g.weight for w in weight_decompose(term))
                rows.append({
                    "generator": g.value,
                    "summand": index,
                    "weights": [format_scalar(w) for w in weights],
                })
        return rows


class CoboundaryFamily(CatalogFamily):
    """Cochain delta(A) for an explicit operator A."""

    status = Status.COBOUNDARY

    @abstractmethod
    def operator(self, parameter: Fraction) -> SuperDiffOp:
        ...

    def cochain(self, parameter: Fraction) -> Cochain1:
        return delta0(self.operator(parameter), algebra=self.algebra)

    def coboundary_of(self, parameter: Fraction) -> SuperDiffOp | None:
        return self.operator(parameter)


__all__ = [
    "Parameter",
    "Status",
    "ParameterKind",
    "CatalogEntry",
    "CatalogFamily",
    "FormulaFamily",
    "CoboundaryFamily",
]
