"""Contact vector fields on R^{1|2}, the contact bracket and weighted densities.

A contact field is determined by its generating superfunction F:

    X_F = F d/dx - 1/2 (-1)^{|F|} sum_i eta_bar_i(F) eta_bar_i

and [X_F, X_G] = X_{F,G} with the contact bracket {F, G} below.  The
orthosymplectic algebra osp(2|2) is realized by the eight generators
1, x, x^2, t1, t2, x*t1, x*t2, t1*t2; osp(1|2) is its t2-free part.
"""

from __future__ import annotations

import dataclasses
import enum
from fractions import Fraction
from typing import Mapping

from supercohom.superfield import (
    ONE,
    THETA1,
    THETA2,
    THETA12,
    X,
    MixedParityError,
    Parity,
    SuperFunction,
    eta_bar,
    format_scalar,
    partial_x,
    require_parity,
    sf_mul,
)


class VariableSetError(ValueError):
    """A two-theta object was used where a one-theta object is required."""


# -- generators -------------------------------------------------------------


class GeneratorId(enum.Enum):
    """Basis generators of osp(2|2), in the fixed report order."""

    X1 = "X1"
    Xx = "Xx"
    Xx2 = "Xx2"
    Xt1 = "Xt1"
    Xt2 = "Xt2"
    Xxt1 = "Xxt1"
    Xxt2 = "Xxt2"
    Xt1t2 = "Xt1t2"

    @property
    def function(self) -> SuperFunction:
        return _GENERATOR_FUNCTIONS[self]

    @property
    def parity(self) -> Parity:
        return self.function.parity

    @property
    def weight(self) -> Fraction:
        """Eigenvalue w of ad(X_x): [X_x, X_g] = w X_g."""
        return _GENERATOR_WEIGHTS[self]

    @property
    def field(self) -> ContactField:
        return ContactField(self.function)

    @property
    def index(self) -> int:
        return _GENERATOR_ORDER.index(self)

    def __lt__(self, other: GeneratorId) -> bool:
        if not isinstance(other, GeneratorId):
            return NotImplemented
        return self.index < other.index


_GENERATOR_FUNCTIONS = {
    GeneratorId.X1: ONE,
    GeneratorId.Xx: X,
    GeneratorId.Xx2: sf_mul(X, X),
    GeneratorId.Xt1: THETA1,
    GeneratorId.Xt2: THETA2,
    GeneratorId.Xxt1: sf_mul(X, THETA1),
    GeneratorId.Xxt2: sf_mul(X, THETA2),
    GeneratorId.Xt1t2: THETA12,
}
_HALF = Fraction(1, 2)
_GENERATOR_WEIGHTS = {
    GeneratorId.X1: Fraction(-1),
    GeneratorId.Xx: Fraction(0),
    GeneratorId.Xx2: Fraction(1),
    GeneratorId.Xt1: -_HALF,
    GeneratorId.Xt2: -_HALF,
    GeneratorId.Xxt1: _HALF,
    GeneratorId.Xxt2: _HALF,
    GeneratorId.Xt1t2: Fraction(0),
}
_GENERATOR_ORDER = tuple(GeneratorId)
# (mask, exponent) of the single monomial each generator is made of
_GENERATOR_MONOMIALS = {
    (mask, n): g for g in GeneratorId for mask, n, _ in g.function.terms()
}


class Algebra(enum.Enum):
    OSP22 = "osp22"
    OSP12 = "osp12"
    SL2 = "sl2"
    PI_H = "pi_h"

    @property
    def generators(self) -> tuple[GeneratorId, ...]:
        return _ALGEBRA_GENERATORS[self]

    @property
    def is_subalgebra(self) -> bool:
        return self is not Algebra.PI_H

    @property
    def native_variables(self) -> Variables:
        """Smallest variable set the algebra's fields and operators live on."""
        if self is Algebra.OSP12:
            return Variables.ONE_THETA
        if self is Algebra.SL2:
            return Variables.NO_THETA
        return Variables.TWO_THETA

    @classmethod
    def parse(cls, value: Algebra | str) -> Algebra:
        if isinstance(value, Algebra):
            return value
        try:
            return cls(value)
        except ValueError:
            choices = ", ".join(a.value for a in cls)
            raise ValueError(f"Unknown algebra {value!r}, expected one of {choices}") from None


G = GeneratorId
_ALGEBRA_GENERATORS = {
    Algebra.OSP22: _GENERATOR_ORDER,
    Algebra.OSP12: (G.X1, G.Xx, G.Xx2, G.Xt1, G.Xxt1),
    Algebra.SL2: (G.X1, G.Xx, G.Xx2),
    Algebra.PI_H: (G.Xt2, G.Xxt2, G.Xt1t2),
}
del G


# -- contact fields ---------------------------------------------------------


@dataclasses.dataclass(frozen=True, slots=True)
class ContactField:
    """The field X_F for a parity-homogeneous generator F."""

    generator: SuperFunction

    def __post_init__(self) -> None:
        require_parity(self.generator, "contact field generator")

    @property
    def parity(self) -> Parity:
        return self.generator.parity

    @property
    def is_theta2_free(self) -> bool:
        return self.generator.is_theta2_free

    def __call__(self, G: SuperFunction) -> SuperFunction:
        return field_apply(self, G)


def _eta_pairing(F: SuperFunction, G: SuperFunction) -> SuperFunction:
    """-1/2 (-1)^{|F|} sum_i eta_bar_i(F) eta_bar_i(G)."""
    total = sf_mul(eta_bar(F, 1), eta_bar(G, 1)) + sf_mul(eta_bar(F, 2), eta_bar(G, 2))
    return total * Fraction(-require_parity(F).sign, 2)


def field_apply(X: ContactField, G: SuperFunction) -> SuperFunction:
    """X_F(G) = F G' - 1/2 (-1)^{|F|} sum_i eta_bar_i(F) eta_bar_i(G)."""
    F = X.generator
    return sf_mul(F, partial_x(G)) + _eta_pairing(F, G)


def contact_bracket(F: SuperFunction, G: SuperFunction) -> SuperFunction:
    """{F, G} = F G' - F' G - 1/2 (-1)^{|F|} sum_i eta_bar_i(F) eta_bar_i(G)."""
    require_parity(F, "bracket argument")
    require_parity(G, "bracket argument")
    return sf_mul(F, partial_x(G)) - sf_mul(partial_x(F), G) + _eta_pairing(F, G)


def bracket(g: GeneratorId, h: GeneratorId) -> dict[GeneratorId, Fraction]:
    """[X_g, X_h] expanded in the osp(2|2) basis."""
    return expand_in_basis(contact_bracket(g.function, h.function), Algebra.OSP22)


def expand_in_basis(F: SuperFunction, algebra: Algebra | str) -> dict[GeneratorId, Fraction]:
    """Coordinates of the generator F in the basis of *algebra*.

    Raises:
        ValueError: If F is not in the span of the algebra's generators.
    """
    algebra = Algebra.parse(algebra)
    allowed = set(algebra.generators)
    coords = {}
    for mask, n, c in F.terms():
        g = _GENERATOR_MONOMIALS.get((mask, n))
        if g is None or g not in allowed:
            raise ValueError(f"{F} is not in the span of {algebra.value}")
        coords[g] = c
    return dict(sorted(coords.items()))


def combination(coords: Mapping[GeneratorId, Fraction]) -> SuperFunction:
    """Inverse of :func:`expand_in_basis`."""
    total = SuperFunction()
    for g, c in coords.items():
        total = total + g.function * c
    return total


def basis_of(algebra: Algebra | str) -> tuple[ContactField, ...]:
    return tuple(g.field for g in Algebra.parse(algebra).generators)


def structure_constants(
    algebra: Algebra | str,
) -> dict[tuple[GeneratorId, GeneratorId], dict[GeneratorId, Fraction]]:
    """Table (g, h) -> coordinates of [X_g, X_h] for every ordered pair.

    Raises:
        ValueError: For pi_h, which is not closed under the bracket.
        RuntimeError: If a bracket leaves the span of the basis.
    """
    algebra = Algebra.parse(algebra)
    if not algebra.is_subalgebra:
        raise ValueError(f"{algebra.value} is not a subalgebra, it has no structure constants")
    table = {}
    for g in algebra.generators:
        for h in algebra.generators:
            value = contact_bracket(g.function, h.function)
            try:
                table[g, h] = expand_in_basis(value, algebra)
            except ValueError:
                raise RuntimeError(
                    f"Bracket [{g.value}, {h.value}] = {value} leaves {algebra.value}"
                ) from None
    return table


def bracket_table(algebra: Algebra | str) -> dict[str, dict[str, dict[str, str]]]:
    """JSON-ready nested form of :func:`structure_constants`."""
    table = structure_constants(algebra)
    out: dict[str, dict[str, dict[str, str]]] = {}
    for (g, h), coords in table.items():
        out.setdefault(g.value, {})[h.value] = {
            k.value: format_scalar(c) for k, c in coords.items()
        }
    return out


# -- densities --------------------------------------------------------------


class Variables(enum.Enum):
    """Odd coordinates a density or operator may depend on."""

    NO_THETA = "no-theta"
    ONE_THETA = "one-theta"
    TWO_THETA = "two-theta"

    def admits(self, F: SuperFunction) -> bool:
        if self is Variables.NO_THETA:
            return F.is_theta_free
        if self is Variables.ONE_THETA:
            return F.is_theta2_free
        return True


@dataclasses.dataclass(frozen=True, slots=True)
class ParityShiftTag:
    """Marks an object as living in the parity-shifted copy Pi(V)."""

    shifted: bool = False

    def __xor__(self, other: ParityShiftTag) -> ParityShiftTag:
        return ParityShiftTag(self.shifted != other.shifted)

    @property
    def parity(self) -> Parity:
        return Parity.ODD if self.shifted else Parity.EVEN

    def __bool__(self) -> bool:
        return self.shifted


UNSHIFTED = ParityShiftTag(False)
SHIFTED = ParityShiftTag(True)


@dataclasses.dataclass(frozen=True, slots=True)
class Density:
    """F * alpha^weight, with alpha the contact form on R^{1|1} or R^{1|2}."""

    body: SuperFunction
    weight: Fraction
    variables: Variables = Variables.TWO_THETA
    shift: ParityShiftTag = UNSHIFTED

    def __post_init__(self) -> None:
        object.__setattr__(self, "weight", Fraction(self.weight))
        if not self.variables.admits(self.body):
            raise VariableSetError(
                f"{self.variables.value} density body has extra odd variables: {self.body}"
            )

    @property
    def parity(self) -> Parity:
        return self.body.parity + self.shift.parity

    def with_body(self, body: SuperFunction) -> Density:
        return dataclasses.replace(self, body=body)

    def to_json(self) -> dict:
        return {
            "body": self.body.to_json(),
            "weight": format_scalar(self.weight),
            "variables": self.variables.value,
            "shifted": self.shift.shifted,
        }


def check_acts_on(X: ContactField, variables: Variables) -> None:
    if not variables.admits(X.generator):
        raise VariableSetError(
            f"Field generated by {X.generator} does not preserve {variables.value} densities"
        )


def lie_derivative(X: ContactField, D: Density) -> Density:
    """L^weight_X(D): the field action plus weight * F' * body."""
    check_acts_on(X, D.variables)
    F = X.generator
    body = field_apply(X, D.body) + sf_mul(partial_x(F), D.body) * D.weight
    return D.with_body(body)


# -- the complement h -------------------------------------------------------


@dataclasses.dataclass(frozen=True, slots=True)
class HBasisElement:
    """One of the three basis vectors of h inside F^1_{-1/2}.

    ``density`` is the one-theta realization, ``generator`` the osp(2|2)
    generator X_{density * t2} it corresponds to.
    """

    name: str
    density: SuperFunction
    generator: GeneratorId

    @property
    def parity(self) -> Parity:
        return self.density.parity


H_WEIGHT = Fraction(-1, 2)


def h_basis() -> tuple[HBasisElement, ...]:
    return (
        HBasisElement("t1", THETA1, GeneratorId.Xt1t2),
        HBasisElement("x", X, GeneratorId.Xxt2),
        HBasisElement("1", ONE, GeneratorId.Xt2),
    )


def h_to_generator(F: SuperFunction) -> SuperFunction:
    """F alpha^{-1/2} in h  ->  generator F t2 of the matching field."""
    if not F.is_theta2_free:
        raise VariableSetError(f"h elements are t2-free, got {F}")
    return sf_mul(F, THETA2)


__all__ = [
    "VariableSetError",
    "MixedParityError",
    "GeneratorId",
    "Algebra",
    "ContactField",
    "field_apply",
    "contact_bracket",
    "bracket",
    "expand_in_basis",
    "combination",
    "basis_of",
    "structure_constants",
    "bracket_table",
    "Variables",
    "ParityShiftTag",
    "UNSHIFTED",
    "SHIFTED",
    "Density",
    "check_acts_on",
    "lie_derivative",
    "HBasisElement",
    "H_WEIGHT",
    "h_basis",
    "h_to_generator",
]
