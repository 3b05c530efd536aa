"""Tests for contact fields, the contact bracket and weighted densities.

Covers: [X_F, X_G] = X_{F,G} against a commutator of fields applied twice,
the ad(X_x) weights, closure of the subalgebras, super Jacobi on the
generators and the Lie derivative on densities.
"""

import itertools
import random
from fractions import Fraction

import pytest

from supercohom.contact import (
    Algebra,
    ContactField,
    Density,
    GeneratorId,
    Variables,
    VariableSetError,
    bracket,
    bracket_table,
    combination,
    contact_bracket,
    expand_in_basis,
    field_apply,
    h_basis,
    h_to_generator,
    lie_derivative,
    structure_constants,
)
from supercohom.superfield import ONE, THETA1, THETA2, X, Parity, SuperFunction, sf_mul

from .helpers import field_commutator, random_superfunction


def _sign(a: SuperFunction, b: SuperFunction) -> int:
    return -1 if (a.parity is Parity.ODD and b.parity is Parity.ODD) else 1


class TestBracket:

    def test_field_commutator_matches_bracket(self) -> None:
        rng = random.Random(5)
        for g, h in itertools.product(GeneratorId, repeat=2):
            F, G = g.function, h.function
            T = random_superfunction(rng, degree=2)
            lhs = field_commutator(F, G, T)
            rhs = field_apply(ContactField(contact_bracket(F, G)), T)
            assert lhs == rhs, f"[{g.value}, {h.value}] on {T}"

    def test_adx_weights(self) -> None:
        for g in GeneratorId:
            expected = {g: g.weight} if g.weight else {}
            assert bracket(GeneratorId.Xx, g) == expected, g.value

    def test_odd_self_bracket(self) -> None:
        assert contact_bracket(THETA1, THETA1) == ONE * Fraction(1, 2)

    def test_super_antisymmetry(self) -> None:
        for g, h in itertools.product(GeneratorId, repeat=2):
            F, G = g.function, h.function
            assert contact_bracket(F, G) == contact_bracket(G, F) * -_sign(F, G)

    def test_super_jacobi_on_generators(self) -> None:
        gens = [g.function for g in GeneratorId]
        for a, b, c in itertools.product(gens, repeat=3):
            total = (
                contact_bracket(a, contact_bracket(b, c)) * _sign(a, c)
                + contact_bracket(b, contact_bracket(c, a)) * _sign(b, a)
                + contact_bracket(c, contact_bracket(a, b)) * _sign(c, b)
            )
            assert total == SuperFunction(), f"a={a}, b={b}, c={c}"

    def test_mixed_generator_rejected(self) -> None:
        with pytest.raises(ValueError):
            ContactField(ONE + THETA1)


class TestAlgebras:

    @pytest.mark.parametrize("algebra,size", [
        (Algebra.OSP22, 8),
        (Algebra.OSP12, 5),
        (Algebra.SL2, 3),
    ])
    def test_subalgebras_close(self, algebra: Algebra, size: int) -> None:
        table = structure_constants(algebra)
        assert len(table) == size * size

    def test_pi_h_has_no_structure_constants(self) -> None:
        with pytest.raises(ValueError, match="not a subalgebra"):
            structure_constants("pi_h")

    def test_unknown_algebra(self) -> None:
        with pytest.raises(ValueError, match="Unknown algebra"):
            Algebra.parse("gl11")

    def test_expand_round_trip(self) -> None:
        F = X * 3 + sf_mul(X, THETA2) - THETA1
        coords = expand_in_basis(F, Algebra.OSP22)
        assert coords == {GeneratorId.Xx: 3, GeneratorId.Xt1: -1, GeneratorId.Xxt2: 1}
        assert combination(coords) == F

    def test_expand_outside_span(self) -> None:
        with pytest.raises(ValueError, match="not in the span"):
            expand_in_basis(THETA2, Algebra.OSP12)

    def test_bracket_table_is_stringly(self) -> None:
        table = bracket_table("sl2")
        assert table["X1"]["Xx"] == {"X1": "1"}
        assert table["Xx"]["Xx"] == {}


class TestDensities:

    @pytest.mark.parametrize("n,weight", [(0, Fraction(1, 2)), (2, Fraction(-1)), (3, Fraction(0))])
    def test_euler_field_scales(self, n: int, weight: Fraction) -> None:
        body = SuperFunction.from_terms([(0, n, 1)])
        D = lie_derivative(ContactField(X), Density(body, weight))
        assert D.body == body * (n + weight)
        assert D.weight == weight

    def test_module_property_on_even_generators(self) -> None:
        rng = random.Random(9)
        D = Density(random_superfunction(rng, degree=3), Fraction(3, 2))
        evens = [GeneratorId.X1, GeneratorId.Xx, GeneratorId.Xx2, GeneratorId.Xt1t2]
        for g, h in itertools.product(evens, repeat=2):
            Xg, Xh = g.field, h.field
            lhs = lie_derivative(ContactField(contact_bracket(g.function, h.function)), D).body
            rhs = (
                lie_derivative(Xg, lie_derivative(Xh, D)).body
                - lie_derivative(Xh, lie_derivative(Xg, D)).body
            )
            assert lhs == rhs, f"[{g.value}, {h.value}]"

    def test_one_theta_density_rejects_theta2(self) -> None:
        with pytest.raises(VariableSetError):
            Density(THETA2, Fraction(0), Variables.ONE_THETA)

    def test_theta2_field_does_not_act_on_one_theta(self) -> None:
        D = Density(X, Fraction(1), Variables.ONE_THETA)
        with pytest.raises(VariableSetError, match="one-theta"):
            lie_derivative(GeneratorId.Xt2.field, D)


class TestComplement:

    def test_h_basis_maps_to_generators(self) -> None:
        for element in h_basis():
            assert h_to_generator(element.density) == element.generator.function

    def test_h_parities(self) -> None:
        parities = [e.parity for e in h_basis()]
        assert parities == [Parity.ODD, Parity.EVEN, Parity.EVEN]

    def test_h_to_generator_rejects_theta2(self) -> None:
        with pytest.raises(VariableSetError):
            h_to_generator(THETA2)
