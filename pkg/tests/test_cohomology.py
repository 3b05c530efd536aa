"""Tests for cochains, the differentials and the truncated H^1 engine.

Covers: delta1 o delta0 = 0, cocycle failures with witnesses, exact
coboundary solving with re-verifiable certificates, the relative condition,
the Pi-twist on cochains, one-theta osp(1|2) cochains and H^1 dimensions of
reference cells with plateau detection.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supercohom import catalog
from supercohom.cohomology import (
    Cochain1,
    NormalizationError,
    coboundary_solve,
    cochain_basis,
    default_order,
    delta0,
    delta1,
    h1_dimension,
    is_cocycle,
    is_relative_cochain,
    normalize_translation,
    pi_twist,
    quotient_rank,
)
from supercohom.contact import Algebra, GeneratorId, Variables, VariableSetError
from supercohom.operators import SuperDiffOp, from_monomials
from supercohom.superfield import T1, THETA2, X, Parity, SuperFunction

from .helpers import homogeneous_part, random_operator

F = Fraction

# (e1, e2, j, theta mask, x exponent, coefficient)
_monomial = st.tuples(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1),
                      st.integers(0, 3), st.integers(0, 2), st.integers(-3, 3))
_weights = st.sampled_from([F(0), F(1, 2), F(-1, 3), F(1)])


class TestCochains:

    def test_build_fills_missing_generators(self) -> None:
        Y = Cochain1.build({GeneratorId.Xx: SuperDiffOp.identity(1)}, 1, 1)
        assert Y.generators == Algebra.OSP22.generators
        assert not Y.value(GeneratorId.X1)
        assert Y.parity is Parity.EVEN

    def test_build_rejects_wrong_weights(self) -> None:
        with pytest.raises(ValueError, match="expected"):
            Cochain1.build({GeneratorId.Xx: SuperDiffOp.identity(0)}, 1, 1)

    def test_build_rejects_foreign_generators(self) -> None:
        values = {GeneratorId.Xt2: SuperDiffOp.identity(0)}
        with pytest.raises(ValueError, match="not in osp12"):
            Cochain1.build(values, 0, 0, algebra="osp12")

    def test_pi_h_is_not_a_cochain_algebra(self) -> None:
        with pytest.raises(ValueError, match="osp22 or osp12"):
            Cochain1.zero(0, 0, algebra="pi_h")

    def test_osp12_cochains_are_one_theta(self) -> None:
        assert Cochain1.zero(0, 0, algebra="osp12").variables is Variables.ONE_THETA
        values = {GeneratorId.X1: SuperDiffOp.multiplication(THETA2, 0)}
        with pytest.raises(VariableSetError, match="one-theta"):
            Cochain1.build(values, 0, 0, algebra="osp12")
        lifted = Cochain1.build(values, 0, 0, algebra="osp12", variables=Variables.TWO_THETA)
        assert lifted.to_json()["variables"] == "two-theta"

    def test_one_theta_needs_osp12(self) -> None:
        with pytest.raises(VariableSetError, match="osp12"):
            Cochain1.zero(0, 0, variables=Variables.ONE_THETA)

    def test_spaces_must_match(self) -> None:
        one = Cochain1.zero(0, 0, algebra="osp12")
        two = Cochain1.zero(0, 0, algebra="osp12", variables=Variables.TWO_THETA)
        with pytest.raises(ValueError, match="different spaces"):
            one + two

    def test_odd_cochain_parity(self) -> None:
        Y = Cochain1.build({GeneratorId.X1: SuperDiffOp.multiplication(THETA2, 0)}, 0, 0)
        assert Y.parity is Parity.ODD

    def test_pi_twist_is_involution(self) -> None:
        Y = catalog.make("upsilon-k", 1).cochain
        twisted = pi_twist(Y)
        assert twisted.shift.shifted
        assert pi_twist(twisted) == Y

    def test_linear_structure(self) -> None:
        Y = catalog.make("upsilon-diag", F(1, 3)).cochain
        assert not (Y - Y)
        assert Y * 2 == Y + Y


class TestDifferentials:

    def test_delta1_of_delta0_vanishes(self) -> None:
        rng = random.Random(31)
        for lam, mu in [(F(0), F(0)), (F(-1, 2), F(1)), (F(1, 3), F(5, 6))]:
            A = random_operator(rng, lam, mu, half_order=3, degree=1, density=0.5)
            for parity in (Parity.EVEN, Parity.ODD):
                part = homogeneous_part(A, parity)
                check = is_cocycle(delta0(part))
                assert check, f"lambda={lam}, mu={mu}, witness={check.witness}"

    @settings(max_examples=100, deadline=None)
    @given(items=st.lists(_monomial, min_size=1, max_size=5), lam=_weights, mu=_weights,
           one_theta=st.booleans())
    def test_delta_squared_vanishes(self, items, lam: Fraction, mu: Fraction,
                                    one_theta: bool) -> None:
        algebra = Algebra.OSP12 if one_theta else Algebra.OSP22
        if one_theta:
            items = [(e1, 0, j, mask & T1, n, c) for e1, _, j, mask, n, c in items]
        A = from_monomials([((e1, e2, j, mask, n), F(c)) for e1, e2, j, mask, n, c in items],
                           lam, mu)
        for part in A.homogeneous_parts().values():
            Y = delta0(part, algebra=algebra)
            assert Y.variables is algebra.native_variables
            check = is_cocycle(Y)
            assert check, f"{part}: {check.witness}"

    def test_delta0_on_osp12(self) -> None:
        A = SuperDiffOp.from_word(1, 1, 0, 0, 0, F(1, 2))
        Y = delta0(A, algebra="osp12")
        assert Y.algebra is Algebra.OSP12
        assert is_cocycle(Y)

    def test_mixed_operator_rejected(self) -> None:
        A = SuperDiffOp.identity(0) + SuperDiffOp.multiplication(THETA2, 0)
        with pytest.raises(ValueError, match="parity-homogeneous"):
            delta0(A)

    def test_failed_cocycle_has_witness(self) -> None:
        Y = Cochain1.build({GeneratorId.X1: SuperDiffOp.identity(0)}, 0, 0)
        check = is_cocycle(Y)
        assert not check
        g, h = check.witness
        assert check.value
        assert delta1(Y)[g, h] == check.value
        assert check.to_json()["witness"] == [g.value, h.value]


class TestCoboundarySolve:

    @pytest.mark.parametrize("A", [
        SuperDiffOp.from_word(1, 1, 1, 0, 0, 1),
        SuperDiffOp.from_word(X, 0, 0, 1, F(1, 2)),
        SuperDiffOp.from_word(THETA2, 1, 0, 1, F(-1, 2), F(1, 2)),
    ])
    def test_finds_primitive(self, A: SuperDiffOp) -> None:
        Y = delta0(A)
        result = coboundary_solve(Y)
        assert result.is_coboundary
        assert result.verify()
        assert delta0(result.operator) == Y

    @pytest.mark.parametrize("name,parameter", [
        ("upsilon-diag", F(1)),
        ("upsilon-diag-tilde", F(0)),
        ("upsilon-k", F(1)),
        ("upsilon-k-bar", F(2)),
    ])
    def test_certificate_for_nontrivial_class(self, name: str, parameter: Fraction) -> None:
        Y = catalog.make(name, parameter).cochain
        result = coboundary_solve(Y)
        assert not result
        assert result.certificate is not None
        assert result.verify()
        assert result.to_json()["coboundary"] is False

    def test_normalize_translation(self) -> None:
        A = SuperDiffOp.from_word(SuperFunction.from_terms([(0, 2, 1)]), 0, 0, 1, 0)
        A0, Yn = normalize_translation(delta0(A))
        assert not Yn.value(GeneratorId.X1)
        with pytest.raises(NormalizationError, match="half-order"):
            normalize_translation(delta0(A), order_bound=1)


class TestRelative:

    @pytest.mark.parametrize("lam,mu", [
        (F(1), F(3, 2)),
        (F(1), F(1, 2)),
        (F(2, 3), F(2, 3)),
    ])
    def test_relative_generators_give_relative_cocycles(self, lam: Fraction,
                                                        mu: Fraction) -> None:
        generators = catalog.relative_coboundary_generators(lam, mu)
        assert generators
        for op in generators:
            assert is_relative_cochain(delta0(op)), str(op)

    def test_absolute_class_is_not_relative(self) -> None:
        assert not is_relative_cochain(catalog.make("upsilon-diag", 1).cochain)

    def test_osp12_cochain_rejected(self) -> None:
        with pytest.raises(ValueError, match="osp22"):
            is_relative_cochain(catalog.make("gamma-diag", 0).cochain)


class TestH1:

    def test_default_order(self) -> None:
        assert default_order(0, 0) == 6
        assert default_order(F(-1, 2), F(1, 2)) == 8

    def test_basis_respects_filters(self) -> None:
        basis = cochain_basis(0, 0, order=2, degree=1, weight=0, parity=Parity.EVEN)
        assert basis
        for Y in basis:
            assert Y.parity is Parity.EVEN
            assert Y.weight == 0

    def test_relative_basis_only_on_pi_h(self) -> None:
        for Y in cochain_basis(0, 0, relative=True, order=1, degree=1):
            nonzero = [g for g, op in Y.items() if op]
            assert nonzero[0] in Algebra.PI_H.generators

    @pytest.mark.parametrize("lam,mu,relative,expected", [
        (F(0), F(0), False, 2),
        (F(-1, 2), F(1, 2), False, 3),
        (F(1), F(1), True, 1),
        (F(1, 3), F(1, 3), True, 1),
        (F(0), F(0), True, 0),
    ])
    def test_reference_cells(self, lam: Fraction, mu: Fraction, relative: bool,
                             expected: int) -> None:
        report = h1_dimension(lam, mu, relative=relative, check_plateau=False)
        assert report.h1_dim == expected, report.to_json()

    def test_bad_truncation(self) -> None:
        with pytest.raises(ValueError, match="Truncation bounds"):
            h1_dimension(0, 0, order=0)

    def test_relative_needs_osp22(self) -> None:
        with pytest.raises(ValueError, match="only defined for osp22"):
            h1_dimension(0, 0, relative=True, algebra="osp12")

    def test_quotient_rank_of_anti_diagonal_classes(self) -> None:
        classes = [catalog.make(name, 1).cochain
                   for name in ("upsilon-k", "upsilon-k-tilde", "upsilon-k-bar")]
        assert quotient_rank(classes) == 3

    @pytest.mark.parametrize("lam,mu,expected", [
        (F(0), F(1, 2), 2),
        (F(-1, 2), F(1), 2),
        (F(1, 3), F(1, 3), 1),
        (F(1, 3), F(5, 6), 0),
    ])
    def test_osp12_cells_reach_a_plateau(self, lam: Fraction, mu: Fraction,
                                         expected: int) -> None:
        report = h1_dimension(lam, mu, algebra="osp12")
        assert report.h1_dim == expected, report.to_json()
        assert report.plateau
        assert report.algebra == "osp12"

    def test_osp22_plateau(self) -> None:
        report = h1_dimension(F(1, 3), F(1, 3))
        assert report.h1_dim == 2
        assert report.plateau

    def test_plateau_not_claimed_without_check(self) -> None:
        assert not h1_dimension(F(1, 3), F(5, 6), algebra="osp12", check_plateau=False).plateau

    def test_osp12_classes_are_independent(self) -> None:
        classes = [catalog.make(name, 2).cochain for name in ("gamma-k", "gamma-k-tilde")]
        assert quotient_rank(classes) == 2
        coboundary = catalog.make("cob-eta1-d2-k", 1).cochain
        assert quotient_rank(classes + [coboundary]) == 3
        assert quotient_rank([]) == 0
