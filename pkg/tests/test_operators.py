"""Tests for normal-form differential operators and the osp(1|2) block transport.

Covers: folding of eta_bar words, composition against sequential application,
the Lie-derivative operator, ad(X_x) weights, the parity operator, the
Pi-twist involution and the phi/psi decompositions.
"""

import itertools
import random
from fractions import Fraction

import pytest

from supercohom.contact import (
    SHIFTED,
    Algebra,
    ContactField,
    Density,
    GeneratorId,
    Variables,
    VariableSetError,
    lie_derivative,
)
from supercohom.operators import (
    HALF,
    Blocks,
    SuperDiffOp,
    WeightMismatchError,
    lie_operator,
    module_action,
    op_apply,
    op_compose,
    parity_operator,
    phi_join,
    phi_split,
    pi_twist_operator,
    psi_blocks,
    psi_transport,
    right_theta2,
    weight_decompose,
    weight_of,
)
from supercohom.superfield import THETA1, THETA2, X, Parity, SuperFunction, sf_mul, sigma

from .helpers import apply_word, random_operator, random_superfunction


class TestNormalForm:

    @pytest.mark.parametrize("l,m,j", list(itertools.product(range(4), range(4), range(2))))
    def test_from_word_matches_repeated_derivations(self, l: int, m: int, j: int) -> None:
        rng = random.Random(100 * l + 10 * m + j)
        coeff = random_superfunction(rng, degree=1)
        op = SuperDiffOp.from_word(coeff, l, m, j, 0)
        for _ in range(3):
            G = random_superfunction(rng, degree=5)
            assert op(G) == apply_word(coeff, l, m, j, G)

    def test_from_word_folds_squares(self) -> None:
        op = SuperDiffOp.from_word(1, 2, 3, 0, 0)
        assert op.terms == (((0, 1, 2), SuperFunction.constant(1)),)

    def test_negative_exponent_rejected(self) -> None:
        with pytest.raises(ValueError, match="Exponents"):
            SuperDiffOp.from_word(1, -1, 0, 0, 0)

    def test_bad_key_rejected(self) -> None:
        with pytest.raises(ValueError, match="normal form"):
            SuperDiffOp.build({(2, 0, 0): X}, 0)

    def test_zero_coefficients_dropped(self) -> None:
        op = SuperDiffOp.build({(0, 0, 1): SuperFunction()}, 0)
        assert not op
        assert op.half_order == -1

    def test_parity(self) -> None:
        assert SuperDiffOp.from_word(1, 1, 0, 0, 0).parity is Parity.ODD
        assert SuperDiffOp.from_word(THETA1, 1, 0, 0, 0).parity is Parity.EVEN
        assert SuperDiffOp.from_word(1, 1, 0, 0, 0).pi().parity is Parity.EVEN
        mixed = SuperDiffOp.identity(0) + SuperDiffOp.multiplication(THETA2, 0)
        assert mixed.parity is Parity.MIXED

    def test_homogeneous_parts_sum_back(self) -> None:
        rng = random.Random(21)
        op = random_operator(rng, Fraction(0), Fraction(1), density=0.6)
        parts = op.homogeneous_parts()
        total = SuperDiffOp.zero(op.source_weight, op.target_weight)
        for parity, part in parts.items():
            assert part.parity is parity
            total = total + part
        assert total == op


class TestComposition:

    def test_composition_matches_sequential_application(self) -> None:
        rng = random.Random(4)
        for _ in range(10):
            B = random_operator(rng, Fraction(0), HALF)
            A = random_operator(rng, HALF, Fraction(2))
            AB = op_compose(A, B)
            assert (AB.source_weight, AB.target_weight) == (0, 2)
            for _ in range(2):
                G = random_superfunction(rng, degree=4)
                assert AB(G) == A(B(G))

    def test_weight_mismatch(self) -> None:
        A = SuperDiffOp.identity(1)
        B = SuperDiffOp.identity(0)
        with pytest.raises(WeightMismatchError, match="Cannot compose"):
            op_compose(A, B)
        with pytest.raises(WeightMismatchError, match="Cannot add"):
            A + B

    def test_shift_tags_compose_by_xor(self) -> None:
        A = SuperDiffOp.identity(0).pi()
        assert op_compose(A, A).shift.shifted is False
        assert op_compose(A, SuperDiffOp.identity(0)).shift == SHIFTED

    def test_apply_checks_weight_and_variables(self) -> None:
        A = SuperDiffOp.from_word(1, 0, 1, 0, 0)
        with pytest.raises(WeightMismatchError):
            op_apply(A, Density(X, Fraction(1)))
        with pytest.raises(VariableSetError):
            op_apply(A, Density(X, Fraction(0), Variables.ONE_THETA))
        out = op_apply(A, Density(sf_mul(X, THETA2), Fraction(0)))
        assert out.body == A(sf_mul(X, THETA2))


class TestLieOperator:

    @pytest.mark.parametrize("g", list(GeneratorId))
    def test_matches_lie_derivative(self, g: GeneratorId) -> None:
        rng = random.Random(g.index)
        weight = Fraction(-3, 2)
        L = lie_operator(g.field, weight)
        for _ in range(3):
            G = random_superfunction(rng, degree=3)
            assert L(G) == lie_derivative(ContactField(g.function), Density(G, weight)).body

    @pytest.mark.parametrize("g", Algebra.OSP12.generators)
    def test_one_theta_operator_matches_density_action(self, g: GeneratorId) -> None:
        rng = random.Random(50 + g.index)
        weight = Fraction(2, 3)
        L = lie_operator(g.field, weight, Variables.ONE_THETA)
        assert L.fits(Variables.ONE_THETA)
        for _ in range(3):
            G = random_superfunction(rng, degree=3, theta2_free=True)
            D = Density(G, weight, Variables.ONE_THETA)
            assert L(G) == lie_derivative(g.field, D).body

    @pytest.mark.parametrize("g", Algebra.SL2.generators)
    def test_plain_operator_matches_density_action(self, g: GeneratorId) -> None:
        rng = random.Random(60 + g.index)
        L = lie_operator(g.field, Fraction(-1, 2), Variables.NO_THETA)
        assert L.fits(Variables.NO_THETA)
        for _ in range(3):
            G = random_superfunction(rng, degree=3, theta_free=True)
            D = Density(G, Fraction(-1, 2), Variables.NO_THETA)
            assert L(G) == lie_derivative(g.field, D).body

    def test_two_theta_field_rejected_on_one_theta(self) -> None:
        with pytest.raises(VariableSetError):
            lie_operator(GeneratorId.Xt2.field, 0, Variables.ONE_THETA)
        with pytest.raises(VariableSetError):
            lie_operator(GeneratorId.Xt1.field, 0, Variables.NO_THETA)


class TestModuleAction:

    @pytest.mark.parametrize("g", Algebra.OSP12.generators)
    def test_eta1_is_osp12_invariant(self, g: GeneratorId) -> None:
        A = SuperDiffOp.from_word(1, 1, 0, 0, 0, HALF)
        assert not module_action(g.field, A, Variables.ONE_THETA)

    def test_two_theta_normal_form_keeps_t2_terms(self) -> None:
        A = SuperDiffOp.from_word(1, 1, 0, 0, 0, HALF)
        value = module_action(GeneratorId.Xx2.field, A)
        assert value
        assert not value.fits(Variables.ONE_THETA)

    @pytest.mark.parametrize("g", Algebra.SL2.generators)
    def test_derivative_is_sl2_invariant(self, g: GeneratorId) -> None:
        A = SuperDiffOp.from_word(1, 0, 0, 1, 0, 1)
        assert not module_action(g.field, A, Variables.NO_THETA)

    def test_plain_action_on_wrong_weights(self) -> None:
        A = SuperDiffOp.from_word(1, 0, 0, 1, 1, 2)
        assert module_action(GeneratorId.Xx2.field, A, Variables.NO_THETA)

    def test_operator_outside_variable_set(self) -> None:
        with pytest.raises(VariableSetError):
            module_action(GeneratorId.X1.field, SuperDiffOp.multiplication(THETA2, 0),
                          Variables.ONE_THETA)
        with pytest.raises(VariableSetError):
            module_action(GeneratorId.X1.field, SuperDiffOp.from_word(1, 1, 0, 0, 0, HALF),
                          Variables.NO_THETA)


class TestWeights:

    def test_constant_coefficient_weights(self) -> None:
        assert weight_of(SuperDiffOp.identity(Fraction(1, 2))) == 0
        assert weight_of(SuperDiffOp.from_word(1, 0, 0, 1, 0, 1)) == 0
        assert weight_of(SuperDiffOp.from_word(1, 1, 0, 0, 0, 0)) == -HALF

    def test_mixed_weights(self) -> None:
        op = SuperDiffOp.identity(0) + SuperDiffOp.from_word(1, 0, 0, 1, 0)
        assert weight_of(op) is None
        assert set(weight_decompose(op)) == {Fraction(-1), Fraction(0)}

    def test_x_dependent_rejected(self) -> None:
        with pytest.raises(ValueError, match="constant coefficients"):
            weight_of(SuperDiffOp.multiplication(X, 0))


class TestParityOperators:

    def test_parity_operator_is_sigma(self) -> None:
        rng = random.Random(13)
        P = parity_operator(0)
        R = right_theta2(0)
        for _ in range(5):
            F = random_superfunction(rng)
            assert P(F) == sigma(F)
            assert R(F) == sf_mul(F, THETA2)

    def test_one_theta_parity_operator(self) -> None:
        rng = random.Random(14)
        P = parity_operator(0, one_theta=True)
        assert P.is_theta2_free
        F = random_superfunction(rng, theta2_free=True)
        assert P(F) == sigma(F)

    def test_pi_twist_is_involution(self) -> None:
        rng = random.Random(15)
        for theta2_free in (True, False):
            A = random_operator(rng, Fraction(0), Fraction(1), theta2_free=theta2_free)
            twisted = pi_twist_operator(A)
            assert twisted.shift.shifted
            assert pi_twist_operator(twisted) == A


class TestDecomposition:

    def test_phi_split_and_join(self) -> None:
        rng = random.Random(16)
        D = Density(random_superfunction(rng), Fraction(1, 2))
        first, second = phi_split(D)
        assert first.weight == Fraction(1, 2) and second.weight == 1
        assert second.shift.shifted and not first.shift.shifted
        assert phi_join(first, second) == D

    def test_phi_split_needs_two_thetas(self) -> None:
        with pytest.raises(VariableSetError):
            phi_split(Density(X, Fraction(0), Variables.ONE_THETA))

    def test_phi_join_checks_weights(self) -> None:
        with pytest.raises(WeightMismatchError):
            phi_join(Density(X, 0, Variables.ONE_THETA), Density(X, 0, Variables.ONE_THETA))

    def test_identity_blocks(self) -> None:
        blocks = psi_blocks(SuperDiffOp.identity(0))
        assert blocks.a11 == SuperDiffOp.identity(0)
        assert blocks.a22 == SuperDiffOp.identity(HALF)
        assert not blocks.a12 and not blocks.a21

    def test_psi_transport_inverts_psi_blocks(self) -> None:
        rng = random.Random(17)
        for _ in range(6):
            A = random_operator(rng, Fraction(-1, 2), Fraction(1), density=0.4)
            assert psi_transport(psi_blocks(A)) == A

    def test_psi_blocks_inverts_psi_transport(self) -> None:
        rng = random.Random(18)
        lam, mu = Fraction(0), Fraction(3, 2)

        def block(src: Fraction, tgt: Fraction) -> SuperDiffOp:
            return random_operator(rng, src, tgt, theta2_free=True, density=0.5)

        blocks = Blocks(
            a11=block(lam, mu),
            a22=block(lam + HALF, mu + HALF),
            a12=block(lam, mu + HALF).with_shift(SHIFTED),
            a21=block(lam + HALF, mu).with_shift(SHIFTED),
        )
        assert psi_blocks(psi_transport(blocks)) == blocks

    def test_single_slot(self) -> None:
        op = SuperDiffOp.from_word(1, 1, 0, 0, 0, Fraction(1, 2)).pi()
        blocks = Blocks.single("a12", op, 0, 0)
        assert blocks.a12 == op
        assert not blocks.a11 and not blocks.a22 and not blocks.a21
        with pytest.raises(ValueError, match="Unknown block slot"):
            Blocks.single("a33", op, 0, 0)

    def test_off_block_weights_rejected(self) -> None:
        blocks = Blocks.single("a11", SuperDiffOp.identity(0), 0, 0)
        bad = Blocks(blocks.a11, blocks.a11, blocks.a12, blocks.a21)
        with pytest.raises(WeightMismatchError, match="Block a22"):
            psi_transport(bad)
