"""Tests for the registered cochain families.

Covers: worked values of the formulas, weight homogeneity of every summand,
the cocycle property of each family on small parameters, the relative
coboundary generators per cell, lifting osp(1|2) classes into blocks and
parameter validation.
"""

import random
from fractions import Fraction

import pytest

from supercohom import catalog
from supercohom.catalog import BLOCK_SLOTS, FAMILIES, lift, relative_coboundary_generators
from supercohom.catalog.coboundaries import Partial2, Theta2, Theta2Eta1, Theta2Eta2
from supercohom.cohomology import delta0, is_cocycle
from supercohom.contact import Algebra, GeneratorId, Variables
from supercohom.family import FormulaFamily, ParameterKind, Status
from supercohom.operators import SuperDiffOp, module_action, psi_blocks
from supercohom.superfield import THETA1, THETA2, X, Parity, SuperFunction

from .helpers import random_superfunction

F = Fraction


def _small_parameters(family) -> list[Fraction]:
    if family.parameter_kind is ParameterKind.K:
        return [F(family.min_k), F(family.min_k + 1)]
    if family.name == "cob-t2-eta1":
        return [F(0)]
    return [F(0), F(1, 2), F(-2, 3)]


class TestRegistry:

    def test_names_are_unique(self) -> None:
        assert len(catalog.REGISTRY) == len(FAMILIES)

    def test_unknown_family(self) -> None:
        with pytest.raises(KeyError, match="Unknown catalog family"):
            catalog.family("upsilon-zz")

    def test_listing(self) -> None:
        rows = catalog.catalog_list()
        assert len(rows) >= 10
        assert {"name", "parameter", "range", "status", "algebra"} <= set(rows[0])

    @pytest.mark.parametrize("name,parameter", [
        ("upsilon-k", 0),
        ("upsilon-k", "1/2"),
        ("gamma-k-tilde", -1),
    ])
    def test_k_families_need_positive_integers(self, name: str, parameter) -> None:
        with pytest.raises(ValueError, match="needs an integer k"):
            catalog.make(name, parameter)

    def test_theta2_eta1_only_at_zero(self) -> None:
        with pytest.raises(ValueError):
            catalog.make("cob-t2-eta1", 1)

    def test_entry_json(self) -> None:
        entry = catalog.make("upsilon-k", 2)
        data = entry.to_json()
        assert data["parameter"] == "2"
        assert data["cochain"]["lambda"] == "-1" and data["cochain"]["mu"] == "1"
        assert entry.weights == (-1, 1)
        assert entry.claimed_status is Status.NONTRIVIAL


class TestFormulas:

    def test_diagonal_on_x_squared(self) -> None:
        Y = catalog.make("upsilon-diag", 1).cochain
        assert Y.value(GeneratorId.Xx2) == SuperDiffOp.multiplication(X * 2, 1)
        assert not Y.value(GeneratorId.X1)

    def test_diagonal_tilde_at_zero(self) -> None:
        Y = catalog.make("upsilon-diag-tilde", 0).cochain
        assert Y.value(GeneratorId.Xt1t2) == SuperDiffOp.multiplication(
            SuperFunction.constant(-1), 0
        )

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_tilde_on_theta12(self, k: int) -> None:
        lam, mu = F(-k, 2), F(k, 2)
        value = catalog.make("upsilon-k-tilde", k).cochain.value(GeneratorId.Xt1t2)
        expected = (
            SuperDiffOp.from_word(-k, 1, 2 * k - 1, 0, lam, mu)
            + SuperDiffOp.from_word(THETA1, 0, 2 * k + 1, 0, lam, mu)
            + SuperDiffOp.from_word(THETA2, 2 * k + 1, 0, 0, lam, mu)
        )
        assert value == expected

    @pytest.mark.parametrize("k", [1, 2])
    def test_tilde_tail_kills_even_functions(self, k: int) -> None:
        lam, mu = F(-k, 2), F(k, 2)
        tail = (
            SuperDiffOp.from_word(THETA1, 0, 2 * k + 1, 0, lam, mu)
            + SuperDiffOp.from_word(THETA2, 2 * k + 1, 0, 0, lam, mu)
        )
        rng = random.Random(k)
        for _ in range(5):
            even = random_superfunction(rng, degree=2 * k + 3, parity=Parity.EVEN)
            assert tail(even) == SuperFunction()

    @pytest.mark.parametrize("family", [f for f in FAMILIES if isinstance(f, FormulaFamily)],
                             ids=lambda f: f.name)
    def test_summands_have_weight_zero(self, family: FormulaFamily) -> None:
        for parameter in _small_parameters(family):
            for row in family.summand_weights(parameter):
                assert row["weights"] == ["0"], f"{family.name}({parameter}): {row}"


class TestCocycles:

    @pytest.mark.parametrize("family", FAMILIES, ids=lambda f: f.name)
    def test_family_is_cocycle(self, family) -> None:
        for parameter in _small_parameters(family):
            entry = family.make(parameter)
            check = is_cocycle(entry.cochain)
            assert check, f"{family.name}({parameter}) fails on {check.witness}"

    @pytest.mark.parametrize("name", ["gamma-k", "gamma-k-tilde"])
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_osp12_off_diagonal_families(self, name: str, k: int) -> None:
        Y = catalog.make(name, k).cochain
        assert Y.variables is Variables.ONE_THETA
        check = is_cocycle(Y)
        assert check, f"{name}({k}) fails on {check.witness}"

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_gamma_k_on_x_is_invariant(self, k: int) -> None:
        value = catalog.make("gamma-k", k).cochain.value(GeneratorId.Xx)
        assert value == SuperDiffOp.from_word(-1, 2 * k - 1, 0, 0, F(1 - k, 2), F(k, 2))
        for g in Algebra.OSP12.generators:
            assert not module_action(g.field, value, Variables.ONE_THETA), g.value

    def test_two_theta_normal_form_misses_invariance(self) -> None:
        Y = catalog.make("gamma-k", 2).cochain
        value = Y.value(GeneratorId.Xx)
        assert module_action(GeneratorId.Xx2.field, value, Variables.TWO_THETA)

    def test_coboundary_families_carry_operator(self) -> None:
        entry = catalog.make("cob-t2-eta2", F(1, 2))
        assert entry.claimed_status is Status.COBOUNDARY
        assert delta0(entry.operator) == entry.cochain


class TestRelativeGenerators:

    def test_partial2_cell(self) -> None:
        assert relative_coboundary_generators(1, F(3, 2)) == [Partial2().operator(F(1))]

    def test_theta2_cell(self) -> None:
        assert relative_coboundary_generators(1, F(1, 2)) == [Theta2().operator(F(1))]

    def test_diagonal_cells(self) -> None:
        assert relative_coboundary_generators(F(2, 3), F(2, 3)) == [
            Theta2Eta2().operator(F(2, 3))
        ]
        at_zero = relative_coboundary_generators(0, 0)
        assert Theta2Eta1().operator(F(0)) in at_zero
        assert Theta2Eta2().operator(F(0)) in at_zero

    def test_generic_cell_is_empty(self) -> None:
        assert relative_coboundary_generators(F(1, 3), 2) == []

    def test_no_duplicates(self) -> None:
        for lam in (F(-1, 2), F(0), F(1, 2)):
            for mu in (F(-1, 2), F(0), F(1, 2), F(1)):
                found = relative_coboundary_generators(lam, mu)
                assert len(found) == len({str(op) for op in found})


class TestLift:

    @pytest.mark.parametrize("slot", BLOCK_SLOTS)
    def test_lift_is_cocycle_in_its_slot(self, slot: str) -> None:
        lifted = lift(catalog.make("gamma-k", 1), slot)
        assert lifted.algebra is Algebra.OSP12
        assert is_cocycle(lifted)
        for g, op in lifted.items():
            blocks = psi_blocks(op)
            for other in BLOCK_SLOTS:
                if other != slot:
                    assert not getattr(blocks, other), f"{g.value}: {other} nonzero"

    def test_lift_diagonal(self) -> None:
        lifted = lift(catalog.make("gamma-diag", F(1, 2)), "a22")
        assert (lifted.source_weight, lifted.target_weight) == (0, 0)
        assert is_cocycle(lifted)

    def test_lift_rejects_osp22_cochain(self) -> None:
        with pytest.raises(ValueError, match="osp12"):
            lift(catalog.make("upsilon-diag", 0), "a11")

    def test_lift_rejects_unknown_slot(self) -> None:
        with pytest.raises(ValueError, match="Unknown block slot"):
            lift(catalog.make("gamma-diag", 0), "a13")
