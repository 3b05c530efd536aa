"""1-cocycles of osp(1|2) on operators between one-theta densities.

These families only involve t1, so every value is t2-free.  ``lift`` places
such a cocycle in one block of the decomposition of D^2_{lambda,mu} and
carries it back to an osp(1|2)-cocycle on two-theta densities.
"""

from __future__ import annotations

from fractions import Fraction

from ..cohomology import Cochain1, pi_twist
from ..contact import Algebra, Variables
from ..family import CatalogEntry, FormulaFamily, ParameterKind
from ..operators import HALF, Blocks, SuperDiffOp, psi_transport
from ..superfield import SuperFunction, eta_bar, partial_x, require_parity


class GammaDiagonal(FormulaFamily):
    """X_G -> G' on D^1_{lambda,lambda}."""

    name = "gamma-diag"
    algebra = Algebra.OSP12
    summary = "X_G -> G' (osp(1|2), one theta)"
    source = "osp(1|2) diagonal class"

    def weights(self, parameter: Fraction) -> tuple[Fraction, Fraction]:
        return parameter, parameter

    def summands(self, G: SuperFunction, parameter: Fraction) -> list[SuperDiffOp]:
        return [SuperDiffOp.multiplication(partial_x(G), parameter)]


class _GammaK(FormulaFamily):
    algebra = Algebra.OSP12
    parameter_kind = ParameterKind.K

    def weights(self, parameter: Fraction) -> tuple[Fraction, Fraction]:
        return (1 - parameter) / 2, parameter / 2


class GammaK(_GammaK):
    """Odd cocycle X_G -> (-1)^|G| eta1^2(G) eta1^{2k-1}."""

    name = "gamma-k"
    summary = "X_G -> (-1)^|G| eta1^2(G) eta1^(2k-1)"
    source = "osp(1|2) off-diagonal class, first generator"

    def summands(self, G: SuperFunction, parameter: Fraction) -> list[SuperDiffOp]:
        k = int(parameter)
        lam, mu = self.weights(parameter)
        s = require_parity(G, "generator").sign
        coeff = eta_bar(eta_bar(G, 1), 1) * s
        return [SuperDiffOp.from_word(coeff, 2 * k - 1, 0, 0, lam, mu)]


class GammaKTilde(_GammaK):
    name = "gamma-k-tilde"
    summary = "X_G -> (-1)^|G| (k-1) eta1^4(G) eta1^(2k-3) + eta1^3(G) eta1^(2k-2)"
    source = "osp(1|2) off-diagonal class, second generator"

    def summands(self, G: SuperFunction, parameter: Fraction) -> list[SuperDiffOp]:
        k = int(parameter)
        lam, mu = self.weights(parameter)
        s = require_parity(G, "generator").sign
        third = eta_bar(eta_bar(eta_bar(G, 1), 1), 1)
        terms = []
        if k >= 2:
            fourth = eta_bar(third, 1)
            terms.append(SuperDiffOp.from_word(fourth * (s * (k - 1)), 2 * k - 3, 0, 0, lam, mu))
        terms.append(SuperDiffOp.from_word(third, 2 * k - 2, 0, 0, lam, mu))
        return terms


# -- lifting through the block decomposition --------------------------------

BLOCK_SLOTS = ("a11", "a22", "a12", "a21")

# (d lambda, d mu) from the block's own weights to those of D^2
_SLOT_OFFSETS = {
    "a11": (Fraction(0), Fraction(0)),
    "a22": (-HALF, -HALF),
    "a12": (Fraction(0), -HALF),
    "a21": (-HALF, Fraction(0)),
}


def lift(cocycle: CatalogEntry | Cochain1, slot: str) -> Cochain1:
    """Embed a one-theta osp(1|2)-cochain as block *slot* of an operator on F^2.

    Off-diagonal slots change parity, so the cochain is Pi-twisted first.
    The result is an osp(1|2)-cochain on D^2 whose block decomposition is
    zero outside *slot*.
    """
    Y = cocycle.cochain if isinstance(cocycle, CatalogEntry) else cocycle
    if slot not in _SLOT_OFFSETS:
        raise ValueError(f"Unknown block slot {slot!r}; expected one of {', '.join(BLOCK_SLOTS)}")
    if Y.algebra is not Algebra.OSP12 or Y.variables is not Variables.ONE_THETA:
        raise ValueError("Only t2-free osp12 cochains can be lifted")
    if slot in ("a12", "a21"):
        Y = pi_twist(Y)
    dl, dm = _SLOT_OFFSETS[slot]
    lam, mu = Y.source_weight + dl, Y.target_weight + dm
    values = {g: psi_transport(Blocks.single(slot, op, lam, mu)) for g, op in Y.values}
    return Cochain1.build(values, lam, mu, algebra=Algebra.OSP12, variables=Variables.TWO_THETA)


__all__ = [
    "GammaDiagonal",
    "GammaK",
    "GammaKTilde",
    "BLOCK_SLOTS",
    "lift",
]
