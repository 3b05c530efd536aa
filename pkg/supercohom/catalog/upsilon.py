"""Nontrivial even 1-cocycles of osp(2|2) on D_{lambda,mu}.

On the diagonal lambda = mu the classes are spanned by two families, off
the diagonal only the points (-k/2, k/2) carry classes, three per point.
Each summand is built from eta_bar powers of the generating function G.
"""

from __future__ import annotations

from fractions import Fraction

from ..family import FormulaFamily, ParameterKind
from ..operators import SuperDiffOp
from ..superfield import (
    THETA2,
    SuperFunction,
    eta_bar,
    partial_theta,
    partial_x,
    require_parity,
    sf_mul,
)


def _sign(G: SuperFunction) -> int:
    return require_parity(G, "generator").sign


class UpsilonDiagonal(FormulaFamily):
    """X_G -> G' on D_{lambda,lambda}."""

    name = "upsilon-diag"
    summary = "X_G -> G'"
    source = "diagonal class, first generator"

    def weights(self, parameter: Fraction) -> tuple[Fraction, Fraction]:
        return parameter, parameter

    def summands(self, G: SuperFunction, parameter: Fraction) -> list[SuperDiffOp]:
        return [SuperDiffOp.multiplication(partial_x(G), parameter)]


class UpsilonDiagonalTilde(FormulaFamily):
    """Second diagonal class; a multiplication operator at lambda = 0."""

    name = "upsilon-diag-tilde"
    summary = (
        "X_G -> 2 lambda eta1(d2 G) - (-1)^|G| (d2 G eta1 + t2 eta2 eta1(G) eta2); "
        "eta1 eta2(G) at lambda = 0"
    )
    source = "diagonal class, second generator"

    def weights(self, parameter: Fraction) -> tuple[Fraction, Fraction]:
        return parameter, parameter

    def summands(self, G: SuperFunction, parameter: Fraction) -> list[SuperDiffOp]:
        lam = parameter
        if lam == 0:
            return [SuperDiffOp.multiplication(eta_bar(eta_bar(G, 2), 1), lam)]
        d2 = partial_theta(G, 2)
        s = _sign(G)
        return [
            SuperDiffOp.multiplication(eta_bar(d2, 1) * (2 * lam), lam),
            SuperDiffOp.from_word(d2 * -s, 1, 0, 0, lam),
            SuperDiffOp.from_word(sf_mul(THETA2, eta_bar(eta_bar(G, 1), 2)) * -s, 0, 1, 0, lam),
        ]


class _AntiDiagonal(FormulaFamily):
    """Families living at (lambda, mu) = (-k/2, k/2)."""

    parameter_kind = ParameterKind.K

    def weights(self, parameter: Fraction) -> tuple[Fraction, Fraction]:
        return -parameter / 2, parameter / 2


class UpsilonK(_AntiDiagonal):
    """X_G -> G' eta1 eta2^{2k-1}."""

    name = "upsilon-k"
    summary = "X_G -> G' eta1 eta2^(2k-1)"
    source = "anti-diagonal class, first generator"

    def summands(self, G: SuperFunction, parameter: Fraction) -> list[SuperDiffOp]:
        k = int(parameter)
        lam, mu = self.weights(parameter)
        return [SuperDiffOp.from_word(partial_x(G), 1, 2 * k - 1, 0, lam, mu)]


class UpsilonKTilde(_AntiDiagonal):
    name = "upsilon-k-tilde"
    summary = (
        "X_G -> k eta1(d2 G) eta1 eta2^(2k-1) "
        "- (-1)^|G| (d2 G eta2^(2k+1) - eta1(t2 d2 G) eta1^(2k+1))"
    )
    source = "anti-diagonal class, second generator"

    def summands(self, G: SuperFunction, parameter: Fraction) -> list[SuperDiffOp]:
        k = int(parameter)
        lam, mu = self.weights(parameter)
        d2 = partial_theta(G, 2)
        s = _sign(G)
        return [
            SuperDiffOp.from_word(eta_bar(d2, 1) * k, 1, 2 * k - 1, 0, lam, mu),
            SuperDiffOp.from_word(d2 * -s, 0, 2 * k + 1, 0, lam, mu),
            SuperDiffOp.from_word(eta_bar(sf_mul(THETA2, d2), 1) * s, 2 * k + 1, 0, 0, lam, mu),
        ]


class UpsilonKBar(_AntiDiagonal):
    """Third anti-diagonal class; the G'' summand only appears for k >= 2."""

    name = "upsilon-k-bar"
    summary = (
        "X_G -> (k-1) G'' eta1 eta2^(2k-3) "
        "+ (-1)^|G| (eta2(G') eta1^(2k-1) - eta1(G') eta2^(2k-1))"
    )
    source = "anti-diagonal class, third generator"

    def summands(self, G: SuperFunction, parameter: Fraction) -> list[SuperDiffOp]:
        k = int(parameter)
        lam, mu = self.weights(parameter)
        d = partial_x(G)
        s = _sign(G)
        terms = []
        if k >= 2:
            terms.append(SuperDiffOp.from_word(partial_x(d) * (k - 1), 1, 2 * k - 3, 0, lam, mu))
        terms += [
            SuperDiffOp.from_word(eta_bar(d, 2) * s, 2 * k - 1, 0, 0, lam, mu),
            SuperDiffOp.from_word(eta_bar(d, 1) * -s, 0, 2 * k - 1, 0, lam, mu),
        ]
        return terms


__all__ = [
    "UpsilonDiagonal",
    "UpsilonDiagonalTilde",
    "UpsilonK",
    "UpsilonKTilde",
    "UpsilonKBar",
]
