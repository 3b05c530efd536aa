"""osp(1|2)-invariant operators whose coboundaries span the trivial relative classes.

For each of these operators A, delta(A) vanishes on osp(1|2), so delta(A)
is a relative cocycle that is trivial in H^1(osp(2|2), osp(1|2)).
"""

from __future__ import annotations

from fractions import Fraction

from ..family import CoboundaryFamily, ParameterKind
from ..operators import HALF, SuperDiffOp, partial_theta2_operator
from ..superfield import ONE, THETA2


class Partial2(CoboundaryFamily):
    """d/dt2 : F_lambda -> F_{lambda+1/2}."""

    name = "cob-d2"
    summary = "d2 on D_{lambda, lambda+1/2} (odd)"
    source = "odd generator at mu = lambda + 1/2"

    def weights(self, parameter: Fraction) -> tuple[Fraction, Fraction]:
        return parameter, parameter + HALF

    def operator(self, parameter: Fraction) -> SuperDiffOp:
        return partial_theta2_operator(*self.weights(parameter))


class Theta2(CoboundaryFamily):
    name = "cob-t2"
    summary = "multiplication by t2 on D_{lambda, lambda-1/2} (odd)"
    source = "odd generator at mu = lambda - 1/2"

    def weights(self, parameter: Fraction) -> tuple[Fraction, Fraction]:
        return parameter, parameter - HALF

    def operator(self, parameter: Fraction) -> SuperDiffOp:
        return SuperDiffOp.multiplication(THETA2, *self.weights(parameter))


class EtaPlusK(CoboundaryFamily):
    """(eta1 + t2 eta1 eta2) d^{k-1} at ((1-k)/2, k/2)."""

    name = "cob-eta1-k"
    parameter_kind = ParameterKind.K
    summary = "(eta1 + t2 eta1 eta2) d^(k-1) on D_{(1-k)/2, k/2} (odd)"
    source = "odd generator at ((1-k)/2, k/2)"

    def weights(self, parameter: Fraction) -> tuple[Fraction, Fraction]:
        return (1 - parameter) / 2, parameter / 2

    def operator(self, parameter: Fraction) -> SuperDiffOp:
        j = int(parameter) - 1
        return SuperDiffOp.build(
            {(1, 0, j): ONE, (1, 1, j): THETA2}, *self.weights(parameter)
        )


class ThetaEtaK(CoboundaryFamily):
    name = "cob-t2-eta12-k"
    parameter_kind = ParameterKind.K
    summary = "t2 eta1 eta2 d^(k-1) on D_{-k/2, (k-1)/2} (odd)"
    source = "odd generator at (-k/2, (k-1)/2)"

    def weights(self, parameter: Fraction) -> tuple[Fraction, Fraction]:
        return -parameter / 2, (parameter - 1) / 2

    def operator(self, parameter: Fraction) -> SuperDiffOp:
        j = int(parameter) - 1
        return SuperDiffOp.build({(1, 1, j): THETA2}, *self.weights(parameter))


class EtaPartial2K(CoboundaryFamily):
    """eta1 d2 d^{k-1} = eta1 eta2 d^{k-1} - t2 eta1 d^k."""

    name = "cob-eta1-d2-k"
    parameter_kind = ParameterKind.K
    summary = "eta1 d2 d^(k-1) on D_{-k/2, k/2} (even)"
    source = "even generator at (-k/2, k/2)"

    def weights(self, parameter: Fraction) -> tuple[Fraction, Fraction]:
        return -parameter / 2, parameter / 2

    def operator(self, parameter: Fraction) -> SuperDiffOp:
        j = int(parameter) - 1
        return SuperDiffOp.build(
            {(1, 1, j): ONE, (1, 0, j + 1): -THETA2}, *self.weights(parameter)
        )


class Theta2Eta2(CoboundaryFamily):
    name = "cob-t2-eta2"
    summary = "t2 eta2 on D_{lambda, lambda} (even)"
    source = "even generator on the diagonal"

    def weights(self, parameter: Fraction) -> tuple[Fraction, Fraction]:
        return parameter, parameter

    def operator(self, parameter: Fraction) -> SuperDiffOp:
        return SuperDiffOp.build({(0, 1, 0): THETA2}, parameter)


class Theta2Eta1(CoboundaryFamily):
    """Only invariant at lambda = mu = 0."""

    name = "cob-t2-eta1"
    summary = "t2 eta1 on D_{0,0} (even)"
    source = "even generator at lambda = mu = 0"

    def _check(self, value: Fraction) -> None:
        if value != 0:
            raise ValueError(f"{self.name} is only defined at lambda = 0")

    @property
    def parameter_range(self) -> str:
        return "lambda = 0"

    def weights(self, parameter: Fraction) -> tuple[Fraction, Fraction]:
        return parameter, parameter

    def operator(self, parameter: Fraction) -> SuperDiffOp:
        return SuperDiffOp.build({(1, 0, 0): THETA2}, parameter)


def _k_of(value: Fraction) -> int | None:
    return int(value) if value.denominator == 1 and value >= 1 else None


def relative_coboundary_generators(lam, mu) -> list[SuperDiffOp]:
    """Operators A on D_{lambda,mu} with delta(A) relative, as listed per cell.

    The list is deduplicated; d2^k vanishes for k >= 2, so d2 only appears
    where mu - lambda = 1/2.
    """
    lam, mu = Fraction(lam), Fraction(mu)
    found: list[SuperDiffOp] = []

    def add(op: SuperDiffOp) -> None:
        if op and op not in found:
            found.append(op)

    k = _k_of(2 * mu)
    if k is not None and lam == (1 - k) / 2:
        if k == 1:
            add(Partial2().operator(lam))
        add(EtaPlusK().operator(Fraction(k)))
    k = _k_of(-2 * lam)
    if k is not None and mu == Fraction(k - 1, 2):
        if k == 1:
            add(Partial2().operator(lam))
        add(ThetaEtaK().operator(Fraction(k)))
    if mu == lam + HALF and lam not in (0, -HALF):
        add(Partial2().operator(lam))
    if mu == lam - HALF:
        add(Theta2().operator(lam))
    k = _k_of(2 * mu)
    if k is not None and lam == -mu:
        add(EtaPartial2K().operator(Fraction(k)))
    if lam == mu:
        add(Theta2Eta2().operator(lam))
        if lam == 0:
            add(Theta2Eta1().operator(lam))
    return found


__all__ = [
    "Partial2",
    "Theta2",
    "EtaPlusK",
    "ThetaEtaK",
    "EtaPartial2K",
    "Theta2Eta2",
    "Theta2Eta1",
    "relative_coboundary_generators",
]
