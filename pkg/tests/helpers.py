"""Shared oracles and corpus generators for the supercohom tests.

The oracles recompute things the library does in a different way (explicit
Grassmann reordering, repeated single derivations, commutators of fields
applied twice) so that tests compare two independent routes.
"""

import random
from fractions import Fraction

from supercohom.contact import ContactField, field_apply
from supercohom.operators import SuperDiffOp
from supercohom.superfield import (
    T1,
    T2,
    T12,
    Parity,
    SuperFunction,
    eta_bar,
    partial_x,
)

_MASK_LETTERS = {0: (), T1: (1,), T2: (2,), T12: (1, 2)}
_LETTERS_MASK = {v: k for k, v in _MASK_LETTERS.items()}


def grassmann_product(F: SuperFunction, G: SuperFunction) -> SuperFunction:
    """Product computed by concatenating theta words and bubble-sorting them.

    Each adjacent swap of two distinct thetas costs a sign; a repeated theta
    kills the term.
    """
    terms = []
    for ma, na, ca in F.terms():
        for mb, nb, cb in G.terms():
            word = list(_MASK_LETTERS[ma] + _MASK_LETTERS[mb])
            if len(set(word)) < len(word):
                continue
            sign = 1
            for i in range(len(word)):
                for j in range(len(word) - 1 - i):
                    if word[j] > word[j + 1]:
                        word[j], word[j + 1] = word[j + 1], word[j]
                        sign = -sign
            terms.append((_LETTERS_MASK[tuple(word)], na + nb, sign * ca * cb))
    return SuperFunction.from_terms(terms)


def field_commutator(F: SuperFunction, G: SuperFunction, T: SuperFunction) -> SuperFunction:
    """[X_F, X_G](T) = X_F X_G T - (-1)^{|F||G|} X_G X_F T, for homogeneous F, G."""
    XF, XG = ContactField(F), ContactField(G)
    sign = -1 if (F.parity is Parity.ODD and G.parity is Parity.ODD) else 1
    return field_apply(XF, field_apply(XG, T)) - field_apply(XG, field_apply(XF, T)) * sign


def apply_word(coefficient: SuperFunction, l: int, m: int, j: int,
               G: SuperFunction) -> SuperFunction:
    """coefficient * eta_bar_1^l eta_bar_2^m d_x^j (G) by repeated single derivations."""
    value = G
    for _ in range(j):
        value = partial_x(value)
    for _ in range(m):
        value = eta_bar(value, 2)
    for _ in range(l):
        value = eta_bar(value, 1)
    return coefficient * value


def random_superfunction(
    rng: random.Random,
    degree: int = 3,
    parity: Parity | None = None,
    theta2_free: bool = False,
    spread: int = 4,
    theta_free: bool = False,
) -> SuperFunction:
    """Random polynomial superfunction with small integer coefficients."""
    masks = [0, T1, T2, T12]
    if theta_free:
        masks = [0]
    elif theta2_free:
        masks = [0, T1]
    if parity is Parity.EVEN:
        masks = [m for m in masks if m in (0, T12)]
    elif parity is Parity.ODD:
        masks = [m for m in masks if m in (T1, T2)]
    terms = [
        (mask, n, rng.randint(-spread, spread))
        for mask in masks
        for n in range(degree + 1)
    ]
    return SuperFunction.from_terms(terms)


def random_operator(
    rng: random.Random,
    lam: Fraction,
    mu: Fraction,
    half_order: int = 3,
    degree: int = 2,
    theta2_free: bool = False,
    density: float = 0.3,
) -> SuperDiffOp:
    """Random normal-form operator with a sparse set of monomials."""
    terms = {}
    for j in range(half_order // 2 + 1):
        for e1 in (0, 1):
            for e2 in ((0,) if theta2_free else (0, 1)):
                if 2 * j + e1 + e2 > half_order:
                    continue
                masks = (0, T1) if theta2_free else (0, T1, T2, T12)
                pieces = [
                    (mask, n, rng.randint(-3, 3))
                    for mask in masks
                    for n in range(degree + 1)
                    if rng.random() < density
                ]
                if pieces:
                    terms[e1, e2, j] = SuperFunction.from_terms(pieces)
    return SuperDiffOp.build(terms, lam, mu)


def homogeneous_part(op: SuperDiffOp, parity: Parity) -> SuperDiffOp:
    return op.homogeneous_parts().get(parity, SuperDiffOp.zero(op.source_weight,
                                                               op.target_weight, op.shift))


def half_grid(lo: int, hi: int) -> list[Fraction]:
    """lo, lo + 1/2, ..., hi."""
    return [Fraction(n, 2) for n in range(2 * lo, 2 * hi + 1)]
