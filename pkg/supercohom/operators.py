"""Differential operators between weighted densities on R^{1|2}.

An operator A: F_lambda -> F_mu is stored in the normal form

    A = sum a_{e1,e2,j} eta_bar_1^{e1} eta_bar_2^{e2} d_x^j,   e1, e2 in {0, 1},

with superfunction coefficients acting by left multiplication.  Higher
powers of eta_bar are folded with eta_bar_i^2 = -d_x the moment they
appear, so two operators are equal iff their term tables are equal.

An optional parity-shift tag records that the target is Pi(F_mu); it
flips the operator's parity and composes by exclusive or.

The second half of the module implements the osp(1|2) decomposition
F^2_lambda = F^1_lambda + Pi(F^1_{lambda+1/2}), F = F1 + F2*t2, and the
transport of 2x2 blocks of t2-free operators to a single operator on
two-theta densities and back.
"""

from __future__ import annotations

import dataclasses
import logging
from fractions import Fraction
from typing import Iterator, Mapping, Optional

from supercohom.contact import (
    SHIFTED,
    UNSHIFTED,
    ContactField,
    Density,
    ParityShiftTag,
    Variables,
    VariableSetError,
    check_acts_on,
)
from supercohom.superfield import (
    THETA1,
    THETA2,
    Parity,
    ScalarLike,
    SuperFunction,
    eta_bar,
    format_scalar,
    partial_x,
    require_parity,
    sf_mul,
    sigma,
    theta2_split,
)

logger = logging.getLogger(__name__)

TermKey = tuple[int, int, int]
# (e1, e2, j, theta mask, x exponent): one operator monomial x^n t^S eta^e d^j
MonomialKey = tuple[int, int, int, int, int]

HALF = Fraction(1, 2)


class WeightMismatchError(ValueError):
    """Density or operator weights do not chain."""


def _sort_key(key: TermKey) -> tuple[int, int, int]:
    e1, e2, j = key
    return (j, e1, e2)


# -- normal form ------------------------------------------------------------


@dataclasses.dataclass(frozen=True, slots=True)
class SuperDiffOp:
    """Normal-form operator F_lambda -> F_mu (or Pi(F_mu) when shifted)."""

    source_weight: Fraction
    target_weight: Fraction
    terms: tuple[tuple[TermKey, SuperFunction], ...] = ()
    shift: ParityShiftTag = UNSHIFTED

    def __post_init__(self) -> None:
        object.__setattr__(self, "source_weight", Fraction(self.source_weight))
        object.__setattr__(self, "target_weight", Fraction(self.target_weight))

    # -- builders --

    @classmethod
    def build(
        cls,
        terms: Mapping[TermKey, SuperFunction],
        source_weight: ScalarLike,
        target_weight: Optional[ScalarLike] = None,
        shift: ParityShiftTag = UNSHIFTED,
    ) -> SuperDiffOp:
        if target_weight is None:
            target_weight = source_weight
        items = []
        for key in sorted(terms, key=_sort_key):
            e1, e2, j = key
            if e1 not in (0, 1) or e2 not in (0, 1) or j < 0:
                raise ValueError(f"Term key {key} is not in normal form")
            if terms[key]:
                items.append((key, terms[key]))
        return cls(Fraction(source_weight), Fraction(target_weight), tuple(items), shift)

    @classmethod
    def zero(cls, source_weight: ScalarLike, target_weight: Optional[ScalarLike] = None,
             shift: ParityShiftTag = UNSHIFTED) -> SuperDiffOp:
        return cls.build({}, source_weight, target_weight, shift)

    @classmethod
    def multiplication(cls, F: SuperFunction, source_weight: ScalarLike,
                       target_weight: Optional[ScalarLike] = None) -> SuperDiffOp:
        return cls.build({(0, 0, 0): F}, source_weight, target_weight)

    @classmethod
    def identity(cls, source_weight: ScalarLike,
                 target_weight: Optional[ScalarLike] = None) -> SuperDiffOp:
        return cls.multiplication(SuperFunction.constant(1), source_weight, target_weight)

    @classmethod
    def from_word(
        cls,
        coefficient: SuperFunction | ScalarLike,
        l: int,
        m: int,
        j: int,
        source_weight: ScalarLike,
        target_weight: Optional[ScalarLike] = None,
    ) -> SuperDiffOp:
        """coefficient * eta_bar_1^l eta_bar_2^m d_x^j folded to normal form."""
        if min(l, m, j) < 0:
            raise ValueError(f"Exponents must be >= 0, got ({l}, {m}, {j})")
        if not isinstance(coefficient, SuperFunction):
            coefficient = SuperFunction.constant(coefficient)
        folds = l // 2 + m // 2
        sign = -1 if folds % 2 else 1
        key = (l % 2, m % 2, j + folds)
        return cls.build({key: coefficient * sign}, source_weight, target_weight)

    # -- views --

    @property
    def term_map(self) -> dict[TermKey, SuperFunction]:
        return dict(self.terms)

    def coefficient(self, key: TermKey) -> SuperFunction:
        for k, c in self.terms:
            if k == key:
                return c
        return SuperFunction()

    def monomials(self) -> Iterator[tuple[MonomialKey, Fraction]]:
        for (e1, e2, j), coeff in self.terms:
            for mask, n, c in coeff.terms():
                yield (e1, e2, j, mask, n), c

    @property
    def parity(self) -> Parity:
        """Total parity, shift included; MIXED if the terms disagree."""
        seen = set()
        for (e1, e2, j, mask, n), _ in self.monomials():
            seen.add((bin(mask).count("1") + e1 + e2 + self.shift.shifted) % 2)
        if len(seen) > 1:
            return Parity.MIXED
        return Parity(seen.pop()) if seen else Parity.EVEN

    @property
    def half_order(self) -> int:
        """max(2j + e1 + e2); -1 for the zero operator."""
        return max((2 * j + e1 + e2 for (e1, e2, j), _ in self.terms), default=-1)

    @property
    def degree(self) -> int:
        """Largest x-degree among the coefficients; -1 for the zero operator."""
        return max((c.degree for _, c in self.terms), default=-1)

    @property
    def is_theta2_free(self) -> bool:
        return all(e2 == 0 and c.is_theta2_free for (_, e2, _), c in self.terms)

    def fits(self, variables: Variables) -> bool:
        """True when A maps densities on *variables* to densities on *variables*."""
        if variables is Variables.NO_THETA:
            return all(e1 == e2 == 0 and c.is_theta_free for (e1, e2, _), c in self.terms)
        if variables is Variables.ONE_THETA:
            return self.is_theta2_free
        return True

    @property
    def has_constant_coefficients(self) -> bool:
        return self.degree <= 0

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- linear structure --

    def _check_same_space(self, other: SuperDiffOp) -> None:
        if (self.source_weight, self.target_weight) != (other.source_weight, other.target_weight):
            raise WeightMismatchError(
                f"Cannot add operators {format_scalar(self.source_weight)}->"
                f"{format_scalar(self.target_weight)} and {format_scalar(other.source_weight)}->"
                f"{format_scalar(other.target_weight)}"
            )
        if self.shift != other.shift:
            raise ValueError("Cannot add a parity-shifted and an unshifted operator")

    def __add__(self, other: SuperDiffOp) -> SuperDiffOp:
        if not isinstance(other, SuperDiffOp):
            return NotImplemented
        self._check_same_space(other)
        acc = self.term_map
        for key, c in other.terms:
            acc[key] = acc[key] + c if key in acc else c
        return self._rebuild(acc)

    def __neg__(self) -> SuperDiffOp:
        return self._rebuild({k: -c for k, c in self.terms})

    def __sub__(self, other: SuperDiffOp) -> SuperDiffOp:
        if not isinstance(other, SuperDiffOp):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: ScalarLike) -> SuperDiffOp:
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return self._rebuild({k: c * scalar for k, c in self.terms})

    __rmul__ = __mul__

    def _rebuild(self, terms: Mapping[TermKey, SuperFunction]) -> SuperDiffOp:
        return SuperDiffOp.build(terms, self.source_weight, self.target_weight, self.shift)

    def with_weights(self, source_weight: ScalarLike,
                     target_weight: ScalarLike) -> SuperDiffOp:
        return dataclasses.replace(
            self, source_weight=Fraction(source_weight), target_weight=Fraction(target_weight)
        )

    def with_shift(self, shift: ParityShiftTag) -> SuperDiffOp:
        return dataclasses.replace(self, shift=shift)

    def pi(self) -> SuperDiffOp:
        """Pi o A: same map, target parity flipped."""
        return self.with_shift(self.shift ^ SHIFTED)

    def homogeneous_parts(self) -> dict[Parity, SuperDiffOp]:
        """Split into even and odd operators (by total parity); zero parts omitted."""
        parts: dict[int, dict[TermKey, SuperFunction]] = {0: {}, 1: {}}
        for (e1, e2, j), c in self.terms:
            base = (e1 + e2 + self.shift.shifted) % 2
            parts[base][e1, e2, j] = c.even_part()
            parts[1 - base][e1, e2, j] = c.odd_part()
        out = {}
        for p, terms in parts.items():
            op = self._rebuild(terms)
            if op:
                out[Parity(p)] = op
        return out

    # -- evaluation --

    def __call__(self, G: SuperFunction) -> SuperFunction:
        total = SuperFunction()
        for (e1, e2, j), coeff in self.terms:
            value = G
            for _ in range(j):
                value = partial_x(value)
            if e2:
                value = eta_bar(value, 2)
            if e1:
                value = eta_bar(value, 1)
            total = total + sf_mul(coeff, value)
        return total

    # -- encodings --

    def to_json(self) -> dict:
        return {
            "lambda": format_scalar(self.source_weight),
            "mu": format_scalar(self.target_weight),
            "shifted": self.shift.shifted,
            "terms": [
                {"eps1": e1, "eps2": e2, "j": j, "coeff": c.to_json()}
                for (e1, e2, j), c in self.terms
            ],
        }

    def __str__(self) -> str:
        if not self.terms:
            body = "0"
        else:
            chunks = []
            for (e1, e2, j), c in self.terms:
                word = "".join(
                    part for part, on in (("eta1 ", e1), ("eta2 ", e2)) if on
                ) + ("" if j == 0 else ("d " if j == 1 else f"d^{j} "))
                chunks.append(f"({c}) {word}".rstrip())
            body = " + ".join(chunks)
        return f"Pi({body})" if self.shift else body


# -- composition ------------------------------------------------------------


def _left_eta(i: int, key: TermKey) -> tuple[int, TermKey]:
    """eta_bar_i * (normal word) = sign * (normal word)."""
    e1, e2, j = key
    if i == 1:
        if e1 == 0:
            return 1, (1, e2, j)
        return -1, (0, e2, j + 1)
    if e1 == 0:
        if e2 == 0:
            return 1, (0, 1, j)
        return -1, (0, 0, j + 1)
    if e2 == 0:
        return -1, (1, 1, j)
    return 1, (1, 0, j + 1)


def _word_product(a: TermKey, b: TermKey) -> tuple[int, TermKey]:
    """Normal form of word(a) * word(b)."""
    sign, key = 1, b
    for _ in range(a[1]):
        s, key = _left_eta(2, key)
        sign *= s
    for _ in range(a[0]):
        s, key = _left_eta(1, key)
        sign *= s
    e1, e2, j = key
    return sign, (e1, e2, j + a[2])


def _push_through(word: TermKey, coeff: SuperFunction) -> dict[TermKey, SuperFunction]:
    """word o (multiplication by coeff) as sum of c_k * word_k."""
    current: dict[TermKey, SuperFunction] = {(0, 0, 0): coeff}
    e1, e2, j = word

    def add(acc: dict, key: TermKey, c: SuperFunction) -> None:
        if c:
            acc[key] = acc[key] + c if key in acc else c

    for _ in range(j):
        nxt: dict[TermKey, SuperFunction] = {}
        for (a1, a2, aj), c in current.items():
            add(nxt, (a1, a2, aj), partial_x(c))
            add(nxt, (a1, a2, aj + 1), c)
        current = nxt
    for i, times in ((2, e2), (1, e1)):
        for _ in range(times):
            nxt = {}
            for key, c in current.items():
                add(nxt, key, eta_bar(c, i))
                sign, new_key = _left_eta(i, key)
                add(nxt, new_key, (c.even_part() - c.odd_part()) * sign)
            current = nxt
    return current


def op_compose(A: SuperDiffOp, B: SuperDiffOp) -> SuperDiffOp:
    """A o B in normal form.

    Raises:
        WeightMismatchError: If B's target weight is not A's source weight.
    """
    if B.target_weight != A.source_weight:
        raise WeightMismatchError(
            f"Cannot compose: inner target weight {format_scalar(B.target_weight)} "
            f"!= outer source weight {format_scalar(A.source_weight)}"
        )
    acc: dict[TermKey, SuperFunction] = {}
    for wa, a in A.terms:
        for wb, b in B.terms:
            for wk, ck in _push_through(wa, b).items():
                sign, key = _word_product(wk, wb)
                term = sf_mul(a, ck) * sign
                if term:
                    acc[key] = acc[key] + term if key in acc else term
    return SuperDiffOp.build(acc, B.source_weight, A.target_weight, A.shift ^ B.shift)


def op_apply(A: SuperDiffOp, D: Density) -> Density:
    """Apply A to a density of weight A.source_weight.

    Raises:
        WeightMismatchError: If the density has the wrong weight.
        VariableSetError: If a t2-dependent operator meets a one-theta density.
    """
    if D.weight != A.source_weight:
        raise WeightMismatchError(
            f"Operator expects weight {format_scalar(A.source_weight)}, "
            f"got density of weight {format_scalar(D.weight)}"
        )
    if not A.fits(D.variables):
        raise VariableSetError(f"Operator does not act on {D.variables.value} densities")
    return Density(A(D.body), A.target_weight, D.variables, D.shift ^ A.shift)


# -- module structure -------------------------------------------------------


def lie_operator(X: ContactField, weight: ScalarLike,
                 variables: Variables = Variables.TWO_THETA) -> SuperDiffOp:
    """L^weight_X as an operator F_weight -> F_weight on densities in *variables*.

    On fewer odd variables the eta_bar terms of the missing thetas are
    dropped: they vanish on such densities but not in normal form.

    Raises:
        VariableSetError: If X does not preserve densities in *variables*.
    """
    check_acts_on(X, variables)
    F = X.generator
    half_sign = Fraction(-require_parity(F, "contact field generator").sign, 2)
    terms = {
        (0, 0, 1): F,
        (0, 0, 0): partial_x(F) * Fraction(weight),
    }
    if variables is not Variables.NO_THETA:
        terms[1, 0, 0] = eta_bar(F, 1) * half_sign
    if variables is Variables.TWO_THETA:
        terms[0, 1, 0] = eta_bar(F, 2) * half_sign
    return SuperDiffOp.build(terms, weight, weight)


def module_action(X: ContactField, A: SuperDiffOp,
                  variables: Variables = Variables.TWO_THETA) -> SuperDiffOp:
    """X . A = L^mu_X o A - (-1)^{|A||X|} A o L^lambda_X, per homogeneous part of A.

    Raises:
        VariableSetError: If A or X leaves the densities in *variables*.
    """
    if not A.fits(variables):
        raise VariableSetError(f"Operator does not act on {variables.value} densities: {A}")
    x_odd = require_parity(X.generator, "contact field generator") is Parity.ODD
    left = lie_operator(X, A.target_weight, variables)
    right = lie_operator(X, A.source_weight, variables)
    total = SuperDiffOp.zero(A.source_weight, A.target_weight, A.shift)
    for parity, part in A.homogeneous_parts().items():
        sign = -1 if (x_odd and parity is Parity.ODD) else 1
        total = total + op_compose(left, part) - op_compose(part, right) * sign
    return total


def monomial_weight(key: MonomialKey, source_weight: Fraction,
                    target_weight: Fraction) -> Fraction:
    """ad(X_x)-eigenvalue of x^n t^S eta^e d^j: n + |S|/2 - (2j+|e|)/2 + (mu - lambda)."""
    e1, e2, j, mask, n = key
    return (
        n + Fraction(bin(mask).count("1"), 2) - Fraction(2 * j + e1 + e2, 2)
        + (target_weight - source_weight)
    )


def weight_decompose(A: SuperDiffOp) -> dict[Fraction, SuperDiffOp]:
    """Split A into ad(X_x)-eigencomponents."""
    buckets: dict[Fraction, list] = {}
    for key, c in A.monomials():
        w = monomial_weight(key, A.source_weight, A.target_weight)
        buckets.setdefault(w, []).append((key, c))
    out = {}
    for w in sorted(buckets):
        out[w] = from_monomials(buckets[w], A.source_weight, A.target_weight, A.shift)
    return out


def weight_of(A: SuperDiffOp) -> Optional[Fraction]:
    """ad(X_x)-weight of a constant-coefficient operator.

    Returns None when A is zero or not an eigenvector.

    Raises:
        ValueError: If some coefficient depends on x.
    """
    if not A.has_constant_coefficients:
        raise ValueError(f"weight_of needs constant coefficients, got {A}")
    parts = weight_decompose(A)
    if len(parts) != 1:
        return None
    return next(iter(parts))


def from_monomials(
    items,
    source_weight: ScalarLike,
    target_weight: ScalarLike,
    shift: ParityShiftTag = UNSHIFTED,
) -> SuperDiffOp:
    """Assemble an operator from (MonomialKey, coefficient) pairs."""
    grouped: dict[TermKey, list] = {}
    for (e1, e2, j, mask, n), c in items:
        grouped.setdefault((e1, e2, j), []).append((mask, n, c))
    terms = {k: SuperFunction.from_terms(v) for k, v in grouped.items()}
    return SuperDiffOp.build(terms, source_weight, target_weight, shift)


# -- building blocks of the osp(1|2) decomposition ---------------------------


def _t(theta: SuperFunction, e1: int, e2: int, c: ScalarLike = 1) -> dict[TermKey, SuperFunction]:
    return {(e1, e2, 0): theta * c}


def partial_theta2_operator(weight: ScalarLike,
                            target_weight: Optional[ScalarLike] = None) -> SuperDiffOp:
    """d/dt2 = eta_bar_2 + t2 d_x."""
    return SuperDiffOp.build(
        {(0, 1, 0): SuperFunction.constant(1), (0, 0, 1): THETA2}, weight, target_weight
    )


def projection_odd_component(weight: ScalarLike) -> SuperDiffOp:
    """F1 + F2 t2 -> F2 t2 (this is t2 eta_bar_2)."""
    return SuperDiffOp.build(_t(THETA2, 0, 1), weight)


def projection_even_component(weight: ScalarLike) -> SuperDiffOp:
    """F1 + F2 t2 -> F1."""
    return SuperDiffOp.identity(weight) - projection_odd_component(weight)


def parity_operator(weight: ScalarLike, *, one_theta: bool = False) -> SuperDiffOp:
    """sigma(F) = (-1)^{|F|} F as (1 - 2 t1 eta_bar_1)(1 - 2 t2 eta_bar_2).

    With one_theta=True only the first factor is used; it agrees with sigma
    on t2-free functions and keeps the operator t2-free.
    """
    one = SuperDiffOp.identity(weight)
    first = one - SuperDiffOp.build(_t(THETA1, 1, 0, 2), weight)
    if one_theta:
        return first
    second = one - SuperDiffOp.build(_t(THETA2, 0, 1, 2), weight)
    return op_compose(first, second)


def right_theta2(weight: ScalarLike) -> SuperDiffOp:
    """F -> F t2, which equals t2 o sigma."""
    return op_compose(SuperDiffOp.multiplication(THETA2, weight), parity_operator(weight))


def sigma_compose(A: SuperDiffOp, *, one_theta: Optional[bool] = None) -> SuperDiffOp:
    """sigma o A; one_theta defaults to whether A is t2-free."""
    if one_theta is None:
        one_theta = A.is_theta2_free
    return op_compose(parity_operator(A.target_weight, one_theta=one_theta), A)


def pi_twist_operator(A: SuperDiffOp, *, one_theta: Optional[bool] = None) -> SuperDiffOp:
    """Pi(sigma o A); an involution."""
    return sigma_compose(A, one_theta=one_theta).pi()


# -- phi / psi --------------------------------------------------------------


def phi_split(D: Density) -> tuple[Density, Density]:
    """F alpha^lambda -> (F1 alpha^lambda, Pi(F2 alpha^{lambda+1/2})) with F = F1 + F2 t2."""
    if D.variables is not Variables.TWO_THETA:
        raise VariableSetError("phi_split needs a two-theta density")
    F1, F2 = theta2_split(D.body)
    return (
        Density(F1, D.weight, Variables.ONE_THETA, D.shift),
        Density(F2, D.weight + HALF, Variables.ONE_THETA, D.shift ^ SHIFTED),
    )


def phi_join(first: Density, second: Density) -> Density:
    """Inverse of :func:`phi_split`."""
    if second.weight != first.weight + HALF:
        raise WeightMismatchError(
            f"Second component must have weight {format_scalar(first.weight + HALF)}, "
            f"got {format_scalar(second.weight)}"
        )
    body = first.body + sf_mul(second.body, THETA2)
    return Density(body, first.weight, Variables.TWO_THETA, first.shift)


@dataclasses.dataclass(frozen=True, slots=True)
class Blocks:
    """The four t2-free blocks of an operator on two-theta densities.

    a11: F_l -> F_m, a22: F_{l+1/2} -> F_{m+1/2}, a12: F_l -> Pi F_{m+1/2},
    a21: Pi F_{l+1/2} -> F_m.
    """

    a11: SuperDiffOp
    a22: SuperDiffOp
    a12: SuperDiffOp
    a21: SuperDiffOp

    @property
    def weights(self) -> tuple[Fraction, Fraction]:
        return self.a11.source_weight, self.a11.target_weight

    def __iter__(self):
        return iter((self.a11, self.a22, self.a12, self.a21))

    @classmethod
    def single(cls, slot: str, op: SuperDiffOp, lam: ScalarLike, mu: ScalarLike) -> Blocks:
        """Blocks that are zero except in *slot* (one of a11, a22, a12, a21)."""
        lam, mu = Fraction(lam), Fraction(mu)
        zeros = {
            "a11": SuperDiffOp.zero(lam, mu),
            "a22": SuperDiffOp.zero(lam + HALF, mu + HALF),
            "a12": SuperDiffOp.zero(lam, mu + HALF, SHIFTED),
            "a21": SuperDiffOp.zero(lam + HALF, mu, SHIFTED),
        }
        if slot not in zeros:
            raise ValueError(f"Unknown block slot {slot!r}")
        zeros[slot] = op
        return cls(**zeros)


def _check_block_weights(blocks: Blocks) -> tuple[Fraction, Fraction]:
    lam, mu = blocks.weights
    expected = {
        "a11": (lam, mu),
        "a22": (lam + HALF, mu + HALF),
        "a12": (lam, mu + HALF),
        "a21": (lam + HALF, mu),
    }
    for name, (src, tgt) in expected.items():
        op = getattr(blocks, name)
        if (op.source_weight, op.target_weight) != (src, tgt):
            raise WeightMismatchError(
                f"Block {name} must map weight {format_scalar(src)} to {format_scalar(tgt)}, "
                f"got {format_scalar(op.source_weight)} -> {format_scalar(op.target_weight)}"
            )
        if not op.is_theta2_free:
            raise VariableSetError(f"Block {name} must be t2-free")
    return lam, mu


def psi_transport(blocks: Blocks) -> SuperDiffOp:
    """Single operator on F^2_lambda whose block form is *blocks*.

    Psi = a11 o P1 + a21 o sigma o d2 + t2 o sigma o a12 o P1 + a22 o P2, where
    P1, P2 project onto F1 and F2 t2.  Shift tags of the blocks are absorbed.
    """
    lam, mu = _check_block_weights(blocks)
    p1 = projection_even_component(lam)
    p2 = projection_odd_component(lam)
    a11, a22, a12, a21 = (b.with_shift(UNSHIFTED) for b in blocks)

    first = op_compose(a11, p1)
    second = op_compose(
        a21,
        op_compose(parity_operator(lam + HALF), partial_theta2_operator(lam, lam + HALF)),
    )
    t2_sigma = op_compose(
        SuperDiffOp.multiplication(THETA2, mu + HALF, mu), parity_operator(mu + HALF)
    )
    third = op_compose(t2_sigma, op_compose(a12, p1))
    fourth = op_compose(a22, p2.with_weights(lam, lam + HALF)).with_weights(lam, mu)
    return first + second + third + fourth


def _restrict_to_t2_free(A: SuperDiffOp) -> tuple[SuperDiffOp, SuperDiffOp]:
    """A(G) = P(G) + t2 Q(G) for t2-free G, with P and Q t2-free."""
    p_terms: dict[TermKey, SuperFunction] = {}
    q_terms: dict[TermKey, SuperFunction] = {}

    def add(acc: dict, key: TermKey, c: SuperFunction) -> None:
        if c:
            acc[key] = acc[key] + c if key in acc else c

    for (e1, e2, j), a in A.terms:
        if e2:
            # eta_bar_2 H = -t2 H' on t2-free H, then eta_bar_1 anticommutes with t2
            coeff = sf_mul(a, THETA2) * (-1 if e1 == 0 else 1)
            key = (e1, 0, j + 1)
        else:
            coeff, key = a, (e1, 0, j)
        c1, c2 = theta2_split(coeff)
        add(p_terms, key, c1)
        add(q_terms, key, sigma(c2))
    lam, mu = A.source_weight, A.target_weight
    return SuperDiffOp.build(p_terms, lam, mu), SuperDiffOp.build(q_terms, lam, mu)


def psi_blocks(A: SuperDiffOp) -> Blocks:
    """Inverse of :func:`psi_transport`; off-diagonal blocks come back shifted."""
    lam, mu = A.source_weight, A.target_weight
    base = A.with_shift(UNSHIFTED)
    sigma_src = parity_operator(lam + HALF, one_theta=True)
    sigma_tgt = parity_operator(mu + HALF, one_theta=True)

    p, q = _restrict_to_t2_free(base)
    a11 = p
    a12 = op_compose(sigma_tgt, q.with_weights(lam, mu + HALF))

    shifted_input = op_compose(base, SuperDiffOp.multiplication(THETA2, lam))
    p2, q2 = _restrict_to_t2_free(shifted_input)
    a21 = op_compose(p2.with_weights(lam + HALF, mu), sigma_src)
    a22 = op_compose(sigma_tgt, op_compose(q2.with_weights(lam + HALF, mu + HALF), sigma_src))
    return Blocks(a11=a11, a22=a22, a12=a12.with_shift(SHIFTED), a21=a21.with_shift(SHIFTED))


__all__ = [
    "TermKey",
    "MonomialKey",
    "WeightMismatchError",
    "SuperDiffOp",
    "op_compose",
    "op_apply",
    "lie_operator",
    "module_action",
    "monomial_weight",
    "weight_decompose",
    "weight_of",
    "from_monomials",
    "partial_theta2_operator",
    "projection_even_component",
    "projection_odd_component",
    "parity_operator",
    "right_theta2",
    "sigma_compose",
    "pi_twist_operator",
    "phi_split",
    "phi_join",
    "Blocks",
    "psi_transport",
    "psi_blocks",
]
