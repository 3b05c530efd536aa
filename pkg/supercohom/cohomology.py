"""Chevalley-Eilenberg cochains of osp(2|2) (or osp(1|2)) with values in operators.

A 1-cochain assigns a differential operator to every basis generator.  The
differentials in degrees 0 and 1 are

    delta A (g)       = (-1)^{|g||A|} g.A
    delta Y (g, h)    = (-1)^{|g||Y|} g.Y(h) - (-1)^{|h|(|g|+|Y|)} h.Y(g) - Y([g, h])

Cocycle tests and coboundary solves are exact.  ``h1_dimension`` computes
the first cohomology on a truncation window in the ad(X_x)-weight-0 graded
piece, which carries all of H^1.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import logging
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Optional, Sequence

from supercohom.contact import (
    SHIFTED,
    UNSHIFTED,
    Algebra,
    GeneratorId,
    ParityShiftTag,
    Variables,
    VariableSetError,
    structure_constants,
)
from supercohom.linalg import (
    EchelonBasis,
    InconsistencyCertificate,
    LinearSystem,
    Solution,
    Vector,
)
from supercohom.operators import (
    MonomialKey,
    SuperDiffOp,
    from_monomials,
    module_action,
    monomial_weight,
    pi_twist_operator,
)
from supercohom.results import H1Report
from supercohom.superfield import (
    Parity,
    ScalarLike,
    SuperFunction,
    format_scalar,
    integrate_x,
)

logger = logging.getLogger(__name__)


class NormalizationError(ValueError):
    """The X1-normalization of a cochain exceeds the configured order bound."""


_COCHAIN_ALGEBRAS = (Algebra.OSP22, Algebra.OSP12)


# -- cochains ---------------------------------------------------------------


@dataclasses.dataclass(frozen=True, slots=True)
class Cochain1:
    """Linear map from the generators of *algebra* to operators F_lambda -> F_mu."""

    source_weight: Fraction
    target_weight: Fraction
    values: tuple[tuple[GeneratorId, SuperDiffOp], ...]
    algebra: Algebra = Algebra.OSP22
    shift: ParityShiftTag = UNSHIFTED
    variables: Variables = Variables.TWO_THETA

    @classmethod
    def build(
        cls,
        values: Mapping[GeneratorId, SuperDiffOp],
        source_weight: ScalarLike,
        target_weight: ScalarLike,
        *,
        algebra: Algebra | str = Algebra.OSP22,
        shift: Optional[ParityShiftTag] = None,
        variables: Optional[Variables] = None,
    ) -> Cochain1:
        """Cochain with the given values, zero on the generators not listed.

        *variables* defaults to the algebra's native set: one theta for osp12.
        Lifted osp12 cochains acting on two-theta densities pass TWO_THETA.
        """
        algebra = Algebra.parse(algebra)
        if algebra not in _COCHAIN_ALGEBRAS:
            raise ValueError(f"Cochains are defined on osp22 or osp12, got {algebra.value}")
        variables = algebra.native_variables if variables is None else variables
        if variables is Variables.ONE_THETA and algebra is not Algebra.OSP12:
            raise VariableSetError("One-theta cochains are osp12 cochains")
        lam, mu = Fraction(source_weight), Fraction(target_weight)
        if shift is None:
            tags = {v.shift for v in values.values() if v}
            if len(tags) > 1:
                raise ValueError("Cochain values disagree on the parity shift")
            shift = tags.pop() if tags else UNSHIFTED
        items = []
        for g in algebra.generators:
            op = values.get(g)
            if op is None or not op:
                op = SuperDiffOp.zero(lam, mu, shift)
            elif (op.source_weight, op.target_weight) != (lam, mu):
                raise ValueError(
                    f"Value on {g.value} maps {format_scalar(op.source_weight)} -> "
                    f"{format_scalar(op.target_weight)}, expected "
                    f"{format_scalar(lam)} -> {format_scalar(mu)}"
                )
            elif op.shift != shift:
                raise ValueError(f"Value on {g.value} has the wrong parity shift")
            items.append((g, op))
        unknown = set(values) - set(algebra.generators)
        if any(values[g] for g in unknown):
            names = ", ".join(sorted(g.value for g in unknown))
            raise ValueError(f"Generators {names} are not in {algebra.value}")
        for g, op in items:
            if not op.fits(variables):
                raise VariableSetError(
                    f"Value on {g.value} does not act on {variables.value} densities"
                )
        return cls(lam, mu, tuple(items), algebra, shift, variables)

    @classmethod
    def from_rule(
        cls,
        rule: Callable[[SuperFunction], SuperDiffOp],
        source_weight: ScalarLike,
        target_weight: ScalarLike,
        *,
        algebra: Algebra | str = Algebra.OSP22,
        variables: Optional[Variables] = None,
    ) -> Cochain1:
        """Cochain X_G -> rule(G) over the generators of *algebra*."""
        algebra = Algebra.parse(algebra)
        values = {g: rule(g.function) for g in algebra.generators}
        return cls.build(values, source_weight, target_weight, algebra=algebra,
                         variables=variables)

    @classmethod
    def zero(cls, source_weight: ScalarLike, target_weight: ScalarLike, *,
             algebra: Algebra | str = Algebra.OSP22,
             variables: Optional[Variables] = None) -> Cochain1:
        return cls.build({}, source_weight, target_weight, algebra=algebra,
                         variables=variables)

    # -- views --

    def value(self, g: GeneratorId) -> SuperDiffOp:
        for h, op in self.values:
            if h is g:
                return op
        raise KeyError(f"{g.value} is not a generator of {self.algebra.value}")

    def __getitem__(self, g: GeneratorId) -> SuperDiffOp:
        return self.value(g)

    def items(self) -> Iterator[tuple[GeneratorId, SuperDiffOp]]:
        return iter(self.values)

    @property
    def generators(self) -> tuple[GeneratorId, ...]:
        return tuple(g for g, _ in self.values)

    @property
    def parity(self) -> Parity:
        """Parity p with parity(Y(g)) = p + parity(g); EVEN for the zero cochain."""
        seen = set()
        for g, op in self.values:
            if op:
                seen.add(op.parity + g.parity)
        if len(seen) > 1 or Parity.MIXED in seen:
            return Parity.MIXED
        return seen.pop() if seen else Parity.EVEN

    @property
    def is_theta2_free(self) -> bool:
        return all(op.is_theta2_free for _, op in self.values)

    @property
    def weight(self) -> Optional[Fraction]:
        """ad(X_x)-weight of the cochain, None if zero or inhomogeneous."""
        weights = {w for w in self._weights()}
        return weights.pop() if len(weights) == 1 else None

    def _weights(self) -> Iterator[Fraction]:
        for g, op in self.values:
            for key, _ in op.monomials():
                yield monomial_weight(key, self.source_weight, self.target_weight) - g.weight

    def __bool__(self) -> bool:
        return any(op for _, op in self.values)

    # -- linear structure --

    def _combine(self, other: Cochain1, f: Callable[[SuperDiffOp, SuperDiffOp], SuperDiffOp]):
        if (self.algebra, self.variables, self.source_weight, self.target_weight, self.shift) != (
            other.algebra, other.variables, other.source_weight, other.target_weight, other.shift
        ):
            raise ValueError("Cochains live in different spaces")
        values = {g: f(a, b) for (g, a), (_, b) in zip(self.values, other.values)}
        return Cochain1.build(values, self.source_weight, self.target_weight,
                              algebra=self.algebra, shift=self.shift,
                              variables=self.variables)

    def __add__(self, other: Cochain1) -> Cochain1:
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: Cochain1) -> Cochain1:
        return self._combine(other, lambda a, b: a - b)

    def __neg__(self) -> Cochain1:
        return self * -1

    def __mul__(self, scalar: ScalarLike) -> Cochain1:
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        values = {g: op * scalar for g, op in self.values}
        return Cochain1.build(values, self.source_weight, self.target_weight,
                              algebra=self.algebra, shift=self.shift,
                              variables=self.variables)

    __rmul__ = __mul__

    def as_vector(self) -> Vector:
        """Sparse coordinates keyed by (generator index, operator monomial)."""
        return {(g.index,) + key: c for g, op in self.values for key, c in op.monomials()}

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.value,
            "variables": self.variables.value,
            "lambda": format_scalar(self.source_weight),
            "mu": format_scalar(self.target_weight),
            "parity": self.parity.name.lower(),
            "values": {g.value: op.to_json() for g, op in self.values if op},
        }


def pi_twist(Y: Cochain1) -> Cochain1:
    """The cochain g -> Pi(sigma o Y(g)); applying it twice gives Y back."""
    one_theta = Y.is_theta2_free
    values = {g: pi_twist_operator(op, one_theta=one_theta) for g, op in Y.values}
    return Cochain1.build(values, Y.source_weight, Y.target_weight,
                          algebra=Y.algebra, shift=Y.shift ^ SHIFTED, variables=Y.variables)


# -- differentials ----------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _brackets(algebra: Algebra) -> dict:
    return structure_constants(algebra)


def delta0(A: SuperDiffOp, *, algebra: Algebra | str = Algebra.OSP22,
           variables: Optional[Variables] = None) -> Cochain1:
    """g -> (-1)^{|g||A|} g.A, with the action on densities in *variables*.

    *variables* defaults to the algebra's native set.
    """
    algebra = Algebra.parse(algebra)
    variables = algebra.native_variables if variables is None else variables
    a_odd = A.parity is Parity.ODD
    if A.parity is Parity.MIXED:
        raise ValueError(f"delta0 needs a parity-homogeneous operator, got {A}")
    values = {}
    for g in algebra.generators:
        action = module_action(g.field, A, variables)
        values[g] = -action if (a_odd and g.parity is Parity.ODD) else action
    return Cochain1.build(values, A.source_weight, A.target_weight,
                          algebra=algebra, shift=A.shift, variables=variables)


def _pairs(generators: Sequence[GeneratorId]) -> Iterator[tuple[GeneratorId, GeneratorId]]:
    return itertools.combinations_with_replacement(generators, 2)


def _delta1_value(Y: Cochain1, g: GeneratorId, h: GeneratorId, acts) -> SuperDiffOp:
    y_odd = Y.parity is Parity.ODD
    g_odd = g.parity is Parity.ODD
    h_odd = h.parity is Parity.ODD
    total = SuperDiffOp.zero(Y.source_weight, Y.target_weight, Y.shift)
    gy = acts(g, h)
    if gy:
        total = total + (-gy if (g_odd and y_odd) else gy)
    hy = acts(h, g)
    if hy:
        total = total - (-hy if (h_odd and (g_odd != y_odd)) else hy)
    for k, c in _brackets(Y.algebra)[g, h].items():
        value = Y.value(k)
        if value:
            total = total - value * c
    return total


def _action_cache(Y: Cochain1):
    cache: dict = {}

    def acts(g: GeneratorId, h: GeneratorId) -> SuperDiffOp:
        value = Y.value(h)
        if not value:
            return value
        if (g, h) not in cache:
            cache[g, h] = module_action(g.field, value, Y.variables)
        return cache[g, h]

    return acts


def delta1(Y: Cochain1) -> dict[tuple[GeneratorId, GeneratorId], SuperDiffOp]:
    """The 2-cochain delta Y on every unordered pair g <= h (diagonal included)."""
    if Y.parity is Parity.MIXED:
        raise ValueError("delta1 needs a parity-homogeneous cochain")
    acts = _action_cache(Y)
    return {(g, h): _delta1_value(Y, g, h, acts) for g, h in _pairs(Y.generators)}


@dataclasses.dataclass(frozen=True, slots=True)
class CocycleCheck:
    """Outcome of a cocycle test; truthy iff it passed."""

    ok: bool
    witness: Optional[tuple[GeneratorId, GeneratorId]] = None
    value: Optional[SuperDiffOp] = None

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        out: dict = {"ok": self.ok}
        if self.witness is not None:
            out["witness"] = [g.value for g in self.witness]
        return out


def is_cocycle(Y: Cochain1) -> CocycleCheck:
    """Exact test of delta Y = 0; reports the first failing pair."""
    if Y.parity is Parity.MIXED:
        raise ValueError("is_cocycle needs a parity-homogeneous cochain")
    acts = _action_cache(Y)
    for g, h in _pairs(Y.generators):
        value = _delta1_value(Y, g, h, acts)
        if value:
            logger.debug("delta1 nonzero on (%s, %s)", g.value, h.value)
            return CocycleCheck(False, (g, h), value)
    return CocycleCheck(True)


def is_relative_cochain(Y: Cochain1) -> bool:
    """Zero on osp(1|2) and X_G.Y(H) - (-1)^{|G||Y|} Y([X_G, H]) = 0 for H in Pi(h)."""
    if Y.algebra is not Algebra.OSP22:
        raise ValueError("Relative cochains are osp22 cochains")
    if any(Y.value(g) for g in Algebra.OSP12.generators):
        return False
    y_odd = Y.parity is Parity.ODD
    brackets = _brackets(Algebra.OSP22)
    for G in Algebra.OSP12.generators:
        for H in Algebra.PI_H.generators:
            total = module_action(G.field, Y.value(H))
            sign = -1 if (y_odd and G.parity is Parity.ODD) else 1
            for k, c in brackets[G, H].items():
                total = total - Y.value(k) * (c * sign)
            if total:
                return False
    return True


# -- coboundary solving -----------------------------------------------------


def normalize_translation(
    Y: Cochain1, *, order_bound: Optional[int] = None
) -> tuple[SuperDiffOp, Cochain1]:
    """Return (A0, Y - delta A0) with (Y - delta A0)(X1) = 0.

    X1.A is the coefficient-wise x-derivative of A, so A0 integrates Y(X1).

    Raises:
        NormalizationError: If A0 is longer than *order_bound* (in half-orders).
    """
    target = Y.value(GeneratorId.X1)
    A0 = SuperDiffOp.build(
        {k: integrate_x(c) for k, c in target.terms},
        Y.source_weight, Y.target_weight, Y.shift,
    )
    if order_bound is not None and A0.half_order > order_bound:
        raise NormalizationError(
            f"Normalizing Y(X1) needs an operator of half-order {A0.half_order}, "
            f"bound is {order_bound}"
        )
    if not A0:
        return A0, Y
    return A0, Y - delta0(A0, algebra=Y.algebra, variables=Y.variables)


def _candidate_keys(
    weights: Iterable[Fraction],
    lam: Fraction,
    mu: Fraction,
    parity: Parity,
    shift: ParityShiftTag,
    theta2_free: bool,
) -> list[MonomialKey]:
    """Constant monomials t^S eta^e d^j of the given ad(X_x)-weights and total parity."""
    keys = []
    for w in sorted(set(weights)):
        for mask in range(4):
            if theta2_free and mask & 0b10:
                continue
            for e1, e2 in itertools.product((0, 1), repeat=2):
                if theta2_free and e2:
                    continue
                twice_j = bin(mask).count("1") - e1 - e2 + 2 * (mu - lam) - 2 * w
                if twice_j < 0 or twice_j.denominator != 1 or twice_j.numerator % 2:
                    continue
                total = (bin(mask).count("1") + e1 + e2 + shift.shifted) % 2
                if total != int(parity):
                    continue
                keys.append((e1, e2, int(twice_j) // 2, mask, 0))
    return sorted(set(keys), key=lambda k: (k[2], k[0], k[1], k[3]))


@dataclasses.dataclass(frozen=True, slots=True, eq=False)
class CoboundaryResult:
    """Either an operator A with delta A = Y or a certificate that none exists.

    ``normalization`` is the operator subtracted first to make Y(X1) = 0; the
    certificate refers to equations of ``system``, which are posed for the
    normalized cochain.
    """

    cochain: Cochain1
    normalization: SuperDiffOp
    operator: Optional[SuperDiffOp]
    certificate: Optional[InconsistencyCertificate]
    system: LinearSystem

    @property
    def is_coboundary(self) -> bool:
        return self.operator is not None

    def __bool__(self) -> bool:
        return self.is_coboundary

    def verify(self) -> bool:
        """Independently re-check the outcome."""
        if self.operator is not None:
            Y = self.cochain
            return delta0(self.operator, algebra=Y.algebra, variables=Y.variables) == Y
        assert self.certificate is not None
        return self.certificate.verify(self.system)

    def to_json(self) -> dict:
        out: dict = {"coboundary": self.is_coboundary}
        if self.operator is not None:
            out["operator"] = self.operator.to_json()
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def coboundary_solve(Y: Cochain1, *, order_bound: Optional[int] = None) -> CoboundaryResult:
    """Decide exactly whether Y = delta A.

    After normalizing Y(X1) = 0 any primitive can be taken with constant
    coefficients; its ad(X_x)-weights are those of the normalized cochain, which
    leaves finitely many candidate monomials.
    """
    parity = Y.parity
    if parity is Parity.MIXED:
        raise ValueError("coboundary_solve needs a parity-homogeneous cochain")
    A0, Yn = normalize_translation(Y, order_bound=order_bound)
    lam, mu = Y.source_weight, Y.target_weight
    one_theta = Y.variables is Variables.ONE_THETA
    keys = _candidate_keys(Yn._weights(), lam, mu, parity, Y.shift, one_theta)
    columns = []
    for key in keys:
        op = from_monomials([(key, Fraction(1))], lam, mu, Y.shift)
        columns.append(delta0(op, algebra=Y.algebra, variables=Y.variables).as_vector())
    logger.debug("coboundary solve: %d candidate monomials", len(keys))

    system = LinearSystem(keys)
    rows: dict = {}
    for key, column in zip(keys, columns):
        for entry, c in column.items():
            rows.setdefault(entry, {})[key] = c
    target = Yn.as_vector()
    for entry in sorted(set(rows) | set(target)):
        system.add_equation(rows.get(entry, {}), target.get(entry, 0))

    outcome = system.solve()
    if isinstance(outcome, Solution):
        A1 = from_monomials(outcome.particular.items(), lam, mu, Y.shift)
        return CoboundaryResult(Y, A0, A0 + A1, None, system)
    return CoboundaryResult(Y, A0, None, outcome, system)


# -- truncated cohomology ---------------------------------------------------


def _monomial_keys(
    order: int, degree: int, *, theta2_free: bool = False
) -> Iterator[MonomialKey]:
    """All x^n t^S eta^e d^j with 2j+|e| <= order and n <= degree, in report order."""
    for j in range(order // 2 + 1):
        for e1, e2 in itertools.product((0, 1), repeat=2):
            if 2 * j + e1 + e2 > order or (theta2_free and e2):
                continue
            for mask in range(4):
                if theta2_free and mask & 0b10:
                    continue
                for n in range(degree + 1):
                    yield (e1, e2, j, mask, n)


def _key_parity(key: MonomialKey) -> int:
    e1, e2, _, mask, _ = key
    return (bin(mask).count("1") + e1 + e2) % 2


def _cochain_generators(algebra: Algebra, relative: bool) -> tuple[GeneratorId, ...]:
    if relative:
        if algebra is not Algebra.OSP22:
            raise ValueError("Relative cochains are only defined for osp22")
        return Algebra.PI_H.generators
    return algebra.generators


def cochain_basis(
    lam: ScalarLike,
    mu: ScalarLike,
    *,
    relative: bool = False,
    order: int,
    degree: int,
    weight: Optional[ScalarLike] = None,
    parity: Optional[Parity] = None,
    algebra: Algebra | str = Algebra.OSP22,
) -> list[Cochain1]:
    """Monomial cochains (one generator, one operator monomial) in a fixed order."""
    algebra = Algebra.parse(algebra)
    lam, mu = Fraction(lam), Fraction(mu)
    theta2_free = algebra.native_variables is Variables.ONE_THETA
    basis = []
    for g in _cochain_generators(algebra, relative):
        for key in _monomial_keys(order, degree, theta2_free=theta2_free):
            if weight is not None and monomial_weight(key, lam, mu) - g.weight != weight:
                continue
            if parity is not None and (_key_parity(key) + int(g.parity)) % 2 != int(parity):
                continue
            op = from_monomials([(key, Fraction(1))], lam, mu)
            basis.append(Cochain1.build({g: op}, lam, mu, algebra=algebra))
    return basis


def default_order(lam: ScalarLike, mu: ScalarLike) -> int:
    return int(2 * (abs(Fraction(mu) - Fraction(lam)) + 3))


DEFAULT_DEGREE = 4


def _delta1_vector(Y: Cochain1) -> Vector:
    vec: Vector = {}
    for (g, h), op in delta1(Y).items():
        for key, c in op.monomials():
            vec[(g.index, h.index) + key] = c
    return vec


def _z1(lam, mu, relative, order, degree, algebra, parities) -> int:
    total = 0
    for p in parities:
        basis = cochain_basis(lam, mu, relative=relative, order=order, degree=degree,
                              weight=0, parity=p, algebra=algebra)
        echelon = EchelonBasis()
        for Y in basis:
            echelon.add(_delta1_vector(Y))
        logger.debug("parity %s: %d cochains, delta1 rank %d", p.name, len(basis), echelon.rank)
        total += len(basis) - echelon.rank
    return total


def _coboundary_vectors(
    lam, mu, order, degree, algebra, parity, shift: ParityShiftTag = UNSHIFTED,
    variables: Optional[Variables] = None,
) -> Iterator[Vector]:
    """delta A for weight-0 operator monomials A of the enlarged window."""
    variables = algebra.native_variables if variables is None else variables
    theta2_free = variables is Variables.ONE_THETA
    big_order = max(order, int(2 + 2 * abs(mu - lam))) + 2
    for key in _monomial_keys(big_order, degree + 2, theta2_free=theta2_free):
        if monomial_weight(key, lam, mu) != 0:
            continue
        if (_key_parity(key) + shift.shifted) % 2 != int(parity):
            continue
        A = from_monomials([(key, Fraction(1))], lam, mu, shift)
        yield delta0(A, algebra=algebra, variables=variables).as_vector()


def _outside(entry: tuple, order: int, degree: int, relative: bool) -> bool:
    g_index, e1, e2, j, _, n = entry
    if 2 * j + e1 + e2 > order or n > degree:
        return True
    return relative and list(GeneratorId)[g_index] in Algebra.OSP12.generators


def _b1(lam, mu, relative, order, degree, algebra, parities) -> int:
    total = 0
    for p in parities:
        full, outside = EchelonBasis(), EchelonBasis()
        for vec in _coboundary_vectors(lam, mu, order, degree, algebra, p):
            full.add(vec)
            outside.add({k: c for k, c in vec.items() if _outside(k, order, degree, relative)})
        logger.debug("parity %s: coboundary rank %d, leaking rank %d",
                     p.name, full.rank, outside.rank)
        total += full.rank - outside.rank
    return total


def _parities(parity: Optional[Parity]) -> tuple[Parity, ...]:
    if parity is None:
        return (Parity.EVEN, Parity.ODD)
    if parity is Parity.MIXED:
        raise ValueError("parity filter must be EVEN or ODD")
    return (parity,)


def _h1_counts(lam, mu, relative, order, degree, algebra, parity) -> tuple[int, int]:
    parities = _parities(parity)
    z1 = _z1(lam, mu, relative, order, degree, algebra, parities)
    b1 = _b1(lam, mu, relative, order, degree, algebra, parities)
    return z1, b1


def h1_dimension(
    lam: ScalarLike,
    mu: ScalarLike,
    *,
    relative: bool = False,
    order: Optional[int] = None,
    degree: Optional[int] = None,
    algebra: Algebra | str = Algebra.OSP22,
    parity: Optional[Parity] = None,
    check_plateau: bool = True,
) -> H1Report:
    """dim H^1 on operators of half-order <= order and coefficient degree <= degree.

    Only the ad(X_x)-weight-0 cochains are enumerated: a cocycle of nonzero
    weight w satisfies w Y = delta(Y(X_x)), and relative cocycles vanish on
    X_x, so nothing is lost.  Coboundaries are generated from a wider window
    and kept when they land inside the truncation.
    """
    algebra = Algebra.parse(algebra)
    lam, mu = Fraction(lam), Fraction(mu)
    order = default_order(lam, mu) if order is None else order
    degree = DEFAULT_DEGREE if degree is None else degree
    if order < 1 or degree < 1:
        raise ValueError(f"Truncation bounds must be >= 1, got order={order}, degree={degree}")
    _cochain_generators(algebra, relative)

    z1, b1 = _h1_counts(lam, mu, relative, order, degree, algebra, parity)
    plateau = False
    if check_plateau:
        z1_next, b1_next = _h1_counts(lam, mu, relative, order + 1, degree + 1, algebra, parity)
        plateau = (z1_next - b1_next) == (z1 - b1)
    logger.info(
        "H1(%s%s; D_{%s,%s}) = %d (z1=%d, b1=%d, order=%d, degree=%d, plateau=%s)",
        algebra.value, ", osp12" if relative else "", format_scalar(lam), format_scalar(mu),
        z1 - b1, z1, b1, order, degree, plateau,
    )
    return H1Report(
        lam=lam, mu=mu, relative=relative, z1_dim=z1, b1_dim=b1,
        order=order, degree=degree, plateau=plateau, algebra=algebra.value,
    )


def quotient_rank(
    cocycles: Sequence[Cochain1],
    *,
    order: Optional[int] = None,
    degree: Optional[int] = None,
) -> int:
    """Dimension of the span of the classes of *cocycles* modulo coboundaries.

    All cochains must share weights, algebra, variables and parity.  Only weight-0
    coboundaries are generated, so the cocycles should have weight 0.
    """
    if not cocycles:
        return 0
    first = cocycles[0]
    lam, mu, algebra = first.source_weight, first.target_weight, first.algebra
    parity = first.parity
    order = default_order(lam, mu) if order is None else order
    degree = DEFAULT_DEGREE if degree is None else degree
    echelon = EchelonBasis()
    if parity is not Parity.MIXED:
        for vec in _coboundary_vectors(lam, mu, order, degree, algebra, parity, first.shift,
                                       first.variables):
            echelon.add(vec)
    base = echelon.rank
    for Y in cocycles:
        echelon.add(Y.as_vector())
    return echelon.rank - base


__all__ = [
    "NormalizationError",
    "Cochain1",
    "pi_twist",
    "delta0",
    "delta1",
    "CocycleCheck",
    "is_cocycle",
    "is_relative_cochain",
    "normalize_translation",
    "CoboundaryResult",
    "coboundary_solve",
    "cochain_basis",
    "default_order",
    "DEFAULT_DEGREE",
    "h1_dimension",
    "quotient_rank",
]
