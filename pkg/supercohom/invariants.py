"""Invariant bilinear differential operators h (x) F_lambda -> F_mu.

The h-slot is finite dimensional, so a bilinear map is stored as one linear
operator per basis element of h.  Invariance then becomes an identity between
operators: for every generator X and basis element h,

    X . A_h - (-1)^{|A||X|} A_{X.h} = 0,

where X . A_h is the module action on operators.  Taking an ansatz with
unknown constant coefficients turns this into a homogeneous linear system
whose exact nullspace is the space of invariant maps.

Three h-slots are supported:

- ``h0``: span{x, 1} as densities of weight -1/2, acted on by sl(2);
- ``h1``: the sl(2)-invariant line spanned by t1, seen as weight-0 densities;
- ``h_full``: span{t1, x, 1} of weight -1/2, acted on by osp(1|2).
"""

from __future__ import annotations

import dataclasses
import enum
import functools
import logging
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from supercohom.contact import Algebra, Density, GeneratorId, Variables, lie_derivative
from supercohom.linalg import nullspace, rank
from supercohom.operators import (
    HALF,
    MonomialKey,
    SuperDiffOp,
    from_monomials,
    module_action,
)
from supercohom.superfield import (
    ONE,
    T1,
    THETA1,
    X,
    Parity,
    ScalarLike,
    SuperFunction,
    as_scalar,
    format_scalar,
)

logger = logging.getLogger(__name__)


class HSource(enum.Enum):
    H0 = "h0"
    H1 = "h1"
    H_FULL = "h_full"

    @property
    def basis(self) -> tuple[tuple[str, SuperFunction], ...]:
        return _H_BASES[self]

    @property
    def weight(self) -> Fraction:
        return Fraction(0) if self is HSource.H1 else -HALF

    @property
    def algebra(self) -> Algebra:
        return Algebra.OSP12 if self is HSource.H_FULL else Algebra.SL2

    @classmethod
    def parse(cls, value: HSource | str) -> HSource:
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise ValueError(f"Unknown h source {value!r}; expected h0, h1 or h_full") from None


_H_BASES = {
    HSource.H0: (("x", X), ("1", ONE)),
    HSource.H1: (("1", ONE),),
    HSource.H_FULL: (("t1", THETA1), ("x", X), ("1", ONE)),
}


class Gap(enum.Enum):
    """mu - lambda = k - 1/2 (``half``) or k (``whole``)."""

    HALF = "half"
    WHOLE = "whole"

    def target(self, lam: Fraction, k: int) -> Fraction:
        return lam + k - (HALF if self is Gap.HALF else 0)

    @classmethod
    def parse(cls, value: Gap | str) -> Gap:
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise ValueError(f"Unknown gap {value!r}; expected half or whole") from None


def default_gap(source: HSource) -> Gap:
    return Gap.WHOLE if source is HSource.H1 else Gap.HALF


def check_pair(algebra: Algebra | str, source: HSource | str) -> None:
    algebra, source = Algebra.parse(algebra), HSource.parse(source)
    if source.algebra is not algebra:
        raise ValueError(
            f"h source {source.value} is not an {algebra.value}-module; "
            f"use it with {source.algebra.value}"
        )


# -- bilinear operators -----------------------------------------------------

UnknownKey = tuple  # (name, e1, e2, j, mask, n)


@dataclasses.dataclass(frozen=True, slots=True)
class BilinearOp:
    """A(h, f) = sum over basis elements b of h_b * A_b(f)."""

    algebra: Algebra
    source_h: HSource
    lam: Fraction
    mu: Fraction
    components: tuple[tuple[str, SuperDiffOp], ...]
    parity: Parity = Parity.EVEN

    @classmethod
    def build(
        cls,
        components: dict[str, SuperDiffOp],
        algebra: Algebra | str,
        source_h: HSource | str,
        lam: ScalarLike,
        mu: ScalarLike,
        parity: Parity = Parity.EVEN,
    ) -> BilinearOp:
        algebra, source_h = Algebra.parse(algebra), HSource.parse(source_h)
        lam, mu = as_scalar(lam), as_scalar(mu)
        names = [name for name, _ in source_h.basis]
        unknown = set(components) - set(names)
        if unknown:
            raise ValueError(
                f"Components {sorted(unknown)} are not basis elements of {source_h.value}"
            )
        items = tuple(
            (name, components.get(name) or SuperDiffOp.zero(lam, mu)) for name in names
        )
        return cls(algebra, source_h, lam, mu, items, parity)

    def component(self, name: str) -> SuperDiffOp:
        for n, op in self.components:
            if n == name:
                return op
        raise KeyError(name)

    def __bool__(self) -> bool:
        return any(op for _, op in self.components)

    def __call__(self, h: SuperFunction, f: SuperFunction) -> SuperFunction:
        total = SuperFunction()
        rest = h
        for name, body in self.source_h.basis:
            (mask, n, _), = body.terms()
            c = h.coefficient(mask, n)
            if c:
                total = total + self.component(name)(f) * c
                rest = rest - body * c
        if rest:
            raise ValueError(f"{h} is not in {self.source_h.value}")
        return total

    def as_vector(self) -> dict[UnknownKey, Fraction]:
        return {(name,) + key: c for name, op in self.components for key, c in op.monomials()}

    def to_json(self) -> dict[str, Any]:
        return {
            "algebra": self.algebra.value,
            "source": self.source_h.value,
            "lambda": format_scalar(self.lam),
            "mu": format_scalar(self.mu),
            "parity": self.parity.name.lower(),
            "components": {name: op.to_json() for name, op in self.components},
        }

    def __str__(self) -> str:
        return "; ".join(f"A[{name}] = {op}" for name, op in self.components)


@functools.lru_cache(maxsize=None)
def _h_action(
    algebra: Algebra, source: HSource
) -> dict[tuple[GeneratorId, str], dict[str, Fraction]]:
    """X.h expanded in the basis of the h-slot, for every generator X."""
    table = {}
    for g in algebra.generators:
        for name, body in source.basis:
            image = lie_derivative(g.field, Density(body, source.weight, Variables.ONE_THETA)).body
            coords = {}
            rest = image
            for other, other_body in source.basis:
                (mask, n, _), = other_body.terms()
                c = image.coefficient(mask, n)
                if c:
                    coords[other] = c
                    rest = rest - other_body * c
            if rest:
                raise RuntimeError(f"{g.value} maps {name} outside {source.value}: {image}")
            table[g, name] = coords
    return table


def invariance_defects(op: BilinearOp) -> dict[tuple[GeneratorId, str], SuperDiffOp]:
    """Nonzero values of X . A_h - (-1)^{|A||X|} A_{X.h}."""
    action = _h_action(op.algebra, op.source_h)
    a_odd = op.parity is Parity.ODD
    out = {}
    for g in op.algebra.generators:
        sign = -1 if (a_odd and g.parity is Parity.ODD) else 1
        for name, A in op.components:
            defect = module_action(g.field, A, op.algebra.native_variables)
            for other, c in action[g, name].items():
                defect = defect - op.component(other) * (sign * c)
            if defect:
                out[g, name] = defect
    return out


def is_invariant(op: BilinearOp) -> bool:
    return not invariance_defects(op)


# -- classification ---------------------------------------------------------


def _ansatz(algebra: Algebra, source: HSource, k: int, parity: Parity) -> list[UnknownKey]:
    """Monomials x^n t^S eta1^e d^j with n <= 1, j <= k, of the requested parity."""
    masks = (0, T1) if algebra is Algebra.OSP12 else (0,)
    etas = (0, 1) if algebra is Algebra.OSP12 else (0,)
    keys = []
    for name, body in source.basis:
        h_parity = int(body.parity)
        for j in range(k + 1):
            for e1 in etas:
                for mask in masks:
                    if (bin(mask).count("1") + e1 + h_parity) % 2 != int(parity):
                        continue
                    for n in (0, 1):
                        keys.append((name, e1, 0, j, mask, n))
    return keys


def _from_vector(vector, algebra, source, lam, mu, parity) -> BilinearOp:
    grouped: dict[str, list] = {}
    for (name, *key), c in vector.items():
        grouped.setdefault(name, []).append((tuple(key), c))
    components = {name: from_monomials(items, lam, mu) for name, items in grouped.items()}
    return BilinearOp.build(components, algebra, source, lam, mu, parity)


def _solve(algebra: Algebra, source: HSource, lam: Fraction, mu: Fraction, k: int,
           parity: Parity) -> list[BilinearOp]:
    unknowns = _ansatz(algebra, source, k, parity)
    action = _h_action(algebra, source)
    rows: dict[tuple, dict[UnknownKey, Fraction]] = {}

    def add(g: GeneratorId, name: str, op: SuperDiffOp, u: UnknownKey) -> None:
        for key, c in op.monomials():
            row = rows.setdefault((g.index, name, key), {})
            row[u] = row.get(u, 0) + c

    for u in unknowns:
        name, key = u[0], u[1:]
        M = from_monomials([(key, Fraction(1))], lam, mu)
        for g in algebra.generators:
            sign = -1 if (parity is Parity.ODD and g.parity is Parity.ODD) else 1
            add(g, name, module_action(g.field, M, algebra.native_variables), u)
            for h, _ in source.basis:
                c = action[g, h].get(name)
                if c:
                    add(g, h, M * (-sign * c), u)
    logger.debug(
        "classify %s/%s lambda=%s k=%d %s: %d unknowns, %d equations",
        algebra.value, source.value, format_scalar(lam), k, parity.name.lower(),
        len(unknowns), len(rows),
    )
    basis = nullspace(unknowns, [rows[r] for r in sorted(rows)])
    return [_from_vector(v, algebra, source, lam, mu, parity) for v in basis]


def constraint_value(algebra: Algebra | str, source_h: HSource | str, gap: Gap | str,
                     lam: ScalarLike, k: int) -> Fraction:
    """The polynomial whose zero set is claimed to carry invariant maps."""
    algebra, source, gap = Algebra.parse(algebra), HSource.parse(source_h), Gap.parse(gap)
    lam = as_scalar(lam)
    t = 2 * lam + k
    if algebra is Algebra.SL2 and source is HSource.H0 and gap is Gap.HALF:
        return k * (k - 1) * (t - 1) * (t - 2)
    if algebra is Algebra.SL2 and source is HSource.H1 and gap is Gap.WHOLE:
        return k * (t - 1)
    if algebra is Algebra.OSP12 and source is HSource.H_FULL:
        if gap is Gap.HALF:
            return k * (k - 1) * (t - 1)
        return k * t * (t - 1)
    raise ValueError(
        f"No constraint is known for {algebra.value}/{source.value} with a {gap.value} gap"
    )


@dataclasses.dataclass(frozen=True, slots=True)
class ClassificationResult:
    """All invariant maps of one (lambda, k) cell, even ones first."""

    algebra: Algebra
    source_h: HSource
    gap: Gap
    lam: Fraction
    k: int
    mu: Fraction
    solution_basis: tuple[BilinearOp, ...]
    constraint: Optional[Fraction]

    @property
    def dimension(self) -> int:
        return len(self.solution_basis)

    @property
    def agrees(self) -> Optional[bool]:
        """Whether solutions exist exactly when the constraint vanishes."""
        if self.constraint is None:
            return None
        return (self.dimension > 0) == (self.constraint == 0)

    def to_json(self) -> dict[str, Any]:
        return {
            "algebra": self.algebra.value,
            "source": self.source_h.value,
            "gap": self.gap.value,
            "lambda": format_scalar(self.lam),
            "mu": format_scalar(self.mu),
            "k": self.k,
            "dimension": self.dimension,
            "constraint": None if self.constraint is None else format_scalar(self.constraint),
            "basis": [op.to_json() for op in self.solution_basis],
        }


def classify(algebra: Algebra | str, source_h: HSource | str, lam: ScalarLike, k: int,
             *, gap: Gap | str | None = None) -> ClassificationResult:
    """Exact basis of the invariant maps h (x) F_lambda -> F_mu with mu fixed by *gap*.

    The gap defaults to ``whole`` for h1 and ``half`` otherwise.
    """
    algebra, source = Algebra.parse(algebra), HSource.parse(source_h)
    check_pair(algebra, source)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    gap = default_gap(source) if gap is None else Gap.parse(gap)
    lam = as_scalar(lam)
    mu = gap.target(lam, k)
    basis = []
    for parity in (Parity.EVEN, Parity.ODD):
        basis += _solve(algebra, source, lam, mu, k, parity)
    try:
        constraint = constraint_value(algebra, source, gap, lam, k)
    except ValueError:
        constraint = None
    return ClassificationResult(algebra, source, gap, lam, k, mu, tuple(basis), constraint)


def _word(coeff: SuperFunction | ScalarLike, e1: int, j: int, lam, mu) -> SuperDiffOp:
    if j < 0:
        return SuperDiffOp.zero(lam, mu)
    if not isinstance(coeff, SuperFunction):
        coeff = SuperFunction.constant(coeff)
    return SuperDiffOp.build({(e1, 0, j): coeff}, lam, mu)


def closed_form(algebra: Algebra | str, source_h: HSource | str, gap: Gap | str,
                lam: ScalarLike, k: int) -> BilinearOp:
    """The closed-form invariant map of the cell, before checking the constraint."""
    algebra, source, gap = Algebra.parse(algebra), HSource.parse(source_h), Gap.parse(gap)
    lam = as_scalar(lam)
    mu = gap.target(lam, k)
    t = 2 * lam + k

    def w(coeff, e1, j):
        return _word(coeff, e1, j, lam, mu)

    if algebra is Algebra.SL2 and source is HSource.H0 and gap is Gap.HALF:
        comps = {"x": w(X, 0, k) + w(k * (t - 1), 0, k - 1), "1": w(1, 0, k)}
        return BilinearOp.build(comps, algebra, source, lam, mu)
    if algebra is Algebra.SL2 and source is HSource.H1 and gap is Gap.WHOLE:
        return BilinearOp.build({"1": w(1, 0, k)}, algebra, source, lam, mu)
    if algebra is Algebra.OSP12 and source is HSource.H_FULL and gap is Gap.HALF:
        comps = {
            "t1": w(THETA1, 0, k) + w(k, 1, k - 1),
            "x": w(X, 0, k) + w(k * (t - 1), 0, k - 1) + w(THETA1 * k, 1, k - 1),
            "1": w(1, 0, k),
        }
        return BilinearOp.build(comps, algebra, source, lam, mu)
    if algebra is Algebra.OSP12 and source is HSource.H_FULL:
        comps = {
            "t1": w(-THETA1, 1, k) + w(t, 0, k),
            "x": w(X, 1, k) + w(THETA1 * -t, 0, k) + w(t * k, 1, k - 1),
            "1": w(1, 1, k),
        }
        return BilinearOp.build(comps, algebra, source, lam, mu, Parity.ODD)
    raise ValueError(
        f"No closed form is known for {algebra.value}/{source.value} with a {gap.value} gap"
    )


def check_closed_form(result: ClassificationResult) -> bool:
    """True iff the closed-form map lies in the computed solution space."""
    if not result.solution_basis:
        return False
    expected = closed_form(result.algebra, result.source_h, result.gap, result.lam, result.k)
    vectors = [op.as_vector() for op in result.solution_basis]
    return bool(expected) and rank(vectors + [expected.as_vector()]) == rank(vectors)


# -- scans ------------------------------------------------------------------


@dataclasses.dataclass(frozen=True, slots=True)
class ScanRow:
    lam: Fraction
    k: int
    mu: Fraction
    dimension: int
    constraint: Optional[Fraction]
    agrees: Optional[bool]
    closed_form_ok: Optional[bool] = None

    def to_json(self) -> dict[str, Any]:
        return {
            "lambda": format_scalar(self.lam),
            "k": self.k,
            "mu": format_scalar(self.mu),
            "dimension": self.dimension,
            "constraint": None if self.constraint is None else format_scalar(self.constraint),
            "agrees": self.agrees,
            "closed_form": self.closed_form_ok,
        }


def _build_scan_row(result: ClassificationResult) -> ScanRow:
    closed = check_closed_form(result) if result.solution_basis else None
    if result.agrees is False:
        logger.warning(
            "%s/%s lambda=%s k=%d: dimension %d but constraint %s",
            result.algebra.value, result.source_h.value, format_scalar(result.lam), result.k,
            result.dimension, format_scalar(result.constraint),
        )
    return ScanRow(result.lam, result.k, result.mu, result.dimension, result.constraint,
                   result.agrees, closed)


def scan_constraint_variety(
    algebra: Algebra | str,
    source_h: HSource | str,
    lambda_grid: Iterable[ScalarLike],
    k_max: int,
    *,
    gap: Gap | str | None = None,
) -> list[ScanRow]:
    """Classify every (lambda, k) with k <= k_max and compare with the constraint.

    Disagreements are reported in the rows (and logged), never raised.
    """
    rows = []
    for lam in lambda_grid:
        for k in range(k_max + 1):
            rows.append(_build_scan_row(classify(algebra, source_h, lam, k, gap=gap)))
    return rows


def disagreements(rows: Sequence[ScanRow]) -> list[ScanRow]:
    return [r for r in rows if r.agrees is False or r.closed_form_ok is False]


# -- parity decomposition ---------------------------------------------------


def _theta1_blocks(
    A: SuperDiffOp, lam: Fraction, mu: Fraction
) -> dict[tuple[int, int], SuperDiffOp]:
    """Blocks of a t2-free operator for f = f0 + t1 f1 and output g0 + t1 g1.

    Keys are (input part, output part); f1 and g1 carry weights shifted by 1/2.
    """
    weights = {
        (0, 0): (lam, mu), (0, 1): (lam, mu + HALF),
        (1, 0): (lam + HALF, mu), (1, 1): (lam + HALF, mu + HALF),
    }
    acc: dict[tuple[int, int], list[tuple[MonomialKey, Fraction]]] = {b: [] for b in weights}
    for (e1, e2, j, mask, n), c in A.monomials():
        if e2:
            raise ValueError("Only t2-free operators split into t1-blocks")
        plain = mask == 0
        if e1 == 0:
            if plain:
                acc[0, 0].append(((0, 0, j, 0, n), c))
                acc[1, 1].append(((0, 0, j, 0, n), c))
            else:
                acc[0, 1].append(((0, 0, j, 0, n), c))
        elif plain:
            # eta1 f0^(j) = -t1 f0^(j+1), eta1 (t1 f1^(j)) = f1^(j)
            acc[0, 1].append(((0, 0, j + 1, 0, n), -c))
            acc[1, 0].append(((0, 0, j, 0, n), c))
        else:
            acc[1, 1].append(((0, 0, j, 0, n), c))
    return {b: from_monomials(items, *weights[b]) for b, items in acc.items()}


def sl2_blocks(op: BilinearOp) -> dict[tuple[str, int, int], BilinearOp]:
    """Split an osp(1|2)-invariant map into its sl(2) pieces.

    With h = h0 + h1 and F^1 = F ⊕ Pi(F) on both sides, A becomes eight maps
    keyed (h part, input part, output part); each one is sl(2)-invariant.
    """
    if op.source_h is not HSource.H_FULL:
        raise ValueError("Only h_full maps have an sl2 block decomposition")
    split = {name: _theta1_blocks(A, op.lam, op.mu) for name, A in op.components}
    out = {}
    for i, o in ((0, 0), (0, 1), (1, 0), (1, 1)):
        lam = op.lam + i * HALF
        mu = op.mu + o * HALF
        h0 = {"x": split["x"][i, o], "1": split["1"][i, o]}
        out["h0", i, o] = BilinearOp.build(h0, Algebra.SL2, HSource.H0, lam, mu)
        out["h1", i, o] = BilinearOp.build(
            {"1": split["t1"][i, o]}, Algebra.SL2, HSource.H1, lam, mu
        )
    return out


__all__ = [
    "HSource",
    "Gap",
    "BilinearOp",
    "ClassificationResult",
    "ScanRow",
    "invariance_defects",
    "is_invariant",
    "check_pair",
    "classify",
    "constraint_value",
    "closed_form",
    "check_closed_form",
    "scan_constraint_variety",
    "disagreements",
    "sl2_blocks",
]
