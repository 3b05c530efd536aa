"""Exact sparse linear algebra over the rationals.

Two tools live here:

* :class:`LinearSystem` -- Gauss-Jordan elimination of a system M u = b
  whose rows remember which input equations they were combined from.  A
  consistent system yields a :class:`Solution` (particular solution plus
  nullspace basis); an inconsistent one yields an
  :class:`InconsistencyCertificate`, a rational combination y of the input
  equations with y^T M = 0 and y^T b != 0, which anyone can re-check.
* :class:`EchelonBasis` -- an incremental row echelon form used to compute
  ranks of large sparse families of vectors.

Vectors are plain dicts mapping hashable labels to Fractions; missing
labels are zero.
"""

from __future__ import annotations

import dataclasses
import logging
from fractions import Fraction
from typing import Dict, Hashable, Iterable, Mapping, Optional, Sequence

from supercohom.superfield import format_scalar

logger = logging.getLogger(__name__)

Vector = Dict[Hashable, Fraction]


def _axpy(target: dict, row: Mapping, factor: Fraction) -> None:
    """target += factor * row, dropping entries that cancel."""
    for key, value in row.items():
        new = target.get(key, 0) + factor * value
        if new:
            target[key] = new
        else:
            target.pop(key, None)


def clean(vector: Mapping[Hashable, Fraction | int]) -> Vector:
    """Copy of *vector* with exact Fractions and no zero entries."""
    return {k: Fraction(v) for k, v in vector.items() if v}


# -- results ----------------------------------------------------------------


@dataclasses.dataclass(frozen=True, slots=True)
class Solution:
    """General solution particular + span(nullspace) of a consistent system."""

    particular: Vector
    nullspace: tuple[Vector, ...]

    @property
    def is_unique(self) -> bool:
        return not self.nullspace

    def __bool__(self) -> bool:
        return True


@dataclasses.dataclass(frozen=True, slots=True)
class InconsistencyCertificate:
    """Rational combination of equations reducing to 0 = residual, residual != 0.

    ``combination`` maps equation index to its multiplier.
    """

    combination: Vector
    residual: Fraction

    def verify(self, system: LinearSystem) -> bool:
        """Re-check y^T M = 0 and y^T b = residual != 0 from the raw equations."""
        lhs: dict = {}
        rhs = Fraction(0)
        for index, y in self.combination.items():
            coeffs, b = system.equations[index]
            _axpy(lhs, coeffs, y)
            rhs += y * b
        return not lhs and rhs == self.residual and rhs != 0

    @property
    def size(self) -> int:
        return len(self.combination)

    def to_json(self) -> dict:
        return {
            "equations_combined": self.size,
            "residual": format_scalar(self.residual),
        }

    def __bool__(self) -> bool:
        return False


# -- Gauss-Jordan with provenance --------------------------------------------


class LinearSystem:
    """Exact linear system over a fixed, ordered list of unknowns.

    Pivots are taken at the earliest unknown (in declaration order) that
    survives reduction, so results are deterministic.
    """

    def __init__(self, unknowns: Sequence[Hashable]) -> None:
        self.unknowns: tuple[Hashable, ...] = tuple(unknowns)
        self._position: dict[Hashable, int] = {u: i for i, u in enumerate(self.unknowns)}
        if len(self._position) != len(self.unknowns):
            raise ValueError("Unknown labels must be distinct")
        self.equations: list[tuple[Vector, Fraction]] = []

    def add_equation(
        self, coeffs: Mapping[Hashable, Fraction | int], rhs: Fraction | int = 0
    ) -> int:
        """Append sum(coeffs[u] * u) = rhs and return its index."""
        row = clean(coeffs)
        for key in row:
            if key not in self._position:
                raise ValueError(f"Equation mentions undeclared unknown {key!r}")
        self.equations.append((row, Fraction(rhs)))
        return len(self.equations) - 1

    def add_equations(self, rows: Iterable[tuple[Mapping, Fraction | int]]) -> None:
        for coeffs, rhs in rows:
            self.add_equation(coeffs, rhs)

    def __len__(self) -> int:
        return len(self.equations)

    def solve(self) -> Solution | InconsistencyCertificate:
        # Each pivot row is (coeffs, rhs, provenance); rows are kept fully
        # reduced against every other pivot.
        pivots: dict[int, tuple[dict, Fraction, dict]] = {}
        for index, (coeffs, rhs) in enumerate(self.equations):
            row = {self._position[k]: v for k, v in coeffs.items()}
            b = rhs
            prov: dict = {index: Fraction(1)}
            for col in sorted(c for c in row if c in pivots):
                factor = row.get(col)
                if not factor:
                    continue
                p_row, p_b, p_prov = pivots[col]
                _axpy(row, p_row, -factor)
                b -= factor * p_b
                _axpy(prov, p_prov, -factor)
            if not row:
                if b:
                    logger.debug(
                        "inconsistent after %d/%d equations, combination of %d",
                        index + 1, len(self.equations), len(prov),
                    )
                    return InconsistencyCertificate(
                        combination={k: v for k, v in prov.items()}, residual=b
                    )
                continue
            col = min(row)
            scale = 1 / row[col]
            row = {c: v * scale for c, v in row.items()}
            b *= scale
            prov = {e: v * scale for e, v in prov.items()}
            for other, (o_row, o_b, o_prov) in pivots.items():
                factor = o_row.get(col)
                if factor:
                    _axpy(o_row, row, -factor)
                    _axpy(o_prov, prov, -factor)
                    pivots[other] = (o_row, o_b - factor * b, o_prov)
            pivots[col] = (row, b, prov)

        particular = {self.unknowns[c]: b for c, (_, b, _) in pivots.items() if b}
        free = [c for c in range(len(self.unknowns)) if c not in pivots]
        nullspace = []
        for f in free:
            vec: Vector = {self.unknowns[f]: Fraction(1)}
            for c, (row, _, _) in pivots.items():
                if f in row:
                    vec[self.unknowns[c]] = -row[f]
            nullspace.append(vec)
        logger.debug(
            "solved %d equations in %d unknowns: rank %d, nullity %d",
            len(self.equations), len(self.unknowns), len(pivots), len(nullspace),
        )
        return Solution(particular=particular, nullspace=tuple(nullspace))


def nullspace(
    unknowns: Sequence[Hashable], rows: Iterable[Mapping[Hashable, Fraction | int]]
) -> tuple[Vector, ...]:
    """Basis of the solutions of the homogeneous system given by *rows*."""
    system = LinearSystem(unknowns)
    for row in rows:
        system.add_equation(row, 0)
    result = system.solve()
    assert isinstance(result, Solution)
    return result.nullspace


# -- incremental echelon form -------------------------------------------------


class EchelonBasis:
    """Row echelon form grown one vector at a time.

    Each stored row has its smallest key (in first-seen order) as pivot with
    coefficient 1.  Only the rank and membership are needed, so rows are
    not back-reduced.
    """

    def __init__(self) -> None:
        self._order: dict[Hashable, int] = {}
        self._rows: dict[int, dict[int, Fraction]] = {}

    def _encode(self, vector: Mapping[Hashable, Fraction]) -> dict[int, Fraction]:
        out = {}
        for key, value in vector.items():
            if not value:
                continue
            idx = self._order.get(key)
            if idx is None:
                idx = self._order[key] = len(self._order)
            out[idx] = Fraction(value)
        return out

    def _reduce(self, row: dict[int, Fraction]) -> dict[int, Fraction]:
        while row:
            col = min(row)
            pivot = self._rows.get(col)
            if pivot is None:
                return row
            _axpy(row, pivot, -row[col])
        return row

    def add(self, vector: Mapping[Hashable, Fraction]) -> bool:
        """Insert *vector*; return True if it was independent of the basis."""
        row = self._reduce(self._encode(vector))
        if not row:
            return False
        col = min(row)
        scale = 1 / row[col]
        self._rows[col] = {c: v * scale for c, v in row.items()}
        return True

    def extend(self, vectors: Iterable[Mapping[Hashable, Fraction]]) -> int:
        """Insert every vector and return how many were independent."""
        return sum(1 for v in vectors if self.add(v))

    def contains(self, vector: Mapping[Hashable, Fraction]) -> bool:
        if any(v and k not in self._order for k, v in vector.items()):
            return False
        return not self._reduce(self._encode(vector))

    @property
    def rank(self) -> int:
        return len(self._rows)


def rank(vectors: Iterable[Mapping[Hashable, Fraction]]) -> int:
    basis = EchelonBasis()
    basis.extend(vectors)
    return basis.rank


__all__ = [
    "Vector",
    "clean",
    "Solution",
    "InconsistencyCertificate",
    "LinearSystem",
    "nullspace",
    "EchelonBasis",
    "rank",
]
