"""Exact Grassmann-polynomial arithmetic on R^{1|2}.

A superfunction is F = f0 + f1*t1 + f2*t2 + f12*t1*t2 where the f's are
polynomials in the even variable x with rational coefficients and t1, t2
are the odd variables.  Monomials in the odd variables are addressed by a
bit mask (bit 0 = t1, bit 1 = t2) and are always kept in the canonical
order t1*t2.

The subalgebra of t2-free superfunctions doubles as the function algebra of
R^{1|1}.  Everything here is immutable and exact; no floats anywhere.
"""

from __future__ import annotations

import dataclasses
import enum
from fractions import Fraction
from typing import Iterator, Union

Scalar = Fraction
ScalarLike = Union[int, Fraction]

# -- scalars ----------------------------------------------------------------


def as_scalar(value: ScalarLike | str) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise ValueError(f"Expected an exact rational, got {value!r}")
    return Fraction(value)


def parse_scalar(text: str) -> Fraction:
    """Parse the "p/q" encoding (q may be omitted when it is 1).

    Raises:
        ValueError: If *text* is not an exact rational or has a zero denominator.
    """
    raw = text.strip()
    num, sep, den = raw.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"Malformed rational {text!r}, expected 'p/q'") from None
    if q == 0:
        raise ValueError(f"Zero denominator in rational {text!r}")
    return Fraction(p, q)


def format_scalar(value: Fraction) -> str:
    """Inverse of :func:`parse_scalar`."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# -- parity -----------------------------------------------------------------


class Parity(enum.IntEnum):
    EVEN = 0
    ODD = 1
    MIXED = 2

    @property
    def is_homogeneous(self) -> bool:
        return self is not Parity.MIXED

    @property
    def sign(self) -> int:
        """(-1)^{|p|} for a homogeneous parity."""
        self._require_homogeneous()
        return -1 if self is Parity.ODD else 1

    def __add__(self, other: object) -> Parity:
        if not isinstance(other, int):
            return NotImplemented
        if not isinstance(other, Parity):
            other = Parity(other % 2)
        if Parity.MIXED in (self, other):
            return Parity.MIXED
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__

    def flipped(self) -> Parity:
        return self + Parity.ODD

    def _require_homogeneous(self) -> None:
        if self is Parity.MIXED:
            raise MixedParityError("Operation requires a parity-homogeneous element")


class MixedParityError(ValueError):
    """A parity-sensitive operation received an inhomogeneous element."""


def sign_of(*parities: Parity | int) -> int:
    """(-1)^{p1*p2*...} style helper: (-1) raised to the product of parities."""
    product = 1
    for p in parities:
        if isinstance(p, Parity):
            p._require_homogeneous()
        product *= int(p) % 2
    return -1 if product else 1


# -- polynomials in x -------------------------------------------------------


@dataclasses.dataclass(frozen=True, slots=True)
class Poly:
    """Polynomial in x with exact coefficients, coeffs[n] multiplies x^n.

    Trailing zeros are never stored, so equality is structural.
    """

    coeffs: tuple[Fraction, ...] = ()

    @classmethod
    def from_coeffs(cls, coeffs) -> Poly:
        items = [Fraction(c) for c in coeffs]
        while items and items[-1] == 0:
            items.pop()
        return cls(tuple(items))

    @classmethod
    def monomial(cls, n: int, c: ScalarLike = 1) -> Poly:
        if n < 0:
            raise ValueError(f"Exponent must be >= 0, got {n}")
        return cls.from_coeffs([0] * n + [c])

    @property
    def degree(self) -> int:
        """Largest stored exponent; -1 stands for -infinity (zero polynomial)."""
        return len(self.coeffs) - 1

    def terms(self) -> Iterator[tuple[int, Fraction]]:
        for n, c in enumerate(self.coeffs):
            if c:
                yield n, c

    def coefficient(self, n: int) -> Fraction:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly.from_coeffs(out)

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly | ScalarLike) -> Poly:
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return Poly.from_coeffs(out)
        c = Fraction(other)
        if c == 0:
            return Poly()
        return Poly(tuple(a * c for a in self.coeffs))

    __rmul__ = __mul__

    def derivative(self) -> Poly:
        return Poly.from_coeffs([n * c for n, c in enumerate(self.coeffs)][1:])

    def antiderivative(self) -> Poly:
        """Antiderivative with zero constant term."""
        return Poly.from_coeffs([0] + [c / (n + 1) for n, c in enumerate(self.coeffs)])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for n, c in reversed(list(self.terms())):
            mono = "" if n == 0 else ("x" if n == 1 else f"x^{n}")
            if not mono:
                body = format_scalar(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{format_scalar(abs(c))}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for s, body in parts[1:]:
            text += f" {s} {body}"
        return text


# -- superfunctions ---------------------------------------------------------

T1, T2 = 0b01, 0b10
T12 = T1 | T2
_MASK_NAMES = {0: "1", T1: "t1", T2: "t2", T12: "t12"}
_MASK_SUFFIX = {0: "", T1: "t1", T2: "t2", T12: "t1*t2"}


def theta_product_sign(a: int, b: int) -> int:
    """Sign of theta^a * theta^b in canonical order (0 if they share a variable)."""
    if a & b:
        return 0
    return -1 if (a & T2) and (b & T1) else 1


@dataclasses.dataclass(frozen=True, slots=True)
class SuperFunction:
    """Element of the polynomial superfunctions on R^{1|2}."""

    c_1: Poly = Poly()
    c_t1: Poly = Poly()
    c_t2: Poly = Poly()
    c_t12: Poly = Poly()

    # -- builders --

    @classmethod
    def from_parts(cls, parts) -> SuperFunction:
        """Build from four polys indexed by theta mask (0, t1, t2, t12)."""
        return cls(parts[0], parts[T1], parts[T2], parts[T12])

    @classmethod
    def monomial(cls, mask: int = 0, n: int = 0, c: ScalarLike = 1) -> SuperFunction:
        parts = [Poly()] * 4
        parts[mask] = Poly.monomial(n, c)
        return cls.from_parts(parts)

    @classmethod
    def constant(cls, c: ScalarLike) -> SuperFunction:
        return cls.monomial(0, 0, c)

    @classmethod
    def x_power(cls, n: int, c: ScalarLike = 1) -> SuperFunction:
        return cls.monomial(0, n, c)

    @classmethod
    def theta(cls, mask: int, c: ScalarLike = 1) -> SuperFunction:
        return cls.monomial(mask, 0, c)

    @classmethod
    def from_terms(cls, terms) -> SuperFunction:
        """Build from an iterable of (mask, exponent, coefficient) triples."""
        acc: list[dict[int, Fraction]] = [{}, {}, {}, {}]
        for mask, n, c in terms:
            acc[mask][n] = acc[mask].get(n, Fraction(0)) + Fraction(c)
        parts = []
        for d in acc:
            top = max(d, default=-1)
            parts.append(Poly.from_coeffs([d.get(i, 0) for i in range(top + 1)]))
        return cls.from_parts(parts)

    # -- views --

    @property
    def parts(self) -> tuple[Poly, Poly, Poly, Poly]:
        return (self.c_1, self.c_t1, self.c_t2, self.c_t12)

    def terms(self) -> Iterator[tuple[int, int, Fraction]]:
        """Yield (mask, exponent, coefficient) for every nonzero monomial."""
        for mask, poly in enumerate(self.parts):
            for n, c in poly.terms():
                yield mask, n, c

    def coefficient(self, mask: int, n: int) -> Fraction:
        return self.parts[mask].coefficient(n)

    @property
    def parity(self) -> Parity:
        return parity_of(self)

    @property
    def degree(self) -> int:
        return max(p.degree for p in self.parts)

    @property
    def is_theta2_free(self) -> bool:
        return not self.c_t2 and not self.c_t12

    @property
    def is_theta_free(self) -> bool:
        return not self.c_t1 and self.is_theta2_free

    def even_part(self) -> SuperFunction:
        return SuperFunction(self.c_1, Poly(), Poly(), self.c_t12)

    def odd_part(self) -> SuperFunction:
        return SuperFunction(Poly(), self.c_t1, self.c_t2, Poly())

    def __bool__(self) -> bool:
        return any(self.parts)

    # -- arithmetic --

    def __add__(self, other: SuperFunction) -> SuperFunction:
        if not isinstance(other, SuperFunction):
            return NotImplemented
        return SuperFunction.from_parts([a + b for a, b in zip(self.parts, other.parts)])

    def __neg__(self) -> SuperFunction:
        return SuperFunction.from_parts([-a for a in self.parts])

    def __sub__(self, other: SuperFunction) -> SuperFunction:
        if not isinstance(other, SuperFunction):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: SuperFunction | ScalarLike) -> SuperFunction:
        if isinstance(other, SuperFunction):
            return sf_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return SuperFunction.from_parts([a * other for a in self.parts])
        return NotImplemented

    def __rmul__(self, other: ScalarLike) -> SuperFunction:
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    # -- encodings --

    def to_json(self) -> dict[str, str]:
        return {_MASK_NAMES[m]: str(p) for m, p in enumerate(self.parts)}

    def __str__(self) -> str:
        chunks = []
        for mask, poly in enumerate(self.parts):
            if not poly:
                continue
            suffix = _MASK_SUFFIX[mask]
            body = str(poly)
            if not suffix:
                pass
            elif len(list(poly.terms())) > 1:
                body = f"({body})*{suffix}"
            elif body in ("1", "-1"):
                body = body[:-1] + suffix
            else:
                body = f"{body}*{suffix}"
            chunks.append(body)
        return " + ".join(chunks) if chunks else "0"


ZERO = SuperFunction()
ONE = SuperFunction.constant(1)
X = SuperFunction.x_power(1)
THETA1 = SuperFunction.theta(T1)
THETA2 = SuperFunction.theta(T2)
THETA12 = SuperFunction.theta(T12)


# -- core operations --------------------------------------------------------


def sf_mul(F: SuperFunction, G: SuperFunction) -> SuperFunction:
    """Canonical-order product of two superfunctions."""
    out = [Poly()] * 4
    for a, pa in enumerate(F.parts):
        if not pa:
            continue
        for b, pb in enumerate(G.parts):
            if not pb:
                continue
            s = theta_product_sign(a, b)
            if s:
                out[a | b] = out[a | b] + pa * pb * s
    return SuperFunction.from_parts(out)


def partial_x(F: SuperFunction) -> SuperFunction:
    return SuperFunction.from_parts([p.derivative() for p in F.parts])


def integrate_x(F: SuperFunction) -> SuperFunction:
    """Coefficient-wise antiderivative in x with zero constant terms."""
    return SuperFunction.from_parts([p.antiderivative() for p in F.parts])


def partial_theta(F: SuperFunction, i: int) -> SuperFunction:
    """Left derivative d/dt_i; crossing t1 to reach t2 costs a sign."""
    bit = _theta_bit(i)
    out = [Poly()] * 4
    for mask, poly in enumerate(F.parts):
        if poly and mask & bit:
            sign = -1 if (bit == T2 and mask & T1) else 1
            out[mask ^ bit] = poly * sign
    return SuperFunction.from_parts(out)


def eta_bar(F: SuperFunction, i: int) -> SuperFunction:
    """eta_bar_i(F) = d/dt_i F - t_i * F'."""
    theta = THETA1 if _theta_bit(i) == T1 else THETA2
    return partial_theta(F, i) - sf_mul(theta, partial_x(F))


def parity_of(F: SuperFunction) -> Parity:
    even = bool(F.c_1) or bool(F.c_t12)
    odd = bool(F.c_t1) or bool(F.c_t2)
    if even and odd:
        return Parity.MIXED
    return Parity.ODD if odd else Parity.EVEN


def require_parity(F: SuperFunction, what: str = "superfunction") -> Parity:
    p = parity_of(F)
    if p is Parity.MIXED:
        raise MixedParityError(f"{what} must be parity-homogeneous, got {F}")
    return p


def sigma(F: SuperFunction) -> SuperFunction:
    """Parity operator: (-1)^{|F|} F extended linearly."""
    return F.even_part() - F.odd_part()


def theta2_split(F: SuperFunction) -> tuple[SuperFunction, SuperFunction]:
    """Return (F1, F2), both t2-free, with F = F1 + F2*t2."""
    F1 = SuperFunction(F.c_1, F.c_t1)
    F2 = SuperFunction(F.c_t2, F.c_t12)
    return F1, F2


def _theta_bit(i: int) -> int:
    if i == 1:
        return T1
    if i == 2:
        return T2
    raise ValueError(f"Odd variable index must be 1 or 2, got {i}")


__all__ = [
    "Scalar",
    "ScalarLike",
    "as_scalar",
    "parse_scalar",
    "format_scalar",
    "Parity",
    "MixedParityError",
    "sign_of",
    "Poly",
    "T1",
    "T2",
    "T12",
    "theta_product_sign",
    "SuperFunction",
    "ZERO",
    "ONE",
    "X",
    "THETA1",
    "THETA2",
    "THETA12",
    "sf_mul",
    "partial_x",
    "integrate_x",
    "partial_theta",
    "eta_bar",
    "parity_of",
    "require_parity",
    "sigma",
    "theta2_split",
]
