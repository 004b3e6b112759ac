"""Exact polynomial arithmetic in p and r, plus series-format values.

Coefficients are :class:`fractions.Fraction`, so every symbolic derivation
is exact. Floating point enters only when ``r`` is fixed to a number
(:meth:`BivariatePolynomial.fix_r`) or when a polynomial is evaluated.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Sequence

import numpy as np

Rational = Fraction

__all__ = [
    "Rational",
    "BivariatePolynomial",
    "UnivariatePolynomial",
    "Venue",
    "SeriesFormat",
    "FormatError",
    "CANONICAL_FORMATS",
    "poly_add",
    "poly_mul",
    "poly_derivative_p",
    "poly_fix_r",
    "poly_evaluate",
]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite coefficient {value!r}")
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as a rational coefficient")


class BivariatePolynomial:
    """Polynomial in ``p`` and ``r`` with rational coefficients.

    Terms are stored as ``{(deg_p, deg_r): Fraction}`` with zero coefficients
    dropped, so the empty map is the zero polynomial and equality is plain
    term-map equality. Instances are immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        for (dp, dr), c in (terms or {}).items():
            if dp < 0 or dr < 0:
                raise ValueError(f"negative exponent in term {(dp, dr)}")
            c = _as_fraction(c)
            if c:
                key = (int(dp), int(dr))
                total = clean.get(key, Fraction(0)) + c
                if total:
                    clean[key] = total
                else:
                    clean.pop(key, None)
        self._terms = clean
        self._hash = None

    # constructors

    @classmethod
    def constant(cls, c) -> BivariatePolynomial:
        return cls({(0, 0): c})

    @classmethod
    def p(cls) -> BivariatePolynomial:
        return cls({(1, 0): 1})

    @classmethod
    def r(cls) -> BivariatePolynomial:
        return cls({(0, 1): 1})

    @classmethod
    def zero(cls) -> BivariatePolynomial:
        return cls()

    @classmethod
    def one(cls) -> BivariatePolynomial:
        return cls({(0, 0): 1})

    # accessors

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def coefficient(self, deg_p: int, deg_r: int = 0) -> Fraction:
        return self._terms.get((deg_p, deg_r), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree_p(self) -> int:
        return max((dp for dp, _ in self._terms), default=-1)

    def min_degree_p(self) -> int:
        """Largest k such that p**k divides the polynomial (-1 for zero)."""
        return min((dp for dp, _ in self._terms), default=-1)

    def coefficient_in_r(self, deg_p: int) -> dict[int, Fraction]:
        """Coefficient of ``p**deg_p`` as an ``{deg_r: Fraction}`` map."""
        return {dr: c for (dp, dr), c in self._terms.items() if dp == deg_p}

    # arithmetic

    @staticmethod
    def _coerce(other) -> BivariatePolynomial:
        if isinstance(other, BivariatePolynomial):
            return other
        return BivariatePolynomial.constant(_as_fraction(other))

    def __add__(self, other) -> BivariatePolynomial:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return BivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> BivariatePolynomial:
        return BivariatePolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> BivariatePolynomial:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> BivariatePolynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> BivariatePolynomial:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (ap, ar), ac in self._terms.items():
            for (bp, br), bc in other._terms.items():
                key = (ap + bp, ar + br)
                out[key] = out.get(key, Fraction(0)) + ac * bc
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BivariatePolynomial:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = BivariatePolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, BivariatePolynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == BivariatePolynomial.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # calculus and evaluation

    def derivative_p(self) -> BivariatePolynomial:
        return BivariatePolynomial(
            {(dp - 1, dr): c * dp for (dp, dr), c in self._terms.items() if dp > 0}
        )

    def substitute_p(self, value) -> BivariatePolynomial:
        """Exact substitution of a rational value for p (result is in r only)."""
        v = _as_fraction(value)
        out: dict[tuple[int, int], Fraction] = {}
        for (dp, dr), c in self._terms.items():
            out[(0, dr)] = out.get((0, dr), Fraction(0)) + c * v**dp
        return BivariatePolynomial(out)

    def fix_r(self, r_value: float) -> UnivariatePolynomial:
        if not isinstance(r_value, (int, float, Fraction)) or not math.isfinite(r_value):
            raise ValueError(f"r must be finite, got {r_value!r}")
        if r_value <= 0:
            raise ValueError(f"r must be positive, got {r_value!r}")
        rv = _as_fraction(r_value)
        exact: dict[int, Fraction] = {}
        for (dp, dr), c in self._terms.items():
            exact[dp] = exact.get(dp, Fraction(0)) + c * rv**dr
        coeffs = [0.0] * (self.degree_p + 1)
        for dp, c in exact.items():
            coeffs[dp] = float(c)
        return UnivariatePolynomial(coeffs)

    def evaluate(self, p, r) -> float:
        pv, rv = _as_fraction(p), _as_fraction(r)
        total = Fraction(0)
        for (dp, dr), c in self._terms.items():
            total += c * pv**dp * rv**dr
        return float(total)

    # display

    def to_text(self) -> str:
        """Canonical text: descending powers of p, r-coefficients descending.

        A coefficient with a single r-term is written inline (``-20r^3p^7``);
        otherwise it is parenthesised, with a leading minus pulled out when
        every r-term is negative (``-(9r^2+6r)p^4``).
        """
        if not self._terms:
            return "0"
        pieces = []
        for dp in sorted({dp for dp, _ in self._terms}, reverse=True):
            coeff = self.coefficient_in_r(dp)
            negative = all(c < 0 for c in coeff.values())
            if negative:
                coeff = {dr: -c for dr, c in coeff.items()}
            ptxt = _power("p", dp)
            if len(coeff) == 1:
                (dr, c), = coeff.items()
                body = _monomial(c, dr, ptxt)
            else:
                inner = _r_poly_text(coeff)
                body = f"({inner}){ptxt}"
            sign = "-" if negative else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += sign + body
        return text

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self.to_text()!r})"


def _power(sym: str, n: int) -> str:
    if n == 0:
        return ""
    if n == 1:
        return sym
    return f"{sym}^{n}"


def _fraction_text(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def _monomial(c: Fraction, dr: int, ptxt: str) -> str:
    """Positive coefficient c times r**dr times the p-part."""
    sym = _power("r", dr) + ptxt
    if not sym:
        return _fraction_text(c)
    if c == 1:
        return sym
    return _fraction_text(c) + sym


def _r_poly_text(coeff: Mapping[int, Fraction]) -> str:
    out = ""
    for i, dr in enumerate(sorted(coeff, reverse=True)):
        c = coeff[dr]
        mono = _monomial(abs(c), dr, "")
        if i == 0:
            out = ("-" if c < 0 else "") + mono
        else:
            out += ("-" if c < 0 else "+") + mono
    return out


class UnivariatePolynomial:
    """Float polynomial in p, coefficients indexed by degree (ascending).

    Trailing zero coefficients are trimmed; the zero polynomial has degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[float]):
        coeffs = [float(c) for c in coefficients]
        if not all(math.isfinite(c) for c in coeffs):
            raise ValueError("non-finite coefficient")
        while coeffs and coeffs[-1] == 0.0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @property
    def coefficients(self) -> tuple[float, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def __call__(self, x):
        # Horner; works for scalars and numpy arrays
        acc = np.zeros_like(x, dtype=float) if isinstance(x, np.ndarray) else 0.0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> UnivariatePolynomial:
        return UnivariatePolynomial(i * c for i, c in enumerate(self._coeffs) if i > 0)

    def low_order_zeros(self) -> int:
        """Multiplicity of the root at p = 0 (exact zero low coefficients)."""
        k = 0
        for c in self._coeffs:
            if c != 0.0:
                break
            k += 1
        return k

    def deflate_p(self, k: int) -> UnivariatePolynomial:
        """Divide by p**k; the k lowest coefficients are discarded."""
        return UnivariatePolynomial(self._coeffs[k:])

    def deflate_root(self, x0: float) -> UnivariatePolynomial:
        """Synthetic division by (p - x0), dropping the remainder."""
        if self.degree < 1:
            return UnivariatePolynomial([])
        high = list(reversed(self._coeffs))
        out = [high[0]]
        for c in high[1:-1]:
            out.append(c + out[-1] * x0)
        return UnivariatePolynomial(reversed(out))

    def max_abs_coefficient(self) -> float:
        return max((abs(c) for c in self._coeffs), default=0.0)

    def __eq__(self, other) -> bool:
        if isinstance(other, UnivariatePolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"UnivariatePolynomial({list(self._coeffs)!r})"


def poly_add(a: BivariatePolynomial, b: BivariatePolynomial) -> BivariatePolynomial:
    return a + b


def poly_mul(a: BivariatePolynomial, b: BivariatePolynomial) -> BivariatePolynomial:
    return a * b


def poly_derivative_p(a: BivariatePolynomial) -> BivariatePolynomial:
    return a.derivative_p()


def poly_fix_r(a: BivariatePolynomial, r_value: float) -> UnivariatePolynomial:
    return a.fix_r(r_value)


def poly_evaluate(a: BivariatePolynomial, p: float, r: float) -> float:
    return a.evaluate(p, r)


# series formats


class FormatError(ValueError):
    """Raised for unparseable or invalid series formats."""


class Venue(enum.Enum):
    HOME = "H"
    AWAY = "A"


CANONICAL_FORMATS: dict[str, str] = {
    "1-1-1": "HAH",
    "1-2": "AHH",
    "2-3": "AAHHH",
    "2-2-1": "HHAAH",
    "2-3-2": "HHAAAHH",
}


@dataclass(frozen=True)
class SeriesFormat:
    """Venue sequence of a best-of-N series, seen from the advantaged team."""

    venues: tuple[Venue, ...]

    def __post_init__(self):
        venues = tuple(self.venues)
        if not venues:
            raise FormatError("a series needs at least one game")
        if len(venues) % 2 == 0:
            raise FormatError(f"series length must be odd, got {len(venues)}")
        if not all(isinstance(v, Venue) for v in venues):
            raise FormatError("venues must be Venue members")
        object.__setattr__(self, "venues", venues)

    @property
    def length(self) -> int:
        return len(self.venues)

    @property
    def wins_needed(self) -> int:
        return (len(self.venues) + 1) // 2

    @property
    def code(self) -> str:
        return "".join(v.value for v in self.venues)

    @property
    def name(self) -> str:
        for name, code in CANONICAL_FORMATS.items():
            if code == self.code:
                return name
        return self.code

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, text: str) -> SeriesFormat:
        """Accept a canonical name ("2-3-2") or an H/A venue string ("HHAAAHH")."""
        key = text.strip()
        code = CANONICAL_FORMATS.get(key, key).upper()
        if not code or any(ch not in "HA" for ch in code):
            raise FormatError(f"cannot parse series format {text!r}")
        return cls(tuple(Venue(ch) for ch in code))

    @classmethod
    def from_venues(cls, venues: Sequence[Venue]) -> SeriesFormat:
        return cls(tuple(venues))

    @classmethod
    def one_one_one(cls) -> SeriesFormat:
        return cls.parse("1-1-1")

    @classmethod
    def one_two(cls) -> SeriesFormat:
        return cls.parse("1-2")

    @classmethod
    def two_three(cls) -> SeriesFormat:
        return cls.parse("2-3")

    @classmethod
    def two_two_one(cls) -> SeriesFormat:
        return cls.parse("2-2-1")

    @classmethod
    def two_three_two(cls) -> SeriesFormat:
        return cls.parse("2-3-2")

    @classmethod
    def canonical(cls) -> dict[str, SeriesFormat]:
        return {name: cls.parse(name) for name in CANONICAL_FORMATS}
