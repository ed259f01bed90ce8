"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class QPolynomial:
    """Immutable polynomial; ``coefficients[i]`` multiplies x**i.

    Trailing zeros are stripped on construction, so the zero polynomial
    stores no coefficients and reports degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Fraction | int] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "QPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Fraction | int) -> "QPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, coeff: Fraction | int = 1) -> "QPolynomial":
        if k < 0:
            raise ValueError(f"monomial exponent must be >= 0, got {k}")
        return cls((0,) * k + (coeff,))

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def lead(self) -> Fraction:
        """Leading coefficient; undefined for the zero polynomial."""
        if not self._coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        """Coefficient of x**k, zero when k is out of range."""
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"QPolynomial({[str(c) for c in self._coeffs]})"

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-c for c in self._coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QPolynomial):
            if self.is_zero or other.is_zero:
                return QPolynomial()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if a:
                    for j, b in enumerate(other._coeffs):
                        if b:
                            out[i + j] += a * b
            return QPolynomial(out)
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return QPolynomial(a * c for a in self._coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPolynomial":
        if n < 0:
            raise ValueError("negative polynomial powers are not defined")
        out = QPolynomial.one()
        for _ in range(n):
            out = out * self
        return out

    def derivative(self) -> "QPolynomial":
        return QPolynomial(i * c for i, c in enumerate(self._coeffs) if i > 0)

    def __call__(self, x: Fraction | int) -> Fraction:
        """Evaluate exactly by Horner's rule."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other: "QPolynomial"):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        dd = other.degree
        dlead = other.lead
        rem = list(self._coeffs)
        quo = [Fraction(0)] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                f = c / dlead
                quo[i - dd] = f
                rem[i] = Fraction(0)
                for j in range(dd):
                    rem[i - dd + j] -= f * other._coeffs[j]
        return QPolynomial(quo), QPolynomial(rem[:dd])


def poly_divexact(p: QPolynomial, q: QPolynomial) -> QPolynomial:
    """Divide p by q, requiring a zero remainder."""
    quo, rem = divmod(p, q)
    if not rem.is_zero:
        raise ValueError("polynomial division left a nonzero remainder")
    return quo


def poly_gcd(p: QPolynomial, q: QPolynomial) -> QPolynomial:
    """Monic greatest common divisor; gcd(0, 0) is the zero polynomial."""
    a, b = p, q
    while not b.is_zero:
        # keeping the divisor monic tames coefficient growth in Euclid's loop
        b = b * (1 / b.lead)
        _, r = divmod(a, b)
        a, b = b, r
    if a.is_zero:
        return a
    return a * (1 / a.lead)
