"""Coefficient triangles.

The central object is the two-parameter Stirling-type triangle S(n, k)
attached to a parameter pair (alpha, beta): the coefficients of the
polynomial family in the monomial basis.  Around it sit its inverse
triangle, the classical Stirling numbers of both kinds, Lah and r-Lah
numbers, and partial (r-)Bell polynomials, each of which specializes or
transports the central triangle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .qpoly import QPolynomial
from .rationals import rising
from .series import QXSeries, binomial_series


def _check_indices(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError(f"triangle indices must be >= 0, got (n={n}, k={k})")
    if k > n:
        raise ValueError(f"triangle index k={k} exceeds n={n}")


@lru_cache(maxsize=None)
def _triangle(alpha: Fraction, beta: Fraction, nmax: int) -> tuple[tuple[Fraction, ...], ...]:
    """Rows 0..nmax of S(n, k) built by the triangular recurrence.

    S(m+1, j) = (m - alpha - beta*j) * S(m, j) - beta * S(m, j-1),
    seeded with S(0, 0) = 1 and zero outside 0 <= j <= m.
    """
    rows = [(Fraction(1),)]
    for m in range(nmax):
        prev = rows[m]
        row = []
        for j in range(m + 2):
            v = Fraction(0)
            if j <= m:
                v += (m - alpha - beta * j) * prev[j]
            if j >= 1:
                v -= beta * prev[j - 1]
            row.append(v)
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class GStirlingTable:
    """Lower-triangular S(n, k) values for one fixed parameter pair."""

    alpha: Fraction
    beta: Fraction
    nmax: int
    rows: tuple[tuple[Fraction, ...], ...]

    def value(self, n: int, k: int) -> Fraction:
        _check_indices(n, k)
        if n > self.nmax:
            raise ValueError(f"row {n} exceeds table size nmax={self.nmax}")
        return self.rows[n][k]

    def row(self, n: int) -> tuple[Fraction, ...]:
        if not 0 <= n <= self.nmax:
            raise ValueError(f"row {n} outside 0..{self.nmax}")
        return self.rows[n]


def gstirling_table(alpha, beta, nmax: int) -> GStirlingTable:
    """Build the triangle by its recurrence (the default, cheapest route)."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if nmax < 0:
        raise ValueError(f"nmax must be >= 0, got {nmax}")
    return GStirlingTable(alpha, beta, nmax, _triangle(alpha, beta, nmax))


def gstirling_explicit(alpha, beta, n: int, k: int) -> Fraction:
    """Alternating-sum closed form, an independent route to one entry.

    S(n, k) = (1/k!) * sum_{j=0..k} (-1)**(k-j) * C(k, j) * rising(-alpha - beta*j, n).
    """
    _check_indices(n, k)
    alpha, beta = Fraction(alpha), Fraction(beta)
    total = Fraction(0)
    for j in range(k + 1):
        term = comb(k, j) * rising(-alpha - beta * j, n)
        total += term if (k - j) % 2 == 0 else -term
    return total / factorial(k)


def gstirling_egf(alpha, beta, nmax: int) -> tuple[tuple[Fraction, ...], ...]:
    """Triangle extracted from column generating functions, a third route.

    Column k of the triangle has exponential generating function
    (1/k!) * ((1-t)**beta - 1)**k * (1-t)**alpha.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if nmax < 0:
        raise ValueError(f"nmax must be >= 0, got {nmax}")
    base = binomial_series(beta, nmax) - QXSeries.one(nmax)
    alpha_part = binomial_series(alpha, nmax)
    rows = [[Fraction(0)] * (n + 1) for n in range(nmax + 1)]
    power = QXSeries.one(nmax)
    for k in range(nmax + 1):
        column = power * alpha_part
        kfact = factorial(k)
        for n in range(k, nmax + 1):
            rows[n][k] = factorial(n) * column.coeff(n).coeff(0) / kfact
        if k < nmax:
            power = power * base
    return tuple(tuple(row) for row in rows)


def gstirling_inverse(alpha, beta, n: int, k: int) -> Fraction:
    """Entry of the inverse triangle: (-1)**(n-k) * S'(n, k) where S' is the
    triangle at parameters (-alpha/beta, 1/beta)."""
    _check_indices(n, k)
    alpha, beta = Fraction(alpha), Fraction(beta)
    if beta == 0:
        raise ValueError("the inverse triangle requires beta != 0")
    value = _triangle(-alpha / beta, 1 / beta, n)[n][k]
    return value if (n - k) % 2 == 0 else -value


@lru_cache(maxsize=None)
def _stirling2_rows(nmax: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]
    for n in range(nmax):
        prev = rows[n]
        row = [0] * (n + 2)
        for k in range(n + 2):
            if k >= 1:
                row[k] += prev[k - 1] if k - 1 <= n else 0
            if k <= n:
                row[k] += k * prev[k]
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def _stirling1_rows(nmax: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]
    for n in range(nmax):
        prev = rows[n]
        row = [0] * (n + 2)
        for k in range(n + 2):
            if k >= 1:
                row[k] += prev[k - 1] if k - 1 <= n else 0
            if k <= n:
                row[k] -= n * prev[k]
        rows.append(tuple(row))
    return tuple(rows)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind (set-partition counts)."""
    _check_indices(n, k)
    return _stirling2_rows(n)[n][k]


def stirling1(n: int, k: int) -> int:
    """Signed Stirling number of the first kind."""
    _check_indices(n, k)
    return _stirling1_rows(n)[n][k]


@lru_cache(maxsize=512)
def _pow_series(values: tuple[Fraction, ...], power: int, order: int) -> QXSeries:
    """(sum values[i] * t**i) ** power, truncated; cached so that triangle
    sweeps reuse each incremental power."""
    if power == 0:
        return QXSeries.one(order)
    return _pow_series(values, power - 1, order) * QXSeries(order, values)


def _egf_values(seq: Sequence, length: int, shift: int) -> tuple[Fraction, ...]:
    """Coefficients value[j]/ (j)! laid out from t**shift upward."""
    out = [Fraction(0)] * shift
    out.extend(Fraction(seq[j]) / factorial(j + shift) for j in range(length))
    return tuple(out)


def rlah(r: int, n: int, k: int) -> Fraction:
    """r-Lah number with full indices (both arguments already include r).

    Defined by extraction from (1/(k-r)!) * (t/(1-t))**(k-r) * (1-t)**(-2r);
    the plain Lah numbers are the r = 0 column of this family.
    """
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    _check_indices(n, k)
    if k < r:
        raise ValueError(f"need k >= r, got k={k}, r={r}")
    nn, kk = n - r, k - r
    t_over = QXSeries(nn, (Fraction(0),) + (Fraction(1),) * nn)
    series = _pow_series(t_over.coefficients, kk, nn) * binomial_series(
        Fraction(-2 * r), nn
    )
    return factorial(nn) * series.coeff(nn).coeff(0) / factorial(kk)


def lah(n: int, k: int) -> Fraction:
    """Lah number L(n, k), via its exponential generating function."""
    return rlah(0, n, k)


def partial_r_bell(r: int, n: int, k: int, a: Sequence, b: Sequence = ()) -> Fraction:
    """Partial r-Bell polynomial with full indices (n+r, k+r) at the given
    coefficient sequences.

    Extracted as n! times the t**n coefficient of
    (1/k!) * (sum_{j>=1} a_j t**j / j!)**k * (sum_{j>=0} b_{j+1} t**j / j!)**r,
    where ``a`` lists a_1..a_n and ``b`` lists b_1..b_{n+1}.
    """
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    _check_indices(n, k)
    if k >= 1 and len(a) < n:
        raise ValueError(f"sequence a needs {n} terms, got {len(a)}")
    if r >= 1 and len(b) < n + 1:
        raise ValueError(f"sequence b needs {n + 1} terms, got {len(b)}")
    series = QXSeries.one(n)
    if k >= 1:
        series = series * _pow_series(_egf_values(a[:n], n, 1), k, n)
    if r >= 1:
        series = series * _pow_series(_egf_values(b[: n + 1], n + 1, 0), r, n)
    return factorial(n) * series.coeff(n).coeff(0) / factorial(k)


def partial_bell(n: int, k: int, a: Sequence) -> Fraction:
    """Partial Bell polynomial B(n, k) at the coefficient sequence a_1..a_n."""
    return partial_r_bell(0, n, k, a)


def verify_rbell_connection(alpha, beta, r: int, nmax: int) -> bool:
    """Check that the triangle at (r*alpha, beta) equals the partial r-Bell
    values at rising-factorial sequences, entry by entry up to nmax."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if beta == 0:
        raise ValueError("the family requires beta != 0")
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    a = [rising(-beta, j) for j in range(1, nmax + 1)]
    b = [rising(-alpha, j) for j in range(nmax + 1)]  # b_{j+1} = rising(-alpha, j)
    table = _triangle(r * alpha, beta, nmax)
    for n in range(nmax + 1):
        for k in range(n + 1):
            if partial_r_bell(r, n, k, a, b) != table[n][k]:
                return False
    return True


@dataclass(frozen=True)
class CompositionReport:
    """Outcome of the two-step parameter-composition identities.

    The printed source of these identities carries an ambiguous sign
    exponent, so both readings are tried: the sign following the inner
    summation index, and the sign following the fixed outer index.
    ``ok`` reflects the summation-index reading, which is the one the
    exact comparison confirms.
    """

    ok: bool
    index_sign_ok: bool
    outer_sign_ok: bool
    failures: tuple[tuple[int, int], ...]

    @property
    def confirmed_sign(self) -> str:
        if self.index_sign_ok and not self.outer_sign_ok:
            return "summation-index"
        if self.outer_sign_ok and not self.index_sign_ok:
            return "outer-index"
        if self.index_sign_ok and self.outer_sign_ok:
            return "both (degenerate parameters)"
        return "neither"


def composition_report(alpha, beta, alpha2, beta2, nmax: int) -> CompositionReport:
    """Test the composition of two triangles through an intermediate one.

    With composed parameters (alpha - (alpha2/beta2)*beta, beta/beta2),
    the identities under test are::

        S[alpha,beta](n, k) = sum_j (+-1) * S[composed](n, j) * S[alpha2,beta2](j, k)
        rising(-alpha - beta*x, n) = sum_j (+-1) * S[composed](n, j) * rising(-alpha2 - beta2*x, j)

    with the sign exponent resolved to the summation index j.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    alpha2, beta2 = Fraction(alpha2), Fraction(beta2)
    if beta2 == 0:
        raise ValueError("composition requires the target beta != 0")
    if nmax < 0:
        raise ValueError(f"nmax must be >= 0, got {nmax}")

    composed = _triangle(alpha - (alpha2 / beta2) * beta, beta / beta2, nmax)
    left = _triangle(alpha, beta, nmax)
    right = _triangle(alpha2, beta2, nmax)

    index_ok = True
    outer_ok = True
    failures: list[tuple[int, int]] = []

    for n in range(nmax + 1):
        for k in range(n + 1):
            acc_signed = Fraction(0)
            acc_plain = Fraction(0)
            for j in range(k, n + 1):
                term = composed[n][j] * right[j][k]
                acc_plain += term
                acc_signed += term if j % 2 == 0 else -term
            if acc_signed != left[n][k]:
                index_ok = False
                failures.append((n, k))
            outer = acc_plain if k % 2 == 0 else -acc_plain
            if outer != left[n][k]:
                outer_ok = False

    lhs_rising = QPolynomial.one()
    rising_targets: list[QPolynomial] = []
    acc = QPolynomial.one()
    for i in range(nmax + 1):
        rising_targets.append(acc)
        acc = acc * QPolynomial((-alpha2 + i, -beta2))
    for n in range(nmax + 1):
        rhs_index = QPolynomial.zero()
        rhs_plain = QPolynomial.zero()
        for j in range(n + 1):
            term = composed[n][j] * rising_targets[j]
            rhs_plain = rhs_plain + term
            rhs_index = rhs_index + (term if j % 2 == 0 else -term)
        if rhs_index != lhs_rising:
            index_ok = False
            failures.append((n, -1))
        rhs_outer = rhs_plain if n % 2 == 0 else -rhs_plain
        if rhs_outer != lhs_rising:
            outer_ok = False
        lhs_rising = lhs_rising * QPolynomial((-alpha + n, -beta))

    return CompositionReport(
        ok=index_ok,
        index_sign_ok=index_ok,
        outer_sign_ok=outer_ok,
        failures=tuple(failures),
    )


def verify_composition(alpha, beta, alpha2, beta2, nmax: int) -> bool:
    """True iff both composition identities hold with the resolved sign."""
    return composition_report(alpha, beta, alpha2, beta2, nmax).ok
