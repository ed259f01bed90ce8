"""The two-parameter polynomial family and its named specializations.

Polynomials are built from the coefficient triangle (single source of
truth); the recurrence step, the addition formula, the basis changes and
the summed evaluation are independent expressions of the same family and
double as cross-checks on one another.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .qpoly import QPolynomial
from .rationals import rising
from .stirling import (
    _triangle,
    gstirling_inverse,
    lah,
    stirling1,
    stirling2,
)


@dataclass(frozen=True)
class FamilyParams:
    """The (alpha, beta) parameter pair; beta must be nonzero."""

    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.beta == 0:
            raise ValueError("the family requires beta != 0")


def poly(params: FamilyParams, n: int) -> QPolynomial:
    """Degree-n member of the family, with triangle row n as coefficients."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return QPolynomial(_triangle(params.alpha, params.beta, n)[n])


def derivative_recurrence_step(params: FamilyParams, p_n: QPolynomial, n: int) -> QPolynomial:
    """One step of the derivative recurrence:

    next = (n - alpha - beta*x) * p_n - beta * x * p_n'.

    Starting from the constant 1 and iterating reproduces the whole family.
    """
    a, b = params.alpha, params.beta
    linear = QPolynomial((n - a, -b))
    return linear * p_n - QPolynomial((0, b)) * p_n.derivative()


def bell_poly(n: int) -> QPolynomial:
    """Bell polynomial: second-kind Stirling numbers as coefficients."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return QPolynomial(stirling2(n, k) for k in range(n + 1))


def eval_dobinski(params: FamilyParams, n: int, x, epsilon) -> float:
    """Evaluate the degree-n family member by its summed series form:

    exp(-x) * sum_{k>=0} rising(-alpha - beta*k, n) * x**k / k!.

    Terms are exact rationals; the sum stops once a majorant of the tail
    drops below epsilon, so the result is within epsilon (plus float
    rounding) of the exact polynomial value.  Negative x is allowed;
    there the majorant uses absolute values and converges more slowly.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValueError(f"epsilon must be > 0, got {epsilon}")
    x = Fraction(x)
    a, b = params.alpha, params.beta
    if x == 0:
        return float(rising(-a, n))

    ax = abs(x)
    # Tail budget for the pre-factor exp(-x): at most 1 for x >= 0, and
    # exp(-x) <= 4**(-x) gives a rational bound for x < 0.
    budget = eps if x > 0 else eps * Fraction(1, 4) ** (-math.floor(x))
    # Beyond start, the term majorant g(k) * |x|**k / k! at least halves
    # each step: (1 + 1/k)**n <= 2 once k >= 2n, and |x|/(k+1) <= 1/4.
    start = max(2 * n, math.ceil(4 * ax), 1)
    bound_base = abs(a) + n

    total = Fraction(0)
    power = Fraction(1)
    kfact = 1
    k = 0
    while True:
        total += rising(-a - b * k, n) * power / kfact
        if k >= start:
            majorant = (bound_base + abs(b) * k) ** n * abs(power) / kfact
            if majorant < budget:
                break
        k += 1
        power *= x
        kfact *= k
    return math.exp(-float(x)) * float(total)


def to_bell_basis(params: FamilyParams, n: int) -> list[Fraction]:
    """Coefficients of the degree-n member in the Bell polynomial basis.

    Coefficient j is

        beta**j * sum_{k=j..n} (-1)**k * |s(n, k)| * C(k, j) * alpha**(k-j)

    with s the signed first-kind Stirling numbers.  (Inverting the
    forward basis identity forces the C(k, j) factor; the printed form
    of this expansion omits it, which only goes unnoticed because the
    factor is 1 whenever alpha = 0, j = n, or n <= 1.)
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    a, b = params.alpha, params.beta
    out = []
    for j in range(n + 1):
        inner = Fraction(0)
        for k in range(j, n + 1):
            term = abs(stirling1(n, k)) * comb(k, j) * a ** (k - j)
            inner += term if k % 2 == 0 else -term
        out.append(b**j * inner)
    return out


def from_bell_basis(coeffs) -> QPolynomial:
    """Reassemble a polynomial from Bell-basis coefficients."""
    out = QPolynomial.zero()
    for j, c in enumerate(coeffs):
        out = out + Fraction(c) * bell_poly(j)
    return out


def verify_bell_basis_forward(params: FamilyParams, nmax: int) -> bool:
    """Check the forward Bell-basis identity for every n <= nmax:

    sum_k (-1)**k * S2(n, k) * family_k(x)
        = sum_k C(n, k) * alpha**(n-k) * beta**k * Bell_k(x).
    """
    a, b = params.alpha, params.beta
    for n in range(nmax + 1):
        lhs = QPolynomial.zero()
        rhs = QPolynomial.zero()
        for k in range(n + 1):
            term = stirling2(n, k) * poly(params, k)
            lhs = lhs + (term if k % 2 == 0 else -term)
            rhs = rhs + (comb(n, k) * a ** (n - k) * b**k) * bell_poly(k)
        if lhs != rhs:
            return False
    return True


def monomial_to_family(params: FamilyParams, n: int) -> list[Fraction]:
    """Expansion coefficients of x**n in the family basis (inverse-triangle
    row n); substituting the family members back reconstructs x**n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return [gstirling_inverse(params.alpha, params.beta, n, k) for k in range(n + 1)]


def rebase(params_from: FamilyParams, params_to: FamilyParams, n: int) -> list[Fraction]:
    """Connection coefficients from one parameter pair to another.

    Coefficient j is (-1)**j times the triangle entry (n, j) at the
    composed parameters (alpha - (alpha'/beta')*beta, beta/beta').
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    a, b = params_from.alpha, params_from.beta
    a2, b2 = params_to.alpha, params_to.beta
    composed = _triangle(a - (a2 / b2) * b, b / b2, n)[n]
    return [composed[j] if j % 2 == 0 else -composed[j] for j in range(n + 1)]


def addition(params: FamilyParams, n: int, m: int) -> QPolynomial:
    """Degree n+m member assembled by the index-splitting formula:

    sum_{j<=n} sum_{k<=m} C(n, j) * rising(m - beta*k, n-j) * S(m, k)
        * x**k * family_j(x).
    """
    if n < 0 or m < 0:
        raise ValueError(f"n and m must be >= 0, got (n={n}, m={m})")
    a, b = params.alpha, params.beta
    row_m = _triangle(a, b, m)[m]
    out = QPolynomial.zero()
    for j in range(n + 1):
        pj = poly(params, j)
        cnj = comb(n, j)
        for k in range(m + 1):
            scalar = cnj * rising(m - b * k, n - j) * row_m[k]
            if scalar:
                out = out + QPolynomial.monomial(k, scalar) * pj
    return out


U_PARAMS = FamilyParams(Fraction(-1, 2), Fraction(-1, 2))
V_PARAMS = FamilyParams(Fraction(-3, 2), Fraction(-1, 2))


def family_U(n: int) -> QPolynomial:
    """The first classical specialization: parameters (-1/2, -1/2)."""
    return poly(U_PARAMS, n)


def family_V(n: int) -> QPolynomial:
    """The second classical specialization: parameters (-3/2, -1/2)."""
    return poly(V_PARAMS, n)


def laguerre_params(lam) -> FamilyParams:
    return FamilyParams(-Fraction(lam) - 1, Fraction(-1))


def family_laguerre(lam, n: int) -> QPolynomial:
    """Generalized Laguerre polynomial as the (-lambda-1, -1) member over n!.

    This follows the source convention with argument +x; the common
    classical convention is recovered by substituting x -> -x.
    """
    return Fraction(1, factorial(n)) * poly(laguerre_params(lam), n)


def family_assoc_lah(m: int, n: int) -> QPolynomial:
    """Associated Lah polynomial: the (0, -m) member, m a positive integer."""
    if m < 1:
        raise ValueError(f"the associated Lah family requires m >= 1, got {m}")
    return poly(FamilyParams(Fraction(0), Fraction(-m)), n)


@dataclass(frozen=True)
class RisingExpansion:
    """Both sides of the rising-into-falling factorial expansion."""

    lhs: QPolynomial
    rhs: QPolynomial

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def rising_expansion(params: FamilyParams, n: int) -> RisingExpansion:
    """Expand rising(-alpha - beta*x, n) and sum_j S(n, j) * falling(x, j)
    into polynomials in x and report both sides."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    a, b = params.alpha, params.beta
    lhs = QPolynomial.one()
    for i in range(n):
        lhs = lhs * QPolynomial((-a + i, -b))
    row = _triangle(a, b, n)[n]
    rhs = QPolynomial.zero()
    falling_poly = QPolynomial.one()
    for j in range(n + 1):
        rhs = rhs + row[j] * falling_poly
        falling_poly = falling_poly * QPolynomial((-j, 1))
    return RisingExpansion(lhs, rhs)


@dataclass(frozen=True)
class LahRebaseReport:
    """Verdict on the sign convention of the Lah-number rebase.

    Rebasing onto the mirrored parameters (-alpha, -beta) produces Lah
    numbers up to sign; the printed source leaves the sign exponent
    dangling, and the exact reconstruction pins it to the summation
    index: coefficient k carries (-1)**k.
    """

    ok: bool
    alternating_sign_ok: bool
    constant_sign_ok: bool

    @property
    def confirmed_sign(self) -> str:
        return "(-1)**k on the k-th coefficient" if self.alternating_sign_ok else "unresolved"


def lah_rebase_report(params: FamilyParams, nmax: int) -> LahRebaseReport:
    """Check that rebasing onto (-alpha, -beta) yields (-1)**k * L(n, k)
    and that those coefficients reconstruct the original polynomial."""
    mirrored = FamilyParams(-params.alpha, -params.beta)
    alternating_ok = True
    constant_ok = True
    for n in range(nmax + 1):
        coeffs = rebase(params, mirrored, n)
        expected = [
            lah(n, k) if k % 2 == 0 else -lah(n, k) for k in range(n + 1)
        ]
        if coeffs != expected:
            alternating_ok = False
        rebuilt = QPolynomial.zero()
        unsigned = QPolynomial.zero()
        for k, c in enumerate(coeffs):
            rebuilt = rebuilt + c * poly(mirrored, k)
            unsigned = unsigned + lah(n, k) * poly(mirrored, k)
        target = poly(params, n)
        if rebuilt != target:
            alternating_ok = False
        if unsigned != target:
            constant_ok = False
    return LahRebaseReport(
        ok=alternating_ok,
        alternating_sign_ok=alternating_ok,
        constant_sign_ok=constant_ok,
    )
