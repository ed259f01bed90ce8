"""Built-in verification suite.

One place defines the parameter grid and every identity batch the CLI's
``verify`` command can run, so that ``verify --all`` is reproducible and
its output deterministic.  Each batch returns plain pass/fail results;
formatting and exit codes stay in the CLI layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import family, operators, series, stirling, zeros
from .qpoly import QPolynomial
from .rationals import falling, rising

GRID_ALPHAS = tuple(
    Fraction(s) for s in ("-2", "-3/2", "-1", "-1/2", "0", "1/3", "1/2", "1", "2")
)
GRID_BETAS = tuple(Fraction(s) for s in ("-3", "-2", "-1", "-1/2", "1/2", "1", "2"))
GRID = tuple((a, b) for a in GRID_ALPHAS for b in GRID_BETAS)

# Deterministic sample of (source, target) parameter pairs for rebasing.
REBASE_PAIRS = tuple(
    (
        (Fraction(sa), Fraction(sb)),
        (Fraction(ta), Fraction(tb)),
    )
    for (sa, sb), (ta, tb) in (
        (("-1/2", "-1/2"), ("0", "-1")),
        (("-1/2", "-1/2"), ("-1/2", "-1/2")),
        (("-3/2", "-1/2"), ("0", "-2")),
        (("1", "-1"), ("0", "-2")),
        (("1", "-1"), ("-1", "1")),
        (("2", "3"), ("1", "1")),
        (("0", "-2"), ("-1", "-1")),
        (("1/3", "-3"), ("1/2", "1/2")),
        (("-2", "2"), ("2", "-1/2")),
        (("1/2", "1/2"), ("-3/2", "-1/2")),
    )
)

COMPOSITION_CASES = tuple(
    (Fraction(a), Fraction(b), Fraction(a2), Fraction(b2))
    for a, b, a2, b2 in (
        ("1", "-1", "0", "-2"),
        ("-1/2", "-1/2", "0", "-1"),
        ("2", "3", "1", "1"),
        ("-2", "1/2", "-1/2", "-3"),
    )
)

DOBINSKI_EPS = Fraction(1, 10**12)
DOBINSKI_TOL = 1e-10
DOBINSKI_POINTS = (Fraction(1, 2), Fraction(1), Fraction(2))


@dataclass(frozen=True)
class CheckResult:
    identity: str
    detail: str
    ok: bool

    @property
    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.identity} {self.detail}"


class SuiteUsageError(ValueError):
    """Bad or missing parameters for a verification request."""


def _pair(alpha: Fraction, beta: Fraction) -> str:
    return f"alpha={alpha} beta={beta}"


# ---------------------------------------------------------------------------
# identity batches (each returns a bare bool for one parameter choice)


def triple_route_ok(alpha: Fraction, beta: Fraction, nmax: int = 12) -> bool:
    """Recurrence, explicit sum, and series extraction must agree entrywise."""
    rows = stirling._triangle(alpha, beta, nmax)
    egf = stirling.gstirling_egf(alpha, beta, nmax)
    for n in range(nmax + 1):
        for k in range(n + 1):
            value = rows[n][k]
            if value != egf[n][k]:
                return False
            if value != stirling.gstirling_explicit(alpha, beta, n, k):
                return False
    return True


def first_values_ok(alpha: Fraction, beta: Fraction) -> bool:
    """Degrees 0..3 must match their printed closed forms exactly."""
    params = family.FamilyParams(alpha, beta)
    a, b = alpha, beta
    if family.poly(params, 0) != QPolynomial.one():
        return False
    if family.poly(params, 1) != QPolynomial((-a, -b)):
        return False
    if family.poly(params, 2) != QPolynomial((a * (a - 1), b * (2 * a + b - 1), b**2)):
        return False
    # degree 3 is printed with the argument -x/beta, so transform c_k -> c_k * (-1/b)**k
    p3 = family.poly(params, 3)
    transformed = QPolynomial(
        p3.coeff(k) * Fraction(-1) ** k / b**k for k in range(4)
    )
    expected = QPolynomial(
        (
            -falling(a, 3),
            3 * a**2 + 3 * a * b - 6 * a + b**2 - 3 * b + 2,
            -3 * (a + b - 1),
            Fraction(1),
        )
    )
    return transformed == expected


def recurrence_chain_ok(alpha: Fraction, beta: Fraction, nmax: int = 12) -> bool:
    params = family.FamilyParams(alpha, beta)
    current = QPolynomial.one()
    for n in range(nmax):
        current = family.derivative_recurrence_step(params, current, n)
        if current != family.poly(params, n + 1):
            return False
    return True


def inverse_pair_ok(alpha: Fraction, beta: Fraction, nmax: int = 10) -> bool:
    """The inverse triangle times the triangle is the identity matrix."""
    rows = stirling._triangle(alpha, beta, nmax)
    inv = [
        [stirling.gstirling_inverse(alpha, beta, n, k) for k in range(n + 1)]
        for n in range(nmax + 1)
    ]
    for n in range(nmax + 1):
        for k in range(n + 1):
            acc = Fraction(0)
            for j in range(k, n + 1):
                acc += inv[n][j] * rows[j][k]
            if acc != (1 if n == k else 0):
                return False
    return True


def bell_basis_ok(alpha: Fraction, beta: Fraction, nmax: int = 10) -> bool:
    params = family.FamilyParams(alpha, beta)
    if not family.verify_bell_basis_forward(params, nmax):
        return False
    for n in range(nmax + 1):
        coeffs = family.to_bell_basis(params, n)
        if family.from_bell_basis(coeffs) != family.poly(params, n):
            return False
    return True


def u_bell_display_ok(nmax: int = 10) -> bool:
    """Bell-basis coefficients of the first specialization must equal
    sum_{k=j..n} C(k, j) * |s(n, k)| / 2**k (the printed display, with
    the C(k, j) factor its source omits)."""
    for n in range(nmax + 1):
        coeffs = family.to_bell_basis(family.U_PARAMS, n)
        for j in range(n + 1):
            expected = sum(
                math.comb(k, j) * abs(stirling.stirling1(n, k)) * Fraction(1, 2**k)
                for k in range(j, n + 1)
            )
            if coeffs[j] != expected:
                return False
    return True


def rbell_ok(alpha: Fraction, beta: Fraction, rmax: int = 3, nmax: int = 8) -> bool:
    return all(
        stirling.verify_rbell_connection(alpha, beta, r, nmax)
        for r in range(rmax + 1)
    )


def addition_ok(alpha: Fraction, beta: Fraction, total: int = 10) -> bool:
    params = family.FamilyParams(alpha, beta)
    for n in range(total + 1):
        for m in range(total + 1 - n):
            if family.addition(params, n, m) != family.poly(params, n + m):
                return False
    # the m = 1 slice must reproduce the triangle row-for-row
    for n in range(total):
        if (
            family.addition(params, n, 1).coefficients
            != stirling._triangle(alpha, beta, n + 1)[n + 1]
        ):
            return False
    return True


def gf_derivative_ok(
    alpha: Fraction, beta: Fraction, mmax: int = 5, order: int = 10
) -> bool:
    return all(
        series.verify_gf_derivative(alpha, beta, m, order) for m in range(mmax + 1)
    )


def rodrigues_ok(alpha: Fraction, beta: Fraction, nmax: int = 6) -> bool:
    for n in range(nmax + 1):
        if not operators.verify_rodrigues_first(alpha, beta, n):
            return False
        if not operators.verify_rodrigues_second(alpha, beta, n):
            return False
    return True


def bell_operator_ok(alpha: Fraction, beta: Fraction, nmax: int = 5) -> bool:
    lams = (Fraction(0), Fraction(1), alpha / beta)
    for lam in lams:
        for n in range(nmax + 1):
            if not operators.verify_bell_operator(alpha, beta, lam, n):
                return False
    return True


def rebase_roundtrip_ok(source, target, nmax: int = 6) -> bool:
    p_from = family.FamilyParams(*source)
    p_to = family.FamilyParams(*target)
    for n in range(nmax + 1):
        coeffs = family.rebase(p_from, p_to, n)
        rebuilt = QPolynomial.zero()
        for j, c in enumerate(coeffs):
            rebuilt = rebuilt + c * family.poly(p_to, j)
        if rebuilt != family.poly(p_from, n):
            return False
    return True


def real_zeros_ok(alpha: Fraction, beta: Fraction, nmax_main: int = 20) -> tuple[bool, int]:
    """Real-rootedness over the degrees the region classification asserts.

    Returns (ok, number of asserted degrees); zero asserted degrees means
    the parameters carry no claim.
    """
    region = zeros.classify_region(alpha, beta)
    if region == zeros.REGION_MAIN:
        degrees = range(1, nmax_main + 1)
    elif region == zeros.REGION_SECONDARY:
        degrees = range(1, math.ceil(alpha) + 1)
    else:
        return True, 0
    params = family.FamilyParams(alpha, beta)
    checked = 0
    for n in degrees:
        checked += 1
        if not zeros.all_roots_real(family.poly(params, n)):
            return False, checked
    return True, checked


def log_concave_ok(alpha: Fraction, beta: Fraction, nmax: int = 12) -> bool:
    """Newton inequality plus entrywise nonnegativity on the hypothesis set."""
    params = family.FamilyParams(alpha, beta)
    rows = stirling._triangle(alpha, beta, nmax)
    for n in range(nmax + 1):
        if any(v < 0 for v in rows[n]):
            return False
    for n in range(2, nmax + 1):
        if not zeros.check_newton_logconcave(params, n):
            return False
    return True


def _dobinski_close(params, n: int, scale: int = 1) -> bool:
    # tolerance is relative: family values on this grid reach ~1e10, where
    # an absolute 1e-10 would be below double-precision resolution
    for x in DOBINSKI_POINTS:
        approx = family.eval_dobinski(params, n, x, DOBINSKI_EPS) / scale
        exact = float(family.poly(params, n)(x) / scale)
        if abs(approx - exact) > DOBINSKI_TOL * max(1.0, abs(exact)):
            return False
    return True


def specializations_ok(nmax: int = 8) -> list[CheckResult]:
    results = []

    for name, params in (("U", family.U_PARAMS), ("V", family.V_PARAMS)):
        ok = all(_dobinski_close(params, n) for n in range(nmax + 1))
        ok = ok and stirling.verify_rbell_connection(
            params.alpha, params.beta, 1, nmax
        )
        if name == "U":
            ok = ok and u_bell_display_ok(nmax)
        else:
            # coefficient j is (1/3**j) * sum C(k,j) |s(n,k)| (3/2)**k
            for n in range(nmax + 1):
                coeffs = family.to_bell_basis(params, n)
                for j in range(n + 1):
                    expected = Fraction(1, 3**j) * sum(
                        math.comb(k, j)
                        * abs(stirling.stirling1(n, k))
                        * Fraction(3, 2) ** k
                        for k in range(j, n + 1)
                    )
                    if coeffs[j] != expected:
                        ok = False
        results.append(CheckResult("specializations", f"family={name} n<={nmax}", ok))

    for lam in (Fraction(0), Fraction(1), Fraction(5, 2)):
        lparams = family.laguerre_params(lam)
        ok = True
        for n in range(nmax + 1):
            if not _dobinski_close(lparams, n, scale=factorial(n)):
                ok = False
            lag = family.family_laguerre(lam, n)
            if lag * Fraction(factorial(n)) != family.poly(lparams, n):
                ok = False
            coeffs = family.to_bell_basis(lparams, n)
            for j in range(n + 1):
                expected = sum(
                    math.comb(k, j)
                    * abs(stirling.stirling1(n, k))
                    * (lam + 1) ** (k - j)
                    for k in range(j, n + 1)
                )
                if coeffs[j] != expected:
                    ok = False
        ok = ok and stirling.verify_rbell_connection(
            lparams.alpha, lparams.beta, 1, nmax
        )
        results.append(
            CheckResult("specializations", f"family=laguerre lambda={lam} n<={nmax}", ok)
        )

    for m in (1, 2, 3):
        ok = True
        a_seq = [rising(m, j) for j in range(1, nmax + 1)]
        for n in range(nmax + 1):
            p = family.family_assoc_lah(m, n)
            for k in range(n + 1):
                if p.coeff(k) != stirling.partial_bell(n, k, a_seq):
                    ok = False
            coeffs = family.to_bell_basis(
                family.FamilyParams(Fraction(0), Fraction(-m)), n
            )
            for j in range(n + 1):
                if coeffs[j] != Fraction(m) ** j * abs(stirling.stirling1(n, j)):
                    ok = False
            if not _dobinski_close(family.FamilyParams(Fraction(0), Fraction(-m)), n):
                ok = False
        results.append(
            CheckResult("specializations", f"family=assoc-lah m={m} n<={nmax}", ok)
        )

    ok = True
    for n in range(7):
        for k in range(n + 1):
            if stirling._triangle(Fraction(-2), Fraction(-1), n)[n][k] != stirling.rlah(
                1, n + 1, k + 1
            ):
                ok = False
    results.append(CheckResult("specializations", "r-lah-remark r=1 n<=6", ok))
    return results


# ---------------------------------------------------------------------------
# whole-grid run


def run_all() -> tuple[list[CheckResult], list[str]]:
    """Every identity batch on the whole built-in grid.

    Returns (results, notes); notes carry resolved conventions that are
    worth printing but are not pass/fail lines.
    """
    results: list[CheckResult] = []
    notes: list[str] = []

    for a, b in GRID:
        results.append(CheckResult("triple-route", f"{_pair(a, b)} n<=12", triple_route_ok(a, b)))
    for a, b in GRID:
        results.append(CheckResult("first-values", _pair(a, b), first_values_ok(a, b)))
    for a, b in GRID:
        results.append(
            CheckResult("recurrence-chain", f"{_pair(a, b)} n<=12", recurrence_chain_ok(a, b))
        )
    for a, b in GRID:
        results.append(
            CheckResult("inverse-pair", f"{_pair(a, b)} nmax=10", inverse_pair_ok(a, b))
        )
    for a, b in GRID:
        results.append(
            CheckResult("bell-basis", f"{_pair(a, b)} n<=10", bell_basis_ok(a, b))
        )
    results.append(
        CheckResult("bell-basis", "alpha=-1/2 beta=-1/2 printed-display n<=10", u_bell_display_ok())
    )
    for a, b in GRID:
        results.append(
            CheckResult("rbell", f"{_pair(a, b)} r<=3 n<=8", rbell_ok(a, b))
        )
    for a, b in GRID:
        results.append(
            CheckResult("addition", f"{_pair(a, b)} n+m<=10", addition_ok(a, b))
        )
    for a, b in GRID:
        results.append(
            CheckResult("gf-derivative", f"{_pair(a, b)} m<=5 order=10", gf_derivative_ok(a, b))
        )
    for a, b in GRID:
        results.append(
            CheckResult("rodrigues", f"{_pair(a, b)} n<=6", rodrigues_ok(a, b))
        )
    for a, b in GRID:
        results.append(
            CheckResult("bell-operator", f"{_pair(a, b)} n<=5", bell_operator_ok(a, b))
        )
    for source, target in REBASE_PAIRS:
        results.append(
            CheckResult(
                "rebase",
                f"from=({source[0]},{source[1]}) to=({target[0]},{target[1]}) n<=6",
                rebase_roundtrip_ok(source, target),
            )
        )
    for a, b in GRID:
        report = family.lah_rebase_report(family.FamilyParams(a, b), 6)
        results.append(CheckResult("lah-rebase", f"{_pair(a, b)} n<=6", report.ok))
    notes.append(
        "NOTE lah-rebase sign: coefficient k carries (-1)**k (the summation index)"
    )
    for a, b, a2, b2 in COMPOSITION_CASES:
        report = stirling.composition_report(a, b, a2, b2, 6)
        results.append(
            CheckResult(
                "composition",
                f"{_pair(a, b)} alpha2={a2} beta2={b2} n<=6",
                report.ok,
            )
        )
    notes.append(
        "NOTE composition sign: (-1)**j with j the summation index, both identities"
    )
    for a, b in GRID:
        params = family.FamilyParams(a, b)
        ok = all(family.rising_expansion(params, n).equal for n in range(11))
        results.append(CheckResult("rising-expansion", f"{_pair(a, b)} n<=10", ok))
    for a, b in GRID:
        ok, checked = real_zeros_ok(a, b)
        if checked:
            results.append(
                CheckResult(
                    "real-zeros",
                    f"{_pair(a, b)} region={zeros.classify_region(a, b)} degrees={checked}",
                    ok,
                )
            )
    for a, b in GRID:
        if a <= 0 and b < 0:
            results.append(
                CheckResult("log-concave", f"{_pair(a, b)} n<=12", log_concave_ok(a, b))
            )
    results.extend(specializations_ok())
    return results, notes


# ---------------------------------------------------------------------------
# single-identity entry point for the CLI

ALIASES = {
    "triple": "triple-route",
    "t2": "gf-derivative",
    "t4": "rodrigues",
    "p2": "bell-basis",
    "p3": "rbell",
    "p4": "rebase",
    "p4-lah": "lah-rebase",
    "p5": "inverse-pair",
    "c1": "log-concave",
    "c3": "addition",
    "c4": "rising-expansion",
    "lemma1": "recurrence-chain",
    "t3": "real-zeros",
    "bell-op": "bell-operator",
    "families": "specializations",
}

IDENTITY_NAMES = (
    "triple-route",
    "first-values",
    "recurrence-chain",
    "inverse-pair",
    "bell-basis",
    "rbell",
    "addition",
    "gf-derivative",
    "rodrigues",
    "bell-operator",
    "rebase",
    "lah-rebase",
    "composition",
    "rising-expansion",
    "real-zeros",
    "log-concave",
    "specializations",
)


def single_results(
    identity: str,
    *,
    alpha=None,
    beta=None,
    alpha2=None,
    beta2=None,
    lam=None,
    r=None,
    m=None,
    nmax=None,
    order=None,
) -> tuple[list[CheckResult], list[str]]:
    """Run one identity, either on explicit parameters or over the grid.

    Giving only --alpha/--beta narrows the run to that pair; leaving both
    out runs the built-in grid.  Granularity is per n/m/r for a single
    pair and one aggregated line per pair on the grid.
    """
    name = ALIASES.get(identity, identity)
    if name not in IDENTITY_NAMES:
        known = ", ".join(IDENTITY_NAMES)
        raise SuiteUsageError(f"unknown identity {identity!r}; choose from: {known}")
    if (alpha is None) != (beta is None):
        raise SuiteUsageError("provide both --alpha and --beta, or neither")
    if beta is not None and Fraction(beta) == 0:
        raise SuiteUsageError("beta must be nonzero")
    single = alpha is not None
    pairs = ((Fraction(alpha), Fraction(beta)),) if single else GRID
    if nmax is not None and nmax < 0:
        raise SuiteUsageError(f"nmax must be >= 0, got {nmax}")
    if name == "specializations":
        return specializations_ok(8 if nmax is None else nmax), []
    nmax = 10 if nmax is None else nmax

    results: list[CheckResult] = []
    notes: list[str] = []

    if name == "rebase":
        if single:
            if alpha2 is None or beta2 is None:
                raise SuiteUsageError("rebase needs --alpha2 and --beta2 for the target pair")
            cases = (((Fraction(alpha), Fraction(beta)), (Fraction(alpha2), Fraction(beta2))),)
        else:
            if alpha2 is not None or beta2 is not None:
                raise SuiteUsageError("a rebase target also needs --alpha and --beta")
            cases = REBASE_PAIRS
        for source, target in cases:
            if target[1] == 0 or source[1] == 0:
                raise SuiteUsageError("beta values must be nonzero")
            results.append(
                CheckResult(
                    "rebase",
                    f"from=({source[0]},{source[1]}) to=({target[0]},{target[1]}) n<={nmax}",
                    rebase_roundtrip_ok(source, target, nmax),
                )
            )
        return results, notes

    if name == "composition":
        if single:
            if alpha2 is None or beta2 is None:
                raise SuiteUsageError(
                    "composition needs --alpha2 and --beta2 for the second pair"
                )
            cases = ((Fraction(alpha), Fraction(beta), Fraction(alpha2), Fraction(beta2)),)
        else:
            if alpha2 is not None or beta2 is not None:
                raise SuiteUsageError("a composition target also needs --alpha and --beta")
            cases = COMPOSITION_CASES
        for a, b, a2, b2 in cases:
            if b2 == 0:
                raise SuiteUsageError("beta2 must be nonzero")
            report = stirling.composition_report(a, b, a2, b2, nmax)
            results.append(
                CheckResult(
                    "composition",
                    f"{_pair(a, b)} alpha2={a2} beta2={b2} n<={nmax}",
                    report.ok,
                )
            )
            notes.append(
                f"NOTE composition sign for {_pair(a, b)} alpha2={a2} beta2={b2}:"
                f" confirmed {report.confirmed_sign}"
            )
        return results, notes

    for a, b in pairs:
        if name == "triple-route":
            results.append(
                CheckResult(name, f"{_pair(a, b)} n<={nmax}", triple_route_ok(a, b, nmax))
            )
        elif name == "first-values":
            results.append(CheckResult(name, _pair(a, b), first_values_ok(a, b)))
        elif name == "recurrence-chain":
            results.append(
                CheckResult(name, f"{_pair(a, b)} n<={nmax}", recurrence_chain_ok(a, b, nmax))
            )
        elif name == "inverse-pair":
            results.append(
                CheckResult(name, f"{_pair(a, b)} nmax={nmax}", inverse_pair_ok(a, b, nmax))
            )
        elif name == "bell-basis":
            results.append(
                CheckResult(name, f"{_pair(a, b)} n<={nmax}", bell_basis_ok(a, b, nmax))
            )
        elif name == "rbell":
            rs = (r,) if r is not None else (0, 1, 2, 3)
            for rr in rs:
                if rr < 0:
                    raise SuiteUsageError(f"r must be >= 0, got {rr}")
                results.append(
                    CheckResult(
                        name,
                        f"{_pair(a, b)} r={rr} n<={nmax}",
                        stirling.verify_rbell_connection(a, b, rr, nmax),
                    )
                )
        elif name == "addition":
            results.append(
                CheckResult(name, f"{_pair(a, b)} n+m<={nmax}", addition_ok(a, b, nmax))
            )
        elif name == "gf-derivative":
            use_order = order if order is not None else nmax + 2
            ms = (m,) if m is not None else tuple(range(min(nmax, 5) + 1))
            if single:
                for mm in ms:
                    if not 0 <= mm <= use_order:
                        raise SuiteUsageError(f"need 0 <= m <= order, got m={mm}")
                    results.append(
                        CheckResult(
                            name,
                            f"{_pair(a, b)} m={mm} order={use_order}",
                            series.verify_gf_derivative(a, b, mm, use_order),
                        )
                    )
            else:
                results.append(
                    CheckResult(
                        name,
                        f"{_pair(a, b)} m<={max(ms)} order={use_order}",
                        all(series.verify_gf_derivative(a, b, mm, use_order) for mm in ms),
                    )
                )
        elif name == "rodrigues":
            cap = nmax
            if single:
                for n in range(cap + 1):
                    ok = operators.verify_rodrigues_first(a, b, n) and (
                        operators.verify_rodrigues_second(a, b, n)
                    )
                    results.append(CheckResult(name, f"{_pair(a, b)} n={n}", ok))
            else:
                results.append(
                    CheckResult(name, f"{_pair(a, b)} n<={cap}", rodrigues_ok(a, b, cap))
                )
        elif name == "bell-operator":
            cap = nmax
            lams = (Fraction(lam),) if lam is not None else (Fraction(0), Fraction(1), a / b)
            if single:
                for lv in lams:
                    ok = all(
                        operators.verify_bell_operator(a, b, lv, n) for n in range(cap + 1)
                    )
                    results.append(
                        CheckResult(name, f"{_pair(a, b)} lambda={lv} n<={cap}", ok)
                    )
            else:
                results.append(
                    CheckResult(name, f"{_pair(a, b)} n<={cap}", bell_operator_ok(a, b, cap))
                )
        elif name == "lah-rebase":
            report = family.lah_rebase_report(family.FamilyParams(a, b), nmax)
            results.append(CheckResult(name, f"{_pair(a, b)} n<={nmax}", report.ok))
        elif name == "rising-expansion":
            params = family.FamilyParams(a, b)
            ok = all(family.rising_expansion(params, n).equal for n in range(nmax + 1))
            results.append(CheckResult(name, f"{_pair(a, b)} n<={nmax}", ok))
        elif name == "real-zeros":
            ok, checked = real_zeros_ok(a, b, nmax_main=max(nmax, 1))
            region = zeros.classify_region(a, b)
            results.append(
                CheckResult(name, f"{_pair(a, b)} region={region} degrees={checked}", ok)
            )
        elif name == "log-concave":
            if a > 0 or b >= 0:
                if single:
                    raise SuiteUsageError(
                        "log-concavity is only claimed for alpha <= 0 and beta < 0"
                    )
                continue
            results.append(
                CheckResult(name, f"{_pair(a, b)} n<={max(nmax, 2)}", log_concave_ok(a, b, max(nmax, 2)))
            )

    if name == "lah-rebase":
        notes.append(
            "NOTE lah-rebase sign: coefficient k carries (-1)**k (the summation index)"
        )
    return results, notes
