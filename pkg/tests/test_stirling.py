import random
from fractions import Fraction
from math import comb, factorial

import pytest

from gstirling.qpoly import QPolynomial
from gstirling.rationals import rising
from gstirling.stirling import (
    composition_report,
    gstirling_egf,
    gstirling_explicit,
    gstirling_inverse,
    gstirling_table,
    lah,
    partial_bell,
    partial_r_bell,
    rlah,
    stirling1,
    stirling2,
    verify_composition,
    verify_rbell_connection,
)

F = Fraction
PAIRS = [
    (F("-1/2"), F("-1/2")),
    (F("-3/2"), F("-1/2")),
    (F(1), F(1)),
    (F(0), F(-1)),
    (F("1/3"), F(-2)),
    (F(2), F("1/2")),
]


def _partitions_into_blocks(n, k):
    """Count set partitions of {1..n} into exactly k blocks by enumerating
    restricted growth strings (independent of any recurrence)."""
    if n == 0:
        return 1 if k == 0 else 0
    count = 0

    def grow(pos, used):
        nonlocal count
        if pos == n:
            count += used == k
            return
        for _ in range(used):  # put the next element into an existing block
            grow(pos + 1, used)
        grow(pos + 1, used + 1)  # or open a new block

    grow(1, 1)
    return count


def test_partition_oracle_sanity():
    # Bell numbers 1, 1, 2, 5, 15, 52 as row sums of the oracle
    bells = [sum(_partitions_into_blocks(n, k) for k in range(n + 1)) for n in range(6)]
    assert bells == [1, 1, 2, 5, 15, 52]


@pytest.mark.parametrize("n", range(8))
def test_stirling2_matches_partition_enumeration(n):
    for k in range(n + 1):
        assert stirling2(n, k) == _partitions_into_blocks(n, k)


def test_stirling2_known_value():
    assert stirling2(4, 2) == 7


@pytest.mark.parametrize("n", range(9))
def test_stirling1_matches_falling_factorial_expansion(n):
    # falling(x, n) = sum_k s(n, k) x^k, an oracle independent of the recurrence
    p = QPolynomial.one()
    for i in range(n):
        p = p * QPolynomial((-i, 1))
    for k in range(n + 1):
        assert stirling1(n, k) == p.coeff(k)


def test_stirling_known_values_and_validation():
    assert stirling1(3, 1) == 2
    assert stirling1(5, 5) == 1 and stirling2(5, 5) == 1
    for fn in (stirling1, stirling2):
        with pytest.raises(ValueError):
            fn(3, 4)
        with pytest.raises(ValueError):
            fn(-1, 0)


# ---------------------------------------------------------------------------
# the central triangle


def test_explicit_base_cases():
    assert gstirling_explicit(F("5/7"), F(-2), 0, 0) == 1
    assert gstirling_explicit(1, 1, 2, 1) == 2
    with pytest.raises(ValueError):
        gstirling_explicit(1, 1, 2, 3)


@pytest.mark.parametrize("alpha,beta", PAIRS)
def test_diagonal_and_edges(alpha, beta):
    table = gstirling_table(alpha, beta, 8)
    for n in range(9):
        assert table.value(n, n) == (-beta) ** n
        assert table.value(n, 0) == rising(-alpha, n)
    assert table.row(1) == (-alpha, -beta)


def test_table_row_two_at_one_one():
    # recurrence from row 1 = [-1, -1]; the diagonal entry is (-beta)^2 = 1
    assert gstirling_table(1, 1, 2).row(2) == (0, 2, 1)


@pytest.mark.parametrize("alpha,beta", PAIRS)
def test_three_route_agreement(alpha, beta):
    table = gstirling_table(alpha, beta, 8)
    egf = gstirling_egf(alpha, beta, 8)
    for n in range(9):
        for k in range(n + 1):
            assert table.value(n, k) == egf[n][k]
            assert table.value(n, k) == gstirling_explicit(alpha, beta, n, k)


def test_table_bounds_checked():
    table = gstirling_table(1, 1, 3)
    with pytest.raises(ValueError):
        table.value(4, 0)
    with pytest.raises(ValueError):
        table.row(5)


# ---------------------------------------------------------------------------
# inverse triangle


def test_inverse_base_and_validation():
    assert gstirling_inverse(F("2/3"), F(-2), 0, 0) == 1
    with pytest.raises(ValueError):
        gstirling_inverse(1, 0, 2, 1)


def test_inverse_of_diagonal_family():
    # at (0, 1) the triangle is diagonal with entries (-1)^n, which is its
    # own matrix inverse: the inverse triangle has the same diagonal
    for n in range(5):
        for k in range(n + 1):
            expected = F(-1) ** n if k == n else 0
            assert gstirling_inverse(0, 1, n, k) == expected


@pytest.mark.parametrize("alpha,beta", PAIRS)
def test_inverse_matrix_identity(alpha, beta):
    nmax = 8
    table = gstirling_table(alpha, beta, nmax)
    for n in range(nmax + 1):
        for k in range(n + 1):
            acc = sum(
                gstirling_inverse(alpha, beta, n, j) * table.value(j, k)
                for j in range(k, n + 1)
            )
            assert acc == (1 if n == k else 0)


# ---------------------------------------------------------------------------
# Lah and r-Lah numbers


def test_lah_values_and_closed_form():
    assert lah(3, 2) == 6
    for n in range(9):
        assert lah(n, n) == 1
        for k in range(n + 1):
            expected = comb(n - 1, k - 1) * factorial(n) // factorial(k) if k else (n == 0)
            assert lah(n, k) == expected


def test_rlah_closed_form():
    for r in range(4):
        for n in range(r, r + 7):
            for k in range(r, n + 1):
                if k + r == 0:  # r = 0, k = 0: only the empty product survives
                    expected = 1 if n == 0 else 0
                else:
                    expected = F(factorial(n - r), factorial(k - r)) * comb(
                        n + r - 1, k + r - 1
                    )
                assert rlah(r, n, k) == expected


def test_rlah_matches_reciprocal_laguerre_table():
    # the (-2, -1) triangle lists the r = 1 numbers with both indices shifted
    table = gstirling_table(-2, -1, 6)
    for n in range(7):
        for k in range(n + 1):
            assert table.value(n, k) == rlah(1, n + 1, k + 1)


def test_rlah_validation():
    with pytest.raises(ValueError):
        rlah(2, 3, 1)  # k < r
    with pytest.raises(ValueError):
        lah(2, 3)
    with pytest.raises(ValueError):
        rlah(-1, 2, 1)


# ---------------------------------------------------------------------------
# partial (r-)Bell polynomials


def test_partial_bell_diagonal_is_power():
    rng = random.Random(7)
    for n in range(1, 7):
        a = [F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]
        if a[0] == 0:
            a[0] = F(1)
        assert partial_bell(n, n, a) == a[0] ** n


def test_partial_r_bell_constant_term():
    b = [F(3, 2)] + [F(1)] * 4
    for r in range(4):
        assert partial_r_bell(r, 0, 0, [], b) == F(3, 2) ** r


def test_partial_r_bell_matches_triangle_instance():
    a = [rising(F(1, 2), j) for j in range(1, 7)]
    b = [rising(F(1, 2), j) for j in range(7)]
    table = gstirling_table(F(-1, 2), F(-1, 2), 6)
    for n in range(7):
        for k in range(n + 1):
            assert partial_r_bell(1, n, k, a, b) == table.value(n, k)


def test_partial_bell_rejects_short_sequences():
    with pytest.raises(ValueError):
        partial_bell(4, 2, [1, 2, 3])
    with pytest.raises(ValueError):
        partial_r_bell(2, 3, 1, [1, 2, 3], [1, 2, 3])


@pytest.mark.parametrize(
    "alpha,beta,r,nmax",
    [
        (F(2), F(-1), 0, 6),
        (F("-1/2"), F("-1/2"), 1, 8),
        (F("1/3"), F(-2), 3, 6),
    ],
)
def test_rbell_connection(alpha, beta, r, nmax):
    assert verify_rbell_connection(alpha, beta, r, nmax)


def test_rbell_connection_rejects_zero_beta():
    with pytest.raises(ValueError):
        verify_rbell_connection(1, 0, 1, 4)


# ---------------------------------------------------------------------------
# composition of triangles


def test_composition_trivial_case():
    report = composition_report(F("2/3"), F(-2), F("2/3"), F(-2), 6)
    assert report.ok


@pytest.mark.parametrize(
    "case",
    [
        (F(1), F(-1), F(0), F(-2)),
        (F("-1/2"), F("-1/2"), F(0), F(-1)),
        (F(2), F(3), F(1), F(1)),
    ],
)
def test_composition_cases(case):
    assert verify_composition(*case, 6)


def test_composition_sign_resolution():
    # a nondegenerate case separates the two readings of the sign exponent
    report = composition_report(F(1), F(-1), F(0), F(-2), 6)
    assert report.index_sign_ok
    assert not report.outer_sign_ok
    assert report.confirmed_sign == "summation-index"
    assert report.failures == ()


def test_composition_rejects_zero_beta2():
    with pytest.raises(ValueError):
        verify_composition(1, 1, 1, 0, 4)
