"""Division by (x - c)^2: determinant SMOP, tri-band factorizations, origin analogues."""

import pytest

from opoly import families
from opoly import functional as fa
from opoly.errors import DegenerateParameter, NotQuasiDefinite
from opoly.orthopoly import smop_from_moments
from opoly.quadratic import (
    assoc_inverse_factorization,
    assoc_inverse_factorization_check,
    g_matrix_check,
    quadratic_connection,
    quadratic_connection_check,
    quadratic_factorization,
    quadratic_factorization_check,
    quadratic_geronimus_smop,
    quadratic_recurrence,
)
from opoly.rational import rat

PARAMS = (
    (families.chebyshev_u(24), rat(1), rat(1), rat(1, 5)),
    (families.chebyshev_t(24), rat(3), rat(1), rat(1, 5)),
    (families.laguerre(0, 24), rat(-1), rat(1), rat(1, 5)),
)


def test_determinant_smop_equals_gram_schmidt_on_the_transform():
    for u, c, m0, m1 in PARAMS:
        system, d_star = quadratic_geronimus_smop(u, c, m0, m1, 8)
        v = fa.quadratic_geronimus(u, c, m0, m1)
        _, direct = smop_from_moments(v, 8)
        assert system.polys == direct.polys
        assert system.norms == direct.norms
        assert set(d_star) == set(range(2, 10))


def test_degree_one_polynomial_carries_the_mass_ratio():
    from opoly.poly import X

    u = families.chebyshev_u(16)
    system, _ = quadratic_geronimus_smop(u, 1, rat(2), rat(1, 5), 2)
    assert system.polys[1] == X - rat(1, 10)


def test_quadratic_recurrence_matches_gram_schmidt():
    for u, c, m0, m1 in PARAMS:
        rc = quadratic_recurrence(u, c, m0, m1, 8)
        v = fa.quadratic_geronimus(u, c, m0, m1)
        direct, _ = smop_from_moments(v, 8)
        assert rc == direct


def test_connection_coefficients_connect():
    from opoly.orthopoly import polys_from_recurrence

    for u, c, m0, m1 in PARAMS:
        alpha1, alpha2, _ = quadratic_connection(u, c, m0, m1, 8)
        system, _ = quadratic_geronimus_smop(u, c, m0, m1, 8)
        rc, _ = smop_from_moments(u, 9)
        base = polys_from_recurrence(rc, 8)
        for n in range(2, 9):
            assert system.polys[n] == base[n] + alpha1[n] * base[n - 1] + alpha2[n] * base[n - 2]


def test_zero_mass_is_rejected():
    u = families.chebyshev_u(16)
    with pytest.raises(DegenerateParameter):
        quadratic_geronimus_smop(u, 1, 0, 1, 4)


def test_known_degenerate_instance_trips_the_d_star_guard():
    # chebyshev-u, c = 1, m0 = 1, m1 = 0: S_1(1) = 0 and T_1(1) = 0 make
    # the level-two determinant vanish
    u = families.chebyshev_u(16)
    with pytest.raises(NotQuasiDefinite) as info:
        quadratic_geronimus_smop(u, 1, 1, 0, 4)
    assert info.value.level == 2
    assert info.value.guard == "d_star"
    with pytest.raises(NotQuasiDefinite):
        quadratic_connection(u, 1, 1, 0, 4)


def test_connection_check_passes():
    for u, c, m0, m1 in PARAMS:
        report = quadratic_connection_check(u, c, m0, m1, 8)
        assert report.passed
        assert report.identity == "conex2"


def test_factorization_check_passes_and_reports_blocks():
    for u, c, m0, m1 in PARAMS:
        report = quadratic_factorization_check(u, c, m0, m1, 8)
        assert report.passed
        assert report.identity == "propLUinversa"
        assert report.details["ul_block"] == 6
        assert report.details["lu_block"] == 7


def test_factorization_structure():
    u, c, m0, m1 = PARAMS[0]
    lower, upper = quadratic_factorization(u, c, m0, m1, 8)
    assert lower.size == 8 and upper.size == 8
    assert len(lower.sub1) == 7 and len(lower.sub2) == 6
    band = upper.to_band()
    for n in range(6):
        assert band.entry(n, n + 2) == 1
    with pytest.raises(ValueError):
        quadratic_factorization(u, c, m0, m1, 1)


def test_origin_factorization_and_g_matrix():
    for u in (families.chebyshev_u(28), families.chebyshev_t(28), families.laguerre(0, 28)):
        report = assoc_inverse_factorization_check(u, 1, 8)
        assert report.passed
        assert report.identity == "relationlu"
        g_report = g_matrix_check(u, 8)
        assert g_report.passed
        assert g_report.identity == "g-matrix"


def test_origin_factorization_returns_tribands():
    u = families.chebyshev_u(28)
    lower, upper = assoc_inverse_factorization(u, 1, 6)
    assert lower.size == 6 and upper.size == 6
    # its first subdiagonal carries the inverse connection coefficients,
    # which vanish for a symmetric family
    assert all(x == 0 for x in lower.sub1)
    assert all(x != 0 for x in lower.sub2)
