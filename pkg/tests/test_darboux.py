"""Bidiagonal factorizations of J - cI and the degree-one transformation checks."""

import pytest

from opoly import families
from opoly import functional as fa
from opoly.darboux import (
    christoffel_connection_check,
    christoffel_lu,
    geronimus_connection_check,
    geronimus_ul,
)
from opoly.errors import DegenerateParameter, ZeroPivot
from opoly.matrices import common_reliable, equal_on_block, mat_multiply, shifted
from opoly.orthopoly import (
    jacobi_matrix,
    recurrence_from_jacobi,
    smop_from_moments,
)
from opoly.poly import X
from opoly.rational import rat


def test_christoffel_lu_reproduces_the_matrix_and_the_transform():
    u = families.chebyshev_u(24)
    rc, _ = smop_from_moments(u, 12)
    j = jacobi_matrix(rc, 12)
    lower, upper, transformed = christoffel_lu(j, rat(1))
    product = mat_multiply(lower.to_band(), upper.to_band())
    assert equal_on_block(product, shifted(j, 1), common_reliable(product, j))
    # the transformed matrix is the Jacobi matrix of (x - 1) u
    tilde_rc, _ = smop_from_moments(fa.multiply_poly(u, X - 1), 11)
    assert recurrence_from_jacobi(transformed) == tilde_rc


def test_christoffel_lu_chebyshev_u_closed_forms():
    u = families.chebyshev_u(20)
    rc, _ = smop_from_moments(u, 10)
    lower, upper, _ = christoffel_lu(jacobi_matrix(rc, 10), rat(1))
    for n in range(10):
        assert upper.diag[n] == families.chebyshev_u_christoffel_beta(n)
    for n in range(1, 10):
        assert lower.sub[n - 1] == families.chebyshev_u_christoffel_ell(n)


def test_christoffel_lu_pivot_vanishes_at_a_zero_of_some_polynomial():
    # P_1(0) = 0 for the symmetric family, so c = 0 dies immediately
    u = families.chebyshev_u(12)
    rc, _ = smop_from_moments(u, 6)
    with pytest.raises(ZeroPivot) as info:
        christoffel_lu(jacobi_matrix(rc, 6), 0)
    assert info.value.index == 0
    # P_2(1/2) = 0: the pivot at step 1 vanishes
    with pytest.raises(ZeroPivot) as info:
        christoffel_lu(jacobi_matrix(rc, 6), rat(1, 2))
    assert info.value.index == 1


def test_geronimus_ul_reproduces_the_matrix_and_the_transform():
    u = families.chebyshev_u(20)
    c, m0 = rat(1), rat(-1, 2)
    rc, _ = smop_from_moments(u, 10)
    j = jacobi_matrix(rc, 10)
    lower, upper, transformed = geronimus_ul(j, c, u.moments[0] / m0)
    product = mat_multiply(upper.to_band(), lower.to_band())
    assert equal_on_block(product, shifted(j, c), common_reliable(product, j))
    hat_rc, _ = smop_from_moments(fa.geronimus(u, c, m0), 10)
    assert recurrence_from_jacobi(transformed) == hat_rc


def test_geronimus_ul_chebyshev_u_hand_values():
    u = families.chebyshev_u(12)
    rc, _ = smop_from_moments(u, 6)
    lower, upper, _ = geronimus_ul(jacobi_matrix(rc, 6), rat(1), rat(1) / rat(-1, 2))
    assert upper.diag[0] == -2
    assert lower.sub[0] == 1
    assert upper.diag[1] == rat(1, 4)
    assert lower.sub[1] == rat(-5, 4)


def test_geronimus_ul_laguerre_closed_forms():
    for alpha in (rat(0), rat(1, 2)):
        u = families.laguerre(alpha, 20)
        rc, _ = smop_from_moments(u, 10)
        lower, upper, transformed = geronimus_ul(
            jacobi_matrix(rc, 10), 0, u.moments[0] * (alpha + 1)
        )
        for n in range(10):
            assert upper.diag[n] == families.laguerre_geronimus_beta(alpha, n)
        for n in range(1, 10):
            assert lower.sub[n - 1] == families.laguerre_geronimus_ell(n)
        # the transform has the recurrence of the weight with parameter
        # lowered by one: b_n = 2n + alpha + 1, a_n = n (n + alpha)
        hat = recurrence_from_jacobi(transformed)
        for n in range(10):
            assert hat.b[n] == 2 * n + alpha + 1
        for n in range(1, 10):
            assert hat.a[n - 1] == n * (n + alpha)


def test_geronimus_ul_rejects_a_zero_corner():
    u = families.chebyshev_u(12)
    rc, _ = smop_from_moments(u, 6)
    with pytest.raises(DegenerateParameter):
        geronimus_ul(jacobi_matrix(rc, 6), 1, 0)


def test_geronimus_ul_pivot_failure_is_typed():
    # c = 1, beta_0 = b_0 - c = -1 makes ell_1 = b_0 - c - beta_0 = 0
    u = families.chebyshev_u(12)
    rc, _ = smop_from_moments(u, 6)
    with pytest.raises(ZeroPivot) as info:
        geronimus_ul(jacobi_matrix(rc, 6), 1, rc.b_at(0) - 1)
    assert info.value.index == 1


def test_connection_check_passes_on_all_families():
    assert christoffel_connection_check(families.chebyshev_u(24), rat(1), 10).passed
    assert christoffel_connection_check(families.chebyshev_t(24), rat(3), 10).passed
    assert christoffel_connection_check(families.laguerre(0, 24), rat(-1), 10).passed


def test_geronimus_connection_check_passes_on_known_parameters():
    assert geronimus_connection_check(
        families.chebyshev_u(24), rat(1), rat(-1, 2), 10
    ).passed
    assert geronimus_connection_check(families.laguerre(0, 24), 0, 1, 10).passed
    report = geronimus_connection_check(families.laguerre(rat(1, 2), 24), 0, rat(2, 3), 10)
    assert report.passed
    assert report.identity == "geronimus-connection"
