"""Moments to recurrence and back: Gram-Schmidt, Jacobi truncations, Hankel minors."""

import pytest

from opoly import families
from opoly import functional as fa
from opoly.errors import NotQuasiDefinite, TruncationExhausted
from opoly.functional import MomentFunctional
from opoly.orthopoly import (
    OrthogonalSystem,
    RecurrenceCoefficients,
    expand_in_basis,
    hankel_minor,
    jacobi_matrix,
    moments_from_jacobi,
    polys_from_recurrence,
    recurrence_from_jacobi,
    smop_from_moments,
)
from opoly.poly import ONE_POLY, X
from opoly.rational import rat


def test_recurrence_coefficients_validation_and_indexing():
    rc = RecurrenceCoefficients((1, 2, 3), (4, 5))
    assert rc.length == 3
    assert rc.b_at(2) == 3
    assert rc.a_at(1) == 4 and rc.a_at(2) == 5
    with pytest.raises(IndexError):
        rc.a_at(0)
    with pytest.raises(ValueError):
        RecurrenceCoefficients((1, 2), (1, 2))
    with pytest.raises(ValueError):
        RecurrenceCoefficients((), ())


def test_recurrence_shift_truncate_corecursive():
    rc = RecurrenceCoefficients((1, 2, 3), (4, 5))
    assert rc.shifted(1) == RecurrenceCoefficients((2, 3), (5,))
    assert rc.truncated(2) == RecurrenceCoefficients((1, 2), (4,))
    assert rc.corecursive(10) == RecurrenceCoefficients((11, 2, 3), (4, 5))
    with pytest.raises(TruncationExhausted):
        rc.shifted(3)
    with pytest.raises(TruncationExhausted):
        rc.truncated(4)


def test_orthogonal_system_validation():
    with pytest.raises(ValueError):
        OrthogonalSystem((X,), ())  # must start at P_0 = 1
    with pytest.raises(ValueError):
        OrthogonalSystem((ONE_POLY, 2 * X), (1,))  # not monic
    with pytest.raises(NotQuasiDefinite):
        OrthogonalSystem((ONE_POLY, X), (0,))
    sys_ok = OrthogonalSystem((ONE_POLY, X), (1,))
    assert sys_ok.n_max == 1
    assert sys_ok.poly(1) == X
    assert sys_ok.norm(0) == 1


def test_smop_recovers_the_closed_chebyshev_u_recurrence():
    u = families.chebyshev_u(24)
    rc, system = smop_from_moments(u, 12)
    assert rc == families.chebyshev_u_recurrence(12)
    # norms K_n = (1/4)^n and the first few polynomials in closed form
    for n in range(12):
        assert system.norms[n] == rat(1, 4) ** n
    assert system.polys[2] == X * X - rat(1, 4)
    assert system.polys[3] == X ** 3 - rat(1, 2) * X
    assert system.polys[4] == X ** 4 - rat(3, 4) * X * X + rat(1, 16)


def test_smop_recovers_the_closed_chebyshev_t_recurrence():
    u = families.chebyshev_t(24)
    rc, system = smop_from_moments(u, 12)
    assert rc == families.chebyshev_t_recurrence(12)
    assert system.norms[0] == 1
    for n in range(1, 12):
        assert system.norms[n] == rat(1, 2) * rat(1, 4) ** (n - 1)
    assert system.polys[2] == X * X - rat(1, 2)
    assert system.polys[3] == X ** 3 - rat(3, 4) * X


def test_smop_recovers_the_closed_laguerre_recurrence():
    for alpha in (rat(0), rat(1, 2), rat(3)):
        u = families.laguerre(alpha, 20)
        rc, system = smop_from_moments(u, 10)
        assert rc == families.laguerre_recurrence(alpha, 10)
        # K_n = n! * (alpha + 2)_n
        acc = rat(1)
        for n in range(10):
            assert system.norms[n] == acc
            acc *= (n + 1) * (alpha + 2 + n)
    u0 = families.laguerre(0, 8)
    _, system = smop_from_moments(u0, 4)
    assert system.polys[1] == X - 2
    assert system.polys[2] == X * X - 6 * X + 6


def test_smop_needs_enough_moments():
    u = families.chebyshev_u(8)
    with pytest.raises(TruncationExhausted):
        smop_from_moments(u, 5)
    with pytest.raises(ValueError):
        smop_from_moments(u, 0)


def test_smop_raises_at_the_first_vanishing_norm():
    # moments of delta_0: P_1 = x has <u, x^2> = 0
    u = MomentFunctional((1, 0, 0, 0, 0, 0))
    with pytest.raises(NotQuasiDefinite) as info:
        smop_from_moments(u, 3)
    assert info.value.level == 1
    assert info.value.guard == "norm"


def test_polys_from_recurrence_matches_gram_schmidt():
    u = families.chebyshev_t(20)
    rc, system = smop_from_moments(u, 10)
    assert polys_from_recurrence(rc, 10) == system.polys
    with pytest.raises(TruncationExhausted):
        polys_from_recurrence(rc, 11)


def test_jacobi_matrix_layout():
    rc = RecurrenceCoefficients((1, 2, 3), (4, 5))
    j = jacobi_matrix(rc, 3)
    assert j.entry(0, 0) == 1 and j.entry(2, 2) == 3
    assert j.entry(1, 0) == 4 and j.entry(2, 1) == 5
    assert j.entry(0, 1) == 1 and j.entry(1, 2) == 1
    assert recurrence_from_jacobi(j) == rc
    with pytest.raises(TruncationExhausted):
        jacobi_matrix(rc, 4)
    with pytest.raises(ValueError):
        jacobi_matrix(rc, 0)


def test_recurrence_from_jacobi_rejects_non_monic_input():
    from opoly.matrices import BandMatrix

    m = BandMatrix(3, {0: (1, 1, 1), 1: (2, 1), -1: (1, 1)})
    with pytest.raises(ValueError):
        recurrence_from_jacobi(m)


def test_moments_round_trip_through_the_jacobi_matrix():
    u = families.chebyshev_u(16)
    rc, _ = smop_from_moments(u, 8)
    back = moments_from_jacobi(jacobi_matrix(rc, 8), 1, 15)
    assert back.moments == u.moments[:15]


def test_moments_from_jacobi_respects_the_reliable_window():
    rc = families.chebyshev_u_recurrence(5)
    j = jacobi_matrix(rc, 5)
    assert moments_from_jacobi(j, 1, 9).order == 9
    with pytest.raises(TruncationExhausted):
        moments_from_jacobi(j, 1, 10)
    with pytest.raises(ValueError):
        moments_from_jacobi(j, 1, 0)


def test_hankel_minors_are_products_of_norms():
    u = families.laguerre(rat(1, 2), 16)
    _, system = smop_from_moments(u, 8)
    prod = rat(1)
    for k in range(8):
        prod *= system.norms[k]
        assert hankel_minor(u, k) == prod
    with pytest.raises(TruncationExhausted):
        hankel_minor(u, 8)


def test_hankel_minor_detects_degeneracy():
    u = MomentFunctional((1, 0, 0))
    assert hankel_minor(u, 1) == 0


def test_expand_in_basis_reproduces_fourier_coefficients():
    u = families.chebyshev_u(12)
    _, system = smop_from_moments(u, 5)
    q = 3 * X * X + rat(1, 2) * X - 1
    coeffs = expand_in_basis(u, system, q)
    rebuilt = sum(
        (c * p for c, p in zip(coeffs, system.polys)), 0 * X
    )
    assert rebuilt == q
