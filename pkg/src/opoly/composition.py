"""How degree-one transformations interact with the associated map.

Multiplying by (x - c) and then passing to the first associated sequence
is, up to a co-recursive perturbation, the same as doing those steps in
the other order; dividing by (x - c) has a mirror-image story.  Each
statement below is checked along two independently computed routes.
"""

from . import functional as fa
from .associated import (
    associated_functional,
    associated_polys,
    corecursive_functional,
    corecursive_polys,
)
from .darboux import christoffel_lu, geronimus_ul
from .errors import DegenerateParameter, ZeroPivot
from .matrices import (
    UpperBidiagonal,
    common_reliable,
    equal_on_block,
    first_block_mismatch,
    mat_multiply,
    shift_cols_left,
    shift_conjugate,
    shift_rows_up,
    shifted,
)
from .orthopoly import (
    jacobi_matrix,
    moments_from_jacobi,
    polys_from_recurrence,
    recurrence_from_jacobi,
    smop_from_moments,
)
from .poly import Polynomial, X
from .rational import ONE, ZERO, rat
from .reports import CheckReport, combine


def christoffel_assoc_polys(u, c, n_max):
    """The SMOP of the associated-then-perturbed route.

    R_n = (u_0/utilde_0) [(x - c) P^(1)_n - P_{n+1}], with
    utilde_0 = u_1 - c u_0 the first transformed moment.  Monic of
    degree n by construction of the prefactor.
    """
    c = rat(c)
    u0 = u.moments[0]
    tilde0 = u.moments[1] - c * u0
    if tilde0 == 0:
        raise DegenerateParameter("(x - c) u has vanishing first moment")
    rc, _ = smop_from_moments(u, n_max + 1)
    base = polys_from_recurrence(rc, n_max + 1)
    first = associated_polys(rc, 1, n_max)
    scale = u0 / tilde0
    out = []
    for n in range(n_max + 1):
        r = scale * ((X - c) * first[n] - base[n + 1])
        if r.degree != n or not (n == 0 or r.is_monic):
            raise AssertionError("kernel combination lost monicity at degree %d" % n)
        out.append(r)
    return tuple(out)


def corecursive_parameter(u, c):
    """alpha = -a_1 u_0 / utilde_0, the perturbation matching the two routes."""
    c = rat(c)
    u0 = u.moments[0]
    tilde0 = u.moments[1] - c * u0
    if tilde0 == 0:
        raise DegenerateParameter("(x - c) u has vanishing first moment")
    rc, _ = smop_from_moments(u, 2)
    return -rc.a_at(1) * u0 / tilde0


def christoffel_assoc_check(u, c, n_max):
    """Identity "pro5": the kernel-combination SMOP is co-recursive for u^(1)."""
    c = rat(c)
    direct = christoffel_assoc_polys(u, c, n_max)
    alpha = corecursive_parameter(u, c)
    rc, _ = smop_from_moments(u, n_max + 1)
    routed = corecursive_polys(rc.shifted(1), alpha, n_max)
    for n in range(n_max + 1):
        if direct[n] != routed[n]:
            return CheckReport.failing(
                "pro5", n_max, {"level": n}, c=str(c), alpha=str(alpha)
            )
    return CheckReport.passing("pro5", n_max, c=str(c), alpha=str(alpha))


def christoffel_assoc_connection_check(u, c, n_max):
    """Kernel-step connection for the combination SMOP:
    (x - c) Ptilde^(1)_{n-1} = R_n - (P_{n+1}(c)/P_n(c)) R_{n-1},
    with Ptilde^(1) built independently from the transformed moments."""
    c = rat(c)
    combo = christoffel_assoc_polys(u, c, n_max)
    rc, _ = smop_from_moments(u, n_max + 1)
    base = polys_from_recurrence(rc, n_max + 1)
    tilde_u = fa.multiply_poly(u, X - c)
    tilde_rc, _ = smop_from_moments(tilde_u, n_max)
    tilde_first = associated_polys(tilde_rc, 1, n_max - 1)
    for n in range(1, n_max + 1):
        if base[n](c) == 0:
            raise ZeroPivot(n)
        ratio = base[n + 1](c) / base[n](c)
        if (X - c) * tilde_first[n - 1] != combo[n] - ratio * combo[n - 1]:
            return CheckReport.failing(
                "christoffel-assoc-connection", n_max, {"level": n}, c=str(c)
            )
    return CheckReport.passing("christoffel-assoc-connection", n_max, c=str(c))


def christoffel_assoc_functional_check(u, c):
    """Identity "coro1": associated-of-transformed equals transformed-of-perturbed.

    Both sides are produced as moment sequences (one through the shifted
    Jacobi matrix of (x - c) u, one through the perturbed recurrence) and
    compared after normalization, since the associated functionals' first
    moments are free.
    """
    c = rat(c)
    alpha = corecursive_parameter(u, c)
    depth = u.order // 2
    if depth < 3:
        raise DegenerateParameter("need at least 6 moments for a meaningful check")
    rc, _ = smop_from_moments(u, depth)
    perturbed = rc.shifted(1).corecursive(alpha)
    j_alpha = jacobi_matrix(perturbed, perturbed.length)
    u_alpha = moments_from_jacobi(j_alpha, ONE, 2 * perturbed.length - 1)
    lhs = fa.multiply_poly(u_alpha, X - c)
    tilde_u = fa.multiply_poly(u, X - c)
    tilde_rc, _ = smop_from_moments(tilde_u, depth - 1)
    rhs = associated_functional(tilde_rc, 1, ONE, 2 * (depth - 2) - 1)
    order = min(lhs.order, rhs.order)
    if fa.equal_normalized(lhs, rhs, order=order):
        return CheckReport.passing(
            "coro1", order - 1, predicate="normalized", c=str(c), alpha=str(alpha)
        )
    usable = fa.first_moment_mismatch(lhs.normalized(), rhs.normalized())
    return CheckReport.failing(
        "coro1", order - 1, {"moment": usable}, predicate="normalized", c=str(c)
    )


def shifted_factor_check(u, c, size):
    """Identity "shifted-lu": tails of the factors refactor the perturbed matrix.

    With J - cI = L U from the multiplication step, dropping the leading
    row and column of each factor gives L_1, U_1 with
    L_1 U_1 = J_alpha - cI (exact on the whole truncation) and
    U_1 L_1 = Jtilde^(1) - cI (exact off the last row/column).  The
    scalar identity b_1 + alpha - c = beta_1 rides along.
    """
    c = rat(c)
    rc, _ = smop_from_moments(u, size + 1)
    lower, upper, transformed = christoffel_lu(jacobi_matrix(rc, size + 1), c)
    l1 = lower.shifted_tail().to_band()
    u1 = upper.shifted_tail().to_band()
    alpha = corecursive_parameter(u, c)
    perturbed = rc.shifted(1).corecursive(alpha)
    j_alpha = jacobi_matrix(perturbed, size)
    reports = []
    scalar_ok = rc.b_at(1) + alpha - c == upper.diag[1]
    reports.append(
        CheckReport(
            "corner-scalar",
            "pass" if scalar_ok else "fail",
            1,
            None if scalar_ok else {"lhs": str(rc.b_at(1) + alpha - c)},
        )
    )
    prod = mat_multiply(l1, u1)
    block = common_reliable(prod, j_alpha)
    ok = equal_on_block(prod, shifted(j_alpha, c), block)
    reports.append(
        CheckReport(
            "tail-product",
            "pass" if ok else "fail",
            block,
            None if ok else {"block": first_block_mismatch(prod, shifted(j_alpha, c), block)},
        )
    )
    swapped = mat_multiply(u1, l1)
    assoc_transformed = shift_conjugate(transformed)
    block = common_reliable(swapped, assoc_transformed)
    ok = equal_on_block(swapped, shifted(assoc_transformed, c), block)
    reports.append(
        CheckReport(
            "swapped-tail-product",
            "pass" if ok else "fail",
            block,
            None if ok else {
                "block": first_block_mismatch(swapped, shifted(assoc_transformed, c), block)
            },
        )
    )
    return combine("shifted-lu", reports, c=str(c), alpha=str(alpha))


def geronimus_assoc_polys(v, m0, n_max):
    """S_n = P_n + (v_0/m0) P^(1)_{n-1}: the kernel sequence of the division step."""
    m0 = rat(m0)
    if m0 == 0:
        raise DegenerateParameter("the transformed functional needs a nonzero mass m0")
    v0 = v.moments[0]
    rc, _ = smop_from_moments(v, n_max + 1)
    base = polys_from_recurrence(rc, n_max)
    first = associated_polys(rc, 1, n_max - 1)
    out = [Polynomial((1,))]
    for n in range(1, n_max + 1):
        out.append(base[n] + (v0 / m0) * first[n - 1])
    return tuple(out)


def geronimus_corecursive_check(v, m0, n_max):
    """The kernel sequence is co-recursive of parameter -v_0/m0 for v itself.

    Checked as polynomials (two routes) and as functionals: the moments
    regenerated from the perturbed recurrence must match the convolution
    route through v^{-1} - (1/m0) delta_0'.
    """
    m0 = rat(m0)
    v0 = v.moments[0]
    alpha = -v0 / m0
    direct = geronimus_assoc_polys(v, m0, n_max)
    rc, _ = smop_from_moments(v, n_max + 1)
    routed = corecursive_polys(rc.truncated(n_max), alpha, n_max)
    for n in range(n_max + 1):
        if direct[n] != routed[n]:
            return CheckReport.failing(
                "S-corecursive", n_max, {"level": n, "route": "polynomial"}
            )
    perturbed = rc.corecursive(alpha)
    j_alpha = jacobi_matrix(perturbed, perturbed.length)
    via_recurrence = moments_from_jacobi(j_alpha, v0, 2 * perturbed.length - 1)
    via_inversion = corecursive_functional(v, alpha)
    order = min(via_recurrence.order, via_inversion.order)
    if not fa.equal_normalized(via_recurrence, via_inversion, order=order):
        return CheckReport.failing(
            "S-corecursive",
            n_max,
            {"route": "functional", "moment": fa.first_moment_mismatch(
                via_recurrence.normalized(), via_inversion.normalized()
            )},
        )
    return CheckReport.passing("S-corecursive", n_max, alpha=str(alpha))


def _hat_first(v, c, m0, size):
    """Factorization route to the transformed functional's associated SMOP."""
    v0 = v.moments[0]
    rc, _ = smop_from_moments(v, size + 1)
    lower, upper, transformed = geronimus_ul(
        jacobi_matrix(rc, size + 1), rat(c), v0 / rat(m0)
    )
    hat_rc = recurrence_from_jacobi(transformed)
    return rc, lower, upper, hat_rc


def geronimus_assoc_connection_check(v, c, m0, n_max):
    """Identity "gero1": (x - c) Phat^(1)_{n-1} = S_n + ell_n S_{n-1}.

    Phat^(1) comes from the shifted transformed recurrence (factorization
    route), the ell_n from the elimination, and S from the kernel
    formula, so the three ingredients are independently produced.
    """
    c = rat(c)
    rc, lower, upper, hat_rc = _hat_first(v, c, m0, n_max)
    hat_first = polys_from_recurrence(hat_rc.shifted(1), n_max - 1)
    s_polys = geronimus_assoc_polys(v, m0, n_max)
    for n in range(1, n_max + 1):
        lhs = (X - c) * hat_first[n - 1]
        rhs = s_polys[n] + lower.sub[n - 1] * s_polys[n - 1]
        if lhs != rhs:
            return CheckReport.failing("gero1", n_max, {"level": n}, c=str(c))
    return CheckReport.passing("gero1", n_max, c=str(c), m0=str(rat(m0)))


def geronimus_assoc_second_check(v, c, m0, n_max):
    """Identity "gero2": S_n = Phat^(1)_n + beta_n Phat^(1)_{n-1}."""
    c = rat(c)
    rc, lower, upper, hat_rc = _hat_first(v, c, m0, n_max)
    hat_first = polys_from_recurrence(hat_rc.shifted(1), n_max)
    s_polys = geronimus_assoc_polys(v, m0, n_max)
    for n in range(n_max + 1):
        rhs = hat_first[n] + (upper.diag[n] * hat_first[n - 1] if n >= 1 else Polynomial())
        if s_polys[n] != rhs:
            return CheckReport.failing("gero2", n_max, {"level": n}, c=str(c))
    return CheckReport.passing("gero2", n_max, c=str(c), m0=str(rat(m0)))


def geronimus_assoc_factor_check(v, c, m0, size):
    """Identity "pro6": moments and shifted-factor identities for the division step.

    (i) the associated functional of the transform equals (x - c) times
    the co-recursive functional of parameter -v_0/m0, normalized;
    (ii) J_alpha - cI = Lhat Uhat with Lhat, Uhat the one-sided shifts
    of the elimination factors; (iii) Jhat^(1) - cI = Uhat Lhat; and the
    structural reading of Uhat as the pure index shift of L.
    """
    c = rat(c)
    m0 = rat(m0)
    v0 = v.moments[0]
    alpha = -v0 / m0
    rc, lower, upper, hat_rc = _hat_first(v, c, m0, size)
    reports = []
    # (i) normalized moment identity
    hat_shift = hat_rc.shifted(1)
    lhs = associated_functional(hat_rc, 1, ONE, 2 * hat_shift.length - 1)
    perturbed = rc.truncated(size).corecursive(alpha)
    v_alpha = moments_from_jacobi(jacobi_matrix(perturbed, size), ONE, 2 * size - 1)
    rhs = fa.multiply_poly(v_alpha, X - c)
    order = min(lhs.order, rhs.order)
    ok = fa.equal_normalized(lhs, rhs, order=order)
    reports.append(
        CheckReport(
            "moment-identity",
            "pass" if ok else "fail",
            order - 1,
            None
            if ok
            else {"moment": fa.first_moment_mismatch(lhs.normalized(), rhs.normalized())},
            predicate="normalized",
        )
    )
    # (ii) and (iii): one-sided shifts of the factors
    l_hat = shift_cols_left(upper.to_band())
    u_hat = shift_rows_up(lower.to_band())
    j_alpha = jacobi_matrix(rc.corecursive(alpha), size + 1)
    prod = mat_multiply(l_hat, u_hat)
    block = common_reliable(prod, j_alpha)
    ok = equal_on_block(prod, shifted(j_alpha, c), block)
    reports.append(
        CheckReport(
            "shifted-product",
            "pass" if ok else "fail",
            block,
            None if ok else {"block": first_block_mismatch(prod, shifted(j_alpha, c), block)},
        )
    )
    hat_assoc = shift_conjugate(jacobi_matrix(hat_rc, size + 1))
    swapped = mat_multiply(u_hat, l_hat)
    block = common_reliable(swapped, hat_assoc)
    ok = equal_on_block(swapped, shifted(hat_assoc, c), block)
    reports.append(
        CheckReport(
            "swapped-shifted-product",
            "pass" if ok else "fail",
            block,
            None if ok else {"block": first_block_mismatch(swapped, shifted(hat_assoc, c), block)},
        )
    )
    structural = UpperBidiagonal(size + 1, lower.sub + (ZERO,)).to_band()
    block = min(common_reliable(u_hat), size)
    ok = equal_on_block(u_hat, structural, block)
    reports.append(
        CheckReport(
            "shift-structure",
            "pass" if ok else "fail",
            block,
            None if ok else {"block": first_block_mismatch(u_hat, structural, block)},
        )
    )
    return combine("pro6", reports, c=str(c), m0=str(m0), alpha=str(alpha))


def christoffel_assoc_chain(u, c, n_max, size):
    """All multiplication-side interplay checks, bundled."""
    return [
        christoffel_assoc_check(u, c, n_max),
        christoffel_assoc_connection_check(u, c, n_max),
        christoffel_assoc_functional_check(u, c),
        shifted_factor_check(u, c, size),
    ]


def geronimus_assoc_chain(v, c, m0, n_max, size):
    """All division-side interplay checks, bundled."""
    return [
        geronimus_corecursive_check(v, m0, n_max),
        geronimus_assoc_connection_check(v, c, m0, n_max),
        geronimus_assoc_second_check(v, c, m0, n_max),
        geronimus_assoc_factor_check(v, c, m0, size),
    ]
