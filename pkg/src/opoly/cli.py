"""Command-line interface: pipelines and identity checks as JSON on stdio.

Subcommands compose through JSON records (rationals travel as strings
"p/q"); CSV is available for plain coefficient tables.  Exit status is
0 when everything requested passed, 1 for mathematical failures or
failed checks (with a JSON report), 2 for usage errors.  The
environment variable OPOLY_MAX_ORDER (default 64) caps every order,
depth and size argument as a safety valve.
"""

import argparse
import csv
import io
import json
import os
import sys

from . import __version__
from . import families
from . import functional as fa
from . import serialize
from .associated import (
    assoc_representation_check,
    associated_functional,
    associated_polys,
    corecursive_functional,
    corecursive_functional_check,
    inverse_connection,
    inverse_functional_identity_check,
    inverse_recurrence,
    linear_combination_check,
)
from .composition import (
    christoffel_assoc_chain,
    christoffel_assoc_check,
    christoffel_assoc_functional_check,
    geronimus_assoc_chain,
    geronimus_assoc_connection_check,
    geronimus_assoc_factor_check,
    geronimus_assoc_second_check,
    shifted_factor_check,
)
from .darboux import christoffel_lu, christoffel_connection_check, geronimus_ul
from .errors import OpolyError, NotQuasiDefinite, ZeroPivot
from .orthopoly import jacobi_matrix, recurrence_from_jacobi, smop_from_moments
from .poly import X
from .quadratic import (
    assoc_inverse_factorization_check,
    g_matrix_check,
    quadratic_connection_check,
    quadratic_factorization,
    quadratic_factorization_check,
)
from .rational import parse_rational, rat, rat_str
from .reports import CheckReport
from .stieltjes import (
    first_kind_series_check,
    inverse_series_check,
    pade_approximation_check,
)

FAMILY_BUILDERS = {
    "chebyshev-u": lambda alpha, order: families.chebyshev_u(order),
    "chebyshev-t": lambda alpha, order: families.chebyshev_t(order),
    "laguerre": lambda alpha, order: families.laguerre(alpha, order),
}

DEFAULT_ORDER = 24


class UsageError(Exception):
    """Bad arguments or malformed input; maps to exit status 2."""


def max_order_cap():
    raw = os.environ.get("OPOLY_MAX_ORDER", "64")
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError("OPOLY_MAX_ORDER must be an integer, got %r" % raw)
    if cap < 4:
        raise UsageError("OPOLY_MAX_ORDER must be at least 4")
    return cap


def checked_size(value, what):
    if value < 1:
        raise UsageError("%s must be positive" % what)
    cap = max_order_cap()
    if value > cap:
        raise UsageError("%s %d exceeds OPOLY_MAX_ORDER = %d" % (what, value, cap))
    return value


def parse_param(text, what):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError("bad rational for %s: %s" % (what, exc))


def read_functional(stream):
    data = stream.read()
    if not data.strip():
        raise UsageError("expected a moments record (or list) on standard input")
    try:
        obj = serialize.loads(data)
    except json.JSONDecodeError as exc:
        raise UsageError("malformed JSON on standard input: %s" % exc)
    try:
        u = serialize.functional_from_json(obj)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError("bad moments record: %s" % exc)
    checked_size(u.order, "input order")
    return u


def build_family(name, alpha, order):
    if name not in FAMILY_BUILDERS:
        raise UsageError(
            "unknown family %r (choose from %s)" % (name, ", ".join(sorted(FAMILY_BUILDERS)))
        )
    checked_size(order, "order")
    try:
        return FAMILY_BUILDERS[name](alpha, order)
    except ValueError as exc:
        raise UsageError(str(exc))


def input_functional(args):
    """Moments from --family if given, else from standard input."""
    family = getattr(args, "family", None)
    if family:
        alpha = parse_param(getattr(args, "alpha", "1"), "--alpha")
        return build_family(family, alpha, getattr(args, "order", DEFAULT_ORDER))
    if sys.stdin.isatty():
        raise UsageError("no input: pipe a moments record or pass --family")
    return read_functional(sys.stdin)


def emit_text(text, out_path):
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def emit_json(payload, out_path):
    emit_text(serialize.dumps(payload), out_path)


def emit_csv(header, rows, out_path):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    emit_text(buf.getvalue(), out_path)


def error_payload(exc):
    payload = {"version": __version__, "error": type(exc).__name__}
    if isinstance(exc, NotQuasiDefinite):
        payload["level"] = exc.level
        if exc.guard:
            payload["guard"] = exc.guard
    elif isinstance(exc, ZeroPivot):
        payload["level"] = exc.index
    message = str(exc)
    if message:
        payload["message"] = message
    return payload


# -- subcommand handlers -------------------------------------------------

def cmd_moments(args):
    if args.source in FAMILY_BUILDERS:
        alpha = parse_param(args.alpha, "--alpha")
        u = build_family(args.source, alpha, args.order)
    else:
        try:
            with open(args.source) as handle:
                u = read_functional(handle)
        except OSError as exc:
            raise UsageError("cannot read %r: %s" % (args.source, exc))
    if args.csv:
        rows = [(n, rat_str(m)) for n, m in enumerate(u.moments)]
        emit_csv(("n", "moment"), rows, args.out)
        return True
    payload = {"version": __version__}
    payload.update(serialize.moments_record(u))
    emit_json(payload, args.out)
    return True


def cmd_smop(args):
    u = read_functional(sys.stdin)
    n = args.n if args.n is not None else u.order // 2
    checked_size(n, "--n")
    rc, system = smop_from_moments(u, n)
    if args.csv:
        rows = []
        for k in range(n):
            a_entry = rat_str(rc.a_at(k)) if k >= 1 else ""
            rows.append((k, rat_str(rc.b_at(k)), a_entry, rat_str(system.norms[k])))
        emit_csv(("n", "b", "a", "norm"), rows, args.out)
        return True
    payload = {"version": __version__}
    payload.update(serialize.recurrence_record(rc, system.norms))
    emit_json(payload, args.out)
    return True


def cmd_transform(args):
    u = read_functional(sys.stdin)
    kind = args.kind
    if kind == "christoffel":
        c = parse_param(args.c, "--c")
        result = fa.multiply_poly(u, X - c).relabeled("christoffel")
    elif kind == "geronimus":
        c = parse_param(args.c, "--c")
        m0 = parse_param(args.m0, "--m0")
        result = fa.geronimus(u, c, m0).relabeled("geronimus")
    elif kind == "quadratic-geronimus":
        c = parse_param(args.c, "--c")
        m0 = parse_param(args.m0, "--m0")
        m1 = parse_param(args.m1, "--m1")
        result = fa.quadratic_geronimus(u, c, m0, m1).relabeled("quadratic-geronimus")
    elif kind == "associated":
        k = checked_size(args.k, "--k")
        norm0 = parse_param(args.norm, "--norm")
        depth = u.order // 2
        count = 2 * (depth - k) - 1
        if count < 1:
            raise UsageError("order %d leaves no moments at level k=%d" % (u.order, k))
        rc, _ = smop_from_moments(u, depth)
        result = associated_functional(rc, k, norm0, count).relabeled("associated-%d" % k)
    elif kind == "corecursive":
        alpha = parse_param(args.alpha, "--alpha")
        result = corecursive_functional(u, alpha).relabeled("corecursive")
    elif kind == "inverse":
        result = fa.invert(u).relabeled("inverse")
    else:
        raise UsageError("unknown transform kind %r" % kind)
    payload = {"version": __version__}
    payload.update(serialize.moments_record(result))
    emit_json(payload, args.out)
    return True


def cmd_factorize(args):
    u = read_functional(sys.stdin)
    c = parse_param(args.c, "--c")
    size = args.size if args.size is not None else u.order // 2
    checked_size(size, "--size")
    if args.mode == "lu":
        rc, _ = smop_from_moments(u, size)
        lower, upper, transformed = christoffel_lu(jacobi_matrix(rc, size), c)
        record = serialize.factor_record(
            c, lower.sub, upper.diag, recurrence_from_jacobi(transformed)
        )
    elif args.mode == "ul":
        m0 = parse_param(args.m0, "--m0")
        if m0 == 0:
            raise UsageError("--m0 must be nonzero")
        rc, _ = smop_from_moments(u, size)
        beta0 = u.moments[0] / m0
        lower, upper, transformed = geronimus_ul(jacobi_matrix(rc, size), c, beta0)
        record = serialize.factor_record(
            c, lower.sub, upper.diag, recurrence_from_jacobi(transformed)
        )
    else:
        m0 = parse_param(args.m0, "--m0")
        m1 = parse_param(args.m1, "--m1")
        lower, upper = quadratic_factorization(u, c, m0, m1, size)
        record = serialize.triband_record(lower, upper)
    payload = {"version": __version__}
    payload.update(record)
    emit_json(payload, args.out)
    return True


VERIFY_SUMMARIES = {
    "repChris": "multiplication step: (x-c) times each transformed polynomial is a two-term combination of the originals, with pivots matching value ratios",
    "fu1": "the first-associated functional equals an explicit multiple of x^2 times the convolution inverse",
    "identidad": "the generating series of a functional and of its convolution inverse multiply to z^-2",
    "relationS": "the first-associated generating series as an affine expression in the inverse one",
    "funccorre": "the co-recursive functional via normalization of the perturbed inverse",
    "pade": "the series remainder against P_n vanishes from z^(n-1) through z^-n and resumes with the norm",
    "conex2": "(x-c)^2 times each polynomial is a three-term combination of the double-kernel SMOP",
    "propLUinversa": "the squared shifted Jacobi matrices factor as the two swapped products of one triband pair",
    "relationlu": "the origin analogue of the swapped triband factorization for the inverse SMOP",
    "g-matrix": "the dense quotient of the inverse Jacobi matrix by the lower factor links both factorizations",
    "pro5": "associated-then-multiplied SMOP equals a one-parameter perturbation of the first-associated SMOP",
    "coro1": "the first-associated functional of the multiplied functional is the multiplied perturbed functional (normalized)",
    "shifted-lu": "dropping the leading row and column of both factors refactors the perturbed matrix",
    "gero1": "(x-c) times the transformed first-associated polynomials is a two-term combination of the auxiliary family",
    "gero2": "the auxiliary family is a two-term combination of the transformed first-associated polynomials",
    "pro6": "the transformed functional's first-associated is a multiplication transform of the perturbed one, with matching shifted factors",
    "asociadosrepr": "each associated polynomial is a divided difference of the previous associated level",
    "linearcombination": "higher associated polynomials as a fixed polynomial combination of the base and first-associated families",
    "christoffel+assoc": "the full multiplication-side interplay bundle",
    "geronimus+assoc": "the full division-side interplay bundle",
}


def run_verify(name, u, params):
    c = params["c"]
    m0 = params["m0"]
    m1 = params["m1"]
    alpha = params["alpha"]
    k = params["k"]
    norm = params["norm"]
    n = params["n"]
    if name == "repChris":
        return [christoffel_connection_check(u, c, n)]
    if name == "fu1":
        return [inverse_functional_identity_check(u, norm)]
    if name == "identidad":
        return [inverse_series_check(u)]
    if name == "relationS":
        return [first_kind_series_check(u, norm)]
    if name == "funccorre":
        return [corecursive_functional_check(u, alpha)]
    if name == "pade":
        return [pade_approximation_check(u, n)]
    if name == "conex2":
        return [quadratic_connection_check(u, c, m0, m1, n)]
    if name == "propLUinversa":
        return [quadratic_factorization_check(u, c, m0, m1, n)]
    if name == "relationlu":
        return [assoc_inverse_factorization_check(u, norm, n)]
    if name == "g-matrix":
        return [g_matrix_check(u, n)]
    if name == "pro5":
        return [christoffel_assoc_check(u, c, n)]
    if name == "coro1":
        return [christoffel_assoc_functional_check(u, c)]
    if name == "shifted-lu":
        return [shifted_factor_check(u, c, n)]
    if name == "gero1":
        return [geronimus_assoc_connection_check(u, c, m0, n)]
    if name == "gero2":
        return [geronimus_assoc_second_check(u, c, m0, n)]
    if name == "pro6":
        return [geronimus_assoc_factor_check(u, c, m0, n)]
    if name == "asociadosrepr":
        return [assoc_representation_check(u, k, n)]
    if name == "linearcombination":
        return [linear_combination_check(u, k, n)]
    if name == "christoffel+assoc":
        return christoffel_assoc_chain(u, c, n, n)
    if name == "geronimus+assoc":
        return geronimus_assoc_chain(u, c, m0, n, n)
    raise UsageError(
        "unknown identity %r; run `opoly verify --list` for the catalogue" % name
    )


def cmd_verify(args):
    if args.list:
        payload = {
            "version": __version__,
            "identities": [
                {"name": name, "summary": summary}
                for name, summary in VERIFY_SUMMARIES.items()
            ],
        }
        emit_json(payload, args.out)
        return True
    if not args.name:
        raise UsageError("name an identity to verify, or pass --list")
    name = args.name
    if name not in VERIFY_SUMMARIES:
        raise UsageError(
            "unknown identity %r; run `opoly verify --list` for the catalogue" % name
        )
    u = input_functional(args)
    params = {
        "c": parse_param(args.c, "--c"),
        "m0": parse_param(args.m0, "--m0"),
        "m1": parse_param(args.m1, "--m1"),
        "alpha": parse_param(args.alpha, "--alpha"),
        "k": checked_size(args.k, "--k"),
        "norm": parse_param(args.norm, "--norm"),
        "n": checked_size(args.n, "--n"),
    }
    reports = run_verify(name, u, params)
    if name.endswith("+assoc"):
        shown = {
            "m0": rat_str(params["m0"]),
            "n": params["n"],
            "size": params["n"],
        }
        payload = {"version": __version__}
        payload.update(serialize.chain_record(name, params["c"], shown, reports))
    else:
        payload = {
            "version": __version__,
            "identity": name,
            "checks": [r.to_json() for r in reports],
        }
    emit_json(payload, args.out)
    return all(r.passed for r in reports)


def _table_check(identity, rows):
    """rows: iterable of (index, got, want); exact comparison."""
    rows = list(rows)
    top = rows[-1][0] if rows else 0
    for idx, got, want in rows:
        if got != want:
            return CheckReport.failing(
                identity,
                top,
                {"level": idx, "got": rat_str(got), "want": rat_str(want)},
            )
    return CheckReport.passing(identity, top)


def family_reproduction(name, alpha, order):
    """Inverse-transform tables and factorization instances for one family,
    each compared against its frozen closed form."""
    u = build_family(name, alpha, order)
    n_max = order // 2 - 1
    rc_inv = inverse_recurrence(u, n_max)
    alpha1, alpha2, d_star = inverse_connection(u, n_max)

    if name == "chebyshev-u":
        want_b = [families.chebyshev_u_inverse_b(n) for n in range(n_max)]
        want_a = [families.chebyshev_u_inverse_a(n) for n in range(1, n_max)]
        want_d = [families.chebyshev_u_d_star(n) for n in range(1, n_max + 2)]
        want_a1 = [rat(0)] * n_max
        want_a2 = [families.chebyshev_u_alpha2(n) for n in range(2, n_max + 1)]
    elif name == "chebyshev-t":
        want_b = [families.chebyshev_t_inverse_b(n) for n in range(n_max)]
        want_a = [families.chebyshev_t_inverse_a(n) for n in range(1, n_max)]
        want_d = [families.chebyshev_t_d_star(n) for n in range(1, n_max + 2)]
        want_a1 = [rat(0)] * n_max
        want_a2 = [families.chebyshev_t_alpha2(n) for n in range(2, n_max + 1)]
    else:
        want_b = [families.laguerre_inverse_b(alpha, n) for n in range(n_max)]
        want_a = [families.laguerre_inverse_a(alpha, n) for n in range(1, n_max)]
        want_d = [families.laguerre_d_star(alpha, n) for n in range(1, n_max + 2)]
        want_a1 = [families.laguerre_inverse_alpha1(alpha, n) for n in range(1, n_max + 1)]
        want_a2 = [families.laguerre_inverse_alpha2(alpha, n) for n in range(2, n_max + 1)]

    checks = [
        _table_check("b-minus-table", [(n, rc_inv.b[n], want_b[n]) for n in range(n_max)]),
        _table_check(
            "a-minus-table", [(n, rc_inv.a[n - 1], want_a[n - 1]) for n in range(1, n_max)]
        ),
        _table_check(
            "d-star-table", [(n, d_star[n], want_d[n - 1]) for n in range(1, n_max + 2)]
        ),
        _table_check(
            "alpha1-table", [(n, alpha1[n], want_a1[n - 1]) for n in range(1, n_max + 1)]
        ),
        _table_check(
            "alpha2-table", [(n, alpha2[n], want_a2[n - 2]) for n in range(2, n_max + 1)]
        ),
    ]

    size = order // 2
    rc, system = smop_from_moments(u, size)
    if name == "chebyshev-u":
        lower, upper, _ = christoffel_lu(jacobi_matrix(rc, size), rat(1))
        checks.append(
            _table_check(
                "kernel-step-table",
                [
                    (n, upper.diag[n], families.chebyshev_u_christoffel_beta(n))
                    for n in range(size)
                ]
                + [
                    (n, lower.sub[n - 1], families.chebyshev_u_christoffel_ell(n))
                    for n in range(1, size)
                ],
            )
        )
    elif name == "laguerre":
        beta0 = u.moments[0] * (rat(alpha) + 1)
        lower, upper, _ = geronimus_ul(jacobi_matrix(rc, size), rat(0), beta0)
        checks.append(
            _table_check(
                "inverse-kernel-step-table",
                [
                    (n, upper.diag[n], families.laguerre_geronimus_beta(alpha, n))
                    for n in range(size)
                ]
                + [
                    (n, lower.sub[n - 1], families.laguerre_geronimus_ell(n))
                    for n in range(1, size)
                ],
            )
        )
        base = [system.polys[n] for n in range(size + 1)]
        checks.append(
            _table_check(
                "value-at-zero-table",
                [(n, base[n](0), families.laguerre_value_at_zero(alpha, n)) for n in range(size + 1)]
                + [
                    (n, base[n].derivative()(0), families.laguerre_derivative_at_zero(alpha, n))
                    for n in range(size + 1)
                ],
            )
        )
        first = associated_polys(rc, 1, size - 1)
        checks.append(
            _table_check(
                "assoc-value-at-zero-table",
                [
                    (n, first[n](0), families.laguerre_assoc_zero_value(alpha, n))
                    for n in range(size)
                ],
            )
        )

    payload = {
        "version": __version__,
        "family": name,
        "alpha": rat_str(rat(alpha)),
        "order": order,
        "b_minus": serialize.rational_list(rc_inv.b),
        "a_minus": serialize.rational_list(rc_inv.a),
        "d_star": serialize.rational_list(d_star[n] for n in range(1, n_max + 2)),
        "alpha1": serialize.rational_list(alpha1[n] for n in range(1, n_max + 1)),
        "alpha2": serialize.rational_list(alpha2[n] for n in range(2, n_max + 1)),
        "checks": [r.to_json() for r in checks],
    }
    return payload, all(r.passed for r in checks)


def cmd_example(args):
    alpha = parse_param(args.alpha, "--alpha")
    checked_size(args.order, "--order")
    if args.family not in FAMILY_BUILDERS:
        raise UsageError(
            "unknown family %r (choose from %s)"
            % (args.family, ", ".join(sorted(FAMILY_BUILDERS)))
        )
    payload, ok = family_reproduction(args.family, alpha, args.order)
    emit_json(payload, args.out)
    return ok


# -- parser --------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="opoly",
        description="Exact moment-functional pipelines and identity checks.",
    )
    parser.add_argument("--version", action="version", version="opoly " + __version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_moments = sub.add_parser(
        "moments", help="emit the moments of a classical family or of a JSON file"
    )
    p_moments.add_argument("source", help="family name (%s) or path" % "|".join(sorted(FAMILY_BUILDERS)))
    p_moments.add_argument("--alpha", default="1", help="family parameter (default 1)")
    p_moments.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p_moments.add_argument("--csv", action="store_true", help="coefficient table as CSV")
    p_moments.add_argument("--out", default=None, help="write to a file instead of stdout")
    p_moments.set_defaults(handler=cmd_moments)

    p_smop = sub.add_parser(
        "smop", help="recurrence coefficients and norms from moments on stdin"
    )
    p_smop.add_argument("--n", type=int, default=None, help="depth (default order/2)")
    p_smop.add_argument("--csv", action="store_true", help="coefficient table as CSV")
    p_smop.add_argument("--out", default=None)
    p_smop.set_defaults(handler=cmd_smop)

    p_transform = sub.add_parser(
        "transform", help="apply a spectral transformation to moments on stdin"
    )
    p_transform.add_argument(
        "kind",
        choices=[
            "christoffel",
            "geronimus",
            "quadratic-geronimus",
            "associated",
            "corecursive",
            "inverse",
        ],
    )
    p_transform.add_argument("--c", default="1", help="shift point (default 1)")
    p_transform.add_argument("--m0", default="1", help="new mass at c (default 1)")
    p_transform.add_argument("--m1", default="0", help="derivative mass at c (default 0)")
    p_transform.add_argument("--alpha", default="1", help="perturbation (default 1)")
    p_transform.add_argument("--k", type=int, default=1, help="association level (default 1)")
    p_transform.add_argument("--norm", default="1", help="first moment of the result (default 1)")
    p_transform.add_argument("--out", default=None)
    p_transform.set_defaults(handler=cmd_transform)

    p_factor = sub.add_parser(
        "factorize", help="bidiagonal or triband factorization of the Jacobi matrix"
    )
    p_factor.add_argument("mode", choices=["lu", "ul", "quadratic"])
    p_factor.add_argument("--c", default="1", help="shift point (default 1)")
    p_factor.add_argument("--m0", default="1", help="mass for ul/quadratic (default 1)")
    p_factor.add_argument("--m1", default="0", help="derivative mass for quadratic (default 0)")
    p_factor.add_argument("--size", type=int, default=None, help="matrix size (default order/2)")
    p_factor.add_argument("--out", default=None)
    p_factor.set_defaults(handler=cmd_factorize)

    p_verify = sub.add_parser("verify", help="run one identity check (JSON report)")
    p_verify.add_argument("name", nargs="?", default=None)
    p_verify.add_argument("--list", action="store_true", help="enumerate all identities")
    p_verify.add_argument("--family", default=None, help="use a built-in family instead of stdin")
    p_verify.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p_verify.add_argument("--c", default="1", help="shift point (default 1)")
    p_verify.add_argument("--m0", default="1", help="mass (default 1)")
    p_verify.add_argument("--m1", default="0", help="derivative mass (default 0)")
    p_verify.add_argument("--alpha", default="1", help="perturbation / family parameter (default 1)")
    p_verify.add_argument("--k", type=int, default=1, help="association level (default 1)")
    p_verify.add_argument("--norm", default="1", help="free first moment (default 1)")
    p_verify.add_argument("--n", type=int, default=8, help="depth / size (default 8)")
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(handler=cmd_verify)

    p_example = sub.add_parser(
        "example", help="reproduce a family's closed-form tables and check them"
    )
    p_example.add_argument("family", choices=sorted(FAMILY_BUILDERS))
    p_example.add_argument("--alpha", default="1", help="family parameter (default 1)")
    p_example.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p_example.add_argument("--out", default=None)
    p_example.set_defaults(handler=cmd_example)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ok = args.handler(args)
    except UsageError as exc:
        print("opoly: %s" % exc, file=sys.stderr)
        return 2
    except OpolyError as exc:
        emit_json(error_payload(exc), getattr(args, "out", None))
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        print("opoly: %s" % exc, file=sys.stderr)
        return 2
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
