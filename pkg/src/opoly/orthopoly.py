"""Monic orthogonal polynomial sequences: moments to recurrence and back."""

from .errors import NotQuasiDefinite, TruncationExhausted
from .functional import MomentFunctional, apply
from .matrices import BandMatrix
from .poly import ONE_POLY, Polynomial, X
from .rational import ZERO, ONE, rat


class RecurrenceCoefficients:
    """Coefficients of x P_k = P_{k+1} + b_k P_k + a_k P_{k-1}.

    `b` holds (b_0, ..., b_{n-1}) and `a` holds (a_1, ..., a_{n-1}); the
    index conventions match the recurrence, so a[0] is a_1.
    """

    __slots__ = ("b", "a")

    def __init__(self, b, a):
        self.b = tuple(rat(x) for x in b)
        self.a = tuple(rat(x) for x in a)
        if not self.b:
            raise ValueError("need at least b_0")
        if len(self.a) != len(self.b) - 1:
            raise ValueError(
                "got %d b's but %d a's; expected one fewer a" % (len(self.b), len(self.a))
            )

    @property
    def length(self):
        return len(self.b)

    def b_at(self, n):
        return self.b[n]

    def a_at(self, n):
        if n < 1:
            raise IndexError("a_n starts at n = 1")
        return self.a[n - 1]

    def truncated(self, n):
        if n > len(self.b):
            raise TruncationExhausted("only %d coefficients available" % len(self.b))
        return RecurrenceCoefficients(self.b[:n], self.a[: n - 1])

    def shifted(self, k):
        """Drop the first k coefficients of each sequence (the associated shift)."""
        if k < 0 or k >= len(self.b):
            raise TruncationExhausted(
                "cannot shift %d coefficients by %d" % (len(self.b), k)
            )
        return RecurrenceCoefficients(self.b[k:], self.a[k:])

    def corecursive(self, alpha):
        """Perturb only b_0 by alpha."""
        alpha = rat(alpha)
        return RecurrenceCoefficients((self.b[0] + alpha,) + self.b[1:], self.a)

    def __eq__(self, other):
        if not isinstance(other, RecurrenceCoefficients):
            return NotImplemented
        return self.b == other.b and self.a == other.a

    def __hash__(self):
        return hash((self.b, self.a))

    def __repr__(self):
        return "RecurrenceCoefficients(b=%s, a=%s)" % (self.b, self.a)


class OrthogonalSystem:
    """Monic polynomials P_0..P_n together with the norms K_k = <u, P_k^2>.

    There is one norm fewer than there are polynomials: the top norm would
    need moments beyond those that determined P_n.  All norms are nonzero;
    a vanishing norm is exactly failure of quasi-definiteness.
    """

    __slots__ = ("polys", "norms")

    def __init__(self, polys, norms):
        polys = tuple(polys)
        norms = tuple(rat(k) for k in norms)
        if not polys or polys[0] != ONE_POLY:
            raise ValueError("the system must start at P_0 = 1")
        for n, p in enumerate(polys):
            if p.degree != n or (n > 0 and not p.is_monic):
                raise ValueError("entry %d is not a degree-%d monic polynomial" % (n, n))
        if len(norms) != len(polys) - 1:
            raise ValueError("expected %d norms, got %d" % (len(polys) - 1, len(norms)))
        for k, norm in enumerate(norms):
            if norm == 0:
                raise NotQuasiDefinite(k, guard="norm")
        self.polys = polys
        self.norms = norms

    @property
    def n_max(self):
        return len(self.polys) - 1

    def poly(self, n):
        return self.polys[n]

    def norm(self, k):
        return self.norms[k]

    def __repr__(self):
        return "OrthogonalSystem(n_max=%d)" % self.n_max


def smop_from_moments(u, n_max):
    """Gram–Schmidt on the moment sequence.

    Needs 2*n_max moments.  Returns the recurrence coefficients
    (b_0..b_{n_max-1}, a_1..a_{n_max-1}) and the system P_0..P_{n_max}
    with norms K_0..K_{n_max-1}.  Raises NotQuasiDefinite at the first
    vanishing norm, whose index equals the offending Hankel level.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if u.order < 2 * n_max:
        raise TruncationExhausted(
            "need %d moments for n_max=%d, have %d" % (2 * n_max, n_max, u.order)
        )
    polys = [ONE_POLY]
    norms = []
    bs = []
    a_s = []
    prev_norm = None
    for k in range(n_max):
        pk = polys[k]
        norm_k = apply(u, pk * pk)
        if norm_k == 0:
            raise NotQuasiDefinite(k, guard="norm")
        norms.append(norm_k)
        b_k = apply(u, X * pk * pk) / norm_k
        bs.append(b_k)
        nxt = (X - b_k) * pk
        if k >= 1:
            a_k = norm_k / prev_norm
            a_s.append(a_k)
            nxt = nxt - a_k * polys[k - 1]
        polys.append(nxt)
        prev_norm = norm_k
    return RecurrenceCoefficients(bs, a_s), OrthogonalSystem(polys, norms)


def polys_from_recurrence(rc, n_max):
    """Run the three-term recurrence forward; P_0..P_{n_max}."""
    if n_max > rc.length:
        raise TruncationExhausted(
            "recurrence has %d coefficients; cannot reach degree %d" % (rc.length, n_max)
        )
    polys = [ONE_POLY]
    for k in range(n_max):
        nxt = (X - rc.b[k]) * polys[k]
        if k >= 1:
            nxt = nxt - rc.a[k - 1] * polys[k - 1]
        polys.append(nxt)
    return tuple(polys)


def jacobi_matrix(rc, size):
    """Monic Jacobi truncation: diagonal b, subdiagonal a, unit superdiagonal."""
    if size < 1:
        raise ValueError("size must be positive")
    if size > rc.length:
        raise TruncationExhausted(
            "recurrence has %d coefficients; cannot fill size %d" % (rc.length, size)
        )
    diagonals = {0: rc.b[:size]}
    if size > 1:
        diagonals[1] = (ONE,) * (size - 1)
        diagonals[-1] = rc.a[: size - 1]
    return BandMatrix(size, diagonals)


def recurrence_from_jacobi(j):
    """Read RecurrenceCoefficients off a monic Jacobi truncation."""
    n = j.size
    for k in range(n - 1):
        if j.entry(k, k + 1) != 1:
            raise ValueError("matrix is not a monic Jacobi truncation")
    b = tuple(j.entry(k, k) for k in range(n))
    a = tuple(j.entry(k, k - 1) for k in range(1, n))
    return RecurrenceCoefficients(b, a)


def moments_from_jacobi(j, u0, n):
    """Moments u0 * (J^k)_{0,0} for k < n, read off by vector iteration.

    Entries of J^k only involve indices up to ceil(k/2), so the truncated
    matrix reproduces the untruncated moments exactly for n <= 2*size - 1
    (counting only the reliable block when the matrix carries a margin).
    """
    u0 = rat(u0)
    if n < 1:
        raise ValueError("n must be at least 1")
    usable = j.reliable
    if n > 2 * usable - 1:
        raise TruncationExhausted(
            "a reliable %dx%d truncation determines %d moments; %d requested"
            % (usable, usable, max(2 * usable - 1, 0), n)
        )
    size = j.size
    w = [ZERO] * size
    w[0] = ONE
    moments = [u0]
    lower, upper = j.lower, j.upper
    for _ in range(n - 1):
        nxt = [ZERO] * size
        for i in range(size):
            lo = max(0, i - lower)
            hi = min(size - 1, i + upper)
            acc = ZERO
            for k in range(lo, hi + 1):
                c = j.entry(i, k)
                if c != 0:
                    acc += c * w[k]
            nxt[i] = acc
        w = nxt
        moments.append(u0 * w[0])
    return MomentFunctional(moments)


def hankel_minor(u, k):
    """Leading principal minor det[u_{i+j}] of size (k+1); needs 2k+1 moments."""
    if u.order < 2 * k + 1:
        raise TruncationExhausted(
            "Hankel minor of level %d needs %d moments, have %d" % (k, 2 * k + 1, u.order)
        )
    n = k + 1
    rows = [[u.moments[i + j] for j in range(n)] for i in range(n)]
    det = ONE
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            det = -det
        pivot = rows[col][col]
        det *= pivot
        for r in range(col + 1, n):
            factor = rows[r][col] / pivot
            if factor != 0:
                for c in range(col, n):
                    rows[r][c] -= factor * rows[col][c]
    return det


def expand_in_basis(u, system, q):
    """Fourier coefficients of q in the system: c_m = <u, q P_m> / K_m.

    The reconstruction sum is re-checked exactly before returning.
    """
    d = q.degree
    if d < 0:
        return ()
    if d > len(system.norms) - 1:
        raise TruncationExhausted(
            "need norms up to level %d, have %d" % (d, len(system.norms))
        )
    coeffs = tuple(
        apply(u, q * system.polys[m]) / system.norms[m] for m in range(d + 1)
    )
    recon = Polynomial(())
    for c, p in zip(coeffs, system.polys):
        recon = recon + c * p
    if recon != q:
        raise AssertionError("orthogonal expansion failed to reconstruct its input")
    return coeffs
