"""Moment linear functionals stored as finite exact moment sequences.

A functional of order N carries the moments (u_0, ..., u_{N-1}), i.e. its
values on 1, x, ..., x^{N-1}.  Every operation states how the order moves:
products with a polynomial lose its degree, division by a power of (x - c)
gains that power, everything else preserves or intersects orders.
"""

from .errors import DegenerateParameter, TruncationExhausted, ZeroFirstMoment
from .poly import Polynomial, linear_power, monomial
from .rational import ZERO, ONE, rat


class MomentFunctional:
    __slots__ = ("moments", "label")

    def __init__(self, moments, label=None):
        ms = tuple(rat(m) for m in moments)
        if not ms:
            raise ValueError("a moment functional needs at least one moment")
        self.moments = ms
        self.label = label

    @property
    def order(self):
        return len(self.moments)

    def moment(self, k):
        if 0 <= k < len(self.moments):
            return self.moments[k]
        raise TruncationExhausted(
            "moment %d requested but only %d are stored" % (k, len(self.moments))
        )

    def truncated(self, order):
        if order < 1:
            raise ValueError("order must be at least 1")
        if order > len(self.moments):
            raise TruncationExhausted(
                "cannot extend order %d to %d" % (len(self.moments), order)
            )
        return MomentFunctional(self.moments[:order], label=self.label)

    def normalized(self):
        """Scale so the first moment is 1."""
        u0 = self.moments[0]
        if u0 == 0:
            raise ZeroFirstMoment("cannot normalize: u_0 = 0")
        return MomentFunctional(tuple(m / u0 for m in self.moments), label=self.label)

    def relabeled(self, label):
        return MomentFunctional(self.moments, label=label)

    def __eq__(self, other):
        if not isinstance(other, MomentFunctional):
            return NotImplemented
        return self.moments == other.moments

    def __hash__(self):
        return hash(self.moments)

    def __repr__(self):
        head = ", ".join(str(m) for m in self.moments[:4])
        if len(self.moments) > 4:
            head += ", ..."
        name = " %r" % self.label if self.label else ""
        return "MomentFunctional(%s order=%d: %s)" % (name, len(self.moments), head)


def functional(moments, label=None):
    if isinstance(moments, MomentFunctional):
        return moments
    return MomentFunctional(moments, label=label)


def delta(c, order):
    """Point evaluation at c: moments c^k."""
    c = rat(c)
    out = [ONE]
    for _ in range(order - 1):
        out.append(out[-1] * c)
    return MomentFunctional(out)


def derivative(u):
    """Distributional derivative: (u')_n = -n * u_{n-1}; the order carries over."""
    if u.order < 2:
        raise TruncationExhausted("need order >= 2 to differentiate a functional")
    out = [ZERO]
    for n in range(1, u.order):
        out.append(-n * u.moments[n - 1])
    return MomentFunctional(out)


def add(u, v):
    order = min(u.order, v.order)
    return MomentFunctional(
        tuple(u.moments[k] + v.moments[k] for k in range(order))
    )


def sub(u, v):
    return add(u, scale(-1, v))


def scale(c, u):
    c = rat(c)
    return MomentFunctional(tuple(c * m for m in u.moments))


def convolve(u, v):
    """Cauchy product of the moment sequences; order is the min of the inputs'."""
    order = min(u.order, v.order)
    out = []
    for n in range(order):
        out.append(sum((u.moments[k] * v.moments[n - k] for k in range(n + 1)), ZERO))
    return MomentFunctional(out)


def invert(u):
    """Convolution inverse: u * invert(u) has moments (1, 0, 0, ...)."""
    u0 = u.moments[0]
    if u0 == 0:
        raise ZeroFirstMoment("u_0 = 0 has no convolution inverse")
    inv0 = 1 / u0
    out = [inv0]
    for n in range(1, u.order):
        acc = ZERO
        for k in range(n):
            acc += u.moments[n - k] * out[k]
        out.append(-inv0 * acc)
    return MomentFunctional(out)


def apply(u, p):
    """Value of the functional on a polynomial."""
    if p.degree >= u.order:
        raise TruncationExhausted(
            "degree %d exceeds stored moments (order %d)" % (p.degree, u.order)
        )
    return sum((c * u.moments[k] for k, c in enumerate(p.coeffs)), ZERO)


def multiply_poly(u, p):
    """Left multiplication by a polynomial: (p u)_n = <u, p x^n>.

    The order drops by deg p, since the top moments are consumed.
    """
    if not isinstance(p, Polynomial):
        p = Polynomial((rat(p),)) if not isinstance(p, (list, tuple)) else Polynomial(p)
    if p.is_zero:
        raise DegenerateParameter("multiplying a functional by the zero polynomial")
    order = u.order - p.degree
    if order < 1:
        raise TruncationExhausted(
            "order %d cannot absorb a degree-%d factor" % (u.order, p.degree)
        )
    out = []
    for n in range(order):
        out.append(
            sum((c * u.moments[n + k] for k, c in enumerate(p.coeffs)), ZERO)
        )
    return MomentFunctional(out)


def divide_power(u, c, m):
    """The m-th order division by (x - c) that adds no mass at c.

    Moment n of the result is <u, q_n> with q_n the exact polynomial
    quotient of x^n by (x - c)^m; the first m moments vanish and the
    order grows by m.  Adding multiples of evaluations/derivatives at c
    is the caller's business (see geronimus / quadratic_geronimus).
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    lp = linear_power(c, m)
    out = []
    for n in range(u.order + m):
        q = monomial(n) // lp
        out.append(apply(u, q))
    return MomentFunctional(out)


def geronimus(u, c, m0):
    """A functional v with (x - c) v = u and v_0 = m0; order grows by one."""
    c = rat(c)
    m0 = rat(m0)
    base = divide_power(u, c, 1)
    return add(base, scale(m0, delta(c, base.order)))


def quadratic_geronimus(u, c, m0, m1):
    """A functional v with (x - c)^2 v = u, v_0 = m0, v_1 = m1; order grows by two."""
    c = rat(c)
    m0 = rat(m0)
    m1 = rat(m1)
    base = divide_power(u, c, 2)
    mass = scale(m0, delta(c, base.order))
    tilt = scale(c * m0 - m1, derivative(delta(c, base.order)))
    out = add(add(base, mass), tilt)
    if out.moments[0] != m0 or out.moments[1] != m1:
        raise AssertionError("quadratic division lost its prescribed first moments")
    return out


def equal_functionals(u, v, order=None):
    """On-the-nose equality of the common (or requested) moment prefix."""
    n = min(u.order, v.order)
    if order is not None:
        if order > n:
            raise TruncationExhausted(
                "cannot compare %d moments; only %d are shared" % (order, n)
            )
        n = order
    return u.moments[:n] == v.moments[:n]


def equal_normalized(u, v, order=None):
    """Equality after scaling both first moments to 1."""
    return equal_functionals(u.normalized(), v.normalized(), order=order)


def first_moment_mismatch(u, v):
    """Index of the first differing shared moment, or None."""
    for k in range(min(u.order, v.order)):
        if u.moments[k] != v.moments[k]:
            return k
    return None
