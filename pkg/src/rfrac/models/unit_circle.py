"""Four-parameter second-kind model with a basic weight on a circle.

The interpolation points march geometrically inward and outward, the
minimal solution branches are very-well-poised series on either side of
the circle |z| = sqrt(q), and the spectral density is a ratio of infinite
products.  The paired rational families swap (a, t1) with (b, t2) and pair
on the unit circle.
"""

import math

import numpy as np

from ..errors import BranchBoundaryError
from ..measures import circle_contour, interval
from ..qseries import QContext, basic_phi, multi_q_pochhammer, q_pochhammer, w87
from ..recurrence import R_II, RecurrenceSpec
from .base import BiorthFamily, ModelSpec, plain_coordinate, real_base, require

NAME = "UnitCircle41"

_BRANCH_RTOL = 1e-12


def _checked(params):
    q = real_base(params["q"])
    a = complex(params["a"])
    b = complex(params["b"])
    t1 = complex(params["t1"])
    t2 = complex(params["t2"])
    rq = math.sqrt(q)
    for sym, val in (("a", a), ("b", b), ("t1", t1), ("t2", t2)):
        require(val != 0.0, f"{sym} != 0")
    require(abs(a) < 1.0, "|a| < 1")
    require(abs(b) < 1.0, "|b| < 1")
    require(abs(t1) < rq, "|t1| < sqrt(q)")
    require(abs(t2) < rq, "|t2| < sqrt(q)")
    return q, a, b, t1, t2


def _boundary_guard(z, rq):
    if abs(abs(z) - rq) <= _BRANCH_RTOL * max(1.0, rq):
        raise BranchBoundaryError(
            f"|z| = sqrt(q) separates the two closed-form branches, got z = {z}")


def _coeff_maps(q, a, b, t1, t2):
    p = a * b * t1 * t2
    rq = math.sqrt(q)

    def middle(m, z):
        # sqrt(z) times the middle recurrence coefficient; exactly linear in z
        xm = 0.5 * (1.0 - t2) * q ** -0.25 * (z - rq / t2)
        am = (q ** 0.25 * (1.0 - p * q ** (m - 2))
              * (1.0 - a * t2 * z * q ** (m - 0.5))
              * (1.0 - b * t2 * q ** (m - 1)) * (1.0 - t1 * t2 * q ** (m - 2))
              / (2.0 * t2 * (1.0 - p * q ** (2 * m - 3))
                 * (1.0 - p * q ** (2 * m - 2))))
        bm = (q ** -0.25 * t2 * (1.0 - q ** (m - 1))
              * (1.0 - a * b * q ** (m - 1)) * (1.0 - a * t1 * q ** (m - 2))
              * (z - b * t1 * q ** (m - 2.5))
              / (2.0 * (1.0 - p * q ** (2 * m - 4))
                 * (1.0 - p * q ** (2 * m - 3))))
        return xm + am + bm

    def u(m):
        return middle(m, 3.0) - middle(m, 2.0)

    def v(m):
        return middle(m, 2.0) - 2.0 * u(m)

    def c(m):
        return -v(m) / u(m)

    def lam(m):
        if m == 1:
            return 0.0
        return (a * t2 * q ** (m - 1) * (q ** (m - 1) - 1.0)
                * (1.0 - p * q ** (m - 3)) * (1.0 - b * t2 * q ** (m - 2))
                * (1.0 - t1 * t2 * q ** (m - 3)) * (1.0 - a * b * q ** (m - 1))
                * (1.0 - a * t1 * q ** (m - 2))
                / (4.0 * math.sqrt(q) * (1.0 - p * q ** (2 * m - 5))
                   * (1.0 - p * q ** (2 * m - 4)) ** 2
                   * (1.0 - p * q ** (2 * m - 3)) * u(m - 1) * u(m)))

    def amap(m):
        return b * t1 * q ** (m - 2.5)

    def bmap(m):
        return q ** (1.5 - m) / (a * t2)

    return u, v, c, lam, amap, bmap


class _UProd:
    """Cached partial products of the leading-coefficient factors."""

    def __init__(self, u):
        self.u = u
        self.vals = [1.0 + 0.0j]

    def __call__(self, n):
        while len(self.vals) <= n:
            self.vals.append(self.vals[-1] * self.u(len(self.vals)))
        return self.vals[n]


def _solution_outer(ctx, a, b, t1, t2, uprod, n, z):
    # valid for |z| > sqrt(q)
    q = ctx.q
    p = a * b * t1 * t2
    rq = math.sqrt(q)
    num = multi_q_pochhammer(ctx, (
        p * q ** (2 * n - 1), t2 * q ** (n + 1), a * q ** (n + 2),
        b * q ** n * rq * q / z, t1 * q ** n * rq / z))
    den = multi_q_pochhammer(ctx, (
        q ** (n + 1), q ** (n + 2) * rq / z, a * t2 * q ** n * rq * z,
        b * t2 * q ** n, t1 * t2 * q ** (n - 1), a * b * q ** (n + 1),
        a * t1 * q ** n, b * t1 * q ** (n - 1) * rq / z))
    w = w87(ctx, q ** (n + 1) * rq / z, q ** (n + 1), q * rq / (t2 * z),
            rq / (a * z), q / b, q * q / t1, p * q ** (n - 1))
    return (0.25 ** n * q ** (0.25 * n) * 2.0 ** n) * num / den * w.value \
        / uprod(n)


def _solution_inner(ctx, a, b, t1, t2, uprod, n, z):
    # valid for |z| < sqrt(q)
    q = ctx.q
    p = a * b * t1 * t2
    rq = math.sqrt(q)
    num = multi_q_pochhammer(ctx, (
        p * q ** (2 * n - 1), t2 * z * q ** n * rq, a * z * q ** (n + 1) * rq,
        b * q ** (n + 1), t1 * q ** n))
    den = multi_q_pochhammer(ctx, (
        q ** (n + 1), z * q ** (n + 1) * rq, a * t2 * z * q ** n * rq,
        b * t2 * q ** n, t1 * t2 * q ** (n - 1), a * b * q ** (n + 1),
        a * t1 * q ** n, b * t1 * q ** (n - 1) * rq / z))
    w = w87(ctx, q ** n * rq * z, q ** (n + 1), q / t2, 1.0 / a,
            rq * z / b, q * rq * z / t1, p * q ** (n - 1))
    return (0.5 * z * q ** -0.25) ** n * num / den * w.value / uprod(n)


def _poly(ctx, a, b, t1, t2, uprod, n, z):
    q = ctx.q
    p = a * b * t1 * t2
    rq = math.sqrt(q)
    pref = (q ** (0.25 * n)
            * multi_q_pochhammer(ctx, (a * t2 * z * rq, b * t2, t1 * t2 / q,
                                       p / q), n)
            / ((2.0 * t2) ** n * q_pochhammer(ctx, p / q, 2 * n) * uprod(n)))
    s = basic_phi(ctx, (q ** -n, p * q ** (n - 1), t2 * z / rq, t2),
                  (a * t2 * z * rq, b * t2, t1 * t2 / q), q)
    return pref * s.value


def build(params):
    q, a, b, t1, t2 = _checked(params)
    ctx = QContext(q)
    rq = math.sqrt(q)
    p = a * b * t1 * t2
    u, v, c, lam, amap, bmap = _coeff_maps(q, a, b, t1, t2)
    uprod = _UProd(u)

    spec = RecurrenceSpec(kind=R_II, c=c, lam=lam, a=amap, b=bmap)

    def minimal(n, z):
        zc = complex(z)
        _boundary_guard(zc, rq)
        if abs(zc) < rq:
            return _solution_inner(ctx, a, b, t1, t2, uprod, n, zc)
        return _solution_outer(ctx, a, b, t1, t2, uprod, n, zc)

    def cf_value(z):
        zc = complex(z)
        _boundary_guard(zc, rq)
        if abs(zc) < rq:
            pref = (2.0 * u(1) * q ** -0.25 * (1.0 - p / q)
                    * (1.0 - rq * zc)
                    / ((1.0 - b) * (1.0 - t1 / q) * (1.0 - t2 * zc / rq)
                       * (1.0 - a * zc * rq)))
            w = w87(ctx, zc * rq, q, q / t2, 1.0 / a, rq * zc / b,
                    q * rq * zc / t1, p / q)
        else:
            pref = (2.0 * u(1) * q ** 0.25 * (1.0 - p / q)
                    * (1.0 - q * rq / zc)
                    / (zc * (1.0 - t2) * (1.0 - a * q) * (1.0 - b * rq / zc)
                       * (1.0 - t1 / (rq * zc))))
            w = w87(ctx, q * rq / zc, q, q * rq / (t2 * zc), rq / (a * zc),
                    q / b, q * q / t1, p / q)
        return pref * w.value

    # base weight shared by the spectral density and the pairing
    fconst = multi_q_pochhammer(ctx, (b * t2, a * t1, a * b * q,
                                      t1 * t2 / q, q)) \
        / multi_q_pochhammer(ctx, (a * q, b * q, t1, t2, p))

    def base_weight(t):
        num = (q_pochhammer(ctx, rq * t) * q_pochhammer(ctx, rq / t)
               * q_pochhammer(ctx, a * t2 * rq * t)
               * q_pochhammer(ctx, b * t1 * rq / t))
        den = (q_pochhammer(ctx, a * rq * t) * q_pochhammer(ctx, b * rq / t)
               * q_pochhammer(ctx, t2 * t / rq)
               * q_pochhammer(ctx, t1 / (rq * t)))
        return fconst * num / den

    dconst = 1j * u(1) / (math.pi * q ** 0.25 * (1.0 - t1 / q) * (1.0 - b))

    def density(theta):
        t = rq * np.exp(1j * np.asarray(theta, dtype=float))
        return dconst * (1.0 - b * t1 / (rq * t)) * base_weight(t)

    measure = circle_contour(rq, density, support_meta=f"|t| = sqrt({q})")

    def pairing_density(theta):
        t = np.exp(1j * np.asarray(theta, dtype=float))
        return 1j * base_weight(t) / (2.0 * math.pi * t)

    pairing = circle_contour(1.0, pairing_density, support_meta="|t| = 1")

    extras = {
        "ctx": ctx,
        "u": u,
        "uprod": uprod,
        "solution_inner": lambda n, z: _solution_inner(ctx, a, b, t1, t2,
                                                       uprod, n, complex(z)),
        "solution_outer": lambda n, z: _solution_outer(ctx, a, b, t1, t2,
                                                       uprod, n, complex(z)),
        "poly": lambda n, z: _poly(ctx, a, b, t1, t2, uprod, n, complex(z)),
        "base_weight": base_weight,
        "pairing": pairing,
    }
    return ModelSpec(name=NAME,
                     params={"q": q, "a": a, "b": b, "t1": t1, "t2": t2},
                     spec=spec, measure=measure, coordinate=plain_coordinate(),
                     minimal=minimal, cf_value=cf_value, extras=extras)


def rational_first(ctx, a, b, t1, t2, n, z):
    q = ctx.q
    p = a * b * t1 * t2
    rq = math.sqrt(q)
    s = basic_phi(ctx, (q ** -n, p * q ** (n - 1), t2 * z / rq, t2),
                  (a * t2 * z * rq, b * t2, t1 * t2 / q), q)
    return s.value


def rational_second(ctx, a, b, t1, t2, n, z):
    # the first family with (a, t1) and (b, t2) interchanged
    return rational_first(ctx, b, a, t2, t1, n, z)


def biorth_family(model):
    pp = model.params
    q, a, b, t1, t2 = pp["q"], pp["a"], pp["b"], pp["t1"], pp["t2"]
    ctx = model.extras["ctx"]
    p = a * b * t1 * t2

    def left(m):
        return lambda t: rational_first(ctx, a, b, t1, t2, m, complex(t))

    def right(n):
        return lambda t: rational_second(ctx, a, b, t1, t2, n,
                                         1.0 / complex(t))

    def norm(n):
        return (-(t1 * t2 / q) ** n
                * (q_pochhammer(ctx, q, n) * q_pochhammer(ctx, a * b * q, n)
                   * q_pochhammer(ctx, p * q ** (n - 1), n))
                / (q_pochhammer(ctx, t1 * t2 / q, n)
                   * q_pochhammer(ctx, p, 2 * n)))

    return BiorthFamily(left=left, right=right, norm=norm,
                        validity="0 < q < 1, |a|, |b| < 1, |t1|, |t2| < sqrt(q), all nonzero",
                        pairing=model.extras["pairing"])


def trig_weight_density(q, p1, p2, p3, p4):
    """Angle-variable density of the classical four-parameter trig weight.

    Returns a theta closure (vectorized) whose integral over [0, pi] is 1
    when all parameter moduli are below 1; useful as an independent
    quadrature reference.
    """
    qv = real_base(q)
    ctx = QContext(qv)
    pr = (p1, p2, p3, p4)
    for val in pr:
        require(abs(complex(val)) < 1.0, "all four parameters inside the unit disk")
    pairs = [pr[i] * pr[j] for i in range(4) for j in range(i + 1, 4)]
    const = (multi_q_pochhammer(ctx, tuple(pairs) + (qv,))
             / (2.0 * math.pi * q_pochhammer(ctx, p1 * p2 * p3 * p4)))

    def theta_density(theta):
        e = np.exp(1j * np.asarray(theta, dtype=float))
        num = q_pochhammer(ctx, e * e) * q_pochhammer(ctx, 1.0 / (e * e))
        den = np.ones_like(e)
        for val in pr:
            den = den * q_pochhammer(ctx, val * e) * q_pochhammer(ctx, val / e)
        return const * num / den

    return theta_density


def trig_weight_measure(q, p1, p2, p3, p4):
    td = trig_weight_density(q, p1, p2, p3, p4)

    def weight(x):
        xa = np.asarray(x, dtype=float)
        return td(np.arccos(xa)) / np.sqrt(1.0 - xa * xa)

    return interval(-1.0, 1.0, weight, theta_density=td,
                    support_meta="[-1, 1]")
