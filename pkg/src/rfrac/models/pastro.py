"""First-kind model with a two-parameter basic weight on a circle.

The coefficient family keeps all interpolation points at the origin, so the
numerator polynomials are ordinary Laurent-type polynomials.  The spectral
measure is absolutely continuous on the circle of radius sqrt(q), and the
polynomial family pairs against a second family with the two weight
parameters swapped, the pairing living on the unit circle.
"""

import cmath
import math

import numpy as np

from ..errors import BranchBoundaryError
from ..measures import circle_contour, stieltjes
from ..qseries import QContext, basic_phi, multi_q_pochhammer, q_pochhammer
from ..recurrence import R_I, RecurrenceSpec
from .base import BiorthFamily, ModelSpec, plain_coordinate, real_base, require

NAME = "Pastro21"

_BRANCH_RTOL = 1e-12


def _checked(params):
    q = real_base(params["q"])
    a = complex(params["a"])
    b = complex(params["b"])
    require(a != 0.0, "a != 0")
    require(b != 0.0, "b != 0")
    require(abs(a * q) < 1.0, "|a q| < 1")
    require(abs(b) < 1.0, "|b| < 1")
    return q, a, b


def _boundary_guard(z, rq):
    if abs(abs(z) - rq) <= _BRANCH_RTOL * max(1.0, rq):
        raise BranchBoundaryError(
            f"|z| = sqrt(q) separates the two closed-form branches, got z = {z}")


def _solution_inner(ctx, a, b, n, z):
    # valid for |z| < sqrt(q)
    q = ctx.q
    pref = (z ** n
            * multi_q_pochhammer(ctx, (a * q ** (n + 1), b * q ** (n + 1)))
            / multi_q_pochhammer(ctx, (q ** (n + 1), a * b * q ** (n + 1))))
    s = basic_phi(ctx, (1.0 / a, q ** (n + 1)), (b * q ** (n + 1),),
                  a * z * math.sqrt(q))
    return pref * s.value


def _solution_outer(ctx, a, b, n, z):
    # valid for |z| > sqrt(q)
    q = ctx.q
    pref = (q ** (0.5 * n)
            * multi_q_pochhammer(ctx, (a * q ** (n + 2), a * q ** (n + 1)))
            / multi_q_pochhammer(ctx, (q ** (n + 1), a * b * q ** (n + 1))))
    s = basic_phi(ctx, (q / b, q ** (n + 1)), (a * q ** (n + 2),),
                  b * math.sqrt(q) / z)
    return pref * s.value


def _poly_first(ctx, a, b, m, z):
    q = ctx.q
    pref = (q ** (0.5 * m) * q_pochhammer(ctx, b, m)
            / q_pochhammer(ctx, a * q, m))
    s = basic_phi(ctx, (q ** (-m), a * q), (q ** (1 - m) / b,),
                  z * math.sqrt(q) / b)
    return pref * s.value


def _poly_second(ctx, a, b, m, z):
    # the first family with the weight parameters swapped
    return _poly_first(ctx, b, a, m, z)


def build(params):
    q, a, b = _checked(params)
    ctx = QContext(q)
    rq = math.sqrt(q)

    def c(n):
        return -rq * (1.0 - b * q ** (n - 1)) / (1.0 - a * q ** n)

    def lam(n):
        if n == 1:
            return 0.0
        return (rq * (1.0 - q ** (n - 1)) * (1.0 - a * b * q ** (n - 1))
                / ((1.0 - a * q ** n) * (1.0 - a * q ** (n - 1))))

    spec = RecurrenceSpec(kind=R_I, c=c, lam=lam, a=lambda n: 0.0)

    def minimal(n, z):
        zc = complex(z)
        _boundary_guard(zc, rq)
        if abs(zc) < rq:
            return _solution_inner(ctx, a, b, n, zc)
        return _solution_outer(ctx, a, b, n, zc)

    def cf_value(z):
        zc = complex(z)
        _boundary_guard(zc, rq)
        if abs(zc) < rq:
            s = basic_phi(ctx, (1.0 / a, q), (q * b,), a * zc * rq)
            return (1.0 - a * q) / ((1.0 - b) * rq) * s.value
        s = basic_phi(ctx, (q / b, q), (a * q * q,), b * rq / zc)
        return s.value / zc

    # density of the spectral measure on |t| = sqrt(q), normalized to mass 1
    dconst = (q_pochhammer(ctx, q) * q_pochhammer(ctx, a * b * q)
              / (q_pochhammer(ctx, a * q * q) * q_pochhammer(ctx, b)))

    def density(theta):
        t = rq * np.exp(1j * np.asarray(theta, dtype=float))
        num = q_pochhammer(ctx, rq * t) * q_pochhammer(ctx, rq / t)
        den = q_pochhammer(ctx, a * rq * t) * q_pochhammer(ctx, b * rq / t)
        return (1j / (2.0 * math.pi * rq)) * dconst * num / den

    measure = circle_contour(rq, density,
                             support_meta=f"|t| = sqrt({q})")

    # weight of the swapped-parameter pairing on the unit circle, in theta
    fconst = (q_pochhammer(ctx, q) * q_pochhammer(ctx, q * a * b)
              / (q_pochhammer(ctx, q * a) * q_pochhammer(ctx, q * b)))

    def pairing_weight(t):
        num = q_pochhammer(ctx, rq * t) * q_pochhammer(ctx, rq / t)
        den = q_pochhammer(ctx, a * rq * t) * q_pochhammer(ctx, b * rq / t)
        return fconst / (2.0 * math.pi) * num / den

    def pairing_density(theta):
        t = np.exp(1j * np.asarray(theta, dtype=float))
        return pairing_weight(t) / (1j * t)

    pairing = circle_contour(1.0, pairing_density, support_meta="|t| = 1")

    extras = {
        "ctx": ctx,
        "solution_inner": lambda n, z: _solution_inner(ctx, a, b, n, complex(z)),
        "solution_outer": lambda n, z: _solution_outer(ctx, a, b, n, complex(z)),
        "poly_first": lambda m, z: _poly_first(ctx, a, b, m, complex(z)),
        "poly_second": lambda m, z: _poly_second(ctx, a, b, m, complex(z)),
        "pairing_weight": pairing_weight,
        "pairing": pairing,
    }
    return ModelSpec(name=NAME, params={"q": q, "a": a, "b": b}, spec=spec,
                     measure=measure, coordinate=plain_coordinate(),
                     minimal=minimal, cf_value=cf_value, extras=extras)


def biorth_family(model):
    q = model.params["q"]
    a = model.params["a"]
    b = model.params["b"]
    require(abs(a) < 1.0, "|a| < 1 for the unit-circle pairing")
    ctx = model.extras["ctx"]

    def left(m):
        return lambda t: _poly_first(ctx, a, b, m, complex(t))

    def right(n):
        return lambda t: _poly_second(ctx, a, b, n, 1.0 / complex(t))

    def norm(n):
        return (q_pochhammer(ctx, q, n) * q_pochhammer(ctx, a * b * q, n)
                / (q_pochhammer(ctx, a * q, n) * q_pochhammer(ctx, b * q, n)))

    return BiorthFamily(left=left, right=right, norm=norm,
                        validity="0 < q < 1, |a| < 1, |b| < 1, a b != 0",
                        pairing=model.extras["pairing"])


def transform_241(params, n, k, z, cfg=None):
    """Moment-type circle integral of t^(k-n) against the n-th polynomial.

    Returns (lhs, rhs): the contour integral computed by quadrature and its
    closed-form value, which switches branch across |z| = sqrt(q).
    """
    q, a, b = _checked(params)
    require(isinstance(n, int) and isinstance(k, int) and 0 <= k <= n,
            "integers 0 <= k <= n")
    ctx = QContext(q)
    rq = math.sqrt(q)
    zc = complex(z)
    _boundary_guard(zc, rq)

    def kernel_density(theta):
        t = rq * cmath.exp(1j * float(theta))
        ratio = (q_pochhammer(ctx, rq * t) * q_pochhammer(ctx, rq / t)
                 / (q_pochhammer(ctx, a * rq * t)
                    * q_pochhammer(ctx, b * rq / t)))
        return (1j / (2.0 * math.pi)) * t ** (k - n) \
            * _poly_first(ctx, a, b, n, t) * ratio

    m = circle_contour(rq, kernel_density)
    lhs = stieltjes(m, zc, cfg)

    if abs(zc) < rq:
        pref = (zc ** k
                * multi_q_pochhammer(ctx, (a * q ** (n + 1), b * q ** (n + 1)))
                / multi_q_pochhammer(ctx, (q ** (n + 1), a * b * q ** (n + 1))))
        s = basic_phi(ctx, (1.0 / a, q ** (n + 1)), (b * q ** (n + 1),),
                      a * zc * rq)
        rhs = pref * s.value
    else:
        pref = (q ** (0.5 * (n + 1)) * zc ** (k - n - 1)
                * multi_q_pochhammer(ctx, (a * q ** (n + 1), a * q ** (n + 2), b))
                / multi_q_pochhammer(ctx, (q ** (n + 1), a * b * q ** (n + 1),
                                           a * q)))
        s = basic_phi(ctx, (q / b, q ** (n + 1)), (a * q ** (n + 2),),
                      b * rq / zc)
        rhs = pref * s.value
    return lhs, rhs
