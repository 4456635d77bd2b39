"""Rational deformation of the second-kind Chebyshev weight.

Dividing the Chebyshev weight by a real quadratic under each of two
parameters puts one geometric ladder of poles under each parameter.  The
recurrence is the base-point specialization (middle parameter equal to q)
of the nonsymmetric model next door, and all closed forms collapse to
plain infinite products and one-line rationals.

Both parameters at zero is an allowed corner: the model constructs, the
weight reduces to the undeformed Chebyshev one, and the family collapses
(every member past the constant vanishes identically).  The recurrence
coefficient maps are undefined there and fail on first call, taking the
ladder-backed closed solution and the fraction value with them.
"""

import math

import numpy as np

from ..measures import interval, normalization
from ..qseries import QContext, basic_phi, multi_q_pochhammer, q_pochhammer
from ..recurrence import R_II, RecurrenceSpec
from .base import (BiorthFamily, ModelSpec, joukowski_coordinate, require,
                   real_base, unit_circle_pair)
from .rahman import _Prod, _outer_root, recurrence_maps

NAME = "ChebyRational51"


def _checked(params):
    q = real_base(params["q"])
    al = complex(params["alpha"])
    de = complex(params["delta"])
    require(max(abs(al), abs(de)) < 1.0, "max(|alpha|, |delta|) < 1")
    return q, al, de


def _weight(al, de):
    def weight(x):
        return (2.0 / math.pi) * np.sqrt(1.0 - x * x) / (
            (1.0 - 2.0 * al * x + al * al)
            * (1.0 - 2.0 * de * x + de * de))

    return weight


def build(params):
    q, al, de = _checked(params)
    ctx = QContext(q)
    u, c, lam, amap, bmap = recurrence_maps(q, al, q, de)
    uprod = _Prod(u)
    spec = RecurrenceSpec(kind=R_II, c=c, lam=lam, a=amap, b=bmap)

    def minimal(n, z):
        require(al != 0.0 and de != 0.0,
                "alpha != 0 and delta != 0 for the closed solution")
        uu = _outer_root(z)
        num = q_pochhammer(ctx, al * de * q ** (2 * n + 1))
        den = multi_q_pochhammer(ctx, (
            q ** (n + 1), al * q ** (n + 1) * uu, al * de * q ** n,
            de * q ** (n + 1) * uu))
        return (2.0 * uu) ** -n * num / (den * uprod(n))

    def cf_value(z):
        # normalized to the moment functional's scale, like every model
        x0 = minimal(0, z)
        x1 = minimal(1, z)
        return x0 / ((z - c(1)) * x0 - x1)

    def transform_value(z):
        """Closed transform of the weight, scaled by transform_scale."""
        uu = _outer_root(z)
        return (2.0 / uu * (1.0 - al * de * q)
                / ((1.0 - al / uu) * (1.0 - q) * (1.0 - de / uu)))

    measure = interval(
        -1.0, 1.0, _weight(al, de), chebyshev_second_kind=True,
        support_meta="segment [-1, 1], Chebyshev weight over two real "
                     "quadratics")

    extras = {
        "ctx": ctx,
        "u": u,
        "uprod": uprod,
        "mass": 1.0 / (1.0 - al * de),
        "transform": transform_value,
        # transform_value(z) = transform_scale * integral of w/(z - x)
        "transform_scale": ((1.0 - al * de * q) * (1.0 - al * de)
                            / (1.0 - q)),
    }
    return ModelSpec(name=NAME, params={"q": q, "alpha": al, "delta": de},
                     spec=spec, measure=measure,
                     coordinate=joukowski_coordinate(), minimal=minimal,
                     cf_value=cf_value, extras=extras)


def rational_ladder(ctx, al, de, n, x):
    """Terminating series member with poles down the first ladder."""
    q = ctx.q
    e, ei = unit_circle_pair(x)
    return basic_phi(ctx, (q ** -n, al * de * q ** n, al * e, al * ei),
                     (al * de, q * al * e, q * al * ei), q).value


def partial_fractions(ctx, al, de, n, x):
    """The same member over its head pole factor, as an explicit sum of
    simple poles down the ladder.  Agrees with rational_ladder divided by
    (1 - 2*al*x + al^2)."""
    q = ctx.q
    total = 0.0 + 0.0j
    binom = 1.0 + 0.0j
    shift = 1.0 + 0.0j
    sign = 1.0
    for k in range(n + 1):
        total += (binom * shift * sign
                  / (1.0 - 2.0 * al * q ** k * x + al * al * q ** (2 * k)))
        binom *= (1.0 - q ** (n - k)) / (1.0 - q ** (k + 1))
        shift *= (1.0 - al * de * q ** (n + k)) / (1.0 - al * de * q ** k)
        # the exponent k(k+1)/2 - nk makes the coefficient exactly
        # (q^{-n};q)_k q^k / (q;q)_k over the gaussian binomial
        sign *= -q ** (k + 1 - n)
    return total


def biorth_family(model):
    pp = model.params
    q, al, de = pp["q"], pp["alpha"], pp["delta"]
    ctx = model.extras["ctx"]

    def left(m):
        return lambda x: rational_ladder(ctx, de, al, m, x)

    def right(n):
        return lambda x: rational_ladder(ctx, al, de, n, x)

    def norm(n):
        qn = q_pochhammer(ctx, q, n)
        an = q_pochhammer(ctx, al * de, n)
        return ((al * de) ** n * qn * qn
                / (an * an * (1.0 - al * de * q ** (2 * n))))

    return BiorthFamily(left=left, right=right, norm=norm,
                        validity="max(|alpha|, |delta|) < 1",
                        pairing=model.measure)


def elementary_mass(params, cfg=None):
    """Total mass of the weight against its rational closed form.

    Returns (lhs, rhs): the quadrature value and 1/(1 - alpha*delta).
    """
    q, al, de = _checked(params)
    m = interval(-1.0, 1.0, _weight(al, de), chebyshev_second_kind=True)
    lhs = normalization(m, cfg)
    rhs = 1.0 / (1.0 - al * de)
    return lhs, rhs
