"""Nonsymmetric three-parameter model on [-1, 1].

Collapsing the two middle parameters of the four-parameter scheme onto the
spectral variable leaves a weight with doubled poles inside the unit circle
and a second-kind recurrence whose interpolation points ride two geometric
ladders.  The biorthogonal pair here is genuinely nonsymmetric: one side is
a plain terminating series, the other carries an extra quadratic balancing
pair, and they talk to each other through a triangle of connection weights.

The coefficient maps are assembled from the two ladder slopes rather than
from the expanded displays, so they stay consistent with the closed
solutions at every index.
"""

import cmath
import math

import numpy as np

from ..errors import PoleError, SupportProximityError
from ..measures import interval, normalization
from ..qseries import QContext, basic_phi, multi_q_pochhammer, q_pochhammer, w87
from ..recurrence import R_II, RecurrenceSpec
from .base import (BiorthFamily, ModelSpec, joukowski_coordinate,
                   joukowski_split, require, real_base, unit_circle_pair)

NAME = "Rahman52"

_SUPPORT_RTOL = 1e-12


def checked_triple(params):
    q = real_base(params["q"])
    al = complex(params["alpha"])
    be = complex(params["beta"])
    de = complex(params["delta"])
    return q, al, be, de


def _checked(params):
    q, al, be, de = checked_triple(params)
    p = al * be * be * de
    require(be != 0.0, "beta != 0")
    require(max(abs(al), abs(be), abs(de)) < 1.0,
            "max(|alpha|, |beta|, |delta|) < 1")
    require(abs(p / q) < 1.0, "|alpha beta^2 delta| < q")
    return q, al, be, de


def recurrence_maps(q, al, be, de):
    """R_II coefficient callables for the collapsed scheme.

    Degenerate corners (alpha = 0, or a vanishing ladder product) fail
    lazily, on the first call of the affected map; construction itself
    never evaluates them.
    """
    p = al * be * be * de

    def slope_a(n):
        return (-be * q ** n * (1.0 - p * q ** (n - 1))
                * (1.0 - al * de * q ** n)
                / ((1.0 - p * q ** (2 * n - 1)) * (1.0 - p * q ** (2 * n))))

    def slope_b(n):
        return (-al * be * de * q ** (n - 1) * (1.0 - q ** n)
                * (1.0 - be * be * q ** (n - 1))
                / ((1.0 - p * q ** (2 * n - 2))
                   * (1.0 - p * q ** (2 * n - 1))))

    def root_a(n):
        return 0.5 * (be * de * q ** (n - 1) + q ** (1 - n) / (be * de))

    def root_b(n):
        return 0.5 * (al * be * q ** n + q ** -n / (al * be))

    def u(m):
        return 1.0 + slope_a(m - 1) + slope_b(m - 1)

    def c(m):
        const = (-0.5 * (al + 1.0 / al)
                 - slope_a(m - 1) * root_b(m - 1)
                 - slope_b(m - 1) * root_a(m - 1))
        return -const / u(m)

    def lam(m):
        if m == 1:
            return 0.0
        return slope_a(m - 2) * slope_b(m - 1) / (u(m - 1) * u(m))

    def amap(m):
        return root_a(m - 1)

    def bmap(m):
        return root_b(m - 2)

    return u, c, lam, amap, bmap


class _Prod:
    """Cached prefix products of a coefficient map, empty product at 0."""

    def __init__(self, f):
        self.f = f
        self.vals = [1.0 + 0.0j]

    def __call__(self, n):
        while len(self.vals) <= n:
            self.vals.append(self.vals[-1] * self.f(len(self.vals)))
        return self.vals[n]


def _outer_root(z):
    u = joukowski_split(complex(z))
    if abs(abs(u) - 1.0) <= _SUPPORT_RTOL:
        raise SupportProximityError(
            f"z = {complex(z)} lies on the segment [-1, 1] carrying the "
            "measure")
    return u


def solution_ladder(ctx, al, be, de, uprod, n, z):
    """Closed form of the subdominant solution at degree index n.

    Very well poised series in the outer root u of z = (u + 1/u)/2; both
    u-roots give the same value, so the split is only a convention.
    """
    q = ctx.q
    p = al * be * be * de
    u = _outer_root(z)
    num = multi_q_pochhammer(ctx, (
        p * q ** (2 * n - 1), al * q ** (n + 1) / u,
        be * q ** (n + 1) / (u * u), be * q ** (n + 1),
        de * q ** (n + 1) / u))
    den = multi_q_pochhammer(ctx, (
        q ** (n + 1), q ** (n + 2) / (u * u), al * be * q ** n * u,
        al * be * q ** n / u, al * de * q ** n, be * be * q ** n,
        be * de * q ** n * u, be * de * q ** n / u))
    w = w87(ctx, q ** (n + 1) / (u * u), q ** (n + 1), q / (al * u),
            q / be, q / (be * u * u), q / (de * u), p * q ** (n - 1))
    return (2.0 * u) ** -n * num / den * w.value / uprod(n)


def _spectral_theta(ctx, al, be, de):
    """Density on the angle variable for the model's own measure.

    The value already includes the full normalizing constant; its integral
    over [0, pi] is the total mass of the measure.
    """
    p = al * be * be * de
    fconst = (multi_q_pochhammer(ctx, (al * de, be * be, ctx.q))
              / (multi_q_pochhammer(ctx, (be, be, p)) * 2.0 * math.pi))

    def theta_density(theta):
        e = np.exp(1j * np.asarray(theta, dtype=float))
        ei = 1.0 / e
        num = (q_pochhammer(ctx, e * e) * q_pochhammer(ctx, ei * ei)
               * q_pochhammer(ctx, al * be * e)
               * q_pochhammer(ctx, al * be * ei)
               * q_pochhammer(ctx, be * de * e)
               * q_pochhammer(ctx, be * de * ei))
        den = (q_pochhammer(ctx, al * e) * q_pochhammer(ctx, al * ei)
               * q_pochhammer(ctx, be * e * e)
               * q_pochhammer(ctx, be * ei * ei)
               * q_pochhammer(ctx, de * e) * q_pochhammer(ctx, de * ei))
        return fconst * num / den

    return theta_density


def _pairing_theta(ctx, al, be, de):
    """Angle density of the pairing weight (no normalizing constant)."""

    def theta_density(theta):
        e = np.exp(1j * np.asarray(theta, dtype=float))
        ei = 1.0 / e
        num = (q_pochhammer(ctx, e * e) * q_pochhammer(ctx, ei * ei)
               * q_pochhammer(ctx, ctx.q * al * be * e)
               * q_pochhammer(ctx, ctx.q * al * be * ei)
               * q_pochhammer(ctx, be * de * e)
               * q_pochhammer(ctx, be * de * ei))
        den = (q_pochhammer(ctx, al * e) * q_pochhammer(ctx, al * ei)
               * q_pochhammer(ctx, be * e * e)
               * q_pochhammer(ctx, be * ei * ei)
               * q_pochhammer(ctx, de * e) * q_pochhammer(ctx, de * ei))
        return num / (2.0 * math.pi * den)

    return theta_density


def _interval_from_theta(theta_density, meta):
    def weight(x):
        xv = np.asarray(x, dtype=float)
        return theta_density(np.arccos(xv)) / np.sqrt(1.0 - xv * xv)

    return interval(-1.0, 1.0, weight, theta_density=theta_density,
                    support_meta=meta)


def build(params):
    q, al, be, de = _checked(params)
    p = al * be * be * de
    ctx = QContext(q)
    u, c, lam, amap, bmap = recurrence_maps(q, al, be, de)
    uprod = _Prod(u)

    spec = RecurrenceSpec(kind=R_II, c=c, lam=lam, a=amap, b=bmap)

    def minimal(n, z):
        require(al != 0.0 and de != 0.0,
                "alpha != 0 and delta != 0 for the closed solution")
        return solution_ladder(ctx, al, be, de, uprod, n, z)

    def cf_value(z):
        # the fraction normalizes the measure to the moment functional's
        # scale, so its value is the transform times kappa_1 / mass; the
        # ladder combination below carries that scale automatically
        x0 = minimal(0, z)
        x1 = minimal(1, z)
        den = (z - c(1)) * x0 - x1
        if den == 0.0:
            raise PoleError("the fraction has a pole at this point")
        return x0 / den

    def transform_value(z):
        """Closed evaluation of the transform integral of the weight."""
        uu = _outer_root(z)
        pref = (2.0 / uu * (1.0 - q / (uu * uu)) * (1.0 - p / q)
                / ((1.0 - al / uu) * (1.0 - be / (uu * uu))
                   * (1.0 - be) * (1.0 - de / uu)))
        w = w87(ctx, q / (uu * uu), q, q / (al * uu), q / be,
                q / (be * uu * uu), q / (de * uu), p / q)
        return pref * w.value

    measure = _interval_from_theta(
        _spectral_theta(ctx, al, be, de),
        "segment [-1, 1], doubled-pole trigonometric weight")
    pairing = _interval_from_theta(
        _pairing_theta(ctx, al, be, de),
        "segment [-1, 1], pairing weight")

    extras = {
        "ctx": ctx,
        "u": u,
        "uprod": uprod,
        "transform": transform_value,
        "pairing": pairing,
        "pairing_mass": (multi_q_pochhammer(ctx, (be, q * be, p))
                         / ((1.0 - al * al * be)
                            * multi_q_pochhammer(ctx, (al * de, be * be, q)))),
    }
    return ModelSpec(name=NAME,
                     params={"q": q, "alpha": al, "beta": be, "delta": de},
                     spec=spec, measure=measure,
                     coordinate=joukowski_coordinate(), minimal=minimal,
                     cf_value=cf_value, extras=extras)


def rational_plain(ctx, al, be, de, n, x):
    """The terminating-series side of the pair."""
    q = ctx.q
    p = al * be * be * de
    e, ei = unit_circle_pair(x)
    s = basic_phi(ctx, (q ** -n, p * q ** (n - 1), de * e, de * ei),
                  (al * de, be * de * e, be * de * ei), q)
    return s.value


def rational_balanced(ctx, al, be, de, n, x):
    """The companion side, carrying the quadratic balancing pair."""
    q = ctx.q
    p = al * be * be * de
    e, ei = unit_circle_pair(x)
    rb = cmath.sqrt(be)
    s = basic_phi(ctx, (q ** -n, p * q ** (n - 1), al * e, al * ei,
                        q * al * rb, -q * al * rb),
                  (al * de, q * al * be * e, q * al * be * ei,
                   al * rb, -al * rb), q)
    return s.value


def connection_weights(ctx, al, be, de, n):
    """Triangle coefficients expanding the balanced side over the plain
    pole ladder; index j runs 0..n."""
    q = ctx.q
    p = al * be * be * de
    a2b = al * al * be
    return [(1.0 - a2b * q ** (2 * j))
            * q_pochhammer(ctx, p * q ** (n - 1), j)
            / ((1.0 - a2b) * q_pochhammer(ctx, al * de, j))
            for j in range(n + 1)]


def rational_balanced_sum(ctx, al, be, de, n, x):
    """Triangle-sum form of the balanced side; agrees with the closed
    series termwise."""
    q = ctx.q
    e, ei = unit_circle_pair(x)
    bw = connection_weights(ctx, al, be, de, n)
    total = 0.0 + 0.0j
    term = 1.0 + 0.0j
    for j in range(n + 1):
        total += term * bw[j]
        term *= (q * (1.0 - q ** (j - n)) * (1.0 - al * e * q ** j)
                 * (1.0 - al * ei * q ** j)
                 / ((1.0 - q ** (j + 1)) * (1.0 - q * al * be * e * q ** j)
                    * (1.0 - q * al * be * ei * q ** j)))
    return total


def biorth_family(model):
    pp = model.params
    q, al, be, de = pp["q"], pp["alpha"], pp["beta"], pp["delta"]
    ctx = model.extras["ctx"]
    p = al * be * be * de
    a2b = al * al * be

    def left(m):
        return lambda x: rational_balanced(ctx, al, be, de, m, x)

    def right(n):
        return lambda x: rational_plain(ctx, al, be, de, n, x)

    mass_head = (multi_q_pochhammer(ctx, (be, q * be))
                 / ((1.0 - a2b)
                    * multi_q_pochhammer(ctx, (al * de, be * be, q))))

    def norm(n):
        return (mass_head * q_pochhammer(ctx, p * q ** n)
                * multi_q_pochhammer(ctx, (be * be, q), n) * (al * de) ** n
                * (1.0 - p * q ** (n - 1))
                / (q_pochhammer(ctx, al * de, n)
                   * (1.0 - p * q ** (2 * n - 1))))

    return BiorthFamily(left=left, right=right, norm=norm,
                        validity="max(|alpha|, |beta|, |delta|) < 1, "
                                 "beta != 0, |alpha beta^2 delta| < q",
                        pairing=model.extras["pairing"])


def herglotz_511(params, cfg=None):
    """Total mass of the spectral weight against its closed evaluation.

    Returns (lhs, rhs): the angle integral computed by quadrature, and the
    closed value through a single basic series.
    """
    q, al, be, de = checked_triple(params)
    p = al * be * be * de
    require(be != 0.0, "beta != 0")
    require(max(abs(al), abs(be), abs(de), abs(p / q)) < 1.0,
            "max(|alpha|, |beta|, |delta|, |alpha beta^2 delta / q|) < 1")
    ctx = QContext(q)
    m = _interval_from_theta(_spectral_theta(ctx, al, be, de),
                             "segment [-1, 1]")
    lhs = normalization(m, cfg)
    rhs = ((1.0 - p / q) / (1.0 - be)
           * basic_phi(ctx, (q, q / be), (q * be,), p / q).value)
    return lhs, rhs


def _beta_integrand(ctx, al, be, de, top):
    """Angle density shared by the beta-integral evaluations; ``top`` is
    the coefficient of the e^{+-i theta} pair in the numerator."""
    q = ctx.q
    p = al * be * be * de
    fconst = (multi_q_pochhammer(ctx, (al * de, be * be, q))
              / (multi_q_pochhammer(ctx, (be, q * be, p)) * 2.0 * math.pi))

    def theta_density(theta):
        e = np.exp(1j * np.asarray(theta, dtype=float))
        ei = 1.0 / e
        num = (q_pochhammer(ctx, e * e) * q_pochhammer(ctx, ei * ei)
               * q_pochhammer(ctx, top * e) * q_pochhammer(ctx, top * ei))
        den = (q_pochhammer(ctx, al * e) * q_pochhammer(ctx, al * ei)
               * q_pochhammer(ctx, be * e * e)
               * q_pochhammer(ctx, be * ei * ei)
               * q_pochhammer(ctx, de * e) * q_pochhammer(ctx, de * ei))
        extra = (q_pochhammer(ctx, be * de * e)
                 * q_pochhammer(ctx, be * de * ei))
        return fconst * num * extra / den

    return theta_density


def qbeta_519(params, cfg=None):
    """Unit-mass beta integral; returns (lhs, rhs) with rhs the rational
    closed form."""
    q, al, be, de = checked_triple(params)
    require(max(abs(al), abs(be), abs(de)) < 1.0,
            "max(|alpha|, |beta|, |delta|) < 1")
    ctx = QContext(q)
    m = _interval_from_theta(_beta_integrand(ctx, al, be, de, q * al * be),
                             "segment [-1, 1]")
    lhs = normalization(m, cfg)
    rhs = 1.0 / (1.0 - al * al * be)
    return lhs, rhs


def qbeta_gamma(params, cfg=None):
    """One-parameter extension of the beta integral; gamma = q*beta
    collapses to the unit-mass case."""
    q, al, be, de = checked_triple(params)
    ga = complex(params["gamma"])
    require(max(abs(al), abs(be), abs(de), abs(ga)) < 1.0,
            "max(|alpha|, |beta|, |gamma|, |delta|) < 1")
    ctx = QContext(q)
    m = _interval_from_theta(_beta_integrand(ctx, al, be, de, al * ga),
                             "segment [-1, 1]")
    lhs = normalization(m, cfg)
    rhs = (multi_q_pochhammer(ctx, (ga, al * al * ga))
           / multi_q_pochhammer(ctx, (q * be, al * al * be))
           * basic_phi(ctx, (al * al * be, al * de, q * be / ga),
                       (al * al * ga, be * be * al * de), ga).value)
    return lhs, rhs
