"""Four-parameter second-kind model with a discrete spectrum on a sinh grid.

The variable enters through z = sinh(xi) and the mass points march
geometrically to infinity along the real axis.  No closed solution ladder
is available here; the continued-fraction limit has a very-well-poised
closed form with a matching Mittag-Leffler expansion over the grid, and
that expansion doubles as the model's measure.  A cosh-grid companion
family is exposed behind a flag, with no printed norms.
"""

import cmath
import math

from ..errors import CollisionError, PoleError
from ..measures import discrete
from ..qseries import QContext, basic_phi, multi_q_pochhammer, q_pochhammer, w87
from ..recurrence import R_II, RecurrenceSpec
from .base import (BiorthFamily, CoordinateMap, ModelSpec, exp_sinh_inverse,
                   joukowski_split, require)
from .base import real_base

NAME = "SinhLattice42"

_GRID_POINTS = 80


def _checked(params):
    q = real_base(params["q"])
    ts = tuple(complex(params[k]) for k in ("t1", "t2", "t3", "t4"))
    for sym, val in zip(("t1", "t2", "t3", "t4"), ts):
        require(val != 0.0, f"{sym} != 0")
    prod = ts[0] * ts[1] * ts[2] * ts[3]
    require(abs(prod) < q ** 3, "|t1 t2 t3 t4| < q^3")
    return (q,) + ts


def _coeff_maps(q, t1, t2, t3, t4):
    tp = t1 * t2 * t3 * t4
    rst = cmath.sqrt(t3 * t4)
    rho = t3 / rst  # sqrt(t3/t4) on the branch consistent with rst
    alpha = rst * t1 / q
    xconst = -0.5 * (rho + 1.0 / rho)
    halfsum = 0.5 * (alpha + 1.0 / alpha)

    def aa(n, z):
        return ((1.0 + t1 * t2 * q ** (n - 2))
                * ((1.0 - t1 * t1 * q ** (2 * n)) + 2.0 * t1 * q ** n * z)
                * (1.0 - tp * q ** (n - 3)) * q
                / (2.0 * rst * t1 * (1.0 + t1 * t2 * q ** (2 * n - 2))
                   * (1.0 + t1 * t2 * q ** (2 * n - 1))))

    def bb(n, z):
        return (alpha * (1.0 - q ** n) * (1.0 + q ** (n + 1) / (t3 * t4))
                * ((1.0 - t2 * t2 * q ** (2 * n - 4))
                   + 2.0 * t2 * q ** (n - 2) * z)
                / (2.0 * (1.0 + t1 * t2 * q ** (2 * n - 3))
                   * (1.0 + t1 * t2 * q ** (2 * n - 2))))

    def middle(m, z):
        return xconst - halfsum + aa(m - 1, z) + bb(m - 1, z)

    def u_reduced(m):
        # z-slope of middle(m, .) divided by q^m; the reduced form stays
        # well scaled at any depth, where both raw slope factors would
        # underflow to zero
        sa = ((1.0 + t1 * t2 * q ** (m - 3)) * (1.0 - tp * q ** (m - 4))
              / (rst * (1.0 + t1 * t2 * q ** (2 * m - 4))
                 * (1.0 + t1 * t2 * q ** (2 * m - 3))))
        sb = (rst * t1 * t2 * q ** -4 * (1.0 - q ** (m - 1))
              * (1.0 + q ** m / (t3 * t4))
              / ((1.0 + t1 * t2 * q ** (2 * m - 5))
                 * (1.0 + t1 * t2 * q ** (2 * m - 4))))
        return sa + sb

    def u(m):
        return q ** m * u_reduced(m)

    def c(m):
        return -middle(m, 0.0) / u(m)

    def lam(m):
        if m == 1:
            return 0.0
        # the q^{2m-5} scale cancels against u(m-1) u(m) = q^{2m-1} * reduced
        return (t1 * t2 * q ** -4 * (1.0 - q ** (m - 1))
                * (1.0 + t1 * t2 * q ** (m - 4))
                * (1.0 + q ** m / (t3 * t4)) * (1.0 - tp * q ** (m - 5))
                / ((1.0 + t1 * t2 * q ** (2 * m - 6))
                   * (1.0 + t1 * t2 * q ** (2 * m - 5)) ** 2
                   * (1.0 + t1 * t2 * q ** (2 * m - 4))
                   * u_reduced(m - 1) * u_reduced(m)))

    def amap(m):
        return 0.5 * (t2 * q ** (m - 3) - q ** (3 - m) / t2)

    def bmap(m):
        return 0.5 * (t1 * q ** (m - 2) - q ** (2 - m) / t1)

    return u, c, lam, amap, bmap


class _UProd:
    def __init__(self, u):
        self.u = u
        self.vals = [1.0 + 0.0j]

    def __call__(self, n):
        while len(self.vals) <= n:
            self.vals.append(self.vals[-1] * self.u(len(self.vals)))
        return self.vals[n]


def rational_grid(ctx, t1, t2, t3, t4, n, z):
    """Terminating series member vanishing against the grid weights."""
    q = ctx.q
    e = exp_sinh_inverse(complex(z))
    s = basic_phi(ctx, (q ** -n, -t1 * t2 * q ** (n - 2), -t1 * t3 / q,
                        -t1 * t4 / q),
                  (-t1 * e, t1 / e, t1 * t2 * t3 * t4 / q ** 3), q)
    return s.value


def rational_grid_swapped(ctx, t1, t2, t3, t4, n, z):
    return rational_grid(ctx, t2, t1, t3, t4, n, z)


def cosh_rational(ctx, t1, t2, t3, t4, n, z):
    # companion family on the cosh grid; e + 1/e = 2z
    q = ctx.q
    e = joukowski_split(complex(z))
    s = basic_phi(ctx, (q ** -n, t1 * t2 * q ** (n - 2), -t1 * t3 / q,
                        -t1 * t4 / q),
                  (t1 * e, t1 / e, t1 * t2 * t3 * t4 / q ** 3), q)
    return s.value


def _poly(ctx, t1, t2, t3, t4, uprod, n, z):
    q = ctx.q
    rst = cmath.sqrt(t3 * t4)
    e = exp_sinh_inverse(complex(z))
    pref = (multi_q_pochhammer(ctx, (-t1 * e, t1 / e,
                                     t1 * t2 * t3 * t4 / q ** 3,
                                     -t1 * t2 / q ** 2), n)
            / ((2.0 * t1 * rst / q) ** n
               * q_pochhammer(ctx, -t1 * t2 / q ** 2, 2 * n) * uprod(n)))
    s = basic_phi(ctx, (q ** -n, -t1 * t2 * q ** (n - 2), -t1 * t3 / q,
                        -t1 * t4 / q),
                  (-t1 * e, t1 / e, t1 * t2 * t3 * t4 / q ** 3), q)
    return pref * s.value


def _solution(ctx, t1, t2, t3, t4, uprod, uv, n, z):
    """Closed form of the subdominant solution, degree index n.

    Very well poised series with argument -t1 t2 q^{n-2}; the value is
    invariant under swapping the two roots of e - 1/e = 2z, so a single
    branch covers the cut plane.
    """
    q = ctx.q
    e = exp_sinh_inverse(complex(z))
    num = multi_q_pochhammer(ctx, (
        -t1 * t2 * q ** (2 * n - 2), -t1 * t4 * q ** n,
        e * q ** (n + 2) / t3, -q ** (n + 2) / (e * t3),
        -t2 * t4 * q ** (n - 1)))
    den = multi_q_pochhammer(ctx, (
        q ** (n + 1), q ** (n + 2) * t4 / t3, -t1 * e * q ** n,
        t1 * q ** n / e, t1 * t2 * t3 * t4 * q ** (n - 3),
        -q ** (n + 2) / (t3 * t4), -t2 * e * q ** (n - 1),
        t2 * q ** (n - 1) / e))
    w = w87(ctx, q ** (n + 1) * t4 / t3, q ** (n + 1), -q * q / (t1 * t3),
            t4 / e, -t4 * e, -q ** 3 / (t2 * t3), -t1 * t2 * q ** (n - 2))
    return (2.0 * uv) ** -n * num / den * w.value / uprod(n)


def build(params):
    q, t1, t2, t3, t4 = _checked(params)
    cosh_grid = bool(params.get("cosh", False))
    ctx = QContext(q)
    tp = t1 * t2 * t3 * t4
    rst = cmath.sqrt(t3 * t4)
    rho = t3 / rst
    u, c, lam, amap, bmap = _coeff_maps(q, t1, t2, t3, t4)
    uprod = _UProd(u)

    spec = RecurrenceSpec(kind=R_II, c=c, lam=lam, a=amap, b=bmap)

    uv = -rho

    def minimal(n, z):
        return _solution(ctx, t1, t2, t3, t4, uprod, uv, n, z)

    def cf_value(z):
        x0 = minimal(0, z)
        x1 = minimal(1, z)
        den = (z - c(1)) * x0 - x1
        if den == 0.0:
            raise PoleError("the fraction has a pole at this point")
        return x0 / den

    # grid points and masses of the Mittag-Leffler expansion
    wconst = (u(1) * rst / q
              * multi_q_pochhammer(ctx, (tp / q ** 3, q * t1 / t3, t2 / t3,
                                         q * t4 / t3))
              / multi_q_pochhammer(ctx, (-t1 * t2 / q, -t1 * t4 / q,
                                         -t2 * t4 / q ** 2,
                                         -q * q / (t3 * t3))))
    points = []
    ck = 1.0 + 0.0j
    for k in range(_GRID_POINTS):
        zk = 0.5 * (t3 * q ** (-k - 1) - q ** (k + 1) / t3)
        wk = (wconst * q ** (-4 * k) * ck
              * (1.0 + q ** (2 * k + 2) / (t3 * t3)) * tp ** k)
        points.append((zk, wk))
        ck *= ((1.0 + q ** (k + 2) / (t1 * t3)) * (1.0 + q ** (k + 3) / (t2 * t3))
               * (1.0 + q ** (k + 2) / (t3 * t4))
               * (1.0 + q ** (k + 2) / (t3 * t3))
               / ((1.0 - q ** (k + 1) * t1 / t3) * (1.0 - q ** k * t2 / t3)
                  * (1.0 - q ** (k + 1) * t4 / t3) * (1.0 - q ** (k + 1))))
    measure = discrete(points, support_meta="sinh grid, real axis")

    a2 = amap(2)
    pairing_points = []
    r0 = None
    for zk, wk in points:
        gap = zk - a2
        if gap == 0.0:
            raise CollisionError(
                "grid point coincides with the second interpolation point")
        rk = wk / gap
        if r0 is None:
            r0 = rk
        pairing_points.append((zk, rk / r0))
    pairing = discrete(pairing_points, support_meta="sinh grid, normalized")

    def closure_ratio(n):
        # P_n(z) / prod_{j=1..n} (z - b_{j+1}), a z-free constant multiple
        # of the terminating series member; the root of t3 t4 is taken
        # positive, which fixes the sign for odd n
        return (q ** (n * (n + 1) / 2.0) * rst ** -n
                * multi_q_pochhammer(ctx, (-t1 * t2 / q ** 2, tp / q ** 3), n)
                / (q_pochhammer(ctx, -t1 * t2 / q ** 2, 2 * n) * uprod(n)))

    coordinate = CoordinateMap(name="sinh",
                               forward=lambda xi: cmath.sinh(xi),
                               inverse=lambda z: cmath.log(
                                   exp_sinh_inverse(complex(z))))

    extras = {
        "ctx": ctx,
        "u": u,
        "uprod": uprod,
        "poly": lambda n, z: _poly(ctx, t1, t2, t3, t4, uprod, n, z),
        "closure_ratio": closure_ratio,
        "pairing": pairing,
        "cosh_lattice": cosh_grid,
    }
    if cosh_grid:
        extras["cosh_points"] = tuple(
            0.5 * (t3 * q ** (-k - 1) + q ** (k + 1) / t3)
            for k in range(_GRID_POINTS))
    return ModelSpec(name=NAME,
                     params={"q": q, "t1": t1, "t2": t2, "t3": t3, "t4": t4,
                             "cosh": cosh_grid},
                     spec=spec, measure=measure, coordinate=coordinate,
                     minimal=minimal, cf_value=cf_value, extras=extras)


def biorth_family(model):
    pp = model.params
    q, t1, t2, t3, t4 = pp["q"], pp["t1"], pp["t2"], pp["t3"], pp["t4"]
    ctx = model.extras["ctx"]
    tp = t1 * t2 * t3 * t4

    if model.extras["cosh_lattice"]:
        def left(m):
            return lambda z: cosh_rational(ctx, t1, t2, t3, t4, m, z)

        def right(n):
            return lambda z: cosh_rational(ctx, t2, t1, t3, t4, n, z)

        return BiorthFamily(left=left, right=right, norm=None,
                            validity="|t1 t2 t3 t4| < q^3; no closed norms "
                                     "on the cosh grid",
                            pairing=None)

    def left(m):
        return lambda z: rational_grid(ctx, t1, t2, t3, t4, m, z)

    def right(n):
        return lambda z: rational_grid_swapped(ctx, t1, t2, t3, t4, n, z)

    hconst = (multi_q_pochhammer(ctx, (-t1 * t2 / q, -t1 * t4 / q,
                                       -t2 * t4 / q, -q ** 3 / (t3 * t3)))
              / multi_q_pochhammer(ctx, (q * t1 / t3, q * t2 / t3,
                                         q * t4 / t3, tp / q ** 3)))

    def norm(n):
        return (hconst * (tp / q ** 3) ** n
                * (1.0 + t1 * t2 / q ** 2)
                / (1.0 + t1 * t2 * q ** (2 * n - 2))
                * q_pochhammer(ctx, -q * q / (t3 * t4), n)
                * q_pochhammer(ctx, q, n)
                / (q_pochhammer(ctx, -t1 * t2 / q ** 2, n)
                   * q_pochhammer(ctx, tp / q ** 3, n)))

    return BiorthFamily(left=left, right=right, norm=norm,
                        validity="0 < q < 1, all t nonzero, |t1 t2 t3 t4| < q^3",
                        pairing=model.extras["pairing"])
