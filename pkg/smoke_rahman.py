import cmath
import math

import numpy as np

from rfrac.models import rahman as rh
from rfrac.recurrence import convergents, forward, minimal_solution_backward
from rfrac.favard import kappa_tails
from rfrac.measures import (QuadratureConfig, integrate, normalization,
                            stieltjes as m_stieltjes, weighted_gram)
from rfrac.qseries import QContext, basic_phi, multi_q_pochhammer, q_pochhammer

q = 0.5
al, be, de = 0.2, 0.3, 0.1
p = al * be * be * de
params = {"q": q, "alpha": al, "beta": be, "delta": de}
model = rh.build(params)
spec = model.spec
ctx = model.extras["ctx"]
u = model.extras["u"]
uprod = model.extras["uprod"]

ZS = [0.9 + 0.4j, -1.3 + 0.5j, 2.2 - 0.7j]


def printed_u(m):
    n = m - 1
    return 1.0 - be * q ** (n - 1) * (
        (1.0 + p * q ** (2 * n - 1)) * (q + al * de)
        - q ** (n - 1) * (1.0 + q) * (q + be * be) * al * de) / (
        (1.0 - p * q ** (2 * n - 2)) * (1.0 - p * q ** (2 * n)))


def printed_v(m):
    n = m - 1
    return (al + de) * q ** (n - 1) * (
        (1.0 + p * q ** (2 * n - 1)) * (q + be * be)
        - q ** (n - 1) * (1.0 + q) * be * be * (q + al * de)) / (
        2.0 * (1.0 - p * q ** (2 * n - 2)) * (1.0 - p * q ** (2 * n)))


print("== printed middle-coefficient displays vs slope forms ==")
for m in range(1, 7):
    um, cm = u(m), spec.c(m)
    pu, pc = printed_u(m), printed_v(m) / printed_u(m)
    print(f"  m={m}: u rel={abs(um - pu) / abs(um):.3e} "
          f"c rel={abs(cm - pc) / abs(cm):.3e}")

print("== minimal ladder recurrence defect (n = 2..20) ==")
for z in ZS:
    worst = 0.0
    for n in range(2, 21):
        xm2 = model.minimal(n - 2, z)
        xm1 = model.minimal(n - 1, z)
        xn = model.minimal(n, z)
        rhs = ((z - spec.c(n)) * xm1
               - spec.lam(n) * (z - spec.a(n)) * (z - spec.b(n)) * xm2)
        worst = max(worst, abs(xn - rhs) / max(abs(xn), 1e-300))
    print(f"  z={z}: {worst:.3e}")

print("== cf routes ==")
for z in ZS:
    cf = model.cf_value(z)
    conv = convergents(spec, z, 200)
    est = minimal_solution_backward(spec, z, window=2)
    print(f"  z={z}:")
    print(f"    |cf-conv|/|cf| = {abs(cf - conv[-1]) / abs(cf):.3e}")
    print(f"    |cf-backward|/|cf| = {abs(cf - est.ratio_at_0) / abs(cf):.3e}")
    print(f"    backward resid = {est.residual:.3e}")

print("== mass vs kappa_1 vs closed ==")
mass = normalization(model.measure)
kap = kappa_tails(spec, 1)
lhs_h, rhs_h = rh.herglotz_511(params)
print(f"  mass          = {mass:.16g}")
print(f"  kappa_1       = {kap[0]:.16g}")
print(f"  herglotz lhs  = {lhs_h:.16g}")
print(f"  herglotz rhs  = {rhs_h:.16g}")
print(f"  |mass-kap|/kap = {abs(mass - kap[0]) / abs(kap[0]):.3e}")
print(f"  |lhs-rhs|/rhs  = {abs(lhs_h - rhs_h) / abs(rhs_h):.3e}")

print("== herglotz degenerate beta = q ==")
dg = {"q": q, "alpha": al, "beta": q, "delta": de}
lhs_d, rhs_d = rh.herglotz_511(dg)
bench = (1.0 - al * de * q) / (1.0 - q)
print(f"  lhs = {lhs_d:.16g} rhs = {rhs_d:.16g} bench = {bench:.16g}")
print(f"  |lhs-rhs|/rhs = {abs(lhs_d - rhs_d) / abs(rhs_d):.3e}")

print("== stieltjes vs closed transform, and scale relation ==")
tr = model.extras["transform"]
for z in ZS:
    cf = model.cf_value(z)
    st = m_stieltjes(model.measure, z)
    t = tr(z)
    print(f"  z={z}: |t-st|/|t| = {abs(t - st) / abs(t):.3e} "
          f"cf*mass/(kap1*t) = {cf * mass / (kap[0] * t)}")

print("== unit-mass beta integral ==")
lhs_b, rhs_b = rh.qbeta_519(params)
print(f"  lhs = {lhs_b:.16g} rhs = {rhs_b:.16g} "
      f"rel = {abs(lhs_b - rhs_b) / abs(rhs_b):.3e}")
lhs_b0, rhs_b0 = rh.qbeta_519({"q": q, "alpha": 0.0, "beta": be, "delta": de})
print(f"  alpha=0: lhs = {lhs_b0:.16g} rhs = {rhs_b0:.16g} "
      f"rel = {abs(lhs_b0 - rhs_b0) / abs(rhs_b0):.3e}")

print("== gamma extension: corrected vs printed constant ==")
for ga in (0.25, 0.45, q * be):
    gp = dict(params)
    gp["gamma"] = ga
    lhs_g, rhs_g = rh.qbeta_gamma(gp)
    phi = basic_phi(ctx, (al * al * be, al * de, q * be / ga),
                    (al * al * ga, be * be * al * de), ga).value
    printed = (multi_q_pochhammer(ctx, (be, ga, al * al * ga,
                                        be * be * al * de))
               / multi_q_pochhammer(ctx, (q, be * be, al * al * be,
                                          al * de)) * phi)
    print(f"  gamma={ga}: lhs = {lhs_g:.16g}")
    print(f"    corrected rhs = {rhs_g:.16g} "
          f"rel = {abs(lhs_g - rhs_g) / abs(rhs_g):.3e}")
    print(f"    printed rhs   = {printed:.16g} "
          f"rel = {abs(lhs_g - printed) / abs(printed):.3e}")

print("== balanced side: closed series vs triangle sum ==")
for n in range(6):
    worst = 0.0
    for x in (0.35, -0.6, 0.8 + 0.3j):
        a_ = rh.rational_balanced(ctx, al, be, de, n, x)
        b_ = rh.rational_balanced_sum(ctx, al, be, de, n, x)
        worst = max(worst, abs(a_ - b_) / max(1.0, abs(a_)))
    print(f"  n={n}: {worst:.3e}")

print("== gram vs norm candidates (N=5) ==")
fam = rh.biorth_family(model)
pair = fam.pairing
cfgq = QuadratureConfig(tol=1e-11)
G = weighted_gram(pair, lambda m: fam.left(m), lambda n: fam.right(n), 5,
                  cfgq)
off = max(abs(G[i, j]) for i in range(5) for j in range(5) if i != j)
print(f"  worst off-diag = {off:.3e}")

a2b = al * al * be


def headf(n):
    return (multi_q_pochhammer(ctx, (be, q * be)) * q_pochhammer(ctx, p * q ** n)
            / ((1.0 - a2b) * multi_q_pochhammer(ctx, (al * de, be * be, q))))


def body(n):
    return (multi_q_pochhammer(ctx, (be * be, q), n)
            / q_pochhammer(ctx, al * de, n))


def cand_a(n):
    s = al * al * be * de
    return (headf(n) * body(n) * (al * de) ** n
            * (1.0 - s * q ** (2 * n - 1)) / (1.0 - s * q ** (n - 1)))


def cand_b(n):
    return (headf(n) * body(n) * (al * de) ** n
            * (1.0 - p * q ** (2 * n - 1)) / (1.0 - p * q ** (n - 1)))


def cand_bp(n):
    return (headf(n) * body(n) * (al * de) ** n
            * (1.0 - p * q ** (n - 1)) / (1.0 - p * q ** (2 * n - 1)))


def cand_c(n):
    return (headf(n) * body(n) * (-al * de) ** n * (1.0 - a2b * q ** (2 * n))
            * q_pochhammer(ctx, p * q ** (n - 1), n)
            / ((1.0 - a2b * q ** n) * q_pochhammer(ctx, p * q ** (n - 1), 0)
               * q_pochhammer(ctx, al * de, n) / q_pochhammer(ctx, al * de, 0)))


def cand_c2(n):
    # (5.27) with b_{n,n} substituted, keeping its own head
    return ((multi_q_pochhammer(ctx, (be, q * be)) * q_pochhammer(ctx, p * q ** n)
             / multi_q_pochhammer(ctx, (al * de, be * be, q)))
            * body(n) * (-al * de) ** n
            * (1.0 - a2b * q ** (2 * n)) * q_pochhammer(ctx, p * q ** (n - 1), n)
            / ((1.0 - a2b * q ** n) * (1.0 - a2b)
               * q_pochhammer(ctx, al * de, n)))


def cand_d(n):
    return (headf(n) * body(n) * (-al * de) ** n * q ** (n * (n + 1) / 2.0)
            * (1.0 - p * q ** (n - 1)) / (1.0 - p * q ** (2 * n - 1)))


for n in range(5):
    g = G[n, n].real
    row = [("A", cand_a(n)), ("B", cand_b(n)), ("Bp", cand_bp(n)),
           ("C", cand_c2(n)), ("D", cand_d(n))]
    msg = " ".join(f"{k}:{abs(g - v.real) / abs(g):.1e}" for k, v in row)
    print(f"  n={n}: gram={g:.12g}  {msg}")

print("== pairing mass ==")
pm = normalization(pair)
print(f"  quad = {pm:.16g} closed = {model.extras['pairing_mass'].real:.16g} "
      f"rel = {abs(pm - model.extras['pairing_mass']) / abs(pm):.3e}")
