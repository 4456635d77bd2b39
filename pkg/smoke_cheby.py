import math

from rfrac.errors import DomainError
from rfrac.models import cheby_rational as cr
from rfrac.recurrence import convergents, forward, minimal_solution_backward
from rfrac.favard import kappa_tails
from rfrac.measures import (QuadratureConfig, integrate, normalization,
                            stieltjes as m_stieltjes, weighted_gram)
from rfrac.qseries import QContext

q = 0.5
al, de = 0.3, 0.2
params = {"q": q, "alpha": al, "delta": de}
model = cr.build(params)
spec = model.spec
ctx = model.extras["ctx"]

ZS = [0.9 + 0.4j, -1.3 + 0.5j, 2.2 - 0.7j]

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
    x0 = model.minimal(0, z)
    x1 = model.minimal(1, z)
    pin = x0 / ((z - spec.c(1)) * x0 - x1)
    print(f"  z={z}: conv rel={abs(cf - conv[-1]) / abs(cf):.3e} "
          f"backward rel={abs(cf - est.ratio_at_0) / abs(cf):.3e} "
          f"pincherle rel={abs(cf - pin) / abs(cf):.3e}")

print("== mass, kappa_1, stieltjes scaling ==")
mass = normalization(model.measure)
kap = kappa_tails(spec, 1)
print(f"  mass quad = {mass:.16g} closed = {model.extras['mass']:.16g}")
print(f"  kappa_1 (tails) = {kap[0]:.16g}")
tr = model.extras["transform"]
sc = model.extras["transform_scale"]
for z in ZS:
    cf = model.cf_value(z)
    st = m_stieltjes(model.measure, z)
    print(f"  z={z}: transform/(scale*st) = {tr(z) / (sc * st)} "
          f"cf*mass/(kap1*st) = {cf * mass / (kap[0] * st)}")

print("== elementary mass identity at three parameter pairs ==")
for a_, d_ in ((0.5, 0.25), (0.3, -0.4), (0.6, 0.2)):
    lhs, rhs = cr.elementary_mass({"q": q, "alpha": a_, "delta": d_})
    print(f"  ({a_},{d_}): lhs={lhs:.16g} rhs={rhs:.16g} "
          f"abs={abs(lhs - rhs):.3e}")

print("== series form vs partial fractions (n <= 6) ==")
for n in range(7):
    worst = 0.0
    for x in (0.35, -0.6, 0.15):
        g = cr.rational_ladder(ctx, al, de, n, x)
        f = cr.partial_fractions(ctx, al, de, n, x)
        ref = (1.0 - 2.0 * al * x + al * al) * f
        worst = max(worst, abs(g - ref) / max(1.0, abs(g)))
    print(f"  n={n}: {worst:.3e}")

print("== gram vs closed norm (N=5) ==")
fam = cr.biorth_family(model)
cfgq = QuadratureConfig(tol=1e-12)
G = weighted_gram(fam.pairing, lambda m: fam.left(m),
                  lambda n: fam.right(n), 5, cfgq)
off = max(abs(G[i, j]) for i in range(5) for j in range(5) if i != j)
print(f"  worst off-diag = {off:.3e}")
for n in range(5):
    closed = fam.norm(n)
    print(f"  n={n}: gram={G[n, n].real:.12g} closed={closed:.12g} "
          f"rel={abs(G[n, n] - closed) / abs(closed):.3e}")

print("== degenerate corner alpha = delta = 0 ==")
zmodel = cr.build({"q": q, "alpha": 0.0, "delta": 0.0})
zfam = cr.biorth_family(zmodel)
print(f"  norm(0) = {zfam.norm(0)}")
print(f"  mass = {normalization(zmodel.measure):.16g}")
print(f"  g_1(0.3) = {zfam.right(1)(0.3):.3e} (collapses)")
try:
    zmodel.minimal(0, 2.0 + 1.0j)
    print("  minimal: NO ERROR (bad)")
except DomainError as e:
    print(f"  minimal raises DomainError: {e}")
try:
    zmodel.spec.c(1)
    print("  c(1) evaluated (lazy failure expected)")
except ZeroDivisionError:
    print("  c(1) raises ZeroDivisionError (lazy)")
