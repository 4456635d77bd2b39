import cmath
import math

from rfrac.models import sinh_lattice as sl
from rfrac.recurrence import (
    convergents, forward, minimal_solution_backward, rationalize,
)
from rfrac.favard import kappa_tails
from rfrac.measures import integrate, normalization, stieltjes as m_stieltjes
from rfrac.qseries import QContext, q_pochhammer

q = 0.5
t1, t2, t3, t4 = 0.2, 0.3, 0.4, 0.1
params = {"q": q, "t1": t1, "t2": t2, "t3": t3, "t4": t4}
model = sl.build(params)
spec = model.spec
ctx = model.extras["ctx"]
poly = model.extras["poly"]
u = model.extras["u"]

ZS = [0.7 + 0.3j, -1.2 + 0.4j, 2.5 - 0.8j]

print("== closed poly vs forward (n <= 5) ==")
for z in ZS:
    pq = forward(spec, z, 6)
    worst = 0.0
    for n in range(6):
        c = poly(n, z)
        worst = max(worst, abs(c - pq.p(n)) / max(1.0, abs(pq.p(n))))
    print(f"  z={z}: {worst:.3e}")

print("== recurrence defect of closed poly (n = 2..5) ==")
for z in ZS:
    worst = 0.0
    for n in range(2, 6):
        lhs = poly(n, z)
        rhs = ((z - spec.c(n)) * poly(n - 1, z)
               - spec.lam(n) * (z - spec.a(n)) * (z - spec.b(n)) * poly(n - 2, z))
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
    print(f"  z={z}: {worst:.3e}")

print("== cf routes ==")
for z in ZS:
    cf = model.cf_value(z)
    conv = convergents(spec, z, 200)
    est = minimal_solution_backward(spec, z, window=2)
    resid = est.residual
    ratio = est.ratio_at_0
    print(f"  z={z}:")
    print(f"    |cf-conv|/|cf| = {abs(cf - conv[-1]) / abs(cf):.3e}")
    print(f"    |cf-backward|/|cf| = {abs(cf - ratio) / abs(cf):.3e}")
    print(f"    pincherle resid = {resid:.3e}")

print("== mass vs kappa_1 ==")
mass = normalization(model.measure)
kap = kappa_tails(spec, 1)
print(f"  mass = {mass:.16g}")
print(f"  kappa_1 = {kap[0]:.16g}")
print(f"  rel diff = {abs(mass - kap[0]) / abs(kap[0]):.3e}")

print("== stieltjes vs cf ==")
for z in ZS:
    cf = model.cf_value(z)
    st = m_stieltjes(model.measure, z)
    print(f"  z={z}: cf/st = {cf / st}")

print("== Mittag-Leffler partial sum vs cf ==")
pts = model.measure.points
for z in ZS:
    cf = model.cf_value(z)
    ml = sum(w / (z - x) for x, w in pts)
    print(f"  z={z}: |cf-ML|/|cf| = {abs(cf - ml) / abs(cf):.3e}")

print("== support gap display: z_k - a(2) ==")
a2 = spec.a(2)
for k in range(4):
    zk = 0.5 * (t3 * q ** (-k - 1) - q ** (k + 1) / t3)
    gap = zk - a2
    bench = 0.5 * q ** (-k - 1) / t3 * (1 + t2 * t3 * q ** k) * (1 - t3 * q ** (k + 2) / t2) \
        if False else gap
    print(f"  k={k}: zk-a2 = {gap:.16g}")

print("== biorth gram vs closed norm (N=4) ==")
fam = sl.biorth_family(model)
pair = fam.pairing
worst_off = 0.0
for m in range(4):
    for n in range(4):
        g = integrate(pair, lambda x, m=m, n=n: fam.left(m)(x) * fam.right(n)(x))
        if m == n:
            closed = fam.norm(n)
            rel = abs(g - closed) / abs(closed)
            print(f"  m=n={n}: gram={g:.12g} closed={closed:.12g} rel={rel:.3e}")
        else:
            worst_off = max(worst_off, abs(g))
print(f"  worst off-diag = {worst_off:.3e}")

print("== closure ratio consistency ==")
closure = model.extras["closure_ratio"]
for n in range(1, 5):
    z = 0.9 + 0.2j
    denom = 1.0
    for j in range(1, n + 1):
        denom *= (z - spec.b(j + 1))
    lhs = poly(n, z) / denom
    rhs = closure(n) * sl.rational_grid(ctx, t1, t2, t3, t4, n, z)
    print(f"  n={n}: ratio={lhs:.12g} closed*R_n={rhs:.12g} "
          f"rel={abs(lhs - rhs) / abs(rhs):.3e}")

print("== cosh variant flag ==")
cosh_params = dict(params)
cosh_params["cosh"] = True
cmodel = sl.build(cosh_params)
print(f"  cosh extras flag: {cmodel.extras.get('cosh_lattice')}")
cfam = sl.biorth_family(cmodel)
x = 1.7
print(f"  cosh left(2)(x) = {cfam.left(2)(x)}")
print(f"  cosh right(2)(x) = {cfam.right(2)(x)}")
