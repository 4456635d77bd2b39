import numpy as np
from rfrac.models import unit_circle as uc
from rfrac.recurrence import forward, convergents, minimal_solution_backward, pincherle_residual
from rfrac.measures import stieltjes, normalization, weighted_gram, QuadratureConfig
from rfrac.favard import kappa_tails

params = dict(q=0.5, a=0.3, b=0.2, t1=0.3, t2=0.3)
m = uc.build(params)
spec = m.spec
q = params["q"]
rq = q ** 0.5

# 1. defect of closed-form minimal solution under the recurrence, both branches
print("== recurrence defect ==")
for z in (0.2 + 0.1j, 0.25, 1.3 + 0.4j, 2.0, -1.1 + 0.2j, 0.3j):
    X = [m.minimal(n, z) for n in range(22)]
    worst = 0.0
    for n in range(2, 21):
        lhs = X[n]
        rhs = (z - spec.c(n)) * X[n - 1] - spec.lam(n) * (z - spec.a(n)) * (z - spec.b(n)) * X[n - 2]
        d = abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)
        worst = max(worst, d)
    print(f"  z={z}: worst rel defect n=2..20: {worst:.3e}")

# 2. closed-form polynomial vs forward recurrence
print("== poly (closed) vs forward ==")
for z in (0.7 + 0.3j, -0.4, 1.5):
    pq = forward(spec, z, 8)
    worst = max(abs(m.extras["poly"](n, z) - pq.p(n)) / max(1.0, abs(pq.p(n))) for n in range(9))
    print(f"  z={z}: worst rel diff n<=8: {worst:.3e}")

# 3. cf value vs convergents and vs Pincherle ratio
print("== cf vs convergents / backward ==")
for z in (1.4 + 0.2j, 2.5, 0.3 + 0.1j, 0.2 - 0.3j):
    cf = m.cf_value(z)
    conv = convergents(spec, z, 220)
    est = minimal_solution_backward(spec, z, window=4)
    res = pincherle_residual(spec, z, cf, est)
    X0 = m.minimal(0, z)
    X1 = m.minimal(1, z)
    pinch = X0 / ((z - spec.c(1)) * X0 - X1)
    print(f"  z={z}: |cf-conv|={abs(cf-conv[-1]):.3e} |cf-pinch|={abs(cf-pinch):.3e} resid={res:.3e} |cf-ratio0|={abs(cf-est.ratio_at_0):.3e}")

# 4. measure: mass and stieltjes vs cf
print("== measure ==")
cfg = QuadratureConfig(tol=1e-11)
mass = normalization(m.measure, cfg)
kt = kappa_tails(spec, 1)
print(f"  mass = {mass}")
print(f"  kappa1 = {kt[0]}")
for z in (1.4 + 0.2j, 2.5, 0.25 + 0.05j):
    st = stieltjes(m.measure, z, cfg)
    cf = m.cf_value(z)
    print(f"  z={z}: stieltjes={st:.12g} cf={cf:.12g} ratio={st/cf:.12g}")

# 5. symmetry of the base weight f(a,b,t1,t2,t) = f(b,a,t2,t1,1/t)
print("== weight symmetry ==")
m2 = uc.build(dict(q=0.5, a=0.2, b=0.3, t1=0.3, t2=0.3))
worst = 0.0
for th in np.linspace(0.1, 5.9, 7):
    t = np.exp(1j * th)
    lhs = m.extras["base_weight"](t)
    rhs = m2.extras["base_weight"](1.0 / t)
    worst = max(worst, abs(lhs - rhs) / abs(lhs))
print(f"  worst rel: {worst:.3e}")

# 6. biorthogonality gram
print("== gram ==")
fam = uc.biorth_family(m)
G = weighted_gram(fam.pairing, [fam.left(i) for i in range(4)],
                  [fam.right(j) for j in range(4)], 4, cfg)
for i in range(4):
    row = " ".join(f"{abs(G[i, j]):.2e}" for j in range(4))
    print("  ", row)
for n in range(4):
    hn = fam.norm(n)
    print(f"  n={n}: gram={G[n, n]:.12g} closed={hn:.12g} rel={abs(G[n, n] - hn) / abs(hn):.3e}")

# 7. trig weight helper has unit mass
print("== trig weight mass ==")
tw = uc.trig_weight_measure(0.5, 0.1, 0.1, 0.1, 0.1)
print(f"  mass = {normalization(tw, cfg)}")
