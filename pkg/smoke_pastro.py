import math

from rfrac.measures import QuadratureConfig, normalization, stieltjes, weighted_gram
from rfrac.models import pastro
from rfrac.recurrence import forward, minimal_solution_backward

m = pastro.build({"q": 0.5, "a": 0.2, "b": 0.3})
q, a, b = 0.5, 0.2, 0.3
rq = math.sqrt(q)

# spec example: c_1
c1 = m.spec.c(1)
print("c1:", c1, "expected:", -rq * (1 - b) / (1 - a * q))

# spec example: minimal at n=0, z=0 (inner branch)
from rfrac.qseries import QContext, multi_q_pochhammer
ctx = QContext(q)
want = (multi_q_pochhammer(ctx, (a * q, b * q))
        / multi_q_pochhammer(ctx, (q, a * b * q)))
got = m.minimal(0, 0.0)
print("X_0(0):", got, "want:", want, "diff:", abs(got - want))

# recurrence defect, both branches, n = 2..20
for tag, pts in (("inner", [0.1 + 0.2j, -0.3j, 0.25]),
                 ("outer", [2.0 - 1.0j, 1.5j, -3.0])):
    worst = 0.0
    for z in pts:
        xs = [m.minimal(n, z) for n in range(21)]
        for n in range(2, 21):
            lhs = xs[n]
            rhs = (z - m.spec.c(n)) * xs[n - 1] - m.spec.lam(n) * z * xs[n - 2]
            worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
    print(tag, "defect:", worst)

# branch agreement: closed-form ratio vs backward recurrence
for z in (0.1 + 0.2j, 2.0 - 1.0j):
    x0 = m.minimal(0, z)
    x1 = m.minimal(1, z)
    ratio_closed = x0 / ((z - m.spec.c(1)) * x0 - x1)
    est = minimal_solution_backward(m.spec, z, window=5)
    print("branch", z, "ratio diff:", abs(ratio_closed - est.ratio_at_0),
          "cf diff:", abs(m.cf_value(z) - est.ratio_at_0))

# measure mass and stieltjes vs cf
cfg = QuadratureConfig(tol=1e-12)
print("mass:", normalization(m.measure, cfg))
for z in (0.1 + 0.2j, 2.0 - 1.0j, 2.0):
    s = stieltjes(m.measure, z, cfg)
    print("stieltjes", z, "vs cf:", abs(s - m.cf_value(z)))

# P_n via forward recurrence vs closed form; Q_0 = 1
pq = forward(m.spec, 1.3 + 0.4j, 6)
for n in range(7):
    diff = abs(pq.p(n) - m.extras["poly_first"](n, 1.3 + 0.4j))
    print("P", n, "forward vs closed:", diff)
print("Q0:", m.extras["poly_second"](0, 0.77))

# biorthogonality gram, N = 4
fam = pastro.biorth_family(m)
G = weighted_gram(m.extras["pairing"], fam.left, fam.right, 5, cfg)
import numpy as np
G = np.asarray(G)
for n in range(5):
    print("norm", n, "gram:", G[n, n], "closed:", fam.norm(n),
          "diff:", abs(G[n, n] - fam.norm(n)))
off = max(abs(G[i, j]) for i in range(5) for j in range(5) if i != j)
print("max off-diag:", off)

# transform both branches, plus the k = n = z = 0 special value
for (n, k, z) in ((2, 1, 0.3), (2, 1, 3.0), (0, 0, 0.0), (3, 0, 0.2j), (3, 3, -2.5)):
    lhs, rhs = pastro.transform_241({"q": q, "a": a, "b": b}, n, k, z, cfg)
    print("transform", (n, k, z), "diff:", abs(lhs - rhs), "val:", rhs)
