import numpy as np

from rfrac.measures import QuadratureConfig, normalization, stieltjes, weighted_gram
from rfrac.models import cauchy_beta
from rfrac.recurrence import forward, minimal_solution_backward

m = cauchy_beta.build({"a": 1.5, "b": -0.5})
cfg = QuadratureConfig(tol=1e-12)

# defect on both half planes (series need |z|<1 resp. |1-z|<1)
worst = 0.0
for z in (0.2 + 0.3j, -0.4, 0.25j, 0.8 + 0.3j, 1.2, 0.75 - 0.2j):
    xs = [m.minimal(n, z) for n in range(21)]
    for n in range(2, 21):
        lhs = xs[n]
        rhs = (z - m.spec.c(n)) * xs[n - 1] \
            - m.spec.lam(n) * z * (z - 1.0) * xs[n - 2]
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
print("defect:", worst)

# termination point z = 0: CF = 1/(0 - c1) = -2 at these params
print("cf(0):", m.cf_value(1e-300))
print("cf(0.0):", m.cf_value(0.0))

# branch agreement
for z in (0.2 + 0.3j, -0.4, 0.8 + 0.3j, 1.2):
    x0 = m.minimal(0, z)
    x1 = m.minimal(1, z)
    ratio_closed = x0 / ((z - m.spec.c(1)) * x0 - x1)
    est = minimal_solution_backward(m.spec, z, window=5)
    print("z:", z, "ratio diff:", abs(ratio_closed - est.ratio_at_0),
          "cf diff:", abs(m.cf_value(z) - est.ratio_at_0))

# mass = kappa_1 = 3/2
print("mass:", normalization(m.measure, cfg))

# stieltjes vs cf on both sides
for z in (0.2 + 0.3j, -0.4, 0.8 + 0.3j, 1.2):
    print("stieltjes", z, abs(stieltjes(m.measure, z, cfg) - m.cf_value(z)))

# forward vs closed-form polynomial
z0 = 0.3 + 0.6j
pq = forward(m.spec, z0, 5)
for n in range(6):
    print("P", n, abs(pq.p(n) - m.extras["poly"](n, z0)))

# gram
fam = cauchy_beta.biorth_family(m)
G = np.asarray(weighted_gram(m.extras["pairing"], fam.left, fam.right, 5, cfg))
for n in range(5):
    print("norm", n, G[n, n], fam.norm(n), "rel:",
          abs(G[n, n] - fam.norm(n)) / abs(fam.norm(n)))
print("max off:", max(abs(G[i, j]) for i in range(5) for j in range(5) if i != j))
