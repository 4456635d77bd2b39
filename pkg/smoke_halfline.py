import numpy as np

from rfrac.errors import BranchBoundaryError
from rfrac.measures import QuadratureConfig, integrate, interval, normalization, stieltjes, weighted_gram
from rfrac.models import halfline
from rfrac.recurrence import forward, minimal_solution_backward

m = halfline.build({"a": 1.0, "b": 4.0})
cfg = QuadratureConfig(tol=1e-12)

# spec examples: c_n = -2, cf(9) = 1 at a=1,b=4? cf(z)=2/((s+1)(s+2)), s=3 -> 2/(4*5)=0.1
print("c3:", m.spec.c(3))
print("minimal n=3 z=9:", m.minimal(3, 9.0))   # ((3-1)(3-2)/2)^3 = 1
print("cf(1):", m.cf_value(1.0), "expected 1/3")  # stieltjes example says 1/3

# defect both branches (upper/lower half plane and right real axis)
worst = 0.0
for z in (2.0 + 1.0j, -0.7 + 0.3j, 5.0, -1.0 - 2.0j, 0.3 - 0.1j, 7.5j):
    xs = [m.minimal(n, z) for n in range(21)]
    for n in range(2, 21):
        lhs = xs[n]
        rhs = (z - m.spec.c(n)) * xs[n - 1] \
            - m.spec.lam(n) * (z - m.spec.a(n)) * (z - m.spec.b(n)) * xs[n - 2]
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(lhs)))
print("defect:", worst)

# branch agreement incl. n=1 relation via lambda_1 != 0
for z in (2.0 + 1.0j, 5.0, -1.0 - 2.0j):
    x0 = m.minimal(0, z)
    x1 = m.minimal(1, z)
    ratio_closed = x0 / ((z - m.spec.c(1)) * x0 - x1)
    est = minimal_solution_backward(m.spec, z, window=5)
    print("z:", z, "ratio diff:", abs(ratio_closed - est.ratio_at_0),
          "cf diff:", abs(m.cf_value(z) - est.ratio_at_0))

# boundary: negative real z ties
try:
    m.minimal(2, -1.5)
except BranchBoundaryError as e:
    print("boundary ok:", e)

# mass = 2, stieltjes(1) = 1/3
print("mass:", normalization(m.measure, cfg))
print("stieltjes(1):", stieltjes(m.measure, 1.0, cfg))
for z in (2.0 + 1.0j, 5.0):
    print("stieltjes vs cf", z, abs(stieltjes(m.measure, z, cfg) - m.cf_value(z)))

# forward recurrence vs closed-form polynomial (R_II leading-coefficient form)
z0 = 2.3 + 0.7j
pq = forward(m.spec, z0, 6)
for n in range(7):
    print("P", n, abs(pq.p(n) - m.extras["poly"](n, z0)))

# gram
fam = halfline.biorth_family(m)
G = np.asarray(weighted_gram(m.extras["pairing"], fam.left, fam.right, 5, cfg))
for n in range(5):
    print("norm", n, G[n, n], fam.norm(n), abs(G[n, n] - fam.norm(n)))
print("max off:", max(abs(G[i, j]) for i in range(5) for j in range(5) if i != j))

# n-dependent-weight orthogonality: value 2^(1-2n)(n+1) on the diagonal
aa, bb = 1.0, 4.0
for mm in range(4):
    for nn in range(mm, 4):
        def w(x, nn=nn):
            return (2.0 / np.pi) * (1 + 2) * np.sqrt(-x) \
                / ((aa - x) ** (nn + 1) * (bb - x) ** (nn + 1))
        meas = interval(-np.inf, 0.0, w)
        val = integrate(meas, lambda x: m.extras["poly"](mm, x) * m.extras["poly"](nn, x), cfg)
        want = 2.0 ** (1 - 2 * nn) * (nn + 1) if mm == nn else 0.0
        print("ortho", mm, nn, val, "want", want)
