import numpy as np
from rfrac.models import unit_circle as uc
from rfrac.recurrence import forward

params = dict(q=0.5, a=0.3, b=0.2, t1=0.3, t2=0.3)
m = uc.build(params)
spec = m.spec
q = params["q"]

z = 0.7 + 0.3j
pq = forward(spec, z, 6)
print("per-n closed P vs forward P:")
for n in range(7):
    cl = m.extras["poly"](n, z)
    fw = pq.p(n)
    print(f"  n={n}: closed={cl:.10g} forward={fw:.10g} ratio={cl / fw if fw != 0 else float('nan'):.10g}")

print()
print("per-n X defect (outer branch, z=1.3+0.4j):")
z = 1.3 + 0.4j
X = [m.minimal(n, z) for n in range(12)]
for n in range(2, 11):
    lhs = X[n]
    rhs = (z - spec.c(n)) * X[n - 1] - spec.lam(n) * (z - spec.a(n)) * (z - spec.b(n)) * X[n - 2]
    print(f"  n={n}: X={X[n]:.6g} defect rel={abs(lhs - rhs) / abs(lhs):.3e}")

print()
print("X ratio X1/X0 vs backward:")
from rfrac.recurrence import minimal_solution_backward
est = minimal_solution_backward(spec, z, window=6)
print("  closed X1/X0 =", X[1] / X[0])
try:
    print("  est ratios:", [est.ratio(n) for n in range(3)])
except Exception as e:
    print("  est:", est)
