"""
Where the dimension jumps
=========================

dim S/I(G) is the independence number, so P(dim >= 3) is the chance that
G(n, p) has three mutually non-adjacent vertices.  With q = 1 - p that
expectation is C(n,3) q^3, which suggests the scale q ~ 1/n.  Below we sweep
q = c n^-alpha on both sides of it and compare with the closed-form bounds.
"""

from erideals import chebyshev_lb_Et, expectation_Y_Et, sweep

ns = [25, 50, 100, 200]

for sched in ("q=1*n^-1.5", "q=1*n^-1", "q=1*n^-0.5"):
    print(f"\n{sched}")
    print("   n        q      p_hat   95% CI              lower     upper")
    for rec in sweep("dim_ge:3", sched, ns, 3000, seed=5, timing=False):
        lo = chebyshev_lb_Et(rec.n, 3, rec.p)
        hi = min(1.0, expectation_Y_Et(rec.n, 3, rec.p))
        ci = f"[{rec.ci_lo:.4f}, {rec.ci_hi:.4f}]"
        print(f"{rec.n:4d}  {rec.q:8.5f}  {rec.p_hat:8.4f}  {ci:18s}  {lo:7.4f}  {hi:8.4f}")

# far below the scale a single hit in 3000 trials already exceeds the upper
# bound; the interval still covers it.  At the critical scale the count is
# roughly Poisson(1/6): neither bound pins the probability down, and the
# estimate settles near 1 - e^{-1/6}
