"""
Checking closed forms against every graph on six vertices
=========================================================

There are 2^15 = 32768 labeled graphs on six vertices, few enough to
enumerate.  The exact expectation of any count is then a polynomial in p,
and closed-form expressions can be compared coefficient by coefficient.
"""

from fractions import Fraction

from erideals import Pattern, enumerate_event, enumerate_expectation, expectation_Y_Et, expectation_Y_T_paper
from erideals.moments import PUBLISHED_T_COEFFICIENT, chebyshev_lb_Et, markov_ub_Et
from erideals.oracle import automorphism_count, count_labeled_copies

# stable 3-sets: the formula is exact
poly = enumerate_expectation(6, Pattern("E", 3))
for p in (Fraction(1, 10), Fraction(1, 2), Fraction(9, 10)):
    print(f"p={p}: enumeration {poly.evaluate(p)}  formula {expectation_Y_Et(6, 3, p)}")

# two disjoint triangles: the 6-vertex coefficient
poly = enumerate_expectation(6, Pattern("T"))
print("\nE[Y_T] coefficients:", poly.coeffs)
print("labeled copies:", count_labeled_copies(Pattern("T"), 6), "= 720 /", automorphism_count(Pattern("T")))
print("coefficient in the closed form:", PUBLISHED_T_COEFFICIENT)
p = Fraction(1, 2)
print(f"at p=1/2: exact {poly.evaluate(p)}, closed form {expectation_Y_T_paper(6, p)}")

# bounds on P(some stable 3-set) bracket the exact value; at n = 6 the
# second-moment bound is still negative and clamps to 0
exact = enumerate_event(6, "has_Et_induced:3")
print("\n  p    lower    exact    upper")
for k in range(1, 20, 3):
    p = Fraction(k, 20)
    print(f"{float(p):.2f}  {float(chebyshev_lb_Et(6, 3, p)):.4f}  {float(exact.evaluate(p)):.4f}  {float(markov_ub_Et(6, 3, p)):8.4f}")
