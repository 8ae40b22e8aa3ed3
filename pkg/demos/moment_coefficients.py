"""
Ladder moments of rank-one representations
==========================================

Every overlap in the package is a power series whose coefficients are the
ladder moments <l0|K-^n K+^n|l0> / n!. Here we tabulate them for a few
representations, check the two routes to them against each other, and
compare with explicit matrices.
"""

import math
from fractions import Fraction

from gcs_overlap import algebra as al
from gcs_overlap.oracle import FockKind, build_fock_rep, build_spin_rep, ladder_moment

# spin j = 3/2: the series stops after 2j + 1 terms
rep = al.spin(Fraction(3, 2))
print("spin 3/2   P(n):", [al.coeff_P(al.SU2, rep, n) for n in range(6)])

# two-mode squeezing from the vacuum (k = 1/2): P(n) = n!
rep = al.two_mode(0)
print("two-mode   P(n):", [al.coeff_P(al.SU11, rep, n) for n in range(6)])

# highest-weight branch, weight -h' with h' = 1: rising products 2, 2*3, ...
rep = al.highest_weight(1)
print("h' = 1     Q(n):", [al.coeff_Q(al.SU11, rep, n) for n in range(6)])

# %%
# The step ratios Sigma(m) multiply up to the moment, exactly.
rep = al.one_mode("even")
prod = Fraction(1)
for n in range(1, 8):
    prod *= al.sigma(al.SU11, rep, n, exact=True)
    print(f"n={n}  prod Sigma = {prod}   P(n) n! = {al.moment(al.SU11, rep, n, exact=True)}")

# %%
# Matrix check: moments from dense ladder matrices.
mrep = build_spin_rep(2)
print("spin 2 matrix moments:", [round(ladder_moment(mrep, n), 9) for n in range(5)])
mrep = build_fock_rep(FockKind.ONE_MODE_ODD, 40)
print("one-mode odd, n=5:", ladder_moment(mrep, 5), "vs", al.moment(al.SU11, al.one_mode("odd"), 5))

# %%
# Large orders leave the float range; the log channel keeps going.
c = al.coefficient(al.SU11, al.two_mode(0), 300)
print("P(300) overflow:", c.overflow, " log|P(300)| =", c.log_abs, " lgamma(301) =", math.lgamma(301))
