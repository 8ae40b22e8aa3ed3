"""
Spin coherent state overlaps
============================

Three independent routes to <theta, phi | theta', phi'> for spin j: the
moment series in the projective chart, the closed form, and brute-force
matrix exponentials of the spin matrices.
"""

import math

import numpy as np

from gcs_overlap import algebra as al
from gcs_overlap.coords import omega_to_tau_su2, su2_polar_to_omega
from gcs_overlap.oracle import build_spin_rep, oracle_overlap
from gcs_overlap.overlap import closed_form_su2, closed_form_su2_omega, overlap

j = 2
a, b = (0.7, 0.3), (2.1, -1.2)
ta, tb = omega_to_tau_su2(*a), omega_to_tau_su2(*b)

series = overlap(al.SU2, al.spin(j), ta, tb)
closed = closed_form_su2(j, ta, tb)
polar = closed_form_su2_omega(j, *a, *b)
oracle = oracle_overlap(build_spin_rep(j), su2_polar_to_omega(*a), su2_polar_to_omega(*b))

print("series :", series.value, f"({series.terms_used} terms)")
print("closed :", closed)
print("polar  :", polar)
print("oracle :", oracle)

# %%
# The projective numerator carries the power 2j. With the power j the
# result would not match the matrices:
wrong = (1 + ta.conjugate() * tb) ** j / ((1 + abs(ta) ** 2) * (1 + abs(tb) ** 2)) ** (j / 2)
print("power j instead of 2j:", wrong, " error", abs(wrong - oracle))

# %%
# Antipodal points are orthogonal; the south pole itself is outside the chart.
print("antipodes j=1/2:", abs(closed_form_su2(0.5, 1j, -1j)))
try:
    omega_to_tau_su2(math.pi, 0)
except Exception as exc:
    print(type(exc).__name__, "-", exc)

# %%
# Magnitudes over a grid of polar angles for growing j.
thetas = np.linspace(0, math.pi * 0.9, 7)
for jj in (0.5, 2, 8):
    mags = [abs(closed_form_su2_omega(jj, 0, 0, t, 0)) for t in thetas]
    print(f"j={jj:<4}", " ".join(f"{m:.3e}" for m in mags))
