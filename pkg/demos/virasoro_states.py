"""
Coherent states of Virasoro subalgebras
=======================================

A primary |h> of a CFT with central charge c seen through the su(1,1)
subalgebra {L_-k, L_0, L_k}. The effective weight h' controls every
overlap; at k = 1 the central charge drops out.
"""

import math

import numpy as np

from gcs_overlap.virasoro import (
    VirasoroRep, bracket_deviation, h_prime, threshold_line, virasoro_overlap,
)

xi, xi_p = (0.3, 0.0), (0.5, math.pi / 3)

for k in (1, 2, 3):
    for c in (1.0, 10.0, 100.0):
        rep = VirasoroRep(k, c, 0.5)
        mag = virasoro_overlap(rep, xi, xi_p).magnitude
        print(f"k={k} c={c:>5}  h'={rep.h_prime:8.4f}  |<xi|xi'>| = {mag:.6e}")

# %%
# The printed single-line form is not a normalized overlap. Its ratio to
# the composed result is (1 - t t' e^{i d})^(4h'):
rec = bracket_deviation(VirasoroRep(2, 12.0, 1.0), xi, xi_p)
print("ratio            :", complex(*rec["ratio"]))
print("predicted factor :", complex(*rec["predicted_factor"]))
rec_self = bracket_deviation(VirasoroRep(2, 12.0, 1.0), xi, xi)
print("bracket at xi = xi':", complex(*rec_self["bracket"]), "(should be 1 for a normalized overlap)")

# %%
# Classicality threshold: points (h, c) above the line have h' >= h'_t.
cs = np.linspace(0, 48, 5)
for k in (1, 2, 4):
    line = [threshold_line(k, 10.0, c) for c in cs]
    print(f"k={k}", " ".join(f"{h:8.2f}" for h in line))
print("inverse check:", h_prime(2, 30.0, threshold_line(2, 10.0, 30.0)))
