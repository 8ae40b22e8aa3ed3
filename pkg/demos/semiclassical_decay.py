"""
Approach to orthogonality at large representations
==================================================

Distinct coherent states become orthogonal as j, k, c or h grows. At
finite size this shows up as exponential decay of a fixed overlap and as
the integrated |overlap|^2 concentrating around the probe point.
"""

import numpy as np

from gcs_overlap.semiclassics import Family, SweepPlan, delta_witness, run_sweep

report = run_sweep(SweepPlan(Family.SU2_J, [1, 2, 4, 8, 16], (0, 1), grid=np.linspace(0, 3, 61)))
print("su2 magnitudes :", report.magnitudes)
print("slope          :", report.fitted_log_slope, "vs -ln 2 =", -np.log(2))
print("half widths    :", report.half_width_series)

report = run_sweep(SweepPlan(Family.SU11_K, [1, 2, 4, 8], (0, 0.6)))
print("su11 magnitudes:", report.magnitudes, " slope", report.fitted_log_slope)

# %%
# Virasoro: flat in c at k = 1, decaying in c for k >= 2
for k in (1, 2, 3):
    rep = run_sweep(SweepPlan(Family.VIRASORO_C, [1, 4, 16, 64], (0.1, 0.4 + 0.2j), fixed={"k": k, "h": 0.8}))
    print(f"k={k} c-sweep:", ["%.4e" % m for m in rep.magnitudes])

# %%
# Integrated mass over a fixed window of separations (flat measure)
grid = np.linspace(-2, 2, 401)
for j in (2, 4, 8, 16, 32):
    print(f"j={j:>2}  mass = {delta_witness(Family.SU2_J, j, grid):.6f}")
