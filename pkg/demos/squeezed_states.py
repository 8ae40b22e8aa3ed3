"""
su(1,1) coherent states and squeezing
=====================================

Two-mode and one-mode bosonic realizations of su(1,1), the 2x2
normal-ordering of the displacement, and the disk boundary.
"""

import cmath
import math

from gcs_overlap import algebra as al
from gcs_overlap.coords import omega_to_tau_su11, split_displacement
from gcs_overlap.errors import DomainError, TailMassError
from gcs_overlap.oracle import FockKind, build_fock_rep, oracle_overlap
from gcs_overlap.overlap import closed_form_su11, m_series, overlap

# %%
# Omega -> tau and the normal-ordered factors
dec = omega_to_tau_su11(1.0, 0.4)
print("tau =", dec.tau, " eta =", dec.eta)
print("max |BCH product - displacement| =", abs(dec.reconstruct() - split_displacement(1.0, 0.4)).max())

# %%
# Two-mode squeezed vacuum (k = 1/2): series, closed form, and truncated Fock space
w1, w2 = 0.6 * cmath.exp(0.2j), 1.1 * cmath.exp(-1.7j)
t1, t2 = omega_to_tau_su11(abs(w1), cmath.phase(w1)).tau, omega_to_tau_su11(abs(w2), cmath.phase(w2)).tau
rep = al.two_mode(0)
res = overlap(al.SU11, rep, t1, t2)
print("series:", res.value, f"terms={res.terms_used} tail<={res.tail_estimate:.1e}")
print("closed:", closed_form_su11(0.5, t1, t2))
print("oracle:", oracle_overlap(build_fock_rep(FockKind.TWO_MODE, 300), w1, w2))

# %%
# One-mode squeezing: M(tau, tau') only depends on x = conj(tau) tau'
for parity, power in (("even", -0.5), ("odd", -1.5)):
    x = 0.5 + 0.3j
    print(parity, m_series(al.SU11, al.one_mode(parity), 1, x).value, (1 - x) ** power)

# %%
# Too few Fock levels is detected rather than silently wrong
try:
    oracle_overlap(build_fock_rep(FockKind.TWO_MODE, 10), 1.2, 0)
except TailMassError as exc:
    print("TailMassError:", exc)

# and points on the unit circle have left the disk
try:
    overlap(al.SU11, rep, 0, 1.0)
except DomainError as exc:
    print("DomainError:", exc)

print("rho = 5 gives |tau| =", abs(omega_to_tau_su11(5, 0).tau), "<", 1, "; tanh 5 =", math.tanh(5))
