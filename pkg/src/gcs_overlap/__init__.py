"""Overlaps of generalized coherent states of rank-one Lie algebras.

The overlap of two coherent states built on an extremal vector depends only
on the structure constants ``(alpha+, alpha-, beta)`` and the Cartan weight
``nu0`` of that vector. This package evaluates it as a moment series, checks
it against closed forms and brute-force matrix representations, and provides
the su(2), su(1,1) and Virasoro g_k special cases.
"""

from .algebra import (SU2, SU11, AlgebraSpec, Extremal, RepSpec, coeff_P, coeff_Q,
                      discrete_series, falling_factorial, highest_weight, one_mode, sigma, spin,
                      two_mode)
from .coords import omega_to_tau_su11, omega_to_tau_su2, virasoro_coords
from .errors import DomainError, NonConvergence, ProjectiveInfinity, TailMassError
from .oracle import build_fock_rep, build_spin_rep, build_weight_module, displace, oracle_overlap
from .overlap import (Chart, CoherentPoint, OverlapResult, SeriesConfig, closed_form_su11,
                      closed_form_su2, closed_form_su2_omega, m_series, normalization, overlap)
from .semiclassics import DecayReport, Family, SweepPlan, delta_witness, run_sweep
from .virasoro import VirasoroRep, h_prime, threshold_line, virasoro_overlap

__version__ = "0.1.0"
