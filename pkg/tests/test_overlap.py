import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings, strategies as st

from gcs_overlap import algebra as al
from gcs_overlap.algebra import SU2, SU11
from gcs_overlap.errors import DomainError, NonConvergence
from gcs_overlap.oracle import FockKind, build_fock_rep, build_spin_rep
from gcs_overlap.overlap import (
    Chart, CoherentPoint, SeriesConfig, closed_form_su11, closed_form_su2,
    closed_form_su2_omega, m_series, normalization, overlap,
)


def unnormalized_norm(mrep, tau):
    """Independent oracle: |exp(tau K+)|extremal>|^2 via scipy's expm."""
    v = np.zeros(mrep.dim, dtype=complex)
    v[mrep.extremal_index] = 1
    w = scipy.linalg.expm(tau * mrep.k_plus) @ v
    return float(np.vdot(w, w).real)


def test_normalization_examples():
    assert normalization(SU2, al.spin(1), 1) == pytest.approx(4, rel=1e-14)
    assert normalization(SU2, al.spin(1), 1) == pytest.approx(unnormalized_norm(build_spin_rep(1), 1), rel=1e-12)
    n_series = normalization(SU11, al.two_mode(0), 0.5)
    assert n_series == pytest.approx(4 / 3, rel=1e-12)
    n_oracle = unnormalized_norm(build_fock_rep(FockKind.TWO_MODE, 200), 0.5)
    assert n_series == pytest.approx(n_oracle, rel=1e-12)


def test_closed_form_examples():
    assert closed_form_su2(Fraction(1, 2), 0, 1) == pytest.approx(1 / math.sqrt(2), rel=1e-15)
    assert abs(closed_form_su2(Fraction(1, 2), 1j, -1j)) < 1e-15
    assert closed_form_su2(1, 0, 1) == pytest.approx(0.5, rel=1e-15)
    assert closed_form_su11(Fraction(1, 2), 0, 0.6) == pytest.approx(0.8, rel=1e-15)
    # independent: j=1 spin matrices
    assert overlap(SU2, al.spin(1), 0, 1).value == pytest.approx(0.5, rel=1e-14)


def test_su2_exponent_is_two_j():
    # the numerator carries the power 2j; exponent j would give sqrt(1/2) here
    mrep = build_spin_rep(1)
    from gcs_overlap.oracle import oracle_overlap
    oracle = oracle_overlap(mrep, 0, math.pi / 4)
    assert oracle == pytest.approx(0.5, abs=1e-14)
    assert closed_form_su2(1, 0, 1) == pytest.approx(oracle, abs=1e-14)


def test_polar_closed_form_agrees_with_projective():
    for j in (Fraction(1, 2), 2, Fraction(7, 2)):
        a = closed_form_su2_omega(j, 0.4, 1.1, 2.0, -0.3)
        b = closed_form_su2(j, cmath.exp(1.1j) * math.tan(0.2), cmath.exp(-0.3j) * math.tan(1.0))
        assert a == pytest.approx(b, rel=1e-13, abs=1e-15)


disk = st.builds(lambda r, p: r * cmath.exp(1j * p), st.floats(0, 0.9), st.floats(-math.pi, math.pi))
plane = st.builds(lambda r, p: r * cmath.exp(1j * p), st.floats(0, 3), st.floats(-math.pi, math.pi))
spins = st.integers(0, 20).map(lambda n: Fraction(n, 2))
weights = st.sampled_from([Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1, Fraction(3, 2), 2, 3, 5])


@given(spins, plane, plane)
def test_su2_closed_form_matches_series(j, t1, t2):
    series = overlap(SU2, al.spin(j), t1, t2).value
    assert series == pytest.approx(closed_form_su2(j, t1, t2), abs=1e-10)


@settings(deadline=None)
@given(weights, disk, disk)
def test_su11_closed_form_matches_series(k, t1, t2):
    series = overlap(SU11, al.discrete_series(k), t1, t2).value
    assert series == pytest.approx(closed_form_su11(k, t1, t2), abs=1e-10)


@settings(deadline=None)
@given(weights, disk, disk)
def test_hermitian_symmetry_and_cauchy_schwarz(k, t1, t2):
    a = overlap(SU11, al.discrete_series(k), t1, t2)
    b = overlap(SU11, al.discrete_series(k), t2, t1)
    assert a.value == pytest.approx(b.value.conjugate(), abs=1e-12)
    assert a.magnitude <= 1 + 1e-12


@given(spins, plane, plane)
def test_su2_terms_bounded(j, t1, t2):
    res = m_series(SU2, al.spin(j), t1, t2)
    assert res.terms_used <= 2 * j + 1
    assert res.tail_estimate == 0


@settings(deadline=None)
@given(weights, disk, disk, st.floats(-math.pi, math.pi))
def test_phase_invariance(k, t1, t2, theta):
    rot = cmath.exp(1j * theta)
    rep = al.discrete_series(k)
    a = overlap(SU11, rep, t1, t2).value
    b = overlap(SU11, rep, rot * t1, rot * t2).value
    assert a == pytest.approx(b, abs=1e-12)


@given(spins, plane)
def test_self_overlap_is_one(j, t):
    assert overlap(SU2, al.spin(j), t, t).value == pytest.approx(1, abs=1e-12)


def test_highest_weight_series():
    rep = al.highest_weight(Fraction(3, 2))
    t1, t2 = 0.3 + 0.2j, -0.5j
    res = overlap(SU11, rep, t1, t2)
    expected = closed_form_su11(Fraction(3, 2), t1.conjugate(), t2.conjugate())
    assert res.value == pytest.approx(expected, abs=1e-12)


def test_tail_estimate_reported():
    res = overlap(SU11, al.two_mode(0), 0.5, 0.5j)
    assert res.converged
    assert 0 < res.tail_estimate <= 1e-12 / 4
    assert res.terms_used > 10


def test_domain_error_on_disk_boundary():
    with pytest.raises(DomainError):
        overlap(SU11, al.two_mode(0), 0, 1.0)
    with pytest.raises(DomainError):
        closed_form_su11(0.5, 0, 1.2)


def test_non_convergence():
    with pytest.raises(NonConvergence):
        overlap(SU11, al.two_mode(0), 0.99, 0.99, SeriesConfig(max_terms=100))


def test_large_rep_no_overflow():
    rep = al.discrete_series(400)
    res = overlap(SU11, rep, 0.9, 0.9)
    assert res.value == pytest.approx(1, abs=1e-11)


def test_coherent_point_charts():
    p = CoherentPoint.omega(0.5, 1.0)
    assert p.chart is Chart.OMEGA
    with pytest.raises(ValueError):
        p.require(Chart.TAU)
    assert CoherentPoint.tau(0.3).require(Chart.TAU) == 0.3
    with pytest.raises(ValueError):
        CoherentPoint.omega(-1, 0)


def test_series_config_validation():
    with pytest.raises(ValueError):
        SeriesConfig(tol=0)
    with pytest.raises(ValueError):
        SeriesConfig(max_terms=0)
