import cmath
import math

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, strategies as st

from gcs_overlap.coords import (
    SPLIT_K0, SPLIT_KMINUS, SPLIT_KPLUS, omega_to_tau, omega_to_tau_su11, omega_to_tau_su2,
    split_displacement, su2_polar_to_omega, virasoro_coords,
)
from gcs_overlap.errors import ProjectiveInfinity


def test_su11_bch_example():
    dec = omega_to_tau_su11(1.0, 0.0)
    assert dec.tau == pytest.approx(0.7615941559557649, rel=1e-15)
    assert dec.eta == pytest.approx(-2 * math.log(math.cosh(1.0)), rel=1e-14)
    assert dec.eta == pytest.approx(-0.8675616609660542, rel=1e-14)


def test_split_basis_is_su11():
    comm = lambda a, b: a @ b - b @ a
    assert np.allclose(comm(SPLIT_KPLUS, SPLIT_KMINUS), -2 * SPLIT_K0)
    assert np.allclose(comm(SPLIT_K0, SPLIT_KPLUS), SPLIT_KPLUS)
    assert np.allclose(comm(SPLIT_K0, SPLIT_KMINUS), -SPLIT_KMINUS)


@given(st.floats(0, 3), st.floats(-math.pi, math.pi))
def test_split_displacement_is_exponential(rho, phi):
    omega = rho * cmath.exp(1j * phi)
    direct = scipy.linalg.expm(omega * SPLIT_KPLUS - np.conj(omega) * SPLIT_KMINUS)
    assert np.allclose(split_displacement(rho, phi), direct, rtol=1e-12, atol=1e-12 * math.cosh(rho))


@given(st.floats(0, 3), st.floats(-math.pi, math.pi))
def test_bch_reconstruction(rho, phi):
    dec = omega_to_tau_su11(rho, phi)
    assert np.abs(dec.reconstruct() - split_displacement(rho, phi)).max() <= 1e-12 * math.cosh(rho) ** 2
    assert abs(dec.tau) < 1


def test_eta_stable_for_large_rho():
    dec = omega_to_tau_su11(800.0, 0.3)
    assert math.isfinite(dec.eta)
    assert dec.eta == pytest.approx(-2 * (800 - math.log(2)), rel=1e-15)


def test_su2_chart():
    assert omega_to_tau_su2(math.pi / 2, 0) == pytest.approx(1, rel=1e-15)
    assert omega_to_tau_su2(0, 1.0) == 0
    with pytest.raises(ProjectiveInfinity):
        omega_to_tau_su2(math.pi, 0)
    with pytest.raises(ValueError):
        omega_to_tau_su2(-0.1, 0)
    theta, phi = 1.3, -0.4
    assert omega_to_tau(True, su2_polar_to_omega(theta, phi)) == pytest.approx(omega_to_tau_su2(theta, phi))
    with pytest.raises(ProjectiveInfinity):
        omega_to_tau(True, math.pi / 2)


def test_omega_to_tau_noncompact_in_disk():
    for r in (0.0, 0.5, 5.0, 30.0):
        assert abs(omega_to_tau(False, r * cmath.exp(0.7j))) <= 1


def test_virasoro_coords_k1_reduces_to_su11():
    tau, n_sqrt = virasoro_coords(0.8, 0.5, 1, h_prime=0.75)
    assert tau == pytest.approx(omega_to_tau_su11(0.8, -0.5).tau, rel=1e-15)
    assert n_sqrt == pytest.approx(math.cosh(0.8) ** 1.5)
    assert virasoro_coords(0.8, 0.5, 1)[1] is None
    tau3, _ = virasoro_coords(0.2, 0.0, 3)
    assert tau3 == pytest.approx(math.tanh(0.6))
    with pytest.raises(ValueError):
        virasoro_coords(0.1, 0, 0)
