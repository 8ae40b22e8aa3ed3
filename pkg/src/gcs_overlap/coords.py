"""Changes of chart between displacement labels Omega and tau coordinates.

The su(1,1) map comes from normal-ordering the displacement in the 2x2 split
basis::

    D(Omega) = exp(Omega K+ - conj(Omega) K-)
             = exp(-conj(tau) K-) exp(-eta K0) exp(tau K+)

with ``tau = exp(i phi) tanh(rho)``, ``eta = -2 log cosh(rho)`` for
``Omega = rho exp(i phi)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ProjectiveInfinity

__all__ = [
    "SPLIT_K0",
    "SPLIT_KMINUS",
    "SPLIT_KPLUS",
    "BchDecomposition",
    "omega_to_tau",
    "omega_to_tau_su11",
    "omega_to_tau_su2",
    "split_displacement",
    "su11_sqrt_norm",
    "su2_polar_to_omega",
    "virasoro_coords",
]

SPLIT_K0 = np.array([[0.5, 0.0], [0.0, -0.5]], dtype=complex)
SPLIT_KPLUS = np.array([[0.0, 1j], [0.0, 0.0]])
SPLIT_KMINUS = np.array([[0.0, 0.0], [1j, 0.0]])


def split_displacement(rho: float, phi: float) -> np.ndarray:
    """Closed-form 2x2 displacement matrix in the split basis."""
    ch, sh = math.cosh(rho), math.sinh(rho)
    return np.array([[ch, 1j * cmath.exp(1j * phi) * sh],
                     [-1j * cmath.exp(-1j * phi) * sh, ch]])


@dataclass(frozen=True)
class BchDecomposition:
    """Normal-ordered factors of an su(1,1) displacement."""

    tau: complex
    eta: float
    rho: float
    phi: float

    def factors(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """``(exp(-conj(tau) K-), exp(-eta K0), exp(tau K+))`` as 2x2 matrices."""
        eye = np.eye(2, dtype=complex)
        # K+ and K- square to zero in the split basis
        lower = eye - self.tau.conjugate() * SPLIT_KMINUS
        cartan = np.diag([math.exp(-self.eta / 2), math.exp(self.eta / 2)]).astype(complex)
        upper = eye + self.tau * SPLIT_KPLUS
        return lower, cartan, upper

    def reconstruct(self) -> np.ndarray:
        lower, cartan, upper = self.factors()
        return lower @ cartan @ upper


def omega_to_tau_su11(rho: float, phi: float) -> BchDecomposition:
    if rho < 0:
        raise ValueError(f"rho must be nonnegative, got {rho}")
    tau = cmath.exp(1j * phi) * math.tanh(rho)
    # log(1/cosh^2) without overflow at large rho
    eta = -2 * (rho + math.log1p(math.exp(-2 * rho)) - math.log(2))
    return BchDecomposition(tau, eta, float(rho), float(phi))


def su11_sqrt_norm(rho: float, h_prime: float) -> float:
    """``sqrt(N(tau))`` for the highest-weight state of weight ``-h_prime``: ``cosh(rho)**(2 h')``."""
    return math.cosh(rho) ** (2 * h_prime)


def omega_to_tau_su2(theta: float, phi: float) -> complex:
    """Bloch-sphere angles to the projective coordinate ``exp(i phi) tan(theta/2)``.

    Raises
    ------
    ProjectiveInfinity
        At the south pole ``theta = pi``, which has no finite tau.
    """
    if not 0 <= theta <= math.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    if math.pi - theta <= 1e-12:
        raise ProjectiveInfinity("theta = pi maps to tau = infinity")
    return cmath.exp(1j * phi) * math.tan(theta / 2)


def su2_polar_to_omega(theta: float, phi: float) -> complex:
    """Displacement label ``Omega = (theta/2) exp(i phi)`` reaching the point (theta, phi)."""
    return theta / 2 * cmath.exp(1j * phi)


def omega_to_tau(compact: bool, omega: complex) -> complex:
    """tau of ``exp(Omega K+ - conj(Omega) K-)|extremal>``.

    ``compact=True`` for su(2) (``tan``), ``False`` for su(1,1) (``tanh``).
    """
    rho, phi = abs(omega), cmath.phase(omega)
    if compact:
        if abs(rho - math.pi / 2) <= 1e-12:
            raise ProjectiveInfinity("|Omega| = pi/2 maps to tau = infinity")
        return cmath.exp(1j * phi) * math.tan(rho)
    return cmath.exp(1j * phi) * math.tanh(rho)


def virasoro_coords(R: float, delta: float, k: int, h_prime: float | None = None):
    """tau and ``sqrt(N(tau))`` for the Virasoro state ``|xi; k>``, ``xi = R exp(i delta)``.

    The label is ``Omega = k conj(xi)``, so ``tau = exp(-i delta) tanh(k R)``.
    ``sqrt(N)`` is ``cosh(kR)**(2 h')`` and is returned as None when
    ``h_prime`` is not given.
    """
    if k < 1 or int(k) != k:
        raise ValueError(f"k must be a positive integer, got {k}")
    if R < 0:
        raise ValueError(f"R must be nonnegative, got {R}")
    dec = omega_to_tau_su11(k * R, -delta)
    n_sqrt = None if h_prime is None else su11_sqrt_norm(k * R, h_prime)
    return dec.tau, n_sqrt
