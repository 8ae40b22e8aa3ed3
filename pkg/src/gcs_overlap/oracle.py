"""Brute-force overlaps from explicit matrix representations.

Every routine here is deliberately independent of the moment series: states
are obtained by exponentiating ``Omega K+ - conj(Omega) K-`` and overlaps are
plain inner products. The bosonic realizations are assembled from
annihilation-operator amplitudes ``sqrt(n)`` and restricted to the weight
ladder that the coherent-state orbit actually visits.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import SU2, SU11, AlgebraSpec, Extremal, RepSpec
from .errors import TailMassError
from .expm import expm, expm_action

__all__ = [
    "FockKind",
    "MatrixRep",
    "TAIL_FRACTION",
    "TAIL_THRESHOLD",
    "build_fock_rep",
    "build_spin_rep",
    "build_weight_module",
    "displace",
    "ladder_moment",
    "oracle_overlap",
    "tail_mass",
]

TAIL_FRACTION = 0.1
TAIL_THRESHOLD = 1e-12


class FockKind(enum.Enum):
    ONE_MODE_EVEN = "OneModeEven"
    ONE_MODE_ODD = "OneModeOdd"
    TWO_MODE = "TwoMode"


@dataclass(frozen=True, eq=False)
class MatrixRep:
    """Dense realization of (K-, K0, K+) on a weight ladder.

    For truncated reps the last basis vector is the truncation edge, where
    the commutation relations fail.
    """

    k_plus: np.ndarray
    k_minus: np.ndarray
    k_zero: np.ndarray
    extremal_index: int
    truncated: bool
    algebra: AlgebraSpec
    extremal: Extremal = Extremal.LOWEST
    label: str = ""

    @property
    def dim(self) -> int:
        return self.k_zero.shape[0]

    def commutator_residuals(self) -> tuple[float, float, float]:
        """Residuals of the three defining brackets on the untruncated block.

        Max-entry norms divided by ``max(1, max|K0|, max|K+|^2)``, the size of
        the products being cancelled.
        """
        kp, km, k0 = self.k_plus, self.k_minus, self.k_zero
        alg = self.algebra
        scale = max(1.0, np.abs(k0).max(), np.abs(kp).max() ** 2)
        r1 = kp @ km - km @ kp - float(alg.beta) * k0
        r2 = k0 @ kp - kp @ k0 - float(alg.alpha_plus) * kp
        r3 = k0 @ km - km @ k0 - float(alg.alpha_minus) * km
        keep = slice(0, self.dim - 1) if self.truncated else slice(None)
        return tuple(float(np.abs(r[keep, keep]).max()) / scale for r in (r1, r2, r3))


def _ladder(amps, weights, algebra, truncated, label, raise_from_index=True):
    """Rep with ``K+ |m> = amps[m] |m+1>`` (raising) or lowering along the index."""
    step = np.diag(np.asarray(amps, dtype=complex), -1)
    k_plus = step if raise_from_index else step.conj().T
    return MatrixRep(
        k_plus=k_plus,
        k_minus=k_plus.conj().T,
        k_zero=np.diag(np.asarray(weights, dtype=float)).astype(complex),
        extremal_index=0,
        truncated=truncated,
        algebra=algebra,
        extremal=Extremal.LOWEST if raise_from_index else Extremal.HIGHEST,
        label=label,
    )


def build_spin_rep(j) -> MatrixRep:
    """Spin-j matrices in the basis |j,-j>, |j,-j+1>, ..., |j,j>."""
    if j < 0 or 2 * j != int(2 * j):
        raise ValueError(f"2j must be a nonnegative integer, got j={j}")
    j = Fraction(int(2 * j), 2)
    ms = [-j + i for i in range(int(2 * j) + 1)]
    # <m+1|J+|m> = sqrt(j(j+1) - m(m+1))
    amps = [math.sqrt(j * (j + 1) - m * (m + 1)) for m in ms[:-1]]
    return _ladder(amps, [float(m) for m in ms], SU2, False, f"spin j={j}")


def _boson_amp(n):
    """``<n-1|a|n>``."""
    return math.sqrt(n)


def build_fock_rep(kind, truncation: int, n0: int = 0) -> MatrixRep:
    """Bosonic su(1,1) realizations on the first ``truncation`` ladder levels.

    Parameters
    ----------
    kind : FockKind or str
        ``OneModeEven`` (k=1/4, states |2m>), ``OneModeOdd`` (k=3/4, states
        |2m+1>) with ``K+ = (a^dag)^2 / 2``; or ``TwoMode`` (k=(n0+1)/2,
        states |n0+m>|m>) with ``K+ = a^dag b^dag``.
    truncation : int
        Number of ladder levels kept; at least 10.
    """
    kind = FockKind(kind)
    if truncation < 10:
        raise ValueError(f"truncation must be >= 10, got {truncation}")
    levels = range(truncation)
    if kind is FockKind.TWO_MODE:
        if n0 < 0:
            raise ValueError(f"n0 must be nonnegative, got {n0}")
        amps = [_boson_amp(n0 + m + 1) * _boson_amp(m + 1) for m in levels][:-1]
        # K0 = (a^dag a + b^dag b + 1) / 2 on |n0+m>|m>
        weights = [(n0 + 2 * m + 1) / 2 for m in levels]
        label = f"two-mode n0={n0}"
    else:
        p = 0 if kind is FockKind.ONE_MODE_EVEN else 1
        # (a^dag)^2 / 2 on |2m+p>
        amps = [_boson_amp(2 * m + p + 1) * _boson_amp(2 * m + p + 2) / 2 for m in levels][:-1]
        # K0 = (a a^dag + a^dag a) / 4 = (2n + 1) / 4
        weights = [(2 * (2 * m + p) + 1) / 4 for m in levels]
        label = kind.value
    return _ladder(amps, weights, SU11, True, label)


def build_weight_module(alg: AlgebraSpec, rep: RepSpec, truncation: int) -> MatrixRep:
    """Unitary weight module generated from an extremal vector, cut at ``truncation`` levels.

    Amplitudes follow from ``[K+, K-] = beta K0`` applied level by level;
    a vanishing squared amplitude ends the module (finite-dimensional irrep).
    """
    beta = float(alg.beta)
    nu0 = float(rep.nu0)
    lowest = rep.extremal is Extremal.LOWEST
    step = float(alg.alpha_plus) if lowest else float(alg.alpha_minus)
    weights, amps2 = [nu0], []
    prev = 0.0
    for m in range(truncation - 1):
        # lowest: c_m^2 = c_{m-1}^2 - beta w_m ; highest: c_m^2 = c_{m-1}^2 + beta w_m
        c2 = prev - beta * weights[m] if lowest else prev + beta * weights[m]
        if abs(c2) <= 1e-12 * max(1.0, abs(prev)):
            break
        if c2 < 0:
            raise ValueError(f"rep {rep.label!r} is not unitary: negative norm at level {m + 1}")
        amps2.append(c2)
        weights.append(weights[m] + step)
        prev = c2
    finite = len(weights) < truncation
    return _ladder(np.sqrt(amps2), weights, alg, not finite,
                   rep.label or "weight module", raise_from_index=lowest)


def ladder_moment(mrep: MatrixRep, n: int) -> float:
    """``|K+^n e|^2`` (lowest weight) or ``|K-^n e|^2`` (highest weight).

    ``e`` is the extremal basis vector; computed by repeated matrix-vector
    products.
    """
    v = np.zeros(mrep.dim, dtype=complex)
    v[mrep.extremal_index] = 1
    climb = mrep.k_plus if mrep.extremal is Extremal.LOWEST else mrep.k_minus
    for _ in range(n):
        v = climb @ v
    return float(np.vdot(v, v).real)


def tail_mass(v) -> float:
    """Probability weight in the top ``TAIL_FRACTION`` of levels."""
    v = np.asarray(v)
    cut = max(1, math.ceil(TAIL_FRACTION * v.size))
    return float(np.sum(np.abs(v[-cut:]) ** 2))


def displace(mrep: MatrixRep, omega: complex, method: str = "matrix") -> np.ndarray:
    """``exp(Omega K+ - conj(Omega) K-)`` applied to the extremal basis vector.

    Parameters
    ----------
    method : {"matrix", "action"}
        Form the full matrix exponential, or exponentiate the vector directly.

    Raises
    ------
    TailMassError
        For truncated reps whose displaced state puts more than
        ``TAIL_THRESHOLD`` weight on the top ``TAIL_FRACTION`` of levels.
    """
    gen = omega * mrep.k_plus - np.conj(omega) * mrep.k_minus
    e = np.zeros(mrep.dim, dtype=complex)
    e[mrep.extremal_index] = 1
    if method == "action":
        v = expm_action(gen, e)
    elif method == "matrix":
        v = expm(gen)[:, mrep.extremal_index]
    else:
        raise ValueError(f"unknown method {method!r}")
    if mrep.truncated:
        mass = tail_mass(v)
        if mass >= TAIL_THRESHOLD:
            raise TailMassError(
                f"truncation {mrep.dim} too small for |Omega|={abs(omega):.6g}: "
                f"tail mass {mass:.3g} >= {TAIL_THRESHOLD:g}", mass)
    return v


def oracle_overlap(mrep: MatrixRep, omega: complex, omega_prime: complex, method="matrix") -> complex:
    """``<Omega|Omega'>`` as an inner product of displaced vectors."""
    return complex(np.vdot(displace(mrep, omega, method), displace(mrep, omega_prime, method)))
