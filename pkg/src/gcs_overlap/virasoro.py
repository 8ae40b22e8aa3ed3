"""Coherent states of the Virasoro subalgebras g_k = {L_-k, L_0, L_k}.

After the rescaling ``calL0 = -(L0 + c/24 (k^2-1))/k``, ``calL+- = -L_{+-k}/k``
each g_k closes as su(1,1), and a primary ``|h>`` becomes a highest-weight
vector with ``calL0 |h> = -h' |h>``::

    h' = (h + c/24 (k^2 - 1)) / k

The state ``exp(xi L_-k - conj(xi) L_k)|h>`` is the su(1,1) coherent state
with ``Omega = k conj(xi)``, so all overlaps are routed through the generic
highest-weight series of :mod:`gcs_overlap.overlap`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .algebra import SU11, AlgebraSpec, highest_weight
from .coords import virasoro_coords
from .overlap import OverlapResult, SeriesConfig, closed_form_su11, overlap

__all__ = [
    "VirasoroRep",
    "bracket_deviation",
    "bracket_form",
    "h_prime",
    "threshold_line",
    "virasoro_algebra",
    "virasoro_closed_form",
    "virasoro_overlap",
]


def h_prime(k: int, c: float, h: float) -> float:
    """Effective su(1,1) weight of a primary of weight h in g_k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return (h + c / 24 * (k * k - 1)) / k


def virasoro_algebra(k: int) -> AlgebraSpec:
    """Structure constants of the rescaled g_k (those of su(1,1))."""
    return AlgebraSpec(SU11.alpha_plus, SU11.alpha_minus, SU11.beta, f"virasoro-g{k}")


@dataclass(frozen=True)
class VirasoroRep:
    k: int
    c: float
    h: float

    def __post_init__(self):
        if self.k < 1 or int(self.k) != self.k:
            raise ValueError(f"k must be a positive integer, got {self.k}")
        if self.c <= 0:
            raise ValueError(f"central charge must be positive, got {self.c}")
        if self.h < 0:
            raise ValueError(f"h must be nonnegative, got {self.h}")
        if self.h_prime <= 0:
            # k = 1, h = 0 is the invariant vacuum: no coherent-state orbit
            raise ValueError(f"effective weight h'={self.h_prime} must be positive")

    @property
    def h_prime(self) -> float:
        return h_prime(self.k, self.c, self.h)

    @property
    def rep(self):
        return highest_weight(self.h_prime)


def _taus(rep: VirasoroRep, xi, xi_prime):
    (r1, d1), (r2, d2) = xi, xi_prime
    return virasoro_coords(r1, d1, rep.k)[0], virasoro_coords(r2, d2, rep.k)[0]


def virasoro_overlap(rep: VirasoroRep, xi, xi_prime, cfg: SeriesConfig | None = None) -> OverlapResult:
    """``<xi; k|xi'; k>`` for ``xi = (R, delta)`` meaning ``R exp(i delta)``.

    Maps both labels to tau and sums the highest-weight series with
    ``nu0 = -h'``.
    """
    tau, tau_prime = _taus(rep, xi, xi_prime)
    return overlap(virasoro_algebra(rep.k), rep.rep, tau, tau_prime, cfg)


def virasoro_closed_form(rep: VirasoroRep, xi, xi_prime) -> complex:
    """``[cosh(kR) cosh(kR') (1 - tanh(kR) tanh(kR') e^{i(delta'-delta)})]^(-2h')``."""
    tau, tau_prime = _taus(rep, xi, xi_prime)
    return closed_form_su11(rep.h_prime, tau.conjugate(), tau_prime.conjugate())


def bracket_form(rep: VirasoroRep, xi, xi_prime) -> complex:
    """``[(1 - tanh(kR) tanh(kR') e^{i(delta'-delta)}) / (cosh(kR) cosh(kR'))]^(2h')``.

    This expression is *not* a normalized overlap: at ``xi = xi'`` it equals
    ``cosh(kR)^(-8h')``. It differs from :func:`virasoro_closed_form` by the
    factor ``(1 - tanh(kR) tanh(kR') e^{i(delta'-delta)})^(4h')``; see
    :func:`bracket_deviation`.
    """
    (r1, d1), (r2, d2) = xi, xi_prime
    k, hp = rep.k, rep.h_prime
    inner = 1 - math.tanh(k * r1) * math.tanh(k * r2) * cmath.exp(1j * (d2 - d1))
    return (inner / (math.cosh(k * r1) * math.cosh(k * r2))) ** (2 * hp)


def bracket_deviation(rep: VirasoroRep, xi, xi_prime) -> dict:
    """Compare :func:`bracket_form` with the composed overlap at one point pair."""
    (r1, d1), (r2, d2) = xi, xi_prime
    k, hp = rep.k, rep.h_prime
    composed = virasoro_closed_form(rep, xi, xi_prime)
    bracket = bracket_form(rep, xi, xi_prime)
    inner = 1 - math.tanh(k * r1) * math.tanh(k * r2) * cmath.exp(1j * (d2 - d1))
    predicted = inner ** (4 * hp)
    ratio = bracket / composed
    return {
        "k": rep.k, "c": rep.c, "h": rep.h, "h_prime": hp,
        "xi": [r1, d1], "xi_prime": [r2, d2],
        "composed": [composed.real, composed.imag],
        "bracket": [bracket.real, bracket.imag],
        "ratio": [ratio.real, ratio.imag],
        "predicted_factor": [predicted.real, predicted.imag],
    }


def threshold_line(k: int, h_prime_t: float, c: float) -> float:
    """Primary weight h at which g_k coherent states reach effective weight ``h_prime_t``.

    Points ``(h, c)`` with ``h >= threshold_line(k, h_prime_t, c)`` count as
    effectively classical for that threshold.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if h_prime_t <= 0:
        raise ValueError(f"h_prime_t must be positive, got {h_prime_t}")
    return k * h_prime_t - c / 24 * (k * k - 1)
