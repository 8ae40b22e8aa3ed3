"""Overlaps of rank-one generalized coherent states in the tau chart.

For a lowest-weight construction ``|tau> ~ exp(tau K+)|l0>`` and::

    M(tau, tau') = sum_n z**n P(n) / n!,      z = conj(tau) * tau'
    <tau|tau'>   = M(tau, tau') / sqrt(N(tau) N(tau')),  N(tau) = M(tau, tau)

with ``P`` from :func:`gcs_overlap.algebra.coeff_P`. Highest-weight
constructions use ``z = tau * conj(tau')`` and ``coeff_Q``.

Terms are accumulated by the ratio recurrence
``term(n) = term(n-1) * z * P(n) / (P(n-1) n)`` so the factorial growth of the
coefficients never materializes; sums are carried as (mantissa, log-scale)
pairs so that very large weights do not overflow.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

from .algebra import AlgebraSpec, Extremal, RepSpec, step_ratio, terminating_order, _branch
from .errors import DomainError, NonConvergence

__all__ = [
    "Chart",
    "CoherentPoint",
    "OverlapResult",
    "SeriesConfig",
    "closed_form_su11",
    "closed_form_su2",
    "closed_form_su2_omega",
    "m_series",
    "normalization",
    "overlap",
    "series_argument",
]

# rescale the running sum once the current term exceeds this
_RESCALE = 1e150
# safety factor applied to the geometric tail bound
_HEADROOM = 1.1
# each series targets tol / 4 so the normalized ratio of three series stays within tol
_SHARE = 0.25


class Chart(enum.Enum):
    TAU = "Tau"
    OMEGA = "Omega"


@dataclass(frozen=True)
class CoherentPoint:
    """A coherent-state label tagged with its coordinate chart.

    Omega-chart points carry the polar form ``Omega = rho * exp(i phi)``.
    """

    chart: Chart
    value: complex
    rho: float | None = None
    phi: float | None = None

    @classmethod
    def tau(cls, value) -> "CoherentPoint":
        return cls(Chart.TAU, complex(value))

    @classmethod
    def omega(cls, rho: float, phi: float) -> "CoherentPoint":
        if rho < 0:
            raise ValueError(f"rho must be nonnegative, got {rho}")
        return cls(Chart.OMEGA, rho * cmath.exp(1j * phi), float(rho), float(phi))

    def require(self, chart: Chart) -> complex:
        """Return the coordinate value, refusing an implicit chart change."""
        if self.chart is not chart:
            raise ValueError(f"expected a {chart.value}-chart point, got {self.chart.value}")
        return self.value


@dataclass(frozen=True)
class SeriesConfig:
    tol: float = 1e-12
    max_terms: int = 10_000

    def __post_init__(self):
        if not 0 < self.tol < 1:
            raise ValueError(f"tol must lie in (0, 1), got {self.tol}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")


@dataclass(frozen=True)
class OverlapResult:
    """Series value plus diagnostics.

    ``tail_estimate`` is a bound on the neglected tail relative to the
    returned value; it is exactly zero for terminating series.
    """

    value: complex
    terms_used: int
    tail_estimate: float
    converged: bool
    magnitude: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "magnitude", abs(self.value))


@dataclass(frozen=True)
class _Scaled:
    mantissa: complex
    log_scale: float
    terms_used: int
    tail: float

    def value(self) -> complex:
        if self.log_scale == 0.0:
            return self.mantissa
        return self.mantissa * math.exp(self.log_scale)


def series_argument(rep: RepSpec, tau: complex, tau_prime: complex) -> complex:
    """``conj(tau) tau'`` for lowest weight, ``tau conj(tau')`` for highest weight."""
    if rep.extremal is Extremal.LOWEST:
        return tau.conjugate() * tau_prime
    return tau * tau_prime.conjugate()


def _sum_series(alg: AlgebraSpec, rep: RepSpec, z: complex, cfg: SeriesConfig) -> _Scaled:
    top = terminating_order(alg, rep)
    s, x = _branch(alg, rep)
    if top is None and abs(z) * abs(s) >= 1:
        raise DomainError(
            f"|z| = {abs(z):.17g} lies outside the convergence disk |z| < {1 / abs(s):.17g} "
            "(the point has left the Poincare disk)")

    term, total, log_scale = 1 + 0j, 1 + 0j, 0.0
    n = 0
    while True:
        if top is not None and n == top:
            return _Scaled(total, log_scale, n + 1, 0.0)
        if n + 1 >= cfg.max_terms:
            raise NonConvergence(f"series did not reach tol={cfg.tol} within {cfg.max_terms} terms")
        n += 1
        term = term * z * step_ratio(alg, rep, n) / n
        total += term
        if abs(term) > _RESCALE:
            term /= _RESCALE
            total /= _RESCALE
            log_scale += math.log(_RESCALE)
        if top is not None or n < x + 1:
            continue
        # past the sign changes of (x - m + 1), |ratio(m)| is monotone in m with limit |z s|
        r = abs(z) * abs(s) * max(abs(x - n) / (n + 1), 1.0)
        if r >= 1:
            continue
        if total == 0:
            if term == 0:
                return _Scaled(total, log_scale, n + 1, 0.0)
            continue
        tail = _HEADROOM * abs(term) * r / (1 - r) / abs(total)
        if tail <= _SHARE * cfg.tol:
            return _Scaled(total, log_scale, n + 1, tail)


def m_series(alg: AlgebraSpec, rep: RepSpec, tau: complex, tau_prime: complex,
             cfg: SeriesConfig | None = None) -> OverlapResult:
    """Overlap ``M(tau, tau')`` of two unnormalized coherent states.

    Raises
    ------
    DomainError
        The series argument lies outside the disk of convergence of a
        non-terminating series.
    NonConvergence
        ``cfg.max_terms`` terms did not reach ``cfg.tol``.
    """
    cfg = cfg or SeriesConfig()
    z = series_argument(rep, complex(tau), complex(tau_prime))
    res = _sum_series(alg, rep, z, cfg)
    return OverlapResult(res.value(), res.terms_used, res.tail, True)


def _norm_scaled(alg, rep, tau, cfg) -> _Scaled:
    tau = complex(tau)
    res = _sum_series(alg, rep, series_argument(rep, tau, tau), cfg)
    assert abs(res.mantissa.imag) <= 1e-14 * abs(res.mantissa.real)
    return _Scaled(complex(res.mantissa.real), res.log_scale, res.terms_used, res.tail)


def normalization(alg: AlgebraSpec, rep: RepSpec, tau: complex,
                  cfg: SeriesConfig | None = None) -> float:
    """Squared norm ``N(tau) = M(tau, tau)`` of the unnormalized state."""
    return _norm_scaled(alg, rep, tau, cfg or SeriesConfig()).value().real


def overlap(alg: AlgebraSpec, rep: RepSpec, tau: complex, tau_prime: complex,
            cfg: SeriesConfig | None = None) -> OverlapResult:
    """Normalized overlap ``<tau|tau'>`` from the moment series.

    ``tail_estimate`` is the largest relative tail among the three series
    (numerator and both norms).
    """
    cfg = cfg or SeriesConfig()
    tau, tau_prime = complex(tau), complex(tau_prime)
    m = _sum_series(alg, rep, series_argument(rep, tau, tau_prime), cfg)
    n1 = _norm_scaled(alg, rep, tau, cfg)
    n2 = _norm_scaled(alg, rep, tau_prime, cfg)
    log_scale = m.log_scale - 0.5 * (n1.log_scale + n2.log_scale)
    value = m.mantissa / math.sqrt(n1.mantissa.real * n2.mantissa.real) * math.exp(log_scale)
    return OverlapResult(value, m.terms_used, max(m.tail, n1.tail, n2.tail), True)


def closed_form_su2(j, tau: complex, tau_prime: complex) -> complex:
    """Spin-j overlap in projective coordinates.

    ``(1 + conj(tau) tau')**(2j) / ((1 + |tau|^2)(1 + |tau'|^2))**j``
    """
    if j < 0 or 2 * j != int(2 * j):
        raise ValueError(f"2j must be a nonnegative integer, got j={j}")
    tau, tau_prime = complex(tau), complex(tau_prime)
    two_j = int(2 * j)
    num = (1 + tau.conjugate() * tau_prime) ** two_j
    return num / ((1 + abs(tau) ** 2) * (1 + abs(tau_prime) ** 2)) ** (two_j / 2)


def closed_form_su2_omega(j, theta: float, phi: float, theta_prime: float, phi_prime: float) -> complex:
    """Spin-j overlap in polar (Bloch sphere) coordinates."""
    if j < 0 or 2 * j != int(2 * j):
        raise ValueError(f"2j must be a nonnegative integer, got j={j}")
    base = (math.cos(theta / 2) * math.cos(theta_prime / 2)
            + math.sin(theta / 2) * math.sin(theta_prime / 2) * cmath.exp(1j * (phi_prime - phi)))
    return base ** int(2 * j)


def closed_form_su11(k, tau: complex, tau_prime: complex) -> complex:
    """Lowest-weight su(1,1) overlap on the Poincare disk (principal branch).

    ``(1 - |tau|^2)^k (1 - |tau'|^2)^k / (1 - conj(tau) tau')^(2k)``
    """
    tau, tau_prime = complex(tau), complex(tau_prime)
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    if abs(tau) >= 1 or abs(tau_prime) >= 1:
        raise DomainError("both points must lie inside the Poincare disk |tau| < 1")
    k = float(k)
    num = ((1 - abs(tau) ** 2) * (1 - abs(tau_prime) ** 2)) ** k
    return num / (1 - tau.conjugate() * tau_prime) ** (2 * k)
