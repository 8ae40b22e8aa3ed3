"""Finite-parameter diagnostics of the large-representation limit.

Two witnesses of coherent states becoming orthogonal:

* pointwise decay of ``|<tau|tau'>|`` at a fixed distinct pair as the
  representation parameter (j, k, c or h) grows, with a log-linear fit;
* shrinking of the integrated mass ``int |<tau0|tau0+s>|^2 ds`` over a fixed
  window of separations (flat measure in s).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import trapezoid
from scipy.optimize import bisect

from .algebra import SU2, SU11, discrete_series, highest_weight, spin
from .overlap import Chart, CoherentPoint, SeriesConfig, overlap
from .virasoro import h_prime, virasoro_algebra

__all__ = [
    "DecayReport",
    "Family",
    "SweepPlan",
    "delta_witness",
    "family_overlap",
    "half_width",
    "run_sweep",
]

HALF_WIDTH_XTOL = 1e-6


class Family(enum.Enum):
    SU2_J = "Su2J"
    SU11_K = "Su11K"
    VIRASORO_C = "VirasoroC"
    VIRASORO_H = "VirasoroH"


def _spec_for(family: Family, parameter: float, fixed: dict):
    """(algebra, rep) of one sweep member.

    Virasoro families need ``fixed["k"]`` plus the other of ``h``/``c``.
    """
    if family is Family.SU2_J:
        return SU2, spin(parameter)
    if family is Family.SU11_K:
        return SU11, discrete_series(parameter)
    k = int(fixed.get("k", 1))
    if family is Family.VIRASORO_C:
        hp = h_prime(k, parameter, fixed["h"])
    else:
        hp = h_prime(k, fixed["c"], parameter)
    return virasoro_algebra(k), highest_weight(hp)


def family_overlap(family, parameter, tau, tau_prime, fixed=None, cfg=None) -> complex:
    """Overlap of two tau-chart points for one member of a family."""
    alg, rep = _spec_for(Family(family), parameter, fixed or {})
    return overlap(alg, rep, tau, tau_prime, cfg).value


@dataclass(frozen=True)
class SweepPlan:
    """Parameter sweep at a fixed pair of tau-chart probe points.

    ``fixed`` carries the non-swept Virasoro data (``k`` and ``h`` or ``c``).
    ``grid`` is an increasing list of real separations used for half-widths.
    """

    family: Family
    parameter_values: tuple
    probe_pair: tuple
    grid: tuple | None = None
    fixed: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        values = tuple(float(v) for v in self.parameter_values)
        if not values:
            raise ValueError("parameter_values is empty")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("parameter_values must be strictly increasing")
        object.__setattr__(self, "parameter_values", values)
        if len(self.probe_pair) != 2:
            raise ValueError("probe_pair needs exactly two points")
        if self.grid is not None:
            object.__setattr__(self, "grid", tuple(float(s) for s in self.grid))


@dataclass(frozen=True)
class DecayReport:
    parameter_values: tuple
    magnitudes: tuple
    fitted_log_slope: float
    fit_intercept: float
    fit_residual: float
    half_width_series: tuple | None = None


def _probe(point) -> complex:
    if isinstance(point, CoherentPoint):
        return point.require(Chart.TAU)
    return complex(point)


def half_width(family, parameter, grid, probe=0j, fixed=None, cfg=None) -> float:
    """Separation s at which ``|<probe|probe + s>|`` first falls to 1/2.

    The crossing is bracketed on ``grid`` and refined by bisection to
    ``HALF_WIDTH_XTOL``. Returns NaN when the grid never crosses 1/2.
    """
    probe = _probe(probe)

    def excess(s):
        return abs(family_overlap(family, parameter, probe, probe + s, fixed, cfg)) - 0.5

    values = [excess(s) for s in grid]
    for (a, fa), (b, fb) in zip(zip(grid, values), zip(grid[1:], values[1:])):
        if fa == 0:
            return float(a)
        if fa > 0 > fb:
            return float(bisect(excess, a, b, xtol=HALF_WIDTH_XTOL))
    return math.nan


def run_sweep(plan: SweepPlan, cfg: SeriesConfig | None = None) -> DecayReport:
    """Overlap magnitudes along the sweep and their log-linear fit."""
    tau, tau_prime = (_probe(p) for p in plan.probe_pair)
    mags = tuple(abs(family_overlap(plan.family, p, tau, tau_prime, plan.fixed, cfg))
                 for p in plan.parameter_values)
    if min(mags) == 0:
        raise ValueError("an overlap vanishes exactly; the log-linear fit is undefined")
    x = np.array(plan.parameter_values)
    y = np.log(np.array(mags))
    if len(x) >= 2:
        slope, intercept = np.polyfit(x, y, 1)
        residual = float(np.max(np.abs(y - (slope * x + intercept))))
    else:
        slope, intercept, residual = 0.0, float(y[0]), 0.0
    widths = None
    if plan.grid is not None:
        widths = tuple(half_width(plan.family, p, plan.grid, tau, plan.fixed, cfg)
                       for p in plan.parameter_values)
    return DecayReport(plan.parameter_values, mags, float(slope), float(intercept), residual, widths)


def delta_witness(family, parameter, separation_grid, probe=0j, fixed=None, cfg=None) -> float:
    """Trapezoidal integral of ``|<probe|probe + s>|^2`` over ``separation_grid``."""
    probe = _probe(probe)
    s = np.asarray(separation_grid, dtype=float)
    weights = [abs(family_overlap(family, parameter, probe, probe + si, fixed, cfg)) ** 2 for si in s]
    return float(trapezoid(weights, s))
