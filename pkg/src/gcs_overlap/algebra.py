"""Rank-one algebra descriptors and the moment coefficients of the overlap series.

A rank-one algebra with triangular decomposition {g-, h, g+} is fixed by three
numbers::

    [g+, g-] = beta * h,      [h, g+-] = alpha+- * g+-

A unitary irrep is identified, for overlap purposes, by its extremal vector
(lowest or highest weight) and the eigenvalue ``nu0`` of h on that vector.
Everything the overlap needs is the sequence of diagonal moments
``<l0|K-^n K+^n|l0> / n!`` (lowest weight) or ``<h0|K+^n K-^n|h0> / n!``
(highest weight), computed here as :func:`coeff_P` and :func:`coeff_Q`.

Pochhammer symbols in this package are always *falling* factorials,
``(x)_n = x (x-1) ... (x-n+1)``.
"""

from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

Real = Union[int, float, Fraction]

__all__ = [
    "AlgebraSpec",
    "Coefficient",
    "Extremal",
    "RepSpec",
    "SU2",
    "SU11",
    "coeff_P",
    "coeff_Q",
    "coefficient",
    "discrete_series",
    "falling_factorial",
    "highest_weight",
    "moment",
    "one_mode",
    "record_from_spec",
    "sigma",
    "spec_from_record",
    "spin",
    "step_ratio",
    "terminating_order",
    "two_mode",
]


class Extremal(enum.Enum):
    LOWEST = "LowestWeight"
    HIGHEST = "HighestWeight"


@dataclass(frozen=True)
class AlgebraSpec:
    """Structure constants of a rank-one algebra.

    Parameters
    ----------
    alpha_plus, alpha_minus : real
        Eigenvalues of ``ad_h`` on ``g+`` and ``g-``. Must be nonzero.
    beta : real
        ``[g+, g-] = beta * h``.
    name : str
        Free identifier, e.g. ``"su2"``.
    """

    alpha_plus: Real
    alpha_minus: Real
    beta: Real
    name: str = "custom"

    def __post_init__(self):
        if self.alpha_plus == 0 or self.alpha_minus == 0:
            raise ValueError("shift operators must shift: alpha_plus and alpha_minus must be nonzero")

    def same_constants(self, other: "AlgebraSpec") -> bool:
        return (self.alpha_plus, self.alpha_minus, self.beta) == (
            other.alpha_plus, other.alpha_minus, other.beta)


SU2 = AlgebraSpec(1, -1, 2, "su2")
SU11 = AlgebraSpec(1, -1, -2, "su11")


@dataclass(frozen=True)
class RepSpec:
    """Extremal vector kind and its Cartan eigenvalue."""

    extremal: Extremal
    nu0: Real
    label: str = ""

    def __post_init__(self):
        if not isinstance(self.extremal, Extremal):
            object.__setattr__(self, "extremal", Extremal(self.extremal))


def spin(j: Real) -> RepSpec:
    """Spin-j irrep of su(2) built on |j, -j>."""
    if j < 0 or (2 * j) != int(2 * j):
        raise ValueError(f"2j must be a nonnegative integer, got j={j}")
    j = Fraction(int(2 * j), 2)
    return RepSpec(Extremal.LOWEST, -j, f"j={j}")


def discrete_series(k: Real) -> RepSpec:
    """Lowest-weight su(1,1) irrep with Bargmann index k > 0."""
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    return RepSpec(Extremal.LOWEST, k, f"k={k}")


def two_mode(n0: int) -> RepSpec:
    """Two-mode su(1,1) irrep on |n0+m> x |m>, k = (n0+1)/2."""
    if n0 < 0 or int(n0) != n0:
        raise ValueError(f"n0 must be a nonnegative integer, got {n0}")
    return RepSpec(Extremal.LOWEST, Fraction(int(n0) + 1, 2), f"two-mode n0={int(n0)}")


def one_mode(parity: str) -> RepSpec:
    """One-mode su(1,1) irreps: ``"even"`` (k=1/4) or ``"odd"`` (k=3/4)."""
    k = {"even": Fraction(1, 4), "odd": Fraction(3, 4)}.get(parity)
    if k is None:
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    return RepSpec(Extremal.LOWEST, k, f"one-mode-{parity} k={k}")


def highest_weight(h_prime: Real) -> RepSpec:
    """Highest-weight su(1,1) irrep whose extremal vector has K0 = -h_prime."""
    if h_prime <= 0:
        raise ValueError(f"h_prime must be positive, got {h_prime}")
    return RepSpec(Extremal.HIGHEST, -h_prime, f"hwv h'={h_prime}")


def falling_factorial(x, n: int):
    """Falling factorial ``x (x-1) ... (x-n+1)``; 1 for ``n == 0``.

    Works for any numeric type supporting ``-`` and ``*`` (float, Fraction,
    complex).
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    out = 1
    for i in range(n):
        out = out * (x - i)
    return out


def _exact(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def _branch(alg: AlgebraSpec, rep: RepSpec, exact=False):
    """Return ``(s, x)`` with coefficient(n) = s**n * (x)_n."""
    cast = _exact if exact else float
    beta, nu0 = cast(alg.beta), cast(rep.nu0)
    if rep.extremal is Extremal.LOWEST:
        am = cast(alg.alpha_minus)
        return -beta * am / 2, 2 * nu0 / am
    ap = cast(alg.alpha_plus)
    # <h0|K+^n K-^n|h0> = prod_m (m beta nu0 - m(m-1)/2 beta alpha+); no (-1)^n here.
    return beta * ap / 2, 2 * nu0 / ap


def step_ratio(alg: AlgebraSpec, rep: RepSpec, n: int, exact=False):
    """``coefficient(n) / coefficient(n-1)`` for ``n >= 1``."""
    s, x = _branch(alg, rep, exact)
    return s * (x - (n - 1))


def terminating_order(alg: AlgebraSpec, rep: RepSpec):
    """Largest n with nonzero coefficient, or None if the series never terminates."""
    _, x = _branch(alg, rep, exact=True)
    if x.denominator == 1 and x >= 0:
        return int(x)
    return None


class Coefficient(NamedTuple):
    """Coefficient value with a log-magnitude channel.

    ``value`` saturates at ``+-sys.float_info.max`` when ``overflow`` is set;
    ``sign * exp(log_abs)`` is then the faithful magnitude.
    """

    value: float
    sign: int
    log_abs: float
    overflow: bool


def coefficient(alg: AlgebraSpec, rep: RepSpec, n: int) -> Coefficient:
    """Moment coefficient for either extremal kind, with overflow channel."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    s, x = _branch(alg, rep)
    sign, log_abs = 1, 0.0
    for i in range(n):
        f = s * (x - i)
        if f == 0:
            return Coefficient(0.0, 0, -math.inf, False)
        sign *= 1 if f > 0 else -1
        log_abs += math.log(abs(f))
    if log_abs >= math.log(sys.float_info.max):
        return Coefficient(sign * sys.float_info.max, sign, log_abs, True)
    value = float(s) ** n * falling_factorial(x, n)
    if math.isinf(value):
        return Coefficient(sign * sys.float_info.max, sign, log_abs, True)
    return Coefficient(value, sign, log_abs, False)


def coeff_P(alg: AlgebraSpec, rep: RepSpec, n: int, exact=False):
    """Lowest-weight moment ``<l0|K-^n K+^n|l0> / n!``.

    Equal to ``(-1)^n (beta alpha- / 2)^n (2 nu0 / alpha-)_n``.

    Parameters
    ----------
    exact : bool
        Return a :class:`~fractions.Fraction` computed in rational arithmetic.
    """
    if rep.extremal is not Extremal.LOWEST:
        raise ValueError("coeff_P needs a lowest-weight rep; use coeff_Q for highest weight")
    return _coeff(alg, rep, n, exact)


def coeff_Q(alg: AlgebraSpec, rep: RepSpec, n: int, exact=False):
    """Highest-weight moment ``<h0|K+^n K-^n|h0> / n!``.

    Equal to ``(beta alpha+ / 2)^n (2 nu0 / alpha+)_n``. For su(1,1) with
    ``nu0 = -h'`` this is the rising product ``2h'(2h'+1)...(2h'+n-1)``.
    """
    if rep.extremal is not Extremal.HIGHEST:
        raise ValueError("coeff_Q needs a highest-weight rep; use coeff_P for lowest weight")
    return _coeff(alg, rep, n, exact)


def _coeff(alg, rep, n, exact):
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if exact:
        s, x = _branch(alg, rep, exact=True)
        return s ** n * falling_factorial(x, n)
    return coefficient(alg, rep, n).value


def sigma(alg: AlgebraSpec, rep: RepSpec, n: int, exact=False):
    """Single commutator step: ``moment(n) = sigma(n) * moment(n-1)``.

    Lowest weight: ``n(n-1)/2 beta alpha- - n beta nu0``.
    Highest weight: ``n beta nu0 - n(n-1)/2 beta alpha+``.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    cast = _exact if exact else float
    beta, nu0 = cast(alg.beta), cast(rep.nu0)
    pairs = Fraction(n * (n - 1), 2) if exact else n * (n - 1) / 2
    if rep.extremal is Extremal.LOWEST:
        return pairs * beta * cast(alg.alpha_minus) - n * beta * nu0
    return n * beta * nu0 - pairs * beta * cast(alg.alpha_plus)


def moment(alg: AlgebraSpec, rep: RepSpec, n: int, exact=False):
    """Unnormalized diagonal moment ``coefficient(n) * n!``."""
    return _coeff(alg, rep, n, exact) * math.factorial(n)


def record_from_spec(alg: AlgebraSpec, rep: RepSpec) -> dict:
    """Flat key-value record ``{alpha_plus, alpha_minus, beta, extremal, nu0, label}``."""
    return {
        "alpha_plus": float(alg.alpha_plus),
        "alpha_minus": float(alg.alpha_minus),
        "beta": float(alg.beta),
        "extremal": rep.extremal.value,
        "nu0": float(rep.nu0),
        "label": rep.label,
    }


def spec_from_record(record: dict) -> tuple[AlgebraSpec, RepSpec]:
    missing = {"alpha_plus", "alpha_minus", "beta", "extremal", "nu0"} - set(record)
    if missing:
        raise ValueError(f"record is missing keys: {sorted(missing)}")
    alg = AlgebraSpec(record["alpha_plus"], record["alpha_minus"], record["beta"],
                      record.get("name", "custom"))
    for builtin in (SU2, SU11):
        if alg.same_constants(builtin):
            alg = builtin
    rep = RepSpec(Extremal(record["extremal"]), record["nu0"], record.get("label", ""))
    return alg, rep
