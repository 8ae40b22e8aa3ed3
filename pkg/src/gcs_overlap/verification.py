"""Cross-validation matrix: moment series vs closed forms vs matrix oracle.

:func:`run_verification` evaluates every check on fixed, seeded grids and
returns one :class:`Check` row per comparison. Nothing depends on timing
or unseeded randomness, so two runs with the same configuration produce
identical reports.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from . import algebra as al
from .coords import omega_to_tau_su11, omega_to_tau_su2, split_displacement, su2_polar_to_omega
from .coords import SPLIT_KMINUS, SPLIT_KPLUS
from .errors import GCSError
from .expm import expm
from .oracle import (FockKind, build_fock_rep, build_spin_rep, build_weight_module, displace,
                     ladder_moment)
from .overlap import (SeriesConfig, closed_form_su11, closed_form_su2, closed_form_su2_omega,
                      m_series, overlap)
from .virasoro import VirasoroRep, virasoro_closed_form, virasoro_overlap

__all__ = ["Check", "VerifyConfig", "run_verification", "report_dict"]

SEED = 20240601


@dataclass(frozen=True)
class VerifyConfig:
    max_two_j: int = 10
    truncation: int = 300
    rho_max: float = 1.2
    series: SeriesConfig = field(default_factory=SeriesConfig)


@dataclass(frozen=True)
class Check:
    name: str
    max_error: float
    tolerance: float
    passed: bool
    detail: str = ""


def _run(name, tolerance, fn):
    try:
        err, detail = fn()
    except (GCSError, ValueError, ArithmeticError) as exc:
        return Check(name, math.nan, tolerance, False, f"{type(exc).__name__}: {exc}")
    return Check(name, float(err), tolerance, bool(err <= tolerance), detail)


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def builtin_reps():
    """Every built-in (algebra, rep) pair exercised by the verification matrix."""
    pairs = [(al.SU2, al.spin(Fraction(n, 2))) for n in range(1, 11)]
    pairs += [(al.SU11, al.two_mode(n0)) for n0 in range(3)]
    pairs += [(al.SU11, al.one_mode("even")), (al.SU11, al.one_mode("odd"))]
    pairs += [(al.SU11, al.highest_weight(hp)) for hp in (Fraction(1, 2), 1, Fraction(5, 4))]
    return pairs


def su2_grid():
    """Fixed 25-point (theta, phi) grid avoiding the south pole."""
    thetas = np.linspace(0.0, 0.9 * math.pi, 5)
    phis = np.linspace(0.0, 2 * math.pi, 5, endpoint=False)
    return [(float(t), float(p)) for t in thetas for p in phis]


def su11_grid(rho_max):
    """Fixed disk grid in Omega = rho e^{i phi}, rho <= rho_max."""
    pts = [(0.0, 0.0)]
    for rho in np.linspace(rho_max / 3, rho_max, 3):
        for phi in (0.0, 2.0, 4.0):
            pts.append((float(rho), phi))
    return pts


def _product_identity():
    worst = Fraction(0)
    for alg, rep in builtin_reps():
        prod = Fraction(1)
        for n in range(1, 31):
            prod *= al.sigma(alg, rep, n, exact=True)
            worst = max(worst, abs(prod - al.moment(alg, rep, n, exact=True)))
    return float(worst), "exact rational arithmetic, n <= 30"


def _su2_moments(cfg):
    worst = 0.0
    for two_j in range(1, cfg.max_two_j + 1):
        j = Fraction(two_j, 2)
        mrep, rep = build_spin_rep(j), al.spin(j)
        for n in range(two_j + 1):
            worst = max(worst, _rel(ladder_moment(mrep, n), al.moment(al.SU2, rep, n)))
    return worst, "<l0|K-^n K+^n|l0> vs P(n) n!"


def _fock_moments():
    worst = 0.0
    cases = [(FockKind.ONE_MODE_EVEN, 0, al.one_mode("even")),
             (FockKind.ONE_MODE_ODD, 0, al.one_mode("odd"))]
    cases += [(FockKind.TWO_MODE, n0, al.two_mode(n0)) for n0 in range(3)]
    for kind, n0, rep in cases:
        mrep = build_fock_rep(kind, 30, n0)
        for n in range(21):
            worst = max(worst, _rel(ladder_moment(mrep, n), al.moment(al.SU11, rep, n)))
    return worst, "k in {1/4, 3/4, 1/2, 1, 3/2}, n <= 20"


def _hwv_moments():
    worst = 0.0
    for hp in (Fraction(1, 2), 1, Fraction(5, 4)):
        rep = al.highest_weight(hp)
        mrep = build_weight_module(al.SU11, rep, 30)
        for n in range(21):
            worst = max(worst, _rel(ladder_moment(mrep, n), al.moment(al.SU11, rep, n)))
    return worst, "<h0|K+^n K-^n|h0> vs Q(n) n!"


def _su2_series_vs_oracle(cfg):
    grid = su2_grid()
    taus = [omega_to_tau_su2(t, p) for t, p in grid]
    worst = 0.0
    for two_j in range(1, cfg.max_two_j + 1):
        j = Fraction(two_j, 2)
        mrep, rep = build_spin_rep(j), al.spin(j)
        vecs = [displace(mrep, su2_polar_to_omega(t, p)) for t, p in grid]
        for a in range(len(grid)):
            for b in range(len(grid)):
                ser = overlap(al.SU2, rep, taus[a], taus[b], cfg.series).value
                worst = max(worst, abs(ser - np.vdot(vecs[a], vecs[b])))
    return worst, f"j <= {Fraction(cfg.max_two_j, 2)}, 25-point grid, all pairs"


def _su2_closed_vs_series(cfg):
    grid = su2_grid()
    taus = [omega_to_tau_su2(t, p) for t, p in grid]
    worst = 0.0
    for two_j in range(1, cfg.max_two_j + 1):
        j = Fraction(two_j, 2)
        rep = al.spin(j)
        for ta in taus:
            for tb in taus:
                ser = overlap(al.SU2, rep, ta, tb, cfg.series).value
                worst = max(worst, abs(ser - closed_form_su2(j, ta, tb)))
    return worst, "numerator exponent 2j"


def _su2_charts():
    grid = su2_grid()
    worst = 0.0
    for two_j in range(1, 11):
        j = Fraction(two_j, 2)
        for ta, pa in grid:
            for tb, pb in grid:
                via_tau = closed_form_su2(j, omega_to_tau_su2(ta, pa), omega_to_tau_su2(tb, pb))
                worst = max(worst, abs(via_tau - closed_form_su2_omega(j, ta, pa, tb, pb)))
    return worst, "closed_form_su2 o omega_to_tau_su2 vs polar closed form"


def _su11_closed_vs_series(cfg, reps):
    taus = [omega_to_tau_su11(r, p).tau for r, p in su11_grid(cfg.rho_max)]
    worst = 0.0
    for rep in reps:
        k = rep.nu0
        for ta in taus:
            for tb in taus:
                ser = overlap(al.SU11, rep, ta, tb, cfg.series).value
                worst = max(worst, abs(ser - closed_form_su11(k, ta, tb)))
    return worst, f"|tau| <= tanh {cfg.rho_max}"


def _su11_vs_oracle(cfg, cases):
    grid = su11_grid(cfg.rho_max)
    taus = [omega_to_tau_su11(r, p).tau for r, p in grid]
    worst = 0.0
    for kind, n0, rep in cases:
        mrep = build_fock_rep(kind, cfg.truncation, n0)
        vecs = [displace(mrep, r * cmath.exp(1j * p)) for r, p in grid]
        for a in range(len(grid)):
            for b in range(len(grid)):
                ser = overlap(al.SU11, rep, taus[a], taus[b], cfg.series).value
                worst = max(worst, abs(ser - np.vdot(vecs[a], vecs[b])))
    return worst, f"truncation {cfg.truncation}, rho <= {cfg.rho_max}"


def one_mode_x_grid():
    """20 fixed points x = conj(tau) tau' inside |x| <= 0.9."""
    return [0.9 * (i / 19) * cmath.exp(1j * 2.4 * i) for i in range(20)]


def _one_mode_m(cfg):
    worst = 0.0
    for parity in ("even", "odd"):
        rep = al.one_mode(parity)
        for x in one_mode_x_grid():
            ser = m_series(al.SU11, rep, 1.0, x, cfg.series).value
            worst = max(worst, _rel(ser, (1 - x) ** (-2 * float(rep.nu0))))
    return worst, "M = (1-x)^(-1/2), (1-x)^(-3/2) on 20 points (relative)"


def random_split_points(n=100):
    rng = np.random.default_rng(SEED)
    return [(float(r), float(p)) for r, p in zip(rng.uniform(0, 3, n), rng.uniform(-math.pi, math.pi, n))]


def _bch():
    worst = 0.0
    for rho, phi in random_split_points():
        dec = omega_to_tau_su11(rho, phi)
        rebuilt = dec.reconstruct()
        omega = rho * cmath.exp(1j * phi)
        direct = split_displacement(rho, phi)
        generated = expm(omega * SPLIT_KPLUS - omega.conjugate() * SPLIT_KMINUS)
        worst = max(worst, np.abs(rebuilt - direct).max(), np.abs(rebuilt - generated).max())
    return worst, "100 seeded points, rho in [0, 3)"


def random_virasoro_points(n=50):
    rng = np.random.default_rng(SEED + 1)
    out = []
    for _ in range(n):
        rep = VirasoroRep(int(rng.integers(1, 5)), float(rng.uniform(0.5, 30)), float(rng.uniform(0.05, 5)))
        xi = (float(rng.uniform(0, 0.6)), float(rng.uniform(-math.pi, math.pi)))
        xi_p = (float(rng.uniform(0, 0.6)), float(rng.uniform(-math.pi, math.pi)))
        out.append((rep, xi, xi_p))
    return out


def _virasoro_k1(cfg):
    worst = 0.0
    for rep, xi, xi_p in random_virasoro_points():
        rep1 = VirasoroRep(1, rep.c, rep.h)
        tau = cmath.exp(-1j * xi[1]) * math.tanh(xi[0])
        tau_p = cmath.exp(-1j * xi_p[1]) * math.tanh(xi_p[0])
        ser = virasoro_overlap(rep1, xi, xi_p, cfg.series).value
        worst = max(worst, abs(ser - closed_form_su11(rep.h, tau.conjugate(), tau_p.conjugate())),
                    abs(virasoro_closed_form(rep1, xi, xi_p) - ser))
    return worst, "k = 1 vs su(1,1) closed form with k -> h"


def _virasoro_self(cfg):
    worst = 0.0
    for rep, xi, _ in random_virasoro_points():
        worst = max(worst, abs(virasoro_overlap(rep, xi, xi, cfg.series).value - 1))
    return worst, "50 seeded (k, c, h, xi)"


def _virasoro_oracle(cfg):
    cases = [(VirasoroRep(2, 12.0, 1.0), (0.3, 0.0), (0.5, math.pi / 3)),
             (VirasoroRep(3, 2.0, 0.5), (0.2, 1.0), (0.1, -2.0)),
             (VirasoroRep(1, 1.0, 0.75), (0.6, 0.5), (0.4, 2.5))]
    worst = 0.0
    for rep, xi, xi_p in cases:
        mrep = build_weight_module(al.SU11, rep.rep, cfg.truncation)
        oracle = np.vdot(displace(mrep, rep.k * xi[0] * cmath.exp(-1j * xi[1])),
                         displace(mrep, rep.k * xi_p[0] * cmath.exp(-1j * xi_p[1])))
        worst = max(worst, abs(virasoro_overlap(rep, xi, xi_p, cfg.series).value - oracle))
    return worst, "Omega = k conj(xi) on the weight module of weight -h'"


def _truncation_doubling(cfg):
    t = max(10, cfg.truncation // 2)
    worst = 0.0
    for kind, n0 in ((FockKind.TWO_MODE, 0), (FockKind.ONE_MODE_EVEN, 0)):
        small, big = build_fock_rep(kind, t, n0), build_fock_rep(kind, 2 * t, n0)
        a, b = 0.8 * cmath.exp(0.3j), 0.5 * cmath.exp(2.0j)
        o_small = np.vdot(displace(small, a), displace(small, b))
        o_big = np.vdot(displace(big, a), displace(big, b))
        worst = max(worst, abs(o_small - o_big))
    return worst, f"truncation {t} vs {2 * t}"


def run_verification(cfg: VerifyConfig | None = None) -> list[Check]:
    cfg = cfg or VerifyConfig()
    two_mode = [(FockKind.TWO_MODE, n0, al.two_mode(n0)) for n0 in range(3)]
    one_mode = [(FockKind.ONE_MODE_EVEN, 0, al.one_mode("even")),
                (FockKind.ONE_MODE_ODD, 0, al.one_mode("odd"))]
    return [
        _run("product_identity", 0.0, _product_identity),
        _run("su2_moments_vs_oracle", 1e-9, lambda: _su2_moments(cfg)),
        _run("fock_moments_vs_oracle", 1e-9, _fock_moments),
        _run("hwv_moments_vs_weight_module", 1e-9, _hwv_moments),
        _run("su2_series_vs_oracle", 1e-10, lambda: _su2_series_vs_oracle(cfg)),
        _run("su2_closed_form_vs_series", 1e-10, lambda: _su2_closed_vs_series(cfg)),
        _run("su2_omega_chart_vs_tau_chart", 1e-12, _su2_charts),
        _run("su11_two_mode_closed_form_vs_series", 1e-12,
             lambda: _su11_closed_vs_series(cfg, [c[2] for c in two_mode])),
        _run("su11_two_mode_series_vs_oracle", 1e-8, lambda: _su11_vs_oracle(cfg, two_mode)),
        _run("su11_one_mode_m_vs_closed_form", 1e-12, lambda: _one_mode_m(cfg)),
        _run("su11_one_mode_series_vs_oracle", 1e-8, lambda: _su11_vs_oracle(cfg, one_mode)),
        _run("bch_split_basis_reconstruction", 1e-12, _bch),
        _run("virasoro_k1_vs_su11_closed_form", 1e-12, lambda: _virasoro_k1(cfg)),
        _run("virasoro_self_overlap", 1e-12, lambda: _virasoro_self(cfg)),
        _run("virasoro_series_vs_weight_module_oracle", 1e-9, lambda: _virasoro_oracle(cfg)),
        _run("oracle_truncation_doubling", 1e-10, lambda: _truncation_doubling(cfg)),
    ]


def report_dict(checks: list[Check]) -> dict:
    rows = []
    for c in checks:
        row = asdict(c)
        if math.isnan(row["max_error"]):
            row["max_error"] = None
        rows.append(row)
    return {"passed": all(c.passed for c in checks), "checks": rows}
