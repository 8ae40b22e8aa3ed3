import math

import numpy as np
import pytest

from gcs_overlap.overlap import CoherentPoint
from gcs_overlap.semiclassics import Family, SweepPlan, delta_witness, half_width, run_sweep


def test_su2_sweep_exact_powers_of_two():
    report = run_sweep(SweepPlan(Family.SU2_J, [1, 2, 4, 8], (0, 1)))
    assert report.magnitudes == pytest.approx([0.5, 0.25, 0.0625, 0.00390625], abs=1e-12)
    assert report.fitted_log_slope == pytest.approx(-math.log(2), abs=1e-9)
    assert report.fit_residual < 1e-10


def test_su11_sweep():
    report = run_sweep(SweepPlan(Family.SU11_K, [1, 2, 4], (CoherentPoint.tau(0), CoherentPoint.tau(0.6))))
    assert report.magnitudes == pytest.approx([0.64, 0.64 ** 2, 0.64 ** 4], rel=1e-12)
    assert report.fitted_log_slope == pytest.approx(math.log(0.64), abs=1e-9)
    assert report.fit_residual < 1e-10


def test_equal_probes_give_unit_magnitudes():
    for family, fixed in ((Family.SU2_J, {}), (Family.SU11_K, {}), (Family.VIRASORO_C, {"k": 2, "h": 1.0})):
        report = run_sweep(SweepPlan(family, [1, 2, 3], (0.3j, 0.3j), fixed=fixed))
        assert report.magnitudes == pytest.approx([1, 1, 1], abs=1e-12)
        assert report.fitted_log_slope == pytest.approx(0, abs=1e-12)


def test_virasoro_c_sweep():
    probes = (0.1, 0.4 + 0.2j)
    flat = run_sweep(SweepPlan(Family.VIRASORO_C, [1, 2, 5, 10, 50], probes, fixed={"k": 1, "h": 0.8}))
    assert max(flat.magnitudes) - min(flat.magnitudes) <= 1e-12
    falling = run_sweep(SweepPlan(Family.VIRASORO_C, [1, 2, 5, 10, 50], probes, fixed={"k": 2, "h": 0.8}))
    assert all(b < a for a, b in zip(falling.magnitudes, falling.magnitudes[1:]))


def test_virasoro_h_sweep_decreasing():
    rep = run_sweep(SweepPlan(Family.VIRASORO_H, [0.5, 1, 2, 4], (0, 0.3), fixed={"k": 3, "c": 2.0}))
    assert all(b < a for a, b in zip(rep.magnitudes, rep.magnitudes[1:]))


def test_delta_witness_shrinks_with_j():
    grid = np.linspace(-2, 2, 201)
    masses = [delta_witness(Family.SU2_J, j, grid) for j in (2, 4, 8, 16)]
    assert all(b < a for a, b in zip(masses, masses[1:]))


def test_delta_witness_away_from_probe_vanishes():
    grid = np.linspace(0.5, 2, 61)
    masses = [delta_witness(Family.SU2_J, j, grid) for j in (4, 16, 64)]
    assert masses[-1] < 1e-6 < masses[0]


def test_delta_witness_mirror_symmetry():
    grid = np.linspace(0.0, 0.8, 41)
    a = delta_witness(Family.SU11_K, 1, grid)
    b = delta_witness(Family.SU11_K, 1, -grid[::-1])
    assert a == pytest.approx(b, rel=1e-13)


def test_half_width():
    # su2 j=1 at probe 0: |<0|s>| = 1/(1+s^2), half at s=1
    assert half_width(Family.SU2_J, 1, np.linspace(0, 3, 7)) == pytest.approx(1, abs=1e-6)
    assert math.isnan(half_width(Family.SU2_J, 1, [0.0, 0.1, 0.2]))
    report = run_sweep(SweepPlan(Family.SU2_J, [1, 2, 4], (0, 1), grid=np.linspace(0, 3, 31)))
    widths = report.half_width_series
    assert all(b < a for a, b in zip(widths, widths[1:]))


def test_plan_validation():
    with pytest.raises(ValueError):
        SweepPlan(Family.SU2_J, [], (0, 1))
    with pytest.raises(ValueError):
        SweepPlan(Family.SU2_J, [2, 1], (0, 1))
    with pytest.raises(ValueError):
        SweepPlan(Family.SU2_J, [1], (0,))
    with pytest.raises(ValueError):
        run_sweep(SweepPlan(Family.SU2_J, [1], (CoherentPoint.omega(0.1, 0), 0)))
