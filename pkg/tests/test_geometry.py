import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from landau import Constant, FieldSpec, PhysicalParams, PlanarPath, Sinusoid, closed_area, drift_path, phases


def _path(points):
    pts = np.asarray(points, dtype=float)
    return PlanarPath(np.arange(len(pts), dtype=float), pts[:, 0], pts[:, 1])


def test_straight_line_has_no_area():
    assert closed_area(_path([(0, 0), (1, 1), (2, 2), (5, 5)])) == 0.0


def test_unit_triangle():
    assert closed_area(_path([(0, 0), (1, 0), (0, 1)])) == 0.5
    assert closed_area(_path([(0, 0), (0, 1), (1, 0)])) == -0.5


def test_single_point():
    assert closed_area(_path([(3, 4)])) == 0.0


def test_circle_area():
    theta = np.linspace(0, 2 * math.pi, 10_000, endpoint=False)
    path = PlanarPath(theta, np.cos(theta), np.sin(theta))
    assert abs(closed_area(path) - math.pi) < 1e-6


coords = st.floats(-10, 10, allow_nan=False)
polygons = st.lists(st.tuples(coords, coords), min_size=3, max_size=12)


@given(polygons, coords, coords)
@settings(max_examples=80, deadline=None)
def test_translation_invariance(pts, dx, dy):
    shifted = [(x + dx, y + dy) for x, y in pts]
    assert closed_area(_path(shifted)) == pytest.approx(closed_area(_path(pts)), abs=1e-9)


@given(polygons)
@settings(max_examples=80, deadline=None)
def test_reflection_flips_sign(pts):
    mirrored = [(x, -y) for x, y in pts]
    assert closed_area(_path(mirrored)) == pytest.approx(-closed_area(_path(pts)), abs=1e-9)


def test_phases_scale_with_flux_coupling():
    square = _path([(0, 0), (0.5, 0), (0.5, 0.5), (0, 0.5)])
    geo = phases(square, square, PhysicalParams())
    assert geo.area_u == 0.25
    assert geo.gamma == -1.0
    assert geo.beta == -0.25
    geo2 = phases(square, square, PhysicalParams(q=2.0, B=3.0, hbar=0.5, c=2.0))
    assert geo2.gamma == pytest.approx(-6.0 * 4 * 0.25)


def test_drift_of_constant_fields():
    params = PhysicalParams(B=2.0, c=3.0)
    grid = np.linspace(0.0, 2.0, 11)
    r1 = drift_path(FieldSpec([Constant(0.4)], 0.0, 2.0), params, grid)
    # E1 only: R = (c/B)(0, -E1 t)
    np.testing.assert_allclose(r1.p1, 0.0, atol=1e-15)
    np.testing.assert_allclose(r1.p2, -1.5 * 0.4 * grid, rtol=1e-13)
    r2 = drift_path(FieldSpec([Constant(0.4, target="E2")], 0.0, 2.0), params, grid)
    np.testing.assert_allclose(r2.p1, 1.5 * 0.4 * grid, rtol=1e-13)
    np.testing.assert_allclose(r2.p2, 0.0, atol=1e-15)
    assert closed_area(r1) == pytest.approx(0.0, abs=1e-14)


def test_drift_stops_after_window():
    spec = FieldSpec([Constant(1.0)], 0.0, 1.0)
    path = drift_path(spec, PhysicalParams(), [0.0, 0.5, 1.0, 3.0])
    assert path.p2.tolist() == pytest.approx([0.0, -0.5, -1.0, -1.0])


def test_drift_of_rotating_field_traces_circle():
    # E = (cos t, sin t) gives R = (1 - cos t, -sin t): a unit circle, counterclockwise
    spec = FieldSpec([Sinusoid(1.0, 1.0), Sinusoid(1.0, 1.0, -math.pi / 2, target="E2")], 0.0, 2 * math.pi)
    grid = np.linspace(0.0, 2 * math.pi, 2001)
    path = drift_path(spec, PhysicalParams(), grid)
    np.testing.assert_allclose(path.p1, 1 - np.cos(grid), atol=1e-12)
    np.testing.assert_allclose(path.p2, -np.sin(grid), atol=1e-12)
    assert closed_area(path) == pytest.approx(math.pi, rel=1e-5)


def test_area_refinement_converges_quadratically():
    spec = FieldSpec([Sinusoid(1.0, 1.0), Sinusoid(1.0, 1.0, -math.pi / 2, target="E2")], 0.0, 2 * math.pi)
    errors = []
    for n in (100, 200, 400):
        grid = np.linspace(0.0, 2 * math.pi, n + 1)
        errors.append(abs(closed_area(drift_path(spec, PhysicalParams(), grid)) - math.pi))
    assert 3.5 < errors[0] / errors[1] < 4.5
    assert 3.5 < errors[1] / errors[2] < 4.5


def test_coarse_grid_warns():
    spec = FieldSpec([Sinusoid(1.0, 1.0)], 0.0, 10.0)
    assert drift_path(spec, PhysicalParams(), np.linspace(0, 10, 5)).warnings
    assert not drift_path(spec, PhysicalParams(), np.linspace(0, 10, 400)).warnings


def test_path_csv_round_trip(tmp_path):
    path = _path([(0.1, 0.2), (1 / 3, -2 / 7)])
    out = tmp_path / "p.csv"
    path.to_csv(out, header=("t", "a", "b"))
    data = np.loadtxt(out, delimiter=",", skiprows=1)
    assert out.read_text().splitlines()[0] == "t,a,b"
    np.testing.assert_array_equal(data[:, 1], path.p1)
