import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sprayplan import (
    EARTH_RADIUS_M,
    GeoPoint,
    PlanarPoint,
    ValidationError,
    gps_region_to_planar,
    gps_to_planar,
    haversine_distance,
    offset_east,
    offset_north,
    offset_south,
    offset_west,
    planar_to_gps,
)

# pi * r / 180, evaluated independently of the module under test
ONE_DEGREE_M = math.pi * 6_371_000 / 180

lats = st.floats(-80, 80)
lons = st.floats(-179, 179)


def test_one_degree_constant():
    assert ONE_DEGREE_M == pytest.approx(111194.9267, abs=1e-3)
    assert EARTH_RADIUS_M == 6_371_000


def test_haversine_identical_points():
    p = GeoPoint(12.0, 77.0)
    assert haversine_distance(p, p) == 0


@pytest.mark.parametrize("b", [GeoPoint(0, 1), GeoPoint(1, 0)])
def test_haversine_one_degree(b):
    assert haversine_distance(GeoPoint(0, 0), b) == pytest.approx(111194.9267, abs=1e-3)


@given(lats, lons, lats, lons)
def test_haversine_symmetric_exact(a1, o1, a2, o2):
    a, b = GeoPoint(a1, o1), GeoPoint(a2, o2)
    assert haversine_distance(a, b) == haversine_distance(b, a)
    assert haversine_distance(a, b) >= 0


def test_offsets_zero():
    p = GeoPoint(0, 0)
    for op in (offset_east, offset_west, offset_north, offset_south):
        assert op(p, 0) == p


def test_offset_closed_forms():
    p = GeoPoint(0, 0)
    assert offset_east(p, ONE_DEGREE_M).lon == pytest.approx(1.0, abs=1e-9)
    assert offset_east(p, ONE_DEGREE_M).lat == 0
    assert offset_west(p, ONE_DEGREE_M).lon == pytest.approx(-1.0, abs=1e-9)
    assert offset_north(p, ONE_DEGREE_M).lat == pytest.approx(1.0, abs=1e-9)
    assert offset_north(p, ONE_DEGREE_M).lon == 0
    assert offset_south(GeoPoint(45, 0), ONE_DEGREE_M).lat == pytest.approx(44.0, abs=1e-9)


@pytest.mark.parametrize("x", [1, 10, 50, 100])
def test_offset_east_roundtrip_distance(x):
    p = GeoPoint(60, 10)
    d = haversine_distance(p, offset_east(p, x))
    assert abs(d - x) / x < 0.005


@given(lats, lons, st.floats(0, 1000))
def test_east_west_inverse(lat, lon, x):
    p = GeoPoint(lat, lon)
    q = offset_west(offset_east(p, x), x)
    assert q.lat == p.lat
    assert q.lon == pytest.approx(p.lon, abs=1e-12)


@given(lats, lons, st.floats(0, 1000))
def test_north_south_inverse(lat, lon, x):
    p = GeoPoint(lat, lon)
    q = offset_south(offset_north(p, x), x)
    assert q.lon == p.lon
    assert q.lat == pytest.approx(p.lat, abs=1e-12)


@given(lats, lons, st.floats(1, 1000))
def test_meridional_distance_exact(lat, lon, x):
    p = GeoPoint(lat, lon)
    assert abs(haversine_distance(p, offset_north(p, x)) - x) / x <= 1e-9


def test_pole_rejections():
    with pytest.raises(ValidationError):
        offset_east(GeoPoint(90, 0), 10)
    with pytest.raises(ValidationError):
        offset_north(GeoPoint(89.9999, 0), 1000)
    with pytest.raises(ValidationError):
        offset_south(GeoPoint(-89.9999, 0), 1000)


def test_planar_to_gps_origin_is_anchor():
    anchor = GeoPoint(12.5, 77.25)
    assert planar_to_gps(PlanarPoint(0, 0), anchor) == anchor


def test_planar_to_gps_closed_form():
    g = planar_to_gps(PlanarPoint(ONE_DEGREE_M, 0), GeoPoint(0, 0))
    assert g.lon == pytest.approx(1.0, abs=1e-9)


@given(st.floats(-60, 60), lons, st.floats(-1000, 1000), st.floats(-1000, 1000))
def test_planar_roundtrip_sub_mm(lat, lon, x, y):
    anchor = GeoPoint(lat, lon)
    back = gps_to_planar(planar_to_gps(PlanarPoint(x, y), anchor), anchor)
    assert math.hypot(back.x - x, back.y - y) < 1e-3


def test_gps_region_from_offsets():
    anchor = GeoPoint(12.0, 77.0)
    ne = offset_north(offset_east(anchor, 5), 10)
    r = gps_region_to_planar([anchor, ne], anchor, "g")
    assert (r.origin.x, r.origin.y) == (0, 0)
    assert r.width == pytest.approx(5, abs=1e-3)
    assert r.height == pytest.approx(10, abs=1e-3)


def test_gps_region_four_corners():
    anchor = GeoPoint(-33.0, 151.0)
    sw = offset_north(offset_east(anchor, 20), 30)
    se = offset_east(sw, 8)
    nw = offset_north(sw, 4)
    ne = offset_north(se, 4)
    r = gps_region_to_planar([ne, nw, se, sw], anchor, "g")
    assert r.origin.x == pytest.approx(20, abs=1e-3)
    assert r.origin.y == pytest.approx(30, abs=1e-3)
    assert r.width == pytest.approx(8, abs=1e-3)
    assert r.height == pytest.approx(4, abs=1e-3)


def test_gps_region_translation_north():
    anchor = GeoPoint(45.0, 7.0)
    corners = [offset_east(anchor, 3), offset_north(anchor, 6)]
    base = gps_region_to_planar(corners, anchor)
    moved = gps_region_to_planar([offset_north(c, 100) for c in corners], anchor)
    assert moved.origin.y - base.origin.y == pytest.approx(100, abs=1e-3)
    assert moved.width == pytest.approx(base.width, rel=1e-3)
    assert moved.height == pytest.approx(base.height, rel=1e-3)


def test_gps_region_degenerate():
    a = GeoPoint(10, 10)
    with pytest.raises(ValidationError, match="flat"):
        gps_region_to_planar([a, offset_east(a, 5)], a, "flat")
