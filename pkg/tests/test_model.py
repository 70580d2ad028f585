import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sprayplan import (
    DiseasedRegion,
    GeoPoint,
    MissionParams,
    PlanarPoint,
    SprayerConfig,
    ValidationError,
    region_area,
    region_center,
)


@pytest.mark.parametrize(
    "origin, w, h, expected",
    [((0, 0), 4, 2, (2, 1)), ((10, 10), 0.5, 0.5, (10.25, 10.25)), ((-3, 5), 6, 2, (0, 6))],
)
def test_region_center(origin, w, h, expected):
    c = region_center(DiseasedRegion("r", PlanarPoint(*origin), w, h))
    assert (c.x, c.y) == expected


@pytest.mark.parametrize("w, h, area", [(5, 10, 50), (1, 1, 1), (2.5, 4, 10)])
def test_region_area(w, h, area):
    assert region_area(DiseasedRegion("r", PlanarPoint(0, 0), w, h)) == area


@given(
    st.floats(1e-3, 1e3), st.floats(1e-3, 1e3), st.floats(-1e4, 1e4), st.floats(-1e4, 1e4)
)
def test_area_positive(w, h, x, y):
    assert region_area(DiseasedRegion("r", PlanarPoint(x, y), w, h)) > 0


@pytest.mark.parametrize("w, h", [(0, 1), (1, 0), (-1, 2), (float("nan"), 1)])
def test_degenerate_region_names_id(w, h):
    with pytest.raises(ValidationError, match="bad-box"):
        DiseasedRegion("bad-box", PlanarPoint(0, 0), w, h)


def test_planar_point_rejects_inf():
    with pytest.raises(ValidationError):
        PlanarPoint(float("inf"), 0)


@pytest.mark.parametrize("lat, lon", [(91, 0), (-90.5, 0), (0, 180.1), (0, -181)])
def test_geopoint_bounds(lat, lon):
    with pytest.raises(ValidationError):
        GeoPoint(lat, lon)


def test_sprayer_derives_radius_from_angle():
    cfg = SprayerConfig(crop_height=1, base_flight_height_above_crop=3, spray_angle=60)
    assert cfg.base_spray_radius == pytest.approx(3 * math.tan(math.radians(30)), rel=1e-12)


def test_sprayer_derives_angle_from_radius():
    cfg = SprayerConfig(crop_height=1, base_flight_height_above_crop=2, base_spray_radius=2)
    assert cfg.spray_angle == pytest.approx(90.0, rel=1e-12)


@given(st.floats(0.2, 20), st.floats(5, 170))
def test_sprayer_geometry_consistent(height, angle):
    cfg = SprayerConfig(crop_height=0.5, base_flight_height_above_crop=height, spray_angle=angle)
    expected = height * math.tan(math.radians(angle) / 2)
    assert abs(cfg.base_spray_radius - expected) / cfg.base_spray_radius <= 1e-6


def test_sprayer_rejects_inconsistent_pair():
    with pytest.raises(ValidationError, match="inconsistent"):
        SprayerConfig(crop_height=1, base_flight_height_above_crop=2, spray_angle=90, base_spray_radius=2.1)


def test_sprayer_accepts_consistent_pair():
    SprayerConfig(crop_height=1, base_flight_height_above_crop=2, spray_angle=90, base_spray_radius=2.0)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(crop_height=1, base_flight_height_above_crop=2),
        dict(crop_height=0, base_flight_height_above_crop=2, spray_angle=90),
        dict(crop_height=1, base_flight_height_above_crop=-1, spray_angle=90),
        dict(crop_height=1, base_flight_height_above_crop=2, spray_angle=90, intensity_factor=0.5),
        dict(crop_height=1, base_flight_height_above_crop=2, spray_angle=180),
    ],
)
def test_sprayer_validation(kwargs):
    with pytest.raises(ValidationError):
        SprayerConfig(**kwargs)


def test_mission_params_defaults():
    p = MissionParams()
    assert p.neighbor_radius == 25.0
    assert p.message_passing_rounds == 2
    assert p.start_point == PlanarPoint(0, 0)


def test_gps_anchor_iff_gps_mode():
    with pytest.raises(ValidationError):
        MissionParams(coordinate_mode="gps")
    with pytest.raises(ValidationError):
        MissionParams(gps_anchor=GeoPoint(0, 0))
    MissionParams(coordinate_mode="gps", gps_anchor=GeoPoint(10, 20))


def test_types_are_immutable():
    r = DiseasedRegion("r", PlanarPoint(0, 0), 1, 1)
    with pytest.raises(AttributeError):
        r.width = 3


def test_start_point_accepts_pair():
    assert MissionParams(start_point=(3, 4)).start_point == PlanarPoint(3.0, 4.0)
    with pytest.raises(ValidationError, match="start_point"):
        MissionParams(start_point=(1, 2, 3))
