"""Domain types shared across the planner.

All types are frozen dataclasses and validate themselves on construction,
raising :class:`ValidationError` with the offending field (and region id,
where one exists) in the message.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional


class ValidationError(ValueError):
    """Invalid user-supplied input (regions, configuration, coordinates)."""


def _finite(name: str, value: float, owner: str = "") -> float:
    value = float(value)
    if not math.isfinite(value):
        prefix = f"{owner}: " if owner else ""
        raise ValidationError(f"{prefix}{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class PlanarPoint:
    """Point in the local metric frame (+x east, +y north), meters."""

    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", _finite("x", self.x))
        object.__setattr__(self, "y", _finite("y", self.y))


@dataclass(frozen=True)
class GeoPoint:
    """Latitude/longitude pair in degrees."""

    lat: float
    lon: float

    def __post_init__(self):
        lat = _finite("lat", self.lat)
        lon = _finite("lon", self.lon)
        if not -90.0 <= lat <= 90.0:
            raise ValidationError(f"latitude {lat} outside [-90, 90]")
        if not -180.0 <= lon <= 180.0:
            raise ValidationError(f"longitude {lon} outside [-180, 180]")
        object.__setattr__(self, "lat", lat)
        object.__setattr__(self, "lon", lon)


@dataclass(frozen=True)
class DiseasedRegion:
    """Axis-aligned rectangle reported by the detector.

    ``origin`` is the lower-left (south-west) corner.
    """

    id: str
    origin: PlanarPoint
    width: float
    height: float

    def __post_init__(self):
        owner = f"region {self.id!r}"
        width = _finite("width", self.width, owner)
        height = _finite("height", self.height, owner)
        if width <= 0:
            raise ValidationError(f"{owner}: width must be > 0, got {width}")
        if height <= 0:
            raise ValidationError(f"{owner}: height must be > 0, got {height}")
        if not isinstance(self.origin, PlanarPoint):
            raise ValidationError(f"{owner}: origin must be a PlanarPoint")
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "height", height)

    @property
    def area(self) -> float:
        return self.width * self.height

    @property
    def center(self) -> PlanarPoint:
        return PlanarPoint(self.origin.x + self.width / 2, self.origin.y + self.height / 2)

    def contains(self, x: float, y: float, tol: float = 1e-9) -> bool:
        return (
            self.origin.x - tol <= x <= self.origin.x + self.width + tol
            and self.origin.y - tol <= y <= self.origin.y + self.height + tol
        )


def region_center(r: DiseasedRegion) -> PlanarPoint:
    return r.center


def region_area(r: DiseasedRegion) -> float:
    return r.area


# Relative tolerance for radius = height * tan(angle / 2).
SPRAY_GEOMETRY_RTOL = 1e-6


@dataclass(frozen=True)
class SprayerConfig:
    """Sprayer geometry and dosage settings.

    Supply either ``spray_angle`` (full cone angle, degrees) or
    ``base_spray_radius`` (ground radius at the base flight height); the other
    is derived from the cone relation ``radius = height * tan(angle / 2)``. If
    both are given they must agree to within ``SPRAY_GEOMETRY_RTOL``.
    """

    crop_height: float
    base_flight_height_above_crop: float
    spray_angle: Optional[float] = None
    base_spray_radius: Optional[float] = None
    intensity_factor: float = 1.0
    vrs_built_in: bool = False

    def __post_init__(self):
        crop = _finite("crop_height", self.crop_height)
        base_h = _finite("base_flight_height_above_crop", self.base_flight_height_above_crop)
        if crop <= 0:
            raise ValidationError(f"crop_height must be > 0, got {crop}")
        if base_h <= 0:
            raise ValidationError(f"base_flight_height_above_crop must be > 0, got {base_h}")
        intensity = _finite("intensity_factor", self.intensity_factor)
        if intensity < 1:
            raise ValidationError(f"intensity_factor must be >= 1, got {intensity}")
        if not isinstance(self.vrs_built_in, bool):
            raise ValidationError(f"vrs_built_in must be a boolean, got {self.vrs_built_in!r}")

        angle, radius = self.spray_angle, self.base_spray_radius
        if angle is None and radius is None:
            raise ValidationError("one of spray_angle or base_spray_radius is required")
        if angle is not None:
            angle = _finite("spray_angle", angle)
            if not 0 < angle < 180:
                raise ValidationError(f"spray_angle must be in (0, 180) degrees, got {angle}")
        if radius is not None:
            radius = _finite("base_spray_radius", radius)
            if radius <= 0:
                raise ValidationError(f"base_spray_radius must be > 0, got {radius}")

        if radius is None:
            radius = base_h * math.tan(math.radians(angle) / 2)
        elif angle is None:
            angle = math.degrees(2 * math.atan(radius / base_h))
        else:
            expected = base_h * math.tan(math.radians(angle) / 2)
            if abs(radius - expected) / radius > SPRAY_GEOMETRY_RTOL:
                raise ValidationError(
                    f"base_spray_radius {radius} inconsistent with spray_angle {angle} "
                    f"at height {base_h} (expected {expected})"
                )

        for name, value in (
            ("crop_height", crop),
            ("base_flight_height_above_crop", base_h),
            ("spray_angle", angle),
            ("base_spray_radius", radius),
            ("intensity_factor", intensity),
        ):
            object.__setattr__(self, name, value)

    @property
    def base_altitude(self) -> float:
        return self.crop_height + self.base_flight_height_above_crop

    @property
    def half_angle_tan(self) -> float:
        return math.tan(math.radians(self.spray_angle) / 2)


COORDINATE_MODES = ("planar", "gps")


@dataclass(frozen=True)
class MissionParams:
    """Mission-level settings.

    ``transit_height_above_crop`` defaults to the sprayer's base flight height
    when left as ``None``.
    """

    start_point: PlanarPoint = field(default_factory=lambda: PlanarPoint(0.0, 0.0))
    neighbor_radius: float = 25.0
    coordinate_mode: str = "planar"
    gps_anchor: Optional[GeoPoint] = None
    message_passing_rounds: int = 2
    transit_height_above_crop: Optional[float] = None
    sparse: bool = False

    def __post_init__(self):
        sp = self.start_point
        if not isinstance(sp, PlanarPoint):
            if isinstance(sp, (tuple, list)) and len(sp) == 2:
                object.__setattr__(self, "start_point", PlanarPoint(float(sp[0]), float(sp[1])))
            else:
                raise ValidationError(f"start_point must be a PlanarPoint or (x, y), got {sp!r}")
        radius = _finite("neighbor_radius", self.neighbor_radius)
        if radius <= 0:
            raise ValidationError(f"neighbor_radius must be > 0, got {radius}")
        object.__setattr__(self, "neighbor_radius", radius)
        if self.coordinate_mode not in COORDINATE_MODES:
            raise ValidationError(
                f"coordinate_mode must be one of {COORDINATE_MODES}, got {self.coordinate_mode!r}"
            )
        if (self.coordinate_mode == "gps") != (self.gps_anchor is not None):
            raise ValidationError("gps_anchor must be given exactly when coordinate_mode is 'gps'")
        if isinstance(self.message_passing_rounds, bool) or not isinstance(
            self.message_passing_rounds, int
        ):
            raise ValidationError("message_passing_rounds must be an integer")
        if self.message_passing_rounds < 0:
            raise ValidationError("message_passing_rounds must be >= 0")
        if self.transit_height_above_crop is not None:
            th = _finite("transit_height_above_crop", self.transit_height_above_crop)
            if th <= 0:
                raise ValidationError(f"transit_height_above_crop must be > 0, got {th}")
            object.__setattr__(self, "transit_height_above_crop", th)
