"""Spherical-earth conversions between GPS coordinates and the local frame.

The local planar frame has its origin at a GPS anchor, +x pointing east and
+y pointing north. East/west offsets use the cosine of the starting latitude,
which is accurate to well under 0.5% at field scale.
"""

from __future__ import annotations

import math
from typing import Iterable

from .model import DiseasedRegion, GeoPoint, PlanarPoint, ValidationError

EARTH_RADIUS_M = 6_371_000.0

_DEG = 180.0 / math.pi


def haversine_distance(a: GeoPoint, b: GeoPoint, radius: float = EARTH_RADIUS_M) -> float:
    """Great-circle distance in meters."""
    # sorted operands keep the result bitwise symmetric in (a, b)
    if (a.lat, a.lon) > (b.lat, b.lon):
        a, b = b, a
    phi1, phi2 = math.radians(a.lat), math.radians(b.lat)
    dphi = phi2 - phi1
    dlam = math.radians(b.lon - a.lon)
    h = math.sin(dphi / 2) ** 2 + math.cos(phi1) * math.cos(phi2) * math.sin(dlam / 2) ** 2
    return 2 * radius * math.asin(math.sqrt(min(1.0, max(0.0, h))))


def _lon_delta(lat: float, x: float) -> float:
    c = math.cos(math.radians(lat))
    if abs(lat) >= 90.0 or c <= 0.0:
        raise ValidationError(f"east/west offsets are undefined at the pole (lat={lat})")
    return x / (EARTH_RADIUS_M * c) * _DEG


def _wrap_lon(lon: float) -> float:
    if -180.0 <= lon <= 180.0:
        return lon
    return (lon + 180.0) % 360.0 - 180.0


def offset_east(p: GeoPoint, x: float) -> GeoPoint:
    return GeoPoint(p.lat, _wrap_lon(p.lon + _lon_delta(p.lat, x)))


def offset_west(p: GeoPoint, x: float) -> GeoPoint:
    return GeoPoint(p.lat, _wrap_lon(p.lon - _lon_delta(p.lat, x)))


def offset_north(p: GeoPoint, x: float) -> GeoPoint:
    lat = p.lat + x / EARTH_RADIUS_M * _DEG
    if not -90.0 <= lat <= 90.0:
        raise ValidationError(f"offset of {x} m from lat {p.lat} crosses a pole")
    return GeoPoint(lat, p.lon)


def offset_south(p: GeoPoint, x: float) -> GeoPoint:
    lat = p.lat - x / EARTH_RADIUS_M * _DEG
    if not -90.0 <= lat <= 90.0:
        raise ValidationError(f"offset of {x} m from lat {p.lat} crosses a pole")
    return GeoPoint(lat, p.lon)


def planar_to_gps(p: PlanarPoint, anchor: GeoPoint) -> GeoPoint:
    return offset_north(offset_east(anchor, p.x), p.y)


def gps_to_planar(g: GeoPoint, anchor: GeoPoint) -> PlanarPoint:
    """Inverse of :func:`planar_to_gps` (exact up to rounding)."""
    c = math.cos(math.radians(anchor.lat))
    if c <= 0.0:
        raise ValidationError("anchor on a pole has no local east direction")
    dlon = g.lon - anchor.lon
    if dlon > 180.0:
        dlon -= 360.0
    elif dlon < -180.0:
        dlon += 360.0
    x = dlon / _DEG * EARTH_RADIUS_M * c
    y = (g.lat - anchor.lat) / _DEG * EARTH_RADIUS_M
    return PlanarPoint(x, y)


def gps_region_to_planar(
    corners: Iterable[GeoPoint], anchor: GeoPoint, region_id: str = ""
) -> DiseasedRegion:
    """Convert a lat/lon box (any number of corner points, usually 2 or 4).

    Width is measured along the southern edge and height along the western
    edge; the origin is the south-west corner expressed in the anchor frame.
    """
    pts = list(corners)
    if len(pts) < 2:
        raise ValidationError(f"region {region_id!r}: need at least two corners")
    south = min(p.lat for p in pts)
    north = max(p.lat for p in pts)
    west = min(p.lon for p in pts)
    east = max(p.lon for p in pts)
    if south == north or west == east:
        raise ValidationError(f"region {region_id!r}: degenerate GPS box")
    sw = GeoPoint(south, west)
    width = haversine_distance(sw, GeoPoint(south, east))
    height = haversine_distance(sw, GeoPoint(north, west))
    return DiseasedRegion(region_id, gps_to_planar(sw, anchor), width, height)


def gps_region_from_southwest(
    southwest: GeoPoint, width: float, height: float, anchor: GeoPoint, region_id: str = ""
) -> DiseasedRegion:
    """Region given by its south-west corner and metric dimensions."""
    return DiseasedRegion(region_id, gps_to_planar(southwest, anchor), width, height)
