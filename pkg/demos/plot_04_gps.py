"""
Working in latitude and longitude
=================================

Planning happens in a local metric frame anchored at a GPS point. Offsets
move along the sphere and the conversion back is exact up to rounding.
"""

from sprayplan import (
    GeoPoint,
    PlanarPoint,
    gps_to_planar,
    haversine_distance,
    offset_east,
    offset_north,
    planar_to_gps,
)

anchor = GeoPoint(45.0, 7.6)

# One kilometre north along a meridian is one kilometre by haversine.
north = offset_north(anchor, 1000.0)
print("1 km north:", north, f"haversine {haversine_distance(anchor, north):.9f} m")

# Eastward offsets shrink in longitude as latitude grows.
for lat in (0.0, 45.0, 60.0):
    p = offset_east(GeoPoint(lat, 0.0), 100.0)
    print(f"100 m east at {lat:4.1f} deg is {p.lon:.7f} deg of longitude")

# Round trip of the corners of a 500 m field.
worst = 0.0
for x in (0.0, 250.0, 500.0):
    for y in (0.0, 250.0, 500.0):
        back = gps_to_planar(planar_to_gps(PlanarPoint(x, y), anchor), anchor)
        worst = max(worst, ((back.x - x) ** 2 + (back.y - y) ** 2) ** 0.5)
print(f"worst planar round-trip error {worst * 1e3:.2e} mm")
