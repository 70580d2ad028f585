"""
Sweeps and dosage
=================

Each region is covered by a back-and-forth sweep whose row spacing is the
spray diameter. A higher dose is delivered either by opening the valve
(variable-rate sprayers) or by flying lower so the same flow lands on a
smaller circle.
"""

from sprayplan import (
    DiseasedRegion,
    PlanarPoint,
    SprayerConfig,
    boustrophedon_path,
    plan_dosage_altitude,
    plan_dosage_vrs,
    region_sweep,
)

# The 5 m by 10 m reference case with 2 m spacing: five rows of six points.
path = boustrophedon_path(0, 0, 5, 10, 2)
for k, y in enumerate(path.rows):
    row = path.points[6 * k : 6 * k + 6]
    print(f"y={y:g}: " + " ".join(f"({p.x:g},{p.y:g})" for p in row))

# The same sweep with only the row endpoints, for autopilots that interpolate.
print("sparse:", [(p.x, p.y) for p in boustrophedon_path(0, 0, 5, 10, 2, sparse=True).points])

# A 90 degree cone at 2 m above the crop covers a 2 m radius; giving the
# radius directly avoids the rounding of tan(45 deg).
sprayer = dict(crop_height=1.0, base_flight_height_above_crop=2.0, base_spray_radius=2.0, intensity_factor=4.0)
vrs = SprayerConfig(**sprayer, vrs_built_in=True)
alt = SprayerConfig(**sprayer, vrs_built_in=False)

print("\nscore  | vrs flow  height | altitude-mode flow  height  radius  spacing")
for score in (0.0, 0.25, 0.5, 1.0):
    a, b = plan_dosage_vrs(score, vrs), plan_dosage_altitude(score, alt)
    print(f"{score:5.2f}  | {a.flow_multiplier:8.2f} {a.flight_height_above_crop:7.2f} |"
          f" {b.flow_multiplier:18.2f} {b.flight_height_above_crop:7.2f} {b.effective_spray_radius:7.2f}"
          f" {b.row_spacing:8.2f}")

# At the hotspot with I = 4 the drone flies at half height with rows half as
# far apart. Sweep waypoints carry (x, y, altitude above ground, flow).
region = DiseasedRegion("hot", PlanarPoint(0, 0), 6, 6)
for wp in region_sweep(region, plan_dosage_altitude(1.0, alt), alt, sparse=True):
    print(wp)
