"""Boustrophedon sweeps and per-region dosage planning.

Rows are horizontal and spaced ``distance`` apart. The first row sits half a
spacing above the bottom edge when the height divides evenly, otherwise it is
shifted by half the remainder so the leftover margin is split between the top
and bottom edges. Waypoints are placed at 1 m steps along x.

Dosage is realized per region in one of two ways:

* variable rate sprayer: altitude is fixed, the flow multiplier scales;
* constant rate sprayer: flow is fixed, the drone descends so the cone
  footprint shrinks. Deposit per unit area goes as flow / radius**2, so a
  multiplier ``m`` needs ``radius / sqrt(m)`` and hence ``height / sqrt(m)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import DiseasedRegion, PlanarPoint, SprayerConfig, ValidationError

# Slack for floating point row/step counting (meters).
_EPS = 1e-9


@dataclass(frozen=True)
class SweepPath:
    points: tuple
    row_spacing: float
    rows: tuple

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class DosagePlan:
    flow_multiplier: float
    flight_height_above_crop: float
    effective_spray_radius: float
    dosage_multiplier: float

    @property
    def row_spacing(self) -> float:
        return 2 * self.effective_spray_radius


def _row_ys(y_min: float, height: float, distance: float) -> list[float]:
    if height <= distance:
        center = y_min + height / 2
        y = round(center, 1)
        # one-decimal rounding must not open a gap at either edge
        if abs(y - center) > (distance - height) / 2 + _EPS:
            y = center
        return [y]
    rem = math.fmod(height, distance)
    if abs(rem - distance) < _EPS:
        rem = 0.0
    y_start = y_min + (distance / 2 if rem < _EPS else rem / 2)
    y_end = y_min + height
    count = int(math.floor((y_end - y_start) / distance + _EPS)) + 1
    return [y_start + k * distance for k in range(count)]


def boustrophedon_path(
    x_min: float,
    y_min: float,
    width: float,
    height: float,
    distance: float,
    sparse: bool = False,
) -> SweepPath:
    """Serpentine sweep over ``[x_min, x_min + width] x [y_min, y_min + height]``.

    The first row runs rightward from ``x_min``. With ``sparse=True`` only the
    two endpoints of each row are emitted.
    """
    if width <= 0 or height <= 0 or distance <= 0:
        raise ValidationError(
            f"sweep needs positive width, height and distance, got {width}, {height}, {distance}"
        )
    steps = int(math.floor(width + _EPS))
    xs = [x_min + i for i in range(steps + 1)]
    if sparse and len(xs) > 2:
        xs = [xs[0], xs[-1]]
    rows = _row_ys(y_min, height, distance)

    points = []
    if height <= distance:
        points = [PlanarPoint(x, rows[0]) for x in xs]
    else:
        for k, y in enumerate(rows):
            # a one-point row leaves x at x_min, so the sweep keeps going right
            leftward = steps > 0 and k % 2 == 1
            points.extend(PlanarPoint(x, y) for x in (reversed(xs) if leftward else xs))
    return SweepPath(tuple(points), float(distance), tuple(rows))


def dosage_multiplier(score: float, intensity_factor: float) -> float:
    """Affine map from hotspot score to dose: 0 -> 1x, 1 -> intensity_factor."""
    if not 0.0 <= score <= 1.0:
        raise ValidationError(f"score must be in [0, 1], got {score}")
    if intensity_factor < 1.0:
        raise ValidationError(f"intensity_factor must be >= 1, got {intensity_factor}")
    return 1.0 + (intensity_factor - 1.0) * score


def plan_dosage_vrs(score: float, cfg: SprayerConfig) -> DosagePlan:
    m = dosage_multiplier(score, cfg.intensity_factor)
    return DosagePlan(
        flow_multiplier=m,
        flight_height_above_crop=cfg.base_flight_height_above_crop,
        effective_spray_radius=cfg.base_spray_radius,
        dosage_multiplier=m,
    )


def plan_dosage_altitude(score: float, cfg: SprayerConfig) -> DosagePlan:
    m = dosage_multiplier(score, cfg.intensity_factor)
    shrink = math.sqrt(m)
    return DosagePlan(
        flow_multiplier=1.0,
        flight_height_above_crop=cfg.base_flight_height_above_crop / shrink,
        effective_spray_radius=cfg.base_spray_radius / shrink,
        dosage_multiplier=m,
    )


def plan_dosage(score: float, cfg: SprayerConfig) -> DosagePlan:
    return plan_dosage_vrs(score, cfg) if cfg.vrs_built_in else plan_dosage_altitude(score, cfg)


def region_sweep(
    region: DiseasedRegion, plan: DosagePlan, cfg: SprayerConfig, sparse: bool = False
) -> list[tuple[float, float, float, float]]:
    """Sweep waypoints ``(x, y, altitude, flow)`` for one region."""
    path = boustrophedon_path(
        region.origin.x, region.origin.y, region.width, region.height, plan.row_spacing, sparse
    )
    altitude = cfg.crop_height + plan.flight_height_above_crop
    return [(p.x, p.y, altitude, plan.flow_multiplier) for p in path.points]
