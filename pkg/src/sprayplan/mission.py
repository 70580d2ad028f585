"""End-to-end flight plan assembly.

The flight path is::

    start -> [climb/descend over entry] sweep(region_1) [over exit] -> ... -> start

Transit waypoints fly at the transit altitude with flow 0; sweep waypoints
carry the region's altitude and flow multiplier. Because entry and exit
transit points sit directly above the first and last sweep waypoints, every
horizontal leg outside a sweep is flown with the sprayer off.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import geo
from .coverage import plan_dosage, region_sweep
from .hotspot import HotspotScores, build_graph, hotspot_scores
from .model import (
    DiseasedRegion,
    GeoPoint,
    MissionParams,
    PlanarPoint,
    SprayerConfig,
    ValidationError,
)
from .tsp import TourPlan, build_metric_instance, christofides_tour

Waypoint = tuple  # (x, y, altitude, flow)


@dataclass(frozen=True)
class FlightPath:
    waypoints: tuple
    per_region_spans: dict
    total_ground_length: float

    def __len__(self):
        return len(self.waypoints)


@dataclass(frozen=True)
class RegionReport:
    id: str
    visit_rank: int
    score: float
    dosage_multiplier: float
    flow_multiplier: float
    flight_height_above_crop: float
    altitude: float
    spray_radius: float
    row_spacing: float
    span: tuple


@dataclass(frozen=True)
class MissionReport:
    regions: tuple
    primary_hotspot: str
    tour_order: tuple
    tour_length: float
    total_path_length: float
    waypoint_count: int
    vrs_built_in: bool
    intensity_factor: float

    def to_dict(self) -> dict:
        return {
            "primary_hotspot": self.primary_hotspot,
            "tour_order": list(self.tour_order),
            "tour_length": self.tour_length,
            "total_path_length": self.total_path_length,
            "waypoint_count": self.waypoint_count,
            "vrs_built_in": self.vrs_built_in,
            "intensity_factor": self.intensity_factor,
            "regions": [
                {
                    "id": r.id,
                    "visit_rank": r.visit_rank,
                    "score": r.score,
                    "dosage_multiplier": r.dosage_multiplier,
                    "flow_multiplier": r.flow_multiplier,
                    "flight_height_above_crop": r.flight_height_above_crop,
                    "altitude": r.altitude,
                    "spray_radius": r.spray_radius,
                    "row_spacing": r.row_spacing,
                    "span": list(r.span),
                }
                for r in self.regions
            ],
        }


@dataclass(frozen=True)
class MissionPlan:
    path: FlightPath
    report: MissionReport
    scores: HotspotScores
    tour: TourPlan
    regions: tuple
    params: MissionParams
    sprayer: SprayerConfig

    def __iter__(self):
        # allows ``path, report = plan_mission(...)``
        return iter((self.path, self.report))


def ground_length(waypoints: Sequence[Waypoint]) -> float:
    return math.fsum(
        math.hypot(b[0] - a[0], b[1] - a[1]) for a, b in zip(waypoints, waypoints[1:])
    )


def plan_mission(
    regions: Sequence[DiseasedRegion], params: MissionParams, cfg: SprayerConfig
) -> MissionPlan:
    regions = tuple(regions)
    if not regions:
        raise ValidationError("at least one diseased region is required")
    seen = set()
    for r in regions:
        if r.id in seen:
            raise ValidationError(f"duplicate region id {r.id!r}")
        seen.add(r.id)

    graph = build_graph(regions, params.neighbor_radius)
    scores = hotspot_scores(graph, params.message_passing_rounds)
    tour = christofides_tour(build_metric_instance(params.start_point, regions))

    transit_h = params.transit_height_above_crop
    if transit_h is None:
        transit_h = cfg.base_flight_height_above_crop
    transit_alt = cfg.crop_height + transit_h
    sx, sy = params.start_point.x, params.start_point.y

    waypoints = [(sx, sy, transit_alt, 0.0)]
    spans = {}
    reports = []
    for rank, node in enumerate(tour.order[1:-1]):
        idx = node - 1
        region = regions[idx]
        score = float(scores.scores[idx])
        dosage = plan_dosage(score, cfg)
        sweep = region_sweep(region, dosage, cfg, sparse=params.sparse)
        first, last = sweep[0], sweep[-1]
        waypoints.append((first[0], first[1], transit_alt, 0.0))
        lo = len(waypoints)
        waypoints.extend(sweep)
        hi = len(waypoints) - 1
        waypoints.append((last[0], last[1], transit_alt, 0.0))
        spans[region.id] = (lo, hi)
        reports.append(
            RegionReport(
                id=region.id,
                visit_rank=rank,
                score=score,
                dosage_multiplier=dosage.dosage_multiplier,
                flow_multiplier=dosage.flow_multiplier,
                flight_height_above_crop=dosage.flight_height_above_crop,
                altitude=first[2],
                spray_radius=dosage.effective_spray_radius,
                row_spacing=dosage.row_spacing,
                span=(lo, hi),
            )
        )
    waypoints.append((sx, sy, transit_alt, 0.0))

    total = ground_length(waypoints)
    path = FlightPath(tuple(waypoints), spans, total)
    report = MissionReport(
        regions=tuple(reports),
        primary_hotspot=regions[scores.primary_hotspot].id,
        tour_order=tuple(regions[i - 1].id for i in tour.order[1:-1]),
        tour_length=tour.length,
        total_path_length=total,
        waypoint_count=len(waypoints),
        vrs_built_in=cfg.vrs_built_in,
        intensity_factor=cfg.intensity_factor,
    )
    return MissionPlan(path, report, scores, tour, regions, params, cfg)


def flight_path_to_gps(fp: FlightPath, anchor: GeoPoint) -> list[tuple[float, float, float, float]]:
    out = []
    for x, y, alt, flow in fp.waypoints:
        g = geo.planar_to_gps(PlanarPoint(x, y), anchor)
        out.append((g.lat, g.lon, alt, flow))
    return out
