"""Hotspot-aware flight planning for variable rate drone spraying."""

from .coverage import (
    DosagePlan,
    SweepPath,
    boustrophedon_path,
    dosage_multiplier,
    plan_dosage,
    plan_dosage_altitude,
    plan_dosage_vrs,
    region_sweep,
)
from .geo import (
    EARTH_RADIUS_M,
    gps_region_to_planar,
    gps_to_planar,
    haversine_distance,
    offset_east,
    offset_north,
    offset_south,
    offset_west,
    planar_to_gps,
)
from .hotspot import DiseaseGraph, HotspotScores, build_graph, hotspot_scores, message_passing_step
from .mission import FlightPath, MissionPlan, MissionReport, flight_path_to_gps, plan_mission
from .model import (
    DiseasedRegion,
    GeoPoint,
    MissionParams,
    PlanarPoint,
    SprayerConfig,
    ValidationError,
    region_area,
    region_center,
)
from .tsp import (
    MetricInstance,
    TourPlan,
    brute_force_tour,
    build_metric_instance,
    christofides_tour,
    eulerian_circuit,
    min_weight_perfect_matching,
    minimum_spanning_tree,
    odd_degree_vertices,
)

__version__ = "0.1.0"
