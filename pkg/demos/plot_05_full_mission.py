"""
A complete mission
==================

Score, order, sweep, and export: the whole pipeline on the field fixture,
once per sprayer type. Output goes to ``demo_output/`` in the working
directory.
"""

import sys
from pathlib import Path

from sprayplan import MissionParams, SprayerConfig, plan_mission
from sprayplan.plots import render_plots
from sprayplan import io as sio

here = Path(__file__).resolve().parent
regions, _ = sio.load_regions(here.parent / "tests" / "fixtures" / "field_regions.json")
out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")

for vrs in (True, False):
    cfg = SprayerConfig(crop_height=1.0, base_flight_height_above_crop=2.0, spray_angle=90.0,
                        intensity_factor=3.0, vrs_built_in=vrs)
    plan = plan_mission(regions, MissionParams(start_point=(0.0, 0.0)), cfg)
    name = "vrs" if vrs else "altitude"
    target = out / name
    target.mkdir(parents=True, exist_ok=True)
    sio.export_waypoints(plan, "csv", target / "waypoints.csv")
    sio.write_report(plan, target / "report.json")
    render_plots(plan, out_dir=target / "plots")

    rep = plan.report
    print(f"[{name}] hotspot {rep.primary_hotspot}, order {' -> '.join(rep.tour_order)}")
    print(f"  tour {rep.tour_length:.1f} m, flown {rep.total_path_length:.1f} m, {rep.waypoint_count} waypoints")
    for r in rep.regions:
        print(f"  {r.id}: score {r.score:.2f} dose x{r.dosage_multiplier:.2f} "
              f"flow {r.flow_multiplier:.2f} altitude {r.altitude:.2f} m spacing {r.row_spacing:.2f} m")
    print(f"  wrote {target}")
