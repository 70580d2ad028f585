"""Command line entry point.

Subcommands::

    sprayplan plan  --regions R --config C --out DIR [--format csv|geojson] [--plots] [--sparse]
    sprayplan score --regions R [--config C]
    sprayplan tour  --regions R [--config C]

Exit codes: 0 success, 1 invalid input, 2 I/O failure. Diagnostics go to
stderr; ``score`` and ``tour`` print JSON to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io as sio
from .hotspot import build_graph, hotspot_scores
from .mission import plan_mission
from .model import ValidationError
from .plots import render_plots
from .tsp import build_metric_instance, christofides_tour

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sprayplan", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, config_required=False):
        sp.add_argument("--regions", required=True, type=Path, help="region file (.json or planar .csv)")
        sp.add_argument("--config", required=config_required, type=Path, help="JSON config file")
        sp.add_argument("--seed", type=int, default=None, help="reserved; planning is deterministic")

    plan = sub.add_parser("plan", help="compute the full flight plan")
    common(plan, config_required=True)
    plan.add_argument("--out", required=True, type=Path, help="output directory")
    plan.add_argument("--format", choices=("csv", "geojson"), default="csv")
    plan.add_argument("--plots", action="store_true", help="also write SVG figures")
    plan.add_argument("--sparse", action="store_true", help="emit only row endpoints in sweeps")

    common(sub.add_parser("score", help="print hotspot scores as JSON"))
    common(sub.add_parser("tour", help="print the region visiting order as JSON"))
    return p


def _load(args):
    regions, region_fields = sio.load_regions(args.regions)
    sprayer, config_fields = sio.load_config(args.config)
    if getattr(args, "sparse", False):
        config_fields["sparse"] = True
    params = sio.mission_params(region_fields, config_fields)
    return regions, sprayer, params


def _cmd_plan(args) -> int:
    regions, sprayer, params = _load(args)
    if sprayer is None:
        raise ValidationError(f"{args.config}: sprayer settings are required for 'plan'")
    plan = plan_mission(regions, params, sprayer)
    args.out.mkdir(parents=True, exist_ok=True)
    sio.export_waypoints(plan, args.format, args.out / f"waypoints.{args.format}")
    sio.write_report(plan, args.out / "report.json")
    if args.plots:
        render_plots(plan, out_dir=args.out / "plots")
    print(f"wrote {plan.report.waypoint_count} waypoints to {args.out}", file=sys.stderr)
    return EXIT_OK


def _cmd_score(args) -> int:
    regions, _, params = _load(args)
    scores = hotspot_scores(build_graph(regions, params.neighbor_radius), params.message_passing_rounds)
    doc = {
        "ids": list(scores.ids),
        "scores": [float(s) for s in scores.scores],
        "primary_hotspot": scores.ids[scores.primary_hotspot],
    }
    print(json.dumps(doc))
    return EXIT_OK


def _cmd_tour(args) -> int:
    regions, _, params = _load(args)
    if not regions:
        raise ValidationError("at least one diseased region is required")
    tour = christofides_tour(build_metric_instance(params.start_point, regions))
    doc = {"order": [regions[i - 1].id for i in tour.order[1:-1]], "length": tour.length}
    print(json.dumps(doc))
    return EXIT_OK


COMMANDS = {"plan": _cmd_plan, "score": _cmd_score, "tour": _cmd_tour}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        name = exc.filename or ""
        print(f"error: I/O failure on {name}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    except (ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
