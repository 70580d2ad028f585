"""Region/config ingestion and waypoint/report serialization.

Region files are JSON (``version: 1``) or, for planar coordinates only, CSV
with the header ``id,x_min,y_min,width,height``. See ``docs/formats.md`` for
the full schema. Every file written here goes through :func:`atomic_write`
and is byte-for-byte deterministic for identical inputs.
"""

from __future__ import annotations

import csv
import json
import math
import os
import tempfile
from pathlib import Path
from typing import Any, Sequence

from . import geo
from .model import (
    DiseasedRegion,
    GeoPoint,
    MissionParams,
    PlanarPoint,
    SprayerConfig,
    ValidationError,
)

REGION_FILE_VERSION = 1

SPRAYER_FIELDS = (
    "crop_height",
    "base_flight_height_above_crop",
    "spray_angle",
    "base_spray_radius",
    "intensity_factor",
    "vrs_built_in",
)
MISSION_FIELDS = (
    "start_point",
    "neighbor_radius",
    "message_passing_rounds",
    "transit_height_above_crop",
    "sparse",
)

CSV_REGION_HEADER = ["id", "x_min", "y_min", "width", "height"]


def fmt(value: float) -> str:
    """Shortest round-trip decimal representation, locale independent."""
    value = float(value)
    if value == 0.0:
        return "0.0"
    return repr(value)


def atomic_write(path, data: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _read_json(path: Path) -> Any:
    text = path.read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _number(entry: dict, key: str, where: str) -> float:
    if key not in entry:
        raise ValidationError(f"{where}: missing field {key!r}")
    value = entry[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{where}: field {key!r} must be a number, got {value!r}")
    return float(value)


def _geopoint(value: Any, where: str) -> GeoPoint:
    if isinstance(value, dict):
        return GeoPoint(_number(value, "lat", where), _number(value, "lon", where))
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return GeoPoint(float(value[0]), float(value[1]))
    raise ValidationError(f"{where}: expected {{lat, lon}} or [lat, lon], got {value!r}")


def _region_from_entry(entry: Any, index: int, mode: str, anchor) -> DiseasedRegion:
    if not isinstance(entry, dict):
        raise ValidationError(f"regions[{index}]: expected an object, got {entry!r}")
    rid = str(entry.get("id", index))
    where = f"region {rid!r} (regions[{index}])"
    try:
        if mode == "planar":
            return DiseasedRegion(
                rid,
                PlanarPoint(_number(entry, "x_min", where), _number(entry, "y_min", where)),
                _number(entry, "width", where),
                _number(entry, "height", where),
            )
        if "corners" in entry:
            corners = entry["corners"]
            if not isinstance(corners, list):
                raise ValidationError(f"{where}: 'corners' must be a list")
            pts = [_geopoint(c, f"{where} corner {k}") for k, c in enumerate(corners)]
            return geo.gps_region_to_planar(pts, anchor, rid)
        if "southwest" in entry:
            return geo.gps_region_from_southwest(
                _geopoint(entry["southwest"], where),
                _number(entry, "width", where),
                _number(entry, "height", where),
                anchor,
                rid,
            )
        raise ValidationError(f"{where}: gps regions need 'corners' or 'southwest'")
    except ValidationError as exc:
        msg = str(exc)
        if repr(rid) not in msg:
            msg = f"{where}: {msg}"
        raise ValidationError(msg) from None


def load_regions(path) -> tuple[list[DiseasedRegion], dict]:
    """Load regions in file order; returns ``(regions, mission_fields)``.

    ``mission_fields`` holds ``coordinate_mode`` and ``gps_anchor``.
    """
    path = Path(path)
    if path.suffix.lower() == ".csv":
        return _load_regions_csv(path), {"coordinate_mode": "planar", "gps_anchor": None}

    doc = _read_json(path)
    if not isinstance(doc, dict):
        raise ValidationError(f"{path}: top level must be an object")
    version = doc.get("version")
    if version != REGION_FILE_VERSION:
        raise ValidationError(f"{path}: unsupported version {version!r} (expected {REGION_FILE_VERSION})")
    mode = doc.get("coordinate_mode", "planar")
    if mode not in ("planar", "gps"):
        raise ValidationError(f"{path}: coordinate_mode must be 'planar' or 'gps', got {mode!r}")
    anchor = None
    if mode == "gps":
        if "gps_anchor" not in doc:
            raise ValidationError(f"{path}: gps mode requires 'gps_anchor'")
        anchor = _geopoint(doc["gps_anchor"], f"{path}: gps_anchor")
    elif doc.get("gps_anchor") is not None:
        raise ValidationError(f"{path}: gps_anchor is only allowed in gps mode")
    entries = doc.get("regions")
    if not isinstance(entries, list):
        raise ValidationError(f"{path}: 'regions' must be a list")
    regions = [_region_from_entry(e, i, mode, anchor) for i, e in enumerate(entries)]
    _check_unique(regions, path)
    return regions, {"coordinate_mode": mode, "gps_anchor": anchor}


def _load_regions_csv(path: Path) -> list[DiseasedRegion]:
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != CSV_REGION_HEADER:
            raise ValidationError(f"{path}: line 1: header must be {','.join(CSV_REGION_HEADER)}")
        regions = []
        for row in reader:
            line = reader.line_num
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(CSV_REGION_HEADER):
                raise ValidationError(f"{path}: line {line}: expected 5 fields, got {len(row)}")
            rid = row[0].strip()
            values = []
            for name, cell in zip(CSV_REGION_HEADER[1:], row[1:]):
                try:
                    values.append(float(cell))
                except ValueError:
                    raise ValidationError(
                        f"{path}: line {line}: region {rid!r} field {name!r} is not a number: {cell!r}"
                    ) from None
            regions.append(DiseasedRegion(rid, PlanarPoint(values[0], values[1]), values[2], values[3]))
    _check_unique(regions, path)
    return regions


def _check_unique(regions: Sequence[DiseasedRegion], path) -> None:
    seen = set()
    for r in regions:
        if r.id in seen:
            raise ValidationError(f"{path}: duplicate region id {r.id!r}")
        seen.add(r.id)


def dump_regions(regions: Sequence[DiseasedRegion]) -> str:
    """Planar version-1 region file text for ``regions``."""
    doc = {
        "version": REGION_FILE_VERSION,
        "coordinate_mode": "planar",
        "regions": [
            {"id": r.id, "x_min": r.origin.x, "y_min": r.origin.y, "width": r.width, "height": r.height}
            for r in regions
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_config(path=None) -> tuple[SprayerConfig | None, dict]:
    """Read a JSON config file; returns ``(sprayer or None, mission_fields)``.

    The sprayer is ``None`` when no sprayer geometry is present, which is
    enough for scoring and touring.
    """
    doc = {} if path is None else _read_json(Path(path))
    if not isinstance(doc, dict):
        raise ValidationError(f"{path}: top level must be an object")
    unknown = sorted(set(doc) - set(SPRAYER_FIELDS) - set(MISSION_FIELDS))
    if unknown:
        raise ValidationError(f"{path}: unknown config field(s): {', '.join(unknown)}")

    mission = {}
    for key in MISSION_FIELDS:
        if key in doc and doc[key] is not None:
            mission[key] = doc[key]
    if "start_point" in mission:
        sp = mission["start_point"]
        if isinstance(sp, dict):
            mission["start_point"] = PlanarPoint(_number(sp, "x", "start_point"), _number(sp, "y", "start_point"))
        elif isinstance(sp, list) and len(sp) == 2:
            mission["start_point"] = PlanarPoint(float(sp[0]), float(sp[1]))
        else:
            raise ValidationError(f"{path}: start_point must be [x, y] or {{x, y}}")

    sprayer_keys = {k: doc[k] for k in SPRAYER_FIELDS if k in doc and doc[k] is not None}
    geometry = {"crop_height", "base_flight_height_above_crop", "spray_angle", "base_spray_radius"}
    if not geometry & set(sprayer_keys):
        return None, mission
    try:
        sprayer = SprayerConfig(**sprayer_keys)
    except TypeError as exc:
        raise ValidationError(f"{path}: {exc}") from None
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from None
    return sprayer, mission


def mission_params(region_fields: dict, config_fields: dict) -> MissionParams:
    return MissionParams(**region_fields, **config_fields)


def waypoints_csv(waypoints: Sequence[Sequence[float]], header: Sequence[str] = ("x", "y", "altitude", "flow")) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(fmt(v) for v in wp) for wp in waypoints)
    return "\n".join(lines) + "\n"


def parse_waypoints_csv(text: str) -> tuple[list[str], list[tuple[float, ...]]]:
    rows = text.splitlines()
    header = rows[0].split(",")
    return header, [tuple(float(c) for c in row.split(",")) for row in rows[1:] if row]


def waypoints_geojson(gps_waypoints: Sequence[Sequence[float]]) -> str:
    feature = {
        "type": "Feature",
        "geometry": {
            "type": "LineString",
            "coordinates": [[lon, lat, alt] for lat, lon, alt, _ in gps_waypoints],
        },
        "properties": {
            "altitude": [wp[2] for wp in gps_waypoints],
            "flow": [wp[3] for wp in gps_waypoints],
        },
    }
    doc = {"type": "FeatureCollection", "features": [feature]}
    return json.dumps(doc, indent=1) + "\n"


def export_waypoints(plan, fmt_name: str, path, anchor: GeoPoint | None = None) -> None:
    """Write the flight path of ``plan`` (a MissionPlan or FlightPath).

    CSV uses ``lat,lon,altitude,flow`` columns when an anchor is available,
    ``x,y,altitude,flow`` otherwise. GeoJSON requires an anchor.
    """
    from .mission import flight_path_to_gps

    fp = getattr(plan, "path", plan)
    if anchor is None:
        params = getattr(plan, "params", None)
        anchor = getattr(params, "gps_anchor", None)
    if fmt_name == "csv":
        if anchor is None:
            text = waypoints_csv(fp.waypoints)
        else:
            text = waypoints_csv(flight_path_to_gps(fp, anchor), ("lat", "lon", "altitude", "flow"))
    elif fmt_name == "geojson":
        if anchor is None:
            raise ValidationError("geojson export requires gps coordinates (a gps_anchor)")
        text = waypoints_geojson(flight_path_to_gps(fp, anchor))
    else:
        raise ValidationError(f"unknown waypoint format {fmt_name!r} (use csv or geojson)")
    atomic_write(path, text)


def report_json(plan) -> str:
    doc = plan.report.to_dict()
    doc["scores"] = {rid: float(s) for rid, s in zip(plan.scores.ids, plan.scores.scores)}
    doc["coordinate_mode"] = plan.params.coordinate_mode
    _check_finite(doc)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _check_finite(obj) -> None:
    if isinstance(obj, float) and not math.isfinite(obj):
        raise ValueError(f"non-finite value {obj!r} in report")
    if isinstance(obj, dict):
        for v in obj.values():
            _check_finite(v)
    elif isinstance(obj, list):
        for v in obj:
            _check_finite(v)


def write_report(plan, path) -> None:
    atomic_write(path, report_json(plan))
