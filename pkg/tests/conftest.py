import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sprayplan import DiseasedRegion, PlanarPoint, SprayerConfig  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"


def rect(rid, cx, cy, w, h):
    """Region centered at (cx, cy)."""
    return DiseasedRegion(rid, PlanarPoint(cx - w / 2, cy - h / 2), w, h)


def radial_cluster():
    """Center 2x2 region, eight 1x1 ring members at 10 m, four outliers at 100 m."""
    import math

    regions = [rect("center", 0.0, 0.0, 2.0, 2.0)]
    for k in range(8):
        a = 2 * math.pi * k / 8
        regions.append(rect(f"ring{k}", 10 * math.cos(a), 10 * math.sin(a), 1.0, 1.0))
    for k, (x, y) in enumerate([(100, 0), (0, 100), (-100, 0), (0, -100)]):
        regions.append(rect(f"out{k}", x, y, 1.0, 1.0))
    return regions


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def cone_cfg():
    return SprayerConfig(
        crop_height=1.0,
        base_flight_height_above_crop=2.0,
        spray_angle=90.0,
        intensity_factor=4.0,
        vrs_built_in=False,
    )


@pytest.fixture
def write_json(tmp_path):
    def _write(name, doc):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return path

    return _write
