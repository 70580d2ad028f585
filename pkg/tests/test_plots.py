import re
import xml.etree.ElementTree as ET

import pytest
from conftest import rect

from sprayplan import MissionParams, SprayerConfig, plan_mission
from sprayplan.plots import PLOT_FILES, colormap, render_plots

NS = "{http://www.w3.org/2000/svg}"


def regions():
    return [rect("a", 20, 20, 6, 4), rect("b", 30, 22, 3, 3), rect("c", 24, 33, 2, 5), rect("d", 80, 70, 4, 4)]


def make_plan(vrs, factor=4.0):
    cfg = SprayerConfig(
        crop_height=1.0, base_flight_height_above_crop=2.0, base_spray_radius=1.0,
        intensity_factor=factor, vrs_built_in=vrs,
    )
    return plan_mission(regions(), MissionParams(), cfg)


def wp_fills(path):
    return {c.get("fill") for c in ET.parse(path).getroot().iter(f"{NS}circle") if c.get("class") == "wp"}


def test_writes_four_parseable_files(tmp_path):
    paths = render_plots(make_plan(False), out_dir=tmp_path)
    assert [p.name for p in paths] == list(PLOT_FILES)
    for p in paths:
        assert ET.parse(p).getroot().tag == f"{NS}svg"


@pytest.mark.parametrize("vrs", [True, False])
def test_unit_intensity_single_color(tmp_path, vrs):
    render_plots(make_plan(vrs, factor=1.0), out_dir=tmp_path)
    assert len(wp_fills(tmp_path / "altitude.svg")) == 1
    assert len(wp_fills(tmp_path / "flow.svg")) == 1


def test_vrs_varies_flow_only(tmp_path):
    render_plots(make_plan(True), out_dir=tmp_path)
    assert len(wp_fills(tmp_path / "altitude.svg")) == 1
    assert len(wp_fills(tmp_path / "flow.svg")) >= 2


def test_altitude_mode_varies_altitude_only(tmp_path):
    render_plots(make_plan(False), out_dir=tmp_path)
    assert len(wp_fills(tmp_path / "altitude.svg")) >= 2
    assert len(wp_fills(tmp_path / "flow.svg")) == 1


def test_hotspot_opacity_tracks_score(tmp_path):
    plan = make_plan(False)
    render_plots(plan, out_dir=tmp_path)
    nodes = [c for c in ET.parse(tmp_path / "hotspots.svg").getroot().iter(f"{NS}circle") if c.get("class") == "node"]
    opacities = [float(c.get("fill-opacity")) for c in nodes]
    assert opacities == pytest.approx(list(plan.scores.scores), abs=1e-3)


def test_tour_polyline_visits_all(tmp_path):
    render_plots(make_plan(False), out_dir=tmp_path)
    text = (tmp_path / "tour.svg").read_text()
    assert "<polyline" in text
    for rid in "abcd":
        assert f">{rid}<" in text


def test_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    render_plots(make_plan(False), out_dir=a)
    render_plots(make_plan(False), out_dir=b)
    for name in PLOT_FILES:
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_colormap_endpoints():
    assert re.fullmatch(r"#[0-9a-f]{6}", colormap(0.0))
    assert colormap(0.0) != colormap(1.0)
    assert colormap(-1) == colormap(0.0) and colormap(2) == colormap(1.0)
