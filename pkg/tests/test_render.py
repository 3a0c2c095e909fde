import math
import re

import pytest

from citemetric import (
    EmptyProfileError,
    build_plot_spec,
    build_profile,
    merge_profiles,
    render_svg,
    write_points_csv,
)


def _markers_by_kind(spec):
    return {marker.kind: marker for marker in spec.markers}


def test_curve_vertices_close_at_zero():
    spec = build_plot_spec([build_profile("a", [2, 0, 0])])
    assert spec.curves[0].vertices == ((1.0, 2.0), (2.0, 0.0))


def test_markers_for_two_work_profile():
    spec = build_plot_spec([build_profile("a", [7, 1])])
    markers = _markers_by_kind(spec)
    assert markers["h"].point == (1.0, 7.0)
    assert markers["kh1"].point[0] == pytest.approx(1.3, abs=1e-12)
    assert markers["kh1"].point[1] == pytest.approx(5.2, abs=1e-12)
    assert markers["kh2"].point[1] == pytest.approx(math.sqrt(8))
    assert markers["kh3"].point[1] == pytest.approx(4.1649, abs=5e-4)
    assert set(markers) == {"h", "kh1", "kh2", "kh3"}


def test_h_marker_sits_on_the_integer_rank():
    spec = build_plot_spec([build_profile("a", [2])])
    assert _markers_by_kind(spec)["h"].point == (1.0, 2.0)


def test_kh3_marker_for_uniform_profile():
    spec = build_plot_spec([build_profile("a", [3, 3, 3])])
    assert _markers_by_kind(spec)["kh3"].point == (1.0, 3.0)


def test_kh2_marker_clamps_to_the_top_work():
    # sqrt(10) > 2, so the curve never reaches kh2
    spec = build_plot_spec([build_profile("a", [2, 2, 2, 2, 2])])
    assert _markers_by_kind(spec)["kh2"].point == (1.0, 2.0)


def test_g_marker_included_on_request():
    spec = build_plot_spec([build_profile("a", [10, 5, 2])], include_g=True)
    assert _markers_by_kind(spec)["g"].point == (2.0, 5.0)


def test_markers_lie_on_their_curve():
    profile = build_profile("a", [40, 12, 3, 3, 2, 1, 1, 1])
    spec = build_plot_spec([profile], include_g=True)
    for marker in spec.markers:
        if marker.kind == "kh2":
            continue
        assert profile.citation_at(marker.point[0]) == pytest.approx(marker.point[1], abs=1e-9)


def test_empty_profiles_are_skipped_and_all_empty_is_an_error():
    a = build_profile("a", [0, 0])
    b = build_profile("b", [4])
    spec = build_plot_spec([a, b])
    assert [curve.label for curve in spec.curves] == ["b"]
    with pytest.raises(EmptyProfileError):
        build_plot_spec([a])


def test_collectives_plot_their_pooled_profile():
    col = merge_profiles([build_profile("a", [3]), build_profile("b", [2, 1])], label="team")
    spec = build_plot_spec([col])
    assert spec.curves[0].label == "team"
    assert spec.curves[0].vertices[0] == (1.0, 3.0)


def test_svg_structure_counts():
    profile = build_profile("a", [7, 1])
    svg = render_svg(build_plot_spec([profile], guides=True))
    text = svg.decode("utf-8")
    assert text.count("<path ") == 1  # one path per curve, axes use line elements
    assert text.count('class="marker') == 4
    assert text.count('class="guide"') == 3
    assert text.startswith('<?xml version="1.0"')
    assert 'version="1.1"' in text


def test_svg_marker_shapes():
    svg = render_svg(build_plot_spec([build_profile("a", [7, 1])], include_g=True)).decode()
    assert svg.count('class="marker marker-h"') == 1
    assert svg.count('class="marker marker-g"') == 1
    assert '<rect class="marker marker-kh1"' in svg
    assert '<circle class="marker marker-kh2"' in svg
    assert '<circle class="marker marker-kh3"' in svg


def test_svg_is_deterministic():
    profiles = [build_profile("a", [9, 3, 1]), build_profile("b", [4, 4])]
    first = render_svg(build_plot_spec(profiles, guides=True))
    second = render_svg(build_plot_spec(profiles, guides=True))
    assert first == second


def test_dashed_curves():
    profiles = [build_profile("a", [5]), build_profile("b", [3])]
    svg = render_svg(build_plot_spec(profiles, dashed={"b"})).decode()
    assert svg.count("stroke-dasharray") == 1


def test_log_axis_spaces_decades_evenly():
    profile = build_profile("a", [1000, 100, 10, 1])
    svg = render_svg(build_plot_spec([profile], log_y=True)).decode()
    d = re.search(r'<path [^>]*d="([^"]+)"', svg).group(1)
    ys = [float(pair[1]) for pair in re.findall(r"[ML] ([0-9.]+) ([0-9.]+)", d)]
    gaps = [ys[i + 1] - ys[i] for i in range(3)]  # vertices at 1000, 100, 10, 1
    assert gaps[0] == pytest.approx(gaps[1], abs=0.05)
    assert gaps[1] == pytest.approx(gaps[2], abs=0.05)


def test_points_csv_lists_curves_markers_and_guides():
    profile = build_profile("a", [7, 1])
    csv_text = write_points_csv(build_plot_spec([profile], guides=True))
    lines = csv_text.splitlines()
    assert lines[0] == "label,kind,r,c"
    assert "a,curve,1,7" in lines
    assert "a,curve,3,0" in lines
    assert "a,kh1,1.3,5.2" in lines
    assert sum(1 for line in lines if ",guide," in line) == 6  # two endpoints per ray
    assert csv_text == write_points_csv(build_plot_spec([profile], guides=True))
