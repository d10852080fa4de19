import json
import math

import pytest

import terngrid


def test_frontier_and_min_area():
    assert terngrid.frontier(3) == [(5, 5), (7, 4)]
    assert terngrid.min_area(4) == (99, (9, 11))
    assert terngrid.complete_tree_size(10) == 29524


def test_draw_and_verify_round_trip():
    d = terngrid.draw("complete:3", "pareto-min")
    report = terngrid.verify(d)
    assert report["planar"] and report["onGrid"]
    assert report["area"] == 25
    g = terngrid.draw("random:1000:42")
    assert terngrid.verify(json.dumps(g))["width"] <= 1000


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        terngrid.draw("random:30:1", "c1")
    with pytest.raises(ValueError):
        terngrid.draw("bogus:1")


def test_fit_builtin_table():
    rows = terngrid.reference_area_table()
    assert len(rows) == 20
    pts = [(float(n), float(a)) for _, n, a in rows]
    a, b, c, sse = terngrid.fit_power_law(pts)
    reference = sum((3.3262 * n ** 1.047 - 181209.1337 - area) ** 2 for n, area in pts)
    assert sse <= reference
    assert math.isclose(b, 1.047, abs_tol=0.01)


def test_render():
    svg = terngrid.render_svg(json.dumps(terngrid.draw("complete:2", "c1")))
    assert svg.startswith("<?xml") and "<svg" in svg
