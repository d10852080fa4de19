"""Python wrapper over the terngrid C++ core."""

import json

from ._core import (
    ParseError,
    UsageError,
    algorithms,
    complete_tree_size,
    fit_power_law,
    frontier,
    min_area,
    reference_area_table,
    render_svg,
)
from . import _core


def draw(tree_spec, algo="general"):
    """Drawing as a dict {"tree": ..., "pos": [[x, y], ...]}."""
    return json.loads(_core.draw_json(tree_spec, algo))


def verify(drawing):
    """Verification report for a drawing dict or JSON string."""
    text = drawing if isinstance(drawing, str) else json.dumps(drawing)
    return json.loads(_core.verify_json(text))


__all__ = [
    "ParseError",
    "UsageError",
    "algorithms",
    "complete_tree_size",
    "draw",
    "fit_power_law",
    "frontier",
    "min_area",
    "reference_area_table",
    "render_svg",
    "verify",
]
