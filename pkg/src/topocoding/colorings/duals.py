"""Dual total colorings: reflect colors through max+min of the coloring.

em and fd duals reflect every element; ed and gd duals reflect vertices
only, keeping edge colors.  All four are involutions.  The em dual turns
the constant k into 3(max+min)-k; ed and gd keep k; the fd dual constant
is (max+min)-k or (max+min)+k depending on the edge ordering of the input.
"""

from __future__ import annotations

from ..core import ColoredGraph
from .constraints import AlphaMetric, PresetError, metric_constant

_KINDS = {"em": "emt", "ed": "edt", "gd": "gdt", "fd": "fdt"}


def dual(cg: ColoredGraph, kind: str) -> ColoredGraph:
    if kind not in _KINDS:
        raise PresetError(f"unknown dual kind {kind!r}")
    if not cg.is_total():
        raise PresetError("dual needs a total coloring")
    if metric_constant(cg, AlphaMetric(_KINDS[kind])) is None:
        raise PresetError(f"input has no constant {_KINDS[kind]} value")
    if kind in ("em", "fd"):
        colors = list(cg.vcolor.values()) + list(cg.ecolor.values())
        s = max(colors) + min(colors)
        vcol = {v: s - c for v, c in cg.vcolor.items()}
        ecol = {e: s - c for e, c in cg.ecolor.items()}
    else:
        # vertex-only reflection: the pivot must be the vertex extremes,
        # otherwise applying the dual twice would not return the input
        s = max(cg.vcolor.values()) + min(cg.vcolor.values())
        vcol = {v: s - c for v, c in cg.vcolor.items()}
        ecol = dict(cg.ecolor)
    return ColoredGraph(cg.graph, vcol, ecol)
