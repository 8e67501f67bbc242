"""Closed-form transforms between coloring families on bipartite graphs.

Every transform starts from a set-ordered gracefully total coloring f with
bipartition (X, Y), X the low side, and produces a witness of the target
family by an explicit linear formula.  Each has an exact inverse.
"""

from __future__ import annotations

from ..core import ColoredGraph, edge
from .constraints import check, get_preset, ordered_bipartition, PresetError

TARGETS = ("odd-graceful", "edge-magic", "5c", "felicitous", "odd-elegant",
           "harmonious", "kd-graceful")

_SOURCE = "set-ordered-gracefully-total"


def _require_source(cg):
    rep = check(cg, get_preset(_SOURCE))
    if not rep.ok:
        raise PresetError(f"input is not set-ordered gracefully total: "
                          f"{rep.failed}")
    xs, ys = ordered_bipartition(cg)
    return xs, ys


def target_preset(target, k=1, d=1):
    return {
        "odd-graceful": get_preset("set-ordered-odd-gracefully-total"),
        "edge-magic": get_preset("set-ordered-edge-magic-total"),
        "5c": get_preset("5c"),
        "felicitous": get_preset("set-ordered-felicitous-total"),
        "odd-elegant": get_preset("set-ordered-odd-elegant-total"),
        "harmonious": get_preset("set-ordered-harmonious-total"),
        "kd-graceful": get_preset("kd-graceful", k=k, d=d),
    }[target]


def transform_equivalent(cg: ColoredGraph, target: str, k: int = 1,
                         d: int = 1) -> ColoredGraph:
    if target not in TARGETS:
        raise PresetError(f"unknown target {target!r}")
    if target == "kd-graceful" and (k < 1 or d < 1):
        raise PresetError("kd-graceful needs k >= 1 and d >= 1")
    xs, ys = _require_source(cg)
    f_v, f_e = cg.vcolor, cg.ecolor
    q = cg.graph.q
    mx, mn = max(f_v[x] for x in xs), min(f_v[x] for x in xs)
    g_v, g_e = {}, {}

    if target == "odd-graceful":
        for x in xs:
            g_v[x] = 2 * f_v[x] - 1
        for y in ys:
            g_v[y] = 2 * f_v[y] - 2
        for e, c in f_e.items():
            g_e[e] = 2 * c - 1
    elif target == "edge-magic":
        for x in xs:
            g_v[x] = mx + mn - f_v[x]
        for y in ys:
            g_v[y] = f_v[y]
        for e, c in f_e.items():
            g_e[e] = q + 1 - c
    elif target == "5c":
        g_v = dict(f_v)
        for e, c in f_e.items():
            g_e[e] = q + 1 - c
    elif target in ("felicitous", "harmonious"):
        for x in xs:
            g_v[x] = mx + mn - f_v[x]
        for y in ys:
            g_v[y] = f_v[y]
        for u, v in cg.graph.edges:
            g_e[edge(u, v)] = (g_v[u] + g_v[v]) % q
    elif target == "odd-elegant":
        for x in xs:
            g_v[x] = 2 * (mx + mn - f_v[x]) - 1
        for y in ys:
            g_v[y] = 2 * f_v[y] - 2
        for u, v in cg.graph.edges:
            g_e[edge(u, v)] = (g_v[u] + g_v[v]) % (2 * q)
    else:  # kd-graceful
        for x in xs:
            g_v[x] = f_v[x] * d
        for y in ys:
            g_v[y] = k + f_v[y] * d
        for e, c in f_e.items():
            g_e[e] = k + c * d

    return ColoredGraph(cg.graph, g_v, g_e)


def inverse_transform(cg: ColoredGraph, target: str, k: int = 1,
                      d: int = 1) -> ColoredGraph:
    """Recover the set-ordered gracefully total source of a transform output."""
    if target not in TARGETS:
        raise PresetError(f"unknown target {target!r}")
    g_v, g_e = cg.vcolor, cg.ecolor
    q = cg.graph.q
    ob = ordered_bipartition(cg)
    if ob is None:
        raise PresetError("input is not set-ordered")
    xs, ys = ob
    f_v, f_e = {}, {}

    if target == "odd-graceful":
        for x in xs:
            f_v[x] = (g_v[x] + 1) // 2
        for y in ys:
            f_v[y] = (g_v[y] + 2) // 2
    elif target in ("edge-magic", "felicitous", "harmonious"):
        c0 = max(g_v[x] for x in xs) + min(g_v[x] for x in xs)
        for x in xs:
            f_v[x] = c0 - g_v[x]
        for y in ys:
            f_v[y] = g_v[y]
    elif target == "5c":
        f_v = dict(g_v)
    elif target == "odd-elegant":
        c0 = (max(g_v[x] for x in xs) + min(g_v[x] for x in xs) + 2) // 2
        for x in xs:
            f_v[x] = c0 - (g_v[x] + 1) // 2
        for y in ys:
            f_v[y] = (g_v[y] + 2) // 2
    else:  # kd-graceful
        for x in xs:
            f_v[x] = g_v[x] // d
        for y in ys:
            f_v[y] = (g_v[y] - k) // d

    for u, v in cg.graph.edges:
        f_e[edge(u, v)] = abs(f_v[u] - f_v[v])
    return ColoredGraph(cg.graph, f_v, f_e)
