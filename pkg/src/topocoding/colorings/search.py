"""Exhaustive backtracking searches for colorings and labellings.

Deterministic: vertices are assigned in index order, colors tried in
ascending order, and every edge is colored as soon as both endpoints are.
A search returns a witness, None (space exhausted) or INCONCLUSIVE when
the node budget runs out.
"""

from __future__ import annotations

from ..core import ColoredGraph, Graph, bipartition, edge
from .constraints import (AlphaMetric, ConstraintSet, Preset, PresetError,
                          check, get_preset, metric_constant)

SEARCH_CAP = 14     # default bound on |V|+|E|


class Inconclusive:
    __slots__ = ()

    def __repr__(self):
        return "INCONCLUSIVE"

    def __bool__(self):
        return False


INCONCLUSIVE = Inconclusive()


class _BudgetHit(Exception):
    pass


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise _BudgetHit


def _twin_floors(g: Graph):
    """u < v interchangeable (twins): impose f(u) <= f(v) to cut symmetry."""
    adj = g.adjacency()
    out = {v: [] for v in range(g.n)}
    for v in range(g.n):
        for u in range(v):
            if adj[u] - {v} == adj[v] - {u}:
                out[v].append(u)
    return out


def _assignment_order(g: Graph):
    adj = g.adjacency()
    order = []
    for v in range(g.n):
        order.append(("v", v))
        for u in sorted(adj[v]):
            if u < v:
                order.append(("e", (u, v)))
    return order


def default_max_m(preset: Preset, g: Graph) -> int:
    names = {n for n, _ in preset.constraints.flags}
    if preset.name in ("6c", "6c-odd-even"):
        return g.n + g.q
    if "edge-set-kd" in names:
        k, d = preset.constraints.param("edge-set-kd")
        return k + (g.q + 1) * d
    if "vertex-range-odd-min1" in names:
        return 2 * g.q + 1
    if preset.metric is not None or any(n.startswith("magic-") for n in names):
        return g.n + g.q
    return g.q + 1


# ---------------------------------------------------------------------------
# search plans

class _Plan:
    """Pruning rules distilled from a preset for the backtracker."""

    def __init__(self, preset, g, max_m):
        self.preset = preset
        self.g = g
        self.max_m = max_m
        flags = dict(preset.constraints.flags)
        self.properness = preset.constraints.properness
        self.global_distinct = False
        self.want_repeat = "vertex-repeat" in flags
        self.set_ordered = "set-ordered" in flags
        self.vdom = list(range(1, max_m + 1))
        self.edom_lo, self.edom_hi = 1, max_m
        self.edge_target = None
        self.rule = None
        self.metric = None
        self.pinned_k = None

        name = preset.name
        if name in ("5c",):
            flags = {"magic-edt": None, "edge-set-1q": None}
            self.set_ordered = True
        elif name in ("6c", "6c-odd-even"):
            flags = {"magic-edt": None}
            self.set_ordered = True
            self.global_distinct = True
            self.vdom = list(range(1, g.n + g.q + 1))
            self.edom_hi = g.n + g.q
            if name == "6c-odd-even":
                self.vdom = [c for c in self.vdom if c % 2]
        elif name.endswith("weak-gracefully-total"):
            flags = {"rule-difference": None, "edge-set-1q": None}
            self.set_ordered = name.startswith("set-ordered")
            self.vdom = list(range(1, g.q + 2))

        if name.startswith("splitting"):
            hi = g.q if "edge-set-1q" in flags else 2 * g.q - 1
            self.vdom = list(range(0, hi + 1))

        q = g.q
        targets = {
            "edge-set-1q": set(range(1, q + 1)),
            "edge-set-0q1": set(range(0, q)),
            "edge-set-odd": set(range(1, 2 * q, 2)),
            "edge-set-even": set(range(2, 2 * q + 1, 2)),
        }
        for fname, target in targets.items():
            if fname in flags:
                self.edge_target = target
        if "edge-set-interval" in flags:
            c = flags["edge-set-interval"]
            self.edge_target = set(range(c, c + q))
        if "edge-set-kd" in flags:
            k, d = flags["edge-set-kd"]
            self.edge_target = {k + i * d for i in range(1, q + 1)}

        rules = {
            "rule-difference": lambda a, b: abs(a - b),
            "rule-sum": lambda a, b: a + b,
            "rule-sum-odd-bump": lambda a, b: a + b + (a + b) % 2,
            "rule-sum-mod-q": lambda a, b: (a + b) % q if q else 0,
            "rule-sum-mod-2q": lambda a, b: (a + b) % (2 * q) if q else 0,
        }
        for fname, fn in rules.items():
            if fname in flags:
                self.rule = fn

        for fname, param in flags.items():
            if fname.startswith("magic-"):
                self.metric = AlphaMetric(fname.split("-")[1])
                self.pinned_k = param
        if preset.metric is not None:
            self.metric = preset.metric

        self.xs = None
        if self.metric is not None and self.metric.abc != (1, 1, 1):
            bp = bipartition(g)
            if bp is None:
                raise PresetError("parameterized metric needs a bipartite graph")
            self.xs = bp[0]

    def k_values(self):
        if self.metric is None:
            return [None]
        if self.pinned_k is not None:
            return [self.pinned_k]
        M = self.max_m
        if self.metric.abc != (1, 1, 1):
            return range(0, sum(self.metric.abc) * M + 1)
        return {"emt": range(3, 3 * M + 1),
                "edt": range(1, 2 * M),
                "fdt": range(0, 2 * M),
                "gdt": range(0, 2 * M)}[self.metric.kind]

    def edge_candidates(self, u, v, fu, fv, k):
        if self.rule is not None:
            return [self.rule(fu, fv)]
        if self.metric is not None:
            a, b, c = self.metric.abc
            if self.xs is not None and u not in self.xs:
                fu, fv = fv, fu
            kind = self.metric.kind
            if kind == "emt":
                nums = [k - a * fu - b * fv]
            elif kind == "edt":
                nums = [k - abs(a * fu - b * fv)]
            elif kind == "fdt":
                nums = [a * fu + b * fv - k, a * fu + b * fv + k]
            else:
                nums = [abs(a * fu - b * fv) - k, abs(a * fu - b * fv) + k]
            return sorted({n // c for n in nums if n % c == 0})
        return range(self.edom_lo, self.edom_hi + 1)


# ---------------------------------------------------------------------------
# backtracking over total colorings

def _run_coloring(g, preset, max_m, b):
    plan = _Plan(preset, g, max_m)
    if plan.set_ordered:
        bp = bipartition(g)
        if bp is None or not bp[0] or not bp[1]:
            return None
        orientations = [(bp[0], bp[1]), (bp[1], bp[0])]
    else:
        orientations = [None]
    order = _assignment_order(g)
    floors = _twin_floors(g)
    adj = g.adjacency()

    for k in plan.k_values():
        for orient in orientations:
            res = _dfs(g, preset, plan, order, floors, adj, orient, k, b)
            if res is not None:
                return res
    return None


def _dfs(g, preset, plan, order, floors, adj, orient, k, b):
    vcol, ecol = {}, {}
    inc = {v: set() for v in range(g.n)}          # incident edge colors
    used_edge = set()
    used_all = set()
    low, high = orient if orient else (None, None)
    last_vertex = g.n - 1

    def vertex_cands(v):
        floor = max((vcol[u] for u in floors[v] if u in vcol), default=None)
        lo_bound = max((vcol[u] for u in low if u in vcol), default=None) \
            if high is not None and v in high else None
        hi_bound = min((vcol[u] for u in high if u in vcol), default=None) \
            if low is not None and v in low else None
        for c in plan.vdom:
            if floor is not None and c < floor:
                continue
            if lo_bound is not None and c <= lo_bound:
                continue
            if hi_bound is not None and c >= hi_bound:
                continue
            if plan.properness in ("ve", "total") and any(
                    vcol.get(u) == c for u in adj[v]):
                continue
            if plan.global_distinct and c in used_all:
                continue
            if (plan.want_repeat and v == last_vertex
                    and len(set(vcol.values())) == len(vcol)
                    and c not in vcol.values()):
                continue
            yield c

    def edge_cands(u, v):
        for c in plan.edge_candidates(u, v, vcol[u], vcol[v], k):
            if plan.edge_target is not None:
                if c not in plan.edge_target or c in used_edge:
                    continue
            elif not plan.edom_lo <= c <= plan.edom_hi:
                continue
            if plan.properness in ("ve", "total") and (
                    c in inc[u] or c in inc[v]):
                continue
            if plan.properness == "total" and c in (vcol[u], vcol[v]):
                continue
            if plan.global_distinct and c in used_all:
                continue
            yield c

    def rec(i):
        if i == len(order):
            cg = ColoredGraph(g, dict(vcol), dict(ecol))
            rep = check(cg, preset)
            return cg if rep.ok else None
        kind, item = order[i]
        if kind == "v":
            for c in vertex_cands(item):
                b.tick()
                vcol[item] = c
                used_all.add(c) if plan.global_distinct else None
                out = rec(i + 1)
                if out is not None:
                    return out
                del vcol[item]
                used_all.discard(c) if plan.global_distinct else None
            return None
        u, v = item
        for c in edge_cands(u, v):
            b.tick()
            ecol[edge(u, v)] = c
            inc[u].add(c)
            inc[v].add(c)
            used_edge.add(c)
            if plan.global_distinct:
                used_all.add(c)
            out = rec(i + 1)
            if out is not None:
                return out
            del ecol[edge(u, v)]
            inc[u].discard(c)
            inc[v].discard(c)
            used_edge.discard(c)
            if plan.global_distinct:
                used_all.discard(c)
        return None

    return rec(0)


# ---------------------------------------------------------------------------
# backtracking over vertex labellings with induced |difference| edges

def _run_labelling(g, preset, max_m, b):
    flags = dict(preset.constraints.flags)
    q = g.q
    if "vertex-range-0-2q1" in flags:
        hi = 2 * q - 1
        target = set(range(1, 2 * q, 2))
    else:
        hi = q
        target = set(range(1, q + 1))
    if max_m is not None:
        hi = min(hi, max_m)
    dom = list(range(0, hi + 1))
    set_ordered = "set-ordered" in flags
    if set_ordered:
        bp = bipartition(g)
        if bp is None or not bp[0] or not bp[1]:
            return None
        orientations = [(bp[0], bp[1]), (bp[1], bp[0])]
    else:
        orientations = [None]
    adj = g.adjacency()
    floors = _twin_floors(g)

    def attempt(orient):
        low, high = orient if orient else (None, None)
        vcol = {}
        used_edge = set()

        def rec(v):
            if v == g.n:
                ecol = {e: abs(vcol[e[0]] - vcol[e[1]]) for e in g.edges}
                cg = ColoredGraph(g, dict(vcol), ecol)
                return cg if check(cg, preset).ok else None
            floor = max((vcol[u] for u in floors[v]), default=None)
            for c in dom:
                if c in vcol.values():
                    continue
                if floor is not None and c < floor:
                    continue
                if low is not None:
                    if v in high and any(vcol.get(u, -1) >= c for u in low):
                        continue
                    if v in low and any(c >= vcol[u] for u in high
                                        if u in vcol):
                        continue
                diffs = []
                ok = True
                for u in adj[v]:
                    if u in vcol:
                        d = abs(vcol[u] - c)
                        if d not in target or d in used_edge or d in diffs:
                            ok = False
                            break
                        diffs.append(d)
                if not ok:
                    continue
                b.tick()
                vcol[v] = c
                used_edge.update(diffs)
                out = rec(v + 1)
                if out is not None:
                    return out
                del vcol[v]
                used_edge.difference_update(diffs)
            return None

        return rec(0)

    for orient in orientations:
        res = attempt(orient)
        if res is not None:
            return res
    return None


# ---------------------------------------------------------------------------
# public entry points

def search(g: Graph, preset, max_m=None, budget=None, cap=SEARCH_CAP,
           **preset_params):
    """Find a coloring of g satisfying the preset, with colors <= max_m."""
    if isinstance(preset, str):
        preset = get_preset(preset, **preset_params)
    if cap is not None and g.n + g.q > cap:
        raise PresetError(
            f"graph has {g.n + g.q} elements, beyond the search cap {cap}")
    b = _Budget(budget)
    try:
        if preset.constraints.domain == "labelling":
            return _run_labelling(g, preset, max_m, b)
        if max_m is None:
            max_m = default_max_m(preset, g)
        return _run_coloring(g, preset, max_m, b)
    except _BudgetHit:
        return INCONCLUSIVE


def chi_min(g: Graph, metric, budget=None, max_m=None, k=None):
    """Least max color of a fully proper total coloring with constant metric.

    k=None allows any shared constant; passing k pins it (k=0 gives the
    zero-deficiency variant realized by the star-system constructions).
    """
    if isinstance(metric, str):
        metric = AlphaMetric(metric)
    if not g.edges:
        raise PresetError("metric chromatic number needs at least one edge")
    if metric.abc == (1, 1, 1):
        preset = get_preset(metric.kind) if k is None \
            else get_preset(metric.kind, k=k)
    else:
        if k is not None:
            raise PresetError("pinned constant only supported for (1,1,1)")
        def chk(cg):
            return [] if metric_constant(cg, metric) is not None else ["magic"]
        preset = Preset(f"{metric.kind}{metric.abc}",
                        ConstraintSet((), "total"), metric, chk)
    lo = max(2, max(g.degree(v) for v in range(g.n)) + 1)
    hi = max_m if max_m is not None else 3 * (g.n + g.q)
    b = _Budget(budget)
    for M in range(lo, hi + 1):
        try:
            res = _run_coloring(g, preset, M, b)
        except _BudgetHit:
            return INCONCLUSIVE
        if res is not None:
            return M
    return INCONCLUSIVE


def chi_min_witness(g: Graph, metric, budget=None, max_m=None, k=None):
    """(chi, witness coloring) pair; INCONCLUSIVE on budget exhaustion."""
    m = chi_min(g, metric, budget=budget, max_m=max_m, k=k)
    if m is INCONCLUSIVE:
        return INCONCLUSIVE
    metric = AlphaMetric(metric) if isinstance(metric, str) else metric
    if metric.abc == (1, 1, 1):
        preset = get_preset(metric.kind) if k is None \
            else get_preset(metric.kind, k=k)
    else:
        def chk(cg):
            return [] if metric_constant(cg, metric) is not None else ["magic"]
        preset = Preset(f"{metric.kind}{metric.abc}",
                        ConstraintSet((), "total"), metric, chk)
    wit = _run_coloring(g, preset, m, _Budget(None))
    return m, wit
