"""Star families with constant-metric total colorings and their assembly.

Each family is a finite system of colored stars K_{1,n} sharing one metric
constant (edge-magic, edge-difference, felicitous-difference or
graceful-difference).  Leaf-coinciding color-matched pendant edges of these
stars produces larger graphs that keep the constant, which is how the
K_{n,n} and K_n witnesses below are built.

The case formulas occasionally produce a clash between an edge color and
the center or its own leaf.  Each family carries a list of recolor
candidates for such an edge; a candidate is accepted only if it restores
properness while keeping the metric constant, every applied recolor is
recorded in the system's ``repairs`` list, and a star that cannot be
repaired with one recolor per edge raises.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import ColoredGraph, Graph, GraphError, connected_components, edge, erdos_gallai_check
from .colorings import AlphaMetric, metric_constant, properness_violations

FAMILY_TAGS = ("GD", "SG", "ED", "BE", "EM", "EL", "EMmax", "FD", "SF",
               "FDeta")
L_FAMILY_TAGS = ("L-GD", "L-ED", "L-FD", "L-EM")

_FAMILY_KIND = {"GD": "gdt", "SG": "gdt", "ED": "edt", "BE": "edt",
                "EM": "emt", "EL": "emt", "EMmax": "emt",
                "FD": "fdt", "SF": "fdt", "FDeta": "fdt"}
_L_KIND = {"L-GD": "gdt", "L-ED": "edt", "L-FD": "fdt", "L-EM": "emt"}


@dataclass
class IceFlowerSystem:
    family: str
    n: int
    stars: list
    indices: list
    constant: int | None
    magic: int | None = None
    repairs: list = field(default_factory=list)

    def __len__(self):
        return len(self.stars)

    def star(self, k):
        """The member with index k (not list position)."""
        return self.stars[self.indices.index(k)]


def family_constant(tag: str, n: int) -> int:
    m, odd = divmod(n, 2)
    if tag in ("GD", "SG", "FD", "SF", "FDeta"):
        return 0
    if tag == "ED":
        return 4 * m + 6 if odd else 4 * m + 4
    if tag == "BE":
        return 3 * n
    if tag == "EM":
        return 6 * m + 9 if odd else 6 * m + 6
    if tag == "EL":
        return 6 * n
    if tag == "EMmax":
        return 3 * n
    raise GraphError(f"unknown family {tag!r}")


def expected_cardinality(tag: str, n: int) -> int:
    return {"GD": 2 * n + 3, "ED": 2 * n + 3, "EM": 2 * n + 3,
            "EL": 4 * n - 1, "FD": 2 * n, "SF": n, "FDeta": 2 * n,
            "SG": 2 * n, "BE": 3 * n, "EMmax": n}[tag]


# ---------------------------------------------------------------------------
# single star assembly and repair

def _star_graph(leaf_count: int) -> Graph:
    return Graph.from_edges(leaf_count + 1, [(0, j) for j in range(1, leaf_count + 1)])


def _as_colored(center, leaves, edges) -> ColoredGraph:
    n = len(leaves)
    vc = {0: center}
    ec = {}
    for j in range(1, n + 1):
        vc[j] = leaves[j - 1]
        ec[(0, j)] = edges[j - 1]
    return ColoredGraph(_star_graph(n), vc, ec)


def _edge_conflicts(center, leaves, edges, j):
    """Properness clashes involving edge j of a star (0-based)."""
    e = edges[j]
    if e == center or e == leaves[j] or e < 1 or leaves[j] < 1:
        return True
    return any(edges[i] == e for i in range(len(edges)) if i != j)


def _conflicted(center, leaves, edges):
    out = [j for j in range(len(edges)) if _edge_conflicts(center, leaves, edges, j)]
    out += [j for j in range(len(leaves))
            if leaves[j] == center and j not in out]
    return sorted(set(out))


def _metric_ok(kind, const, c, v, e):
    return AlphaMetric(kind).edge_value(c, v, e) == const


def _fallback_candidates(kind, const, center, hi):
    # deterministic scan; the forced partner color keeps the constant
    for e in range(1, hi + 1):
        if kind == "emt":
            vs = [const - center - e]
        elif kind == "edt":
            vs = [center + (const - e), center - (const - e)]
        elif kind == "gdt":
            vs = [center + e + const, center + e - const,
                  center - e + const, center - e - const]
        else:  # fdt
            vs = [e - center + const, e - center - const]
        for v in vs:
            if v >= 1 and e >= 1:
                yield e, v


def _repair_star(center, leaves, edges, kind, const, preferred, note, repairs):
    """Recolor clashing edge/leaf pairs, at most once per edge."""
    touched = set()
    for _ in range(len(edges) + 1):
        bad = _conflicted(center, leaves, edges)
        if not bad:
            return
        j = bad[0]
        if j in touched:
            raise GraphError(f"{note}: repeated clash on edge {j + 1}")
        candidates = list(preferred(j)) + list(
            _fallback_candidates(kind, const, center, max([const, center] + leaves + edges) + 2))
        for e2, v2 in candidates:
            if not _metric_ok(kind, const, center, v2, e2):
                continue
            old = (edges[j], leaves[j])
            edges[j], leaves[j] = e2, v2
            if _edge_conflicts(center, leaves, edges, j) or v2 == center:
                edges[j], leaves[j] = old
                continue
            repairs.append((note, j + 1, old, (e2, v2)))
            touched.add(j)
            break
        else:
            raise GraphError(f"{note}: no valid recolor for edge {j + 1}")
    raise GraphError(f"{note}: clashes did not settle")


def _validate_star(cg: ColoredGraph, kind: str, const: int, note: str):
    if properness_violations(cg, "total"):
        raise GraphError(f"{note}: repaired star is not properly total colored")
    if metric_constant(cg, AlphaMetric(kind)) != const:
        raise GraphError(f"{note}: metric constant mismatch")


# ---------------------------------------------------------------------------
# the case formulas

def _family_cases(tag: str, n: int):
    """Yield (index k, center, leaves, edges, preferred-recolor fn)."""
    m, odd = divmod(n, 2)
    no = lambda j: []
    if tag == "GD":
        if not odd:
            for k in range(1, 2 * m + 1):
                yield (k, k, [4 * m + 4 - j for j in range(1, n + 1)],
                       [4 * m + 4 - j - k for j in range(1, n + 1)],
                       lambda j, k=k: [(2 * m + 1 - k, 2 * m + 1)])
            for k in range(2 * m + 1, 4 * m + 4):
                yield (k, k, list(range(1, n + 1)),
                       [k - j for j in range(1, n + 1)],
                       lambda j, k=k: [(k - (2 * m + 1), 2 * m + 1)])
        else:
            for k in range(1, 2 * m + 2):
                yield (k, k, [4 * m + 5 - j for j in range(1, n + 1)],
                       [4 * m + 5 - j - k for j in range(1, n + 1)],
                       lambda j, k=k: [(2 * m + 4 - k, 2 * m + 4),
                                       (2 * m + 3 - k, 2 * m + 3)])
            for k in range(2 * m + 2, 4 * m + 6):
                yield (k, k, list(range(1, n + 1)),
                       [k - j for j in range(1, n + 1)],
                       lambda j, k=k: [(4 * m + 5 - k, 4 * m + 5)]
                       if k == 2 * m + 2
                       else [(k - (2 * m + 2), 2 * m + 2)])
    elif tag == "SG":
        for k in itertools.chain(range(1, n + 1), range(2 * n + 1, 3 * n + 1)):
            if k <= n:
                lv = [3 * n + 1 - j for j in range(1, n + 1)]
                ed = [3 * n + 1 - j - k for j in range(1, n + 1)]
            else:
                lv = list(range(1, n + 1))
                ed = [k - j for j in range(1, n + 1)]
            yield k, k, lv, ed, no
    elif tag == "ED":
        top = 4 * m + 6 if odd else 4 * m + 4
        for k in range(1, 2 * m + 2):
            yield (k, k, [top - j for j in range(1, n + 1)],
                   [k + j for j in range(1, n + 1)],
                   lambda j, k=k: [(top - 1, k + 1 if odd else k - 1)])
        for k in range(2 * m + 2, top):
            yield (k, k, list(range(1, n + 1)),
                   [top - k + j for j in range(1, n + 1)],
                   lambda j, k=k: [(top - 1, k + 1)])
    elif tag == "BE":
        for k in range(1, n + 1):
            # leaf n sits at n+1 instead of 2n on every member so that the
            # j-th leaves keep matching colors across the system
            lv = [3 * n - j for j in range(1, n)] + [n + 1]
            ed = [k + j for j in range(1, n)] + [2 * n - 1 + k]
            yield k, k, lv, ed, no
        for k in range(n + 1, 3 * n):
            yield (k, k, list(range(1, n + 1)),
                   [3 * n - k + j for j in range(1, n + 1)],
                   lambda j, k=k: [(3 * n - 1, k - 1)])
        # center 3n forces every in-range edge color onto its own leaf;
        # colors above 3n are the only way out
        yield (3 * n, 3 * n, [3 * n + j for j in range(1, n + 1)],
               [3 * n - j for j in range(1, n + 1)], no)
    elif tag == "EM":
        if not odd:
            for k in range(1, 2 * m + 2):
                yield (k, k, [4 * m + 4 - j for j in range(1, n + 1)],
                       [2 * m + 2 - k + j for j in range(1, n + 1)],
                       lambda j, k=k: [(4 * m + 3, 2 * m + 3 - k),
                                       (4 * m + 4, 2 * m + 2 - k)])
            for k in range(2 * m + 2, 4 * m + 4):
                yield (k, k, list(range(1, n + 1)),
                       [6 * m + 6 - k - j for j in range(1, n + 1)],
                       lambda j, k=k: [(1, 6 * m + 5 - k),
                                       (6 * m + 5 - k, 1)])
        else:
            for k in range(1, 2 * m + 3):
                yield (k, k, [4 * m + 6 - j for j in range(1, n + 1)],
                       [2 * m + 3 - k + j for j in range(1, n + 1)],
                       lambda j, k=k: ([(4 * m + 4, 2 * m + 5 - k),
                                        (4 * m + 3, m + 4)]
                                       if k == m + 2 else
                                       [(4 * m + 5, 2 * m + 4 - k),
                                        (4 * m + 4, 2 * m + 5 - k)]))
            for k in range(2 * m + 3, 4 * m + 6):
                yield (k, k, list(range(1, n + 1)),
                       [6 * m + 9 - k - j for j in range(1, n + 1)],
                       lambda j, k=k: [(1, 6 * m + 8 - k),
                                       (2, 6 * m + 7 - k),
                                       (3, 6 * m + 6 - k)])
    elif tag == "EL":
        for k in range(1, 2 * n + 1):
            yield (k, k, [4 * n - j for j in range(1, n + 1)],
                   [2 * n - k + j for j in range(1, n + 1)], no)
        for t in range(1, 2 * n):
            yield (2 * n + t, 4 * n - t, list(range(1, n + 1)),
                   [2 * n + t - j for j in range(1, n + 1)], no)
    elif tag == "EMmax":
        for k in range(1, n + 1):
            lv = [j for j in range(1, n + 1) if j != k]
            yield k, k, lv, [3 * n - k - v for v in lv], no
    elif tag == "FD":
        top = 4 * m + 3 if odd else 4 * m + 1
        for k in range(1, (2 * m + 2) if odd else (2 * m + 1)):
            yield (k, k, [top - j for j in range(1, n + 1)],
                   [top - j + k for j in range(1, n + 1)], no)
        for k in range((2 * m + 2) if odd else (2 * m + 1), 2 * n + 1):
            yield (k, k, list(range(1, n + 1)),
                   [k + j for j in range(1, n + 1)], no)
    elif tag == "SF":
        for k in range(1, n + 1):
            lv = [(n + 1 if s == k else s) for s in range(1, n + 1)]
            yield k, k, lv, [k + v for v in lv], no
    elif tag == "FDeta":
        for k in range(1, n + 1):
            yield (k, k, [2 * n + 1 - j for j in range(1, n + 1)],
                   [2 * n + 1 - j + k for j in range(1, n + 1)], no)
        for k in range(n + 1, 2 * n + 1):
            yield (k, k, list(range(1, n + 1)),
                   [k + j for j in range(1, n + 1)], no)
    else:
        raise GraphError(f"unknown family {tag!r}")


def build_family(tag: str, n: int) -> IceFlowerSystem:
    if tag not in FAMILY_TAGS:
        raise GraphError(f"unknown family {tag!r}")
    if n < 2:
        raise GraphError("star families need n >= 2")
    kind = _FAMILY_KIND[tag]
    const = family_constant(tag, n)
    stars, indices, repairs = [], [], []
    for k, center, leaves, edges, preferred in _family_cases(tag, n):
        note = f"{tag}(n={n}) star {k}"
        _repair_star(center, leaves, edges, kind, const, preferred, note,
                     repairs)
        cg = _as_colored(center, leaves, edges)
        _validate_star(cg, kind, const, note)
        stars.append(cg)
        indices.append(k)
    sys = IceFlowerSystem(tag, n, stars, indices, const, repairs=repairs)
    if len(sys) != expected_cardinality(tag, n):
        raise GraphError(f"{tag}(n={n}): built {len(sys)} stars, expected "
                         f"{expected_cardinality(tag, n)}")
    return sys


# ---------------------------------------------------------------------------
# exhaustive systems with a prescribed constant

def enumerate_L_family(tag: str, n: int, magic: int) -> IceFlowerSystem:
    """Every colored star K_{1,n} whose metric value is the given constant.

    Colors run over [1, 3n] (edge-magic: [1, 3n+3] for even n, [1, 3n+4]
    for odd), leaf order is normalized by ascending edge color.
    """
    if tag not in L_FAMILY_TAGS:
        raise GraphError(f"unknown family {tag!r}")
    if n > 6:
        raise GraphError("exhaustive star enumeration is capped at n = 6")
    kind = _L_KIND[tag]
    hi = 3 * n
    if tag == "L-EM":
        hi = 3 * n + 3 if n % 2 == 0 else 3 * n + 4
    metric = AlphaMetric(kind)
    stars, indices = [], []
    k = 0
    for center in range(1, hi + 1):
        options = {}
        for e in range(1, hi + 1):
            if e == center:
                continue
            vs = [v for v in range(1, hi + 1)
                  if v not in (center, e)
                  and metric.edge_value(center, v, e) == magic]
            if vs:
                options[e] = vs
        for ecols in itertools.combinations(sorted(options), n):
            for leaves in itertools.product(*(options[e] for e in ecols)):
                k += 1
                stars.append(_as_colored(center, list(leaves), list(ecols)))
                indices.append(k)
    return IceFlowerSystem(tag, n, stars, indices, magic, magic=magic)


# ---------------------------------------------------------------------------
# leaf-coinciding assembly

def feasible_steps(stars):
    """All color-matched leaf pairs between distinct stars."""
    out = []
    for (i, a), (j, b) in itertools.combinations(enumerate(stars), 2):
        na, nb = a.graph.n - 1, b.graph.n - 1
        for la in range(1, na + 1):
            for lb in range(1, nb + 1):
                if (a.vcolor[0] == b.vcolor[lb]
                        and b.vcolor[0] == a.vcolor[la]
                        and a.ecolor[(0, la)] == b.ecolor[(0, lb)]):
                    out.append((i, la, j, lb))
    return out


def assemble(stars, plan, kind=None, constant=None) -> ColoredGraph:
    """Leaf-coincide stars following the plan steps (i, leaf_i, j, leaf_j).

    Stars keep vertex 0 as the center; leaves are 1..n.  Consumed leaf
    pairs become a center-center edge carrying the shared edge color.
    """
    if isinstance(stars, IceFlowerSystem):
        kind = kind or _FAMILY_KIND.get(stars.family, _L_KIND.get(stars.family))
        constant = stars.constant if constant is None else constant
        stars = stars.stars
    used = set()
    joins = []
    for i, la, j, lb in plan:
        if i == j:
            raise GraphError("cannot coincide two leaves of one star")
        a, b = stars[i], stars[j]
        if (i, la) in used or (j, lb) in used:
            raise GraphError("leaf already consumed")
        if not (1 <= la < a.graph.n and 1 <= lb < b.graph.n):
            raise GraphError("no such leaf")
        if (a.vcolor[0] != b.vcolor[lb] or b.vcolor[0] != a.vcolor[la]
                or a.ecolor[(0, la)] != b.ecolor[(0, lb)]):
            raise GraphError(f"colors do not match for step {(i, la, j, lb)}")
        used.add((i, la))
        used.add((j, lb))
        joins.append((i, j, a.ecolor[(0, la)]))
    # number centers first, surviving leaves after
    center = {s: s for s in range(len(stars))}
    nxt = len(stars)
    vc, ec = {}, {}
    for s, st in enumerate(stars):
        vc[center[s]] = st.vcolor[0]
        for l in range(1, st.graph.n):
            if (s, l) in used:
                continue
            vc[nxt] = st.vcolor[l]
            ec[edge(center[s], nxt)] = st.ecolor[(0, l)]
            nxt += 1
    for i, j, c in joins:
        e = edge(center[i], center[j])
        if e in ec:
            raise GraphError("plan duplicates a center-center edge")
        ec[e] = c
    g = Graph(nxt, frozenset(ec))
    cg = ColoredGraph(g, vc, ec)
    if kind is not None and constant is not None:
        _validate_star(cg, kind, constant, "assembled graph")
    return cg


# ---------------------------------------------------------------------------
# K_{n,n} and K_n witnesses

_KNN_TAGS = {"SG": ("gdt", lambda n: 0),
             "BE": ("edt", lambda n: 3 * n),
             "EL": ("emt", lambda n: 6 * n),
             "FD": ("fdt", lambda n: 0),
             "FDeta": ("fdt", lambda n: 0)}


def build_Knn(tag: str, n: int) -> ColoredGraph:
    """Vertex-coincide the j-th leaves of the first n family stars."""
    if tag not in _KNN_TAGS:
        raise GraphError(f"no complete-bipartite construction for {tag!r}")
    if n < 2:
        raise GraphError("n >= 2 required")
    kind, const = _KNN_TAGS[tag]
    sysm = build_family(tag, n)
    chosen = [sysm.star(k) for k in range(1, n + 1)]
    for j in range(1, n + 1):
        colors = {st.vcolor[j] for st in chosen}
        if len(colors) != 1:
            raise GraphError(f"leaf {j} colors diverge; cannot coincide")
    # X side 0..n-1 are the centers, Y side n..2n-1 the merged leaves
    vc = {k - 1: chosen[k - 1].vcolor[0] for k in range(1, n + 1)}
    for j in range(1, n + 1):
        vc[n + j - 1] = chosen[0].vcolor[j]
    ec = {}
    for k in range(1, n + 1):
        for j in range(1, n + 1):
            ec[edge(k - 1, n + j - 1)] = chosen[k - 1].ecolor[(0, j)]
    g = Graph(2 * n, frozenset(ec))
    cg = ColoredGraph(g, vc, ec)
    _validate_star(cg, kind, const(n), f"{tag} K_{{{n},{n}}}")
    return cg


def build_Kn_edge_magic(n: int) -> ColoredGraph:
    """K_n from the n largest edge-magic stars, constant 3n."""
    if n < 3:
        raise GraphError("n >= 3 required")
    vc = {v: v + 1 for v in range(n)}
    ec = {}
    for u, v in itertools.combinations(range(n), 2):
        ec[edge(u, v)] = 3 * n - (u + 1) - (v + 1)
    cg = ColoredGraph(Graph(n, frozenset(ec)), vc, ec)
    _validate_star(cg, "emt", 3 * n, f"edge-magic K_{n}")
    return cg


# ---------------------------------------------------------------------------
# hamiltonian graphs from degree sequences

def hamiltonian_from_degree_sequence(d) -> Graph:
    """Chain stars K_{1,d_i} into a haired cycle, then coincide the
    remaining leaf pairs until the graph is leafless."""
    d = list(d)
    n = len(d)
    if n > 10:
        raise GraphError("degree sequences longer than 10 are not supported")
    if n < 3:
        raise GraphError("a cycle needs at least 3 centers")
    if any(x < 2 for x in d):
        raise GraphError("every degree must be at least 2")
    if not erdos_gallai_check(d):
        raise GraphError("not a graphic degree sequence")

    def try_order(order):
        res = [d[v] - 2 for v in order]
        cyc = {edge(i, (i + 1) % n) for i in range(n)}

        def rec(extra):
            left = [i for i in range(n) if res[i] > 0]
            if not left:
                return extra
            i = max(left, key=lambda x: res[x])
            others = [j for j in left if j != i
                      and edge(i, j) not in cyc
                      and edge(i, j) not in extra]
            if len(others) < res[i]:
                return None
            for pick in itertools.combinations(others, res[i]):
                res[i] = 0
                for j in pick:
                    res[j] -= 1
                got = rec(extra | {edge(i, j) for j in pick})
                if got is not None:
                    return got
                for j in pick:
                    res[j] += 1
                res[i] = len(pick)
            return None

        extra = rec(frozenset())
        if extra is None:
            return None
        remap = {i: order[i] for i in range(n)}
        es = [(remap[u], remap[v]) for u, v in cyc | set(extra)]
        return Graph.from_edges(n, es)

    base = sorted(range(n), key=lambda v: d[v])
    alternating = base[0::2] + base[1::2][::-1]
    tried = [list(range(n)), base, base[::-1], alternating]
    if n <= 8:
        tried += [list(p) for p in itertools.permutations(range(n))]
    seen = set()
    for order in tried:
        key = tuple(order)
        if key in seen:
            continue
        seen.add(key)
        g = try_order(order)
        if g is not None:
            return g
    raise GraphError("no leaf pairing closes this sequence into a "
                     "hamiltonian graph")


# ---------------------------------------------------------------------------
# decomposing a colored graph back into stars

def star_decompose(cg: ColoredGraph):
    """Leaf-split until only stars remain.

    Returns (stars, plan) with the stars centered at vertex 0, ready for
    assemble(stars, plan) to rebuild the input up to vertex renumbering.
    """
    from .core import leaf_split
    if not cg.is_total():
        raise GraphError("star decomposition needs a total coloring")
    pairs = []  # (pendant leaf of u-side, pendant leaf of v-side)
    while True:
        g = cg.graph
        deg = {v: g.degree(v) for v in range(g.n)}
        target = next((e for e in g.sorted_edges()
                       if deg[e[0]] >= 2 and deg[e[1]] >= 2), None)
        if target is None:
            break
        vp, up = g.n, g.n + 1
        cg = leaf_split(cg, target)
        pairs.append((target[0], vp, target[1], up))
    g = cg.graph
    comps = [sorted(c) for c in connected_components(g)]
    stars, locate = [], {}
    for ci, comp in enumerate(comps):
        if len(comp) == 1:
            raise GraphError("isolated vertex; not a star decomposition")
        deg = {v: g.degree(v) for v in comp}
        centers = [v for v in comp if deg[v] > 1]
        center = centers[0] if centers else comp[0]
        leaves = [v for v in comp if v != center]
        vc = {0: cg.vcolor[center]}
        ec = {}
        for pos, v in enumerate(leaves, start=1):
            vc[pos] = cg.vcolor[v]
            ec[(0, pos)] = cg.ecolor[edge(center, v)]
            locate[v] = (ci, pos)
        stars.append(ColoredGraph(_star_graph(len(leaves)), vc, ec))
        locate[center] = (ci, 0)
    plan = []
    for u, vp, v, up in pairs:
        (ci, lv), (cj, lu) = locate[vp], locate[up]
        plan.append((ci, lv, cj, lu))
    return stars, plan
