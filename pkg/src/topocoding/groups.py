"""Every-zero graphic groups over a colored base graph.

A group is a doubly indexed family of recolorings of one base graph:
element (s, k) shifts every vertex color by s modulo p_w and every edge
color by k modulo q_w.  Addition under a chosen zero (a, b) is plain
index arithmetic, (s, k) + (i, j) = (s+i-a, k+j-b) componentwise, and
every element can serve as the zero.  Elements stay as index pairs;
colorings are only materialized on demand.

The same arithmetic encrypts a host network: assign an element to every
vertex, derive each edge's element by addition, then expand each element
into a copy of the base graph joined along canonical vertices.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .core import (ColoredGraph, Graph, GraphError, check_homomorphism,
                   edge, is_tree)
from .colorings import INCONCLUSIVE, search

_EXHAUSTIVE_TRIPLES = 200_000  # per-axiom work cap before sampling kicks in
_SEQUENCE_VERTEX_CAP = 4000


@dataclass(frozen=True)
class GraphicGroup:
    base: ColoredGraph
    p_w: int
    q_w: int

    def __len__(self):
        return self.p_w * self.q_w

    def indices(self):
        return itertools.product(range(self.p_w), range(self.q_w))

    def in_range(self, x) -> bool:
        s, k = x
        return 0 <= s < self.p_w and 0 <= k < self.q_w

    def element(self, s, k) -> ColoredGraph:
        """Materialize the coloring of element (s, k)."""
        vcol = {v: (c + s) % self.p_w for v, c in self.base.vcolor.items()}
        ecol = {e: (c + k) % self.q_w for e, c in self.base.ecolor.items()}
        return ColoredGraph(self.base.graph, vcol, ecol)

    def flat(self, s, k) -> int:
        return s * self.q_w + k

    def unflat(self, n):
        return divmod(n % len(self), self.q_w)


def _is_odd_graceful_base(cg: ColoredGraph) -> bool:
    q = cg.graph.q
    return set(cg.ecolor.values()) == set(range(1, 2 * q, 2))


def build_group(cg: ColoredGraph, p_w=None, q_w=None) -> GraphicGroup:
    """Index the family of shifted copies of cg.

    Default moduli are |V| and |E|, except for an odd-graceful base
    (edge colors are exactly the odd numbers in [1, 2q-1]) where both
    moduli are 2|E|.
    """
    if not cg.is_total():
        raise GraphError("group base needs a total coloring")
    if p_w is None or q_w is None:
        if _is_odd_graceful_base(cg):
            d = 2 * cg.graph.q
            p_w = d if p_w is None else p_w
            q_w = d if q_w is None else q_w
        else:
            p_w = cg.graph.n if p_w is None else p_w
            q_w = cg.graph.q if q_w is None else q_w
    if p_w < 1 or q_w < 1:
        raise GraphError("moduli must be at least 1")
    return GraphicGroup(cg, p_w, q_w)


def add(group: GraphicGroup, x, y, zero=(0, 0)):
    for t in (x, y, zero):
        if not group.in_range(t):
            raise GraphError(f"element index {t} out of range")
    s, k = x
    i, j = y
    a, b = zero
    return ((s + i - a) % group.p_w, (k + j - b) % group.q_w)


def inverse(group: GraphicGroup, x, zero=(0, 0)):
    s, k = x
    a, b = zero
    return ((2 * a - s) % group.p_w, (2 * b - k) % group.q_w)


def add_elementwise(group: GraphicGroup, x, y, zero=(0, 0)) -> ColoredGraph:
    """Sum two elements color by color instead of by index arithmetic.

    [g_x(w) + g_y(w) - g_zero(w)] mod p_w on vertices, mod q_w on edges.
    Used to confirm that index addition and coloring addition agree.
    """
    gx, gy, gz = (group.element(*t) for t in (x, y, zero))
    vcol = {v: (gx.vcolor[v] + gy.vcolor[v] - gz.vcolor[v]) % group.p_w
            for v in gx.vcolor}
    ecol = {e: (gx.ecolor[e] + gy.ecolor[e] - gz.ecolor[e]) % group.q_w
            for e in gx.ecolor}
    return ColoredGraph(group.base.graph, vcol, ecol)


def vertex_subgroup(group: GraphicGroup):
    """Indices (s, 0): shifted vertex colors, fixed edge colors."""
    return [(s, 0) for s in range(group.p_w)]


def edge_subgroup(group: GraphicGroup):
    return [(0, k) for k in range(group.q_w)]


@dataclass
class AxiomReport:
    passed: bool
    exhaustive: bool
    checks: dict
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.passed


def _axiom_cases(m, exhaustive, rng, want):
    if exhaustive:
        return itertools.product(range(m), repeat=want)
    n = min(m ** want, 2000)
    return (tuple(rng.randrange(m) for _ in range(want)) for _ in range(n))


def verify_axioms(group: GraphicGroup, add_fn=None, seed=0) -> AxiomReport:
    """Check the five facts (zero, closure, inverse, associativity,
    commutativity) for every choice of zero.

    Index addition acts on the two components independently, so each
    modulus is checked on its own.  Small moduli are swept exhaustively;
    above the work cap, triples are sampled.  A replacement add_fn
    (same signature as add) can be supplied to exercise the detector.
    """
    if add_fn is None:
        add_fn = add
    rng = random.Random(seed)
    report = AxiomReport(True, True, {})

    def one(x, y, zero):
        return add_fn(group, x, y, zero)

    def pair(s, p):
        # embed a single-component case into a full index pair
        return (s % group.p_w, p % group.q_w)

    names = ("zero", "closure", "inverse", "associativity", "commutativity")
    for name in names:
        report.checks[name] = True
    exhaustive = len(group) ** 2 <= _EXHAUSTIVE_TRIPLES
    cases2 = list(_axiom_cases(len(group), exhaustive, rng, 2))
    for fz, fx in cases2:
        zero = group.unflat(fz)
        x = group.unflat(fx)
        if one(x, zero, zero) != x:
            report.checks["zero"] = False
            report.failures.append(("zero", zero, (x,)))
        inv = inverse(group, x, zero)
        if not group.in_range(inv) or one(x, inv, zero) != zero:
            report.checks["inverse"] = False
            report.failures.append(("inverse", zero, (x,)))
    exhaustive3 = len(group) ** 3 <= _EXHAUSTIVE_TRIPLES
    for fz, fx, fy in _axiom_cases(len(group), exhaustive3, rng, 3):
        zero, x, y = (group.unflat(t) for t in (fz, fx, fy))
        r = one(x, y, zero)
        if not group.in_range(r):
            report.checks["closure"] = False
            report.failures.append(("closure", zero, (x, y)))
        if one(x, y, zero) != one(y, x, zero):
            report.checks["commutativity"] = False
            report.failures.append(("commutativity", zero, (x, y)))
    exhaustive4 = len(group) ** 4 <= _EXHAUSTIVE_TRIPLES
    for fz, fx, fy, fw in _axiom_cases(len(group), exhaustive4, rng, 4):
        zero, x, y, w = (group.unflat(t) for t in (fz, fx, fy, fw))
        if one(x, one(y, w, zero), zero) != one(one(x, y, zero), w, zero):
            report.checks["associativity"] = False
            report.failures.append(("associativity", zero, (x, y, w)))
    report.exhaustive = exhaustive and exhaustive3 and exhaustive4
    report.passed = all(report.checks.values())
    return report


def infinite_window(group: GraphicGroup, s_range, k_range):
    """A finite slice of the doubly infinite shift family.

    Raw indices are kept as given; addition of window members reduces
    through the group moduli, so any window is arithmetically consistent
    with the finite group.
    """
    return [(s, k) for s in s_range for k in k_range]


def window_add(group: GraphicGroup, x, y, zero=(0, 0)):
    s, k = x
    i, j = y
    a, b = zero
    return ((s + i - a) % group.p_w, (k + j - b) % group.q_w)


@dataclass
class EncryptedNetwork:
    host: Graph
    group: GraphicGroup
    zero: tuple
    vassign: dict
    eassign: dict = field(init=False)

    def __post_init__(self):
        for v in range(self.host.n):
            if v not in self.vassign:
                raise GraphError(f"vertex {v} has no element assigned")
            if not self.group.in_range(self.vassign[v]):
                raise GraphError(f"assignment {self.vassign[v]} out of range")
        self.eassign = {
            e: add(self.group, self.vassign[e[0]], self.vassign[e[1]],
                   self.zero)
            for e in self.host.sorted_edges()}

    def expand(self) -> Graph:
        """Replace every vertex and edge of the host by a copy of the
        base graph, joining copies along their vertex 0.

        For edge uv the copy of element phi(uv) is tied to the copies of
        phi(u) and phi(v).  Copies are laid out host vertices first, then
        host edges in sorted order.
        """
        nb = self.group.base.graph.n
        offset = {}
        for i, v in enumerate(range(self.host.n)):
            offset[("v", v)] = i * nb
        for i, e in enumerate(self.host.sorted_edges()):
            offset[("e", e)] = (self.host.n + i) * nb
        edges = []
        for key, off in offset.items():
            edges.extend((off + u, off + w)
                         for u, w in self.group.base.graph.sorted_edges())
        for e in self.host.sorted_edges():
            edges.append((offset[("v", e[0])], offset[("e", e)]))
            edges.append((offset[("v", e[1])], offset[("e", e)]))
        total = (self.host.n + self.host.q) * nb
        return Graph.from_edges(total, edges)


def encrypt_network(h: Graph, group: GraphicGroup, zero,
                    vassign: dict) -> EncryptedNetwork:
    return EncryptedNetwork(h, group, tuple(zero), dict(vassign))


def _rooted_orientation(t: Graph, root=0):
    parent = {root: None}
    order = [root]
    for v in order:
        for w in sorted(t.neighbors(v)):
            if w not in parent:
                parent[w] = v
                order.append(w)
    if len(order) != t.n:
        raise GraphError("labelling needs a connected tree")
    return parent, order


@dataclass
class GroupLabelling:
    edges: dict
    vertices: dict | None = None


def tree_group_labelling(t: Graph, group: GraphicGroup, mode: str,
                         eassign=None, zero=(0, 0), budget=None):
    """Assign group elements to a tree.

    edge-distinct: adjacent edges receive distinct elements, needs at
    least max-degree many elements.  edge-full-range: edge elements get
    the flat indices 1..|T|-1, read off a set-ordered graceful labelling
    of t; returns None when the search is inconclusive.  edges-free: any
    edge assignment (a default one is generated when omitted) extends to
    the vertices so that each edge's element is the sum of its ends.
    """
    if not is_tree(t):
        raise GraphError("tree_group_labelling needs a tree")
    if mode == "edge-distinct":
        delta = max((t.degree(v) for v in range(t.n)), default=0)
        if len(group) < delta:
            raise GraphError(
                f"group of order {len(group)} is smaller than max degree "
                f"{delta}")
        parent, order = _rooted_orientation(t)
        emap = {}
        for v in order[1:]:
            banned = {emap[pe] for w in (parent[v], v)
                      for u in t.neighbors(w)
                      if (pe := edge(u, w)) in emap}
            for flat in range(len(group)):
                idx = group.unflat(flat)
                if idx not in banned:
                    emap[edge(v, parent[v])] = idx
                    break
        return GroupLabelling(edges=emap)
    if mode == "edge-full-range":
        if len(group) < t.n:
            raise GraphError("group too small for full-range edge indices")
        found = search(t, "set-ordered-graceful", budget=budget)
        if found is INCONCLUSIVE or not found:
            return None
        emap = {e: group.unflat(c) for e, c in found.ecolor.items()}
        vmap = {v: group.unflat(c % len(group))
                for v, c in found.vcolor.items()}
        return GroupLabelling(edges=emap, vertices=vmap)
    if mode == "edges-free":
        if eassign is None:
            eassign = {e: group.unflat(2 * i + 1)
                       for i, e in enumerate(t.sorted_edges())}
        parent, order = _rooted_orientation(t)
        a, b = zero
        vmap = {0: tuple(zero)}
        for v in order[1:]:
            u = parent[v]
            ek = eassign[edge(u, v)]
            s, k = vmap[u]
            # phi(uv) = phi(u) + phi(v) - zero, solved for phi(v)
            vmap[v] = ((ek[0] - s + a) % group.p_w,
                       (ek[1] - k + b) % group.q_w)
        for e in t.sorted_edges():
            if add(group, vmap[e[0]], vmap[e[1]], zero) != tuple(eassign[e]):
                raise GraphError("edge assignment does not extend")
        return GroupLabelling(edges=dict(eassign), vertices=vmap)
    raise GraphError(f"unknown labelling mode {mode!r}")


def _default_coloring(g: Graph) -> ColoredGraph:
    vcol = {v: v for v in range(g.n)}
    ecol = {e: i for i, e in enumerate(g.sorted_edges())}
    return ColoredGraph(g, vcol, ecol)


def group_sequence(h: Graph, group: GraphicGroup, t: int):
    """Iterated encryption: each step expands h over the current group,
    then the expansion becomes the base of the next group.

    Returns the t+1 graphs, starting with the base of the given group.
    Growth is multiplicative, so t is capped and oversized expansions
    raise instead of grinding on.
    """
    if t < 0 or t > 3:
        raise GraphError("sequence length t must be in [0, 3]")
    out = [group.base.graph]
    cur = group
    for _ in range(t):
        expected = (h.n + h.q) * cur.base.graph.n
        if expected > _SEQUENCE_VERTEX_CAP:
            raise GraphError(
                f"expansion would reach {expected} vertices; giving up")
        vassign = {v: cur.unflat(v) for v in range(h.n)}
        net = encrypt_network(h, cur, (0, 0), vassign)
        g = net.expand()
        out.append(g)
        cur = build_group(_default_coloring(g))
    return out


def group_homomorphism(group_g: GraphicGroup, group_h: GraphicGroup,
                       theta: dict, samples=200, seed=0) -> bool:
    """True when theta maps the bases edge-to-edge and index arithmetic
    in the first group descends to the second.

    Index pairs descend through componentwise reduction, which is an
    additive homomorphism exactly when each target modulus divides the
    source one; incompatible moduli raise.
    """
    if group_g.p_w % group_h.p_w != 0:
        raise GraphError(
            f"vertex moduli incompatible: {group_g.p_w} vs {group_h.p_w}")
    if group_g.q_w % group_h.q_w != 0:
        raise GraphError(
            f"edge moduli incompatible: {group_g.q_w} vs {group_h.q_w}")
    if not check_homomorphism(group_g.base.graph, group_h.base.graph, theta):
        return False

    def drop(x):
        return (x[0] % group_h.p_w, x[1] % group_h.q_w)

    rng = random.Random(seed)
    total = len(group_g) ** 3
    if total <= samples * 4:
        triples = itertools.product(range(len(group_g)), repeat=3)
    else:
        triples = (tuple(rng.randrange(len(group_g)) for _ in range(3))
                   for _ in range(samples))
    for fz, fx, fy in triples:
        zero, x, y = (group_g.unflat(f) for f in (fz, fx, fy))
        lhs = drop(add(group_g, x, y, zero))
        rhs = add(group_h, drop(x), drop(y), drop(zero))
        if lhs != rhs:
            return False
    return True
