"""Release acceptance suite.

One test per criterion; run with -v to get a pass/fail line for each.
Two tests are strict expected failures: they pin down published closed
forms that the exhaustive solvers refute, and they will start failing
loudly if the computed values ever drift.
"""

import itertools

import networkx as nx
import pytest

import oracles
from topocoding.core import (ColoredGraph, Graph, GraphError,
                             VertexSplitSpec, bipartition,
                             colored_canonical_form, complete_bipartite,
                             complete_graph, cycle_graph, graph_to_tree,
                             is_connected, is_tree, path_graph, star_graph,
                             symmetrize, vertex_coincide, vertex_split)
from topocoding.colorings import (INCONCLUSIVE, TARGETS, AlphaMetric, check,
                                  chi_min, get_preset, grace_number,
                                  inverse_transform, metric_constant, search,
                                  search_flawed, target_preset,
                                  transform_equivalent)
from topocoding.groups import add, build_group, inverse, verify_axioms
from topocoding.iceflower import (FAMILY_TAGS, build_family, build_Knn,
                                  expected_cardinality,
                                  hamiltonian_from_degree_sequence)
from topocoding.topcode import (decompose_number_string, from_graph,
                                matching_graphs, ntbp, reciprocal, tbpaw)


def _convert(G):
    nodes = sorted(G.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(idx[u], idx[v]) for u, v in
                                         G.edges()])


def _atlas(max_n):
    return [_convert(G) for G in nx.graph_atlas_g()[1:]
            if G.number_of_nodes() <= max_n]


def _numbered(g):
    return ColoredGraph(g, {v: v + 1 for v in range(g.n)},
                        {e: i + 1 for i, e in enumerate(g.sorted_edges())})


# ---------------------------------------------------------------------------
# 1. felicitous-difference chromatic values of small paths and cycles

CLAIMED_FDT_TABLE = [
    (path_graph(2), 3), (path_graph(3), 4), (path_graph(4), 5),
    (path_graph(5), 5), (path_graph(6), 5),
    (cycle_graph(4), 6), (cycle_graph(5), 6), (cycle_graph(6), 5),
    (cycle_graph(7), 6), (cycle_graph(8), 6), (cycle_graph(9), 5),
]


@pytest.mark.xfail(strict=True, reason=(
    "the claimed values for the 4-cycle and the 8-cycle are 6; both the "
    "solver and the independent brute-force oracle find colorings with "
    "maximum color 5, so the claim overstates those two entries"))
def test_criterion_01_fdt_table_paths_and_cycles():
    for g, claimed in CLAIMED_FDT_TABLE:
        got = chi_min(g, "fdt")
        assert got == oracles.chi_fdt(g.n, list(g.edges))
        assert got == claimed, (g.n, g.q, got, claimed)


# ---------------------------------------------------------------------------
# 2. felicitous-difference values of complete bipartite graphs vs 2m+n

def test_criterion_02_fdt_complete_bipartite_formula():
    flags = set()
    for m, n in ((1, 2), (2, 2), (2, 3), (3, 3)):
        g = complete_bipartite(m, n)
        got = chi_min(g, "fdt")
        assert got == oracles.chi_fdt(g.n, list(g.edges))
        if got != 2 * m + n:
            flags.add((m, n))
    # the claimed closed form 2m+n holds only for (1,2); the exhaustive
    # value is smaller on the other three
    assert flags == {(2, 2), (2, 3), (3, 3)}


# ---------------------------------------------------------------------------
# 3. felicitous-difference values of complete graphs vs 2n-1

def test_criterion_03_fdt_complete_graph_formula():
    flags = set()
    for n in (3, 4):
        g = complete_graph(n)
        got = chi_min(g, "fdt")
        assert got == oracles.chi_fdt(g.n, list(g.edges))
        if got != 2 * n - 1:
            flags.add(n)
    # 2n-1 holds for the triangle; K_4 needs only 6 colors, not 7
    assert flags == {4}


# ---------------------------------------------------------------------------
# 4. grace numbers by exhaustive two-colorings

def test_criterion_04_grace_numbers():
    # quantifier used: every-edge criticality on both color classes
    assert grace_number(4, 4, quant="every-edge") == 6
    assert grace_number(5, 5, quant="every-edge") == 7


# ---------------------------------------------------------------------------
# 5. star family validity for n in [2,8]

def _expected_constant(tag, n):
    m, odd = divmod(n, 2)
    if tag == "ED":
        return 4 * m + 6 if odd else 4 * m + 4
    if tag == "EM":
        return 6 * m + 9 if odd else 6 * m + 6
    if tag == "EL":
        return 6 * n
    if tag in ("BE", "EMmax"):
        return 3 * n
    return 0  # GD, SG, FD, SF, FDeta


_METRIC_KIND = {"GD": "gdt", "SG": "gdt", "ED": "edt", "BE": "edt",
                "EM": "emt", "EL": "emt", "EMmax": "emt",
                "FD": "fdt", "SF": "fdt", "FDeta": "fdt"}


def test_criterion_05_star_families():
    assert expected_cardinality("ED", 6) == 15
    for tag in FAMILY_TAGS:
        for n in range(2, 9):
            sysm = build_family(tag, n)
            assert len(sysm) == expected_cardinality(tag, n)
            const = _expected_constant(tag, n)
            metric = AlphaMetric(_METRIC_KIND[tag])
            for st in sysm.stars:
                assert metric_constant(st, metric) == const
                ecs = list(st.ecolor.values())
                assert len(set(ecs)) == len(ecs)
                for (u, v), c in st.ecolor.items():
                    assert c != st.vcolor[u] and c != st.vcolor[v]
                    assert st.vcolor[u] != st.vcolor[v]


# ---------------------------------------------------------------------------
# 6. complete bipartite witnesses for n in [2,6]

def test_criterion_06_knn_witness_bounds():
    for n in range(2, 7):
        assert build_Knn("FD", n).max_color() == 3 * n
        assert build_Knn("EL", n).max_color() <= 4 * n - 1
        assert build_Knn("SG", n).max_color() <= 3 * n


@pytest.mark.xfail(strict=True, reason=(
    "a difference-constant of 3n rules the color 3n out entirely: an "
    "edge colored 3n would need equal endpoint colors, and a vertex "
    "colored 3n would force some edge to repeat its other endpoint's "
    "color; the builder's maximum of 3n-1 is optimal, so 'exactly 3n' "
    "is unattainable"))
def test_criterion_06_knn_edge_difference_max():
    for n in range(2, 7):
        cg = build_Knn("BE", n)
        assert metric_constant(cg, AlphaMetric("edt")) == 3 * n
        assert cg.max_color() == 3 * n


# ---------------------------------------------------------------------------
# 7. equivalence transforms on all small trees

def test_criterion_07_tree_transform_roundtrips():
    found = 0
    for n in range(2, 10):
        for T in nx.nonisomorphic_trees(n):
            g = _convert(T)
            src = search(g, "set-ordered-gracefully-total", cap=None)
            if src is None or src is INCONCLUSIVE:
                continue
            found += 1
            for target in TARGETS:
                out = transform_equivalent(src, target)
                assert check(out, target_preset(target)).ok, (n, target)
                back = inverse_transform(out, target)
                assert back.vcolor == src.vcolor
                assert back.ecolor == src.ecolor
    assert found >= 70


# ---------------------------------------------------------------------------
# 8. group facts, exhaustively for every zero

def test_criterion_08_group_facts():
    bases = [path_graph(5), cycle_graph(9), path_graph(10), star_graph(8),
             complete_graph(4)]
    for g in bases:
        grp = build_group(_numbered(g))
        p, q = grp.p_w, grp.q_w
        assert p * q <= 100
        elems = list(itertools.product(range(p), range(q)))
        # the operation is componentwise shifted addition; pin that down
        # for every zero, then the scalar sweeps below carry the facts
        for zero in elems:
            zs, zk = zero
            for x in elems:
                xs, xk = x
                for ys, yk in elems:
                    assert add(grp, x, (ys, yk), zero) == \
                        ((xs + ys - zs) % p, (xk + yk - zk) % q)
                assert add(grp, x, zero, zero) == x          # zero
                assert add(grp, x, inverse(grp, x, zero), zero) == zero
        for m in (p, q):
            for z, x, y in itertools.product(range(m), repeat=3):
                s = (x + y - z) % m
                assert 0 <= s < m                            # closure
                assert s == (y + x - z) % m                  # commutativity
                for w in range(m):                           # associativity
                    assert (s + w - z) % m == (x + (y + w - z) % m - z) % m
        assert verify_axioms(grp).passed


# ---------------------------------------------------------------------------
# 9. matrix encode/decode round trips

def test_criterion_09_matrix_roundtrips():
    pool = [g for g in _atlas(7)
            if 1 <= g.q <= 7 and all(g.degree(v) >= 1 for v in range(g.n))]
    assert len(pool) >= 100
    for g in pool[:100]:
        cg = _numbered(g)
        key = colored_canonical_form(cg)
        t = from_graph(cg)
        assert any(colored_canonical_form(m) == key
                   for m in matching_graphs(t) if m.graph.n == g.n)

    t = from_graph(_numbered(path_graph(5)))
    for even in (2, 4, 6):
        assert tbpaw(t, even).tokens == tbpaw(reciprocal(t), even - 1).tokens
    assert ntbp(1) == 12
    assert ntbp(2) == 5760

    cases = set()
    for g in (path_graph(2), path_graph(3), path_graph(4), star_graph(3),
              cycle_graph(3)):
        routes = (1, 2, 3, 4, 5, 6) if g.q >= 3 else (1, 2, 3, 4)
        for lab in oracles.graceful_labellings(g.n, list(g.edges)):
            cg = ColoredGraph(g, dict(lab),
                              {e: abs(lab[e[0]] - lab[e[1]])
                               for e in g.edges})
            for route in routes:
                cases.add((tbpaw(from_graph(cg), route).digits, g.q,
                           "graceful", route))
    for g in (path_graph(3), path_graph(4)):
        src = search(g, "odd-graceful")
        for route in (1, 2):
            cases.add((tbpaw(from_graph(src), route).digits, g.q,
                       "odd-graceful", route))
    assert len(cases) >= 50
    for s, q, preset, route in sorted(cases):
        got = decompose_number_string(s, q, preset, route=route)
        assert got is not INCONCLUSIVE and got, (s, q, preset, route)
        assert any(tbpaw(t, route).digits == s for t, _ in got)


# ---------------------------------------------------------------------------
# 10. every small disconnected forest takes a flawed graceful labelling

def test_criterion_10_forest_flawed_labellings():
    forests = [_convert(G) for G in nx.graph_atlas_g()[1:]
               if G.number_of_nodes() <= 7 and nx.is_forest(G)
               and nx.number_connected_components(G) >= 2]
    assert len(forests) >= 50
    for g in forests:
        got = search_flawed(g)
        assert got is not None and got is not INCONCLUSIVE, \
            f"counterexample forest: n={g.n} edges={sorted(g.edges)}"
        extra, coloring = got
        joined = Graph(g.n, g.edges | extra)
        assert check(coloring, get_preset("graceful")).ok
        assert coloring.graph == joined


# ---------------------------------------------------------------------------
# 11. mirror join of small connected bipartite graphs

def test_criterion_11_mirror_join():
    found = 0
    for g in _atlas(6):
        if g.n < 2 or g.q < 1 or not is_connected(g):
            continue
        if bipartition(g) is None:
            continue
        src = search(g, "gracefully-total", cap=None)
        if src is None or src is INCONCLUSIVE:
            continue
        found += 1
        out = symmetrize(src)
        assert check(out, get_preset("set-ordered-gracefully-total")).ok
        assert sorted(out.ecolor.values()) == list(range(1, 2 * g.q + 2))
    assert found >= 15


# ---------------------------------------------------------------------------
# 12. structural identities

def test_criterion_12_structural_identities():
    graphs = _atlas(6)

    for g in graphs:
        for x in range(g.n):
            nbrs = sorted(g.neighbors(x))
            if len(nbrs) < 2:
                continue
            for r in range(1, len(nbrs)):
                for part_a in itertools.combinations(nbrs, r):
                    spec = VertexSplitSpec(x, frozenset(part_a),
                                           frozenset(set(nbrs) - set(part_a)))
                    assert vertex_coincide(vertex_split(g, spec),
                                           x, g.n) == g

    for g in graphs:
        if g.q == 0 or not is_connected(g):
            continue
        tv = graph_to_tree(g, "vertex-split")
        tl = graph_to_tree(g, "leaf-split")
        assert is_tree(tv) and tv.n == g.q + 1
        # the leaf route gives 2q-p+2 vertices (one more than the
        # published count, which drops the +1 from its own derivation)
        assert is_tree(tl) and tl.n == 2 * g.q - g.n + 2

    for n in range(3, 8):
        for seq in itertools.combinations_with_replacement(range(2, n), n):
            d = sorted(seq, reverse=True)
            want = oracles.hamiltonian_realizable(d)
            try:
                g = hamiltonian_from_degree_sequence(d)
            except GraphError:
                g = None
            assert (g is not None) == want, d
            if g is not None:
                assert sorted(g.degree(v) for v in range(g.n)) == sorted(d)
                assert _has_hamilton_cycle(g)


def _has_hamilton_cycle(g):
    for perm in itertools.permutations(range(1, g.n)):
        tour = (0,) + perm
        if all(g.has_edge(tour[i], tour[(i + 1) % g.n])
               for i in range(g.n)):
            return True
    return False
