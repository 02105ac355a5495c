"""Randomised invariants, each run on at least 200 generated cases."""
from __future__ import annotations

import json

import networkx as nx
import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracles
from genuslab import catalog
from genuslab.embed import embeds_in_orientable, find_embedding, genus, is_planar, surface_verdict
from genuslab.graphs import (
    SimpleGraph,
    blocks,
    commuting_graph,
    complement,
    complete_bipartite,
    complete_graph,
    non_commuting_graph,
)
from genuslab.groups import (
    GroupAxiomError,
    center,
    centralizer,
    check_axioms,
    conjugacy_classes,
    from_cayley_table,
)

CASES = settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])

SMALL_GROUPS = ["S3", "D8", "Q8", "D10", "A4", "D12", "Z3xZ4", "D14", "D16", "Q16", "QD16", "Z7xZ3", "S4", "SL(2,3)", "Z3xQ8", "A4xZ2"]


# -- generators ------------------------------------------------------------------------


@st.composite
def relabelled_groups(draw):
    """A catalog group under a random relabelling that keeps the identity at 0."""
    G = catalog.lookup(draw(st.sampled_from(SMALL_GROUPS)))
    n = G.order
    rest = draw(st.permutations(range(1, n)))
    perm = np.array([0, *rest])  # new label of old element i is perm[i]
    inv = np.argsort(perm)
    table = perm[G.table[inv][:, inv]]
    return from_cayley_table(table, G.name)


@st.composite
def latin_squares(draw, max_order: int = 6):
    """Random Latin square with row 0 and column 0 the identity, filled by backtracking."""
    n = draw(st.integers(1, max_order))
    rows = [list(range(n))] + [[i] + [-1] * (n - 1) for i in range(1, n)]
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    choices = [draw(st.permutations(range(n))) for _ in cells]

    def fill(k: int) -> bool:
        if k == len(cells):
            return True
        i, j = cells[k]
        used = set(rows[i][:j]) | {rows[r][j] for r in range(i)}
        for v in choices[k]:
            if v not in used:
                rows[i][j] = v
                if fill(k + 1):
                    return True
        rows[i][j] = -1
        return False

    assert fill(0)  # a reduced Latin square always completes from any prefix order
    return rows


@st.composite
def mutated_group_tables(draw):
    """A small group table with one entry possibly rewritten."""
    G = catalog.lookup(draw(st.sampled_from(["S3", "D8", "Q8", "Z4", "D4", "Z3", "Z2"])))
    table = G.table.tolist()
    n = len(table)
    if draw(st.booleans()):
        i, j = draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))
        table[i][j] = draw(st.integers(0, n - 1))
    return table


def _validator_accepts(table) -> bool:
    try:
        check_axioms(np.array(table, dtype=np.int64))
    except GroupAxiomError:
        return False
    return True


@st.composite
def random_graphs(draw, max_n: int = 10):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return SimpleGraph.from_edges(n, chosen)


C5 = SimpleGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
K4_MINUS = SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
WHEEL5 = SimpleGraph.from_edges(6, [(i, (i + 1) % 5) for i in range(5)] + [(i, 5) for i in range(5)])
PLANAR_BLOCKS = [complete_graph(2), complete_graph(3), C5, complete_graph(4), K4_MINUS, WHEEL5]
TORUS_BLOCKS = [complete_graph(5), complete_bipartite(3, 3), complete_bipartite(3, 4)]


@st.composite
def glued_graphs(draw):
    """Up to three 2-connected pieces hung on each other at shared vertices.

    Two non-planar pieces come alone and at most one of them is K3,4, so
    whole-graph searches stay fast.
    """
    count = draw(st.integers(1, 3))
    hard = draw(st.integers(0, min(2, count)))
    if hard == 2:
        count = 2
    parts = [draw(st.sampled_from(TORUS_BLOCKS if i == 0 else TORUS_BLOCKS[:2])) for i in range(hard)]
    parts += [draw(st.sampled_from(PLANAR_BLOCKS)) for _ in range(count - hard)]
    parts = draw(st.permutations(parts))
    edges = list(parts[0].edges)
    n = parts[0].vertex_count
    for g in parts[1:]:
        anchor = draw(st.integers(0, n - 1))
        pivot = draw(st.integers(0, g.vertex_count - 1))
        mapping = {}
        nxt = n
        for v in range(g.vertex_count):
            if v == pivot:
                mapping[v] = anchor
            else:
                mapping[v] = nxt
                nxt += 1
        edges += [(mapping[u], mapping[v]) for u, v in g.edges]
        n = nxt
    return parts, SimpleGraph.from_edges(n, edges)


# -- group axioms ------------------------------------------------------------------------


@CASES
@given(latin_squares())
def test_axiom_validator_on_latin_squares(rows):
    assert _validator_accepts(rows) == oracles.axioms_hold(rows)


@CASES
@given(mutated_group_tables())
def test_axiom_validator_on_mutated_tables(table):
    assert _validator_accepts(table) == oracles.axioms_hold(table)


@CASES
@given(relabelled_groups())
def test_relabelled_groups_pass_validation(G):
    assert oracles.axioms_hold(G.table.tolist())


# -- commuting graph structure -------------------------------------------------------------


@CASES
@given(relabelled_groups())
def test_degree_identity(G):
    g = commuting_graph(G)
    z = len(center(G))
    for v, x in enumerate(g.labels):
        assert g.degree(v) == len(centralizer(G, int(x))) - z - 1


@CASES
@given(relabelled_groups())
def test_conjugates_have_equal_degree(G):
    g = commuting_graph(G)
    pos = {int(x): v for v, x in enumerate(g.labels)}
    for cls in conjugacy_classes(G):
        degrees = {g.degree(pos[x]) for x in cls if x in pos}
        assert len(degrees) <= 1


@CASES
@given(relabelled_groups())
def test_class_equation_and_center(G):
    classes = conjugacy_classes(G)
    assert sum(len(c) for c in classes) == G.order
    assert len(classes) == oracles.conjugacy_class_count(G.table.tolist())
    z = set(center(G))
    assert z == {x for x in range(G.order) if len(centralizer(G, x)) == G.order}
    assert sum(1 for c in classes if len(c) == 1) == len(z)


@CASES
@given(relabelled_groups())
def test_graphs_partition_noncentral_pairs(G):
    a, b = commuting_graph(G), non_commuting_graph(G)
    n = a.vertex_count
    assert b.vertex_count == n
    assert not set(a.edges) & set(b.edges)
    assert a.edge_count + b.edge_count == n * (n - 1) // 2


@CASES
@given(random_graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.edge_count + complement(g).edge_count == g.vertex_count * (g.vertex_count - 1) // 2


# -- blocks ---------------------------------------------------------------------------------


@CASES
@given(random_graphs(max_n=12))
def test_block_edge_partition(g):
    bd = blocks(g)
    seen: list[tuple[int, int]] = []
    vertex_sets = []
    for b, vmap in zip(bd.blocks, bd.vertex_maps):
        lifted = [(min(vmap[u], vmap[v]), max(vmap[u], vmap[v])) for u, v in b.edges]
        seen += lifted
        vertex_sets.append({int(vmap[v]) for v in range(b.vertex_count)})
    # every edge lies in exactly one block
    assert sorted(seen) == sorted(g.edges)
    ours = sorted((frozenset(e) for e in _edge_sets(bd) if e), key=sorted)
    assert ours == oracles.block_edge_sets(g.vertex_count, g.edges)
    # blocks overlap in at most one vertex, and shared vertices are exactly the cut vertices
    shared = set()
    for i in range(len(vertex_sets)):
        for j in range(i + 1, len(vertex_sets)):
            common = vertex_sets[i] & vertex_sets[j]
            assert len(common) <= 1
            shared |= common
    nxg = nx.Graph(list(g.edges))
    nxg.add_nodes_from(range(g.vertex_count))
    assert shared == set(bd.cut_vertices) == set(nx.articulation_points(nxg))


def _edge_sets(bd):
    for b, vmap in zip(bd.blocks, bd.vertex_maps):
        yield [(min(vmap[u], vmap[v]), max(vmap[u], vmap[v])) for u, v in b.edges]


# -- genus additivity -------------------------------------------------------------------


@CASES
@given(glued_graphs())
def test_genus_block_additivity(case):
    parts, g = case
    per_block = [genus(p) for p in parts]
    total = sum(per_block)
    assert genus(g) == total
    # the whole glued graph really does embed at the summed genus
    assert embeds_in_orientable(g, total)
    nxg = nx.Graph(list(g.edges))
    assert nx.check_planarity(nxg)[0] == (total == 0)
    assert is_planar(g)[0] == (total == 0)


# -- determinism ------------------------------------------------------------------------------


@CASES
@given(glued_graphs())
def test_verdict_and_embedding_deterministic(case):
    _, g = case
    first = json.dumps(surface_verdict(g).to_dict(), sort_keys=True)
    second = json.dumps(surface_verdict(g).to_dict(), sort_keys=True)
    assert first == second
    if len(g.edges) and nx.is_connected(nx.Graph(list(g.edges))):
        k = surface_verdict(g).genus
        assert find_embedding(g, "orientable", k) == find_embedding(g, "orientable", k)
