from __future__ import annotations

import itertools
import json
import os
import random
import subprocess
import sys

import pytest

import oracles
from genuslab import catalog
from genuslab.classify import disconnected_rule_checks
from genuslab.embed import (
    DomainError,
    SearchTimeout,
    crosscap,
    crosscap_formula_kmn,
    crosscap_formula_kn,
    crosscap_lower_bound,
    embeds_in_nonorientable,
    embeds_in_orientable,
    find_embedding,
    genus,
    genus_formula_kmn,
    genus_formula_kn,
    genus_lower_bound,
    is_planar,
    surface_verdict,
)
from genuslab.embed.planarity import subdivision_kind
from genuslab.graphs import (
    SimpleGraph,
    commuting_graph,
    complete_bipartite,
    complete_graph,
    connected_components,
    disjoint_union,
)

K = complete_graph
B = complete_bipartite
PETERSEN = SimpleGraph.from_edges(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
)


def glue(parts: list[SimpleGraph]) -> SimpleGraph:
    """Chain the parts, identifying vertex 0 of each with the last vertex so far."""
    edges = list(parts[0].edges)
    n = parts[0].vertex_count
    for g in parts[1:]:
        m = {v: (n - 1 if v == 0 else n + v - 1) for v in range(g.vertex_count)}
        edges += [(m[u], m[v]) for u, v in g.edges]
        n += g.vertex_count - 1
    return SimpleGraph.from_edges(n, edges)


# -- closed forms and bounds ---------------------------------------------------------


def test_genus_formulas():
    assert genus_formula_kn(7) == 1 and genus_formula_kn(8) == 2
    assert genus_formula_kmn(3, 3) == 1 and genus_formula_kmn(4, 4) == 1


def test_crosscap_formulas():
    assert crosscap_formula_kn(7) == 3
    assert crosscap_formula_kmn(3, 6) == 2
    assert crosscap_formula_kn(8) == 4


@pytest.mark.parametrize("fn, args", [(genus_formula_kn, (2,)), (crosscap_formula_kn, (1,)), (genus_formula_kmn, (1, 4)), (crosscap_formula_kmn, (3, 1))])
def test_formula_domain(fn, args):
    with pytest.raises(DomainError):
        fn(*args)


def test_genus_lower_bound():
    assert genus_lower_bound(K(8)) == 2
    assert genus_lower_bound(K(5)) == 1
    tree = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    assert genus_lower_bound(tree) == 0
    assert genus_lower_bound(K(3)) == 0
    assert genus_lower_bound(disjoint_union([K(6)] * 3)) == 3


def test_crosscap_lower_bound():
    assert crosscap_lower_bound(K(7)) == 2
    assert crosscap_lower_bound(K(6)) == 1
    assert crosscap_lower_bound(K(4)) == 0
    assert crosscap_lower_bound(disjoint_union([K(5)] * 2)) == 2


# -- planarity -----------------------------------------------------------------------------


def test_k4_planar():
    assert is_planar(K(4)) == (True, None)


def test_k5_witness():
    planar, w = is_planar(K(5), witness=True)
    assert not planar and w.kind == "K5" and len(w.edges) == 10


def test_k33_witness_is_subgraph():
    g = PETERSEN
    planar, w = is_planar(g, witness=True)
    assert not planar
    assert set(w.edges) <= set(g.edges)
    assert subdivision_kind(w.edges) == w.kind


def test_witness_deterministic():
    g = commuting_graph(catalog.lookup("D14"))
    assert is_planar(g, witness=True) == is_planar(g, witness=True)


def test_subdivision_kind_on_subdivided_k33():
    edges = [(0, 3), (0, 4), (0, 6), (6, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 7), (7, 5)]
    assert subdivision_kind(edges) == "K3,3"
    assert subdivision_kind([(0, 1), (1, 2), (0, 2)]) is None


def test_z5_z4_commuting_graph_planar():
    assert is_planar(commuting_graph(catalog.lookup("Z5xZ4")))[0]


# -- embedding search ----------------------------------------------------------------------


def test_k5_orientable():
    assert embeds_in_orientable(K(5), 1)
    assert not embeds_in_orientable(K(5), 0)


def test_k7_torus():
    assert embeds_in_orientable(K(7), 1)


def test_k33_orientable():
    assert not embeds_in_orientable(B(3, 3), 0)
    assert embeds_in_orientable(B(3, 3), 1)


def test_k6_not_planar_by_search():
    assert not embeds_in_orientable(K(6), 0)


@pytest.mark.parametrize("g", [K(5), K(6), B(3, 3)], ids=["K5", "K6", "K3,3"])
def test_projective_plane(g):
    assert embeds_in_nonorientable(g, 1)


def test_k7_not_in_n2():
    assert not embeds_in_nonorientable(K(7), 2)
    assert embeds_in_nonorientable(K(7), 3)


def test_k36_not_projective():
    assert not embeds_in_nonorientable(B(3, 6), 1)
    assert embeds_in_nonorientable(B(3, 6), 2)


def test_k8_genus_two():
    assert not embeds_in_orientable(K(8), 1)
    assert embeds_in_orientable(K(8), 2)


def test_tree_and_cycle():
    tree = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (1, 3)])
    assert embeds_in_orientable(tree, 0)
    cycle = SimpleGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    emb = find_embedding(cycle, "orientable", 0)
    assert emb.faces == 2


def test_search_rejects_disconnected_and_bad_targets():
    with pytest.raises(ValueError):
        embeds_in_orientable(disjoint_union([K(3), K(3)]), 0)
    with pytest.raises(ValueError):
        embeds_in_nonorientable(K(5), 0)
    with pytest.raises(ValueError):
        embeds_in_orientable(K(5), -1)
    with pytest.raises(ValueError):
        find_embedding(K(5), "klein", 1)


def _rotation_dict(emb):
    return {v: list(r) for v, r in enumerate(emb.rotation) if r}


@pytest.mark.parametrize(
    "g, surface, k",
    [
        (K(5), "orientable", 1),
        (K(7), "orientable", 1),
        (B(4, 4), "orientable", 1),
        (K(5), "nonorientable", 1),
        (K(6), "nonorientable", 1),
        (K(7), "nonorientable", 3),
        (PETERSEN, "nonorientable", 1),
        (B(3, 5), "nonorientable", 2),
    ],
    ids=["K5-S1", "K7-S1", "K4,4-S1", "K5-N1", "K6-N1", "K7-N3", "Petersen-N1", "K3,5-N2"],
)
def test_found_embeddings_check_out(g, surface, k):
    emb = find_embedding(g, surface, k)
    assert emb is not None
    rot = _rotation_dict(emb)
    # every core vertex lists each neighbour exactly once
    for v, r in rot.items():
        assert sorted(r) == sorted(g.neighbors[v])
    faces = oracles.trace_faces(rot, emb.signature)
    assert faces == emb.faces
    orientable = oracles.is_orientable(rot, emb.signature)
    assert orientable == emb.orientable
    chi = len(rot) - len(emb.signature) + faces
    assert chi == emb.euler_characteristic
    if surface == "orientable":
        assert orientable and chi >= 2 - 2 * k
    elif orientable:
        assert 2 - chi <= 2 * ((k - 1) // 2)
    else:
        assert chi >= 2 - k


def test_k6_projective_embedding_is_non_orientable():
    emb = find_embedding(K(6), "nonorientable", 1)
    assert not emb.orientable and emb.faces == 10


@pytest.mark.parametrize(
    "g",
    [K(4), K(5), B(3, 3), PETERSEN, glue([K(4), K(3)]), SimpleGraph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (0, 3)])],
    ids=["K4", "K5", "K3,3", "Petersen", "K4+K3", "two-triangles-plus"],
)
def test_genus_matches_rotation_enumeration(g):
    assert genus(g) == oracles.brute_genus(g.vertex_count, list(g.edges))


def _random_connected(seed: int, n: int, e: int) -> SimpleGraph:
    rng = random.Random(seed)
    while True:
        edges = rng.sample(list(itertools.combinations(range(n), 2)), e)
        g = SimpleGraph.from_edges(n, edges)
        if len(connected_components(g)) == 1:
            return g


@pytest.mark.parametrize("seed", range(12))
def test_random_genus_against_enumeration(seed):
    g = _random_connected(seed, 6, 9 + seed % 3)
    k = oracles.brute_genus(g.vertex_count, list(g.edges))
    assert genus(g) == k
    if k > 0:
        assert not embeds_in_orientable(g, k - 1)


@pytest.mark.parametrize("g, expected", [(K(4), 0), (B(3, 3), 1)], ids=["K4", "K3,3"])
def test_crosscap_matches_signed_enumeration(g, expected):
    assert oracles.brute_crosscap(g.vertex_count, list(g.edges)) == expected
    assert crosscap(g) == expected


# -- genus / crosscap pipelines ------------------------------------------------------------


def test_genus_d16_commuting_graph():
    assert genus(commuting_graph(catalog.lookup("D16"))) == 1


def test_genus_3k6():
    assert genus(disjoint_union([K(6)] * 3)) == 3


def test_genus_planar():
    assert genus(commuting_graph(catalog.lookup("S4"))) == 0


def test_crosscap_2k5():
    assert crosscap(disjoint_union([K(5)] * 2)) == 2


def test_crosscap_q16_commuting_graph():
    assert crosscap(commuting_graph(catalog.lookup("Q16"))) == 1


def test_crosscap_k7():
    assert crosscap(K(7)) == 3


def test_crosscap_non_formula_block_searched():
    assert crosscap(PETERSEN) == 1
    assert genus(PETERSEN) == 1


def test_crosscap_3k6_rule():
    assert crosscap(disjoint_union([K(6)] * 3)) == 3


def test_disconnected_rule_agrees_with_bridged_search():
    for rec in disconnected_rule_checks():
        assert rec["ok"], rec


def test_disconnected_rule_all_orientable_components():
    # K7 has Euler genus 2 reached only on the torus: K7 + K7 needs 2 + 2 + 1 crosscaps
    g = disjoint_union([K(7), K(7)])
    assert crosscap(g) == 5


def test_verdict_fields():
    v = surface_verdict(K(6))
    assert (v.planar, v.genus, v.crosscap, v.euler_genus) == (False, 1, 1, 1)
    assert any("closed form" in note for note in v.bounds_used)
    p = surface_verdict(K(4))
    assert p.planar and p.genus == 0 and p.crosscap == 0
    assert "0 = planar" in p.crosscap_convention


def test_verdict_invariants_on_catalog():
    for name in ["D14", "A4xZ2", "Z3xD8", "D18", "D24", "Heis27"]:
        v = surface_verdict(commuting_graph(catalog.lookup(name)))
        assert v.crosscap <= 2 * v.genus + 1
        assert v.euler_genus == min(2 * v.genus, v.crosscap)
        assert v.planar == (v.genus == 0)
        assert genus_lower_bound(commuting_graph(catalog.lookup(name))) <= v.genus


def test_verdict_limit_reports_bounds_only():
    v = surface_verdict(glue([PETERSEN, PETERSEN]), limit=1)
    assert v.genus is None and v.genus_lower >= 2
    # each block is searched within the limit; the block rule then gives the total
    assert v.crosscap == 2
    k7_minus = SimpleGraph.from_edges(7, [e for e in K(7).edges if e != (0, 1)])
    w = surface_verdict(k7_minus, limit=1)
    assert w.genus == 1 and w.crosscap is None and w.crosscap_lower == 2


def test_verdict_limit_with_exact_blocks():
    # closed-form blocks are exact at no cost, even beyond the limit
    v = surface_verdict(disjoint_union([glue([K(5), K(5)]), K(3)]), limit=1)
    assert (v.genus, v.crosscap) == (2, 2)
    w = surface_verdict(glue([PETERSEN, K(8)]), limit=1)
    assert w.genus is None and w.genus_lower == 3 and w.crosscap == 5


def test_verdict_is_serialisable():
    json.dumps(surface_verdict(K(5)).to_dict())


# -- budgets and the fallback kernel -------------------------------------------------------


def test_timeout_is_reported_not_answered():
    hard = glue([K(5), K(4), K(3), B(3, 3)])
    with pytest.raises(SearchTimeout) as info:
        embeds_in_orientable(hard, 1, timeout=0.01)
    assert info.value.nodes > 0


def test_genus_timeout_carries_lower_bound():
    hard = glue([K(5), K(5), K(5)])
    # forcing search: the block decomposition would split this, so search the whole graph
    with pytest.raises(SearchTimeout):
        embeds_in_orientable(hard, 2, timeout=0.01)


def test_timeout_env(monkeypatch):
    from genuslab.embed.search import default_timeout

    monkeypatch.setenv("GENUSLAB_TIMEOUT", "12.5")
    assert default_timeout() == 12.5
    monkeypatch.setenv("GENUSLAB_TIMEOUT", "-1")
    with pytest.raises(ValueError):
        default_timeout()


FALLBACK_SCRIPT = """
import json
from genuslab._accel import USING_NUMBA
from genuslab.graphs import complete_graph, complete_bipartite
from genuslab.embed import embeds_in_orientable, embeds_in_nonorientable, find_embedding
e = find_embedding(complete_graph(5), "nonorientable", 1)
print(json.dumps([
    USING_NUMBA,
    embeds_in_orientable(complete_graph(5), 0),
    embeds_in_orientable(complete_graph(5), 1),
    embeds_in_nonorientable(complete_bipartite(3, 3), 1),
    embeds_in_nonorientable(complete_graph(6), 1),
    [list(r) for r in e.rotation],
]))
"""


def _run_kernel(flag: str):
    env = dict(os.environ, GENUSLAB_NO_NUMBA=flag)
    out = subprocess.run([sys.executable, "-c", FALLBACK_SCRIPT], env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def test_pure_python_kernel_agrees_with_numba():
    fast = _run_kernel("0")
    slow = _run_kernel("1")
    assert slow[0] is False
    assert fast[1:] == slow[1:] == [False, True, True, True, fast[5]]


def test_search_is_deterministic():
    a = find_embedding(K(7), "nonorientable", 3)
    b = find_embedding(K(7), "nonorientable", 3)
    assert a == b
