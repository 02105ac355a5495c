"""Simple undirected graphs, commuting graphs of groups, and blocks."""
from __future__ import annotations

import warnings
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .groups import FiniteGroup, center, stats


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """Undirected simple graph on vertices ``0..vertex_count-1``.

    ``edges`` holds pairs ``(u, v)`` with ``u < v`` in lexicographic order.
    ``not_applicable`` marks the empty commuting graph of an abelian group.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None
    not_applicable: bool = field(default=False, compare=False)

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
        not_applicable: bool = False,
    ) -> SimpleGraph:
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise IndexError(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((min(u, v), max(u, v)))
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != vertex_count:
                raise ValueError("need exactly one label per vertex")
        return cls(vertex_count, tuple(sorted(norm)), labels, not_applicable)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(v={self.vertex_count}, e={self.edge_count})"


@dataclass(frozen=True)
class BlockDecomposition:
    """``vertex_maps[i][j]`` is the parent vertex of vertex ``j`` of ``blocks[i]``."""

    blocks: tuple[SimpleGraph, ...]
    vertex_maps: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]


def _graph_from_matrix(adj: np.ndarray, labels, not_applicable: bool = False) -> SimpleGraph:
    us, vs = np.nonzero(np.triu(adj, 1))
    return SimpleGraph(adj.shape[0], tuple(zip(us.tolist(), vs.tolist())), labels, not_applicable)


def commuting_graph(G: FiniteGroup) -> SimpleGraph:
    """Non-central elements, adjacent when they commute; labels are element indices."""
    central = set(center(G))
    verts = [x for x in range(G.order) if x not in central]
    labels = tuple(str(x) for x in verts)
    if not verts:
        warnings.warn(f"{G.name or 'group'} is abelian: its commuting graph has no vertices", stacklevel=2)
        return SimpleGraph(0, (), (), not_applicable=True)
    idx = np.array(verts)
    adj = G.commutes[np.ix_(idx, idx)]
    return _graph_from_matrix(adj, labels)


def complement(g: SimpleGraph) -> SimpleGraph:
    adj = np.ones((g.vertex_count, g.vertex_count), dtype=bool)
    for u, v in g.edges:
        adj[u, v] = adj[v, u] = False
    return _graph_from_matrix(adj, g.labels, g.not_applicable)


def non_commuting_graph(G: FiniteGroup) -> SimpleGraph:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        base = commuting_graph(G)
    if base.not_applicable:
        warnings.warn(f"{G.name or 'group'} is abelian: its non-commuting graph has no vertices", stacklevel=2)
    return complement(base)


def edge_count_identity_check(G: FiniteGroup) -> tuple[int, int, bool]:
    """Compare ``2|E|`` of the non-commuting graph with ``|G|^2 - |G| k(G)``."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        lhs = 2 * non_commuting_graph(G).edge_count
    n = G.order
    rhs = n * n - n * stats(G).class_count
    return lhs, rhs, lhs == rhs


def induced_subgraph(g: SimpleGraph, vertices: Iterable[int]) -> SimpleGraph:
    keep = sorted(set(int(v) for v in vertices))
    for v in keep:
        if not 0 <= v < g.vertex_count:
            raise IndexError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    labels = tuple(g.labels[v] for v in keep) if g.labels else None
    return SimpleGraph(len(keep), tuple(sorted(edges)), labels)


def disjoint_union(graphs: Sequence[SimpleGraph]) -> SimpleGraph:
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges)
        offset += h.vertex_count
    return SimpleGraph(offset, tuple(edges))


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(m: int, n: int) -> SimpleGraph:
    return SimpleGraph(m + n, tuple((u, m + v) for u in range(m) for v in range(n)))


def connected_components(g: SimpleGraph) -> list[list[int]]:
    seen = [False] * g.vertex_count
    comps = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighbors[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def blocks(g: SimpleGraph) -> BlockDecomposition:
    """Biconnected components by an iterative lowpoint DFS with an edge stack.

    Isolated vertices become one-vertex blocks; bridges become K2 blocks.
    """
    n = g.vertex_count
    nbrs = g.neighbors
    disc = [-1] * n
    low = [0] * n
    found: list[list[tuple[int, int]]] = []
    singles: list[int] = []
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        if not nbrs[root]:
            disc[root] = timer
            timer += 1
            singles.append(root)
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            if i < len(nbrs[v]):
                stack[-1] = (v, parent, i + 1)
                w = nbrs[v][i]
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, 0))
                    if v == root:
                        root_children += 1
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if parent < 0:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                comp = []
                while True:
                    e = edge_stack.pop()
                    comp.append(e)
                    if e == (parent, v):
                        break
                found.append(comp)
        if root_children > 1:
            cuts.add(root)

    parts = []
    for comp in found:
        verts = sorted({x for e in comp for x in e})
        parts.append((verts, comp))
    parts.extend(([v], []) for v in singles)
    parts.sort(key=lambda p: (p[0][0], p[0]))
    out_blocks = []
    maps = []
    for verts, comp in parts:
        pos = {v: i for i, v in enumerate(verts)}
        edges = tuple(sorted((min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in comp))
        labels = tuple(g.labels[v] for v in verts) if g.labels else None
        out_blocks.append(SimpleGraph(len(verts), edges, labels))
        maps.append(tuple(verts))
    return BlockDecomposition(tuple(out_blocks), tuple(maps), frozenset(cuts))


def is_complete(g: SimpleGraph) -> bool:
    n = g.vertex_count
    return g.edge_count == n * (n - 1) // 2


def complete_bipartite_parts(g: SimpleGraph) -> tuple[int, int] | None:
    """Part sizes ``(m, n)``, ``m <= n``, when ``g`` is exactly some K_{m,n} with m >= 1."""
    if g.vertex_count < 2 or not g.edges:
        return None
    side = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.neighbors[v]:
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    stack.append(w)
                elif side[w] == side[v]:
                    return None
    m = side.count(0)
    n = g.vertex_count - m
    if m == 0 or n == 0 or g.edge_count != m * n:
        return None
    return (min(m, n), max(m, n))
