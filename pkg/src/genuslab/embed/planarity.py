"""Planarity test with a Kuratowski subgraph as the non-planarity witness."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import networkx as nx

from ..graphs import SimpleGraph


@dataclass(frozen=True)
class KuratowskiWitness:
    """A subdivision of ``K5`` or ``K3,3`` inside the tested graph."""

    kind: str
    edges: tuple[tuple[int, int], ...]


def to_networkx(g: SimpleGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.vertex_count))
    G.add_edges_from(g.edges)
    return G


def subdivision_kind(edges) -> str | None:
    """Return ``"K5"`` or ``"K3,3"`` if ``edges`` form a subdivision of it.

    Degree-2 vertices are smoothed away; the remaining branch graph must be
    exactly K5 or K3,3 and every path must run between branch vertices.
    """
    edges = [tuple(e) for e in edges]
    deg = Counter(x for e in edges for x in e)
    if any(d < 2 for d in deg.values()):
        return None
    branch = {v for v, d in deg.items() if d > 2}
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    links = set()
    walked = set()
    for b in branch:
        for first in adj[b]:
            prev, cur = b, first
            path = {(min(b, first), max(b, first))}
            while cur not in branch:
                nxt = [w for w in adj[cur] if w != prev]
                if len(nxt) != 1:
                    return None
                prev, cur = cur, nxt[0]
                path.add((min(prev, cur), max(prev, cur)))
            if cur == b:
                return None
            link = (min(b, cur), max(b, cur))
            key = frozenset(path)
            if key in walked:
                continue
            walked.add(key)
            if link in links:
                return None
            links.add(link)
    covered = set().union(*walked) if walked else set()
    if covered != {(min(u, v), max(u, v)) for u, v in edges}:
        return None
    if len(branch) == 5 and all(deg[b] == 4 for b in branch) and len(links) == 10:
        return "K5"
    if len(branch) == 6 and all(deg[b] == 3 for b in branch) and len(links) == 9:
        branch_graph = nx.Graph(list(links))
        if nx.is_bipartite(branch_graph):
            return "K3,3"
    return None


def is_planar(g: SimpleGraph, witness: bool = False) -> tuple[bool, KuratowskiWitness | None]:
    """Left-right planarity test (networkx); optional Kuratowski witness."""
    planar, cert = nx.check_planarity(to_networkx(g), counterexample=witness)
    if planar or not witness:
        return planar, None
    edges = tuple(sorted((min(u, v), max(u, v)) for u, v in cert.edges()))
    kind = subdivision_kind(edges)
    if kind is None:  # pragma: no cover - would mean a broken certificate
        raise RuntimeError("planarity certificate is not a Kuratowski subdivision")
    return False, KuratowskiWitness(kind, edges)
