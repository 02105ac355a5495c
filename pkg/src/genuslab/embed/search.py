"""Exact embedding decisions by exhaustive rotation-system search.

The search builds faces one at a time, branching on the next edge at each
vertex (and, for non-orientable surfaces, on edge signatures), and prunes a
branch as soon as the faces still reachable cannot meet Euler's formula for
the target surface.
"""
from __future__ import annotations

import os
import time
from collections import deque
from dataclasses import dataclass

import numpy as np

from .._accel import USING_NUMBA
from ..graphs import SimpleGraph, connected_components
from . import _kernels as K

DEFAULT_TIMEOUT = 60.0
TIMEOUT_ENV = "GENUSLAB_TIMEOUT"
_CHUNK = 4_000_000 if USING_NUMBA else 40_000
_NEVER = 1 << 40


class SearchTimeout(Exception):
    """The search budget ran out before the question was decided."""

    def __init__(self, message: str, lower_bound: int | None = None, nodes: int = 0):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.nodes = nodes


def default_timeout() -> float:
    raw = os.environ.get(TIMEOUT_ENV)
    if raw:
        value = float(raw)
        if value <= 0:
            raise ValueError(f"{TIMEOUT_ENV} must be positive")
        return value
    return DEFAULT_TIMEOUT


@dataclass(frozen=True)
class Embedding:
    """A cellular embedding of the leaf-pruned core of a graph.

    ``rotation[v]`` lists the neighbours of ``v`` in cyclic order (empty for
    pruned vertices); ``signature`` maps each core edge to +1 or -1.
    """

    rotation: tuple[tuple[int, ...], ...]
    signature: dict[tuple[int, int], int]
    faces: int
    orientable: bool
    euler_characteristic: int

    @property
    def euler_genus(self) -> int:
        return 2 - self.euler_characteristic


@dataclass
class _Core:
    vertices: list[int]
    edges: list[tuple[int, int]]
    end_vertex: np.ndarray
    vstart: np.ndarray
    vends: np.ndarray
    deg: np.ndarray
    scan_orient: np.ndarray
    scan_all: np.ndarray
    tree: np.ndarray
    min_face: int
    parent_n: int


def _prune_leaves(g: SimpleGraph) -> tuple[list[int], list[tuple[int, int]]]:
    alive = set(range(g.vertex_count))
    deg = [g.degree(v) for v in range(g.vertex_count)]
    queue = deque(v for v in alive if deg[v] <= 1)
    while queue:
        v = queue.popleft()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.neighbors[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    edges = [(u, v) for u, v in g.edges if u in alive and v in alive]
    return sorted(alive), edges


def _girth(n: int, nbrs: list[list[int]]) -> int:
    best = _NEVER
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in nbrs[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def _prepare(g: SimpleGraph) -> _Core | None:
    if len(connected_components(g)) > 1:
        raise ValueError("embedding search needs a connected graph")
    verts, edges = _prune_leaves(g)
    if not edges:
        return None
    pos = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    m = len(edges)
    end_vertex = np.empty(2 * m, dtype=np.int64)
    incident: list[list[int]] = [[] for _ in range(n)]
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        a, b = pos[u], pos[v]
        end_vertex[2 * e] = a
        end_vertex[2 * e + 1] = b
        incident[a].append(2 * e)
        incident[b].append(2 * e + 1)
        nbrs[a].append(b)
        nbrs[b].append(a)
    deg = np.array([len(x) for x in incident], dtype=np.int64)
    vstart = np.zeros(n + 1, dtype=np.int64)
    vstart[1:] = np.cumsum(deg)
    vends = np.array([a for x in incident for a in x], dtype=np.int64)

    rank = sorted(range(n), key=lambda v: (-int(deg[v]), v))
    scan_orient = np.array([2 * a for v in rank for a in incident[v]], dtype=np.int64)
    scan_all = np.array([2 * a + s for v in rank for a in incident[v] for s in (0, 1)], dtype=np.int64)

    # BFS spanning tree from the highest-degree vertex; its edges keep sign +1
    tree = np.zeros(m, dtype=bool)
    seen = [False] * n
    root = rank[0]
    seen[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for a in incident[v]:
            w = int(end_vertex[a ^ 1])
            if not seen[w]:
                seen[w] = True
                tree[a >> 1] = True
                queue.append(w)
    return _Core(verts, edges, end_vertex, vstart, vends, deg, scan_orient, scan_all, tree, _girth(n, nbrs), g.vertex_count)


def _extract(core: _Core, ws: dict[str, np.ndarray]) -> Embedding:
    succ = ws["succ"]
    sig = ws["sig"]
    rotation: list[tuple[int, ...]] = [() for _ in range(core.parent_n)]
    for i, v in enumerate(core.vertices):
        lo, hi = core.vstart[i], core.vstart[i + 1]
        first = int(core.vends[lo])
        order = []
        a = first
        for _ in range(hi - lo):
            order.append(core.vertices[int(core.end_vertex[a ^ 1])])
            a = int(succ[a])
        rotation[v] = tuple(order)
    signature = {core.edges[e]: int(sig[e]) for e in range(len(core.edges))}
    faces = int(K.count_faces(core.end_vertex, succ, ws["pred"], sig))
    chi = len(core.vertices) - len(core.edges) + faces
    return Embedding(tuple(rotation), signature, faces, not np.any(sig[~core.tree] < 0), chi)


def _run(core: _Core, need_orient: int, need_nonorient: int, orientable_only: bool, timeout: float) -> tuple[Embedding | None, int]:
    m = len(core.edges)
    if min(need_orient, need_nonorient) > (2 * m) // core.min_face:
        return None, 0
    ws = K.new_workspace(m)
    if orientable_only:
        ws["sig"][:] = 1
        scan = core.scan_orient
    else:
        ws["sig"][core.tree] = 1
        scan = core.scan_all
    deadline = time.monotonic() + timeout
    while True:
        status = K.rotation_search(
            core.end_vertex, core.vstart, core.vends, core.deg, scan, m, core.min_face,
            need_orient, need_nonorient,
            ws["succ"], ws["pred"], ws["sig"], ws["used"],
            ws["tr_kind"], ws["tr_idx"],
            ws["fr_trail"], ws["fr_kind"], ws["fr_cursor"], ws["fr_cur"], ws["fr_start"],
            ws["fr_flen"], ws["fr_faces"], ws["fr_trav"], ws["fr_neg"],
            ws["regs"], _CHUNK,
        )
        nodes = int(ws["regs"][K.R_NODES])
        if status == K.FOUND:
            return _extract(core, ws), nodes
        if status == K.EXHAUSTED:
            return None, nodes
        if time.monotonic() > deadline:
            raise SearchTimeout(f"search undecided after {timeout:g} s ({nodes} steps)", nodes=nodes)


def find_embedding(
    g: SimpleGraph, surface: str, target: int, timeout: float | None = None
) -> Embedding | None:
    """An embedding of connected ``g`` in S_target or N_target, or ``None``.

    ``surface`` is ``"orientable"`` or ``"nonorientable"``.  A graph that
    embeds in the orientable surface of genus h also embeds in N_k for any
    k >= 2h + 1, so the non-orientable search accepts such embeddings too.
    """
    if timeout is None:
        timeout = default_timeout()
    core = _prepare(g)
    if surface == "orientable":
        if target < 0:
            raise ValueError("genus target must be >= 0")
        if core is None:
            return Embedding(tuple(() for _ in range(g.vertex_count)), {}, 1, True, 2)
        n, m = len(core.vertices), len(core.edges)
        found, _ = _run(core, 2 - 2 * target - n + m, _NEVER, True, timeout)
        return found
    if surface == "nonorientable":
        if target < 1:
            raise ValueError("crosscap target must be >= 1")
        if core is None:
            return Embedding(tuple(() for _ in range(g.vertex_count)), {}, 1, True, 2)
        n, m = len(core.vertices), len(core.edges)
        need_orient = 2 - 2 * ((target - 1) // 2) - n + m
        found, _ = _run(core, need_orient, 2 - target - n + m, False, timeout)
        return found
    raise ValueError(f"unknown surface kind {surface!r}")


def embeds_in_orientable(g: SimpleGraph, genus_target: int, timeout: float | None = None) -> bool:
    """Whether connected ``g`` embeds in the orientable surface S_genus_target.

    Raises :class:`SearchTimeout` when undecided within ``timeout`` seconds.
    """
    return find_embedding(g, "orientable", genus_target, timeout) is not None


def embeds_in_nonorientable(g: SimpleGraph, crosscap_target: int, timeout: float | None = None) -> bool:
    """Whether connected ``g`` embeds in N_crosscap_target (k projective planes)."""
    return find_embedding(g, "nonorientable", crosscap_target, timeout) is not None


def search_nodes(g: SimpleGraph, surface: str, target: int, timeout: float | None = None) -> tuple[bool, int]:
    """Decision plus the number of kernel steps spent (for benchmarking)."""
    if timeout is None:
        timeout = default_timeout()
    core = _prepare(g)
    if core is None:
        return True, 0
    n, m = len(core.vertices), len(core.edges)
    if surface == "orientable":
        found, nodes = _run(core, 2 - 2 * target - n + m, _NEVER, True, timeout)
    else:
        found, nodes = _run(core, 2 - 2 * ((target - 1) // 2) - n + m, 2 - target - n + m, False, timeout)
    return found is not None, nodes
