"""Exact clique search on small graphs given as adjacency bitsets.

Vertex ``v`` is bit ``v``; ``adj[v]`` is the bitset of its neighbours.
"""
from __future__ import annotations

from collections.abc import Iterator, Sequence


def bits(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _color_bound(adj: Sequence[int], cand: int) -> int:
    # greedy colouring: each colour class is independent, so a clique uses
    # at most one vertex per class
    colors = 0
    uncolored = cand
    while uncolored:
        colors += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            uncolored &= ~low
            avail &= ~low & ~adj[v]
    return colors


def find_clique(adj: Sequence[int], size: int, cand: int) -> list[int] | None:
    """Return ``size`` pairwise adjacent vertices drawn from ``cand``.

    ``None`` means the branch-and-bound search exhausted every possibility.
    """
    if size <= 0:
        return []

    def extend(chosen: list[int], cand: int) -> list[int] | None:
        if len(chosen) == size:
            return chosen
        need = size - len(chosen)
        if cand.bit_count() < need or _color_bound(adj, cand) < need:
            return None
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            found = extend(chosen + [v], cand & adj[v])
            if found is not None:
                return found
            cand ^= low
            if cand.bit_count() < need:
                return None
        return None

    return extend([], cand)


def iter_cliques(adj: Sequence[int], size: int, cand: int) -> Iterator[list[int]]:
    """Yield every clique of exactly ``size`` vertices inside ``cand``, ascending."""

    def rec(chosen: list[int], cand: int) -> Iterator[list[int]]:
        if len(chosen) == size:
            yield chosen
            return
        need = size - len(chosen)
        while cand and cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from rec(chosen + [v], cand & adj[v])

    yield from rec([], cand)


def clique_number(adj: Sequence[int], cand: int) -> int:
    size = 0
    while find_clique(adj, size + 1, cand) is not None:
        size += 1
    return size


def find_disjoint_cliques(adj: Sequence[int], size: int, count: int, cand: int) -> list[list[int]] | None:
    """Find ``count`` pairwise disjoint cliques of ``size`` vertices, or prove none exist.

    Families are searched ordered by their minimum vertex, so every vertex of a
    later clique exceeds the minimum of the previous one.
    """

    def rec(k: int, cand: int) -> list[list[int]] | None:
        if k == 0:
            return []
        if cand.bit_count() < size * k:
            return None
        rest = cand
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            # vertices above v only
            above = cand & ~((low << 1) - 1)
            for tail in iter_cliques(adj, size - 1, above & adj[v]):
                clique = [v] + tail
                remaining = above & ~bits(tail)
                found = rec(k - 1, remaining)
                if found is not None:
                    return [clique] + found
        return None

    if size <= 0:
        return [[] for _ in range(count)]
    return rec(count, cand)
