"""Closed-form genus and crosscap values plus Euler-formula lower bounds."""
from __future__ import annotations

from ..graphs import SimpleGraph, connected_components


class DomainError(ValueError):
    pass


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def genus_formula_kn(n: int) -> int:
    if n < 3:
        raise DomainError(f"genus formula for K_n needs n >= 3, got {n}")
    return _ceil_div((n - 3) * (n - 4), 12)


def genus_formula_kmn(m: int, n: int) -> int:
    if m < 2 or n < 2:
        raise DomainError(f"genus formula for K_m,n needs m, n >= 2, got ({m}, {n})")
    return _ceil_div((m - 2) * (n - 2), 4)


def crosscap_formula_kn(n: int) -> int:
    if n < 3:
        raise DomainError(f"crosscap formula for K_n needs n >= 3, got {n}")
    if n == 7:
        return 3
    return _ceil_div((n - 3) * (n - 4), 6)


def crosscap_formula_kmn(m: int, n: int) -> int:
    if m < 2 or n < 2:
        raise DomainError(f"crosscap formula for K_m,n needs m, n >= 2, got ({m}, {n})")
    return _ceil_div((m - 2) * (n - 2), 2)


def _component_sizes(g: SimpleGraph) -> list[tuple[int, int]]:
    comps = connected_components(g)
    owner = {}
    for i, comp in enumerate(comps):
        for v in comp:
            owner[v] = i
    edges = [0] * len(comps)
    for u, _ in g.edges:
        edges[owner[u]] += 1
    return [(len(comp), e) for comp, e in zip(comps, edges)]


def connected_genus_bound(v: int, e: int) -> int:
    if v < 4:
        return 0
    return max(0, _ceil_div(e - 3 * v + 6, 6))


def connected_euler_genus_bound(v: int, e: int) -> int:
    if v < 3:
        return 0
    return max(0, _ceil_div(e - 3 * v + 6, 3))


def genus_lower_bound(g: SimpleGraph) -> int:
    """Sum over components of max(0, ceil((e - 3v)/6 + 1)) (v >= 4)."""
    return sum(connected_genus_bound(v, e) for v, e in _component_sizes(g))


def crosscap_lower_bound(g: SimpleGraph) -> int:
    """Sum over components of max(0, ceil((e - 3v + 6)/3)).

    Each term bounds the Euler genus of its component, and Euler genus is
    additive over components, so the sum bounds the crosscap number.
    """
    return sum(connected_euler_genus_bound(v, e) for v, e in _component_sizes(g))
