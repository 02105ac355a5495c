"""Finite groups as validated Cayley tables.

Elements are the integers ``0..n-1`` and element ``0`` is always the
identity.  ``table[i, j]`` is the index of the product ``x_i * x_j``.
"""
from __future__ import annotations

import math
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import product as _cartesian

import numpy as np

from . import cliques

ORDER_CAP = 10000

ElementSet = tuple[int, ...]


class GroupError(ValueError):
    pass


class GroupAxiomError(GroupError):
    """A table violates a group law; ``witness`` is the first offending index tuple."""

    def __init__(self, message: str, witness: tuple[int, ...]):
        super().__init__(message)
        self.witness = witness


class NotClosed(GroupAxiomError):
    pass


class NoIdentity(GroupAxiomError):
    pass


class NoInverse(GroupAxiomError):
    pass


class NotAssociative(GroupAxiomError):
    pass


class NotAPermutation(GroupError):
    pass


class OrderCapExceeded(GroupError):
    pass


class InvalidAction(GroupError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: np.ndarray
    name: str = ""

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    @cached_property
    def inverses(self) -> np.ndarray:
        inv = np.argmin(self.table, axis=1)
        inv.flags.writeable = False
        return inv

    def inverse(self, x: int) -> int:
        return int(self.inverses[x])

    @cached_property
    def commutes(self) -> np.ndarray:
        """Boolean matrix ``commutes[x, y] = (xy == yx)``."""
        c = self.table == self.table.T
        c.flags.writeable = False
        return c

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        for x in range(n):
            k, y = 1, x
            while y != 0:
                y = self.table[y, x]
                k += 1
            orders[x] = k
        return orders

    def power(self, x: int, k: int) -> int:
        y = 0
        for _ in range(k % int(self.element_orders[x])):
            y = int(self.table[y, x])
        return y

    def __repr__(self) -> str:
        return f"FiniteGroup(name={self.name!r}, order={self.order})"


@dataclass(frozen=True)
class GroupStats:
    center_size: int
    class_count: int
    spectrum: frozenset[int]
    exponent: int
    is_abelian: bool


def check_axioms(table: np.ndarray) -> None:
    """Raise the first group-law violation of ``table``, if any."""
    n = table.shape[0]
    bad = np.argwhere((table < 0) | (table >= n))
    if len(bad):
        i, j = (int(v) for v in bad[0])
        raise NotClosed(f"entry table[{i}][{j}] = {int(table[i, j])} is outside [0, {n})", (i, j, int(table[i, j])))
    idx = np.arange(n)
    for j in np.flatnonzero(table[0] != idx):
        raise NoIdentity(f"element 0 is not a left identity: 0*{j} = {int(table[0, j])}", (0, int(j), int(table[0, j])))
    for i in np.flatnonzero(table[:, 0] != idx):
        raise NoIdentity(f"element 0 is not a right identity: {i}*0 = {int(table[i, 0])}", (int(i), 0, int(table[i, 0])))
    zeros = (table == 0).sum(axis=1)
    for i in np.flatnonzero(zeros != 1):
        raise NoInverse(f"element {i} has {int(zeros[i])} right inverses", (int(i),))
    # chunk over the left factor so memory stays O(n^2)
    step = max(1, 2_000_000 // (n * n))
    for lo in range(0, n, step):
        left = table[table[lo:lo + step]]  # left[i, j, k] = (x_i x_j) x_k
        right = table[idx[lo:lo + step, None, None], table[None, :, :]]  # x_i (x_j x_k)
        bad = np.argwhere(left != right)
        if len(bad):
            i, j, k = (int(v) for v in bad[0])
            i += lo
            raise NotAssociative(f"({i}*{j})*{k} != {i}*({j}*{k})", (i, j, k))


def from_cayley_table(table, name: str = "") -> FiniteGroup:
    arr = np.array(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise GroupError(f"Cayley table must be a non-empty square array, got shape {arr.shape}")
    check_axioms(arr)
    arr.flags.writeable = False
    return FiniteGroup(arr, name)


def _row_keys(perms: np.ndarray) -> np.ndarray:
    perms = np.ascontiguousarray(perms)
    return perms.view(np.dtype((np.void, perms.dtype.itemsize * perms.shape[1]))).ravel()


def from_permutation_generators(
    degree: int,
    generators: Sequence[Sequence[int]],
    name: str = "",
    cap: int = ORDER_CAP,
) -> FiniteGroup:
    """Close the generators under composition, breadth first from the identity.

    The product ``x*y`` is the composite ``p -> x[y[p]]``.  Elements are
    indexed in discovery order.
    """
    if degree < 0:
        raise GroupError("degree must be non-negative")
    gens = []
    for g in generators:
        arr = np.asarray(g, dtype=np.int64)
        if arr.shape != (degree,) or sorted(arr.tolist()) != list(range(degree)):
            raise NotAPermutation(f"{list(g)} is not a permutation of 0..{degree - 1}")
        gens.append(arr)
    identity = np.arange(degree, dtype=np.int64)
    elements = [identity]
    seen = {identity.tobytes(): 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x[g]
            key = y.tobytes()
            if key not in seen:
                if len(elements) >= cap:
                    raise OrderCapExceeded(f"generated group exceeds the order cap {cap}")
                seen[key] = len(elements)
                elements.append(y)
                queue.append(y)
    perms = np.array(elements, dtype=np.int64).reshape(len(elements), degree)
    n = len(elements)
    if degree == 0:
        return from_cayley_table([[0]], name)
    keys = _row_keys(perms)
    order = np.argsort(keys)
    sorted_keys = keys[order]
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        pos = np.searchsorted(sorted_keys, _row_keys(perms[i][perms]))
        table[i] = order[pos]
    table.flags.writeable = False
    return FiniteGroup(table, name)


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """Pairs ``(g, h)`` get index ``g*|H| + h``; the identity pair is index 0."""
    m = H.order
    gi = np.repeat(np.arange(G.order), m)
    hi = np.tile(np.arange(m), G.order)
    table = G.table[gi[:, None], gi[None, :]] * m + H.table[hi[:, None], hi[None, :]]
    table.flags.writeable = False
    return FiniteGroup(table, name if name is not None else f"{G.name}x{H.name}")


def semidirect_product_cyclic(n: int, m: int, t: int, name: str = "") -> FiniteGroup:
    """The group <a, b | a^n = b^m = 1, b^-1 a b = a^t> on pairs a^i b^j.

    ``a^i b^j`` has index ``j*n + i``.
    """
    if n < 1 or m < 1:
        raise InvalidAction("n and m must be positive")
    if math.gcd(t, n) != 1 or pow(t, m, n) != 1 % n:
        raise InvalidAction(f"a -> a^{t} is not an automorphism of Z{n} of order dividing {m}")
    # b^j a^k = a^(k u^j) b^j with u = t^-1 (mod n)
    u = pow(t, -1, n) if n > 1 else 0
    upow = np.array([pow(u, j, n) for j in range(m)], dtype=np.int64)
    i = np.tile(np.arange(n), m)
    j = np.repeat(np.arange(m), n)
    new_i = (i[:, None] + i[None, :] * upow[j][:, None]) % n
    new_j = (j[:, None] + j[None, :]) % m
    table = new_j * n + new_i
    table.flags.writeable = False
    return FiniteGroup(table, name)


def cyclic_group(n: int, name: str | None = None) -> FiniteGroup:
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    table.flags.writeable = False
    return FiniteGroup(table, name if name is not None else f"Z{n}")


def center(G: FiniteGroup) -> ElementSet:
    return tuple(int(z) for z in np.flatnonzero(G.commutes.all(axis=1)))


def centralizer(G: FiniteGroup, x: int) -> ElementSet:
    if not 0 <= x < G.order:
        raise IndexError(f"element {x} out of range")
    return tuple(int(g) for g in np.flatnonzero(G.commutes[x]))


def is_abelian(G: FiniteGroup) -> bool:
    return bool(G.commutes.all())


def conjugacy_classes(G: FiniteGroup) -> list[ElementSet]:
    inv = G.inverses
    seen = np.zeros(G.order, dtype=bool)
    classes = []
    for x in range(G.order):
        if seen[x]:
            continue
        # g x g^-1 for every g
        orbit = np.unique(G.table[G.table[:, x], inv])
        seen[orbit] = True
        classes.append(tuple(int(y) for y in orbit))
    return classes


def stats(G: FiniteGroup) -> GroupStats:
    spectrum = frozenset(int(k) for k in np.unique(G.element_orders))
    return GroupStats(
        center_size=len(center(G)),
        class_count=len(conjugacy_classes(G)),
        spectrum=spectrum,
        exponent=reduce(math.lcm, spectrum, 1),
        is_abelian=is_abelian(G),
    )


def quotient(G: FiniteGroup, normal: ElementSet, name: str = "") -> FiniteGroup:
    """Quotient by a normal subgroup; cosets are numbered by first appearance."""
    coset_of = np.full(G.order, -1, dtype=np.int64)
    reps = []
    members = np.array(normal, dtype=np.int64)
    for x in range(G.order):
        if coset_of[x] < 0:
            coset_of[G.table[x, members]] = len(reps)
            reps.append(x)
    reps = np.array(reps, dtype=np.int64)
    table = coset_of[G.table[reps[:, None], reps[None, :]]]
    return from_cayley_table(table, name)


def quotient_by_center(G: FiniteGroup) -> FiniteGroup:
    return quotient(G, center(G), f"{G.name}/Z" if G.name else "")


def _commuting_adjacency(G: FiniteGroup) -> list[int]:
    c = G.commutes.copy()
    np.fill_diagonal(c, False)
    return [cliques.bits(np.flatnonzero(row).tolist()) for row in c]


def _search_pool(G: FiniteGroup, exclude: str) -> int:
    if exclude == "center":
        banned = set(center(G))
    elif exclude == "identity":
        banned = {0}
    else:
        raise ValueError(f"exclude must be 'center' or 'identity', not {exclude!r}")
    return cliques.bits(x for x in range(G.order) if x not in banned)


def find_commuting_subset(G: FiniteGroup, size: int, exclude: str = "center") -> ElementSet | None:
    """A set of ``size`` pairwise commuting elements avoiding the center.

    With ``exclude="identity"`` only the identity is avoided.  ``None`` means
    an exhaustive clique search proved that no such set exists.
    """
    if size < 1:
        raise ValueError("size must be at least 1")
    found = cliques.find_clique(_commuting_adjacency(G), size, _search_pool(G, exclude))
    return None if found is None else tuple(sorted(found))


def find_disjoint_commuting_subsets(
    G: FiniteGroup, size: int, count: int, exclude: str = "center"
) -> list[ElementSet] | None:
    if size < 1 or count < 1:
        raise ValueError("size and count must be at least 1")
    found = cliques.find_disjoint_cliques(_commuting_adjacency(G), size, count, _search_pool(G, exclude))
    return None if found is None else [tuple(sorted(s)) for s in found]


def max_abelian_subgroup_order(G: FiniteGroup) -> int:
    """A maximal commuting set is a subgroup, so this is a clique number."""
    return cliques.clique_number(_commuting_adjacency(G), (1 << G.order) - 1)


# -- isomorphism (small orders only) ---------------------------------------


def _generating_set(G: FiniteGroup) -> list[int]:
    gens: list[int] = []
    span = {0}
    by_order = sorted(range(G.order), key=lambda x: (-int(G.element_orders[x]), x))
    while len(span) < G.order:
        x = next(y for y in by_order if y not in span)
        gens.append(x)
        span = set(_closure(G, gens))
    return gens


def _closure(G: FiniteGroup, gens: Sequence[int]) -> list[int]:
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = int(G.table[x, g])
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def _extend_to_map(G: FiniteGroup, H: FiniteGroup, gens: Sequence[int], images: Sequence[int]) -> np.ndarray | None:
    phi = np.full(G.order, -1, dtype=np.int64)
    phi[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for g, h in zip(gens, images):
            y = int(G.table[x, g])
            img = int(H.table[phi[x], h])
            if phi[y] < 0:
                phi[y] = img
                queue.append(y)
            elif phi[y] != img:
                return None
    if len(set(phi.tolist())) != G.order:
        return None
    if not np.array_equal(phi[G.table], H.table[phi[:, None], phi[None, :]]):
        return None
    return phi


def _find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> np.ndarray | None:
    """Exhaustive generator-image search; practical up to order ~32."""
    if G.order != H.order:
        return None
    if sorted(G.element_orders.tolist()) != sorted(H.element_orders.tolist()):
        return None
    if len(center(G)) != len(center(H)):
        return None
    gens = _generating_set(G)
    pools = [[h for h in range(H.order) if H.element_orders[h] == G.element_orders[g]] for g in gens]
    for images in _cartesian(*pools):
        phi = _extend_to_map(G, H, gens, images)
        if phi is not None:
            return phi
    return None


def _is_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return _find_isomorphism(G, H) is not None
