"""Orientable genus, crosscap number and the combined surface verdict.

Genus is additive over blocks, so it is computed block by block (closed
forms for complete and complete bipartite blocks, search otherwise).  The
crosscap number is not additive, but Euler genus is: each non-planar block
is searched on its own and the crosscap follows from the summed block Euler
genera plus one unless some block attains its Euler genus non-orientably.
"""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from ..graphs import (
    SimpleGraph,
    blocks,
    complete_bipartite_parts,
    is_complete,
)
from .bounds import (
    connected_euler_genus_bound,
    connected_genus_bound,
    crosscap_formula_kmn,
    crosscap_formula_kn,
    genus_formula_kmn,
    genus_formula_kn,
)
from .planarity import is_planar
from .search import SearchTimeout, default_timeout, embeds_in_nonorientable, embeds_in_orientable


@dataclass(frozen=True)
class SurfaceVerdict:
    """Planarity, genus and crosscap of a graph.

    ``crosscap`` is 0 for planar graphs: the projective-plane family starts
    at one crosscap, so the value is reported as not applicable.  ``None``
    means the exact value was not computed (it exceeds the requested limit
    or the search timed out); the ``*_lower`` fields are always valid.
    """

    planar: bool
    genus: int | None
    genus_lower: int
    crosscap: int | None
    crosscap_lower: int
    euler_genus: int | None
    bounds_used: tuple[str, ...] = field(default=())
    crosscap_convention: str = "0 = planar (not applicable)"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["bounds_used"] = list(self.bounds_used)
        return d


class _Clock:
    def __init__(self, timeout: float | None):
        self.deadline = time.monotonic() + (default_timeout() if timeout is None else timeout)

    def left(self) -> float:
        remaining = self.deadline - time.monotonic()
        if remaining <= 0:
            raise SearchTimeout("surface computation ran out of time")
        return remaining


def _shape(g: SimpleGraph) -> str:
    if is_complete(g):
        return f"K{g.vertex_count}"
    parts = complete_bipartite_parts(g)
    if parts:
        return f"K{parts[0]},{parts[1]}"
    return f"graph(v={g.vertex_count}, e={g.edge_count})"


def _formula_genus(g: SimpleGraph) -> int | None:
    if g.vertex_count < 3 or g.edge_count == 0:
        return 0
    if is_complete(g):
        return genus_formula_kn(g.vertex_count)
    parts = complete_bipartite_parts(g)
    if parts and parts[0] >= 2:
        return genus_formula_kmn(*parts)
    return None


def _formula_crosscap(g: SimpleGraph) -> int | None:
    """Closed-form crosscap of a connected complete / complete bipartite graph (0 = planar)."""
    if g.vertex_count < 3 or g.edge_count == 0:
        return 0
    if is_complete(g):
        return crosscap_formula_kn(g.vertex_count)
    parts = complete_bipartite_parts(g)
    if parts and parts[0] >= 2:
        return crosscap_formula_kmn(*parts)
    return None


def _block_genus(block: SimpleGraph, cap: int | None, clock: _Clock, notes: list[str]) -> tuple[int | None, int]:
    """(exact genus or None when it exceeds ``cap``, lower bound)."""
    value = _formula_genus(block)
    if value is not None:
        if value > 0:
            notes.append(f"genus {_shape(block)} = {value} (closed form)")
        return value, value
    if is_planar(block)[0]:
        return 0, 0
    lower = max(1, connected_genus_bound(block.vertex_count, block.edge_count))
    k = lower
    while cap is None or k <= cap:
        try:
            if embeds_in_orientable(block, k, timeout=clock.left()):
                notes.append(f"genus {_shape(block)} = {k} (search, Euler bound {lower})")
                return k, k
        except SearchTimeout as exc:
            raise SearchTimeout(f"genus search timed out at genus {k}", lower_bound=k) from exc
        k += 1
    return None, k


def _genus(g: SimpleGraph, cap: int | None, clock: _Clock, notes: list[str]) -> tuple[int | None, int]:
    bd = blocks(g)
    work = []
    for b in bd.blocks:
        quick = _formula_genus(b)
        if quick is not None:
            work.append((b, quick))
        elif is_planar(b)[0]:
            work.append((b, 0))
        else:
            work.append((b, -max(1, connected_genus_bound(b.vertex_count, b.edge_count))))
    lower_total = sum(abs(x) for _, x in work)
    if cap is not None and lower_total > cap and any(x < 0 for _, x in work):
        notes.append(f"genus >= {lower_total} (block bounds) exceeds limit {cap}")
        return None, lower_total
    total = 0
    pending = lower_total
    for b, x in work:
        pending -= abs(x)
        if x >= 0:
            total += x
            if x > 0:
                notes.append(f"genus {_shape(b)} = {x} (closed form)")
            continue
        block_cap = None if cap is None else cap - total - pending
        try:
            value, lower = _block_genus(b, block_cap, clock, notes)
        except SearchTimeout as exc:
            raise SearchTimeout(str(exc), lower_bound=total + (exc.lower_bound or -x) + pending) from exc
        if value is None:
            return None, total + lower + pending
        total += value
    return total, total


def genus(g: SimpleGraph, timeout: float | None = None) -> int:
    """Orientable genus, summed over blocks.

    Raises :class:`SearchTimeout` (with ``lower_bound``) if a block search
    does not finish in time.
    """
    value, _ = _genus(g, None, _Clock(timeout), [])
    return value


def _euler_block_bound(comp: SimpleGraph) -> int:
    # Euler genus is additive over blocks, and each block needs at least its
    # closed-form or Euler-formula value
    total = 0
    for b in blocks(comp).blocks:
        g_val = _formula_genus(b)
        c_val = _formula_crosscap(b)
        if g_val is not None and c_val is not None:
            total += 0 if c_val == 0 else min(2 * g_val, c_val)
        else:
            total += connected_euler_genus_bound(b.vertex_count, b.edge_count)
    return total


def _connected_crosscap(comp: SimpleGraph, cap: int | None, clock: _Clock, notes: list[str]) -> tuple[int | None, int]:
    """Crosscap of a connected graph (0 = planar); None when above ``cap``."""
    value = _formula_crosscap(comp)
    if value is not None:
        if value > 0:
            notes.append(f"crosscap {_shape(comp)} = {value} (closed form)")
        return value, value
    if is_planar(comp)[0]:
        return 0, 0
    euler = connected_euler_genus_bound(comp.vertex_count, comp.edge_count)
    lower = max(1, euler, _euler_block_bound(comp))
    k = lower
    while cap is None or k <= cap:
        try:
            if embeds_in_nonorientable(comp, k, timeout=clock.left()):
                notes.append(f"crosscap {_shape(comp)} = {k} (search, lower bound {lower})")
                return k, k
        except SearchTimeout as exc:
            raise SearchTimeout(f"crosscap search timed out at {k} crosscaps", lower_bound=k) from exc
        k += 1
    return None, k


@dataclass
class _Part:
    genus: int | None
    genus_lower: int
    crosscap: int | None
    crosscap_lower: int


def _crosscap(g: SimpleGraph, cap: int | None, clock: _Clock, notes: list[str]) -> tuple[int | None, int]:
    # Euler genus adds up over blocks (hence over components too), and every
    # cycle lies inside one block, so an embedding is non-orientable only if
    # some block is embedded non-orientably.  One extra crosscap is needed
    # unless some block reaches its Euler genus non-orientably.
    hard = [b for b in blocks(g).blocks if b.edge_count > 0 and not is_planar(b)[0]]
    if not hard:
        return 0, 0
    if len(hard) == 1:
        return _connected_crosscap(hard[0], cap, clock, notes)

    parts = []
    for b in hard:
        g_cap = None if cap is None else cap // 2
        gv, gl = _genus(b, g_cap, clock, [])
        cv, cl = _connected_crosscap(b, cap, clock, notes)
        parts.append(_Part(gv, gl, cv, cl))
    eg_total = 0
    attained = False
    exact = True
    for p in parts:
        if p.genus is not None and p.crosscap is not None:
            eg_total += min(2 * p.genus, p.crosscap)
            attained |= p.crosscap <= 2 * p.genus
        elif p.crosscap is not None:  # genus above cap//2, so crosscap < 2*genus
            eg_total += p.crosscap
            attained = True
        elif p.genus is not None and cap is not None and cap >= 2 * p.genus:
            # crosscap above cap >= 2*genus, so it is 2*genus + 1
            eg_total += 2 * p.genus
        else:
            eg_total += min(2 * p.genus_lower, p.crosscap_lower)
            exact = False
    value = eg_total + (0 if attained else 1)
    if not exact:
        notes.append(f"crosscap >= {eg_total} (block Euler genera) exceeds limit {cap}")
        return None, eg_total
    notes.append(
        f"crosscap = {value}: block Euler genera sum to {eg_total}"
        + ("" if attained else ", none attained non-orientably (+1)")
    )
    return value, value


def crosscap(g: SimpleGraph, timeout: float | None = None) -> int:
    """Crosscap (non-orientable genus); 0 stands for a planar graph."""
    value, _ = _crosscap(g, None, _Clock(timeout), [])
    return value


def surface_verdict(g: SimpleGraph, limit: int | None = None, timeout: float | None = None) -> SurfaceVerdict:
    """Planarity, genus and crosscap of ``g``.

    With ``limit`` set, exact values are only pursued up to ``limit``; larger
    ones are reported through their lower bounds alone.  Raises
    :class:`SearchTimeout` when a search exceeds ``timeout``.
    """
    clock = _Clock(timeout)
    notes: list[str] = []
    planar = is_planar(g)[0]
    if planar:
        return SurfaceVerdict(True, 0, 0, 0, 0, 0, ("planar (left-right test)",))
    gv, gl = _genus(g, limit, clock, notes)
    cv, cl = _crosscap(g, limit, clock, notes)
    eg = None
    if gv is not None and cv is not None:
        eg = min(2 * gv, cv)
    elif cv is not None and cv <= 2 * gl:
        eg = cv
    return SurfaceVerdict(False, gv, max(gl, 1), cv, max(cl, 1), eg, tuple(dict.fromkeys(notes)))
