"""Shipped catalog of small groups, rebuilt and validated on load.

Entries live in ``data/catalog.json``.  Each one is a permutation-generator
set, a cyclic-kernel semidirect product ``(n, m, t)``, or a direct product
of earlier entries.
"""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .groups import (
    FiniteGroup,
    GroupError,
    check_axioms,
    direct_product,
    from_permutation_generators,
    semidirect_product_cyclic,
)
from .io import load_group_file


class CatalogCorrupt(GroupError):
    pass


class UnknownGroup(KeyError):
    pass


def _data_dir() -> Path:
    return Path(str(resources.files("genuslab") / "data"))


def _build(entry: dict, built: dict[str, FiniteGroup]) -> FiniteGroup:
    recipe = entry["recipe"]
    name = entry["name"]
    if recipe == "permutations":
        return from_permutation_generators(entry["degree"], entry["generators"], name)
    if recipe == "semidirect":
        return semidirect_product_cyclic(entry["n"], entry["m"], entry["t"], name)
    if recipe == "product":
        factors = [built[f] for f in entry["factors"]]
        G = factors[0]
        for H in factors[1:]:
            G = direct_product(G, H)
        return FiniteGroup(G.table, name)
    raise CatalogCorrupt(f"{name}: unknown recipe {recipe!r}")


@lru_cache(maxsize=None)
def _load() -> tuple[tuple[str, FiniteGroup], ...]:
    entries = json.loads((_data_dir() / "catalog.json").read_text())
    built: dict[str, FiniteGroup] = {}
    for entry in entries:
        name = entry["name"]
        try:
            G = _build(entry, built)
            check_axioms(G.table)
        except (GroupError, KeyError) as exc:
            raise CatalogCorrupt(f"catalog entry {name!r} is invalid: {exc}") from exc
        if G.order != entry["order"]:
            raise CatalogCorrupt(f"catalog entry {name!r} has order {G.order}, expected {entry['order']}")
        built[name] = G
    return tuple(built.items())


def catalog() -> list[tuple[str, FiniteGroup]]:
    return list(_load())


def names() -> list[str]:
    return [name for name, _ in _load()]


def lookup(name: str) -> FiniteGroup:
    for key, G in _load():
        if key == name:
            return G
    raise UnknownGroup(f"unknown catalog group {name!r}; available: {', '.join(names())}")


def order32_paths() -> list[Path]:
    return sorted((_data_dir() / "order32").glob("*.json"))


@lru_cache(maxsize=None)
def _order32() -> tuple[FiniteGroup, ...]:
    return tuple(load_group_file(p) for p in order32_paths())


def order32_groups() -> list[FiniteGroup]:
    """Shipped sample of non-abelian groups of order 32 (not all 51 types)."""
    return list(_order32())
