"""Planarity, genus and crosscap of small graphs."""
from __future__ import annotations

from .bounds import (
    DomainError,
    crosscap_formula_kmn,
    crosscap_formula_kn,
    crosscap_lower_bound,
    genus_formula_kmn,
    genus_formula_kn,
    genus_lower_bound,
)
from .planarity import KuratowskiWitness, is_planar
from .search import Embedding, SearchTimeout, embeds_in_nonorientable, embeds_in_orientable, find_embedding
from .surface import SurfaceVerdict, crosscap, genus, surface_verdict

__all__ = [
    "DomainError",
    "Embedding",
    "KuratowskiWitness",
    "SearchTimeout",
    "SurfaceVerdict",
    "crosscap",
    "crosscap_formula_kmn",
    "crosscap_formula_kn",
    "crosscap_lower_bound",
    "embeds_in_nonorientable",
    "embeds_in_orientable",
    "find_embedding",
    "genus",
    "genus_formula_kmn",
    "genus_formula_kn",
    "genus_lower_bound",
    "is_planar",
    "surface_verdict",
]
