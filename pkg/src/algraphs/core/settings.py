# ==============================================================================
# settings.py — Search limits shared by every combinatorial search
# ==============================================================================
# Purpose: Hold the configurable caps (subset search, lattice size, graph orders)
#          so that desk-scale searches fail loudly instead of running forever.
# Sections: Imports, Public exports, SearchLimits, Defaults
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

from typing import Any

# Third-Party -------------------------------------------------------------------
from pydantic import BaseModel, ConfigDict, Field

# Internal ----------------------------------------------------------------------
from .exceptions import ResourceLimitExceeded

# ==============================================================================
# Public exports
# ==============================================================================
__all__ = ["SearchLimits", "DEFAULT_LIMITS", "resolve_limits"]


# ==============================================================================
# SearchLimits
# ==============================================================================

class SearchLimits(BaseModel):
    """Caps applied by the exact searches. Every field is a hard ceiling."""

    model_config = ConfigDict(frozen=True)

    max_subset_size: int = Field(6, ge=0, description="Largest subset tried by rank and generating-set searches.")
    max_lattice_size: int = Field(4096, ge=1, description="Largest subalgebra lattice materialized.")
    max_simplex_size: int = Field(8, ge=1, description="Largest simplex enumerated in a complex.")
    max_endomorphism_nodes: int = Field(2_000_000, ge=1, description="Backtracking nodes allowed in endomorphism search.")
    exhaustive_endomorphism_order: int = Field(6, ge=0, description="Algebras up to this order filter all n^n maps.")
    max_graph_order: int = Field(512, ge=1, description="Largest vertex count of a graph container.")
    max_class_order: int = Field(128, ge=1, description="Vertex cap for chordal/cograph/split/threshold recognition.")
    max_perfect_order: int = Field(64, ge=1, description="Vertex cap for the odd hole/antihole search.")
    max_clique_order: int = Field(96, ge=1, description="Vertex cap for clique and chromatic number.")
    max_matching_order: int = Field(256, ge=1, description="Vertex cap for the matching number.")
    max_spread_order: int = Field(128, ge=1, description="Vertex cap for the spread.")
    max_spread: int = Field(4, ge=1, description="Largest subset size tried by the spread search.")
    max_cyclic_clique_order: int = Field(300, ge=1, description="Largest n accepted by the cyclic clique function.")

    def clone(self, **kwargs: Any) -> SearchLimits:
        """
        Create a copy of the limits with optional updated fields.

        Args:
            **kwargs: Any field overrides.

        Returns:
            New SearchLimits instance.
        """
        return self.model_validate({**self.model_dump(), **kwargs})

    def require(self, limit: str, value: int) -> None:
        """Raise `ResourceLimitExceeded` if `value` is above the named cap."""
        cap = getattr(self, limit)
        if value > cap:
            raise ResourceLimitExceeded(limit, cap, f"{limit}={cap} exceeded (needed {value})")


# ==============================================================================
# Defaults
# ==============================================================================

DEFAULT_LIMITS = SearchLimits()


def resolve_limits(limits: SearchLimits | None) -> SearchLimits:
    return DEFAULT_LIMITS if limits is None else limits
