# ==============================================================================
# exceptions.py — algraphs Exception Definitions
# ==============================================================================
# Purpose: Define custom exceptions for algebra, graph and verification errors
# Sections: Imports, Public exports, Exceptions
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

from typing import TYPE_CHECKING

# Internal ----------------------------------------------------------------------
if TYPE_CHECKING:
    from ..verify.claims import ClaimResult


# ==============================================================================
# Public exports
# ==============================================================================
__all__ = [
    "AlgraphsException",
    "InputError",
    "ResourceLimitExceeded",
    "ClaimFalsified",
]


# ==============================================================================
# Exceptions
# ==============================================================================


class AlgraphsException(Exception):
    """Base class for all exceptions in algraphs."""


class InputError(AlgraphsException):
    """
    Exception raised when the caller hands over something malformed,
    e.g. an element index out of range, a non-Latin table or a bad algebra file.
    """

    message: str
    path: str | None
    """Location of the offending value inside a document, if any."""

    def __init__(self, message: str, path: str | None = None):
        self.message = message
        self.path = path
        super().__init__(f"{message} (at {path})" if path else message)


class ResourceLimitExceeded(AlgraphsException):
    """Exception raised when a search hits one of the configured caps."""

    message: str
    limit: str
    """Name of the `SearchLimits` field that was exceeded."""
    value: int

    def __init__(self, limit: str, value: int, message: str | None = None):
        self.limit = limit
        self.value = value
        self.message = message or f"search cap {limit}={value} exceeded"
        super().__init__(self.message)


class ClaimFalsified(AlgraphsException):
    """Exception raised in fail-fast verification when a claim does not hold."""

    claim_result: "ClaimResult"
    """The result data of the claim that failed."""

    def __init__(self, claim_result: "ClaimResult"):
        self.claim_result = claim_result
        super().__init__(
            f"Claim {claim_result.claim} falsified on {claim_result.algebra}"
        )
