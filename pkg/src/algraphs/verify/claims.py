# ==============================================================================
# claims.py — Checkable claims and the decorator that defines them
# ==============================================================================
# Purpose: Wrap a predicate over one algebra as a named claim whose run yields
#          a result with a counterexample witness when the claim fails.
# Sections: Imports, Public exports, Data Classes, Claim, Type Aliases, Decorators
# ==============================================================================

# ==============================================================================
# Imports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, overload

# Internal ----------------------------------------------------------------------
from ..core.algebra import FiniteAlgebra
from ..core.exceptions import InputError
from ..core.settings import SearchLimits, resolve_limits
from ..payloads.reports import InstanceRecord

# ==============================================================================
# Public exports
# ==============================================================================
__all__ = [
    "ClaimOutput",
    "ClaimResult",
    "Claim",
    "claim",
]


# ==============================================================================
# Data Classes
# ==============================================================================

@dataclass
class ClaimOutput:
    """The output of a claim function.

    Attributes:
        witness: JSON-friendly data explaining the verdict; required when falsified.
        falsified: If True, the claim does not hold on the algebra.
    """
    witness: Any
    falsified: bool

    @classmethod
    def ok(cls, witness: Any = None) -> ClaimOutput:
        return cls(witness, False)

    @classmethod
    def fail(cls, witness: Any) -> ClaimOutput:
        return cls(witness, True)


@dataclass
class ClaimResult:
    """Container for the result of running one claim on one algebra."""
    claim: str
    algebra: str
    output: ClaimOutput

    @property
    def falsified(self) -> bool:
        return self.output.falsified

    def to_record(self) -> InstanceRecord:
        return InstanceRecord(
            algebra=self.algebra,
            claim=self.claim,
            outcome="fail" if self.falsified else "pass",
            witness=self.output.witness,
        )


# ==============================================================================
# Type Aliases
# ==============================================================================

ClaimFunction = Callable[[FiniteAlgebra, SearchLimits], ClaimOutput]
Applicability = Callable[[FiniteAlgebra], bool]


# ==============================================================================
# Claim
# ==============================================================================

@dataclass
class Claim:
    """A statement about a single algebra, checked by `claim_function`."""

    claim_function: ClaimFunction
    name: str | None = None
    applies: Applicability | None = None
    """Hypothesis filter; algebras it rejects are not checked at all."""

    def get_name(self) -> str:
        return self.name or self.claim_function.__name__

    def applies_to(self, algebra: FiniteAlgebra) -> bool:
        return self.applies is None or self.applies(algebra)

    def run(self, algebra: FiniteAlgebra, limits: SearchLimits | None = None) -> ClaimResult:
        if not callable(self.claim_function):
            raise InputError(
                f"Claim function must be callable, got: {type(self.claim_function)}"
            )
        output = self.claim_function(algebra, resolve_limits(limits))
        if output.falsified and output.witness is None:
            raise InputError(f"claim {self.get_name()} failed on {algebra.name} without a witness")
        return ClaimResult(claim=self.get_name(), algebra=algebra.name, output=output)


# ==============================================================================
# Decorators
# ==============================================================================

@overload
def claim(func: ClaimFunction) -> Claim: ...


@overload
def claim(
    *, name: str | None = None, applies: Applicability | None = None
) -> Callable[[ClaimFunction], Claim]: ...


def claim(
    func: ClaimFunction | None = None,
    *,
    name: str | None = None,
    applies: Applicability | None = None,
) -> Claim | Callable[[ClaimFunction], Claim]:
    """Decorator to define a claim from a function."""
    def decorator(f: ClaimFunction) -> Claim:
        return Claim(claim_function=f, name=name, applies=applies)

    if func is not None:
        return decorator(func)
    return decorator
