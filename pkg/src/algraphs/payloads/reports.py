# ==============================================================================
# reports.py — Report models emitted by the CLI
# ==============================================================================
# Purpose: Define the structured verification report emitted by the verify
#          command (one record per (algebra, claim) and a summary of counts),
#          and the records printed by classify and invariant.
# ==============================================================================

from __future__ import annotations

from typing import Any, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing_extensions import Self

# ==============================================================================
# Report Models
# ==============================================================================

Outcome = Literal["pass", "fail", "error"]


class InstanceRecord(BaseModel):
    """Outcome of checking one claim on one algebra."""
    model_config = ConfigDict(extra="forbid")

    algebra: str = Field(..., description="Name of the algebra checked.")
    claim: str = Field(..., description="Identifier of the claim.")
    outcome: Outcome = Field(..., description="pass, fail, or error when a search cap was hit.")
    witness: Optional[Any] = Field(None, description="Counterexample data; always present on fail.")

    @model_validator(mode="after")
    def _failures_carry_witness(self) -> Self:
        if self.outcome != "pass" and self.witness is None:
            raise ValueError(f"{self.outcome} record for {self.claim} on {self.algebra} has no witness")
        return self


class ReportSummary(BaseModel):
    total: int = 0
    passed: int = 0
    failed: int = 0
    errors: int = 0


class VerificationReport(BaseModel):
    """Report of one suite run, instances sorted by algebra name then claim."""
    model_config = ConfigDict(extra="forbid")

    suite: str
    family: str
    max_order: int
    instances: List[InstanceRecord] = Field(default_factory=list)
    summary: ReportSummary = Field(default_factory=ReportSummary)

    @model_validator(mode="after")
    def _summary_matches(self) -> Self:
        counts = ReportSummary(
            total=len(self.instances),
            passed=sum(r.outcome == "pass" for r in self.instances),
            failed=sum(r.outcome == "fail" for r in self.instances),
            errors=sum(r.outcome == "error" for r in self.instances),
        )
        if self.summary != counts and self.summary != ReportSummary():
            raise ValueError("summary counts do not match the instance list")
        self.summary = counts
        return self

    @classmethod
    def assemble(cls, suite: str, family: str, max_order: int, records: List[InstanceRecord]) -> VerificationReport:
        ordered = sorted(records, key=lambda r: (r.algebra, r.claim))
        return cls(suite=suite, family=family, max_order=max_order, instances=ordered)

    @property
    def all_passed(self) -> bool:
        return self.summary.failed == 0 and self.summary.errors == 0

    def failures(self) -> List[InstanceRecord]:
        return [r for r in self.instances if r.outcome != "pass"]


# ==============================================================================
# Analysis Records
# ==============================================================================

class ClassVerdictRecord(BaseModel):
    """Verdict of one graph-class test, with the forbidden configuration on failure."""
    model_config = ConfigDict(extra="forbid")

    graph_class: str
    verdict: bool
    configuration: Optional[str] = Field(None, description="Name of the forbidden induced subgraph found.")
    witness: List[str] = Field(default_factory=list, description="Vertex labels of that subgraph.")
    certificate: dict[str, Any] = Field(default_factory=dict)


class InvariantRecord(BaseModel):
    algebra: str
    graph: str
    name: str
    value: Optional[int] = Field(None, description="None for an infinite diameter.")
    bound: Literal["exact", "at_least", "infinite"] = "exact"
