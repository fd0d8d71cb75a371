# ==============================================================================
# __init__.py — Structured documents read and written by algraphs
# ==============================================================================
# Purpose: Collect the pydantic models for algebra files, graph and complex
#          exports, and verification reports.
# ==============================================================================

from .documents import (
    AlgebraDocument,
    ComplexDocument,
    EdgeListDocument,
    OperationDocument,
    dump_algebra,
    load_algebra,
    parse_document,
)
from .reports import ClassVerdictRecord, InstanceRecord, InvariantRecord, ReportSummary, VerificationReport

# ==============================================================================
# Public exports
# ==============================================================================

__all__ = [
    "AlgebraDocument",
    "ComplexDocument",
    "EdgeListDocument",
    "OperationDocument",
    "dump_algebra",
    "load_algebra",
    "parse_document",
    "ClassVerdictRecord",
    "InstanceRecord",
    "InvariantRecord",
    "ReportSummary",
    "VerificationReport",
]
