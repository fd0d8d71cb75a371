# ==============================================================================
# runner.py — Run a suite over a family of algebras
# ==============================================================================
# Purpose: Check every applicable claim of a suite on every algebra of a
#          family and collect the outcomes into a verification report.
# Sections: Imports, Public exports, Runner, Exit Codes
# ==============================================================================

# ==============================================================================
# Imports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

# Internal ----------------------------------------------------------------------
from ..core.exceptions import ClaimFalsified, ResourceLimitExceeded
from ..core.settings import SearchLimits, resolve_limits
from ..payloads.reports import InstanceRecord, VerificationReport
from .catalog import DEFAULT_MAX_ORDER, Family, catalog
from .hooks import HookContext, HookRegistry, global_hooks
from .suites import suite_claims

# ==============================================================================
# Public exports
# ==============================================================================
__all__ = [
    "EXIT_OK",
    "EXIT_FAILED",
    "EXIT_USAGE",
    "EXIT_RESOURCE",
    "run_suite",
    "report_exit_code",
]


# ==============================================================================
# Runner
# ==============================================================================

def run_suite(
    suite: str,
    family: Family = "groups",
    max_order: int | None = None,
    *,
    limits: SearchLimits | None = None,
    fail_fast: bool = False,
    include_a5: bool = False,
    hooks: HookRegistry = global_hooks,
) -> VerificationReport:
    """
    Check each claim of `suite` on each algebra of `family` it applies to.

    Algebras are visited in catalog order and claims in suite order. A search
    cap reached while checking one instance is recorded as an `error` outcome
    and the run moves on.

    Raises:
        InputError: For an unknown suite or family.
        ResourceLimitExceeded: If the requested catalog is beyond its cap.
        ClaimFalsified: On the first failure when `fail_fast` is set.
    """
    limits = resolve_limits(limits)
    claims = suite_claims(suite)
    order = DEFAULT_MAX_ORDER.get(family, 0) if max_order is None else max_order
    algebras = catalog(family, order, include_a5)

    context = HookContext(suite, metadata={"family": family, "max_order": order})
    hooks.run_suite_start(context, {"family": family, "max_order": order, "algebras": len(algebras)})

    records: list[InstanceRecord] = []
    for algebra in algebras:
        for c in claims:
            if not c.applies_to(algebra):
                continue
            instance = context.with_claim(algebra.name, c.get_name())
            hooks.run_claim_start(instance, algebra)
            try:
                result = c.run(algebra, limits)
            except ResourceLimitExceeded as e:
                hooks.run_error(instance, e)
                records.append(
                    InstanceRecord(
                        algebra=algebra.name,
                        claim=c.get_name(),
                        outcome="error",
                        witness={"limit": e.limit, "value": e.value, "message": e.message},
                    )
                )
                continue
            hooks.run_claim_end(instance, result)
            records.append(result.to_record())
            if fail_fast and result.falsified:
                raise ClaimFalsified(result)

    report = VerificationReport.assemble(suite, family, order, records)
    hooks.run_suite_end(context, report.summary)
    return report


# ==============================================================================
# Exit Codes
# ==============================================================================

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def report_exit_code(report: VerificationReport) -> int:
    """1 if any claim failed, else 3 if any instance hit a cap, else 0."""
    if report.summary.failed:
        return EXIT_FAILED
    if report.summary.errors:
        return EXIT_RESOURCE
    return EXIT_OK
