# ==============================================================================
# __init__.py — Theorem verification over algebra catalogs
# ==============================================================================
# Purpose: Expose claims, suites, the algebra catalogs, the lifecycle hooks and
#          the suite runner.
# ==============================================================================

from .catalog import DEFAULT_MAX_ORDER, FAMILIES, catalog, group_catalog, independence_catalog, semigroup_catalog
from .claims import Claim, ClaimOutput, ClaimResult, claim
from .hooks import HookContext, HookRegistry, global_hooks
from .runner import report_exit_code, run_suite
from .suites import SUITE_IDS, SUITES, suite_claims

# ==============================================================================
# Public exports
# ==============================================================================

__all__ = [
    "DEFAULT_MAX_ORDER",
    "FAMILIES",
    "catalog",
    "group_catalog",
    "independence_catalog",
    "semigroup_catalog",
    "Claim",
    "ClaimOutput",
    "ClaimResult",
    "claim",
    "HookContext",
    "HookRegistry",
    "global_hooks",
    "report_exit_code",
    "run_suite",
    "SUITE_IDS",
    "SUITES",
    "suite_claims",
]
