# ==============================================================================
# hooks.py — Hook system for verification lifecycle events
# ==============================================================================
# Purpose: Define context, protocols, and registry to manage hook execution
#          around suites and individual claim checks.
# Sections: Imports, Public API, Context, Protocols, Registry, Defaults
# ==============================================================================

# ==============================================================================
# Imports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

import traceback
from typing import Any, Dict, List, Optional, Protocol, Union

# Internal ----------------------------------------------------------------------
from ..core.logger import logger

# ==============================================================================
# Public API
# ==============================================================================

__all__ = [
    "HookContext",
    "SuiteHook",
    "ClaimHook",
    "ResultHook",
    "ErrorHook",
    "HookRegistry",
    "global_hooks",
]


# ==============================================================================
# Context
# ==============================================================================

class HookContext:
    """
    Context object passed to each hook, describing where in a run it fires.

    Args:
        suite: Identifier of the running suite.
        algebra: Name of the algebra being checked, if any.
        claim: Name of the claim being checked, if any.
        metadata: Optional dictionary for additional hook metadata.
    """

    def __init__(
        self,
        suite: str,
        algebra: Optional[str] = None,
        claim: Optional[str] = None,
        metadata: Optional[Dict[str, Any]] = None,
    ):
        self.suite = suite
        self.algebra = algebra
        self.claim = claim
        self.metadata = metadata or {}

    def with_claim(self, algebra: str, claim: str) -> HookContext:
        """Create a new context for one (algebra, claim) instance."""
        return HookContext(
            suite=self.suite,
            algebra=algebra,
            claim=claim,
            metadata=self.metadata,
        )


# ==============================================================================
# Protocols
# ==============================================================================

class SuiteHook(Protocol):
    def __call__(self, context: HookContext, input_data: Any) -> None: ...


class ClaimHook(Protocol):
    def __call__(self, context: HookContext, input_data: Any) -> None: ...


class ResultHook(Protocol):
    def __call__(self, context: HookContext, result: Any) -> None: ...


class ErrorHook(Protocol):
    def __call__(self, context: HookContext, error: Exception) -> None: ...


# ==============================================================================
# Registry
# ==============================================================================

class HookRegistry:
    """
    Registry for suite/claim lifecycle hooks.

    Allows registering multiple hooks per lifecycle event and executing them safely.
    """

    def __init__(self):
        self._suite_start_hooks: List[SuiteHook] = []
        self._suite_end_hooks: List[ResultHook] = []
        self._claim_start_hooks: List[ClaimHook] = []
        self._claim_end_hooks: List[ResultHook] = []
        self._error_hooks: List[ErrorHook] = []

    def register_suite_start(self, hook: SuiteHook) -> None:
        """Register a hook to run when a suite starts."""
        self._suite_start_hooks.append(hook)

    def register_suite_end(self, hook: ResultHook) -> None:
        """Register a hook to run when a suite ends."""
        self._suite_end_hooks.append(hook)

    def register_claim_start(self, hook: ClaimHook) -> None:
        """Register a hook to run before a claim is checked on an algebra."""
        self._claim_start_hooks.append(hook)

    def register_claim_end(self, hook: ResultHook) -> None:
        """Register a hook to run after a claim is checked on an algebra."""
        self._claim_end_hooks.append(hook)

    def register_error(self, hook: ErrorHook) -> None:
        """Register a hook to run when an error occurs."""
        self._error_hooks.append(hook)

    def run_suite_start(self, context: HookContext, input_data: Any) -> None:
        self._run_hooks(self._suite_start_hooks, context, input_data)

    def run_suite_end(self, context: HookContext, result: Any) -> None:
        self._run_hooks(self._suite_end_hooks, context, result)

    def run_claim_start(self, context: HookContext, input_data: Any) -> None:
        self._run_hooks(self._claim_start_hooks, context, input_data)

    def run_claim_end(self, context: HookContext, result: Any) -> None:
        self._run_hooks(self._claim_end_hooks, context, result)

    def run_error(self, context: HookContext, error: Exception) -> None:
        self._run_hooks(self._error_hooks, context, error, is_error=True)

    def _run_hooks(
        self,
        hooks: List[Union[SuiteHook, ClaimHook, ResultHook, ErrorHook]],
        context: HookContext,
        data: Any,
        is_error: bool = False,
    ) -> None:
        for hook in hooks:
            try:
                hook(context, data)
            except Exception as e:
                logger.warning(
                    f"[HOOK ERROR] Exception in hook for suite '{context.suite}', "
                    f"algebra '{context.algebra}', claim '{context.claim}': {e}\n{traceback.format_exc()}"
                )
                # an error hook that raises is not fed back to the error hooks
                if not is_error:
                    self.run_error(context, e)


# ==============================================================================
# Defaults
# ==============================================================================

global_hooks = HookRegistry()


def default_log_suite_start(context: HookContext, input_data: Any) -> None:
    logger.info(f"[SUITE START] {context.suite} | {input_data}")


def default_log_suite_end(context: HookContext, result: Any) -> None:
    logger.info(f"[SUITE END] {context.suite} | {result}")


def default_log_claim_end(context: HookContext, result: Any) -> None:
    if getattr(result, "falsified", False):
        logger.warning(
            f"[CLAIM FAIL] {context.claim} on {context.algebra} (Suite: {context.suite}) | witness: {result.output.witness}"
        )
    else:
        logger.debug(f"[CLAIM PASS] {context.claim} on {context.algebra}")


def default_log_error(context: HookContext, error: Exception) -> None:
    logger.error(
        f"[ERROR] Suite '{context.suite}', algebra '{context.algebra}', claim '{context.claim}': {repr(error)}"
    )


# Register default hooks
global_hooks.register_suite_start(default_log_suite_start)
global_hooks.register_suite_end(default_log_suite_end)
global_hooks.register_claim_end(default_log_claim_end)
global_hooks.register_error(default_log_error)
