import pytest

from algraphs.core.exceptions import ClaimFalsified, InputError, ResourceLimitExceeded
from algraphs.core.settings import SearchLimits
from algraphs.verify import suites
from algraphs.verify.claims import Claim, ClaimOutput
from algraphs.verify.hooks import HookRegistry
from algraphs.verify.runner import (
    EXIT_FAILED,
    EXIT_OK,
    EXIT_RESOURCE,
    report_exit_code,
    run_suite,
)


def fails_on_c4(algebra, limits):
    if algebra.name == "C4":
        return ClaimOutput.fail({"algebra": algebra.name})
    return ClaimOutput.ok()


@pytest.fixture
def broken_suite(monkeypatch):
    monkeypatch.setitem(suites.SUITES, "broken", (Claim(fails_on_c4, name="fails_on_c4"),))
    return "broken"


# ==============================================================================
# Passing Runs
# ==============================================================================

def test_spanning_suite_on_small_groups():
    report = run_suite("spanning", "groups", 6, hooks=HookRegistry())
    assert report.all_passed
    assert report.summary.total == len(report.instances) > 0
    assert report.max_order == 6
    keys = [(r.algebra, r.claim) for r in report.instances]
    assert keys == sorted(keys)
    assert report_exit_code(report) == EXIT_OK


@pytest.mark.parametrize(
    "suite, family, max_order",
    [
        ("mo_equivalence", "groups", 12),
        ("digraph_equality", "groups", 8),
        ("zero_divisor", "semigroups", 2),
        ("skeleton", "groups", 8),
        ("p4_lemma", "groups", 8),
        ("sunflower", "independence", 9),
        ("independence_structure", "independence", 9),
    ],
)
def test_suites_pass_on_small_families(suite, family, max_order):
    report = run_suite(suite, family, max_order, hooks=HookRegistry())
    assert report.failures() == []


def test_default_order_comes_from_the_family(broken_suite):
    report = run_suite(broken_suite, "semigroups", hooks=HookRegistry())
    assert report.max_order == 3


def test_unknown_suite():
    with pytest.raises(InputError):
        run_suite("nonsense", hooks=HookRegistry())


def test_catalog_beyond_its_cap():
    with pytest.raises(ResourceLimitExceeded):
        run_suite("spanning", "groups", 65, hooks=HookRegistry())


# ==============================================================================
# Failures and Errors
# ==============================================================================

def test_failures_are_recorded(broken_suite):
    report = run_suite(broken_suite, "groups", 5, hooks=HookRegistry())
    assert [r.algebra for r in report.failures()] == ["C4"]
    assert report.failures()[0].witness == {"algebra": "C4"}
    assert report.summary.failed == 1
    assert report_exit_code(report) == EXIT_FAILED


def test_fail_fast_raises_on_the_first_failure(broken_suite):
    with pytest.raises(ClaimFalsified) as info:
        run_suite(broken_suite, "groups", 5, fail_fast=True, hooks=HookRegistry())
    assert info.value.claim_result.algebra == "C4"


def test_caps_become_error_records():
    report = run_suite("spanning", "groups", 3, limits=SearchLimits(max_graph_order=2), hooks=HookRegistry())
    errors = [r for r in report.instances if r.outcome == "error"]
    assert errors
    assert {r.algebra for r in errors} == {"C3"}
    assert errors[0].witness["limit"] == "max_graph_order"
    assert errors[0].witness["value"] == 2
    assert report.summary.failed == 0
    assert report_exit_code(report) == EXIT_RESOURCE


# ==============================================================================
# Hooks
# ==============================================================================

def test_hooks_see_the_run(broken_suite):
    registry = HookRegistry()
    events = []
    registry.register_suite_start(lambda ctx, data: events.append(("start", ctx.suite, data["algebras"])))
    registry.register_claim_start(lambda ctx, algebra: events.append(("claim", ctx.algebra)))
    registry.register_claim_end(lambda ctx, result: events.append(("done", result.falsified)))
    registry.register_suite_end(lambda ctx, summary: events.append(("end", summary.failed)))

    run_suite(broken_suite, "groups", 4, hooks=registry)

    assert events[0] == ("start", "broken", 5)
    assert ("claim", "C4") in events
    assert events.count(("done", True)) == 1
    assert events[-1] == ("end", 1)


def test_error_hooks_see_caps():
    registry = HookRegistry()
    errors = []
    registry.register_error(lambda ctx, error: errors.append((ctx.algebra, error.limit)))
    run_suite("spanning", "groups", 3, limits=SearchLimits(max_graph_order=2), hooks=registry)
    assert errors and all(e == ("C3", "max_graph_order") for e in errors)
