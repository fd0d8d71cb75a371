import logging

from algraphs.verify.hooks import HookContext, HookRegistry, global_hooks


def test_hooks_fire_in_registration_order():
    registry = HookRegistry()
    calls = []
    registry.register_claim_start(lambda ctx, data: calls.append(("first", ctx.claim, data)))
    registry.register_claim_start(lambda ctx, data: calls.append(("second", ctx.claim, data)))
    context = HookContext("spanning").with_claim("C6", "power_within_enhanced")
    registry.run_claim_start(context, "payload")
    assert calls == [
        ("first", "power_within_enhanced", "payload"),
        ("second", "power_within_enhanced", "payload"),
    ]


def test_context_carries_suite_and_metadata():
    context = HookContext("zero_divisor", metadata={"family": "groups"})
    instance = context.with_claim("S3", "enhanced_from_power_digraph")
    assert (instance.suite, instance.algebra, instance.claim) == ("zero_divisor", "S3", "enhanced_from_power_digraph")
    assert instance.metadata == {"family": "groups"}
    assert HookContext("x").metadata == {}


def test_failing_hook_is_logged_and_routed_to_error_hooks(caplog):
    registry = HookRegistry()
    errors = []
    after = []

    def explode(ctx, data):
        raise RuntimeError("boom")

    registry.register_suite_end(explode)
    registry.register_suite_end(lambda ctx, data: after.append(data))
    registry.register_error(lambda ctx, error: errors.append(str(error)))
    with caplog.at_level(logging.WARNING, logger="algraphs"):
        registry.run_suite_end(HookContext("spanning"), {"total": 1})
    assert errors == ["boom"]
    assert after == [{"total": 1}]
    assert "[HOOK ERROR]" in caplog.text


def test_raising_error_hook_does_not_recurse():
    registry = HookRegistry()

    def explode(ctx, error):
        raise RuntimeError("again")

    registry.register_error(explode)
    registry.run_error(HookContext("spanning"), ValueError("first"))


def test_global_registry_has_logging_defaults():
    assert global_hooks._suite_start_hooks
    assert global_hooks._claim_end_hooks
    assert global_hooks._error_hooks
