import pytest

from algraphs.core.builders import cyclic
from algraphs.core.exceptions import InputError
from algraphs.core.settings import DEFAULT_LIMITS, SearchLimits
from algraphs.verify.claims import Claim, ClaimOutput, claim


@claim
def always_holds(algebra, limits):
    return ClaimOutput.ok({"size": algebra.size})


@claim(name="never_holds", applies=lambda a: a.size > 2)
def never_holds_on_big(algebra, limits):
    return ClaimOutput.fail({"size": algebra.size})


def test_bare_decorator_uses_the_function_name(c6):
    assert isinstance(always_holds, Claim)
    assert always_holds.get_name() == "always_holds"
    result = always_holds.run(c6)
    assert not result.falsified
    assert result.algebra == "C6"
    assert result.to_record().outcome == "pass"
    assert result.to_record().witness == {"size": 6}


def test_named_claim_with_a_hypothesis(c6):
    assert never_holds_on_big.get_name() == "never_holds"
    assert never_holds_on_big.applies_to(c6)
    result = never_holds_on_big.run(c6)
    assert result.falsified
    assert result.to_record().outcome == "fail"


def test_hypothesis_filters_small_algebras():
    assert not never_holds_on_big.applies_to(cyclic(2))


def test_limits_are_resolved(c6):
    seen = []

    def record(algebra, limits):
        seen.append(limits)
        return ClaimOutput.ok()

    Claim(record).run(c6)
    Claim(record).run(c6, SearchLimits(max_spread=2))
    assert seen[0] is DEFAULT_LIMITS
    assert seen[1].max_spread == 2


def test_failure_without_witness_is_rejected(c6):
    broken = Claim(lambda a, lim: ClaimOutput(None, True), name="broken")
    with pytest.raises(InputError):
        broken.run(c6)


def test_claim_function_must_be_callable(c6):
    with pytest.raises(InputError):
        Claim(claim_function=None).run(c6)  # type: ignore[arg-type]
