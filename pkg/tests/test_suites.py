import pytest

from algraphs.core.builders import alternating, cyclic, dihedral, direct_product, symmetric
from algraphs.core.exceptions import InputError
from algraphs.verify import suites
from algraphs.verify.suites import SUITE_IDS, SUITES, suite_claims


def run_claim(claim_name: str, algebra):
    found = next(c for c in suite_claims("all") if c.get_name() == claim_name)
    assert found.applies_to(algebra)
    return found.run(algebra)


# ==============================================================================
# Registry
# ==============================================================================

def test_suite_ids():
    assert SUITE_IDS[-1] == "all"
    assert set(SUITE_IDS[:-1]) == set(SUITES)
    assert len(suite_claims("all")) == sum(len(claims) for claims in SUITES.values())
    with pytest.raises(InputError):
        suite_claims("nonsense")


def test_claim_names_are_unique():
    claim_names = [c.get_name() for c in suite_claims("all")]
    assert len(claim_names) == len(set(claim_names))


# ==============================================================================
# Hypotheses
# ==============================================================================

def test_hypotheses(klein, volkov, loop5):
    assert suites._is_group(klein)
    assert not suites._is_group(volkov)
    assert suites._is_cyclic(cyclic(5))
    assert not suites._is_cyclic(klein)
    assert suites._is_quasigroup_unary(loop5)
    assert not suites._is_quasigroup_unary(klein)
    assert suites._is_coprime_pair(direct_product(cyclic(2), cyclic(3)))
    assert not suites._is_coprime_pair(klein)


def test_nonabelian_simple_detection():
    assert suites._is_nonabelian_simple(alternating(5))
    assert not suites._is_nonabelian_simple(symmetric(3))
    assert not suites._is_nonabelian_simple(alternating(4))
    assert not suites._is_nonabelian_simple(cyclic(5))


# ==============================================================================
# Single Claims
# ==============================================================================

@pytest.mark.parametrize(
    "claim_name",
    [
        "power_within_enhanced",
        "power_within_intersection_power",
        "independence_within_power_complement",
        "rank_within_enhanced_complement",
        "zero_divisor_graph_is_enhanced_complement",
        "enhanced_from_power_digraph",
        "independence_skeleton",
        "strong_independence_skeleton",
        "strong_simplices_are_independent",
        "power_graph_perfect",
        "power_graph_is_preorder_comparability",
        "power_graph_hereditary",
        "strict_enhanced_hereditary",
        "generating_graph_avoids_proper_subalgebras",
        "endomorphism_graph_perfect",
    ],
)
@pytest.mark.parametrize("build", [lambda: cyclic(6), lambda: symmetric(3), lambda: dihedral(8)], ids=["C6", "S3", "D8"])
def test_general_claims_hold(claim_name, build):
    result = run_claim(claim_name, build())
    assert not result.falsified, result.output.witness


def test_mo_equivalence_on_c6_and_s3(c6, s3):
    result = run_claim("power_equals_enhanced_iff_mo", c6)
    assert not result.falsified
    assert result.output.witness == {"equal": False, "MO": False}
    result = run_claim("power_equals_enhanced_iff_eppo", s3)
    assert not result.falsified
    assert result.output.witness["equal"] is True


def test_mo_equivalence_on_a_semigroup(m41):
    result = run_claim("power_equals_enhanced_iff_mo", m41)
    assert not result.falsified
    assert result.output.witness["MO"] is False


def test_digraph_claims_on_klein(klein):
    result = run_claim("digraphs_equal_iff_cyclic", klein)
    assert not result.falsified
    assert result.output.witness["arc"][2] == "endomorphism"
    assert not run_claim("common_edges_have_matching_arcs", klein).falsified
    assert not run_claim("endomorphisms_within_power_iff_fully_invariant", klein).falsified


def test_digraph_claims_on_volkov(volkov):
    result = run_claim("graphs_equal_iff_digraphs_equal", volkov)
    assert result.output.witness == {"graphs_equal": True, "digraphs_equal": True, "arc": None}


def test_quasigroup_claim_on_the_loop(loop5):
    result = run_claim("quasigroup_independence_iff_group", loop5)
    assert not result.falsified
    assert result.output.witness == {"group_table": False, "independence_algebra": False}


def test_independence_algebra_claims_on_klein(klein):
    for claim_name in (
        "independence_algebra_sunflower",
        "independence_algebra_complexes",
        "independence_algebra_graphs",
        "independence_algebra_endomorphism_arcs",
        "independence_algebra_monotone",
    ):
        result = run_claim(claim_name, klein)
        assert not result.falsified, (claim_name, result.output.witness)
    assert run_claim("independence_algebra_graphs", klein).output.witness == {"rank": 2}


def test_coprime_product_claims():
    product = direct_product(cyclic(2), cyclic(3))
    assert not run_claim("coprime_endomorphism_digraph_is_product", product).falsified
    assert not run_claim("coprime_endomorphism_graph_within_strong_product", product).falsified


def test_spread_of_a5():
    result = run_claim("generating_spread_at_least_two", alternating(5))
    assert not result.falsified
    assert result.output.witness["diameter"] in ("1", "2")
