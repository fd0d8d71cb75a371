# ==============================================================================
# suites.py — Theorem suites over finite algebras
# ==============================================================================
# Purpose: Express each structural theorem about graphs on algebras as claims
#          that are checked one algebra at a time, and group them into suites.
# Sections: Imports, Public exports, Shared Builders, Hypotheses,
#           Relations Between Graphs, Structure Theorems, Power Graph Perfection,
#           Group Invariants, Digraphs, Zero-Divisor Graph, Complexes,
#           Independence Algebras, Subalgebras, Products, Spread, Registry
# ==============================================================================

# ==============================================================================
# Imports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Any

# Third-Party -------------------------------------------------------------------
import numpy as np
from numpy.typing import NDArray

# Internal ----------------------------------------------------------------------
from ..core.algebra import FiniteAlgebra, rank_of, restrict, subalgebra_lattice
from ..core.algebra_graphs import (
    ENHANCED,
    ENHANCED_STRICT,
    INTERSECTION,
    POWER,
    GraphKind,
    ZeroDivisorPoset,
    build_digraph,
    build_graph,
    digraph_equality_report,
    enhanced_from_power_digraph,
    is_preorder,
    product_digraph,
    strong_product,
    zero_divisor_graph,
)
from ..core.builders import is_latin_square
from ..core.complexes import SimplicialComplex, build_complex, is_matroid, one_skeleton
from ..core.exceptions import InputError
from ..core.graph_classes import classify
from ..core.graph_model import SimpleGraph, complement_graph, edge_difference, induced_subgraph
from ..core.invariants import chromatic_number, clique_number, diameter, matching_number, spread
from ..core.properties import PropertyResult, check_property, group_signature
from ..core.settings import SearchLimits
from .claims import Claim, ClaimOutput, claim

# ==============================================================================
# Public exports
# ==============================================================================
__all__ = [
    "SUITES",
    "SUITE_IDS",
    "suite_claims",
]


# ==============================================================================
# Shared Builders
# ==============================================================================

GENERATING = GraphKind("generating")
INDEPENDENCE = GraphKind("independence")
RANK = GraphKind("rank")
ENDOMORPHISM = GraphKind("endomorphism")


@lru_cache(maxsize=1024)
def _graph(algebra: FiniteAlgebra, kind: GraphKind, limits: SearchLimits) -> SimpleGraph:
    return build_graph(algebra, kind, limits)


@lru_cache(maxsize=256)
def _complex(algebra: FiniteAlgebra, kind: str, limits: SearchLimits) -> SimplicialComplex:
    return build_complex(algebra, kind, limits)  # type: ignore[arg-type]


@lru_cache(maxsize=256)
def _independence_algebra(algebra: FiniteAlgebra, limits: SearchLimits) -> PropertyResult:
    return check_property(algebra, "independence_algebra", limits)


def _edge_labels(graph: SimpleGraph, edge: tuple[int, int]) -> list[str]:
    return [graph.labels[edge[0]], graph.labels[edge[1]]]


def _first_extra_edge(sub: SimpleGraph, graph: SimpleGraph) -> list[str] | None:
    extra = edge_difference(sub, graph).edges()
    return _edge_labels(sub, extra[0]) if extra else None


def _graph_mismatch(first: SimpleGraph, second: SimpleGraph) -> list[str] | None:
    """A pair adjacent in exactly one of two graphs on the same vertices."""
    return _first_extra_edge(first, second) or _first_extra_edge(second, first)


# ==============================================================================
# Hypotheses
# ==============================================================================

@lru_cache(maxsize=1024)
def _is_group(algebra: FiniteAlgebra) -> bool:
    return group_signature(algebra) is not None


def _is_cyclic(algebra: FiniteAlgebra) -> bool:
    return any(len(generated) == algebra.size for generated in algebra.monogenic)


def _right_multiplications(algebra: FiniteAlgebra) -> NDArray[np.intp] | None:
    """table[x, a] = ρ_a(x) when the operations are the right multiplications of a quasigroup."""
    ops = algebra.operations
    if len(ops) != algebra.size or any(op.arity != 1 for op in ops):
        return None
    table = np.stack([op.table for op in ops], axis=1)
    return table if is_latin_square(table) else None


def _is_quasigroup_unary(algebra: FiniteAlgebra) -> bool:
    return _right_multiplications(algebra) is not None


def _is_coprime_pair(algebra: FiniteAlgebra) -> bool:
    if len(algebra.factors) != 2 or not _is_group(algebra):
        return False
    first, second = algebra.factors
    return gcd(first.size, second.size) == 1


@lru_cache(maxsize=256)
def _is_nonabelian_simple(algebra: FiniteAlgebra) -> bool:
    signature = group_signature(algebra)
    if signature is None:
        return False
    mul, inv = signature.mul.table, signature.inv.table
    if np.array_equal(mul, mul.T):
        return False
    identity = signature.one.constant
    everything = np.arange(algebra.size)
    for x in range(algebra.size):
        if x == identity:
            continue
        conjugates = mul[mul[everything, x], inv]
        if algebra.generated(int(c) for c in conjugates) != algebra.universe:
            return False
    return True


# ==============================================================================
# Relations Between Graphs
# ==============================================================================

def _spanning(sub_kind: GraphKind, sup_kind: GraphKind, complement: bool):
    def check(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
        sub = _graph(algebra, sub_kind, limits)
        sup = _graph(algebra, sup_kind, limits)
        if complement:
            sup = complement_graph(sup)
        extra = _first_extra_edge(sub, sup)
        if extra is None:
            return ClaimOutput.ok()
        return ClaimOutput.fail({"edge": extra, "graph": str(sub_kind)})

    return check


power_in_enhanced = Claim(_spanning(POWER, ENHANCED, False), name="power_within_enhanced")
power_in_intersection = Claim(_spanning(POWER, INTERSECTION, False), name="power_within_intersection_power")
independence_in_co_power = Claim(
    _spanning(INDEPENDENCE, POWER, True), name="independence_within_power_complement"
)
rank_in_co_enhanced = Claim(_spanning(RANK, ENHANCED, True), name="rank_within_enhanced_complement")


# ==============================================================================
# Structure Theorems
# ==============================================================================

def _induced_p4s(graph: SimpleGraph):
    """Every induced path (a, b, c, d), each path once per direction."""
    nbrs = graph.bitsets
    for b in range(graph.order):
        for c in range(graph.order):
            if not nbrs[b] >> c & 1:
                continue
            ends_a = nbrs[b] & ~nbrs[c] & ~(1 << c)
            ends_d = nbrs[c] & ~nbrs[b] & ~(1 << b)
            for a in range(graph.order):
                if not ends_a >> a & 1:
                    continue
                rest = ends_d & ~nbrs[a]
                for d in range(graph.order):
                    if rest >> d & 1:
                        yield a, b, c, d


@claim(name="p4_lemma")
def p4_lemma(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    """On an induced path a-b-c-d of the power graph, one diagonal is enhanced, the other intersection."""
    power = _graph(algebra, POWER, limits)
    enhanced = _graph(algebra, ENHANCED, limits).adjacency
    intersection = _graph(algebra, INTERSECTION, limits).adjacency
    checked = 0
    for a, b, c, d in _induced_p4s(power):
        checked += 1
        if (enhanced[a, c] and intersection[b, d]) or (enhanced[b, d] and intersection[a, c]):
            continue
        return ClaimOutput.fail({"path": [power.labels[v] for v in (a, b, c, d)]})
    return ClaimOutput.ok({"paths": checked} if checked else None)


@claim(name="equality_implies_cograph_chordal")
def equality_implies_cograph_chordal(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    power = _graph(algebra, POWER, limits)
    equal_to = [
        str(kind) for kind in (ENHANCED, INTERSECTION) if _graph(algebra, kind, limits) == power
    ]
    if not equal_to:
        return ClaimOutput.ok()
    for cls in ("cograph", "chordal"):
        result = classify(power, cls, limits)
        if not result:
            return ClaimOutput.fail(
                {
                    "equal_to": equal_to,
                    "class": cls,
                    "configuration": result.configuration,
                    "vertices": result.witness_labels(power),
                }
            )
    return ClaimOutput.ok({"equal_to": equal_to})


def _cograph_implies_chordal(kind: GraphKind):
    def check(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
        graph = _graph(algebra, kind, limits)
        if not classify(graph, "cograph", limits):
            return ClaimOutput.ok()
        chordal = classify(graph, "chordal", limits)
        if chordal:
            return ClaimOutput.ok()
        return ClaimOutput.fail({"graph": str(kind), "chordless_cycle": chordal.witness_labels(graph)})

    return check


enhanced_cograph_chordal = Claim(
    _cograph_implies_chordal(ENHANCED), name="enhanced_cograph_implies_chordal"
)
intersection_cograph_chordal = Claim(
    _cograph_implies_chordal(INTERSECTION), name="intersection_cograph_implies_chordal"
)


@claim(name="power_equals_enhanced_iff_mo")
def power_equals_enhanced_iff_mo(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    equal = _graph(algebra, POWER, limits) == _graph(algebra, ENHANCED, limits)
    mo = check_property(algebra, "MO", limits)
    witness: dict[str, Any] = {"equal": equal, "MO": mo.holds}
    if equal == mo.holds:
        return ClaimOutput.ok(witness)
    if not mo.holds:
        witness["mo_witness"] = mo.witness
    return ClaimOutput.fail(witness)


@claim(name="power_equals_enhanced_iff_eppo", applies=_is_group)
def power_equals_enhanced_iff_eppo(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    equal = _graph(algebra, POWER, limits) == _graph(algebra, ENHANCED, limits)
    eppo = check_property(algebra, "EPPO", limits)
    witness: dict[str, Any] = {"equal": equal, "EPPO": eppo.holds, **eppo.witness}
    return ClaimOutput.ok(witness) if equal == eppo.holds else ClaimOutput.fail(witness)


# ==============================================================================
# Power Graph Perfection
# ==============================================================================

@claim(name="power_graph_perfect")
def power_graph_perfect(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    power = _graph(algebra, POWER, limits)
    result = classify(power, "perfect", limits)
    if result:
        return ClaimOutput.ok()
    return ClaimOutput.fail({"configuration": result.configuration, "vertices": result.witness_labels(power)})


@claim(name="power_graph_is_preorder_comparability")
def power_graph_is_preorder_comparability(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    digraph = build_digraph(algebra, "power", limits)
    if not is_preorder(digraph):
        return ClaimOutput.fail({"reason": "power digraph with loops is not transitive"})
    mismatch = _graph_mismatch(digraph.underlying(), _graph(algebra, POWER, limits))
    if mismatch is not None:
        return ClaimOutput.fail({"pair": mismatch})
    return ClaimOutput.ok()


# ==============================================================================
# Group Invariants
# ==============================================================================

@claim(name="enhanced_weakly_perfect", applies=_is_group)
def enhanced_weakly_perfect(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    enhanced = _graph(algebra, ENHANCED, limits)
    omega, chi = clique_number(enhanced, limits), chromatic_number(enhanced, limits)
    witness = {"clique": omega, "chromatic": chi}
    return ClaimOutput.ok(witness) if omega == chi else ClaimOutput.fail(witness)


@claim(name="matching_numbers_equal", applies=_is_group)
def matching_numbers_equal(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    power = matching_number(_graph(algebra, POWER, limits), limits)
    enhanced = matching_number(_graph(algebra, ENHANCED, limits), limits)
    witness = {"power": power, "enhanced": enhanced}
    return ClaimOutput.ok(witness) if power == enhanced else ClaimOutput.fail(witness)


# ==============================================================================
# Digraphs
# ==============================================================================

@claim(name="graphs_equal_iff_digraphs_equal")
def graphs_equal_iff_digraphs_equal(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    report = digraph_equality_report(algebra, limits)
    witness = {
        "graphs_equal": report.graphs_equal,
        "digraphs_equal": report.digraphs_equal,
        "arc": list(report.arc_witness) if report.arc_witness else None,
    }
    return ClaimOutput.ok(witness) if report.graphs_equal == report.digraphs_equal else ClaimOutput.fail(witness)


@claim(name="endomorphisms_within_power_iff_fully_invariant")
def endomorphisms_within_power_iff_fully_invariant(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    report = digraph_equality_report(algebra, limits)
    witness: dict[str, Any] = {
        "endomorphisms_within_power": report.endo_within_power,
        "fully_invariant": report.fully_invariant_all,
    }
    if report.invariance_witness is not None:
        subalgebra, images = report.invariance_witness
        witness["moved_subalgebra"] = subalgebra
        witness["endomorphism"] = list(images)
    if report.endo_within_power == report.fully_invariant_all:
        return ClaimOutput.ok(witness)
    return ClaimOutput.fail(witness)


@claim(name="common_edges_have_matching_arcs")
def common_edges_have_matching_arcs(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    """Pairs joined in both graphs carry the same arcs in both digraphs."""
    power = build_digraph(algebra, "power", limits).arcs
    endo = build_digraph(algebra, "endomorphism", limits).arcs
    both = (power | power.T) & (endo | endo.T)
    bad = np.argwhere(both & ((power != endo) | (power.T != endo.T)))
    if bad.size == 0:
        return ClaimOutput.ok()
    x, y = (int(v) for v in bad[0])
    return ClaimOutput.fail(
        {
            "pair": [algebra.label(x), algebra.label(y)],
            "power_arcs": [bool(power[x, y]), bool(power[y, x])],
            "endomorphism_arcs": [bool(endo[x, y]), bool(endo[y, x])],
        }
    )


@claim(name="digraphs_equal_iff_cyclic", applies=_is_group)
def digraphs_equal_iff_cyclic(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    report = digraph_equality_report(algebra, limits)
    cyclic = _is_cyclic(algebra)
    witness = {
        "digraphs_equal": report.digraphs_equal,
        "cyclic": cyclic,
        "arc": list(report.arc_witness) if report.arc_witness else None,
    }
    return ClaimOutput.ok(witness) if report.digraphs_equal == cyclic else ClaimOutput.fail(witness)


@claim(name="pointwise_power_endomorphisms_are_power_maps", applies=_is_group)
def pointwise_power_endomorphisms_are_power_maps(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    """If every endomorphism maps each x into ⟨x⟩, every endomorphism is some x ↦ x^k."""
    statuses = digraph_equality_report(algebra, limits).power_map_status
    if not all(s.into_monogenic for s in statuses):
        return ClaimOutput.ok()
    stray = next((s for s in statuses if not s.is_global_power), None)
    if stray is None:
        return ClaimOutput.ok({"endomorphisms": len(statuses)})
    return ClaimOutput.fail({"endomorphism": list(stray.images)})


# ==============================================================================
# Zero-Divisor Graph
# ==============================================================================

@claim(name="zero_divisor_graph_is_enhanced_complement")
def zero_divisor_graph_is_enhanced_complement(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    if not ZeroDivisorPoset.of(algebra).is_preorder():
        return ClaimOutput.fail({"reason": "order of monogenic subalgebras is not a preorder"})
    mismatch = _graph_mismatch(
        zero_divisor_graph(algebra, limits), complement_graph(_graph(algebra, ENHANCED, limits))
    )
    return ClaimOutput.ok() if mismatch is None else ClaimOutput.fail({"pair": mismatch})


@claim(name="enhanced_from_power_digraph")
def enhanced_recovered_from_power_digraph(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    recovered = enhanced_from_power_digraph(build_digraph(algebra, "power", limits))
    mismatch = _graph_mismatch(recovered, _graph(algebra, ENHANCED, limits))
    return ClaimOutput.ok() if mismatch is None else ClaimOutput.fail({"pair": mismatch})


# ==============================================================================
# Complexes
# ==============================================================================

def _skeleton_identity(complex_kind: str, graph_kind: GraphKind):
    def check(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
        complex_ = _complex(algebra, complex_kind, limits)
        expected = induced_subgraph(complement_graph(_graph(algebra, graph_kind, limits)), complex_.ground_set)
        mismatch = _graph_mismatch(one_skeleton(complex_), expected)
        return ClaimOutput.ok() if mismatch is None else ClaimOutput.fail({"pair": mismatch})

    return check


independence_skeleton = Claim(_skeleton_identity("independence", POWER), name="independence_skeleton")
strong_skeleton = Claim(_skeleton_identity("strong_independence", ENHANCED), name="strong_independence_skeleton")


@claim(name="strong_simplices_are_independent")
def strong_simplices_are_independent(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    independent = _complex(algebra, "independence", limits)
    strong = _complex(algebra, "strong_independence", limits)
    outside = next((f for f in strong.facets if f not in independent), None)
    if outside is None:
        return ClaimOutput.ok()
    return ClaimOutput.fail({"facet": [algebra.label(v) for v in outside]})


# ==============================================================================
# Independence Algebras
# ==============================================================================

@claim(name="quasigroup_independence_iff_group", applies=_is_quasigroup_unary)
def quasigroup_independence_iff_group(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    table = _right_multiplications(algebra)
    assert table is not None
    # an associative Latin square is a group table
    group_table = bool(np.array_equal(table[table], table[:, table]))
    independence = _independence_algebra(algebra, limits)
    witness: dict[str, Any] = {"group_table": group_table, "independence_algebra": independence.holds}
    if group_table == independence.holds:
        return ClaimOutput.ok(witness)
    witness["details"] = independence.witness
    return ClaimOutput.fail(witness)


def _sunflower_adjacency(algebra: FiniteAlgebra) -> NDArray[np.bool_]:
    """x ∼ y iff one of them lies in E(A) or ⟨x⟩ = ⟨y⟩."""
    n = algebra.size
    in_e = np.zeros(n, dtype=bool)
    in_e[np.array(sorted(algebra.constants), dtype=np.intp)] = True
    generated = algebra.monogenic
    same = np.array([[generated[x] == generated[y] for y in range(n)] for x in range(n)], dtype=bool)
    adj = same | in_e[:, None] | in_e[None, :]
    np.fill_diagonal(adj, False)
    return adj


@claim(name="independence_algebra_sunflower")
def independence_algebra_sunflower(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    if not _independence_algebra(algebra, limits):
        return ClaimOutput.ok()
    power = _graph(algebra, POWER, limits)
    for kind in (ENHANCED, INTERSECTION):
        mismatch = _graph_mismatch(power, _graph(algebra, kind, limits))
        if mismatch is not None:
            return ClaimOutput.fail({"graph": str(kind), "pair": mismatch})
    mismatch = _graph_mismatch(power, SimpleGraph(algebra.element_names, _sunflower_adjacency(algebra)))
    if mismatch is not None:
        return ClaimOutput.fail({"graph": "sunflower", "pair": mismatch})
    return ClaimOutput.ok()


@claim(name="independence_algebra_complexes")
def independence_algebra_complexes(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    if not _independence_algebra(algebra, limits):
        return ClaimOutput.ok()
    independent = _complex(algebra, "independence", limits)
    strong = _complex(algebra, "strong_independence", limits)
    if independent.facets != strong.facets:
        return ClaimOutput.fail(
            {"independence_facets": independent.facet_labels(), "strong_facets": strong.facet_labels()}
        )
    exchange = is_matroid(independent)
    if not exchange:
        return ClaimOutput.fail(
            {
                "smaller": [algebra.label(v) for v in exchange.smaller or ()],
                "larger": [algebra.label(v) for v in exchange.larger or ()],
            }
        )
    return ClaimOutput.ok({"facets": len(independent.facets)})


@claim(name="independence_algebra_graphs")
def independence_algebra_graphs(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    """Independence = rank = complement of power; generating graph determined by the rank."""
    if not _independence_algebra(algebra, limits):
        return ClaimOutput.ok()
    independence = _graph(algebra, INDEPENDENCE, limits)
    for name, other in (
        ("rank", _graph(algebra, RANK, limits)),
        ("power_complement", complement_graph(_graph(algebra, POWER, limits))),
    ):
        mismatch = _graph_mismatch(independence, other)
        if mismatch is not None:
            return ClaimOutput.fail({"graph": name, "pair": mismatch})

    r = rank_of(algebra, algebra.universe, limits)
    if r > 2:
        expected = SimpleGraph.edgeless(algebra.element_names)
    elif r == 2:
        expected = independence
    else:
        adj = np.ones((algebra.size, algebra.size), dtype=bool)
        constants = np.array(sorted(algebra.constants), dtype=np.intp)
        adj[np.ix_(constants, constants)] = False
        np.fill_diagonal(adj, False)
        expected = SimpleGraph(algebra.element_names, adj)
    mismatch = _graph_mismatch(_graph(algebra, GENERATING, limits), expected)
    if mismatch is not None:
        return ClaimOutput.fail({"graph": "generating", "rank": r, "pair": mismatch})
    return ClaimOutput.ok({"rank": r})


@claim(name="independence_algebra_endomorphism_arcs")
def independence_algebra_endomorphism_arcs(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    """Arcs are exactly the pairs whose source lies outside E(A)."""
    if not _independence_algebra(algebra, limits):
        return ClaimOutput.ok()
    arcs = build_digraph(algebra, "endomorphism", limits).arcs
    expected = np.ones_like(arcs)
    expected[np.array(sorted(algebra.constants), dtype=np.intp), :] = False
    np.fill_diagonal(expected, False)
    bad = np.argwhere(arcs != expected)
    if bad.size == 0:
        return ClaimOutput.ok()
    x, y = (int(v) for v in bad[0])
    return ClaimOutput.fail({"arc": [algebra.label(x), algebra.label(y)], "present": bool(arcs[x, y])})


@claim(name="independence_algebra_monotone")
def independence_algebra_monotone(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    if not _independence_algebra(algebra, limits):
        return ClaimOutput.ok()
    for prop in ("strictly_monotonic", "MO"):
        result = check_property(algebra, prop, limits)
        if not result:
            return ClaimOutput.fail({"property": prop, **result.witness})
    return ClaimOutput.ok()


# ==============================================================================
# Subalgebras
# ==============================================================================

def _hereditary(kind: GraphKind):
    def check(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
        whole = _graph(algebra, kind, limits)
        for sub in subalgebra_lattice(algebra, limits):
            if not sub.members:
                continue
            inner = build_graph(restrict(algebra, sub), kind, limits)
            mismatch = _graph_mismatch(inner, induced_subgraph(whole, sub.members))
            if mismatch is not None:
                return ClaimOutput.fail({"subalgebra": sub.labels, "pair": mismatch})
        return ClaimOutput.ok()

    return check


power_hereditary = Claim(_hereditary(POWER), name="power_graph_hereditary")
strict_enhanced_hereditary = Claim(_hereditary(ENHANCED_STRICT), name="strict_enhanced_hereditary")


@claim(name="generating_graph_avoids_proper_subalgebras")
def generating_graph_avoids_proper_subalgebras(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    adj = _graph(algebra, GENERATING, limits).adjacency
    for sub in subalgebra_lattice(algebra, limits):
        if sub.members == algebra.universe:
            continue
        members = sub.sorted_members
        inside = np.argwhere(adj[np.ix_(members, members)])
        if inside.size:
            i, j = inside[0]
            return ClaimOutput.fail(
                {"subalgebra": sub.labels, "edge": [algebra.label(members[i]), algebra.label(members[j])]}
            )
    return ClaimOutput.ok()


@claim(name="endomorphism_graph_perfect")
def endomorphism_graph_perfect(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    for kind in ("power", "endomorphism"):
        if not is_preorder(build_digraph(algebra, kind, limits)):
            return ClaimOutput.fail({"digraph": kind, "reason": "not a preorder"})
    graph = _graph(algebra, ENDOMORPHISM, limits)
    result = classify(graph, "perfect", limits)
    if result:
        return ClaimOutput.ok()
    return ClaimOutput.fail({"configuration": result.configuration, "vertices": result.witness_labels(graph)})


# ==============================================================================
# Products
# ==============================================================================

@claim(name="coprime_endomorphism_digraph_is_product", applies=_is_coprime_pair)
def coprime_endomorphism_digraph_is_product(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    first, second = algebra.factors
    expected = product_digraph(
        build_digraph(first, "endomorphism", limits), build_digraph(second, "endomorphism", limits)
    )
    actual = build_digraph(algebra, "endomorphism", limits)
    bad = np.argwhere(actual.arcs != expected.arcs)
    if bad.size == 0:
        return ClaimOutput.ok()
    x, y = (int(v) for v in bad[0])
    return ClaimOutput.fail({"arc": [actual.labels[x], actual.labels[y]], "present": bool(actual.arcs[x, y])})


@claim(name="coprime_endomorphism_graph_within_strong_product", applies=_is_coprime_pair)
def coprime_endomorphism_graph_within_strong_product(
    algebra: FiniteAlgebra, limits: SearchLimits
) -> ClaimOutput:
    first, second = algebra.factors
    strong = strong_product(_graph(first, ENDOMORPHISM, limits), _graph(second, ENDOMORPHISM, limits))
    extra = _first_extra_edge(_graph(algebra, ENDOMORPHISM, limits), strong)
    return ClaimOutput.ok() if extra is None else ClaimOutput.fail({"edge": extra})


# ==============================================================================
# Spread
# ==============================================================================

@claim(name="generating_spread_at_least_two", applies=_is_nonabelian_simple)
def generating_spread_at_least_two(algebra: FiniteAlgebra, limits: SearchLimits) -> ClaimOutput:
    """Non-identity elements of a non-abelian simple group: any two have a common generating partner."""
    graph = induced_subgraph(
        _graph(algebra, GENERATING, limits), sorted(algebra.universe - algebra.constants)
    )
    s = spread(graph, limits)
    d = diameter(graph)
    witness = {"spread": str(s), "diameter": str(d)}
    if s.value is not None and s.value >= 2 and d.value is not None and d.value <= 2:
        return ClaimOutput.ok(witness)
    return ClaimOutput.fail(witness)


# ==============================================================================
# Registry
# ==============================================================================

SUITES: dict[str, tuple[Claim, ...]] = {
    "spanning": (power_in_enhanced, power_in_intersection, independence_in_co_power, rank_in_co_enhanced),
    "p4_lemma": (p4_lemma,),
    "equality_cograph_chordal": (equality_implies_cograph_chordal,),
    "cograph_implies_chordal": (enhanced_cograph_chordal, intersection_cograph_chordal),
    "mo_equivalence": (power_equals_enhanced_iff_mo, power_equals_enhanced_iff_eppo),
    "perfect_power": (power_graph_perfect, power_graph_is_preorder_comparability),
    "weakly_perfect_enhanced": (enhanced_weakly_perfect,),
    "matching_equality": (matching_numbers_equal,),
    "digraph_equality": (
        graphs_equal_iff_digraphs_equal,
        endomorphisms_within_power_iff_fully_invariant,
        common_edges_have_matching_arcs,
        digraphs_equal_iff_cyclic,
        pointwise_power_endomorphisms_are_power_maps,
    ),
    "zero_divisor": (zero_divisor_graph_is_enhanced_complement, enhanced_recovered_from_power_digraph),
    "skeleton": (independence_skeleton, strong_skeleton, strong_simplices_are_independent),
    "sunflower": (
        quasigroup_independence_iff_group,
        independence_algebra_sunflower,
        independence_algebra_complexes,
    ),
    "independence_structure": (
        independence_algebra_graphs,
        independence_algebra_endomorphism_arcs,
        independence_algebra_monotone,
    ),
    "hereditary": (power_hereditary, strict_enhanced_hereditary, generating_graph_avoids_proper_subalgebras),
    "endomorphism_perfect": (endomorphism_graph_perfect,),
    "coprime_product": (
        coprime_endomorphism_digraph_is_product,
        coprime_endomorphism_graph_within_strong_product,
    ),
    "spread": (generating_spread_at_least_two,),
}

SUITE_IDS: tuple[str, ...] = (*SUITES, "all")


def suite_claims(suite: str) -> tuple[Claim, ...]:
    """
    The claims checked by `suite`; `all` runs every suite in registry order.

    Raises:
        InputError: For an unknown suite id.
    """
    if suite == "all":
        return tuple(c for claims in SUITES.values() for c in claims)
    claims = SUITES.get(suite)
    if claims is None:
        raise InputError(f"unknown suite {suite!r}; expected one of {', '.join(SUITE_IDS)}")
    return claims
