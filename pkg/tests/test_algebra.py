import pytest

from algraphs.core.algebra import (
    closure,
    first_generating_set,
    generating_sets,
    independent_sets,
    rank_of,
    restrict,
    subalgebra_lattice,
)
from algraphs.core.exceptions import InputError, ResourceLimitExceeded
from algraphs.core.settings import SearchLimits


def test_closure_of_an_element_is_the_cyclic_subgroup(c6):
    assert closure(c6, [2]).members == frozenset({0, 2, 4})
    assert closure(c6, [3]).labels == ["0", "3"]
    assert closure(c6, []).members == frozenset({0})


def test_closure_rejects_out_of_range_indices(c6):
    with pytest.raises(InputError):
        closure(c6, [6])


def test_constants_are_empty_for_semigroups(m41, c6):
    assert m41.constants == frozenset()
    assert c6.constants == frozenset({0})


@pytest.mark.parametrize(
    "members, expected",
    [({0}, 0), ({0, 3}, 1), ({0, 2, 4}, 1), (set(range(6)), 1)],
)
def test_rank_in_c6(c6, members, expected):
    assert rank_of(c6, members) == expected


def test_rank_of_klein_group_is_two(klein):
    assert rank_of(klein, klein.universe) == 2


def test_rank_rejects_a_set_that_is_not_closed(c6):
    with pytest.raises(InputError):
        rank_of(c6, {2})


def test_rank_search_respects_the_subset_cap(klein):
    with pytest.raises(ResourceLimitExceeded) as info:
        rank_of(klein, klein.universe, SearchLimits(max_subset_size=1))
    assert info.value.limit == "max_subset_size"


def test_lattice_of_c6_is_ordered_by_size(c6):
    lattice = subalgebra_lattice(c6)
    assert [sub.labels for sub in lattice] == [["0"], ["0", "3"], ["0", "2", "4"], ["0", "1", "2", "3", "4", "5"]]


def test_lattice_of_semigroup_contains_the_empty_subalgebra(m41):
    lattice = subalgebra_lattice(m41)
    assert lattice[0].members == frozenset()
    assert len(lattice) == 6
    assert ["x^2", "x^3", "x^4"] in [sub.labels for sub in lattice]


def test_lattice_cap(c6):
    with pytest.raises(ResourceLimitExceeded):
        subalgebra_lattice(c6, SearchLimits(max_lattice_size=2))


def test_independent_sets_in_depth_first_order(c6):
    assert list(independent_sets(c6)) == [(1,), (2,), (2, 3), (3,), (3, 4), (4,), (5,)]


def test_generating_sets(c6):
    assert generating_sets(c6, "minimum") == [frozenset({1}), frozenset({5})]
    assert generating_sets(c6, "minimal") == [
        frozenset({1}),
        frozenset({5}),
        frozenset({2, 3}),
        frozenset({3, 4}),
    ]
    assert first_generating_set(c6) == (1,)


def test_generating_sets_unknown_mode(c6):
    with pytest.raises(InputError):
        generating_sets(c6, "smallest")  # type: ignore[arg-type]


def test_restrict_keeps_labels_and_operations(c6):
    sub = restrict(c6, {0, 2, 4})
    assert sub.size == 3
    assert sub.element_names == ("0", "2", "4")
    mul = sub.operation("mul").table
    # 2 + 4 = 0 in C6
    assert sub.label(int(mul[1, 2])) == "0"
    assert sub.constants == frozenset({0})


def test_restrict_rejects_empty_and_open_sets(c6, m41):
    with pytest.raises(InputError):
        restrict(c6, {2})
    with pytest.raises(InputError):
        restrict(m41, frozenset())


def test_algebra_lookup_errors(c6):
    with pytest.raises(InputError):
        c6.index("7")
    with pytest.raises(InputError):
        c6.operation("add")
    assert c6.index("5") == 5
