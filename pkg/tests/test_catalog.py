import pytest

from algraphs.core.builders import is_latin_square
from algraphs.core.exceptions import InputError, ResourceLimitExceeded
from algraphs.core.properties import group_signature
from algraphs.verify.catalog import (
    LOOP5_TABLE,
    catalog,
    group_catalog,
    independence_catalog,
    semigroup_catalog,
)


def names(algebras) -> list[str]:
    return [a.name for a in algebras]


# ==============================================================================
# Groups
# ==============================================================================

def test_group_catalog_up_to_eight():
    found = names(group_catalog(8))
    assert sorted(found) == sorted(
        ["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "D6", "D8", "C2^2", "C2^3", "C2xC3", "C2xC4", "Q8", "S3"]
    )


def test_group_catalog_members_are_groups():
    assert all(group_signature(g) is not None and g.size <= 12 for g in group_catalog(12))


def test_a5_only_on_request():
    assert "A5" not in names(group_catalog(24))
    assert names(group_catalog(4, include_a5=True))[-1] == "A5"


def test_group_catalog_caps():
    with pytest.raises(ResourceLimitExceeded) as info:
        group_catalog(65)
    assert info.value.limit == "group_catalog_order"
    with pytest.raises(InputError):
        group_catalog(0)


# ==============================================================================
# Semigroups
# ==============================================================================

def test_semigroup_counts_up_to_anti_isomorphism():
    found = names(semigroup_catalog(3))
    assert sum(n.startswith("Sg1.") for n in found) == 1
    assert sum(n.startswith("Sg2.") for n in found) == 4
    assert sum(n.startswith("Sg3.") for n in found) == 18
    assert sum(n.startswith("M(") for n in found) == 21
    assert found[-1] == "Volkov"


def test_semigroup_catalog_cap():
    with pytest.raises(ResourceLimitExceeded):
        semigroup_catalog(4)


# ==============================================================================
# Independence Algebras
# ==============================================================================

def test_independence_catalog():
    assert names(independence_catalog(27)) == [
        "C2", "C2^2", "C2^3", "C2^4", "C3", "C3^2", "C3^3",
        "Q1(C1)", "Q1(C2)", "Q1(C3)", "Q1(C4)", "Q1(C2^2)", "Q1(L5)",
    ]
    assert "C2^4" not in names(independence_catalog(9))


def test_loop_table_is_latin_but_not_associative():
    assert is_latin_square(LOOP5_TABLE)
    assert not (LOOP5_TABLE[LOOP5_TABLE] == LOOP5_TABLE[:, LOOP5_TABLE]).all()


# ==============================================================================
# Families
# ==============================================================================

def test_all_family_deduplicates_names():
    found = names(catalog("all", 4))
    assert len(found) == len(set(found))
    assert "C2" in found and "Volkov" in found and "Q1(C2)" in found
    assert "Q1(L5)" not in found


def test_unknown_family():
    with pytest.raises(InputError):
        catalog("rings")  # type: ignore[arg-type]
