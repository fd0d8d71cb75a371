from fractions import Fraction

import pytest

from algraphs.core.arith import (
    RATIO_ENVELOPE,
    CliqueRatioRow,
    clique_ratio_table,
    euler_phi,
    is_prime_power,
    max_ratio_row,
    power_clique_cyclic,
    prime_factorization,
    write_ratio_csv,
)
from algraphs.core.exceptions import InputError, ResourceLimitExceeded
from algraphs.core.settings import SearchLimits


def test_factorization_and_totient():
    assert prime_factorization(360) == {2: 3, 3: 2, 5: 1}
    assert prime_factorization(1) == {}
    assert euler_phi(12) == 4
    assert euler_phi(1) == 1
    assert euler_phi(13) == 12
    with pytest.raises(InputError):
        euler_phi(0)


@pytest.mark.parametrize("n, expected", [(1, True), (7, True), (8, True), (12, False), (49, True), (30, False)])
def test_is_prime_power(n, expected):
    assert is_prime_power(n) is expected


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (6, 5), (7, 7), (8, 8), (12, 9)])
def test_power_clique_cyclic(n, expected):
    assert power_clique_cyclic(n) == expected


def test_power_clique_cap():
    with pytest.raises(ResourceLimitExceeded) as info:
        power_clique_cyclic(40, SearchLimits(max_cyclic_clique_order=30))
    assert info.value.limit == "max_cyclic_clique_order"


def test_ratio_table_and_csv():
    rows = clique_ratio_table(8)
    assert [row.n for row in rows] == list(range(1, 9))
    row6 = rows[5]
    assert (row6.phi, row6.f, row6.ratio) == (2, 5, Fraction(5, 2))
    text = write_ratio_csv(rows)
    lines = text.splitlines()
    assert lines[0] == "n,phi,f,ratio"
    assert lines[6] == "6,2,5,5/2"
    assert all(row.ratio < RATIO_ENVELOPE for row in rows)


def test_ratio_csv_written_to_disk(tmp_path):
    path = tmp_path / "ratios.csv"
    text = write_ratio_csv(clique_ratio_table(3), path)
    assert path.read_text(encoding="utf-8") == text
    assert text.endswith("3,2,3,3/2\n")


def test_ratio_table_needs_positive_bound():
    with pytest.raises(InputError):
        clique_ratio_table(0)


def test_ratio_bounds_up_to_two_hundred():
    rows = clique_ratio_table(200)
    assert all(row.phi <= row.f <= RATIO_ENVELOPE * row.phi for row in rows)
    primes = [row for row in rows if row.n <= 50 and prime_factorization(row.n) == {row.n: 1}]
    assert len(primes) == 15
    assert all(row.f == row.n for row in primes)
    top = max_ratio_row(rows)
    assert (top.n, top.ratio) == (30, Fraction(21, 8))


def test_max_ratio_row_prefers_the_smallest_n():
    rows = [CliqueRatioRow(2, 1, 2), CliqueRatioRow(4, 2, 4), CliqueRatioRow(3, 2, 3)]
    assert max_ratio_row(rows).n == 2
    with pytest.raises(InputError):
        max_ratio_row([])
