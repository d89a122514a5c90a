from fractions import Fraction as Fr
from math import comb, factorial

import pytest

from combdet import exact_kernel as ek
from combdet.genfubini import (
    charpoly_genfubini_check,
    charpoly_table,
    composition_sum,
    gen_fubini_coeff,
    gen_fubini_via_convolution,
    gen_fubini_via_minors,
    label,
    minor_sum_genfubini_check,
)


def stirling_oracle(k, j):
    # 1/(1 - u)^k with u = e^t - 1, and u^i = i! sum_j S(j, i) t^j / j!
    return Fr(sum(comb(k + i - 1, i) * factorial(i) * ek.stirling2(j, i) for i in range(j + 1)), factorial(j))


def test_displayed_series():
    assert [gen_fubini_coeff(2, j) for j in range(6)] == [1, 2, 4, Fr(22, 3), Fr(77, 6), Fr(653, 30)]
    assert [gen_fubini_coeff(3, j) for j in range(5)] == [1, 3, Fr(15, 2), Fr(33, 2), Fr(269, 8)]


def test_k_one_is_fubini():
    assert [gen_fubini_coeff(1, j) * factorial(j) for j in range(11)] == [ek.fubini_rec(j) for j in range(11)]


@pytest.mark.parametrize("k", range(1, 7))
def test_three_routes_and_stirling_oracle(k):
    for j in range(9):
        v = stirling_oracle(k, j)
        assert gen_fubini_coeff(k, j) == v
        assert gen_fubini_via_convolution(k, j) == v
        assert gen_fubini_via_minors(k, j) == v


def test_label():
    assert label(2, 4) == "F_5^(2) / 4!"


@pytest.mark.parametrize("n", range(1, 11))
def test_charpoly_check(n):
    report = charpoly_genfubini_check(n)
    assert report.ok, report.failures()
    assert len(report.rows) == n


def test_charpoly_table_t5():
    assert charpoly_table(5) == [
        (5, -1), (4, 5), (3, -12), (2, Fr(33, 2)), (1, Fr(-77, 6)), (0, Fr(541, 120))
    ]


@pytest.mark.parametrize("n", range(1, 10))
def test_minor_sums_three_ways(n):
    for l in range(n):
        report = minor_sum_genfubini_check(n, l)
        assert report.ok, report


def test_composition_sum_small():
    # l = 0 is the full determinant F_n / n!
    assert composition_sum(5, 0) == Fr(541, 120)
    assert composition_sum(5, 1) == Fr(77, 6)


def test_bad_arguments():
    with pytest.raises(ValueError):
        gen_fubini_coeff(0, 3)
    with pytest.raises(ValueError):
        charpoly_genfubini_check(0)
    with pytest.raises(ValueError):
        minor_sum_genfubini_check(3, 3)
