"""Generalized Fubini numbers: coefficients of (1/(2 - e^t))^k.

All values here are raw series coefficients [t^j].  The usual label for
[t^j] (1/(2 - e^t))^k is F_{j+1}^{(k)} / j!, so the label is attached only in
``label`` and never used for comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import List

from .families import FamilyId
from .hessenberg import (
    char_poly,
    family_profile,
    principal_minor,
    principal_minor_sum,
    toeplitz_hessenberg,
)
from .power_series import fubini_egf, ps_mul

FUBINI = FamilyId("fubini")


def label(k: int, j: int) -> str:
    return f"F_{j + 1}^({k}) / {j}!"


def gen_fubini_coeff(k: int, j: int) -> Fraction:
    """[t^j] (1/(2 - e^t))^k by repeated series multiplication."""
    if k < 1 or j < 0:
        raise ValueError("need k >= 1 and j >= 0")
    base = fubini_egf(j)
    power = base
    for _ in range(k - 1):
        power = ps_mul(power, base)
    return power.coeffs[j]


def fubini_over_factorial(n: int) -> List[Fraction]:
    """F_i / i! for i = 0..n, from the integer recurrence."""
    F = [1]
    for i in range(1, n + 1):
        F.append(sum(comb(i, j) * F[i - j] for j in range(1, i + 1)))
    return [Fraction(f, factorial(i)) for i, f in enumerate(F)]


def gen_fubini_via_convolution(k: int, j: int) -> Fraction:
    """Sum over j_1 + ... + j_k = j of prod F_(j_i) / j_i!, as a k-fold convolution."""
    if k < 1 or j < 0:
        raise ValueError("need k >= 1 and j >= 0")
    a = fubini_over_factorial(j)
    conv = list(a)
    for _ in range(k - 1):
        conv = [sum((conv[i] * a[d - i] for i in range(d + 1)), Fraction(0)) for d in range(j + 1)]
    return conv[j]


def fubini_matrix(n: int):
    return toeplitz_hessenberg(family_profile(FUBINI), n)


@dataclass
class CheckRow:
    l: int
    expected: Fraction
    observed: Fraction
    label: str
    ok: bool


@dataclass
class CheckReport:
    n: int
    rows: List[CheckRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def failures(self) -> List[CheckRow]:
        return [r for r in self.rows if not r.ok]


def charpoly_genfubini_check(n: int) -> CheckReport:
    """Compare |[x^l] det(T_n - xI)| with [t^(n-l)] (1/(2-e^t))^(l+1) for l = 0..n-1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    coeffs = char_poly(fubini_matrix(n))  # highest degree first
    report = CheckReport(n)
    for l in range(n):
        observed = abs(coeffs[n - l])
        expected = gen_fubini_coeff(l + 1, n - l)
        report.rows.append(CheckRow(l, expected, observed, label(l + 1, n - l), observed == expected))
    return report


@dataclass
class MinorSumReport:
    n: int
    l: int
    brute_force: Fraction
    char_poly_coeff: Fraction
    composition_sum: Fraction

    @property
    def ok(self) -> bool:
        return self.brute_force == self.char_poly_coeff == self.composition_sum


def composition_sum(n: int, l: int) -> Fraction:
    """Sum over weak compositions j_1 + ... + j_(l+1) = n - l of prod F_(j_i) / j_i!.

    Enumerates the compositions explicitly (stars and bars) rather than convolving.
    """
    a = fubini_over_factorial(n - l)
    total = Fraction(0)
    slots = n  # n - l stars and l bars
    for bars in combinations(range(slots), l):
        prev = -1
        term = Fraction(1)
        for b in list(bars) + [slots]:
            term *= a[b - prev - 1]
            prev = b
        total += term
    return total


def minor_sum_genfubini_check(n: int, l: int) -> MinorSumReport:
    """Sum of principal minors of T_n of order n - l, three ways."""
    if not 0 <= l <= n - 1:
        raise ValueError("need 0 <= l <= n - 1")
    T = fubini_matrix(n)
    brute = Fraction(0)
    for deleted in combinations(range(1, n + 1), l):
        brute += principal_minor(T, deleted)
    coeff = abs(char_poly(T)[n - l])
    return MinorSumReport(n, l, brute, coeff, composition_sum(n, l))


def charpoly_table(n: int):
    """(degree, coefficient) pairs of det(T_n - xI), highest degree first."""
    return list(zip(range(n, -1, -1), char_poly(fubini_matrix(n))))


def gen_fubini_via_minors(k: int, j: int) -> Fraction:
    """[t^j] (1/(2-e^t))^k as the order-j principal minor sum of T_(j+k-1)."""
    if k < 1 or j < 0:
        raise ValueError("need k >= 1 and j >= 0")
    if j == 0:
        return Fraction(1)
    return principal_minor_sum(family_profile(FUBINI), j + k - 1, j, method="product")
