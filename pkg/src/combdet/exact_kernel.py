"""Exact integer combinatorics: factorials, Stirling numbers and Fubini-type numbers.

Every table below is built inside the call that needs it; nothing is cached
between calls.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial as _factorial
from typing import Callable, List


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return _factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def _block_table(n: int, kmax: int, allowed: Callable[[int], bool]) -> List[List[int]]:
    # T[i][k] = partitions of an i-set into k blocks whose sizes satisfy `allowed`,
    # splitting off the block that holds the largest element.
    T = [[0] * (kmax + 1) for _ in range(n + 1)]
    T[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            if not allowed(j):
                continue
            ways = comb(i - 1, j - 1)
            prev = T[i - j]
            row = T[i]
            for k in range(1, kmax + 1):
                if prev[k - 1]:
                    row[k] += ways * prev[k - 1]
    return T


def stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("n, k must be >= 0")
    if k > n:
        return 0
    row = [1] + [0] * k
    for i in range(1, n + 1):
        for j in range(min(i, k), 0, -1):
            row[j] = j * row[j] + row[j - 1]
        row[0] = 0
    return row[k]


def stirling2_restricted(n: int, k: int, m: int) -> int:
    """Partitions of an n-set into k blocks, each of size at most m."""
    if n < 0 or k < 0 or m < 1:
        raise ValueError("need n, k >= 0 and m >= 1")
    if k > n or m * k < n:
        return 0
    return _block_table(n, k, lambda j: j <= m)[n][k]


def stirling2_associated(n: int, k: int, m: int) -> int:
    """Partitions of an n-set into k blocks, each of size at least m."""
    if n < 0 or k < 0 or m < 1:
        raise ValueError("need n, k >= 0 and m >= 1")
    if m * k > n:
        return 0
    return _block_table(n, k, lambda j: j >= m)[n][k]


def fubini_def(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    row = [1]
    for i in range(1, n + 1):
        new = [0] * (i + 1)
        for j in range(1, i + 1):
            new[j] = j * (row[j] if j < i else 0) + row[j - 1]
        row = new
    return sum(_factorial(k) * s for k, s in enumerate(row))


def _binomial_convolution(n: int, parts: Callable[[int], bool]) -> int:
    F = [1] + [0] * n
    for i in range(1, n + 1):
        F[i] = sum(comb(i, j) * F[i - j] for j in range(1, i + 1) if parts(j))
    return F[n]


def fubini_rec(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return _binomial_convolution(n, lambda j: True)


def fubini_binomial_sum(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    # 0**0 == 1 in Python, which is the convention needed for n = 0
    powers = [j**n for j in range(n + 1)]
    total = 0
    for k in range(n + 1):
        total += sum((-1) ** (k - j) * comb(k, j) * powers[j] for j in range(k + 1))
    return total


def dyadic_cutoff(n: int) -> int:
    """Smallest doubling of max(2(n+2), 16) at which 5 * M**n / 2**M < 1/2."""
    M = max(2 * (n + 2), 16)
    while 10 * M**n >= 2**M:
        M *= 2
    return M


def fubini_dyadic_series(n: int) -> int:
    """Round the exact partial sum of (1/2) * sum_m m**n / 2**m to the nearest integer."""
    if n < 0:
        raise ValueError("n must be >= 0")
    M = dyadic_cutoff(n)
    # (1/2) sum_{m<=M} m^n 2^{-m} = sum_{m<=M} m^n 2^{M-m} / 2^{M+1}
    num = sum(m**n << (M - m) for m in range(M + 1))
    partial = Fraction(num, 1 << (M + 1))
    nearest = round(partial)
    # partial < F_n and the tail is below 1/4, so rounding must land within 1/2
    if abs(partial - nearest) >= Fraction(1, 2):
        raise ArithmeticError(f"dyadic series for n={n} did not converge at M={M}")
    return int(nearest)


def restricted_fubini_rec(n: int, m: int) -> int:
    """Ordered set partitions of an n-set with every block of size <= m."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    return _binomial_convolution(n, lambda j: j <= m)


def restricted_fubini_def(n: int, m: int) -> int:
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    row = _block_table(n, n, lambda j: j <= m)[n]
    return sum(_factorial(k) * s for k, s in enumerate(row))


def restricted_fubini(n: int, m: int) -> int:
    """Restricted Fubini number, computed two ways and required to agree."""
    a = restricted_fubini_rec(n, m)
    b = restricted_fubini_def(n, m)
    if a != b:
        raise ArithmeticError(f"restricted Fubini ({n}, {m}): recurrence {a} != definition {b}")
    return a


def associated_fubini_rec(n: int, m: int) -> int:
    """Ordered set partitions of an n-set with every block of size >= m."""
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    return _binomial_convolution(n, lambda j: j >= m)


def associated_fubini_def(n: int, m: int) -> int:
    if n < 0 or m < 1:
        raise ValueError("need n >= 0 and m >= 1")
    row = _block_table(n, n, lambda j: j >= m)[n]
    return sum(_factorial(k) * s for k, s in enumerate(row))


def associated_fubini(n: int, m: int) -> int:
    a = associated_fubini_rec(n, m)
    b = associated_fubini_def(n, m)
    if a != b:
        raise ArithmeticError(f"associated Fubini ({n}, {m}): recurrence {a} != definition {b}")
    return a
