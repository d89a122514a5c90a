"""Partition enumeration and Trudi's expansion of Toeplitz-Hessenberg determinants.

For the m x m matrix with a_1 on the diagonal, a_2, a_3, ... on successive
superdiagonals and a_0 on the subdiagonal,

    det = sum over t_1 + 2 t_2 + ... + m t_m = m of
          multinomial(t) * (-a_0)^(m - |t|) * a_1^t_1 * ... * a_m^t_m.

With a_0 = 1 this is Brioschi's formula, and it expands alpha_n of any profile.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .families import FamilyId
from .hessenberg import RProfile, family_profile

Number = Union[int, Fraction]
PartitionMultiplicity = Tuple[int, ...]


def partitions_fixed_weight(n: int, parts: Optional[Iterable[int]] = None) -> Iterator[PartitionMultiplicity]:
    """Yield every (t_1, ..., t_n) with sum i * t_i = n, in increasing lexicographic order.

    If ``parts`` is given, t_i is forced to 0 for every i outside it.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    allowed = [False] * (n + 2)
    for p in (range(1, n + 1) if parts is None else parts):
        if 1 <= p <= n:
            allowed[p] = True
    # reach[i][r]: weight r is a sum of allowed parts >= i
    reach = [[False] * (n + 1) for _ in range(n + 2)]
    reach[n + 1][0] = True
    for i in range(n, 0, -1):
        for r in range(n + 1):
            ok = reach[i + 1][r]
            if not ok and allowed[i]:
                ok = any(reach[i + 1][r - c * i] for c in range(1, r // i + 1))
            reach[i][r] = ok
    if not reach[1][n]:
        return
    t = [0] * n

    def rec(i: int, r: int) -> Iterator[PartitionMultiplicity]:
        if i > n:
            yield tuple(t)
            return
        top = r // i if allowed[i] else 0
        for c in range(top + 1):
            if reach[i + 1][r - c * i]:
                t[i - 1] = c
                yield from rec(i + 1, r - c * i)
        t[i - 1] = 0

    yield from rec(1, n)


def partition_count(n: int) -> int:
    """p(n) by the coin-change recurrence (independent of the enumerator)."""
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for w in range(part, n + 1):
            ways[w] += ways[w - part]
    return ways[n]


def multinomial(t: Sequence[int]) -> int:
    """(t_1 + ... + t_n)! / (t_1! ... t_n!)."""
    if any(x < 0 for x in t):
        raise ValueError("multiplicities must be nonnegative")
    out = factorial(sum(t))
    for x in t:
        out //= factorial(x)
    return out


def trudi_terms(a0: Number, a: Sequence[Number], parts: Optional[Iterable[int]] = None) -> List[Tuple[PartitionMultiplicity, Fraction]]:
    """The individual summands of Trudi's expansion, one per partition of m = len(a)."""
    m = len(a)
    av = [Fraction(x) for x in a]
    neg_a0 = -Fraction(a0)
    if parts is None:
        parts = [i for i in range(1, m + 1) if av[i - 1] != 0]
    out = []
    for t in partitions_fixed_weight(m, parts):
        size = sum(t)
        term = Fraction(multinomial(t)) * neg_a0 ** (m - size)
        for i, ti in enumerate(t):
            if ti:
                term *= av[i] ** ti
        out.append((t, term))
    return out


def trudi_det(a0: Number, a: Sequence[Number]) -> Fraction:
    """Evaluate Trudi's partition sum for the len(a) x len(a) Toeplitz-Hessenberg matrix."""
    av = [Fraction(x) for x in a]
    if Fraction(a0) == 0:
        # only partitions with |t| = m survive, i.e. t = (m, 0, ..., 0)
        return av[0] ** len(av) if av else Fraction(1)
    return sum((term for _, term in trudi_terms(a0, av)), Fraction(0))


def trudi_matrix(a0: Number, a: Sequence[Number]) -> List[List[Fraction]]:
    """The matrix Trudi's formula expands: entry (i, j) is a_(j - i + 1), zero below the subdiagonal."""
    m = len(a)
    coeff = [Fraction(a0)] + [Fraction(x) for x in a]
    zero = Fraction(0)
    return [[coeff[j - i + 1] if j >= i - 1 else zero for j in range(m)] for i in range(m)]


def alpha_via_trudi(profile: RProfile, size: int) -> Fraction:
    """alpha_size as a signed sum over partitions whose parts lie in the profile's support."""
    terms = trudi_terms(1, profile.values(size), parts=profile.parts(size))
    return sum((term for _, term in terms), Fraction(0))


def number_via_trudi(family: FamilyId, n: int, *, check: bool = True) -> Union[int, Fraction]:
    profile = family_profile(family)
    if check:
        profile.check(n)
    elif n < 0:
        raise ValueError("n must be >= 0")
    return profile.to_number(n, alpha_via_trudi(profile, profile.matrix_size(n)))
