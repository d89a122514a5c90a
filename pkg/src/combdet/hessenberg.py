"""Toeplitz-Hessenberg determinants, their recurrence, and the exact linear algebra used to check them.

A profile R(1), R(2), ... defines the n x n lower Hessenberg matrix with ones on
the superdiagonal and R(i - j + 1) at position (i, j) for j <= i.  Its
determinant alpha_n satisfies

    alpha_0 = 1,   alpha_n = sum_{j=1..n} (-1)^(j-1) R(j) alpha_(n-j),

which is the O(n^2) route.  ``det_fraction_free`` is the independent O(n^3)
oracle for it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, factorial, lcm
from typing import Callable, List, Optional, Sequence, Union

from .families import FamilyError, FamilyId

Number = Union[int, Fraction]
ExactMatrix = List[List[Fraction]]


class HypothesisError(FamilyError):
    """A determinant representation was requested outside its proven range."""


# -- profiles -----------------------------------------------------------------


def _fubini_r(j: int) -> Fraction:
    return Fraction((-1) ** (j - 1), factorial(j))


def _gen_fubini_r(k: int) -> Callable[[int], Fraction]:
    # (2 - e^t)^k = sum_i C(k,i) 2^(k-i) (-1)^i e^(it); R(j) = (-1)^j [t^j] of that
    def r(j: int) -> Fraction:
        s = sum(comb(k, i) * 2 ** (k - i) * (-1) ** i * i**j for i in range(k + 1))
        return Fraction((-1) ** j * s, factorial(j))

    return r


_PREFACTORS = {
    "n!": lambda n: factorial(n),
    "(-1)^n n!": lambda n: (-1) ** n * factorial(n),
    "(-1)^n (2n)!": lambda n: (-1) ** n * factorial(2 * n),
    "1": lambda n: 1,
}


@dataclass(frozen=True)
class RProfile:
    """Determinant ingredients for one sequence family.

    ``prefactor`` names the rule turning alpha_n into the family's number; for
    Euler numbers the matrix size is half the requested index.
    """

    r: Callable[[int], Fraction] = field(compare=False)
    support: str = "full"
    prefactor: str = "1"
    family: Optional[FamilyId] = None
    hypothesis: str = ""
    _valid: Callable[[int], bool] = field(default=lambda n: True, compare=False, repr=False)

    def R(self, j: int) -> Fraction:
        if j < 1:
            raise ValueError("R is indexed from 1")
        return Fraction(self.r(j))

    def values(self, n: int) -> List[Fraction]:
        """[R(1), ..., R(n)]."""
        return [self.R(j) for j in range(1, n + 1)]

    def parts(self, n: int) -> List[int]:
        """Indices j <= n where R(j) is nonzero."""
        return [j for j in range(1, n + 1) if self.r(j) != 0]

    def matrix_size(self, n: int) -> int:
        return n // 2 if self.prefactor == "(-1)^n (2n)!" else n

    def scale(self, size: int) -> int:
        return _PREFACTORS[self.prefactor](size)

    def proven(self, n: int) -> bool:
        """Whether the determinant representation is established at index n."""
        return n == 0 or (n > 0 and self._valid(n))

    def check(self, n: int) -> None:
        """Raise HypothesisError if the representation is not proven for index n."""
        if n < 0:
            raise HypothesisError("n must be >= 0")
        if n == 0:
            return  # empty determinant is 1
        if not self._valid(n):
            raise HypothesisError(f"{self.hypothesis} (got n={n})")

    def to_number(self, n: int, alpha: Fraction) -> Number:
        if self.prefactor == "(-1)^n (2n)!" and n % 2:
            return 0
        value = self.scale(self.matrix_size(n)) * alpha
        if self.family is not None and self.family.is_integer:
            if value.denominator != 1:
                raise ArithmeticError(f"{self.family} at n={n} is not an integer: {value}")
            return int(value)
        return value

    def alpha_from_number(self, size: int, value: Number) -> Fraction:
        """Invert the prefactor: alpha for a matrix of the given size."""
        return Fraction(value) / self.scale(size)

    @classmethod
    def from_values(cls, values: Sequence[Number], family: Optional[FamilyId] = None) -> "RProfile":
        vals = tuple(Fraction(v) for v in values)

        def r(j: int) -> Fraction:
            return vals[j - 1] if j <= len(vals) else Fraction(0)

        return cls(r=r, support=f"explicit, {len(vals)} values", family=family)


def family_profile(family: FamilyId) -> RProfile:
    tag, m = family.tag, family.param
    if tag == "fubini":
        return RProfile(_fubini_r, "full", "n!", family)
    if tag == "fubini_restricted":
        return RProfile(
            lambda j: _fubini_r(j) if j <= m else Fraction(0), f"band j <= {m}", "n!", family
        )
    if tag == "fubini_associated":
        return RProfile(
            lambda j: _fubini_r(j) if j >= m else Fraction(0),
            f"band j >= {m}",
            "n!",
            family,
            f"associated Fubini determinant requires n >= m >= 1 (m={m})",
            lambda n: n >= m,
        )
    if tag == "bernoulli":
        return RProfile(lambda j: Fraction(1, factorial(j + 1)), "full", "(-1)^n n!", family)
    if tag == "cauchy":
        return RProfile(lambda j: Fraction(1, j + 1), "full", "n!", family)
    if tag == "euler":
        return RProfile(lambda j: Fraction(1, factorial(2 * j)), "full", "(-1)^n (2n)!", family)
    if tag == "mod_cauchy_restricted":
        return RProfile(
            lambda j: Fraction(1, j + 1) if j <= m - 1 else Fraction(0),
            f"band j <= {m - 1}",
            "n!",
            family,
        )
    if tag == "mod_cauchy_associated":
        return RProfile(
            lambda j: Fraction(1, j + 1) if j >= m - 1 else Fraction(0),
            f"band j >= {m - 1}",
            "n!",
            family,
            f"modified associated Cauchy determinant requires n-1 >= m >= 2 (m={m})",
            lambda n: n - 1 >= m,
        )
    if tag == "mod_bernoulli_restricted":
        return RProfile(
            lambda j: Fraction(1, factorial(j + 1)) if j <= m - 1 else Fraction(0),
            f"band j <= {m - 1}",
            "(-1)^n n!",
            family,
        )
    if tag == "mod_bernoulli_associated":
        return RProfile(
            lambda j: Fraction(1, factorial(j + 1)) if j >= m - 1 else Fraction(0),
            f"band j >= {m - 1}",
            "(-1)^n n!",
            family,
            f"modified associated Bernoulli determinant requires n-1 >= m >= 2 (m={m})",
            lambda n: n - 1 >= m,
        )
    if tag == "gen_fubini":
        return RProfile(_gen_fubini_r(m), "full", "1", family)
    raise FamilyError(f"unknown family {tag!r}")  # pragma: no cover


# -- matrices -----------------------------------------------------------------


def toeplitz_hessenberg(R: Union[RProfile, Sequence[Number]], n: int, superdiag: Number = 1) -> ExactMatrix:
    """n x n lower Hessenberg Toeplitz matrix with R(i-j+1) on and below the diagonal."""
    vals = R.values(n) if isinstance(R, RProfile) else [Fraction(v) for v in R[:n]]
    if len(vals) < n:
        raise ValueError(f"need {n} profile values, got {len(vals)}")
    one = Fraction(superdiag)
    zero = Fraction(0)
    return [
        [vals[i - j] if j <= i else (one if j == i + 1 else zero) for j in range(n)]
        for i in range(n)
    ]


def identity(n: int) -> ExactMatrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    cols = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)) for col in cols] for row in A]


def _require_square(M: Sequence[Sequence[Number]]) -> int:
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix must be square")
    return n


def det_fraction_free(M: Sequence[Sequence[Number]]) -> Fraction:
    """Exact determinant by Bareiss elimination.

    Rows are first cleared of denominators, so elimination runs over the
    integers with exact divisions only.
    """
    n = _require_square(M)
    if n == 0:
        return Fraction(1)
    rows = []
    scale = 1
    for row in M:
        fr = [Fraction(x) for x in row]
        d = lcm(*(x.denominator for x in fr))
        rows.append([x.numerator * (d // x.denominator) for x in fr])
        scale *= d
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = rows[k][k]
        for i in range(k + 1, n):
            ri, rk = rows[i], rows[k]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (pivot * ri[j] - a * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return Fraction(sign * rows[n - 1][n - 1], scale)


def theorem1_alphas(R: Union[RProfile, Sequence[Number]], n: int) -> List[Fraction]:
    """alpha_0..alpha_n from the determinant recurrence."""
    vals = R.values(n) if isinstance(R, RProfile) else [Fraction(v) for v in R[:n]]
    if len(vals) < n:
        raise ValueError(f"need {n} profile values, got {len(vals)}")
    # Work with integers N_i = i! K^i alpha_i, where K clears every denominator of
    # j! R(j).  The recurrence then reads N_i = sum_j C(i, j) c_j N_(i-j) with
    # integer c_j = (-1)^(j-1) j! K^j R(j), avoiding a gcd on every step.
    scaled = [v * factorial(j) for j, v in enumerate(vals, start=1)]
    K = 1
    for v in scaled:
        K = lcm(K, v.denominator)
    c = [0] * (n + 1)
    for j, v in enumerate(scaled, start=1):
        x = int(v * K**j)
        c[j] = x if j % 2 else -x
    support = [j for j in range(1, n + 1) if c[j]]
    N = [1]
    row = [1]  # Pascal row i
    for i in range(1, n + 1):
        row = [1] + [row[j - 1] + row[j] for j in range(1, i)] + [1]
        s = 0
        for j in support:
            if j > i:
                break
            s += row[j] * c[j] * N[i - j]
        N.append(s)
    return [Fraction(N[i], factorial(i) * K**i) for i in range(n + 1)]


def det_via_theorem1(profile: Union[RProfile, Sequence[Number]], n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be >= 0")
    return theorem1_alphas(profile, n)[n]


def number_from_determinant(family: FamilyId, n: int, *, method: str = "recurrence", check: bool = True) -> Number:
    """The family's n-th number from its Toeplitz-Hessenberg determinant.

    ``method`` is "recurrence" (O(n^2)) or "fraction_free" (explicit matrix,
    Bareiss).  With ``check`` the index must lie in the range where the
    determinant representation is proven.
    """
    profile = family_profile(family)
    if check:
        profile.check(n)
    elif n < 0:
        raise ValueError("n must be >= 0")
    size = profile.matrix_size(n)
    if method == "recurrence":
        alpha = det_via_theorem1(profile, size)
    elif method == "fraction_free":
        alpha = det_fraction_free(toeplitz_hessenberg(profile, size))
    else:
        raise ValueError(f"unknown determinant method {method!r}")
    return profile.to_number(n, alpha)


def numbers_from_determinant(family: FamilyId, n_max: int) -> List[Number]:
    """Values for n = 0..n_max from one recurrence pass, no hypothesis check."""
    profile = family_profile(family)
    size = profile.matrix_size(n_max)
    alphas = theorem1_alphas(profile, size)
    return [profile.to_number(n, alphas[profile.matrix_size(n)]) for n in range(n_max + 1)]


# -- principal minors and characteristic polynomial ---------------------------


def _check_deleted(n: int, deleted: Sequence[int]) -> List[int]:
    idx = list(deleted)
    if any(i < 1 or i > n for i in idx):
        raise IndexError(f"deleted indices must lie in 1..{n}")
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise ValueError("deleted indices must be strictly increasing")
    return idx


def principal_minor(M: Sequence[Sequence[Number]], deleted: Sequence[int]) -> Fraction:
    """Determinant of M with the listed (1-based) rows and columns removed."""
    n = _require_square(M)
    gone = set(_check_deleted(n, deleted))
    keep = [i for i in range(n) if i + 1 not in gone]
    return det_fraction_free([[M[i][j] for j in keep] for i in keep])


def principal_minor_product(alphas: Sequence[Number], n: int, deleted: Sequence[int]) -> Fraction:
    """Principal minor of a Toeplitz-Hessenberg T_n as a product over the kept blocks.

    Deleting indices i_1 < ... < i_l leaves a block lower-triangular matrix whose
    diagonal blocks are T_(i_1 - 1), T_(i_2 - i_1 - 1), ..., T_(n - i_l), so the
    minor is the product of the corresponding alphas.
    """
    idx = _check_deleted(n, deleted)
    bounds = [0] + idx + [n + 1]
    result = Fraction(1)
    for a, b in zip(bounds, bounds[1:]):
        result *= Fraction(alphas[b - a - 1])
    return result


def _series_power_coeff(alphas: Sequence[Fraction], power: int, degree: int) -> Fraction:
    poly = [Fraction(1)] + [Fraction(0)] * degree
    base = [Fraction(a) for a in alphas[: degree + 1]]
    for _ in range(power):
        poly = [sum((poly[i] * base[d - i] for i in range(d + 1)), Fraction(0)) for d in range(degree + 1)]
    return poly[degree]


def principal_minor_sum(
    profile: Union[RProfile, Sequence[Number]], n: int, order: int, *, method: str = "brute"
) -> Fraction:
    """Sum of all principal minors of order ``order`` of the profile's T_n.

    "brute" enumerates every choice of deleted indices and evaluates each minor
    by elimination; "product" uses the block product, which collapses the sum to
    the coefficient of t^order in (sum_j alpha_j t^j)^(n - order + 1).
    """
    if not 1 <= order <= n:
        raise ValueError("need 1 <= order <= n")
    if method == "brute":
        T = toeplitz_hessenberg(profile, n)
        total = Fraction(0)
        for deleted in combinations(range(1, n + 1), n - order):
            total += principal_minor(T, deleted)
        return total
    if method == "product":
        alphas = theorem1_alphas(profile, n)
        return _series_power_coeff(alphas, n - order + 1, order)
    raise ValueError(f"unknown method {method!r}")


def char_poly(M: Sequence[Sequence[Number]]) -> List[Fraction]:
    """Coefficients of det(M - xI), highest degree first (leading coefficient (-1)^n).

    Faddeev-LeVerrier over the rationals.
    """
    n = _require_square(M)
    A = [[Fraction(x) for x in row] for row in M]
    # c[i] is the coefficient of x^i in det(xI - M)
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        Mk = matmul(A, Mk)
        for i in range(n):
            Mk[i][i] += c[n - k + 1]
        AM = matmul(A, Mk)
        c[n - k] = -sum(AM[i][i] for i in range(n)) / k
    sign = -1 if n % 2 else 1
    return [sign * c[i] for i in range(n, -1, -1)]


# -- inversion ----------------------------------------------------------------


def _require_unit_start(alpha: Sequence[Number]) -> List[Fraction]:
    a = [Fraction(x) for x in alpha]
    if not a or a[0] != 1:
        raise ValueError("alpha[0] must equal 1")
    return a


def R_from_alpha_recurrence(alpha: Sequence[Number]) -> List[Fraction]:
    """R(1..n) that regenerate alpha_0..alpha_n under the determinant recurrence."""
    a = _require_unit_start(alpha)
    R: List[Fraction] = []
    for n in range(1, len(a)):
        rest = sum(((-1) ** (j - 1) * R[j - 1] * a[n - j] for j in range(1, n)), Fraction(0))
        R.append((-1) ** (n - 1) * (a[n] - rest))
    return R


def R_from_alpha_determinant(alpha: Sequence[Number]) -> List[Fraction]:
    """R(n) as the determinant of the Hessenberg matrix built from alpha_1..alpha_n."""
    a = _require_unit_start(alpha)
    return [det_fraction_free(toeplitz_hessenberg(a[1:], n)) for n in range(1, len(a))]


def inversion_R_from_alpha(alpha: Sequence[Number]) -> List[Fraction]:
    """Recover R(1..n) from alpha_0..alpha_n, by recurrence and by determinant; both must agree."""
    rec = R_from_alpha_recurrence(alpha)
    det = R_from_alpha_determinant(alpha)
    for j, (x, y) in enumerate(zip(rec, det), start=1):
        if x != y:
            raise ArithmeticError(f"R({j}): recurrence {x} != determinant {y}")
    return rec


def lower_toeplitz(column: Sequence[Number], size: int) -> ExactMatrix:
    col = [Fraction(c) for c in column[:size]]
    if len(col) < size:
        raise ValueError(f"need {size} column entries, got {len(col)}")
    zero = Fraction(0)
    return [[col[i - j] if j <= i else zero for j in range(size)] for i in range(size)]


def unit_lower_toeplitz_inverse(first_column: Sequence[Number], n: int) -> ExactMatrix:
    """Inverse of the (n+1) x (n+1) unit lower-triangular Toeplitz matrix with this first column.

    The inverse's first column is the power-series reciprocal of the input column.
    """
    col = [Fraction(c) for c in first_column[: n + 1]]
    if len(col) < n + 1:
        raise ValueError(f"need {n + 1} column entries, got {len(col)}")
    if col[0] != 1:
        raise ValueError("first_column[0] must equal 1")
    inv = [Fraction(1)]
    for i in range(1, n + 1):
        inv.append(-sum((col[j] * inv[i - j] for j in range(1, i + 1)), Fraction(0)))
    result = lower_toeplitz(inv, n + 1)
    if matmul(lower_toeplitz(col, n + 1), result) != identity(n + 1):
        raise ArithmeticError("Toeplitz inverse failed the identity check")
    return result
