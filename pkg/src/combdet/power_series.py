"""Truncated power series over exact rationals and the generating function of each family."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Tuple, Union

from .families import FamilyError, FamilyId

Number = Union[int, Fraction]


class OrderMismatch(ValueError):
    pass


@dataclass(frozen=True)
class TruncatedEGF:
    """Coefficients c_0..c_N of sum c_i t^i, truncated at degree ``order`` (inclusive).

    The coefficients are the raw power-series coefficients; for an exponential
    generating function the n-th sequence term is n! * coeffs[n].
    """

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Number], order: int) -> "TruncatedEGF":
        """Embed a finite coefficient list at the given order, padding or truncating."""
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        return cls(tuple(cs))

    @classmethod
    def constant(cls, c: Number, order: int) -> "TruncatedEGF":
        return cls.from_coeffs([c], order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "TruncatedEGF") -> "TruncatedEGF":
        return ps_add(self, other)

    def __sub__(self, other: "TruncatedEGF") -> "TruncatedEGF":
        return ps_add(self, other.scale(-1))

    def __neg__(self) -> "TruncatedEGF":
        return self.scale(-1)

    def __mul__(self, other: "TruncatedEGF") -> "TruncatedEGF":
        return ps_mul(self, other)

    def scale(self, c: Number) -> "TruncatedEGF":
        return TruncatedEGF(tuple(c * a for a in self.coeffs))

    def pow(self, k: int) -> "TruncatedEGF":
        if k < 0:
            raise ValueError("k must be >= 0")
        result = TruncatedEGF.constant(1, self.order)
        for _ in range(k):
            result = ps_mul(result, self)
        return result

    def shift_down(self) -> "TruncatedEGF":
        """Divide by t; requires a zero constant term and drops one degree of order."""
        if self.coeffs[0] != 0:
            raise ValueError("cannot divide by t: constant term is nonzero")
        if self.order == 0:
            raise ValueError("cannot divide an order-0 series by t")
        return TruncatedEGF(self.coeffs[1:])

    def egf_terms(self) -> list:
        """Sequence values n! * c_n."""
        return [factorial(i) * c for i, c in enumerate(self.coeffs)]


def _check_orders(a: TruncatedEGF, b: TruncatedEGF) -> None:
    if a.order != b.order:
        raise OrderMismatch(f"order mismatch: {a.order} vs {b.order}")


def ps_add(a: TruncatedEGF, b: TruncatedEGF) -> TruncatedEGF:
    _check_orders(a, b)
    return TruncatedEGF(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def ps_mul(a: TruncatedEGF, b: TruncatedEGF) -> TruncatedEGF:
    _check_orders(a, b)
    N = a.order
    A, B = a.coeffs, b.coeffs
    out = []
    for n in range(N + 1):
        s = Fraction(0)
        for i in range(n + 1):
            if A[i] and B[n - i]:
                s += A[i] * B[n - i]
        out.append(s)
    return TruncatedEGF(tuple(out))


def ps_reciprocal(a: TruncatedEGF) -> TruncatedEGF:
    A = a.coeffs
    if A[0] == 0:
        raise ZeroDivisionError("series has zero constant term")
    inv0 = 1 / A[0]
    B = [inv0]
    for n in range(1, a.order + 1):
        s = sum((A[j] * B[n - j] for j in range(1, n + 1) if A[j]), Fraction(0))
        B.append(-inv0 * s)
    return TruncatedEGF(tuple(B))


# -- generators ---------------------------------------------------------------


def exp_series(N: int) -> TruncatedEGF:
    return TruncatedEGF(tuple(Fraction(1, factorial(i)) for i in range(N + 1)))


def log1p_series(N: int) -> TruncatedEGF:
    return TruncatedEGF.from_coeffs(
        [0] + [Fraction((-1) ** (i - 1), i) for i in range(1, N + 1)], N
    )


def cosh_series(N: int) -> TruncatedEGF:
    return TruncatedEGF(
        tuple(Fraction(1, factorial(i)) if i % 2 == 0 else Fraction(0) for i in range(N + 1))
    )


def poly_F_m(m: int, N: int) -> TruncatedEGF:
    """t - t^2/2 + ... + (-1)^(m-1) t^m/m, the degree-m truncation of log(1+t)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return TruncatedEGF.from_coeffs(
        [0] + [Fraction((-1) ** (i - 1), i) for i in range(1, m + 1)], N
    )


def poly_E_m(m: int, N: int) -> TruncatedEGF:
    """1 + t + ... + t^m/m!, the degree-m truncation of exp(t)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return TruncatedEGF.from_coeffs([Fraction(1, factorial(i)) for i in range(m + 1)], N)


def _t(N: int) -> TruncatedEGF:
    return TruncatedEGF.from_coeffs([0, 1], N)


def _t_over(den: TruncatedEGF) -> TruncatedEGF:
    # den is built one degree higher than the target so that den/t keeps full order
    return ps_reciprocal(den.shift_down())


def fubini_egf(N: int) -> TruncatedEGF:
    return ps_reciprocal(TruncatedEGF.constant(2, N) - exp_series(N))


def family_denominator(family: FamilyId, N: int) -> TruncatedEGF:
    """The series D with D(0) = 1 whose reciprocal is the family's EGF.

    For the t/(...) families this is the denominator already divided by t.
    """
    tag, p = family.tag, family.param
    one = TruncatedEGF.constant(1, N)
    if tag == "fubini":
        return TruncatedEGF.constant(2, N) - exp_series(N)
    if tag == "fubini_restricted":
        return one - (poly_E_m(p, N) - one)
    if tag == "fubini_associated":
        return one - (exp_series(N) - poly_E_m(p - 1, N))
    if tag == "euler":
        return cosh_series(N)
    if tag == "gen_fubini":
        return (TruncatedEGF.constant(2, N) - exp_series(N)).pow(p)
    M = N + 1
    if tag == "bernoulli":
        den = exp_series(M) - TruncatedEGF.constant(1, M)
    elif tag == "cauchy":
        den = log1p_series(M)
    elif tag == "mod_cauchy_restricted":
        den = poly_F_m(p, M)
    elif tag == "mod_cauchy_associated":
        den = log1p_series(M) - poly_F_m(p - 1, M) + _t(M)
    elif tag == "mod_bernoulli_restricted":
        den = poly_E_m(p, M) - TruncatedEGF.constant(1, M)
    elif tag == "mod_bernoulli_associated":
        # e^t - E_{m-1}(t) + t; the tempting e^t - E_m(t) - 1 + t has constant term -1
        den = exp_series(M) - poly_E_m(p - 1, M) + _t(M)
    else:  # pragma: no cover - FamilyId validates tags
        raise FamilyError(f"unknown family {tag!r}")
    return den.shift_down()


def family_egf(family: FamilyId, N: int) -> TruncatedEGF:
    if N < 0:
        raise ValueError("N must be >= 0")
    if family.tag == "gen_fubini":
        return fubini_egf(N).pow(family.param)
    den = family_denominator(family, N)
    if den.coeffs[0] == 0:
        raise FamilyError(f"{family}: denominator has zero constant term after dividing by t")
    return ps_reciprocal(den)


def coefficient_to_number(family: FamilyId, n: int, coeff: Fraction) -> Number:
    """Turn the raw coefficient [t^n] into the family's named number."""
    if family.tag == "gen_fubini":
        return coeff
    value = factorial(n) * coeff
    if family.is_integer:
        if value.denominator != 1:
            raise ArithmeticError(f"{family} at n={n} is not an integer: {value}")
        return int(value)
    return value


def number_from_egf(family: FamilyId, n: int) -> Number:
    if n < 0:
        raise ValueError("n must be >= 0")
    egf = family_egf(family, n)
    return coefficient_to_number(family, n, egf.coeffs[n])


def numbers_from_egf(family: FamilyId, n_max: int) -> list:
    """All values for n = 0..n_max from a single series expansion."""
    egf = family_egf(family, n_max)
    return [coefficient_to_number(family, n, c) for n, c in enumerate(egf.coeffs)]

