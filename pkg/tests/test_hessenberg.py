import random
from fractions import Fraction as Fr
from itertools import combinations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from combdet import exact_kernel as ek
from combdet.crosscheck import all_families
from combdet.families import FamilyId as F
from combdet.hessenberg import (
    HypothesisError,
    R_from_alpha_determinant,
    R_from_alpha_recurrence,
    RProfile,
    char_poly,
    det_fraction_free,
    det_via_theorem1,
    family_profile,
    identity,
    inversion_R_from_alpha,
    lower_toeplitz,
    matmul,
    number_from_determinant,
    principal_minor,
    principal_minor_product,
    principal_minor_sum,
    theorem1_alphas,
    toeplitz_hessenberg,
    unit_lower_toeplitz_inverse,
)
from combdet.power_series import number_from_egf
from oracles import laplace_det

FAMILIES = all_families(6)


def random_values(rng, n):
    return [Fr(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]


def test_matrix_shape():
    T = toeplitz_hessenberg([Fr(1), Fr(2), Fr(3)], 3)
    assert T == [[1, 1, 0], [2, 1, 1], [3, 2, 1]]
    assert toeplitz_hessenberg([5], 0) == []


def test_det_fraction_free_small():
    assert det_fraction_free([]) == 1
    assert det_fraction_free([[Fr(1, 2), Fr(1, 3)], [Fr(1, 4), Fr(1, 5)]]) == Fr(1, 60)
    assert det_fraction_free([[0, 1], [1, 0]]) == -1
    assert det_fraction_free([[1, 2], [2, 4]]) == 0


def test_det_against_leibniz():
    rng = random.Random(3)
    for n in range(1, 7):
        for _ in range(5):
            M = [random_values(rng, n) for _ in range(n)]
            assert det_fraction_free(M) == laplace_det(M)


def test_theorem1_small_cases():
    # 1x1 and 2x2 by hand
    assert det_via_theorem1([Fr(3)], 1) == 3
    assert det_via_theorem1([Fr(3), Fr(5)], 2) == 3 * 3 - 5
    assert theorem1_alphas([Fr(1)], 0) == [1]


@pytest.mark.parametrize("seed", range(100))
def test_theorem1_vs_bareiss_random(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 15)
    R = random_values(rng, n)
    assert det_via_theorem1(R, n) == det_fraction_free(toeplitz_hessenberg(R, n))


@pytest.mark.parametrize("fam", FAMILIES, ids=str)
def test_theorem1_vs_bareiss_family(fam):
    prof = family_profile(fam)
    alphas = theorem1_alphas(prof, 25)
    for n in (1, 2, 7, 13, 25):
        assert alphas[n] == det_fraction_free(toeplitz_hessenberg(prof, n))


@pytest.mark.parametrize("fam", FAMILIES, ids=str)
def test_determinant_equals_series(fam):
    prof = family_profile(fam)
    for n in range(26):
        if not prof.proven(n):
            continue
        assert number_from_determinant(fam, n) == number_from_egf(fam, n)


@pytest.mark.parametrize(
    "fam, n, expected",
    [
        (F("fubini"), 5, 541),
        (F("fubini"), 6, 4683),
        (F("fubini_restricted", 3), 5, 530),
        (F("fubini_restricted", 3), 6, 4550),
        (F("fubini_associated", 3), 5, 1),
        (F("fubini_associated", 3), 6, 21),
        (F("bernoulli"), 2, Fr(1, 6)),
        (F("cauchy"), 2, Fr(-1, 6)),
        (F("euler"), 4, 5),
        (F("euler"), 5, 0),
        (F("mod_cauchy_restricted", 3), 3, Fr(-5, 4)),
    ],
    ids=str,
)
def test_spot_values(fam, n, expected):
    assert number_from_determinant(fam, n) == expected
    assert number_from_determinant(fam, n, method="fraction_free") == expected


def test_proven_matches_check():
    for fam in (F("fubini_associated", 4), F("mod_bernoulli_associated", 3)):
        prof = family_profile(fam)
        for n in range(10):
            if prof.proven(n):
                prof.check(n)
            else:
                with pytest.raises(HypothesisError):
                    prof.check(n)


def test_hypothesis_ranges():
    with pytest.raises(HypothesisError, match="n-1 >= m"):
        number_from_determinant(F("mod_cauchy_associated", 3), 3)
    with pytest.raises(HypothesisError):
        number_from_determinant(F("mod_bernoulli_associated", 4), 2)
    with pytest.raises(HypothesisError):
        number_from_determinant(F("fubini_associated", 4), 3)
    with pytest.raises(HypothesisError):
        number_from_determinant(F("fubini"), -1)
    assert number_from_determinant(F("mod_cauchy_associated", 3), 0) == 1


def test_unchecked_values_still_match_series():
    # the recurrence happens to hold below the proven range as well
    for fam in (F("mod_cauchy_associated", 4), F("mod_bernoulli_associated", 5), F("fubini_associated", 6)):
        for n in range(1, 7):
            assert number_from_determinant(fam, n, check=False) == number_from_egf(fam, n)


def test_classical_oracles():
    b = [number_from_determinant(F("bernoulli"), n) for n in range(13)]
    for n in range(1, 13):
        assert sum(ek.binomial(n + 1, m) * b[m] for m in range(n + 1)) == 0
    E = [number_from_determinant(F("euler"), n) for n in range(11)]
    for n in range(1, 6):
        assert sum(ek.binomial(2 * n, 2 * m) * E[2 * m] for m in range(n + 1)) == 0


def test_principal_minor_product_matches_elimination():
    for fam in (F("fubini"), F("cauchy"), F("fubini_restricted", 2)):
        prof = family_profile(fam)
        alphas = theorem1_alphas(prof, 10)
        for n in range(1, 11):
            T = toeplitz_hessenberg(prof, n)
            for l in (1, 2):
                for deleted in combinations(range(1, n + 1), l):
                    assert principal_minor(T, deleted) == principal_minor_product(alphas, n, deleted)


def test_single_deletion_formula():
    # deleting index i leaves T_(i-1) and T_(n-i) on the diagonal
    n = 6
    T = toeplitz_hessenberg(family_profile(F("fubini")), n)
    a = [Fr(ek.fubini_rec(j), factorial(j)) for j in range(n + 1)]
    for i in range(1, n + 1):
        assert principal_minor(T, [i]) == a[i - 1] * a[n - i]


def test_principal_minor_index_checks():
    T = identity(3)
    with pytest.raises(IndexError):
        principal_minor(T, [4])
    with pytest.raises(ValueError):
        principal_minor(T, [2, 1])


def test_minor_sums_of_t5():
    prof = family_profile(F("fubini"))
    assert principal_minor_sum(prof, 5, 4) == Fr(77, 6)
    assert principal_minor_sum(prof, 5, 3) == Fr(33, 2)
    assert principal_minor_sum(prof, 5, 4, method="product") == Fr(77, 6)


def test_char_poly_t5():
    T = toeplitz_hessenberg(family_profile(F("fubini")), 5)
    assert char_poly(T) == [-1, 5, -12, Fr(33, 2), Fr(-77, 6), Fr(541, 120)]


def test_char_poly_small():
    assert char_poly([]) == [1]
    assert char_poly([[Fr(2), 1], [1, Fr(2)]]) == [1, -4, 3]


@pytest.mark.parametrize("n", range(1, 11))
def test_char_poly_minor_duality(n):
    # the coefficient of x^(n-l) in det(T - xI) is (-1)^(n-l) times the sum of order-l minors
    for fam in (F("fubini"), F("bernoulli")):
        prof = family_profile(fam)
        coeffs = char_poly(toeplitz_hessenberg(prof, n))
        for l in range(1, n + 1):
            expected = (-1) ** (n - l) * principal_minor_sum(prof, n, l, method="product")
            assert coeffs[l] == expected
            if n <= 7:
                assert principal_minor_sum(prof, n, l) == principal_minor_sum(prof, n, l, method="product")
        assert coeffs[n] == theorem1_alphas(prof, n)[n]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=12), min_size=1, max_size=20))
def test_inversion_round_trip(R):
    alphas = theorem1_alphas(R, len(R))
    assert inversion_R_from_alpha(alphas) == [Fr(x) for x in R]


def test_inversion_requires_unit_start():
    with pytest.raises(ValueError):
        R_from_alpha_recurrence([2, 1])


def test_inversion_of_fubini_alphas():
    alpha = [Fr(ek.fubini_rec(n), factorial(n)) for n in range(16)]
    R = R_from_alpha_determinant(alpha)
    assert R == [Fr((-1) ** (n - 1), factorial(n)) for n in range(1, 16)]


@pytest.mark.parametrize("m", range(1, 7))
def test_inversion_of_restricted_and_associated(m):
    r_alpha = [Fr(ek.restricted_fubini_rec(n, m), factorial(n)) for n in range(16)]
    a_alpha = [Fr(ek.associated_fubini_rec(n, m), factorial(n)) for n in range(16)]
    R_r = R_from_alpha_determinant(r_alpha)
    R_a = R_from_alpha_determinant(a_alpha)
    assert R_r == R_from_alpha_recurrence(r_alpha)
    assert R_a == R_from_alpha_recurrence(a_alpha)
    for n in range(1, 16):
        full = Fr((-1) ** (n - 1), factorial(n))
        assert R_r[n - 1] == (full if n <= m else 0)
        assert R_a[n - 1] == (full if n >= m else 0)


def test_toeplitz_inverse_identity_random():
    rng = random.Random(11)
    for n in range(0, 12):
        col = [Fr(1)] + random_values(rng, n)
        inv = unit_lower_toeplitz_inverse(col, n)
        assert matmul(lower_toeplitz(col, n + 1), inv) == identity(n + 1)
        assert matmul(inv, lower_toeplitz(col, n + 1)) == identity(n + 1)


def test_toeplitz_inverse_of_fubini_column():
    n = 8
    alpha = [Fr(ek.fubini_rec(j), factorial(j)) for j in range(n + 1)]
    inv = unit_lower_toeplitz_inverse(alpha, n)
    # reciprocal of 1/(2 - e^t) is 2 - e^t
    assert [row[0] for row in inv] == [Fr(1)] + [Fr(-1, factorial(j)) for j in range(1, n + 1)]
    # the sign-alternated column inverts to the R-profile itself
    alt = [(-1) ** j * a for j, a in enumerate(alpha)]
    inv_alt = unit_lower_toeplitz_inverse(alt, n)
    R = family_profile(F("fubini")).values(n)
    assert [row[0] for row in inv_alt] == [Fr(1)] + R


@pytest.mark.parametrize("m", range(1, 5))
def test_toeplitz_inverse_is_banded(m):
    n = 10
    r = [Fr(ek.restricted_fubini_rec(j, m), factorial(j)) for j in range(n + 1)]
    col = [row[0] for row in unit_lower_toeplitz_inverse(r, n)]
    assert all(c == 0 for c in col[m + 1 :])
    a = [Fr(ek.associated_fubini_rec(j, m), factorial(j)) for j in range(n + 1)]
    col = [row[0] for row in unit_lower_toeplitz_inverse(a, n)]
    assert all(c == 0 for c in col[1:m])


def test_toeplitz_inverse_rejects_bad_column():
    with pytest.raises(ValueError):
        unit_lower_toeplitz_inverse([2, 1], 1)
    with pytest.raises(ValueError):
        unit_lower_toeplitz_inverse([1], 3)


def test_profile_from_values():
    prof = RProfile.from_values([1, 2])
    assert prof.values(4) == [1, 2, 0, 0]
    assert prof.parts(4) == [1, 2]
    with pytest.raises(ValueError):
        prof.R(0)
