"""Run every available method on a family and demand exact agreement.

Each (family, n, method) cell is computed independently; a row passes when all
computed values coincide and match the embedded known value, if there is one.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Union

from . import exact_kernel as ek
from .families import FamilyId
from .genfubini import gen_fubini_via_convolution
from .hessenberg import (
    HypothesisError,
    RProfile,
    det_fraction_free,
    det_via_theorem1,
    family_profile,
    number_from_determinant,
    numbers_from_determinant,
    principal_minor_sum,
    toeplitz_hessenberg,
)
from .power_series import numbers_from_egf
from .records import dumps, encode_value, format_plain
from .trudi import number_via_trudi

Number = Union[int, Fraction]


class CapExceeded(ValueError):
    pass


# Per-method ceilings on n; shared by the CLI and the tests.
LIMITS: Dict[str, int] = {
    "definition": 200,
    "recurrence": 2000,
    "binomial_sum": 200,
    "dyadic_series": 200,
    "egf": 400,
    "determinant": 2000,
    "determinant_oracle": 120,
    "trudi": 30,
    "convolution": 200,
    "minors": 60,
    "minors_brute": 9,
}


# -- independent recurrences for the classical numbers -------------------------


def bernoulli_rec(n: int) -> List[Fraction]:
    """B_0..B_n from sum_{m=0}^{n} C(n+1, m) B_m = 0."""
    B = [Fraction(1)]
    for i in range(1, n + 1):
        B.append(-sum((comb(i + 1, m) * B[m] for m in range(i)), Fraction(0)) / (i + 1))
    return B


def cauchy_rec(n: int) -> List[Fraction]:
    """c_0..c_n from c_n/n! = sum_{j=1}^{n} (-1)^(j+1)/(j+1) * c_(n-j)/(n-j)!."""
    b = [Fraction(1)]
    for i in range(1, n + 1):
        b.append(sum((Fraction((-1) ** (j + 1), j + 1) * b[i - j] for j in range(1, i + 1)), Fraction(0)))
    return [factorial(i) * x for i, x in enumerate(b)]


def euler_rec(n: int) -> List[int]:
    """E_0..E_n from sum_{m=0}^{k} C(2k, 2m) E_(2m) = 0; odd-index terms vanish."""
    E = [0] * (n + 1)
    E[0] = 1
    for k in range(1, n // 2 + 1):
        E[2 * k] = -sum(comb(2 * k, 2 * m) * E[2 * m] for m in range(k))
    return E


# -- method registry -----------------------------------------------------------

SequenceFn = Callable[[FamilyId, int], List[Optional[Number]]]


def _per_n(fn: Callable[[FamilyId, int], Number]) -> SequenceFn:
    def run(family: FamilyId, n_max: int) -> List[Optional[Number]]:
        return [fn(family, n) for n in range(n_max + 1)]

    return run


def _definition(family: FamilyId, n: int) -> int:
    if family.tag == "fubini":
        return ek.fubini_def(n)
    if family.tag == "fubini_restricted":
        return ek.restricted_fubini_def(n, family.param)
    return ek.associated_fubini_def(n, family.param)


def _recurrence(family: FamilyId, n_max: int) -> List[Number]:
    tag = family.tag
    if tag == "bernoulli":
        return bernoulli_rec(n_max)
    if tag == "cauchy":
        return cauchy_rec(n_max)
    if tag == "euler":
        return euler_rec(n_max)
    # the Fubini-type recurrences share one binomial convolution, so evaluate at n_max once
    if tag == "fubini":
        parts = lambda j: True  # noqa: E731
    elif tag == "fubini_restricted":
        parts = lambda j: j <= family.param  # noqa: E731
    else:
        parts = lambda j: j >= family.param  # noqa: E731
    F = [1]
    for i in range(1, n_max + 1):
        F.append(sum(comb(i, j) * F[i - j] for j in range(1, i + 1) if parts(j)))
    return F


def _determinant(family: FamilyId, n_max: int) -> List[Optional[Number]]:
    values = numbers_from_determinant(family, n_max)
    profile = family_profile(family)
    out: List[Optional[Number]] = []
    for n, v in enumerate(values):
        try:
            profile.check(n)
        except HypothesisError:
            v = None
        out.append(v)
    return out


def _checked(fn: Callable[[FamilyId, int], Number]) -> Callable[[FamilyId, int], Optional[Number]]:
    def run(family: FamilyId, n: int) -> Optional[Number]:
        try:
            return fn(family, n)
        except HypothesisError:
            return None

    return run


def _minors(family: FamilyId, j: int) -> Fraction:
    k = family.param
    if j == 0:
        return Fraction(1)
    return principal_minor_sum(family_profile(FamilyId("fubini")), j + k - 1, j, method="product")


def _minors_brute(family: FamilyId, j: int) -> Fraction:
    k = family.param
    if j == 0:
        return Fraction(1)
    return principal_minor_sum(family_profile(FamilyId("fubini")), j + k - 1, j, method="brute")


FUBINI_TYPES = ("fubini", "fubini_restricted", "fubini_associated")
CLASSICAL = ("bernoulli", "cauchy", "euler")

METHODS: Dict[str, tuple] = {
    # name: (applies to family?, sequence function)
    "definition": (lambda f: f.tag in FUBINI_TYPES, _per_n(_definition)),
    "recurrence": (lambda f: f.tag in FUBINI_TYPES + CLASSICAL, _recurrence),
    "binomial_sum": (lambda f: f.tag == "fubini", _per_n(lambda f, n: ek.fubini_binomial_sum(n))),
    "dyadic_series": (lambda f: f.tag == "fubini", _per_n(lambda f, n: ek.fubini_dyadic_series(n))),
    "egf": (lambda f: True, numbers_from_egf),
    "determinant": (lambda f: True, _determinant),
    "determinant_oracle": (
        lambda f: True,
        _per_n(_checked(lambda f, n: number_from_determinant(f, n, method="fraction_free"))),
    ),
    "trudi": (lambda f: True, _per_n(_checked(number_via_trudi))),
    "convolution": (lambda f: f.tag == "gen_fubini", _per_n(lambda f, n: gen_fubini_via_convolution(f.param, n))),
    "minors": (lambda f: f.tag == "gen_fubini", _per_n(_minors)),
    "minors_brute": (lambda f: f.tag == "gen_fubini", _per_n(_minors_brute)),
}


def _cap(method: str, family: FamilyId) -> int:
    cap = LIMITS[method]
    if method == "minors_brute":
        # the brute-force minors live on T_(n + k - 1)
        cap = max(0, cap - family.param + 1)
    return cap


def applicable_methods(family: FamilyId) -> List[str]:
    return sorted(name for name, (applies, _) in METHODS.items() if applies(family))


# -- known values ----------------------------------------------------------------


@dataclass(frozen=True)
class KnownValue:
    family: FamilyId
    n: int
    value: Number
    source: str


def _known_table() -> List[KnownValue]:
    F = FamilyId
    out: List[KnownValue] = []
    fub = [1, 1, 3, 13, 75, 541, 4683, 47293, 545835, 7087261, 102247563]
    out += [KnownValue(F("fubini"), n, v, "ordered Bell numbers, OEIS A000670") for n, v in enumerate(fub)]
    # 1/(1 - (t + t^2/2 + t^3/6)) through t^8, times n!
    r3 = [1, 1, 3, 13, 74, 530, 4550, 45570, 521640]
    out += [KnownValue(F("fubini_restricted", 3), n, v, "series of 1/(1 - t - t^2/2 - t^3/6)") for n, v in enumerate(r3)]
    out.append(KnownValue(F("fubini_restricted", 2), 4, 66, "derived: ordered partitions of 4 with blocks <= 2 (24 + 36 + 6)"))
    # 1/(1 - (t^3/6 + t^4/24 + ...)); n = 7 is left to the method agreement
    a3 = {0: 1, 1: 0, 2: 0, 3: 1, 4: 1, 5: 1, 6: 21, 8: 183, 9: 2101}
    out += [KnownValue(F("fubini_associated", 3), n, v, "series of 1/(1 - (e^t - 1 - t - t^2/2))") for n, v in a3.items()]
    out += [
        KnownValue(F("bernoulli"), 2, Fraction(1, 6), "derived: sum C(n+1,m) B_m = 0"),
        KnownValue(F("cauchy"), 2, Fraction(-1, 6), "derived: 2x2 Cauchy determinant"),
        KnownValue(F("cauchy"), 3, Fraction(1, 4), "derived: 3x3 Cauchy determinant"),
        KnownValue(F("euler"), 4, 5, "derived: sum C(2n,2m) E_2m = 0"),
        KnownValue(F("mod_cauchy_restricted", 3), 3, Fraction(-5, 4), "derived: alpha_3 = alpha_2/2 - alpha_1/3"),
    ]
    g2 = [1, 2, 4, Fraction(22, 3), Fraction(77, 6), Fraction(653, 30), Fraction(6497, 180), Fraction(74141, 1260)]
    out += [KnownValue(F("gen_fubini", 2), j, v, "series of (1/(2-e^t))^2") for j, v in enumerate(g2)]
    g3 = [1, 3, Fraction(15, 2), Fraction(33, 2), Fraction(269, 8), Fraction(2601, 40), Fraction(5809, 48)]
    out += [KnownValue(F("gen_fubini", 3), j, v, "series of (1/(2-e^t))^3") for j, v in enumerate(g3)]
    return out


KNOWN_VALUES: List[KnownValue] = _known_table()


def known_value(family: FamilyId, n: int) -> Optional[KnownValue]:
    for kv in KNOWN_VALUES:
        if kv.family == family and kv.n == n:
            return kv
    return None


# -- reports -------------------------------------------------------------------------


@dataclass
class Row:
    n: int
    values: Dict[str, Number] = field(default_factory=dict)
    skipped: Dict[str, str] = field(default_factory=dict)
    known: Optional[KnownValue] = None
    divergence: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.divergence is None


@dataclass
class CrosscheckReport:
    family: FamilyId
    n_min: int
    n_max: int
    methods: List[str]
    rows: List[Row]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def first_divergence(self) -> Optional[dict]:
        for r in self.rows:
            if r.divergence is not None:
                return r.divergence
        return None

    def value(self, n: int, method: str) -> Optional[Number]:
        for r in self.rows:
            if r.n == n:
                return r.values.get(method)
        return None

    def to_dict(self) -> dict:
        rows = []
        for r in self.rows:
            rows.append(
                {
                    "n": r.n,
                    "values": {m: encode_value(r.values[m]) for m in sorted(r.values)},
                    "skipped": {m: r.skipped[m] for m in sorted(r.skipped)},
                    "known": None if r.known is None else {"value": encode_value(r.known.value), "source": r.known.source},
                    "verdict": "pass" if r.ok else "fail",
                }
            )
        return {
            "family": self.family.tag,
            "params": self.family.params(),
            "n_min": self.n_min,
            "n_max": self.n_max,
            "methods": list(self.methods),
            "verdict": "pass" if self.ok else "fail",
            "first_divergence": self.first_divergence,
            "rows": rows,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())

    def to_table(self) -> str:
        header = ["n"] + self.methods + ["known", "verdict"]
        body = []
        for r in self.rows:
            cells = [str(r.n)]
            for m in self.methods:
                if m in r.values:
                    cells.append(format_plain(r.values[m]))
                else:
                    cells.append("-")
            cells.append("" if r.known is None else format_plain(r.known.value))
            cells.append("pass" if r.ok else "FAIL")
            body.append(cells)
        widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
        lines = [f"# {self.family}"]
        for row in [header] + body:
            lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip())
        div = self.first_divergence
        if div is not None:
            lines.append(
                f"first divergence at n={div['n']}: {div['method']}={div['value']} "
                f"vs {div['reference']}={div['reference_value']} (difference {div['difference']})"
            )
        return "\n".join(lines)


def crosscheck_family(
    family: FamilyId,
    n_max: int,
    methods: Optional[Iterable[str]] = None,
    *,
    n_min: int = 0,
    force: bool = False,
) -> CrosscheckReport:
    """Compute each method for n_min..n_max and compare exactly.

    Explicitly requested methods must respect ``LIMITS`` unless ``force``; with
    the default method set, a method simply stops at its cap.
    """
    if n_max < n_min or n_min < 0:
        raise ValueError("need 0 <= n_min <= n_max")
    explicit = methods is not None
    names = sorted(set(methods)) if explicit else applicable_methods(family)
    for name in names:
        if name not in METHODS:
            raise ValueError(f"unknown method {name!r}")
        if not METHODS[name][0](family):
            raise ValueError(f"method {name!r} does not apply to {family}")
        if explicit and not force and n_max > _cap(name, family):
            raise CapExceeded(f"method {name!r} is capped at n <= {_cap(name, family)} (use --force)")

    rows = [Row(n, known=known_value(family, n)) for n in range(n_min, n_max + 1)]
    for name in names:
        top = n_max if (explicit or force) else min(n_max, _cap(name, family))
        seq = METHODS[name][1](family, top) if top >= n_min else []
        for row in rows:
            if row.n > top:
                row.skipped[name] = "cap"
            elif seq[row.n] is None:
                row.skipped[name] = "outside proven range"
            else:
                row.values[name] = seq[row.n]

    for row in rows:
        row.divergence = _divergence(row)
    return CrosscheckReport(family, n_min, n_max, names, rows)


def _divergence(row: Row) -> Optional[dict]:
    if row.known is not None:
        ref_name, ref = "known", row.known.value
    elif row.values:
        ref_name = min(row.values)
        ref = row.values[ref_name]
    else:
        return None
    for name in sorted(row.values):
        v = row.values[name]
        if v != ref:
            return {
                "n": row.n,
                "method": name,
                "value": format_plain(v),
                "reference": ref_name,
                "reference_value": format_plain(ref),
                "difference": format_plain(Fraction(v) - Fraction(ref)),
            }
    return None


def all_families(max_param: int = 6) -> List[FamilyId]:
    F = FamilyId
    out = [F("fubini"), F("bernoulli"), F("cauchy"), F("euler")]
    out += [F("fubini_restricted", m) for m in range(1, max_param + 1)]
    out += [F("fubini_associated", m) for m in range(1, max_param + 1)]
    for tag in ("mod_cauchy_restricted", "mod_cauchy_associated", "mod_bernoulli_restricted", "mod_bernoulli_associated"):
        out += [F(tag, m) for m in range(2, max_param + 1)]
    out += [F("gen_fubini", k) for k in range(1, max_param + 1)]
    return sorted(out)


def random_profile_trials(seed: int, trials: int = 100, max_n: int = 15) -> List[dict]:
    """Recurrence versus elimination on random rational profiles; returns one record per mismatch."""
    rng = random.Random(seed)
    failures = []
    for i in range(trials):
        n = rng.randint(1, max_n)
        vals = [Fraction(rng.randint(-20, 20), rng.randint(1, 12)) for _ in range(n)]
        profile = RProfile.from_values(vals)
        a = det_via_theorem1(profile, n)
        b = det_fraction_free(toeplitz_hessenberg(profile, n))
        if a != b:
            failures.append({"trial": i, "n": n, "recurrence": format_plain(a), "elimination": format_plain(b)})
    return failures


# -- benchmark -----------------------------------------------------------------------

BENCH_METHODS: Dict[str, Callable[[FamilyId, int], Number]] = {
    "recurrence": lambda f, n: _recurrence(f, n)[n],
    "determinant": lambda f, n: number_from_determinant(f, n),
    "determinant_oracle": lambda f, n: number_from_determinant(f, n, method="fraction_free"),
    "trudi": number_via_trudi,
    "egf": lambda f, n: numbers_from_egf(f, n)[n],
}


@dataclass
class BenchRow:
    method: str
    seconds: float
    value: Number


def bench(family: FamilyId, n: int, methods: Sequence[str], *, repeat: int = 1, force: bool = False) -> List[BenchRow]:
    """Time each method at a single n; all results must agree before timings are returned."""
    rows = []
    for name in methods:
        if name not in BENCH_METHODS:
            raise ValueError(f"unknown bench method {name!r}")
        if name == "recurrence" and family.tag not in FUBINI_TYPES + CLASSICAL:
            raise ValueError(f"no standalone recurrence for {family}")
        if not force and n > LIMITS[name]:
            raise CapExceeded(f"method {name!r} is capped at n <= {LIMITS[name]} (use --force)")
        best = None
        value = None
        for _ in range(max(1, repeat)):
            start = time.perf_counter()
            value = BENCH_METHODS[name](family, n)
            elapsed = time.perf_counter() - start
            best = elapsed if best is None else min(best, elapsed)
        rows.append(BenchRow(name, best, value))
    ref = rows[0].value if rows else None
    for r in rows:
        if r.value != ref:
            raise ArithmeticError(
                f"{family} n={n}: {r.method}={format_plain(r.value)} differs from "
                f"{rows[0].method}={format_plain(ref)} by {format_plain(Fraction(r.value) - Fraction(ref))}"
            )
    return rows


# -- single values ---------------------------------------------------------------------

_SINGLE: Dict[str, Callable[[FamilyId, int], Number]] = {
    "definition": _definition,
    "recurrence": lambda f, n: _recurrence(f, n)[n],
    "binomial_sum": lambda f, n: ek.fubini_binomial_sum(n),
    "dyadic_series": lambda f, n: ek.fubini_dyadic_series(n),
    "egf": lambda f, n: numbers_from_egf(f, n)[n],
    "determinant": number_from_determinant,
    "determinant_oracle": lambda f, n: number_from_determinant(f, n, method="fraction_free"),
    "trudi": number_via_trudi,
    "convolution": lambda f, n: gen_fubini_via_convolution(f.param, n),
    "minors": _minors,
    "minors_brute": _minors_brute,
}


def compute_one(family: FamilyId, n: int, method: str, *, force: bool = False) -> Number:
    """One value by one method, honouring applicability, caps and proven ranges."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {', '.join(sorted(METHODS))}")
    if not METHODS[method][0](family):
        raise ValueError(f"method {method!r} does not apply to {family}")
    if n < 0:
        raise ValueError("n must be >= 0")
    if not force and n > _cap(method, family):
        raise CapExceeded(f"method {method!r} is capped at n <= {_cap(method, family)} (use --force)")
    return _SINGLE[method](family, n)
