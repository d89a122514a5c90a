import json
from fractions import Fraction as Fr

import pytest

from combdet import crosscheck as cc
from combdet.crosscheck import (
    KNOWN_VALUES,
    CapExceeded,
    all_families,
    applicable_methods,
    bench,
    bernoulli_rec,
    cauchy_rec,
    compute_one,
    crosscheck_family,
    euler_rec,
    known_value,
    random_profile_trials,
)
from combdet.families import FamilyId as F
from combdet.power_series import number_from_egf, numbers_from_egf
from oracles import count_ordered_partitions
from test_genfubini import stirling_oracle


def test_family_list():
    fams = all_families(6)
    assert len(fams) == 42
    assert len(set(fams)) == 42


def test_applicable_methods():
    assert applicable_methods(F("fubini")) == [
        "binomial_sum", "definition", "determinant", "determinant_oracle", "dyadic_series", "egf", "recurrence", "trudi"
    ]
    assert "convolution" in applicable_methods(F("gen_fubini", 2))
    assert "recurrence" not in applicable_methods(F("mod_cauchy_restricted", 3))


def test_known_values_against_oracles():
    for kv in KNOWN_VALUES:
        assert number_from_egf(kv.family, kv.n) == kv.value, kv
        tag = kv.family.tag
        if tag == "fubini" and kv.n <= 7:
            assert count_ordered_partitions(kv.n) == kv.value
        elif tag == "fubini_restricted" and kv.n <= 7:
            assert count_ordered_partitions(kv.n, lambda s: s <= kv.family.m) == kv.value
        elif tag == "fubini_associated" and kv.n <= 7:
            assert count_ordered_partitions(kv.n, lambda s: s >= kv.family.m) == kv.value
        elif tag == "gen_fubini":
            assert stirling_oracle(kv.family.k, kv.n) == kv.value
    assert known_value(F("fubini_associated", 3), 7) is None


def test_classical_recurrences():
    assert bernoulli_rec(12) == numbers_from_egf(F("bernoulli"), 12)
    assert cauchy_rec(10) == numbers_from_egf(F("cauchy"), 10)
    assert euler_rec(10) == numbers_from_egf(F("euler"), 10)
    assert bernoulli_rec(4)[:3] == [1, Fr(-1, 2), Fr(1, 6)]
    assert euler_rec(6) == [1, 0, -1, 0, 5, 0, -61]


@pytest.mark.parametrize("fam", all_families(6), ids=str)
def test_every_family_agrees(fam):
    report = crosscheck_family(fam, 16)
    assert report.ok, report.first_divergence
    assert all(row.values for row in report.rows)


def test_out_of_range_cells_are_skipped():
    report = crosscheck_family(F("mod_cauchy_associated", 4), 6)
    assert report.ok
    row = report.rows[3]
    assert row.skipped["determinant"] == "outside proven range"
    assert "egf" in row.values


def test_divergence_is_reported(monkeypatch):
    applies, fn = cc.METHODS["egf"]

    def broken(family, n_max):
        seq = fn(family, n_max)
        seq[5] += 1
        return seq

    monkeypatch.setitem(cc.METHODS, "egf", (applies, broken))
    report = crosscheck_family(F("cauchy"), 8)
    assert not report.ok
    div = report.first_divergence
    assert div["n"] == 5 and div["method"] == "egf" and div["difference"] == "1"
    assert "first divergence at n=5" in report.to_table()
    assert json.loads(report.to_json())["verdict"] == "fail"


def test_report_serialisation():
    report = crosscheck_family(F("fubini"), 6, ["recurrence", "determinant"])
    d = json.loads(report.to_json())
    assert d["verdict"] == "pass"
    assert d["rows"][6]["values"]["determinant"] == {"int": "4683"}
    assert d["rows"][6]["known"]["value"] == {"int": "4683"}
    assert report.value(6, "recurrence") == 4683
    table = report.to_table().splitlines()
    assert table[0] == "# fubini"
    assert table[-1].split()[-1] == "pass"


def test_caps():
    with pytest.raises(CapExceeded):
        crosscheck_family(F("fubini"), 31, ["trudi"])
    with pytest.raises(CapExceeded):
        compute_one(F("gen_fubini", 3), 8, "minors_brute")
    assert compute_one(F("gen_fubini", 3), 7, "minors_brute") == stirling_oracle(3, 7)
    # with default methods the capped method simply stops
    report = crosscheck_family(F("fubini"), 32)
    assert report.rows[31].skipped["trudi"] == "cap"
    assert report.ok


def test_compute_one_errors():
    with pytest.raises(ValueError):
        compute_one(F("cauchy"), 3, "definition")
    with pytest.raises(ValueError):
        compute_one(F("fubini"), 3, "nope")
    with pytest.raises(ValueError):
        compute_one(F("fubini"), -1, "recurrence")


def test_random_trials_clean():
    assert random_profile_trials(7) == []
    assert random_profile_trials(123, trials=20) == []


def test_bench_fubini_500():
    rows = bench(F("fubini"), 500, ["recurrence", "determinant"])
    assert rows[0].value == rows[1].value
    assert rows[1].seconds < 5


def test_bench_bernoulli_100():
    rows = bench(F("bernoulli"), 100, ["recurrence", "determinant", "egf", "determinant_oracle"])
    assert rows[0].value == Fr(-94598037819122125295227433069493721872702841533066936133385696204311395415197247711, 33330)
    assert len({r.value for r in rows}) == 1


def test_bench_rejects():
    with pytest.raises(CapExceeded):
        bench(F("fubini"), 40, ["trudi"])
    with pytest.raises(ValueError):
        bench(F("gen_fubini", 2), 4, ["recurrence"])
