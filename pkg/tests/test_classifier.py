import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import classify_oracle, sigma_oracle
from rhspaces.classifier import RULES, BoundQuery, BoundReport, classify
from rhspaces.rh_core import rho

GOLDEN = [
    # field, n, s, lower, upper, rule
    ("real", 3, 1, 2, 2, "real-s1:optimal-lower"),
    ("real", 7, 1, 4, 4, "real-s1:optimal-lower"),
    ("real", 15, 1, 8, 8, "real-s1:optimal-lower"),
    ("real", 11, 1, 2, 3, "real-s1:undecided"),
    ("real", 4, 1, 1, 1, "odd-rank:inferred"),
    ("real", 4, 2, 2, 3, "real-s2:undecided"),
    ("real", 4, 0, 3, 3, "upper-attained"),
    ("complex", 3, 1, 4, 4, "hermitian:optimal-lower"),
    ("complex", 5, 1, 5, 5, "upper-attained"),
]


@pytest.mark.parametrize("field, n, s, lower, upper, rule", GOLDEN)
def test_golden_rows(field, n, s, lower, upper, rule):
    rep = classify(BoundQuery(field, n, s))
    assert (rep.lower, rep.upper, rep.rule) == (lower, upper, rule)
    assert rep.status == ("exact" if lower == upper else "unknown")


def test_real_full_rank_even_n():
    for n in range(2, 257, 2):
        rep = classify(field="real", n=n, s=0)
        assert rep.status == "exact" and rep.value == rho(n // 2) + 1


def test_real_s1_n_1_mod_4():
    for n in range(5, 258, 4):
        rep = classify(field="real", n=n, s=1)
        assert rep.status == "exact" and rep.value == rho((n - 1) // 2) + 1


def test_optimality_cases_c2_c3():
    # (n+1)/2 = 2**(2+4d) * odd or 2**(3+4d) * odd
    for m in (4, 12, 8, 24, 64, 128, 4 * 16 * 3):
        n = 2 * m - 1
        rep = classify(field="real", n=n, s=1)
        assert rep.status == "exact" and rep.value == rho(m)


def test_undecided_cases_c0_c1():
    for m in (6, 10, 16, 32, 48, 96):
        n = 2 * m - 1
        rep = classify(field="real", n=n, s=1)
        assert rep.status == "unknown" and (rep.lower, rep.upper) == (rho(m), rho(m) + 1)


@pytest.mark.parametrize("n", range(2, 300))
def test_matches_rule_table_oracle(n):
    for field, s_max in (("real", 2), ("complex", 1)):
        for s in range(min(s_max, n - 1) + 1):
            rep = classify(field=field, n=n, s=s)
            assert (rep.lower, rep.upper) == classify_oracle(field == "complex", n, s)
            assert rep.sigma == sigma_oracle(n, n - s, field == "complex")


@given(st.integers(min_value=2, max_value=5000), st.integers(min_value=0, max_value=1))
def test_hermitian_never_unknown(n, s):
    assert classify(field="complex", n=n, s=s).status == "exact"


@given(st.sampled_from(["real", "complex"]), st.integers(min_value=1, max_value=3000), st.integers(min_value=0, max_value=2))
def test_report_invariants(field, n, s):
    if field == "complex":
        s = min(s, 1)
    if n <= s:
        n = s + 1
    rep = classify(field=field, n=n, s=s)
    assert rep.lower <= rep.upper <= rep.lower + 1
    assert (rep.status == "exact") == (rep.lower == rep.upper)
    assert rep.sigma <= rep.lower <= rep.sigma + 1
    assert rep.rule in RULES
    if rep.rule == "upper-attained":
        assert rep.lower == rep.sigma + 1
    if rep.rule in ("real-s1:optimal-lower", "hermitian:optimal-lower"):
        assert rep.lower == rep.sigma


@pytest.mark.parametrize("field, n, s", [("complex", 5, 2), ("real", 5, 3), ("real", 2, 2), ("real", 3, -1), ("quaternion", 4, 0)])
def test_rejects_out_of_range(field, n, s):
    with pytest.raises(ValueError):
        classify(field=field, n=n, s=s)


def test_report_json_fields():
    d = classify(field="real", n=11, s=1).to_json()
    assert set(d) >= {"field", "n", "s", "sigma", "lower", "upper", "status", "rule"}


def test_inconsistent_report_is_rejected():
    with pytest.raises(AssertionError):
        BoundReport("real", 4, 0, 2, 3, 5, "unknown", "upper-attained")
