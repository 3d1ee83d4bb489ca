import fractions
import math

import pytest

import sturmian as st


def test_quadratic_number_arithmetic():
    phi = st.QuadraticNumber.golden_ratio()
    one = st.QuadraticNumber(1)
    assert phi * phi == phi + one
    alpha = st.golden_slope()
    assert str(alpha) == "quad:-1,1,2,5"
    assert st.QuadraticNumber("quad:-1,1,2,5") == alpha
    assert (-alpha).frac().decimal(6) == "0.381966"
    assert math.isclose(float(alpha), (math.sqrt(5) - 1) / 2, rel_tol=1e-15)
    assert st.QuadraticNumber.rational(6, -4) == st.QuadraticNumber("ratio:-3/2")
    with pytest.raises(ValueError):
        st.QuadraticNumber(1) / st.QuadraticNumber(0)


def test_big_integers_cross_as_python_ints():
    assert st.fibonacci(100) == 573147844013817084101
    assert st.convergents(st.golden_slope(), 5) == [(0, 1), (1, 1), (1, 2), (2, 3), (3, 5)]


def test_words():
    assert st.sturmian_prefix("fib", 21) == "abaababaabaababaababa"
    assert st.sturmian_prefix("quad:-2,1,1,5", 10) == "bbbabbbabb"
    assert st.fibonacci_word(7) == st.sturmian_prefix("fib", 21)
    with pytest.raises(ValueError):
        st.sturmian_prefix("ratio:1/3", 5)
    assert st.sturmian_prefix("ratio:1/3", 6, periodic=True) == "babbab"


def test_bijection():
    rows = st.all_factors("fib", 6)
    assert len(rows) == 7
    holder = [r for r in rows if r["contains_alpha"]]
    assert [r["k"] for r in holder] == [4]
    assert holder[0]["factor"] == "abaaba"
    v1, v2, boundary = st.parikh_split("fib", 2)
    assert (v1, v2) == ([2, 0], [1, 1])
    assert boundary.decimal(3) == "0.764"


def test_abelian():
    f = st.min_abelian_period("abaab")
    assert (f["period"], f["head"]) == (2, 1)
    assert st.min_abelian_period("aba", tier="repetition") is None
    rep = st.longest_prefix_rep("fib", 5)
    assert (rep["length"], rep["head"], rep["blocks"], rep["tail"]) == (58, 4, 10, 4)
    assert str(st.k_m_empirical("fib", 3, 100)) == "ratio:22/3"
    assert st.theorem6_predicate("fib", 2, 4)
    assert not st.theorem6_predicate("fib", 2, 5)


def test_formulas_match_table_values():
    assert [st.lp_formula(j) for j in range(2, 12)] == [8, 19, 58, 142, 388, 985, 2616, 6763, 17798, 46366]
    assert st.max_exp_formula(6) == 28
    assert st.min_ab_period_fib(7) == 5
    assert st.sqrt5_gap_percent(4, 3) == "8.393"
    # Independent check of lp / F_j^2 -> sqrt 5 with Python fractions.
    f = st.fibonacci(11)
    assert abs(fractions.Fraction(st.lp_formula(11), f * f) - fractions.Fraction(math.sqrt(5))) < fractions.Fraction(1, 10**4)


def test_verify():
    report = st.run_verify("table2")
    assert report["passed"]
    assert len(report["rows"]) == 14
    report = st.run_verify("table1", j="2..6")
    assert report["passed"] and len(report["rows"]) == 5
    with pytest.raises(ValueError):
        st.run_verify("table1", j="2..12")
