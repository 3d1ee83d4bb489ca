"""Sturmian words, the Sturmian bijection and abelian repetitions."""

from ._sturmian import (
    QuadraticNumber,
    all_factors,
    approx_decimal,
    convergents,
    fibonacci,
    fibonacci_word,
    golden_slope,
    k_m_empirical,
    longest_prefix_rep,
    lp_formula,
    max_exp_formula,
    min_ab_period_fib,
    min_abelian_period,
    parikh_split,
    run_verify,
    sqrt5_gap_percent,
    sturmian_prefix,
    theorem6_predicate,
)

__all__ = [
    "QuadraticNumber",
    "all_factors",
    "approx_decimal",
    "convergents",
    "fibonacci",
    "fibonacci_word",
    "golden_slope",
    "k_m_empirical",
    "longest_prefix_rep",
    "lp_formula",
    "max_exp_formula",
    "min_ab_period_fib",
    "min_abelian_period",
    "parikh_split",
    "run_verify",
    "sqrt5_gap_percent",
    "sturmian_prefix",
    "theorem6_predicate",
]
