"""Majority-supported proposals, the ma LP and bounds on r_t.

Exact quantities are returned as ``fractions.Fraction``.
"""

from ._anscombe import (
    Error,
    MalformedInput,
    Matrix,
    ParameterError,
    ResourceLimit,
    analyze,
    c_l,
    lemma1_matrix,
    lemma7_matrix,
    ma_table,
    rt_bounds,
    run_suite,
    s_kl,
    significant_figures,
    solve_ma,
    suite_names,
    supports,
    theorem2_matrix,
    theorem3_matrix,
    vlp_matrix,
)

__all__ = [
    "Error",
    "MalformedInput",
    "Matrix",
    "ParameterError",
    "ResourceLimit",
    "analyze",
    "c_l",
    "lemma1_matrix",
    "lemma7_matrix",
    "ma_table",
    "rt_bounds",
    "run_suite",
    "s_kl",
    "significant_figures",
    "solve_ma",
    "suite_names",
    "supports",
    "theorem2_matrix",
    "theorem3_matrix",
    "vlp_matrix",
]
