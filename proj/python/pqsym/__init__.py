"""Exact arithmetic for quasisymmetric and peak quasisymmetric functions.

The compiled core exposes the two rings (M/F and L/K bases), the
descent-to-peak map, Adams and lambda operations, the q_n(alpha)
generator machinery with both decomposition routes, and the brute-force
polynomial oracle behind the verification suites.
"""

from ._pqsym import (
    Composition,
    GeneratorPolynomial,
    PQSymElement,
    QSymElement,
    adams_phi,
    adams_psi,
    cfl_factorize,
    check_identity,
    decompose_inductive,
    decompose_zb,
    descent_set,
    embed_to_qsym,
    enumerate_compositions,
    enumerate_odd_compositions,
    eval_to_string,
    fibonacci,
    hat,
    is_elementary,
    is_lyndon,
    lambda_odd,
    lambda_qsym,
    lambda_tilde,
    lex_compare,
    parse_eval,
    peak_set,
    pqsym_k,
    pqsym_l,
    qn,
    qshuffle,
    qsym_f,
    qsym_m,
    reduce_elementary,
    run_suite,
    suite_names,
    sym_e,
    sym_h,
    sym_p,
    sym_q,
    theta,
    verify_completeness,
    verify_euler_relations,
    wll_compare,
    zb_basis,
)

__version__ = "0.1.0"

__all__ = [
    "Composition",
    "GeneratorPolynomial",
    "PQSymElement",
    "QSymElement",
    "adams_phi",
    "adams_psi",
    "cfl_factorize",
    "check_identity",
    "decompose_inductive",
    "decompose_zb",
    "descent_set",
    "embed_to_qsym",
    "enumerate_compositions",
    "enumerate_odd_compositions",
    "eval_to_string",
    "fibonacci",
    "hat",
    "is_elementary",
    "is_lyndon",
    "lambda_odd",
    "lambda_qsym",
    "lambda_tilde",
    "lex_compare",
    "parse_eval",
    "peak_set",
    "pqsym_k",
    "pqsym_l",
    "qn",
    "qshuffle",
    "qsym_f",
    "qsym_m",
    "reduce_elementary",
    "run_suite",
    "suite_names",
    "sym_e",
    "sym_h",
    "sym_p",
    "sym_q",
    "theta",
    "verify_completeness",
    "verify_euler_relations",
    "wll_compare",
    "zb_basis",
]
