"""Exact simulation and verification of unary DFAs, PFAs, and QFAs on promise problems."""

from ._core import (
    Rational,
    analyze_lkn_pfa,
    build_automaton_json,
    classify_lkn,
    classify_theta,
    crt_solve,
    find_no_instance_in_progression,
    generate_no_instance,
    lcm_list,
    lkn_dfa_accepts,
    lkn_pfa_acceptance,
    lkn_qfa_acceptance,
    nth_prime,
    prime_window,
    simulate_automaton_json,
    state_table,
    theta_qfa_acceptance,
)

__all__ = [
    "Rational",
    "analyze_lkn_pfa",
    "build_automaton_json",
    "classify_lkn",
    "classify_theta",
    "crt_solve",
    "find_no_instance_in_progression",
    "generate_no_instance",
    "lcm_list",
    "lkn_dfa_accepts",
    "lkn_pfa_acceptance",
    "lkn_qfa_acceptance",
    "nth_prime",
    "prime_window",
    "simulate_automaton_json",
    "state_table",
    "theta_qfa_acceptance",
]
