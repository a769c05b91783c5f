"""Brute-force oracles and theorem checkers over small finite fields."""

from .census import (
    BudgetExceeded,
    Census,
    DEFAULT_TABLE_BUDGET,
    algebra_from_flat,
    enumerate_leibniz,
    nilpotent_adapted_census,
)
from .iso import gl_order, invariants, is_isomorphic, transport
from .lattice import (
    all_ideals,
    all_subalgebras,
    all_subspaces,
    cartan_subalgebras_bruteforce,
    frattini_bruteforce,
    gaussian_binomial_total,
    maximal_ideals_bruteforce,
    maximal_subalgebras_bruteforce,
    minimal_ideals_bruteforce,
    socle_bruteforce,
)
from .theorems import (
    DEFAULT_SWEEP,
    SWEEP_CHECKS,
    TheoremReport,
    as_cyclic,
    check_quotient_theorem,
    class_bound,
    condition_k,
    cyclic_crosscheck,
    is_s_star,
    nilpotency_equivalences,
    nonembedding_51,
    nonembedding_52,
    nonembedding_frattini,
    nonembedding_power,
    sweep,
    unique_nilpotent_closure,
)


__all__ = [
    "BudgetExceeded",
    "Census",
    "DEFAULT_TABLE_BUDGET",
    "algebra_from_flat",
    "enumerate_leibniz",
    "nilpotent_adapted_census",
    "all_ideals",
    "all_subalgebras",
    "all_subspaces",
    "cartan_subalgebras_bruteforce",
    "frattini_bruteforce",
    "gaussian_binomial_total",
    "maximal_ideals_bruteforce",
    "maximal_subalgebras_bruteforce",
    "minimal_ideals_bruteforce",
    "socle_bruteforce",
    "DEFAULT_SWEEP",
    "SWEEP_CHECKS",
    "TheoremReport",
    "as_cyclic",
    "check_quotient_theorem",
    "class_bound",
    "condition_k",
    "cyclic_crosscheck",
    "is_s_star",
    "nilpotency_equivalences",
    "nonembedding_51",
    "nonembedding_52",
    "nonembedding_frattini",
    "nonembedding_power",
    "sweep",
    "unique_nilpotent_closure",
    "gl_order",
    "invariants",
    "is_isomorphic",
    "transport",
]
