from nnvbench.oracle.exhaustive import (
    AdjacencyCheck,
    PostCheck,
    SymmetryCheck,
    exhaustive_unary_check,
    monotonicity_check,
    sweep_function_checks,
)
from nnvbench.oracle.sat import dpll, sat_oracle, truth_table_sat, verify_assignment
from nnvbench.oracle.search import (
    pair_counterexample_search,
    random_search,
    random_violation_search,
)
from nnvbench.oracle.fixtures import load_fixtures, write_fixtures

__all__ = [
    "AdjacencyCheck", "PostCheck", "SymmetryCheck",
    "exhaustive_unary_check", "monotonicity_check", "sweep_function_checks",
    "dpll", "sat_oracle", "truth_table_sat", "verify_assignment",
    "pair_counterexample_search", "random_search", "random_violation_search",
    "load_fixtures", "write_fixtures",
]
