"""Radio labelings of middle graphs of paths."""

from .construction import (
    ParityParams,
    lambda_mpn_formula,
    lower_bound_mpn,
    mpn_instance,
    mpn_labeling,
    mpn_ordering,
    rn_mpn_formula,
    rn_path_formula,
)
from .graph import (
    DisconnectedGraphError,
    DistanceMatrix,
    Graph,
    LevelMap,
    all_pairs_distances,
    center,
    level_map,
    middle_graph,
    mpn,
    path_graph,
)
from .labeling import (
    Violation,
    greedy_label_from_ordering,
    is_L21_labeling,
    is_radio_labeling,
    lemma1_premise_check,
    span,
)
from .solver import SolverBudget, SolverResult, brute_force_radio_number, exact_lambda, exact_radio_number

__version__ = "0.1.0"
