"""Exact counting and construction of universal cycles for k-permutations."""

from .counting import (
    CountReport,
    TourBudget,
    count_bruteforce,
    count_closed_form,
    count_matrix_tree,
    count_report,
    enumerate_all,
    generate_cycle,
)
from .digraph import TransitionDigraph, build
from .errors import BudgetExceeded, DimensionError, ParameterError, PermutationError, UcycleError
from .exactmat import ExactMatrix
from .perm import canonical_rotation, is_universal_cycle, rank, unrank

__version__ = "0.1.0"
