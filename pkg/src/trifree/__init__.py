"""Edge-extremal triangle-free graphs under degree and matching bounds.

The package computes maximum edge counts, builds witness graphs,
composes full extremal graphs from components via a bounded knapsack,
and proves optimality at small scale with an in-repo symmetry-aware
branch-and-bound solver.
"""

from .constructions import (
    InvalidTError,
    MissingComponentError,
    assemble,
    b_graph,
    d_star,
    extremal_component,
    general_extremal,
)
from .formula import (
    Instance,
    SETTLED_OPTIMA,
    UnknownCaseError,
    UnknownZError,
    ZValue,
    f_delta,
    f_gen,
    precomputed_ub,
    z_of,
)
from .graph6 import Graph6DecodeError, from_graph6, to_graph6
from .graphs import (
    Graph,
    Matching,
    disjoint_union,
    is_factor_critical,
    is_triangle_free,
    matching_number,
    max_matching,
)
from .knapsack import (
    KnapsackPlan,
    MissingUtilityError,
    check_special_structure,
    solve_knapsack,
)
from .oracle import CapExceededError, brute_force_max, brute_force_under_node
from .search import (
    CONFLICT,
    Conflict,
    SearchNode,
    SolveResult,
    SolverConfig,
    SolveStats,
    bound,
    propagate,
    solve,
    solve_basic,
    solve_iterative,
)
from .symmetry import ColoredModel, OrbitPartition, automorphism_generators, orbits

__version__ = "0.1.0"

__all__ = [
    "CONFLICT",
    "CapExceededError",
    "ColoredModel",
    "Conflict",
    "Graph",
    "Graph6DecodeError",
    "Instance",
    "InvalidTError",
    "KnapsackPlan",
    "Matching",
    "MissingComponentError",
    "MissingUtilityError",
    "OrbitPartition",
    "SETTLED_OPTIMA",
    "SearchNode",
    "SolveResult",
    "SolveStats",
    "SolverConfig",
    "UnknownCaseError",
    "UnknownZError",
    "ZValue",
    "assemble",
    "automorphism_generators",
    "b_graph",
    "bound",
    "brute_force_max",
    "brute_force_under_node",
    "check_special_structure",
    "d_star",
    "disjoint_union",
    "extremal_component",
    "f_delta",
    "f_gen",
    "from_graph6",
    "general_extremal",
    "is_factor_critical",
    "is_triangle_free",
    "matching_number",
    "max_matching",
    "orbits",
    "precomputed_ub",
    "propagate",
    "solve",
    "solve_basic",
    "solve_iterative",
    "solve_knapsack",
    "to_graph6",
    "z_of",
]
