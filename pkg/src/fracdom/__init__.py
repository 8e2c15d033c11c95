"""Exact (fractional) domination and independence numbers of digraphs.

Everything is computed in exact rational arithmetic: bitmask digraphs,
a deterministic two-phase rational simplex, exponential-time exact
solvers for the integer quantities, the constructive cover algorithms,
and a verification harness that re-checks every inequality from the
recorded exact values.
"""

from .constructions import (
    FracDomWitness,
    GreedyTrace,
    clip_to_one,
    frac_dom_from_lp,
    frac_dom_recursive,
    greedy_dominating_set,
    half_cover,
    light_vertex,
    log2_bound,
)
from .dgf import emit_dgf, emit_weights, parse_dgf, parse_weights
from .digraph import Digraph, bit, iter_bits, mask_of, vertices_of, weight_sum
from .errors import (
    BadParameter,
    BudgetExceeded,
    DuplicateOrAntiparallel,
    EmptyGraph,
    FracdomError,
    GraphError,
    LoopArc,
    NotFeasible,
    OutOfRange,
    ParseError,
    TooLarge,
)
from .exact import (
    domination_number,
    has_directed_triangle,
    independence_number,
    is_dominating,
    is_stable,
    maximal_stable_sets,
)
from .generators import (
    derive_seed,
    directed_cycle,
    disjoint_union,
    random_digraph,
    random_tournament,
    rotational_tournament,
)
from .harness import (
    BoundRecord,
    BoundReport,
    ExperimentStats,
    check_bounds,
    random_tournament_experiment,
    record_flags,
    tightness_suite,
    verify_digraphs,
)
from .lp import (
    INFEASIBLE,
    OPTIMAL,
    UNBOUNDED,
    LpProblem,
    LpSolution,
    emit_lp,
    farkas_weights,
    gamma_star,
    max_outdegree_lower_bound,
    solve_lp,
    stable_lp_dual_value,
    stable_lp_value,
)
from .rational import Rat, format_rat, parse_rat, rat, rat_ceil

__version__ = "0.1.0"
