"""Execution order of greedy algorithms on communication graphs."""

from greedyorder.errors import BudgetError, DomainError, SamplingError
from greedyorder.graphs import (
    Graph,
    Path,
    Walk,
    diameter,
    enumerate_connected_graphs,
    enumerate_labeled_trees,
    gen_complete,
    gen_connected_erdos_renyi,
    gen_directed_cycle,
    gen_dn,
    gen_erdos_renyi,
    gen_line,
    gen_star,
    is_connected,
    shortest_path_hops,
)
from greedyorder.ordering import (
    Ordering,
    OrderingReport,
    TimeBreakdown,
    best_ordering_exact,
    best_ordering_spanning_walk,
    comm_time,
    dn_best_ordering,
    random_ordering,
    tree_tmin_closed_form,
    worst_directed_cycle_ordering,
    worst_line_ordering,
    worst_ordering_exact,
)
from greedyorder.algorithm1 import AgentState, RunTrace, run_algorithm1, verify_prop1_bound
from greedyorder.submodular import (
    CoverageObjective,
    JointAction,
    SubmodularProblem,
    brute_force_opt,
    check_submodular_monotone,
    evaluate_w,
    gen_random_coverage_problem,
    greedy_execute,
)

__version__ = "0.1.0"
