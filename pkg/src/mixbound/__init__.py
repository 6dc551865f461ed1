"""Markov-chain staircase instances and query-complexity lower bounds for
black-box local search on graphs."""

from .adversary import (
    AdversaryReport,
    FunctionFamily,
    bound_values,
    distinguishing_mass,
    enumerate_family,
    estimate_lower_bound,
    exact_lower_bound,
    milestone_escape_estimates,
    ratio_floor,
    ratio_property_check,
    relation_mass,
    relation_weight,
    witness_pair,
)
from .chains import (
    ChainFlags,
    TransitionMatrix,
    VisitStats,
    Walk,
    bottleneck_ratio,
    build_chain,
    chain_from_json,
    chain_to_json,
    check_properties,
    lazy_simple_walk,
    make_chain,
    make_walk,
    max_degree_walk,
    metropolis_walk,
    mixing_time,
    sample_walk,
    spectral_gap,
    stationary,
    stationary_ratio,
    visit_probabilities,
    walk_probability,
    worst_case_tv,
)
from .errors import CapabilityError, InputError, VacuousRegimeWarning
from .graphs import (
    Graph,
    barbell_graph,
    bfs_distances,
    complete_graph,
    cycle_graph,
    degree_stats,
    edge_expansion,
    generate,
    graph_from_json,
    graph_from_spec,
    graph_to_json,
    hypercube_graph,
    make_graph,
    path_graph,
    random_regular_graph,
    torus_graph,
)
from .solvers import (
    CountingOracle,
    SolverResult,
    decision_oracle,
    exhaustive_search,
    function_oracle,
    run_solver,
    search_oracle,
    solve_decision,
    steepest_descent,
    warm_start_descent,
)
from .staircase import (
    StaircaseInstance,
    StaircaseParams,
    custom_params,
    default_params,
    head,
    instance_from_json,
    instance_to_json,
    is_good_walk,
    is_valid_value_function,
    local_minima,
    make_instance,
    milestones,
    sample_good_walk,
    sample_instance,
    shared_head_index,
    tail,
    tail_segment,
)

__version__ = "0.1.0"
