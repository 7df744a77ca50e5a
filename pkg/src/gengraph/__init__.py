"""Generator graphs of cyclic groups.

Structure, topological indices, and metric dimension of the graph on Z_n
where two elements are adjacent exactly when at least one generates the
group. Every closed form ships next to a definitional brute-force route so
the two can be checked against each other.
"""

from gengraph.cyclic import CyclicGroupDescriptor, describe_group, is_prime, totient
from gengraph.generator_graph import (
    FaithfulnessReport,
    GeneratorGraph,
    build_generator_graph,
    check_degree_bounds,
    check_max_degree_bound,
    degree_by_formula,
    diameter_by_formula,
    generator_graph_dot,
    generator_graph_edge_list,
    is_faithful_edge,
    is_faithful_graph,
)
from gengraph.graphs import (
    UNREACHABLE,
    DistanceMatrix,
    SimpleGraph,
    bfs_distances,
    bfs_from,
    complement,
    complete_graph,
    cycle_graph,
    diameter,
    from_edges,
    join,
    null_graph,
    random_graph,
    to_dot,
    to_edge_list,
)
from gengraph.indices import (
    IndexComparison,
    IndexReport,
    compute_index_report,
    gutman_bruteforce,
    gutman_formula,
    gutman_prime_order,
    harmonic_bruteforce,
    harmonic_formula,
    harmonic_formula_all_pairs,
    harmonic_gap,
    harmonic_prime_order,
    randic_bruteforce,
    randic_formula,
    randic_prime_order,
    sombor_bruteforce,
    sombor_formula,
    sombor_prime_order,
    wiener_bruteforce,
    wiener_formula,
    wiener_prime_order,
)
from gengraph.resolving import (
    DEFAULT_EXACT_SEARCH_CAP,
    MetricDimensionResult,
    ResolvingSetResult,
    check_single_nongenerator_dimension,
    constructive_resolving_set,
    deficient_sets,
    is_resolving,
    metric_dimension_bruteforce,
    metric_dimension_formula,
    representation,
    twin_classes,
    twin_lower_bound,
)
from gengraph.verify import (
    CheckResult,
    GroupVerification,
    VerificationSummary,
    run_verification,
    verify_group,
)

__version__ = "0.1.0"
