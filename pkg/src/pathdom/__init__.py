"""Online domination of path graphs and friends.

Reveal the vertices of a graph in a uniformly random order, adding each
revealed vertex to the dominating set exactly when it is not yet
dominated.  This package simulates that procedure, computes its expected
set size exactly for paths, cycles, stars, wheels and complete
multipartite graphs, enumerates and counts the permutations achieving
the worst and best possible sizes by several independent methods, and
samples the size distribution at scale with seeded determinism.
"""

from .errors import ConsistencyError, ResourceLimitError
from .graphs import Graph, complete_multipartite, cycle, explicit, path, star, wheel
from .domination import (
    DominationOutcome,
    check_permutation,
    gamma,
    gamma_batch_path,
    is_independent_dominating,
    run_online_domination,
)
from .expectation import (
    bruteforce_expected_gamma,
    caro_wei_bound,
    expected_gamma_complete_multipartite,
    expected_gamma_cycle,
    expected_gamma_limit,
    expected_gamma_path,
    expected_gamma_path_closed_form,
    expected_gamma_path_float,
    expected_gamma_star,
    expected_gamma_wheel,
)
from .extremal import (
    ExtremalReport,
    PathCensus,
    best_case_count_formula,
    best_case_formula_applicable,
    complement,
    count_extremal_bruteforce,
    count_no_even_local_maxima,
    count_odd_configuration_bruteforce,
    count_weakly_alternating,
    extremal_permutations,
    has_no_even_local_maxima,
    independent_dominating_sets_bruteforce,
    inverse,
    is_weakly_alternating,
    max_dominating_size,
    maximal_independent_dominating_sets,
    min_dominating_size,
    path_census,
    set_first_order,
    weakly_alternating_permutations,
    worst_case_count_recurrence,
)
from .series import (
    DEFAULT_ORDER,
    PowerSeries,
    convolution_identity_holds,
    cosh_series,
    odd_configuration_counts_egf,
    sinh_series,
    worst_case_counts_egf,
)
from .montecarlo import Histogram, SampleConfig, normalize, sample_gamma

__version__ = "0.1.0"
