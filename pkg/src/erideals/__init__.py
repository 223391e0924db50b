"""Random edge ideals of Erdős–Rényi graphs.

Sampling of G(n, p), edge and cover ideals with their combinatorial
invariants, normality tests, closed-form moment bounds, an exhaustive
small-``n`` oracle and a Monte Carlo harness.
"""

__version__ = "0.1.0"

from .errors import DomainError, ErIdealsError, GraphFormatError, ParameterError, ResourceLimitError
from .graph import (
    Graph,
    Pattern,
    SampleSpec,
    complement,
    count_induced,
    format_graph_text,
    graph_to_json,
    independence_number,
    induced,
    is_bipartite,
    maximal_independent_sets,
    parse_graph_json,
    parse_graph_text,
    sample_er,
)
from .ideals import (
    MonomialIdeal,
    cover_ideal,
    edge_ideal,
    graph_of_edge_ideal,
    ideal_height,
    ideal_probability,
    krull_dimension,
    reg_upper_bound,
    v_upper_bound,
)
from .normality import (
    CoverNormality,
    HochsterWitness,
    cover_ideal_normality,
    edge_ideal_normal,
    find_hochster,
    find_hochster_naive,
    induced_odd_cycles,
)
from .moments import (
    Schedule,
    chebyshev_lb_Et,
    chebyshev_lb_T,
    expectation_Y_Et,
    expectation_Y_T_paper,
    markov_ub_cycles,
    markov_ub_Et,
    moment_report,
    variance_bound_Y_Et,
    variance_bound_Y_T,
)
from .events import EventSpec, registry_events
from .oracle import ProbPolynomial, count_labeled_copies, enumerate_event, enumerate_expectation
from .montecarlo import Estimate, SweepRecord, estimate, sweep, wilson_interval
