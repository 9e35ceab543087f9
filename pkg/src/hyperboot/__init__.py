"""j-set bootstrap percolation in k-uniform hypergraphs."""
from .bounds import BoundReport, best_known, clique_upper, closed_form_upper, exact_32, exact_small_j, recursive_upper
from .canonical import canonical_form, enumerate_canonical_configs
from .constructions import (
    StarSpec,
    augment,
    make_clique_config,
    make_recursive_tight,
    make_star,
    make_z_config,
    recursive_vertex_budget,
    z_star_sizes,
    z_vertex_budget,
)
from .core import (
    Configuration,
    HypergraphModel,
    ProcessState,
    RunResult,
    brute_force_infection_oracle,
    ext_set,
    infection_check,
    initial_state,
    is_contagious,
    is_joker,
    reduced_process,
    restrict,
    run,
    star_of,
    step,
)
from .encoding import DomainError, rank_jset, unrank_jset
from .search import DisjointWitness, SearchCertificate, disjoint_witness, min_contagious

__version__ = "0.1.0"
