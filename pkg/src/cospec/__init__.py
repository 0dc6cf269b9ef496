"""Cospectral signed graphs from signed GM and generalized GM switching.

Spectra are compared through exact integer characteristic polynomials;
switchings are double-checked by exact rational conjugation.
"""

from .core import (
    BalanceResult,
    DegreeProfile,
    SignedGraph,
    adjacency_matrix,
    build_graph,
    from_adjacency,
    is_balanced,
    part_degree_profile,
    relabel,
    switch,
    switching_matrix,
    underlying_graph,
)
from .errors import *  # noqa: F401,F403
from .ggm import (
    GGMPartition,
    GGMReport,
    GGMVertexCase,
    build_u,
    ggm_switch,
    validate_ggm,
    verify_conjugation_ggm,
)
from .gm import (
    GMColumnCase,
    GMPartition,
    GMReport,
    block_switch_matrix,
    build_q,
    gm_switch,
    is_equitable,
    q_matrix,
    validate_gm,
    verify_conjugation_gm,
)
from .graphio import format_graph, parse_graph, read_graph, write_graph
from .iso import (
    SwitchIsoCertificate,
    are_switching_isomorphic,
    underlying_isomorphic,
    verify_certificate,
)
from .search import (
    SearchLimits,
    find_ggm_partitions,
    find_gm_partitions,
    generate_ggm_instance,
    generate_gm_instance,
)
from .spectrum import (
    CharPoly,
    char_poly,
    char_poly_oracle,
    cospectral,
    eigenvalues_approx,
    graph_char_poly,
)

__version__ = "0.1.0"
