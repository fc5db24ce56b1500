"""coarsekit: exact machinery for coarse graph structure at desk scale.

Immutable graphs, exact independence numbers, ball-cover certificates,
balanced separators, exact treewidth, and two tree-decomposition builders
(the classical separator recursion and the centred recursive construction),
all deterministic and certificate-producing.
"""

from .centred import CentreCertificate, centre_number, certificate_is_valid, is_centred
from .coarse import (
    CentredDecomposition,
    ConstructionParams,
    ObstructionReport,
    QuasiIsometryViolation,
    SCAN_FIELDS,
    alpha_dense_set,
    build_coarse_decomposition,
    builtin_corpus,
    check_subdivided_clique_obstruction,
    extend_to_alpha,
    scan_corpus,
    verify_quasi_isometry,
)
from .errors import (
    HypothesisViolation,
    InputError,
    InternalError,
    ParseError,
    ScaleError,
)
from .graph import (
    Graph,
    INFINITE,
    all_labelled_graphs,
    complete,
    complete_bipartite,
    cycle,
    emit_edgelist,
    emit_graph6,
    grid,
    is_biclique_free,
    parse_edgelist,
    parse_graph6,
    path,
    random_connected,
    random_graph,
    random_tree,
    two_subdivision,
)
from .independence import AlphaResult, alpha, alpha_of_closed_neighborhood
from .separators import (
    SeparatorWitness,
    WeightFunction,
    admits_kr_balanced_separators_indicator,
    find_centred_balanced_separator,
    is_balanced,
    separation_number_indicator,
)
from .treedecomp import (
    ClassicBuildResult,
    LawSweepReport,
    TreeDecomposition,
    check_width_separation_laws,
    decomposition_from_separator_oracle,
    exact_treewidth,
    validate,
    width,
)

__all__ = [
    "AlphaResult",
    "CentreCertificate",
    "CentredDecomposition",
    "ClassicBuildResult",
    "ConstructionParams",
    "Graph",
    "HypothesisViolation",
    "INFINITE",
    "InputError",
    "InternalError",
    "LawSweepReport",
    "ObstructionReport",
    "ParseError",
    "QuasiIsometryViolation",
    "SCAN_FIELDS",
    "ScaleError",
    "SeparatorWitness",
    "TreeDecomposition",
    "WeightFunction",
    "admits_kr_balanced_separators_indicator",
    "all_labelled_graphs",
    "alpha",
    "alpha_dense_set",
    "alpha_of_closed_neighborhood",
    "build_coarse_decomposition",
    "builtin_corpus",
    "centre_number",
    "certificate_is_valid",
    "check_subdivided_clique_obstruction",
    "check_width_separation_laws",
    "complete",
    "complete_bipartite",
    "cycle",
    "decomposition_from_separator_oracle",
    "emit_edgelist",
    "emit_graph6",
    "exact_treewidth",
    "extend_to_alpha",
    "find_centred_balanced_separator",
    "grid",
    "is_balanced",
    "is_biclique_free",
    "is_centred",
    "parse_edgelist",
    "parse_graph6",
    "path",
    "random_connected",
    "random_graph",
    "random_tree",
    "scan_corpus",
    "separation_number_indicator",
    "two_subdivision",
    "validate",
    "verify_quasi_isometry",
    "width",
]
