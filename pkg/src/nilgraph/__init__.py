"""Metric 2-step nilpotent Lie algebras built from edge-labeled digraphs.

Public surface: graph parsing and diagnostics, the algebra and its exact
invariants (derived algebra, center, abelian factor, skew operators),
family generators with closed-form predictions, the Schreier-action route
to the abelian factor, and singularity classification.
"""

from .algebra import (
    NilAlgebra,
    abelian_factor,
    bracket,
    build_algebra,
    center,
    center_perp,
    derived_algebra,
    j_matrix,
    oracle_abelian_factor,
    report,
    restricted_j,
)
from .graphs import (
    Edge,
    LabeledDigraph,
    abelian_support,
    diagnostics,
    edge_label_degree,
    induced_label_subgraph,
    is_proper_coloring,
    neighborhood,
    parse_graph,
    same_labeled_paths,
    serialize_graph,
    uniform_coloring_check,
    z_neighborhood,
)
from .families import (
    CycleSpec,
    StarSpec,
    family_from_json,
    make_cycle,
    make_double_star,
    make_path,
    make_star,
    predict_cycle_multi_label,
    predict_cycle_single_label,
    predict_double_star,
    predict_star,
    reduce_star,
)
from .schreier import (
    act,
    act_word,
    class_sums,
    j_via_action,
    schreier_from_permutations,
    two_path_classes,
)
from .spectra import (
    char_poly_at,
    char_poly_symbolic,
    classify,
    symbolic_det,
    uniform_blocks,
)

__version__ = "0.1.0"
