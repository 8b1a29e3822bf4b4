"""Colorings of subset cubes, structural property checks with witnesses,
and exhaustive certified searches for monochromatic subcube copies."""

__version__ = "0.1.0"

from .bruteforce import (
    BruteForceResult,
    RamseyScan,
    copy_image_masks,
    exists_good_coloring,
    family_has_copy,
    naive_count_embeddings,
    ramsey_bruteforce,
)
from .coloring import (
    Color,
    Coloring,
    ColoringFormatError,
    SetFamily,
    c0_color,
    dual_coloring,
    layered_color,
    load_coloring,
    make_c0,
    make_layered,
    parse_coloring,
    render_coloring,
    save_coloring,
)
from .flipgraph import (
    FlipGraph,
    FlipGraphReport,
    build_flip_graph,
    check_bipartition,
    export_edges,
)
from .lattice import (
    CapacityError,
    CubeSpace,
    ElementSet,
    complement,
    count_pairs_singles,
    element_sum_parity,
    iterate_layer,
    missed_pairs,
    pair_index,
    parse_set,
    partner,
)
from .properties import (
    PropertyReport,
    RestrictiveReport,
    extend_to_maximal,
    is_flip_susceptible,
    is_miss_forbidding,
    is_not_too_high,
    is_pair_enforcing,
    is_restrictive,
    transversal_masks,
)
from .search import (
    Embedding,
    EmbeddingCheck,
    SearchOutcome,
    contains_monochromatic_copy,
    count_distinct_copies,
    find_copy,
    verify_embedding,
    verify_no_copy,
)

__all__ = [
    "__version__",
    "BruteForceResult",
    "CapacityError",
    "Color",
    "Coloring",
    "ColoringFormatError",
    "CubeSpace",
    "ElementSet",
    "Embedding",
    "EmbeddingCheck",
    "FlipGraph",
    "FlipGraphReport",
    "PropertyReport",
    "RamseyScan",
    "RestrictiveReport",
    "SearchOutcome",
    "SetFamily",
    "build_flip_graph",
    "c0_color",
    "check_bipartition",
    "complement",
    "contains_monochromatic_copy",
    "copy_image_masks",
    "count_distinct_copies",
    "count_pairs_singles",
    "dual_coloring",
    "element_sum_parity",
    "exists_good_coloring",
    "export_edges",
    "extend_to_maximal",
    "family_has_copy",
    "find_copy",
    "is_flip_susceptible",
    "is_miss_forbidding",
    "is_not_too_high",
    "is_pair_enforcing",
    "is_restrictive",
    "iterate_layer",
    "layered_color",
    "load_coloring",
    "make_c0",
    "make_layered",
    "missed_pairs",
    "naive_count_embeddings",
    "pair_index",
    "parse_coloring",
    "parse_set",
    "partner",
    "ramsey_bruteforce",
    "render_coloring",
    "save_coloring",
    "transversal_masks",
    "verify_embedding",
    "verify_no_copy",
]
