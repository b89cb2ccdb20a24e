"""Workbench for extremal counting problems on uniform hypergraph
expansions: constructions, clique counting, containment with
certificates, closed-form evaluators, and exhaustive small-n oracles.
"""

from .constructions import (
    ConstructionSpec,
    add_universal_core,
    build_construction,
    complete_bipartite_r,
    frankl_family,
    path_cycle_lower,
    star_like,
    star_turan,
    t_value,
    turan_hypergraph,
    turan_parts,
    two_in_A,
)
from .containment import (
    check_berge,
    check_embedding,
    contains_berge,
    contains_covered_set,
    count_embeddings,
    find_embedding,
    is_free,
)
from .counting import (
    FormulaResult,
    binom,
    clique_hypergraph,
    count_cliques,
    count_cliques_at_vertex,
    count_pattern_copies,
    formula_appendix_exact,
    formula_complete_expansion,
    formula_emc,
    formula_linear_forest_leading,
    formula_path_single,
    formula_star_forest,
    formula_union_complete,
    star_like_clique_count,
    two_in_a_clique_count,
)
from .errors import (
    BadParameters,
    BadUniformity,
    BudgetExceeded,
    DuplicateEdge,
    EdgeWrongSize,
    HypergraphError,
    MalformedSpec,
    NotAGraph,
    TooLarge,
    UniformityMismatch,
    UniformityUnderflow,
    UnknownSuite,
    VertexOutOfRange,
)
from .expansion import (
    chromatic_number,
    expand,
    format_pattern,
    parse_pattern,
    realize,
    strong_chromatic_number,
)
from .extremal import (
    SandwichReport,
    SearchResult,
    brute_berge_ex,
    brute_ex,
    verify_sandwich,
    weighted_clique_max,
)
from .hypergraph import (
    EmbeddingCertificate,
    Hypergraph,
    canonical_form,
    complete_hypergraph,
    deletion_map,
    disjoint_union,
    empty_hypergraph,
    new_hypergraph,
    parse_hg,
    read_hg,
    to_hg,
    write_hg,
)
from .verify import run_verify_suite

__version__ = "0.1.0"
