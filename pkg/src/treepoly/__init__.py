"""Complete polynomial invariants for rooted, unrooted and leaf-labeled trees."""

from .polyring import (
    NotDivisible,
    Polynomial,
    VarSetMismatch,
    coefficient_of,
    coefficient_sum,
    degree_in,
    poly_add,
    poly_mul,
    substitute,
    try_div_exact,
)
from .trees import (
    LabeledRootedTree,
    LabeledUnrootedTree,
    RootedTree,
    UnrootedTree,
    affix_tree,
    branching_vertex,
    canonical_code,
    contract_leaf_edges,
    is_isomorphic,
    parse_dyck,
    parse_newick,
    rooted_path,
    rooted_star,
    stem_length,
    to_dyck,
    to_newick,
    trivial,
    wedge,
)
from .catalog import TreeCatalog, catalog_upto, enumerate_trees
from .invariant import (
    eisenstein_check,
    p_from_dyck,
    p_labeled,
    p_prime,
    p_rooted,
    p_tree,
    p_unrooted,
    vertex_labels,
)
from .oracle import collision_search, generating_function, primary_subtrees, q_monomial
from .reconstruct import (
    NotATreePolynomial,
    factor_tree_product,
    infer_stem,
    reconstruct_general,
    reconstruct_rooted,
)

__version__ = "0.1.0"
