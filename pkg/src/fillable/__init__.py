"""Minimal non-faces, fillings, and identities among iterated Whitehead products.

The pipeline: a simplicial complex yields minimal non-faces; subsets of them
whose union with the complex is contractible are fillings; two fillings give
an exact integer relation between boundary chains; the relation lifts to a
symbolic identity among (higher) Whitehead products, which for skeleta of
simplex boundaries specializes to the Jacobi and Hardie identities.
"""

from .chains import (
    Chain,
    HomologyProfile,
    NoSolution,
    SmithDecomposition,
    boundary,
    boundary_matrix,
    chain_boundary,
    reduced_homology,
    smith_normal_form,
    solve_chain_relation,
)
from .complexes import (
    ParseError,
    RP2_FILLING_TRIPLES,
    SimplicialComplex,
    as_simplex,
    closure_bar,
    full_subcomplex,
    gen_cross_polytope_boundary,
    gen_rp2_six,
    gen_simplex_skeleton,
    minimal_non_faces,
    parse_complex,
    serialize_complex,
    skeleton,
)
from .fillings import (
    ContractibilityCertificate,
    Filling,
    NotFilling,
    Obstructed,
    certify_contractible,
    filling_shape,
    find_fillings,
    is_filling,
    sphere_skeleton_filling,
    union_with,
)
from .identities import (
    GradedBracketTerm,
    Provenance,
    WhiteheadExpr,
    WhiteheadIdentity,
    bracket_text,
    build_expr,
    derive_identity,
    graded_lie_check,
    identity_residual,
    parse_identity_json,
    render_identity,
    specialize_spheres,
    sphere_identity,
)
from .orderings import (
    AttachmentForest,
    AttachmentTree,
    ContractionOrdering,
    DisconnectedClosure,
    attachment_forest,
    contraction_ordering,
    validate_ordering,
)

__version__ = "0.1.0"

__all__ = [
    "AttachmentForest",
    "AttachmentTree",
    "Chain",
    "ContractibilityCertificate",
    "ContractionOrdering",
    "DisconnectedClosure",
    "Filling",
    "GradedBracketTerm",
    "HomologyProfile",
    "NoSolution",
    "NotFilling",
    "Obstructed",
    "ParseError",
    "Provenance",
    "RP2_FILLING_TRIPLES",
    "SimplicialComplex",
    "SmithDecomposition",
    "WhiteheadExpr",
    "WhiteheadIdentity",
    "as_simplex",
    "attachment_forest",
    "boundary",
    "boundary_matrix",
    "bracket_text",
    "build_expr",
    "certify_contractible",
    "chain_boundary",
    "closure_bar",
    "contraction_ordering",
    "derive_identity",
    "filling_shape",
    "find_fillings",
    "full_subcomplex",
    "gen_cross_polytope_boundary",
    "gen_rp2_six",
    "gen_simplex_skeleton",
    "graded_lie_check",
    "identity_residual",
    "is_filling",
    "minimal_non_faces",
    "parse_complex",
    "parse_identity_json",
    "reduced_homology",
    "render_identity",
    "serialize_complex",
    "skeleton",
    "smith_normal_form",
    "solve_chain_relation",
    "specialize_spheres",
    "sphere_identity",
    "sphere_skeleton_filling",
    "union_with",
    "validate_ordering",
]
