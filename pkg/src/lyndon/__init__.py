"""Lyndon pairs: word combinatorics, monomial algebra invariants, and
Groebner-Shirshov bases for monomial Lie ideals."""

from .words import (
    Alphabet,
    cfl_factorize,
    deglex_cmp,
    is_factor,
    is_lyndon,
    left_standard_factorization,
    lex_cmp,
    lyndon_words,
    multidegree,
    right_standard_factorization,
    witt_count,
)
from .monomial import (
    SearchBoundExceeded,
    count_normal,
    global_dimension,
    hilbert_from_atoms,
    is_normal,
    n_chain_exists,
    pbw_normal_basis,
    two_chains,
)
from .pairs import (
    LyndonPair,
    atoms_from_obstructions,
    canonical_key,
    canonicalize,
    connected_component,
    enumerate_pairs,
    is_antichain,
    is_connected,
    minimal_w_pair,
    obstructions_from_atoms,
    pair_from_atoms,
    pair_from_json,
    pair_from_obstructions,
    pair_to_json,
)
from .lie import (
    AssocPoly,
    LiePoly,
    expand,
    leading_lyndon,
    lie_bracket,
    lyndon_decompose,
    regular_bracketing,
    standard_bracketing,
)
from .gs import (
    GSReport,
    disconnected_shortcut,
    gs_complete,
    is_gs_basis,
    overlap_composition,
    reduce_mod,
    structure_constants,
)
from . import catalog

__all__ = [
    "Alphabet",
    "AssocPoly",
    "GSReport",
    "LiePoly",
    "LyndonPair",
    "SearchBoundExceeded",
    "atoms_from_obstructions",
    "canonical_key",
    "canonicalize",
    "catalog",
    "cfl_factorize",
    "connected_component",
    "count_normal",
    "deglex_cmp",
    "disconnected_shortcut",
    "enumerate_pairs",
    "expand",
    "global_dimension",
    "gs_complete",
    "hilbert_from_atoms",
    "is_antichain",
    "is_connected",
    "is_factor",
    "is_gs_basis",
    "is_lyndon",
    "is_normal",
    "leading_lyndon",
    "left_standard_factorization",
    "lex_cmp",
    "lie_bracket",
    "lyndon_decompose",
    "lyndon_words",
    "minimal_w_pair",
    "multidegree",
    "n_chain_exists",
    "obstructions_from_atoms",
    "overlap_composition",
    "pair_from_atoms",
    "pair_from_json",
    "pair_from_obstructions",
    "pair_to_json",
    "pbw_normal_basis",
    "reduce_mod",
    "regular_bracketing",
    "right_standard_factorization",
    "standard_bracketing",
    "structure_constants",
    "two_chains",
    "witt_count",
]
