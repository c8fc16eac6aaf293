"""clusterlab: an exact-arithmetic workbench for cluster algebras of
geometric type.

Seeds, mutations, exchange-graph enumeration, finite-type recognition,
denominator-vector/root comparisons, and double-word seed data with
generalized minors realized for SL_{r+1}.
"""

from .laurent import (
    LaurentError,
    LaurentParseError,
    LaurentPoly,
    VarSet,
    VarSetMismatch,
    denominator_vector,
    evaluate,
    has_nonnegative_coeffs,
    parse_laurent,
    poly_from_json,
    poly_to_json,
    substitute_fraction,
    try_exact_div,
)
from .seed import (
    ExtendedExchangeMatrix,
    LaurentViolation,
    NotAcyclicError,
    Seed,
    SeedError,
    acyclic_presentation,
    canonical_key,
    exchange_binomial,
    find_skew_symmetrizer,
    initial_seed,
    is_acyclic,
    matrix_mutation,
    rebase,
    seed_from_json,
    seed_mutation,
    seed_to_json,
    upper_membership,
)
from .explorer import (
    EnumLimits,
    ExchangeGraph,
    check_conjecture_suite,
    enumerate_exchange_graph,
    export_graph,
    graph_to_json,
    graphs_isomorphic,
    reexpand_from,
    regularity_report,
)
from .cartan_roots import (
    CartanError,
    CartanMatrix,
    CheckItem,
    WeylElement,
    almost_positive,
    b_of_a,
    cartan_of_type,
    denominator_bijection_check,
    positive_roots,
    reduced_words,
    weyl_element,
)
from .double_bruhat import (
    DoubleWord,
    ExchangeVerification,
    MinorLabel,
    NotReducedError,
    SymbolicMatrix,
    WordStructure,
    btilde_of_word,
    det_poly,
    enumerate_double_words,
    gamma_delta,
    minor_family,
    minor_poly,
    parse_double_word,
    symbolic_matrix,
    verify_adjacent_exchange,
)
from .presets import list_presets, preset_seed, rank2_seed, seed_of_cartan

__version__ = "0.1.0"
