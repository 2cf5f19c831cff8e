"""Hierarchical simple games on multisets.

Construction and analysis of monotone simple games whose players come
in levels of interchangeable members: canonical forms, duality, the
closed-form weightedness test for the two threshold families, trading
transform certificates, and exact weight synthesis.
"""

from .bruteforce import (
    ExpandedGame,
    expand,
    expanded_equal,
    find_repartition,
    games_equal,
)
from .cli import (
    COMMANDS,
    GameDocument,
    document_game,
    main,
    parse_document,
    run,
    serialize_document,
)
from .errors import (
    CapacityError,
    DocumentError,
    DocumentSyntaxError,
    DocumentValidationError,
    HierGamesError,
    InvalidCoalitionError,
    InvalidComparisonError,
    InvalidGameError,
    InvalidParamsError,
    InvalidShiftError,
    NoCertificateError,
    NotCompleteError,
)
from .feasibility import feasible_point
from .games import (
    CAPACITY_ENV,
    DEFAULT_CAPACITY,
    SET_GAME_PLAYER_LIMIT,
    Coalition,
    Comparison,
    MultisetGame,
    PlayerMultiset,
    SetGame,
    apply_shift,
    canonicalize_set_game,
    dual,
    dummy_levels,
    enumeration_capacity,
    equivalence_classes,
    is_complete,
    is_winning,
    is_winning_set,
    isbell_compare,
    maximal_losing,
    minimal_antichain,
    reduced_game,
    set_game_equivalence_classes,
    shift_maximal_losing,
    shift_minimal_winning,
    subgame,
    winning_predicate,
)
from .hierarchy import (
    CONJUNCTIVE,
    DISJUNCTIVE,
    HierarchyParams,
    build,
    build_conjunctive,
    build_disjunctive,
    canonical_parameter_grid,
    canonical_params,
    dual_params,
    has_dummy_level,
    recognize_conjunctive,
    recognize_disjunctive,
)
from .weights import (
    TradingTransform,
    WeightedRepresentation,
    WeightednessDecision,
    certificate_of_nonweightedness,
    is_weighted,
    is_weighted_conjunctive,
    is_weighted_disjunctive,
    search_trading_transform,
    separates,
    synthesize_weights,
    verify_trading_transform,
)

__version__ = "1.0.0"

__all__ = [
    "CAPACITY_ENV",
    "COMMANDS",
    "CONJUNCTIVE",
    "CapacityError",
    "Coalition",
    "Comparison",
    "DEFAULT_CAPACITY",
    "DISJUNCTIVE",
    "DocumentError",
    "DocumentSyntaxError",
    "DocumentValidationError",
    "ExpandedGame",
    "GameDocument",
    "HierGamesError",
    "HierarchyParams",
    "InvalidCoalitionError",
    "InvalidComparisonError",
    "InvalidGameError",
    "InvalidParamsError",
    "InvalidShiftError",
    "MultisetGame",
    "NoCertificateError",
    "NotCompleteError",
    "PlayerMultiset",
    "SET_GAME_PLAYER_LIMIT",
    "SetGame",
    "TradingTransform",
    "WeightedRepresentation",
    "WeightednessDecision",
    "apply_shift",
    "build",
    "build_conjunctive",
    "build_disjunctive",
    "canonical_parameter_grid",
    "canonical_params",
    "canonicalize_set_game",
    "certificate_of_nonweightedness",
    "document_game",
    "dual",
    "dual_params",
    "dummy_levels",
    "enumeration_capacity",
    "equivalence_classes",
    "expand",
    "expanded_equal",
    "feasible_point",
    "find_repartition",
    "games_equal",
    "has_dummy_level",
    "is_complete",
    "is_weighted",
    "is_weighted_conjunctive",
    "is_weighted_disjunctive",
    "is_winning",
    "is_winning_set",
    "isbell_compare",
    "main",
    "maximal_losing",
    "minimal_antichain",
    "parse_document",
    "recognize_conjunctive",
    "recognize_disjunctive",
    "reduced_game",
    "run",
    "search_trading_transform",
    "separates",
    "serialize_document",
    "set_game_equivalence_classes",
    "shift_maximal_losing",
    "shift_minimal_winning",
    "subgame",
    "synthesize_weights",
    "verify_trading_transform",
    "winning_predicate",
]
