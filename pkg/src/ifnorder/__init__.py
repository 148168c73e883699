"""Exact-arithmetic total ordering and decision analysis for intuitionistic
fuzzy numbers given as trapezoidal membership/nonmembership pairs."""

from .cuts import CutRect, LevelRange, alpha_cut, cut, level_range, reconstruct, strong_cut
from .decision import (
    DominanceReport,
    Erratum,
    WeightedInfoSystem,
    better_sets,
    dominance_degrees,
    load_system,
    run_algorithm,
    system_from_csv_text,
    system_from_dict,
    system_to_csv,
    wr,
)
from .errors import (
    CellValidationError,
    CertificateInapplicableError,
    DimensionError,
    DomainError,
    IfnValidationError,
    IfnValidationWarning,
    KindMismatchError,
    KnotOrderError,
    LegConditionError,
    ParseError,
    PointwiseConsistencyError,
    WeightSumError,
)
from .ifn import (
    Ifn,
    IfnKind,
    TrapFN,
    embed_if_value,
    embed_ivif,
    embed_triangular,
    ifn_from_compact,
    ifn_from_dict,
    ifn_to_compact,
    ifn_to_dict,
    make_trapezoidal,
    sample_curve,
)
from .ordering import Relation, TieGroup, Verdict, compare, equality_certificate, sort_ifns
from .rational import Rational, as_rational, exact_str, format_rational
from .scores import (
    IvifScores,
    RootQuotient,
    ScoreQuad,
    TriangularScores,
    c_stream,
    c_value,
    ivif_scores,
    legacy_score,
    quad_at,
    score_quad,
    triangular_scores,
)
from .sequences import (
    DEFAULT_SEQUENCE,
    CustomRule,
    DenseSequence,
    DistinctDiagonal,
    PairList,
    RepeatsDiagonal,
    distinct_term,
    term_with_repeats,
)

__version__ = "0.1.0"
