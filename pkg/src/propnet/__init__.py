"""Proposition-graph sentence representation and comparison."""

from .cart import RegressionTree, pad_vector, predict, train_cart
from .compare import (
    COMPARISON_DIMENSIONS,
    DifferenceVector,
    SentenceRep,
    align_p2,
    align_p3,
    binary_group_score,
    build_representation,
    collect_dimension,
    diff_vector,
    diff_vector_p1,
    diff_vector_p2,
    diff_vector_p3,
    pod,
    similarity_code,
)
from .config import Config, default_lexicon, load_config, make_oracle
from .graph import (
    HypernymLexicon,
    PropGraph,
    classify_instance_kind,
    export_dot,
    export_json_dict,
    merge,
    merge_tree,
    represent,
    validate,
)
from .harness import (
    ModelBundle,
    PairCorpus,
    StsRecord,
    cognitive_report,
    compute_vectors,
    evaluate,
    load_sickr_tsv,
    load_stsb_jsonl,
    select_single_dimension_pairs,
    train_models,
)
from .oracle import (
    CachingOracle,
    FallbackOracle,
    FixtureOracle,
    Oracle,
    OracleMiss,
    OracleProtocolError,
    OracleUnavailable,
    RemoteOracle,
)
from .parsing import DimensionFrame, DimensionKind, classify_preposition, parse_dimensions
from .splitting import (
    ClauseType,
    Proposition,
    RelativeSubtype,
    SplitResult,
    SplitTree,
    TimeRelation,
    UnsplittableSentence,
    extract_subtree,
    find_subordinate_verb,
    split_prop2,
    split_recursive,
)
from .stats import dimension_stats, levene, mann_whitney_u, spearman
from .tokens import (
    AnnotatedSentence,
    PairKind,
    SentenceKind,
    Token,
    classify_pair,
    classify_sentence,
    load_conllu,
    serialize_conllu,
)

__version__ = "0.1.0"
