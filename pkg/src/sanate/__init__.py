"""SANATE: rule-based Arabic textual entailment.

A lexical-overlap entailment baseline (ATE mode) extended with negation
resolution and sentiment-polarity compatibility checking (SANATE mode),
plus lexicon loaders, a dataset evaluation harness and a CLI.
"""

from .errors import (
    DegenerateLength,
    DuplicateId,
    IoFailure,
    MalformedLine,
    MalformedRecord,
    MalformedRow,
    MissingGoldLabel,
    SanateError,
    UnknownPolarityLabel,
)
from .lexicons import (
    Polarity,
    Resources,
    SemanticLexicon,
    SentimentLexicon,
    default_stop_words,
    load_semantic_lexicon,
    load_sentiment_wordlists,
    split_combined_lexicon,
)
from .negation import NegationAnalysis, NegationRule, analyze_negation, negation_adjust
from .normalize import (
    DEFAULT_AFFIXES,
    NEGATION_PARTICLES,
    AffixTables,
    ProcessedSentence,
    Token,
    light_stem,
    load_affix_tables,
    load_stop_words,
    normalize,
    process_sentence,
    tokenize,
)
from .overlap import (
    DEFAULT_THRESHOLDS,
    AteTrace,
    Decision,
    OverlapMeasures,
    Thresholds,
    ate_decide,
    common_count,
    decide_pair,
    judge_ate,
    measures,
)
from .pipeline import (
    EvalReport,
    JudgmentTrace,
    Mode,
    PairRecord,
    evaluate,
    judge,
    load_dataset,
)
from .sentiment import PolarityResult, classify_polarity, sentiment_adjust

__version__ = "0.1.0"

__all__ = [
    "AffixTables",
    "AteTrace",
    "Decision",
    "DegenerateLength",
    "DuplicateId",
    "DEFAULT_AFFIXES",
    "DEFAULT_THRESHOLDS",
    "EvalReport",
    "IoFailure",
    "JudgmentTrace",
    "MalformedLine",
    "MalformedRecord",
    "MalformedRow",
    "MissingGoldLabel",
    "Mode",
    "NEGATION_PARTICLES",
    "NegationAnalysis",
    "NegationRule",
    "OverlapMeasures",
    "PairRecord",
    "Polarity",
    "PolarityResult",
    "ProcessedSentence",
    "Resources",
    "SanateError",
    "SemanticLexicon",
    "SentimentLexicon",
    "Thresholds",
    "Token",
    "UnknownPolarityLabel",
    "analyze_negation",
    "ate_decide",
    "classify_polarity",
    "common_count",
    "decide_pair",
    "default_stop_words",
    "evaluate",
    "judge",
    "judge_ate",
    "light_stem",
    "load_affix_tables",
    "load_dataset",
    "load_semantic_lexicon",
    "load_sentiment_wordlists",
    "load_stop_words",
    "measures",
    "negation_adjust",
    "normalize",
    "process_sentence",
    "sentiment_adjust",
    "split_combined_lexicon",
    "tokenize",
]
