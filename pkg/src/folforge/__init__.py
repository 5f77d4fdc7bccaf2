"""Synthesis, lexicalization, preprocessing, and evaluation toolkit for
logic-to-text corpora.

The pipeline: sample formulas from a context-free grammar (generate), fill
them with real predicates and entities (lexicon), translate them with a
rule-based floor system (baseline), and score candidate sentences against
references (metrics). The corpus module ingests external parallel datasets
and computes split statistics. Everything is seeded and deterministic.
"""
from .baseline import translate
from .corpus import (
    ColumnMap,
    IngestResult,
    ParallelPair,
    RejectedRow,
    TokenDistribution,
    extract_pairs,
    ingest,
    kl_divergence,
    split,
    token_frequency,
    tokenize,
)
from .errors import (
    ArityError,
    ConfigError,
    DegenerateInput,
    DepthUnreachable,
    EmptyInput,
    ExhaustedSampling,
    FolforgeError,
    FormulaSyntaxError,
    NoMatchingPredicate,
    SchemaError,
    UnknownSymbol,
    UnlexicalizedInput,
)
from .formulas import (
    Atom,
    Binary,
    Connective,
    Constant,
    Formula,
    Lexeme,
    Not,
    Quantified,
    Quantifier,
    Term,
    Variable,
    formula_args,
    is_term,
    quantifier_depth,
    structural_depth,
)
from .generate import (
    GenerationConfig,
    generate_corpus,
    generate_tagged_corpus,
    sample_nested,
    sample_standard,
)
from .lexicon import (
    DEFAULT_SYMBOL_MAP,
    ENTITY_CLASSES,
    Predicate,
    SymbolMap,
    Vocabulary,
    inverse_rewrite_symbols,
    lexicalize,
    load_vocabulary,
    rewrite_symbols,
)
from .metrics import (
    MetricsReport,
    PairScore,
    bleu,
    evaluate,
    levenshtein,
    normalized_score,
)
from .syntax import parse, render

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "Atom",
    "Binary",
    "ColumnMap",
    "ConfigError",
    "Connective",
    "Constant",
    "DEFAULT_SYMBOL_MAP",
    "DegenerateInput",
    "DepthUnreachable",
    "EmptyInput",
    "ENTITY_CLASSES",
    "ExhaustedSampling",
    "FolforgeError",
    "Formula",
    "FormulaSyntaxError",
    "GenerationConfig",
    "IngestResult",
    "Lexeme",
    "MetricsReport",
    "NoMatchingPredicate",
    "Not",
    "PairScore",
    "ParallelPair",
    "Predicate",
    "Quantified",
    "Quantifier",
    "RejectedRow",
    "SchemaError",
    "SymbolMap",
    "Term",
    "TokenDistribution",
    "UnknownSymbol",
    "UnlexicalizedInput",
    "Variable",
    "Vocabulary",
    "bleu",
    "evaluate",
    "extract_pairs",
    "formula_args",
    "generate_corpus",
    "generate_tagged_corpus",
    "ingest",
    "inverse_rewrite_symbols",
    "is_term",
    "kl_divergence",
    "levenshtein",
    "lexicalize",
    "load_vocabulary",
    "normalized_score",
    "parse",
    "quantifier_depth",
    "render",
    "rewrite_symbols",
    "sample_nested",
    "sample_standard",
    "split",
    "structural_depth",
    "token_frequency",
    "tokenize",
    "translate",
]
