"""Co-authorship diversity scoring.

Computes a per-author community index from flat publication-author tables:
per-feature diversity factors over each publication's co-author team, summed
into paper factors and averaged per author, with an optional bonus for
first-time collaborators and an h-index baseline alongside.
"""

from cindex.corpus import (
    BINARY,
    CATEGORICAL,
    AuthorshipRecord,
    Corpus,
    FeatureSpec,
    Publication,
    SchemaConfig,
    author_publications,
    build_corpus,
    parse_records,
)
from cindex.errors import (
    CindexError,
    NotFoundError,
    ParseError,
    SchemaError,
    ValidationError,
)
from cindex.estimator import CommunityIndexScorer
from cindex.graph import CollabGraph, build_graph, novelty_bonus, pair_count
from cindex.metrics import (
    AuthorScore,
    FactorBreakdown,
    PaperContext,
    binary_factor,
    categorical_factor,
    community_index,
    compute_all,
    h_index,
    make_context,
    paper_factor,
)

__version__ = "0.1.0"

__all__ = [
    "AuthorScore",
    "AuthorshipRecord",
    "BINARY",
    "CATEGORICAL",
    "CindexError",
    "CollabGraph",
    "CommunityIndexScorer",
    "Corpus",
    "FactorBreakdown",
    "FeatureSpec",
    "NotFoundError",
    "PaperContext",
    "ParseError",
    "Publication",
    "SchemaConfig",
    "SchemaError",
    "ValidationError",
    "author_publications",
    "binary_factor",
    "build_corpus",
    "build_graph",
    "categorical_factor",
    "community_index",
    "compute_all",
    "h_index",
    "make_context",
    "novelty_bonus",
    "pair_count",
    "paper_factor",
    "parse_records",
]
