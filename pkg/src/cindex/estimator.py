"""Scikit-learn style front end for the corpus -> graph -> scores pipeline."""

from __future__ import annotations

import math
from typing import Any, Mapping

import numpy as np
import pandas as pd
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from cindex.corpus import (
    CATEGORICAL,
    AuthorshipRecord,
    FeatureSpec,
    SchemaConfig,
    build_corpus,
    records_from_rows,
)
from cindex.graph import build_graph
from cindex.metrics import compute_all

_OUTPUT_COLUMNS = ("author_key", "c_index", "publication_count", "h_index")


def _as_records(data: Any) -> list[AuthorshipRecord]:
    if isinstance(data, pd.DataFrame):
        return records_from_rows(data.to_dict(orient="records"))
    items = list(data)
    if all(isinstance(item, AuthorshipRecord) for item in items):
        return items
    if all(isinstance(item, Mapping) for item in items):
        return records_from_rows(items)
    raise TypeError(
        "expected a DataFrame, an iterable of mappings, or an iterable of AuthorshipRecord"
    )


class CommunityIndexScorer(BaseEstimator, TransformerMixin):
    """Score authors by the diversity of their co-author teams.

    ``fit`` ingests a flat table of (publication, author) rows -- one row per
    authorship, with a ``pub_id`` column, identity columns (``author_id`` or
    ``first_name``/``last_name``) and one column per declared feature. It
    builds the co-authorship graph over the whole table and computes one
    community index per author. ``transform`` then annotates any such table
    with the fitted per-author scores, so the scorer composes with pandas and
    scikit-learn pipelines.

    Parameters
    ----------
    features : sequence of FeatureSpec, dict, or str, optional
        Diversity features to score. Dicts take the same keys as
        ``FeatureSpec``; a bare string declares a categorical feature of that
        name with default weights.
    delta : float, default 0.0
        Strength of the first-time collaborator bonus; 0 disables it.
    include_solo : bool, default True
        Count single-author publications (factor 0) in the per-author mean.
    n_jobs : int, optional
        Workers for the per-author scoring pass. Output is identical to the
        sequential run.

    Attributes
    ----------
    corpus_ : Corpus
        The validated publication/author index built by ``fit``.
    graph_ : CollabGraph
        Co-authorship multigraph with pair collaboration counts.
    scores_ : list of AuthorScore
        One entry per author, ranked by descending index.

    Examples
    --------
    >>> rows = [
    ...     {"pub_id": "1", "first_name": "Ana", "last_name": "Silva", "country": "Brazil"},
    ...     {"pub_id": "1", "first_name": "Joy", "last_name": "Okafor", "country": "Nigeria"},
    ... ]
    >>> scorer = CommunityIndexScorer(features=["country"]).fit(rows)
    >>> scorer.author_scores()["c_index"].tolist()
    [2.0, 2.0]
    """

    def __init__(self, features=None, delta=0.0, include_solo=True, n_jobs=None):
        self.features = features
        self.delta = delta
        self.include_solo = include_solo
        self.n_jobs = n_jobs

    def _schema(self) -> SchemaConfig:
        specs = []
        for item in self.features or ():
            if isinstance(item, FeatureSpec):
                specs.append(item)
            elif isinstance(item, str):
                specs.append(FeatureSpec(name=item, kind=CATEGORICAL))
            elif isinstance(item, Mapping):
                specs.append(FeatureSpec(**item))
            else:
                raise TypeError(f"cannot interpret feature declaration {item!r}")
        return SchemaConfig(
            features=tuple(specs),
            delta=self.delta,
            include_solo_publications=self.include_solo,
        )

    def fit(self, X, y=None):
        """Build the corpus and graph from authorship rows and score every author."""
        schema = self._schema()
        self.corpus_ = build_corpus(_as_records(X), schema)
        self.graph_ = build_graph(self.corpus_)
        self.scores_ = compute_all(self.corpus_, schema, graph=self.graph_, n_jobs=self.n_jobs)
        self._score_by_author = {score.author_key: score for score in self.scores_}
        return self

    def transform(self, X) -> pd.DataFrame:
        """Per-row fitted scores for the author of each row.

        Rows keyed like the fit data pick up that author's scores; authors
        unseen at fit time get NaN columns. Output is row-aligned with X.
        """
        check_is_fitted(self, "scores_")
        rows = []
        for record in _as_records(X):
            score = self._score_by_author.get(record.author_key)
            rows.append(
                {
                    "author_key": record.author_key,
                    "c_index": math.nan if score is None else score.c_index,
                    "publication_count": math.nan if score is None else score.publication_count,
                    "h_index": (
                        math.nan
                        if score is None or score.h_index is None
                        else score.h_index
                    ),
                }
            )
        return pd.DataFrame(rows, columns=list(_OUTPUT_COLUMNS))

    def author_scores(self) -> pd.DataFrame:
        """Ranked one-row-per-author table of the fitted scores."""
        check_is_fitted(self, "scores_")
        rows = [
            {
                "author_key": score.author_key,
                "display_name": self.corpus_.display_name(score.author_key),
                "c_index": score.c_index,
                "publication_count": score.publication_count,
                "h_index": math.nan if score.h_index is None else score.h_index,
            }
            for score in self.scores_
        ]
        columns = ["author_key", "display_name", "c_index", "publication_count", "h_index"]
        return pd.DataFrame(rows, columns=columns)

    def score_of(self, author_key: str) -> float:
        """Fitted community index of one author (KeyError if unseen)."""
        check_is_fitted(self, "scores_")
        return self._score_by_author[author_key].c_index

    def get_feature_names_out(self, input_features=None):
        return np.asarray(_OUTPUT_COLUMNS, dtype=object)
