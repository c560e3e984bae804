"""Per-feature factors, paper factors, the community index, and the h-index.

A publication is scored for one reference author at a time, against that
publication's co-author team. Binary features use a similarity cost: each
co-author sharing the reference author's value makes the feature cheaper,
damped by that co-author's novelty bonus. Categorical features compare the
bonus-weighted team mass against the same-category mass and scale by how many
distinct categories appear on the publication. The community index of an
author is the mean of their per-publication factor sums.

All sums go through math.fsum, so scores are bit-identical regardless of the
order in which authors or rows arrive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence

from joblib import Parallel, delayed

from cindex.corpus import BINARY, CATEGORICAL, Corpus, FeatureSpec, SchemaConfig
from cindex.errors import NotFoundError
from cindex.graph import CollabGraph, build_graph, novelty_bonus


class Coauthor(NamedTuple):
    author_key: str
    feature_values: Mapping[str, str]
    bonus: float


@dataclass(frozen=True)
class PaperContext:
    """One (reference author, publication) scoring frame with bonuses resolved."""

    reference_author: str
    publication: str
    reference_features: Mapping[str, str]
    coauthors: tuple[Coauthor, ...]
    n_coauthors: int


@dataclass(frozen=True)
class FactorBreakdown:
    """Every per-feature factor for one (author, publication) pair.

    ``diagnostics`` keeps the terms each factor was built from (cost or
    numerator/denominator/breadth plus applied weights) for explain output.
    """

    pub_id: str
    per_feature: Mapping[str, float]
    paper_factor: float
    diagnostics: Mapping[str, Mapping[str, object]]


@dataclass(frozen=True)
class AuthorScore:
    author_key: str
    c_index: float
    publication_count: int
    per_publication: tuple[FactorBreakdown, ...]
    h_index: int | None = None


def make_context(
    corpus: Corpus, graph: CollabGraph, author: str, pub: str, delta: float
) -> PaperContext:
    """Assemble the co-author team of ``pub`` as seen from ``author``.

    Co-authors keep publication order; each carries its novelty bonus with
    respect to the reference author.
    """
    publication = corpus.publications.get(pub)
    if publication is None or author not in publication.author_keys:
        raise ValueError(f"author {author!r} is not on publication {pub!r}")
    coauthors = tuple(
        Coauthor(entry.author_key, entry.feature_values,
                 novelty_bonus(graph, author, entry.author_key, delta))
        for entry in publication.authors
        if entry.author_key != author
    )
    return PaperContext(
        reference_author=author,
        publication=pub,
        reference_features=publication.features_of(author),
        coauthors=coauthors,
        n_coauthors=len(coauthors),
    )


def _binary_factor(ctx: PaperContext, feature: FeatureSpec) -> tuple[float, dict]:
    reference_value = ctx.reference_features.get(feature.name)
    if reference_value is None:
        return 0.0, {"kind": BINARY, "missing_reference_value": True}
    # Missing co-author values count toward the team size but never match.
    cost = 1.0 + math.fsum(
        1.0 / coauthor.bonus
        for coauthor in ctx.coauthors
        if coauthor.feature_values.get(feature.name) == reference_value
    )
    factor = ctx.n_coauthors / cost * feature.base_weight
    diagnostics = {
        "kind": BINARY,
        "cost": cost,
        "n_coauthors": ctx.n_coauthors,
        "base_weight": feature.base_weight,
    }
    return factor, diagnostics


def _categorical_factor(ctx: PaperContext, feature: FeatureSpec) -> tuple[float, dict]:
    reference_value = ctx.reference_features.get(feature.name)
    if reference_value is None:
        return 0.0, {"kind": CATEGORICAL, "missing_reference_value": True}
    numerator = math.fsum(coauthor.bonus for coauthor in ctx.coauthors)
    denominator = 1.0 + math.fsum(
        coauthor.bonus
        for coauthor in ctx.coauthors
        if coauthor.feature_values.get(feature.name) == reference_value
    )
    categories = {reference_value}
    for coauthor in ctx.coauthors:
        value = coauthor.feature_values.get(feature.name)
        if value is not None:
            categories.add(value)
    breadth = len(categories)
    category_weight = feature.category_weight(reference_value)
    factor = numerator / denominator * breadth * feature.base_weight * category_weight
    diagnostics = {
        "kind": CATEGORICAL,
        "numerator": numerator,
        "denominator": denominator,
        "breadth": breadth,
        "base_weight": feature.base_weight,
        "category": reference_value,
        "category_weight": category_weight,
    }
    return factor, diagnostics


def binary_factor(ctx: PaperContext, feature: FeatureSpec) -> float:
    """Similarity-cost factor for a binary feature.

    cost = 1 + sum(1/bonus) over co-authors matching the reference author's
    value; the factor is (team size / cost) * base_weight. A missing
    reference value yields 0.
    """
    if feature.kind != BINARY:
        raise ValueError(f"feature {feature.name!r} is not binary")
    value, _ = _binary_factor(ctx, feature)
    return value


def categorical_factor(ctx: PaperContext, feature: FeatureSpec) -> float:
    """Breadth-scaled factor for a categorical feature.

    (bonus mass of all co-authors / (1 + bonus mass of same-category
    co-authors)) * breadth * base_weight * category weight of the reference
    author's own category. Breadth counts distinct non-missing categories
    among all authors of the publication, the reference author included.
    """
    if feature.kind != CATEGORICAL:
        raise ValueError(f"feature {feature.name!r} is not categorical")
    value, _ = _categorical_factor(ctx, feature)
    return value


def paper_factor(
    corpus: Corpus, graph: CollabGraph, author: str, pub: str, schema: SchemaConfig
) -> FactorBreakdown:
    """Score one (author, publication) pair across every declared feature."""
    ctx = make_context(corpus, graph, author, pub, schema.delta)
    per_feature: dict[str, float] = {}
    diagnostics: dict[str, dict] = {}
    for feature in schema.features:
        compute = _binary_factor if feature.kind == BINARY else _categorical_factor
        value, detail = compute(ctx, feature)
        per_feature[feature.name] = value
        diagnostics[feature.name] = detail
    return FactorBreakdown(
        pub_id=pub,
        per_feature=per_feature,
        paper_factor=math.fsum(per_feature.values()),
        diagnostics=diagnostics,
    )


def _available_h_index(corpus: Corpus, pub_ids: Sequence[str]) -> int | None:
    # Unavailable (never 0) unless every publication of the author carries a count.
    counts = [corpus.publications[pub_id].citation_count for pub_id in pub_ids]
    if not counts or any(count is None for count in counts):
        return None
    return h_index(counts)


def community_index(
    corpus: Corpus, graph: CollabGraph, author: str, schema: SchemaConfig
) -> AuthorScore:
    """Mean of the author's per-publication factor sums, with breakdowns.

    Solo publications contribute 0 and are included unless the schema says
    otherwise. Publications are scored in sorted pub_id order.
    """
    pub_ids = corpus.author_index.get(author)
    if pub_ids is None:
        raise NotFoundError(f"unknown author {author!r}")
    ordered = sorted(pub_ids)
    counted = [
        pub_id
        for pub_id in ordered
        if schema.include_solo_publications or corpus.publications[pub_id].n_authors > 1
    ]
    breakdowns = tuple(paper_factor(corpus, graph, author, pub_id, schema) for pub_id in counted)
    if breakdowns:
        c_index = math.fsum(item.paper_factor for item in breakdowns) / len(breakdowns)
    else:
        c_index = 0.0
    return AuthorScore(
        author_key=author,
        c_index=c_index,
        publication_count=len(breakdowns),
        per_publication=breakdowns,
        h_index=_available_h_index(corpus, ordered),
    )


def h_index(citations: Sequence[int]) -> int:
    """Largest h such that at least h of the citation counts are >= h."""
    best = 0
    for rank, count in enumerate(sorted(citations, reverse=True), start=1):
        if count >= rank:
            best = rank
        else:
            break
    return best


def compute_all(
    corpus: Corpus,
    schema: SchemaConfig,
    graph: CollabGraph | None = None,
    n_jobs: int | None = None,
) -> list[AuthorScore]:
    """Score every author in the corpus.

    Ranked by descending index with ties broken by author key, so output is
    reproducible across runs and identical whether or not ``n_jobs`` spreads
    the per-author work over parallel workers.
    """
    if graph is None:
        graph = build_graph(corpus)
    authors = sorted(corpus.author_index)
    if n_jobs in (None, 1):
        scores = [community_index(corpus, graph, author, schema) for author in authors]
    else:
        scores = Parallel(n_jobs=n_jobs, prefer="threads")(
            delayed(community_index)(corpus, graph, author, schema) for author in authors
        )
    scores.sort(key=lambda score: (-score.c_index, score.author_key))
    return scores
