"""Deliberately naive re-derivation of the factor math, for cross-checking.

Everything here recomputes from first principles with plain loops, including
pair collaboration counts, and shares only the corpus types with the main
implementation. The duplication is the point: tests compare the two routes.
Quadratic behavior is acceptable.
"""

from __future__ import annotations

from dataclasses import dataclass

from cindex.corpus import BINARY, Corpus, SchemaConfig


@dataclass(frozen=True)
class OracleResult:
    pub_id: str
    per_feature: dict[str, float]
    paper_factor: float


def _shared_publications(corpus: Corpus, a: str, b: str) -> int:
    shared = 0
    for publication in corpus.publications.values():
        keys = [entry.author_key for entry in publication.authors]
        if a in keys and b in keys:
            shared += 1
    return shared


def _bonus(corpus: Corpus, a: str, b: str, delta: float) -> float:
    if _shared_publications(corpus, a, b) == 1:
        return 1.0 + delta
    return 1.0


def naive_paper_factor(corpus: Corpus, author: str, pub: str, schema: SchemaConfig) -> OracleResult:
    """Recompute one (author, publication) score with straightforward loops."""
    publication = corpus.publications[pub]
    reference = None
    for entry in publication.authors:
        if entry.author_key == author:
            reference = entry.feature_values
    if reference is None:
        raise ValueError(f"author {author!r} is not on publication {pub!r}")
    others = [entry for entry in publication.authors if entry.author_key != author]

    per_feature: dict[str, float] = {}
    for feature in schema.features:
        own = reference.get(feature.name)
        if own is None:
            per_feature[feature.name] = 0.0
            continue
        if feature.kind == BINARY:
            cost = 1.0
            for other in others:
                if other.feature_values.get(feature.name) == own:
                    cost += 1.0 / _bonus(corpus, author, other.author_key, schema.delta)
            per_feature[feature.name] = len(others) / cost * feature.base_weight
        else:
            team_mass = 0.0
            same_mass = 1.0
            categories = {own}
            for other in others:
                bonus = _bonus(corpus, author, other.author_key, schema.delta)
                team_mass += bonus
                value = other.feature_values.get(feature.name)
                if value == own:
                    same_mass += bonus
                if value is not None:
                    categories.add(value)
            weight = feature.category_weights.get(own, 1.0)
            per_feature[feature.name] = (
                team_mass / same_mass * len(categories) * feature.base_weight * weight
            )

    total = 0.0
    for value in per_feature.values():
        total += value
    return OracleResult(pub, per_feature, total)


def naive_author_score(corpus: Corpus, author: str, schema: SchemaConfig) -> float:
    """Mean of the naive per-publication scores for one author."""
    pub_ids = []
    for pub_id in sorted(corpus.publications):
        publication = corpus.publications[pub_id]
        if author not in [entry.author_key for entry in publication.authors]:
            continue
        if not schema.include_solo_publications and len(publication.authors) == 1:
            continue
        pub_ids.append(pub_id)
    if not pub_ids:
        return 0.0
    total = 0.0
    for pub_id in pub_ids:
        total += naive_paper_factor(corpus, author, pub_id, schema).paper_factor
    return total / len(pub_ids)


def enumerate_binary_grid(team_size: int, base_weight: float = 1.0) -> dict[int, float]:
    """Binary factor for every possible count of same-valued co-authors.

    Keys run from 0 to team_size - 1 matching co-authors; no bonuses apply.
    A team of one yields the single entry {0: 0.0}.
    """
    if team_size < 1:
        raise ValueError("team_size must be >= 1")
    return {
        same: (team_size - 1) / (1 + same) * base_weight
        for same in range(team_size)
    }
