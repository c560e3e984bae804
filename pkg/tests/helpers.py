"""Shared test utilities: random corpora and an independent no-bonus scorer."""

from __future__ import annotations

import math
import random

from cindex.corpus import (
    BINARY,
    CATEGORICAL,
    AuthorshipRecord,
    Corpus,
    FeatureSpec,
    SchemaConfig,
    build_corpus,
)

BINARY_VALUES = ("x", "y")


def random_records(
    rng: random.Random,
    max_authors: int = 8,
    max_pubs: int = 6,
    max_categories: int = 4,
    missing_rate: float = 0.1,
    with_citations: bool = False,
) -> list[AuthorshipRecord]:
    """Random authorship rows over a small author pool."""
    authors = [f"a{i}" for i in range(rng.randint(1, max_authors))]
    records = []
    for p in range(rng.randint(1, max_pubs)):
        team = rng.sample(authors, rng.randint(1, len(authors)))
        citations = rng.randrange(40) if with_citations else None
        for author in team:
            values = {}
            if rng.random() >= missing_rate:
                values["tone"] = rng.choice(BINARY_VALUES)
            if rng.random() >= missing_rate:
                values["region"] = f"r{rng.randrange(max_categories)}"
            if rng.random() >= missing_rate:
                values["topic"] = f"t{rng.randrange(max_categories)}"
            records.append(
                AuthorshipRecord(
                    pub_id=f"p{p}",
                    author_key=author,
                    display_name=author.upper(),
                    feature_values=values,
                    citation_count=citations,
                )
            )
    return records


def random_schema(rng: random.Random, delta_choices=(0.0, 0.8)) -> SchemaConfig:
    weights = (0.5, 1.0, 2.0)
    category_weights = {"r0": rng.choice(weights)} if rng.random() < 0.5 else {}
    return SchemaConfig(
        features=(
            FeatureSpec("tone", BINARY, base_weight=rng.choice(weights)),
            FeatureSpec(
                "region", CATEGORICAL,
                base_weight=rng.choice(weights),
                category_weights=category_weights,
            ),
            FeatureSpec("topic", CATEGORICAL),
        ),
        delta=rng.choice(delta_choices),
    )


def random_corpus(rng: random.Random, **kwargs) -> tuple[Corpus, SchemaConfig]:
    schema = random_schema(rng, delta_choices=kwargs.pop("delta_choices", (0.0, 0.8)))
    corpus = build_corpus(random_records(rng, **kwargs), schema)
    return corpus, schema


def plain_paper_factor(corpus: Corpus, author: str, pub: str, schema: SchemaConfig) -> float:
    """Bonus-free scorer written from scratch; the delta=0 reference."""
    publication = corpus.publications[pub]
    reference = publication.features_of(author)
    others = [entry for entry in publication.authors if entry.author_key != author]
    total = 0.0
    for feature in schema.features:
        own = reference.get(feature.name)
        if own is None:
            continue
        same = sum(1 for other in others if other.feature_values.get(feature.name) == own)
        if feature.kind == BINARY:
            total += len(others) / (1 + same) * feature.base_weight
        else:
            categories = {own} | {
                value
                for other in others
                if (value := other.feature_values.get(feature.name)) is not None
            }
            total += (
                len(others)
                / (1 + same)
                * len(categories)
                * feature.base_weight
                * feature.category_weights.get(own, 1.0)
            )
    return total


def plain_author_score(corpus: Corpus, author: str, schema: SchemaConfig) -> float:
    pub_ids = [
        pub_id
        for pub_id in sorted(corpus.publications)
        if author in corpus.publications[pub_id].author_keys
        and (schema.include_solo_publications or corpus.publications[pub_id].n_authors > 1)
    ]
    if not pub_ids:
        return 0.0
    return sum(plain_paper_factor(corpus, author, pub_id, schema) for pub_id in pub_ids) / len(pub_ids)


def close(a: float, b: float, rel: float) -> bool:
    return math.isclose(a, b, rel_tol=rel, abs_tol=1e-12)
