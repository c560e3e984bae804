"""Co-authorship multigraph with per-pair collaboration counts."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from cindex.corpus import Corpus


def _pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class CollabGraph:
    """Undirected multigraph over authors.

    ``pair_counts`` maps each unordered author pair to the number of distinct
    publications they share; ``adjacency`` is the derived neighbor view.
    """

    pair_counts: Mapping[tuple[str, str], int] = field(default_factory=dict)
    adjacency: Mapping[str, frozenset[str]] = field(default_factory=dict)

    def neighbors(self, author_key: str) -> frozenset[str]:
        return self.adjacency.get(author_key, frozenset())


def build_graph(corpus: Corpus) -> CollabGraph:
    """Count, for every unordered author pair, the publications they share."""
    counts: dict[tuple[str, str], int] = {}
    adjacency: dict[str, set[str]] = {}
    for publication in corpus.publications.values():
        for key in publication.author_keys:
            adjacency.setdefault(key, set())
        for a, b in combinations(publication.author_keys, 2):
            pair = _pair(a, b)
            counts[pair] = counts.get(pair, 0) + 1
            adjacency[a].add(b)
            adjacency[b].add(a)
    return CollabGraph(
        pair_counts=counts,
        adjacency={key: frozenset(neighbors) for key, neighbors in adjacency.items()},
    )


def pair_count(graph: CollabGraph, a: str, b: str) -> int:
    """Number of distinct publications shared by two different authors."""
    if a == b:
        raise ValueError(f"pair requires two distinct authors, got {a!r} twice")
    return graph.pair_counts.get(_pair(a, b), 0)


def novelty_bonus(graph: CollabGraph, a: str, b: str, delta: float) -> float:
    """Multiplier on b's contribution to a's scores: 1 + delta for a first-time pair.

    Novelty is decided by the pair's total collaboration count over the whole
    corpus; only pairs sharing exactly one publication are boosted.
    """
    if delta < 0:
        raise ValueError("delta must be >= 0")
    count = pair_count(graph, a, b)
    if count == 0:
        raise ValueError(f"{a!r} and {b!r} have never co-authored; no bonus is defined")
    return 1.0 + delta if count == 1 else 1.0
