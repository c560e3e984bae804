"""Ingestion and validation of publication-author records.

The corpus is the ground truth every other module works from: publications
keyed by id, each holding an ordered author list with per-row feature values,
plus the inverted author -> publications index. Corpora are treated as
immutable once built, so they can be shared freely across workers.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import IO, Any, Iterable, Mapping, NamedTuple

from cindex.errors import ParseError, SchemaError, ValidationError

BINARY = "binary"
CATEGORICAL = "categorical"

#: Columns with fixed meaning; every other column is carried as a feature value.
IDENTITY_COLUMNS = ("pub_id", "author_id", "first_name", "last_name")
CITATIONS_COLUMN = "citations"


def _is_positive_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool) and value > 0


@dataclass(frozen=True)
class FeatureSpec:
    """Declares one diversity feature.

    ``binary`` features admit at most two distinct values corpus-wide and are
    scored through a similarity cost. ``categorical`` features have an open
    category set and are additionally scaled by the number of distinct
    categories present on a publication. ``category_weights`` discounts or
    boosts specific categories of the scored author and applies to
    categorical features only; unlisted categories weigh 1.
    """

    name: str
    kind: str
    base_weight: float = 1.0
    category_weights: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.name:
            raise SchemaError("feature name must be non-empty")
        if self.name in IDENTITY_COLUMNS or self.name == CITATIONS_COLUMN:
            raise SchemaError(f"feature name {self.name!r} collides with a reserved column")
        if self.kind not in (BINARY, CATEGORICAL):
            raise SchemaError(
                f"feature {self.name!r}: kind must be {BINARY!r} or {CATEGORICAL!r}, got {self.kind!r}"
            )
        if not _is_positive_number(self.base_weight):
            raise SchemaError(f"feature {self.name!r}: base_weight must be > 0")
        if not isinstance(self.category_weights, Mapping):
            raise SchemaError(f"feature {self.name!r}: category_weights must be a mapping")
        if self.category_weights:
            if self.kind != CATEGORICAL:
                raise SchemaError(
                    f"feature {self.name!r}: category_weights apply to categorical features only"
                )
            for category, weight in self.category_weights.items():
                if not _is_positive_number(weight):
                    raise SchemaError(
                        f"feature {self.name!r}: weight for category {category!r} must be > 0"
                    )
        object.__setattr__(self, "category_weights", dict(self.category_weights))

    def category_weight(self, category: str) -> float:
        return self.category_weights.get(category, 1.0)


@dataclass(frozen=True)
class SchemaConfig:
    """Feature declarations plus the scoring knobs shared by a whole run."""

    features: tuple[FeatureSpec, ...] = ()
    delta: float = 0.0
    include_solo_publications: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "features", tuple(self.features))
        names = [spec.name for spec in self.features]
        if len(set(names)) != len(names):
            duplicate = next(name for name in names if names.count(name) > 1)
            raise SchemaError(f"duplicate feature name {duplicate!r}")
        if isinstance(self.delta, bool) or not isinstance(self.delta, (int, float)) or not self.delta >= 0:
            raise SchemaError("delta must be a number >= 0")

    @classmethod
    def from_json(cls, text: str | bytes) -> "SchemaConfig":
        """Load a schema from its JSON document form."""
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"schema is not valid JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise SchemaError("schema document must be a JSON object")
        unknown = set(doc) - {"features", "delta", "include_solo_publications"}
        if unknown:
            raise SchemaError(f"unknown schema key {sorted(unknown)[0]!r}")
        features = []
        raw_features = doc.get("features", [])
        if not isinstance(raw_features, list):
            raise SchemaError('"features" must be an array')
        for item in raw_features:
            if not isinstance(item, dict):
                raise SchemaError("each feature declaration must be an object")
            extra = set(item) - {"name", "kind", "base_weight", "category_weights"}
            if extra:
                raise SchemaError(f"unknown feature key {sorted(extra)[0]!r}")
            features.append(
                FeatureSpec(
                    name=item.get("name", ""),
                    kind=item.get("kind", ""),
                    base_weight=item.get("base_weight", 1.0),
                    category_weights=item.get("category_weights", {}),
                )
            )
        return cls(
            features=tuple(features),
            delta=doc.get("delta", 0.0),
            include_solo_publications=doc.get("include_solo_publications", True),
        )

    def to_json(self) -> str:
        doc: dict[str, Any] = {
            "features": [
                {
                    "name": spec.name,
                    "kind": spec.kind,
                    "base_weight": spec.base_weight,
                    **(
                        {"category_weights": dict(sorted(spec.category_weights.items()))}
                        if spec.category_weights
                        else {}
                    ),
                }
                for spec in self.features
            ],
            "delta": self.delta,
            "include_solo_publications": self.include_solo_publications,
        }
        return json.dumps(doc, indent=2) + "\n"


@dataclass(frozen=True)
class AuthorshipRecord:
    """One (publication, author) input row."""

    pub_id: str
    author_key: str
    display_name: str
    feature_values: Mapping[str, str] = field(default_factory=dict)
    citation_count: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "feature_values", dict(self.feature_values))


class PubAuthor(NamedTuple):
    author_key: str
    feature_values: Mapping[str, str]


@dataclass(frozen=True)
class Publication:
    """A publication with its ordered author list and per-row feature values."""

    pub_id: str
    authors: tuple[PubAuthor, ...]
    citation_count: int | None = None

    @property
    def author_keys(self) -> tuple[str, ...]:
        return tuple(author.author_key for author in self.authors)

    @property
    def n_authors(self) -> int:
        return len(self.authors)

    def features_of(self, author_key: str) -> Mapping[str, str]:
        for author in self.authors:
            if author.author_key == author_key:
                return author.feature_values
        raise KeyError(author_key)


@dataclass(frozen=True)
class Corpus:
    """Validated, read-only view of all publications and authors."""

    publications: Mapping[str, Publication]
    author_index: Mapping[str, frozenset[str]]
    display_names: Mapping[str, str]
    schema: SchemaConfig

    def authors(self) -> list[str]:
        return sorted(self.author_index)

    def display_name(self, author_key: str) -> str:
        return self.display_names.get(author_key, author_key)

    @property
    def n_publications(self) -> int:
        return len(self.publications)

    @property
    def n_authors(self) -> int:
        return len(self.author_index)

    def to_csv(self) -> str:
        """Serialize back to the flat CSV row format.

        Re-parsing the output with the same schema rebuilds an equal corpus;
        display names travel in the first_name column, keys in author_id.
        """
        declared = [spec.name for spec in self.schema.features]
        observed: set[str] = set()
        for publication in self.publications.values():
            for author in publication.authors:
                observed.update(author.feature_values)
        feature_columns = declared + sorted(observed - set(declared))
        with_citations = any(
            publication.citation_count is not None
            for publication in self.publications.values()
        )
        header = ["pub_id", "author_id", "first_name", "last_name", *feature_columns]
        if with_citations:
            header.append(CITATIONS_COLUMN)
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for pub_id in sorted(self.publications):
            publication = self.publications[pub_id]
            for author in publication.authors:
                row = [
                    pub_id,
                    author.author_key,
                    self.display_name(author.author_key),
                    "",
                    *(author.feature_values.get(name, "") for name in feature_columns),
                ]
                if with_citations:
                    row.append(
                        "" if publication.citation_count is None else str(publication.citation_count)
                    )
                writer.writerow(row)
        return buffer.getvalue()


def _normalize_name_part(part: str) -> str:
    return " ".join(part.split()).lower()


def _clean_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float) and math.isnan(value):
        return ""
    return str(value).strip()


def _parse_citation_cell(raw: Any, row: int | None) -> int | None:
    if raw is None:
        return None
    if isinstance(raw, bool):
        raise ParseError(f"citations must be an integer, got {raw!r}", line=row)
    if isinstance(raw, float):
        if math.isnan(raw):
            return None
        if not raw.is_integer():
            raise ParseError(f"citations must be an integer, got {raw!r}", line=row)
        raw = int(raw)
    if isinstance(raw, int):
        count = raw
    else:
        cell = _clean_cell(raw)
        if not cell:
            return None
        try:
            count = int(cell)
        except ValueError:
            raise ParseError(f"citations must be an integer, got {cell!r}", line=row) from None
    if count < 0:
        raise ParseError(f"citations must be non-negative, got {count}", line=row)
    return count


def record_from_mapping(mapping: Mapping[str, Any], row: int | None = None) -> AuthorshipRecord:
    """Build one record from a column-name -> value mapping.

    All input routes (CSV rows, JSON objects, data-frame rows) funnel through
    here so author keying behaves identically everywhere: an explicit
    author_id wins; otherwise the key is the lowercased, whitespace-collapsed
    "first_name|last_name". Empty cells become missing values.
    """
    pub_id = _clean_cell(mapping.get("pub_id"))
    if not pub_id:
        raise ParseError("missing pub_id", line=row)
    author_id = _clean_cell(mapping.get("author_id"))
    first = _clean_cell(mapping.get("first_name"))
    last = _clean_cell(mapping.get("last_name"))
    if author_id:
        author_key = author_id
    elif first or last:
        author_key = f"{_normalize_name_part(first)}|{_normalize_name_part(last)}"
    else:
        raise ParseError(
            "row has no author identity (need author_id or first_name/last_name)", line=row
        )
    display_name = " ".join(part for part in (first, last) if part) or author_id
    feature_values: dict[str, str] = {}
    for column, value in mapping.items():
        if column in IDENTITY_COLUMNS or column == CITATIONS_COLUMN:
            continue
        if isinstance(value, (list, dict)):
            raise ParseError(f"column {column!r} must hold a scalar value", line=row)
        cell = _clean_cell(value)
        if cell:
            feature_values[column] = cell
    return AuthorshipRecord(
        pub_id=pub_id,
        author_key=author_key,
        display_name=display_name,
        feature_values=feature_values,
        citation_count=_parse_citation_cell(mapping.get(CITATIONS_COLUMN), row),
    )


def records_from_rows(rows: Iterable[Mapping[str, Any]]) -> list[AuthorshipRecord]:
    """Records from an iterable of mappings (JSON rows, data-frame rows)."""
    return [record_from_mapping(item, row=number) for number, item in enumerate(rows, start=1)]


def _decode(source: IO[bytes] | bytes | str) -> str:
    if hasattr(source, "read"):
        source = source.read()  # type: ignore[union-attr]
    if isinstance(source, bytes):
        try:
            return source.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from exc
    return str(source)


def _parse_csv(text: str) -> list[AuthorshipRecord]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None:
        raise ParseError("empty input: a header row is required")
    header = [column.strip() for column in header]
    seen: set[str] = set()
    for column in header:
        if column in seen:
            raise SchemaError(f"duplicate column {column!r} in header")
        seen.add(column)
    records = []
    for cells in reader:
        if not cells:  # blank line, e.g. a trailing newline
            continue
        if len(cells) != len(header):
            raise ParseError(
                f"expected {len(header)} columns, found {len(cells)}", line=reader.line_num
            )
        records.append(record_from_mapping(dict(zip(header, cells)), row=reader.line_num))
    return records


def _parse_json(text: str) -> list[AuthorshipRecord]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"input is not valid JSON: {exc}") from exc
    if not isinstance(doc, list):
        raise ParseError("JSON input must be an array of row objects")
    for number, item in enumerate(doc, start=1):
        if not isinstance(item, dict):
            raise ParseError("expected an object with column fields", line=number)
    return records_from_rows(doc)


def parse_records(source: IO[bytes] | bytes | str, format: str = "csv") -> list[AuthorshipRecord]:
    """Parse authorship rows from CSV or JSON into records.

    One record per (publication, author) row. Columns outside the identity
    set are preserved as feature values keyed by column name, whether or not
    a schema declares them.
    """
    text = _decode(source)
    if format == "csv":
        return _parse_csv(text)
    if format == "json":
        return _parse_json(text)
    raise ValueError(f"unknown input format {format!r}")


def build_corpus(records: Iterable[AuthorshipRecord], schema: SchemaConfig) -> Corpus:
    """Group records into publications and index authors, enforcing corpus rules.

    Publications keep authors in first-seen order. Rejects duplicate
    (publication, author) pairs, conflicting citation counts within a
    publication, and binary features observed with more than two values.
    """
    pub_authors: dict[str, list[PubAuthor]] = {}
    citations: dict[str, int | None] = {}
    display_names: dict[str, str] = {}
    seen_pairs: set[tuple[str, str]] = set()
    binary_observed: dict[str, set[str]] = {
        spec.name: set() for spec in schema.features if spec.kind == BINARY
    }

    for record in records:
        pair = (record.pub_id, record.author_key)
        if pair in seen_pairs:
            raise ValidationError(
                f"duplicate author {record.author_key!r} on publication {record.pub_id!r}"
            )
        seen_pairs.add(pair)
        pub_authors.setdefault(record.pub_id, []).append(
            PubAuthor(record.author_key, dict(record.feature_values))
        )
        if record.pub_id not in citations:
            citations[record.pub_id] = record.citation_count
        elif record.citation_count is not None:
            existing = citations[record.pub_id]
            if existing is None:
                citations[record.pub_id] = record.citation_count
            elif existing != record.citation_count:
                raise ValidationError(
                    f"conflicting citation counts for publication {record.pub_id!r}: "
                    f"{existing} vs {record.citation_count}"
                )
        display_names.setdefault(record.author_key, record.display_name)
        for name, observed in binary_observed.items():
            value = record.feature_values.get(name)
            if value is not None:
                observed.add(value)
                if len(observed) > 2:
                    raise ValidationError(
                        f"binary feature {name!r} has more than two observed values "
                        f"{sorted(observed)}; declare it categorical instead"
                    )

    publications = {
        pub_id: Publication(pub_id, tuple(authors), citations[pub_id])
        for pub_id, authors in pub_authors.items()
    }
    author_index: dict[str, set[str]] = {}
    for publication in publications.values():
        for author in publication.authors:
            author_index.setdefault(author.author_key, set()).add(publication.pub_id)
    return Corpus(
        publications=publications,
        author_index={key: frozenset(pubs) for key, pubs in author_index.items()},
        display_names=display_names,
        schema=schema,
    )


def author_publications(corpus: Corpus, author_key: str) -> set[str]:
    """All publication ids of the author; empty set for an unknown author."""
    return set(corpus.author_index.get(author_key, ()))
