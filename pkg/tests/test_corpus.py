import json

import pytest

from cindex.corpus import (
    BINARY,
    CATEGORICAL,
    FeatureSpec,
    SchemaConfig,
    author_publications,
    build_corpus,
    parse_records,
)
from cindex.demo import FULL_SCHEMA, MULTI_PAPER_CSV
from cindex.errors import ParseError, SchemaError, ValidationError

HEADER = "pub_id,first_name,last_name,gender,country,country_code,city"


def test_parse_csv_row_carries_all_non_identity_columns():
    text = HEADER + "\n123,Anna,Nguyen,F,United States,US,Boston\n"
    (record,) = parse_records(text)
    assert record.pub_id == "123"
    assert record.author_key == "anna|nguyen"
    assert record.display_name == "Anna Nguyen"
    assert record.feature_values == {
        "gender": "F",
        "country": "United States",
        "country_code": "US",
        "city": "Boston",
    }
    assert record.citation_count is None


def test_parse_empty_input_with_header():
    assert parse_records(HEADER + "\n") == []


def test_parse_empty_cell_is_missing():
    text = HEADER + "\n123,Anna,Nguyen,,United States,US,Boston\n"
    (record,) = parse_records(text)
    assert "gender" not in record.feature_values


def test_parse_accepts_bytes_and_streams(tmp_path):
    text = HEADER + "\n123,Anna,Nguyen,F,United States,US,Boston\n"
    assert parse_records(text.encode()) == parse_records(text)
    path = tmp_path / "rows.csv"
    path.write_text(text)
    with open(path, "rb") as stream:
        assert parse_records(stream) == parse_records(text)


def test_parse_rejects_wrong_column_count_with_line_number():
    text = HEADER + "\n123,Anna,Nguyen,F,United States,US,Boston\n456,Omar,Hassan,M\n"
    with pytest.raises(ParseError, match="line 3"):
        parse_records(text)


def test_parse_rejects_duplicate_header():
    with pytest.raises(SchemaError, match="duplicate column"):
        parse_records("pub_id,first_name,last_name,gender,gender\n")


def test_parse_rejects_missing_header():
    with pytest.raises(ParseError, match="header"):
        parse_records("")


def test_parse_rejects_non_utf8():
    with pytest.raises(ParseError, match="UTF-8"):
        parse_records(b"pub_id,first_name,last_name\n1,Ana,\xff\n")


def test_parse_rejects_missing_pub_id_and_identity():
    with pytest.raises(ParseError, match="pub_id"):
        parse_records("pub_id,first_name,last_name\n,Anna,Nguyen\n")
    with pytest.raises(ParseError, match="identity"):
        parse_records("pub_id,first_name,last_name\n123,,\n")


def test_author_id_wins_over_name_key():
    text = "pub_id,author_id,first_name,last_name\n123,0000-0001,Anna,Nguyen\n"
    (record,) = parse_records(text)
    assert record.author_key == "0000-0001"
    assert record.display_name == "Anna Nguyen"


def test_name_key_is_normalized():
    text = "pub_id,first_name,last_name\n123,  Anna   Maria ,  NGUYEN \n"
    (record,) = parse_records(text)
    assert record.author_key == "anna maria|nguyen"
    # the display keeps original casing; only the key is lowercased/collapsed
    assert record.display_name == "Anna   Maria NGUYEN"


def test_parse_citations_column():
    text = "pub_id,first_name,last_name,citations\n123,Anna,Nguyen,17\n"
    (record,) = parse_records(text)
    assert record.citation_count == 17
    with pytest.raises(ParseError, match="integer"):
        parse_records("pub_id,first_name,last_name,citations\n123,Anna,Nguyen,lots\n")
    with pytest.raises(ParseError, match="non-negative"):
        parse_records("pub_id,first_name,last_name,citations\n123,Anna,Nguyen,-3\n")


def test_parse_json_rows():
    rows = [
        {"pub_id": "123", "first_name": "Anna", "last_name": "Nguyen", "gender": "F"},
        {"pub_id": "123", "first_name": "Omar", "last_name": "Hassan", "gender": None},
    ]
    records = parse_records(json.dumps(rows), format="json")
    assert [record.author_key for record in records] == ["anna|nguyen", "omar|hassan"]
    assert records[0].feature_values == {"gender": "F"}
    assert records[1].feature_values == {}


def test_parse_json_rejects_non_array_and_non_object_rows():
    with pytest.raises(ParseError, match="array"):
        parse_records('{"pub_id": "1"}', format="json")
    with pytest.raises(ParseError, match="line 2"):
        parse_records('[{"pub_id": "1", "author_id": "a"}, 17]', format="json")


def test_parse_unknown_format():
    with pytest.raises(ValueError, match="format"):
        parse_records("x", format="xml")


def test_build_single_paper_corpus(gender_corpus):
    assert gender_corpus.n_publications == 1
    assert gender_corpus.n_authors == 4
    assert set(gender_corpus.author_index) == {
        "omar|hassan", "daniel|young", "joshua|carter", "anna|nguyen",
    }
    for pubs in gender_corpus.author_index.values():
        assert pubs == frozenset({"123"})


def test_build_rejects_duplicate_pub_author_pair():
    rows = "pub_id,first_name,last_name\n1,Anna,Nguyen\n1,Anna,Nguyen\n"
    with pytest.raises(ValidationError, match="anna|nguyen"):
        build_corpus(parse_records(rows), SchemaConfig())


def test_multi_paper_corpus_shape(multi_corpus):
    assert multi_corpus.n_publications == 3
    sizes = {pub_id: pub.n_authors for pub_id, pub in multi_corpus.publications.items()}
    assert sizes == {"246": 6, "789": 4, "369": 4}
    assert multi_corpus.n_authors == 6


def test_author_publications(multi_corpus):
    assert author_publications(multi_corpus, "adam|") == {"246", "789", "369"}
    assert author_publications(multi_corpus, "david|") == {"246"}
    assert author_publications(multi_corpus, "nobody") == set()


def test_binary_cardinality_enforced():
    rows = (
        "pub_id,first_name,last_name,gender\n"
        "1,A,One,M\n1,B,Two,F\n2,C,Three,X\n"
    )
    schema = SchemaConfig((FeatureSpec("gender", BINARY),))
    with pytest.raises(ValidationError, match="categorical"):
        build_corpus(parse_records(rows), schema)
    # the same data is fine when the feature is declared categorical
    build_corpus(parse_records(rows), SchemaConfig((FeatureSpec("gender", CATEGORICAL),)))


def test_conflicting_citations_rejected():
    rows = "pub_id,first_name,last_name,citations\n1,A,One,5\n1,B,Two,6\n"
    with pytest.raises(ValidationError, match="conflicting"):
        build_corpus(parse_records(rows), SchemaConfig())


def test_citations_merge_with_missing_cells():
    rows = "pub_id,first_name,last_name,citations\n1,A,One,\n1,B,Two,6\n1,C,Three,6\n"
    corpus = build_corpus(parse_records(rows), SchemaConfig())
    assert corpus.publications["1"].citation_count == 6


def test_author_order_follows_first_appearance():
    rows = "pub_id,first_name,last_name\n1,B,Two\n1,A,One\n"
    corpus = build_corpus(parse_records(rows), SchemaConfig())
    assert corpus.publications["1"].author_keys == ("b|two", "a|one")


def test_round_trip_multi_paper(multi_corpus):
    rebuilt = build_corpus(parse_records(multi_corpus.to_csv()), multi_corpus.schema)
    assert rebuilt == multi_corpus


def test_round_trip_with_citations_and_extra_columns():
    rows = (
        "pub_id,author_id,first_name,last_name,gender,notes,citations\n"
        "1,a1,Ana,Silva,F,likes graphs,12\n"
        "1,a2,Joy,Okafor,,,12\n"
        "2,a1,Ana,Silva,F,,3\n"
    )
    schema = SchemaConfig((FeatureSpec("gender", BINARY),))
    corpus = build_corpus(parse_records(rows), schema)
    rebuilt = build_corpus(parse_records(corpus.to_csv()), schema)
    assert rebuilt == corpus


def test_schema_json_round_trip():
    schema = SchemaConfig(
        (
            FeatureSpec("gender", BINARY, base_weight=2.0),
            FeatureSpec("country", CATEGORICAL, category_weights={"United States": 0.5}),
        ),
        delta=0.8,
        include_solo_publications=False,
    )
    assert SchemaConfig.from_json(schema.to_json()) == schema


@pytest.mark.parametrize(
    "doc, message",
    [
        ('{"delta": -1}', "delta"),
        ('{"features": [{"name": "g", "kind": "boolean"}]}', "kind"),
        ('{"features": [{"name": "g", "kind": "binary", "base_weight": 0}]}', "base_weight"),
        ('{"features": [{"name": "g", "kind": "binary"}, {"name": "g", "kind": "binary"}]}', "duplicate"),
        ('{"features": [{"name": "g", "kind": "binary", "category_weights": {"a": 1}}]}', "categorical"),
        ('{"features": [{"name": "c", "kind": "categorical", "category_weights": {"a": 0}}]}', "must be > 0"),
        ('{"unknown_knob": 1}', "unknown"),
        ('{"features": [{"name": "g", "kind": "binary", "typo": 1}]}', "unknown"),
        ('{"features": [{"name": "pub_id", "kind": "binary"}]}', "reserved"),
        ('{"features": [{"name": "g", "kind": "binary", "base_weight": "heavy"}]}', "base_weight"),
        ('{"features": [{"name": "c", "kind": "categorical", "category_weights": [1]}]}', "mapping"),
        ('{"delta": "strong"}', "delta"),
        ("not json", "JSON"),
        ("[1, 2]", "object"),
    ],
)
def test_schema_json_errors(doc, message):
    with pytest.raises(SchemaError, match=message):
        SchemaConfig.from_json(doc)


def test_corpus_is_value_comparable_across_row_orders():
    schema = FULL_SCHEMA
    records = parse_records(MULTI_PAPER_CSV)
    shuffled = list(reversed(records))
    a = build_corpus(records, schema)
    b = build_corpus(shuffled, schema)
    # same index and per-publication author sets; in-publication order follows
    # first appearance so it may legitimately differ
    assert a.author_index == b.author_index
    assert {p: frozenset(pub.author_keys) for p, pub in a.publications.items()} == {
        p: frozenset(pub.author_keys) for p, pub in b.publications.items()
    }


def test_author_index_is_inverse_of_author_lists(novelty_corpus):
    for pub_id, publication in novelty_corpus.publications.items():
        for key in publication.author_keys:
            assert pub_id in novelty_corpus.author_index[key]
    for key, pubs in novelty_corpus.author_index.items():
        for pub_id in pubs:
            assert key in novelty_corpus.publications[pub_id].author_keys
