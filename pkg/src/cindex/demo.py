"""Bundled demonstration corpora with reference scores and tolerances.

Small hand-built author teams that exercise every scoring rule: one
mixed-gender paper, country variants with and without category weights, a
three-paper corpus, and a corpus where first-time collaborator bonuses kick
in. ``expected_scores.json`` records the reference numbers each fixture must
reproduce and the tolerance at which reports are checked (the reference
display mixes truncation and rounding, hence tolerances instead of string
equality on the two multi-feature fixtures).
"""

from __future__ import annotations

import json
from pathlib import Path

from cindex.corpus import BINARY, CATEGORICAL, FeatureSpec, SchemaConfig

SINGLE_PAPER_CSV = """\
pub_id,first_name,last_name,gender,country,country_code,city
123,Omar,Hassan,M,Egypt,EG,Cairo
123,Daniel,Young,M,United States,US,New York
123,Joshua,Carter,M,Italy,IT,Rome
123,Anna,Nguyen,F,United States,US,Boston
"""

# Same team, but only one author is from outside the majority country.
SINGLE_PAPER_TWO_COUNTRIES_CSV = """\
pub_id,first_name,last_name,gender,country,country_code,city
123,Omar,Hassan,M,Egypt,EG,Cairo
123,Daniel,Young,M,United States,US,New York
123,Joshua,Carter,M,United States,US,Chicago
123,Anna,Nguyen,F,United States,US,Boston
"""

MULTI_PAPER_CSV = """\
pub_id,first_name,last_name,gender,country,field
246,Adam,,M,Italy,Health
789,Adam,,M,Italy,Health
369,Adam,,M,Italy,Health
246,David,,M,US,Health
246,Emily,,F,Cuba,CS
789,Emily,,F,Cuba,CS
369,Emily,,F,Cuba,CS
246,Maria,,F,Mexico,SS
789,Maria,,F,Mexico,SS
369,Maria,,F,Mexico,SS
246,Robert,,M,US,Biology
789,Robert,,M,US,Biology
369,Robert,,M,US,Biology
246,Sophia,,F,US,CS
"""

# The co-author roster of publication 111 is a reconstruction: the reference
# data gives only Maria's row and her scores. The composition below (four
# first-time co-authors, two of them female, two sharing Maria's field,
# Maria's country unique among three) reproduces those scores.
NOVELTY_CSV = """\
pub_id,first_name,last_name,gender,country,field
246,Adam,,M,Italy,Health
789,Adam,,M,Italy,Health
369,Adam,,M,Italy,Health
789,David,,M,United States,Health
246,Emily,,F,Cuba,Computer Sci
789,Emily,,F,Cuba,Computer Sci
369,Emily,,F,Cuba,Computer Sci
246,Maria,,F,Mexico,Social Sci
789,Maria,,F,Mexico,Social Sci
369,Maria,,F,Mexico,Social Sci
111,Maria,,F,Mexico,Social Sci
246,Robert,,M,United States,Engineering
789,Robert,,M,United States,Engineering
369,Robert,,M,United States,Engineering
789,Sophia,,F,United States,Computer Sci
111,Priya,,F,United States,Social Sci
111,Nadia,,F,Canada,Social Sci
111,Lucas,,M,United States,Health
111,Wei,,M,Canada,Engineering
"""

GENDER_SCHEMA = SchemaConfig((FeatureSpec("gender", BINARY),))
COUNTRY_SCHEMA = SchemaConfig((FeatureSpec("country", CATEGORICAL),))
WEIGHTED_COUNTRY_SCHEMA = SchemaConfig(
    (FeatureSpec("country", CATEGORICAL, category_weights={"United States": 0.5}),)
)
FULL_SCHEMA = SchemaConfig(
    (
        FeatureSpec("country", CATEGORICAL),
        FeatureSpec("gender", BINARY),
        FeatureSpec("field", CATEGORICAL),
    )
)
NOVELTY_SCHEMA = SchemaConfig(FULL_SCHEMA.features, delta=0.8)

EXPECTED_SCORES = {
    "cases": [
        {
            "data": "single_paper.csv",
            "schema": "schema_gender.json",
            "tolerance": 0.0,
            "feature_factors": {
                "omar|hassan": {"123": {"gender": 1.0}},
                "daniel|young": {"123": {"gender": 1.0}},
                "joshua|carter": {"123": {"gender": 1.0}},
                "anna|nguyen": {"123": {"gender": 3.0}},
            },
        },
        {
            "data": "single_paper.csv",
            "schema": "schema_country.json",
            "tolerance": 0.0,
            "feature_factors": {
                "omar|hassan": {"123": {"country": 9.0}},
                "daniel|young": {"123": {"country": 4.5}},
                "joshua|carter": {"123": {"country": 9.0}},
                "anna|nguyen": {"123": {"country": 4.5}},
            },
        },
        {
            "data": "single_paper_two_countries.csv",
            "schema": "schema_country.json",
            "tolerance": 0.0,
            "feature_factors": {
                "omar|hassan": {"123": {"country": 6.0}},
                "daniel|young": {"123": {"country": 2.0}},
                "joshua|carter": {"123": {"country": 2.0}},
                "anna|nguyen": {"123": {"country": 2.0}},
            },
        },
        {
            "data": "single_paper.csv",
            "schema": "schema_country_weighted.json",
            "tolerance": 0.0,
            "feature_factors": {
                "omar|hassan": {"123": {"country": 9.0}},
                "daniel|young": {"123": {"country": 2.25}},
                "joshua|carter": {"123": {"country": 9.0}},
                "anna|nguyen": {"123": {"country": 2.25}},
            },
        },
        {
            "data": "multi_paper.csv",
            "schema": "schema_full.json",
            "tolerance": 0.02,
            "feature_factors": {
                "adam|": {
                    "246": {"country": 20, "gender": 1.66, "field": 10},
                    "789": {"country": 12, "gender": 1.5, "field": 12},
                    "369": {"country": 12, "gender": 1.5, "field": 12},
                },
                "david|": {"246": {"country": 6.66, "gender": 1.66, "field": 10}},
                "emily|": {
                    "246": {"country": 20, "gender": 1.66, "field": 10},
                    "789": {"country": 12, "gender": 1.5, "field": 12},
                    "369": {"country": 12, "gender": 1.5, "field": 12},
                },
                "maria|": {
                    "246": {"country": 20, "gender": 1.66, "field": 20},
                    "789": {"country": 12, "gender": 1.5, "field": 12},
                    "369": {"country": 12, "gender": 1.5, "field": 12},
                },
                "robert|": {
                    "246": {"country": 6.66, "gender": 1.66, "field": 20},
                    "789": {"country": 12, "gender": 1.5, "field": 12},
                    "369": {"country": 12, "gender": 1.5, "field": 12},
                },
                "sophia|": {"246": {"country": 6.66, "gender": 1.66, "field": 10}},
            },
            "paper_factors": {
                "adam|": {"246": 31.66, "789": 25.5, "369": 25.5},
                "david|": {"246": 18.32},
                "emily|": {"246": 31.66, "789": 25.5, "369": 25.5},
                "maria|": {"246": 41.66, "789": 25.5, "369": 25.5},
                "robert|": {"246": 28.32, "789": 25.5, "369": 25.5},
                "sophia|": {"246": 18.32},
            },
            "c_index": {
                "adam|": 27.55,
                "david|": 18.32,
                "emily|": 27.55,
                "maria|": 30.89,
                "robert|": 26.44,
                "sophia|": 18.32,
            },
        },
        {
            "data": "novelty.csv",
            "schema": "schema_novelty.json",
            "tolerance": 0.05,
            "feature_factors": {
                "adam|": {
                    "246": {"country": 12, "gender": 1.5, "field": 12},
                    "789": {"country": 26.4, "gender": 1.96, "field": 9.43},
                    "369": {"country": 12, "gender": 1.5, "field": 12},
                },
                "david|": {"789": {"country": 7.83, "gender": 2.37, "field": 12.86}},
                "emily|": {
                    "246": {"country": 12, "gender": 1.5, "field": 12},
                    "789": {"country": 26.4, "gender": 1.96, "field": 9.43},
                    "369": {"country": 12, "gender": 1.5, "field": 12},
                },
                "maria|": {
                    "246": {"country": 12, "gender": 1.5, "field": 12},
                    "789": {"country": 26.4, "gender": 1.96, "field": 26.4},
                    "369": {"country": 12, "gender": 1.5, "field": 12},
                    "111": {"country": 21.6, "gender": 1.89, "field": 4.7},
                },
                "robert|": {
                    "246": {"country": 12, "gender": 1.5, "field": 12},
                    "789": {"country": 5.74, "gender": 1.96, "field": 26.4},
                    "369": {"country": 12, "gender": 1.5, "field": 12},
                },
                "sophia|": {"789": {"country": 7.83, "gender": 2.37, "field": 12.86}},
            },
            "paper_factors": {
                "adam|": {"246": 25.5, "789": 37.79, "369": 25.5},
                "david|": {"789": 23.05},
                "emily|": {"246": 25.5, "789": 37.79, "369": 25.5},
                "maria|": {"246": 25.5, "789": 54.76, "369": 25.5, "111": 28.19},
                "robert|": {"246": 25.5, "789": 34.1, "369": 25.5},
                "sophia|": {"789": 23.05},
            },
            "c_index": {
                "adam|": 29.6,
                "david|": 23.05,
                "emily|": 29.6,
                "maria|": 33.49,
                "robert|": 28.37,
                "sophia|": 23.05,
            },
            "c_index_without_bonus": {
                "adam|": 27.56,
                "david|": 18.33,
                "emily|": 27.56,
                "maria|": 27.5,
                "robert|": 26.44,
                "sophia|": 18.33,
            },
            "reconstructed_publications": ["111"],
            "note": (
                "Only Maria's row of publication 111 is part of the reference "
                "data; the shipped co-author roster is a consistent "
                "reconstruction that reproduces her scores."
            ),
        },
    ]
}

_FILES: tuple[tuple[str, str], ...] = (
    ("single_paper.csv", SINGLE_PAPER_CSV),
    ("single_paper_two_countries.csv", SINGLE_PAPER_TWO_COUNTRIES_CSV),
    ("multi_paper.csv", MULTI_PAPER_CSV),
    ("novelty.csv", NOVELTY_CSV),
    ("schema_gender.json", GENDER_SCHEMA.to_json()),
    ("schema_country.json", COUNTRY_SCHEMA.to_json()),
    ("schema_country_weighted.json", WEIGHTED_COUNTRY_SCHEMA.to_json()),
    ("schema_full.json", FULL_SCHEMA.to_json()),
    ("schema_novelty.json", NOVELTY_SCHEMA.to_json()),
    ("expected_scores.json", json.dumps(EXPECTED_SCORES, indent=2, sort_keys=True) + "\n"),
)


def write_demo(directory: Path | str) -> list[Path]:
    """Write the demo fixtures into ``directory`` and return the paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, content in _FILES:
        path = directory / name
        path.write_text(content, encoding="utf-8", newline="")
        written.append(path)
    return written
