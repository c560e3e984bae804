import pytest

from cindex.corpus import build_corpus, parse_records
from cindex.demo import (
    FULL_SCHEMA,
    GENDER_SCHEMA,
    MULTI_PAPER_CSV,
    NOVELTY_CSV,
    NOVELTY_SCHEMA,
    SINGLE_PAPER_CSV,
    SINGLE_PAPER_TWO_COUNTRIES_CSV,
    WEIGHTED_COUNTRY_SCHEMA,
)


@pytest.fixture(scope="session")
def single_paper_records():
    return parse_records(SINGLE_PAPER_CSV)


@pytest.fixture(scope="session")
def two_countries_records():
    return parse_records(SINGLE_PAPER_TWO_COUNTRIES_CSV)


@pytest.fixture(scope="session")
def gender_corpus(single_paper_records):
    return build_corpus(single_paper_records, GENDER_SCHEMA)


@pytest.fixture(scope="session")
def weighted_country_corpus(single_paper_records):
    return build_corpus(single_paper_records, WEIGHTED_COUNTRY_SCHEMA)


@pytest.fixture(scope="session")
def multi_corpus():
    return build_corpus(parse_records(MULTI_PAPER_CSV), FULL_SCHEMA)


@pytest.fixture(scope="session")
def novelty_corpus():
    return build_corpus(parse_records(NOVELTY_CSV), NOVELTY_SCHEMA)
