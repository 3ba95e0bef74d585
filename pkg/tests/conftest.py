import pytest
from pathlib import Path

from subjsearch.config import EngineConfig
from subjsearch.corpus import (
    load_aliases,
    load_entities,
    load_reviews,
    load_schema,
)
from subjsearch.extraction import Sentence, tokenize_with_spans
from subjsearch.snapshot import build_snapshot

DATA_DIR = Path(__file__).resolve().parent.parent / "data" / "sample"


def make_sentence(text, review_id="r0", entity_id="e0", index=0):
    tokens, spans = tokenize_with_spans(text)
    return Sentence(
        review_id=review_id,
        entity_id=entity_id,
        index=index,
        text=text,
        tokens=tuple(tokens),
        token_spans=tuple(spans),
    )


@pytest.fixture(scope="session")
def schema():
    return load_schema(DATA_DIR / "schema.json")


@pytest.fixture(scope="session")
def sample_entities():
    return load_entities(DATA_DIR / "entities.jsonl")


@pytest.fixture(scope="session")
def sample_reviews(sample_entities):
    return load_reviews(DATA_DIR / "reviews.jsonl", sample_entities)


@pytest.fixture(scope="session")
def sample_alias():
    return load_aliases(DATA_DIR / "aliases.jsonl")


@pytest.fixture(scope="session")
def sample_snapshot(sample_entities, sample_reviews, schema, sample_alias):
    return build_snapshot(sample_entities, sample_reviews, schema, sample_alias)


@pytest.fixture(scope="session")
def config():
    return EngineConfig()


@pytest.fixture(scope="session")
def quiet_attr(schema):
    return schema.attribute("room_quietness")
