import json

import pytest

from subjsearch.corpus import (
    CorpusError,
    load_aliases,
    load_entities,
    load_reviews,
    load_schema,
)

from conftest import DATA_DIR


def write_lines(path, rows):
    path.write_text("".join(json.dumps(r) + "\n" for r in rows), encoding="utf-8")


HOTEL = {"id": "h1", "name": "A", "category": "hotel", "lat": 37.0, "lon": -122.0, "attrs": {"price_pn": 100}}


class TestLoadEntities:
    def test_single_wellformed_line(self, tmp_path):
        path = tmp_path / "e.jsonl"
        write_lines(path, [HOTEL])
        entities = load_entities(path)
        assert len(entities) == 1
        assert entities[0].id == "h1"
        assert entities[0].objective_attrs["price_pn"] == 100

    def test_duplicate_id_names_the_id(self, tmp_path):
        path = tmp_path / "e.jsonl"
        write_lines(path, [HOTEL, HOTEL])
        with pytest.raises(CorpusError, match="duplicate id h1"):
            load_entities(path)

    def test_malformed_line_names_line_number(self, tmp_path):
        path = tmp_path / "e.jsonl"
        path.write_text(json.dumps(HOTEL) + "\n{broken\n", encoding="utf-8")
        with pytest.raises(CorpusError, match="line 2"):
            load_entities(path)

    def test_latitude_out_of_range(self, tmp_path):
        path = tmp_path / "e.jsonl"
        write_lines(path, [dict(HOTEL, lat=91.0)])
        with pytest.raises(CorpusError, match="latitude"):
            load_entities(path)

    def test_nonpositive_price_rejected(self, tmp_path):
        path = tmp_path / "e.jsonl"
        write_lines(path, [dict(HOTEL, attrs={"price_pn": 0})])
        with pytest.raises(CorpusError, match="price_pn"):
            load_entities(path)

    def test_unknown_fields_preserved(self, tmp_path):
        path = tmp_path / "e.jsonl"
        write_lines(path, [dict(HOTEL, future_field=[1, 2])])
        assert load_entities(path)[0].extra == {"future_field": [1, 2]}

    def test_file_order_preserved_at_scale(self, tmp_path):
        # scale reference: a couple hundred hotels load in order
        path = tmp_path / "e.jsonl"
        write_lines(path, [dict(HOTEL, id=f"h{i}") for i in range(227)])
        entities = load_entities(path)
        assert len(entities) == 227
        assert [e.id for e in entities] == [f"h{i}" for i in range(227)]


class TestLoadReviews:
    def test_single_review(self, tmp_path):
        epath, rpath = tmp_path / "e.jsonl", tmp_path / "r.jsonl"
        write_lines(epath, [HOTEL])
        write_lines(rpath, [{"review_id": "r1", "entity_id": "h1", "text": "Nice."}])
        entities = load_entities(epath)
        reviews = load_reviews(rpath, entities)
        assert len(reviews) == 1
        assert reviews[0].rating is None

    def test_dangling_entity_names_review(self, tmp_path):
        epath, rpath = tmp_path / "e.jsonl", tmp_path / "r.jsonl"
        write_lines(epath, [HOTEL])
        write_lines(rpath, [{"review_id": "rX", "entity_id": "hX", "text": "Nice."}])
        with pytest.raises(CorpusError, match="rX"):
            load_reviews(rpath, load_entities(epath))

    def test_generated_200_reviews(self, tmp_path):
        epath, rpath = tmp_path / "e.jsonl", tmp_path / "r.jsonl"
        write_lines(epath, [HOTEL])
        rows = [
            {"review_id": f"r{i}", "entity_id": "h1", "text": f"Review number {i}."}
            for i in range(200)
        ]
        write_lines(rpath, rows)
        assert len(load_reviews(rpath, load_entities(epath))) == 200

    def test_referential_integrity_on_sample(self, sample_entities, sample_reviews):
        ids = {e.id for e in sample_entities}
        assert all(r.entity_id in ids for r in sample_reviews)


class TestLoadSchema:
    def test_quietness_markers_ordered(self, schema):
        attr = schema.attribute("room_quietness")
        assert [m.label for m in attr.markers] == [
            "very_quiet",
            "average",
            "noisy",
            "very_noisy",
        ]
        assert [m.ordinal for m in attr.markers] == [0, 1, 2, 3]

    def test_single_marker_rejected(self, tmp_path):
        path = tmp_path / "s.json"
        path.write_text(
            json.dumps(
                {
                    "attributes": [
                        {"name": "x", "aspect_terms": ["x"], "markers": [{"label": "only", "phrases": []}]}
                    ]
                }
            )
        )
        with pytest.raises(CorpusError, match="at least 2 markers"):
            load_schema(path)

    def test_duplicate_attribute_rejected(self, tmp_path):
        attr = {
            "name": "x",
            "aspect_terms": [],
            "markers": [{"label": "a", "phrases": []}, {"label": "b", "phrases": []}],
        }
        path = tmp_path / "s.json"
        path.write_text(json.dumps({"attributes": [attr, attr]}))
        with pytest.raises(CorpusError, match="duplicate attribute"):
            load_schema(path)

    def test_pole_maps_linearly(self, quiet_attr):
        assert quiet_attr.pole(0) == 1.0
        assert quiet_attr.pole(3) == -1.0
        assert quiet_attr.pole(1) == pytest.approx(1 / 3)


class TestAliases:
    def test_lookup_and_expand(self, sample_alias):
        assert sample_alias.concepts("presidio") == {"park"}
        assert sample_alias.expand(["presidio", "walk"]) == {"presidio", "park", "walk"}

    def test_empty_concepts_rejected(self, tmp_path):
        path = tmp_path / "a.jsonl"
        write_lines(path, [{"token": "x", "concepts": []}])
        with pytest.raises(CorpusError, match="no concepts"):
            load_aliases(path)


def test_loading_is_deterministic():
    first = load_entities(DATA_DIR / "entities.jsonl")
    second = load_entities(DATA_DIR / "entities.jsonl")
    assert first == second
