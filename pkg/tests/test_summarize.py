import pytest

from subjsearch.aggregate import assign_extractions
from subjsearch.extraction import extract_review
from subjsearch.interpret import Component, Interpretation, interpret_predicate
from subjsearch.scoring import marker_degree
from subjsearch.snapshot import build_snapshot
from subjsearch.summarize import (
    sample_snippets,
    statistical_statement,
    summarize_predicate,
)
from subjsearch.corpus import AliasTable

import gen


def assigned_quietness(schema, n_match=150, n_other=50):
    entities, reviews = gen.statement_corpus(n_match, n_other)
    extractions = []
    for review in reviews:
        extractions.extend(extract_review(review, schema))
    return entities[0], assign_extractions(extractions, schema)


class TestStatisticalStatement:
    def test_planted_75_of_200(self, schema, quiet_attr):
        entity, assigned = assigned_quietness(schema)
        component = Component("room_quietness", "very_quiet", 1.0)
        result = statistical_statement(entity.id, component, assigned, quiet_attr)
        assert result is not None
        statement, percentage, review_count = result
        assert statement == "75% of 200 reviews say it is very quiet"
        assert percentage == 75
        assert review_count == 200

    def test_planted_68_of_196(self, schema, quiet_attr):
        entity, assigned = assigned_quietness(schema, n_match=133, n_other=63)
        component = Component("room_quietness", "very_quiet", 1.0)
        statement, percentage, review_count = statistical_statement(
            entity.id, component, assigned, quiet_attr
        )
        assert statement.startswith("68% of 196")
        assert (percentage, review_count) == (68, 196)

    def test_zero_matching(self, schema, quiet_attr):
        entity, assigned = assigned_quietness(schema, n_match=0, n_other=10)
        component = Component("room_quietness", "very_quiet", 1.0)
        statement, percentage, review_count = statistical_statement(
            entity.id, component, assigned, quiet_attr
        )
        assert statement == "0% of 10 reviews say it is very quiet"

    def test_no_mentions_no_statement(self, schema, quiet_attr):
        component = Component("room_quietness", "very_quiet", 1.0)
        assert statistical_statement("h1", component, [], quiet_attr) is None

    def test_percentage_consistent_with_raw_records(self, schema, quiet_attr):
        entity, assigned = assigned_quietness(schema, n_match=37, n_other=13)
        component = Component("room_quietness", "very_quiet", 1.0)
        _, percentage, review_count = statistical_statement(
            entity.id, component, assigned, quiet_attr
        )
        # recompute from raw records
        by_review = {}
        ordinals = {m.label: m.ordinal for m in quiet_attr.markers}
        for record in assigned:
            deg = marker_degree(ordinals[record.marker], 0)
            by_review[record.review_id] = max(by_review.get(record.review_id, 0.0), deg)
        expect = round(100 * sum(1 for d in by_review.values() if d >= 0.5) / len(by_review))
        assert percentage == expect
        assert review_count == len(by_review)


class TestSampleSnippets:
    def test_fixed_seed_reproducible(self, schema, quiet_attr):
        entity, assigned = assigned_quietness(schema, n_match=10, n_other=0)
        component = Component("room_quietness", "very_quiet", 1.0)
        runs = [
            sample_snippets(entity.id, component, assigned, quiet_attr, k=3, seed=13)
            for _ in range(3)
        ]
        assert runs[0] == runs[1] == runs[2]
        assert len(runs[0]) == 3

    def test_fewer_than_k_returns_all(self, schema, quiet_attr):
        entity, assigned = assigned_quietness(schema, n_match=2, n_other=0)
        component = Component("room_quietness", "very_quiet", 1.0)
        snippets = sample_snippets(entity.id, component, assigned, quiet_attr, k=3, seed=13)
        assert len(snippets) == 2

    def test_never_from_opposite_pole(self, schema, quiet_attr):
        # exhaustive check over a 20-review mixed corpus
        entity, assigned = assigned_quietness(schema, n_match=12, n_other=8)
        component = Component("room_quietness", "very_quiet", 1.0)
        ordinals = {m.label: m.ordinal for m in quiet_attr.markers}
        noisy_reviews = {
            r.review_id
            for r in assigned
            if marker_degree(ordinals[r.marker], 0) < 0.5
        }
        for seed in range(10):
            for snippet in sample_snippets(
                entity.id, component, assigned, quiet_attr, k=3, seed=seed
            ):
                assert snippet.review_id not in noisy_reviews

    def test_different_seeds_can_differ(self, schema, quiet_attr):
        entity, assigned = assigned_quietness(schema, n_match=30, n_other=0)
        component = Component("room_quietness", "very_quiet", 1.0)
        draws = {
            tuple(s.review_id for s in sample_snippets(entity.id, component, assigned, quiet_attr, 3, seed))
            for seed in range(8)
        }
        assert len(draws) > 1


class TestSummarizePredicate:
    def test_end_to_end_against_snapshot(self, schema):
        entities, reviews = gen.statement_corpus()
        snapshot = build_snapshot(entities, reviews, schema, AliasTable())
        interp = interpret_predicate("quiet", snapshot.documents, schema)
        summary = summarize_predicate(
            entities[0].id,
            interp,
            snapshot.assigned_by_entity[entities[0].id],
            schema,
        )
        assert summary.statement == "75% of 200 reviews say it is very quiet"
        assert summary.percentage == 75
        assert len(summary.snippets) == 3

    def test_absent_statement_fields(self, schema, sample_snapshot):
        interp = Interpretation(
            "quiet", (Component("room_quietness", "very_quiet", 1.0),), True
        )
        summary = summarize_predicate("a1", interp, [], schema)
        assert summary.statement is None
        assert summary.percentage is None
        assert summary.review_count is None
        assert summary.snippets == []
