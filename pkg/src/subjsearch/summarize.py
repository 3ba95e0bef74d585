"""Per-predicate review summaries: a statistical statement plus sampled
review snippets.

The statement counts distinct reviews, not phrases: a review agrees with
the target marker when its best-assigned marker for the attribute has
degree >= 0.5 toward the target. Snippets are a seeded uniform sample of
the agreeing phrases, reproducible byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .aggregate import AssignedExtraction
from .corpus import SchemaDef, SubjectiveAttributeDef
from .interpret import Component, Interpretation
from .scoring import marker_degree

AGREEMENT_DEGREE = 0.5


@dataclass(frozen=True)
class Snippet:
    text: str
    review_id: str


@dataclass(frozen=True)
class ReviewSummary:
    entity_id: str
    predicate: str
    statement: str | None = None
    percentage: int | None = None
    review_count: int | None = None
    snippets: list[Snippet] = field(default_factory=list)


def _ordinal(attribute: SubjectiveAttributeDef, label: str) -> int:
    for marker in attribute.markers:
        if marker.label == label:
            return marker.ordinal
    raise KeyError(label)


def statistical_statement(
    entity_id: str,
    component: Component,
    assigned: list[AssignedExtraction],
    attribute: SubjectiveAttributeDef,
    delta: float = 2.0,
) -> tuple[str, int, int] | None:
    """(statement, percentage, review_count) for one interpretation
    component, or None when no review mentions the attribute."""
    target = _ordinal(attribute, component.marker)
    best_by_review: dict[str, float] = {}
    for record in assigned:
        if record.entity_id != entity_id or record.attribute != attribute.name:
            continue
        degree = marker_degree(_ordinal(attribute, record.marker), target, delta)
        prev = best_by_review.get(record.review_id)
        if prev is None or degree > prev:
            best_by_review[record.review_id] = degree
    review_count = len(best_by_review)
    if review_count == 0:
        return None
    matching = sum(1 for d in best_by_review.values() if d >= AGREEMENT_DEGREE)
    percentage = round(100 * matching / review_count)
    label = component.marker.replace("_", " ")
    statement = f"{percentage}% of {review_count} reviews say it is {label}"
    return statement, percentage, review_count


def sample_snippets(
    entity_id: str,
    component: Component,
    assigned: list[AssignedExtraction],
    attribute: SubjectiveAttributeDef,
    k: int = 3,
    seed: int = 13,
    delta: float = 2.0,
) -> list[Snippet]:
    """Seeded uniform sample (without replacement) of phrases whose assigned
    marker agrees with the target; fewer than k available returns all."""
    target = _ordinal(attribute, component.marker)
    pool = sorted(
        (
            r
            for r in assigned
            if r.entity_id == entity_id
            and r.attribute == attribute.name
            and marker_degree(_ordinal(attribute, r.marker), target, delta) >= AGREEMENT_DEGREE
        ),
        key=lambda r: (r.review_id, r.sentence_index, r.phrase),
    )
    if len(pool) > k:
        pool = random.Random(seed).sample(pool, k)
    return [Snippet(text=r.phrase, review_id=r.review_id) for r in pool]


def summarize_predicate(
    entity_id: str,
    interpretation: Interpretation,
    assigned: list[AssignedExtraction],
    schema: SchemaDef,
    snippet_k: int = 3,
    seed: int = 13,
    delta: float = 2.0,
) -> ReviewSummary:
    """ReviewSummary for a predicate, built from its heaviest component
    (components come ordered by weight, heaviest first)."""
    component = interpretation.components[0]
    attribute = schema.attribute(component.attribute)
    stats = statistical_statement(entity_id, component, assigned, attribute, delta)
    snippets = sample_snippets(
        entity_id, component, assigned, attribute, snippet_k, seed, delta
    )
    if stats is None:
        return ReviewSummary(
            entity_id=entity_id, predicate=interpretation.predicate, snippets=snippets
        )
    statement, percentage, review_count = stats
    return ReviewSummary(
        entity_id=entity_id,
        predicate=interpretation.predicate,
        statement=statement,
        percentage=percentage,
        review_count=review_count,
        snippets=snippets,
    )
