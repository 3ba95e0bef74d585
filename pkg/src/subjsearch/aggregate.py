"""Linguistic domains and marker summaries.

A linguistic domain is every phrase a corpus uses to describe one subjective
attribute; a marker summary is the per-entity histogram of those phrases
over the attribute's ordered markers. Assignment blends lexical overlap
with polarity proximity so both the wording and the sentiment of a phrase
pull it toward a marker.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .corpus import Marker, SchemaDef, SubjectiveAttributeDef
from .extraction import ExtractionRecord, tokenize

# weight on lexical overlap vs polarity proximity in marker similarity
LEXICAL_WEIGHT = 0.5


@dataclass(frozen=True)
class LinguisticDomain:
    attribute: str
    phrases: dict[str, int]


@dataclass(frozen=True)
class MarkerSummary:
    entity_id: str
    attribute: str
    counts: dict[str, int]
    total: int


@dataclass(frozen=True)
class AssignedExtraction:
    """An extraction record together with the marker it landed on."""

    entity_id: str
    review_id: str
    sentence_index: int
    attribute: str
    phrase: str
    polarity: float
    marker: str


def set_cosine(a: set[str] | frozenset[str], b: set[str] | frozenset[str]) -> float:
    """Cosine of two binary token-indicator vectors."""
    if not a or not b:
        return 0.0
    return len(a & b) / math.sqrt(len(a) * len(b))


@lru_cache(maxsize=None)
def marker_seed_tokens(marker: Marker) -> frozenset[str]:
    tokens: set[str] = set()
    for phrase in marker.seed_phrases:
        tokens.update(tokenize(phrase))
    return frozenset(tokens)


def marker_similarity(
    phrase_tokens: set[str] | frozenset[str],
    polarity: float,
    marker: Marker,
    attribute: SubjectiveAttributeDef,
) -> float:
    lexical = set_cosine(phrase_tokens, marker_seed_tokens(marker))
    proximity = 1.0 - abs(polarity - attribute.pole(marker.ordinal)) / 2.0
    return LEXICAL_WEIGHT * lexical + (1.0 - LEXICAL_WEIGHT) * proximity


def assign_marker(record: ExtractionRecord, attribute: SubjectiveAttributeDef) -> Marker:
    """The marker with maximal similarity to the record's phrase; ties break
    toward the lower ordinal."""
    phrase_tokens = frozenset(tokenize(record.phrase))
    best = attribute.markers[0]
    best_score = -1.0
    for marker in attribute.markers:
        score = marker_similarity(phrase_tokens, record.polarity, marker, attribute)
        if score > best_score:
            best, best_score = marker, score
    return best


def assign_extractions(
    extractions: list[ExtractionRecord], schema: SchemaDef
) -> list[AssignedExtraction]:
    return [
        AssignedExtraction(
            entity_id=r.entity_id,
            review_id=r.review_id,
            sentence_index=r.sentence_index,
            attribute=r.attribute,
            phrase=r.phrase,
            polarity=r.polarity,
            marker=assign_marker(r, schema.attribute(r.attribute)).label,
        )
        for r in extractions
    ]


def summaries_from_assigned(
    assigned: list[AssignedExtraction], schema: SchemaDef
) -> list[MarkerSummary]:
    buckets: dict[tuple[str, str], Counter[str]] = defaultdict(Counter)
    for record in assigned:
        buckets[(record.entity_id, record.attribute)][record.marker] += 1
    summaries = []
    for (entity_id, attr_name) in sorted(buckets):
        counts = buckets[(entity_id, attr_name)]
        attribute = schema.attribute(attr_name)
        full = {m.label: counts.get(m.label, 0) for m in attribute.markers}
        summaries.append(
            MarkerSummary(
                entity_id=entity_id,
                attribute=attr_name,
                counts=full,
                total=sum(full.values()),
            )
        )
    return summaries


def build_summaries(
    extractions: list[ExtractionRecord], schema: SchemaDef
) -> list[MarkerSummary]:
    """One summary per (entity, attribute) that has at least one extraction.

    Output is sorted by (entity_id, attribute); the sum of all totals equals
    the number of extraction records.
    """
    return summaries_from_assigned(assign_extractions(extractions, schema), schema)


def build_domains(
    extractions: list[ExtractionRecord], schema: SchemaDef
) -> list[LinguisticDomain]:
    """Phrase multiplicity counts per attribute, sorted by attribute name."""
    counts: dict[str, Counter[str]] = {a.name: Counter() for a in schema.attributes}
    for record in extractions:
        counts[record.attribute][record.phrase] += 1
    return [
        LinguisticDomain(attribute=name, phrases=dict(sorted(counts[name].items())))
        for name in sorted(counts)
        if counts[name]
    ]
