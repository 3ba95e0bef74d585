"""Membership scoring and ranked search.

An entity's membership in a subjective predicate is the degree-weighted
mean of its marker summary toward the target marker; multiple predicates
combine under a t-norm (product by default, min as the config alternative).
Objective comparisons filter hard: a missing attribute fails its
comparison.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass

from .aggregate import MarkerSummary
from .config import EngineConfig
from .corpus import EntityRecord, SchemaDef
from .interpret import Interpretation
from .querylang import Comparison, Query

_OPS = {
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
    "=": operator.eq,
}

# membership value when an entity has no evidence for an attribute:
# absence of reviews neither endorses nor refutes
NEUTRAL_MEMBERSHIP = 0.5


@dataclass(frozen=True)
class MembershipScore:
    entity_id: str
    predicate: str
    value: float
    evidence_total: int


@dataclass(frozen=True)
class SearchResult:
    entity_id: str
    score: float
    memberships: tuple[MembershipScore, ...]
    rank: int


def marker_degree(ordinal: int, target: int, delta: float = 2.0) -> float:
    """Linear decay of agreement with the target marker: 1 at the target,
    0 at and beyond `delta` ordinal steps away."""
    return max(0.0, 1.0 - abs(ordinal - target) / delta)


def membership(
    summary: MarkerSummary | None,
    target_ordinal: int,
    schema: SchemaDef,
    attribute: str,
    delta: float = 2.0,
) -> tuple[float, int]:
    """(value, evidence_total) of a summary toward a target marker; a
    missing or empty summary scores the neutral prior with zero evidence."""
    if summary is None or summary.total == 0:
        return NEUTRAL_MEMBERSHIP, 0
    markers = schema.attribute(attribute).markers
    acc = 0.0
    for marker in markers:
        count = summary.counts.get(marker.label, 0)
        if count:
            acc += marker_degree(marker.ordinal, target_ordinal, delta) * count
    return acc / summary.total, summary.total


def predicate_membership(
    entity_id: str,
    interpretation: Interpretation,
    summaries: dict[tuple[str, str], MarkerSummary],
    schema: SchemaDef,
    delta: float = 2.0,
) -> MembershipScore:
    """Weighted sum of per-component memberships for one predicate."""
    value = 0.0
    evidence = 0
    for component in interpretation.components:
        attr = schema.attribute(component.attribute)
        target = next(m.ordinal for m in attr.markers if m.label == component.marker)
        summary = summaries.get((entity_id, component.attribute))
        v, e = membership(summary, target, schema, component.attribute, delta)
        value += component.weight * v
        evidence += e
    return MembershipScore(
        entity_id=entity_id,
        predicate=interpretation.predicate,
        value=min(1.0, max(0.0, value)),
        evidence_total=evidence,
    )


def combine_conjunction(values: list[float], tnorm: str = "product") -> float:
    """T-norm conjunction over [0,1] scores; the empty conjunction is 1.

    Inputs are multiplied in sorted order so the result is exactly
    order-invariant.
    """
    if not values:
        return 1.0
    if tnorm == "min":
        return min(values)
    result = 1.0
    for v in sorted(values):
        result *= v
    return result


def passes_objective(entity: EntityRecord, comparison: Comparison) -> bool:
    """Objective comparisons fail closed on missing or non-numeric values."""
    value = entity.objective_attrs.get(comparison.attr)
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        return False
    return _OPS[comparison.op](float(value), comparison.value)


def search(
    query: Query,
    interpretations: list[Interpretation],
    entities: list[EntityRecord],
    summaries: dict[tuple[str, str], MarkerSummary],
    schema: SchemaDef,
    config: EngineConfig | None = None,
) -> list[SearchResult]:
    """Rank the entities of the query's relation that pass every objective
    comparison.

    Sorted by combined score descending, ties broken by total evidence
    descending then entity id ascending; truncated to query.limit.
    """
    config = config or EngineConfig()
    results: list[SearchResult] = []
    for entity in entities:
        if entity.category != query.relation:
            continue
        if not all(passes_objective(entity, c) for c in query.objective):
            continue
        memberships = tuple(
            predicate_membership(entity.id, interp, summaries, schema, config.delta)
            for interp in interpretations
        )
        score = combine_conjunction([m.value for m in memberships], config.tnorm)
        results.append(
            SearchResult(entity_id=entity.id, score=score, memberships=memberships, rank=0)
        )
    results.sort(
        key=lambda r: (-r.score, -sum(m.evidence_total for m in r.memberships), r.entity_id)
    )
    if query.limit is not None:
        results = results[: query.limit]
    return [
        SearchResult(r.entity_id, r.score, r.memberships, rank=i + 1)
        for i, r in enumerate(results)
    ]
