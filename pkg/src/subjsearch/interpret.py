"""Map free-text subjective predicates onto schema attributes.

Each attribute gets a term-weight document built from its linguistic domain
plus its schema vocabulary, weighted by term frequency times inverse
attribute frequency. A predicate either matches one attribute directly
(cosine above the tau threshold, or token-identical to the attribute name)
or is reformulated as a weighted blend of the two best-scoring attributes.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .aggregate import LinguisticDomain, marker_seed_tokens, set_cosine
from .corpus import Marker, SchemaDef, SubjectiveAttributeDef
from .extraction import tokenize


class UninterpretablePredicateError(ValueError):
    """No attribute document shares any weighted term with the predicate."""

    def __init__(self, predicate: str):
        super().__init__(f"uninterpretable predicate: {predicate!r}")
        self.predicate = predicate


@dataclass(frozen=True)
class Component:
    attribute: str
    marker: str
    weight: float


@dataclass(frozen=True)
class Interpretation:
    predicate: str
    components: tuple[Component, ...]
    matched_directly: bool


def _name_tokens(name: str) -> list[str]:
    return [t for t in name.split("_") if t]


def build_attribute_documents(
    domains: list[LinguisticDomain], schema: SchemaDef
) -> dict[str, dict[str, float]]:
    """Term-weight vector per attribute.

    Terms come from the attribute's domain phrases (weighted by corpus
    count), its name tokens, and its marker labels and seed phrases. The
    weight is tf * ln(N / n_t); a term present in every attribute weighs 0
    and is dropped.
    """
    by_attr = {d.attribute: d for d in domains}
    bags: dict[str, Counter[str]] = {}
    for attr in schema.attributes:
        bag: Counter[str] = Counter()
        domain = by_attr.get(attr.name)
        if domain is not None:
            for phrase, count in domain.phrases.items():
                for token in tokenize(phrase):
                    bag[token] += count
        for token in _name_tokens(attr.name):
            bag[token] += 1
        for marker in attr.markers:
            for token in _name_tokens(marker.label):
                bag[token] += 1
            for phrase in marker.seed_phrases:
                for token in tokenize(phrase):
                    bag[token] += 1
        bags[attr.name] = bag

    n_attrs = len(schema.attributes)
    attr_freq: Counter[str] = Counter()
    for bag in bags.values():
        attr_freq.update(set(bag))

    documents: dict[str, dict[str, float]] = {}
    for name, bag in bags.items():
        doc = {}
        for token, tf in bag.items():
            iaf = math.log(n_attrs / attr_freq[token])
            if iaf > 0.0:
                doc[token] = tf * iaf
        documents[name] = doc
    return documents


def _cosine(query: Counter[str], doc: dict[str, float]) -> float:
    if not query or not doc:
        return 0.0
    dot = sum(q * doc.get(t, 0.0) for t, q in query.items())
    if dot == 0.0:
        return 0.0
    qnorm = math.sqrt(sum(q * q for q in query.values()))
    dnorm = math.sqrt(sum(w * w for w in doc.values()))
    return dot / (qnorm * dnorm)


def _target_marker(predicate_tokens: frozenset[str], attribute: SubjectiveAttributeDef) -> Marker:
    """Marker with maximal label/seed-phrase token overlap; ordinal 0 when
    nothing overlaps (predicates are read as desiderata)."""
    best = attribute.markers[0]
    best_score = 0.0
    for marker in attribute.markers:
        vocab = marker_seed_tokens(marker) | frozenset(_name_tokens(marker.label))
        score = set_cosine(predicate_tokens, vocab)
        if score > best_score:
            best, best_score = marker, score
    return best


def top_terms(doc: dict[str, float], k: int = 10) -> list[str]:
    return [t for t, _ in sorted(doc.items(), key=lambda kv: (-kv[1], kv[0]))[:k]]


def interpret_predicate(
    text: str,
    documents: dict[str, dict[str, float]],
    schema: SchemaDef,
    tau: float = 0.35,
) -> Interpretation:
    """Interpret one subjective predicate against the attribute documents.

    Raises UninterpretablePredicateError when every attribute scores zero.
    """
    tokens = tokenize(text)
    token_set = frozenset(tokens)
    query = Counter(tokens)

    # token-identical to an attribute name is always a direct match
    for attr in schema.attributes:
        if token_set and token_set == frozenset(_name_tokens(attr.name)):
            return Interpretation(
                predicate=text,
                components=(
                    Component(attr.name, _target_marker(token_set, attr).label, 1.0),
                ),
                matched_directly=True,
            )

    scored = sorted(
        ((_cosine(query, documents.get(a.name, {})), a.name) for a in schema.attributes),
        key=lambda sn: (-sn[0], sn[1]),
    )
    if not scored or scored[0][0] <= 0.0:
        raise UninterpretablePredicateError(text)

    best_score, best_name = scored[0]
    if best_score >= tau:
        attr = schema.attribute(best_name)
        return Interpretation(
            predicate=text,
            components=(Component(best_name, _target_marker(token_set, attr).label, 1.0),),
            matched_directly=True,
        )

    picks = [(s, n) for s, n in scored[:2] if s > 0.0]
    total = sum(s for s, _ in picks)
    components = []
    for i, (score, name) in enumerate(picks):
        attr = schema.attribute(name)
        weight = score / total if i < len(picks) - 1 else 1.0 - sum(c.weight for c in components)
        components.append(Component(name, _target_marker(token_set, attr).label, weight))
    return Interpretation(
        predicate=text, components=tuple(components), matched_directly=False
    )
