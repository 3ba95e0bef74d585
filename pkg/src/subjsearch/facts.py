"""Tips and interesting facts: candidate filtering, TextRank significance,
dedup, and query-conditioned ranking.

Tips are actionable sentences caught by phrase patterns or an imperative
first verb. Facts are sentences carrying an informative token (markedly
more frequent for this entity than for its same-category background) or an
extreme sentiment. Each entity's candidates get a TextRank centrality score
(significance); near-duplicates are dropped; at query time candidates are
reranked by blending significance with relevance to the query predicates.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .aggregate import set_cosine
from .config import EngineConfig
from .corpus import AliasTable, SchemaDef
from .extraction import Sentence, is_extreme, sentiment_score, tokenize
from .interpret import UninterpretablePredicateError, interpret_predicate, top_terms
from .lexicon import Lexicon, load_lexicon

DAMPING = 0.85
RANK_TOLERANCE = 1e-4
MAX_ITERATIONS = 100


@dataclass
class Candidate:
    entity_id: str
    review_id: str
    sentence_index: int
    text: str
    tokens: tuple[str, ...]
    kind: str  # "tip" | "fact"
    significance: float | None = None
    relevance: float = 0.0
    score: float = 0.0

    def sort_key(self) -> tuple:
        return (self.entity_id, self.review_id, self.sentence_index)


@dataclass(frozen=True)
class TokenStat:
    token: str
    entity_freq: float
    background_freq: float
    ratio: float


@dataclass(frozen=True)
class InformativeTokenSet:
    entity_id: str
    stats: dict[str, TokenStat] = field(default_factory=dict)

    @property
    def tokens(self) -> set[str]:
        return set(self.stats)


def tip_filter(sentence: Sentence, lexicon: Lexicon | None = None) -> bool:
    """True iff the sentence matches a tip phrase pattern or starts with an
    imperative verb."""
    lexicon = lexicon or load_lexicon()
    tokens = sentence.tokens
    if tokens and tokens[0] in lexicon.imperative_verbs:
        return True
    for pattern in lexicon.tip_patterns:
        width = len(pattern)
        for i in range(len(tokens) - width + 1):
            if tuple(tokens[i : i + width]) == pattern:
                return True
    return False


def informative_tokens(
    entity_id: str,
    entity_counts: Counter[str],
    background_counts: Counter[str],
    rho: float = 3.0,
    c_min: int = 3,
) -> InformativeTokenSet:
    """Tokens used at least c_min times for this entity and at least rho
    times more frequently than in the background (add-one smoothed)."""
    entity_total = sum(entity_counts.values())
    background_total = sum(background_counts.values())
    stats: dict[str, TokenStat] = {}
    if entity_total == 0:
        return InformativeTokenSet(entity_id=entity_id, stats=stats)
    for token, count in entity_counts.items():
        if count < c_min:
            continue
        entity_freq = count / entity_total
        background_freq = (background_counts.get(token, 0) + 1) / (background_total + 1)
        ratio = entity_freq / background_freq
        if ratio >= rho:
            stats[token] = TokenStat(token, entity_freq, background_freq, ratio)
    return InformativeTokenSet(entity_id=entity_id, stats=stats)


def fact_filter(
    sentence: Sentence,
    informative: InformativeTokenSet,
    sentiment: float | None = None,
    lexicon: Lexicon | None = None,
) -> bool:
    """True iff the sentence has an informative token or extreme sentiment."""
    if any(t in informative.stats for t in sentence.tokens):
        return True
    if sentiment is None:
        sentiment = sentiment_score(sentence, lexicon or load_lexicon())
    return is_extreme(sentiment)


def sentence_similarity(tokens_a: tuple[str, ...], tokens_b: tuple[str, ...]) -> float:
    """Shared distinct tokens over summed log lengths."""
    shared = len(set(tokens_a) & set(tokens_b))
    if shared == 0:
        return 0.0
    return shared / (math.log(1 + len(tokens_a)) + math.log(1 + len(tokens_b)))


def textrank_scores(token_lists: list[tuple[str, ...]]) -> list[float]:
    """Damped power iteration over the sentence similarity graph.

    Dangling sentences spread their mass uniformly, so the score vector
    always sums to 1.
    """
    n = len(token_lists)
    if n == 0:
        return []
    if n == 1:
        return [1.0]
    sim = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            s = sentence_similarity(token_lists[i], token_lists[j])
            sim[i][j] = sim[j][i] = s
    out_weight = [sum(row) for row in sim]
    ranks = [1.0 / n] * n
    for _ in range(MAX_ITERATIONS):
        dangling = sum(r for r, w in zip(ranks, out_weight) if w == 0.0)
        base = (1.0 - DAMPING) / n + DAMPING * dangling / n
        fresh = [base] * n
        for j in range(n):
            if out_weight[j] == 0.0:
                continue
            share = DAMPING * ranks[j] / out_weight[j]
            row = sim[j]
            for i in range(n):
                if row[i] != 0.0:
                    fresh[i] += share * row[i]
        delta = max(abs(a - b) for a, b in zip(fresh, ranks))
        ranks = fresh
        if delta < RANK_TOLERANCE:
            break
    return ranks


def _min_max(values: list[float]) -> list[float]:
    lo, hi = min(values), max(values)
    if hi == lo:
        return [1.0] * len(values)
    return [(v - lo) / (hi - lo) for v in values]


def textrank_dedup(candidates: list[Candidate], theta: float = 0.5) -> list[Candidate]:
    """Set min-max normalized TextRank significance (for candidates that
    have none yet) and drop the lower-significance member of every pair
    more similar than theta. Idempotent: a second pass keeps everything.
    """
    if not candidates:
        return []
    unset = [c for c in candidates if c.significance is None]
    if unset:
        ranks = textrank_scores([c.tokens for c in unset])
        for candidate, sig in zip(unset, _min_max(ranks)):
            candidate.significance = sig
    ordered = sorted(candidates, key=lambda c: (-(c.significance or 0.0), c.sort_key()))
    kept: list[Candidate] = []
    for candidate in ordered:
        if all(
            sentence_similarity(candidate.tokens, other.tokens) <= theta for other in kept
        ):
            kept.append(candidate)
    return kept


def predicate_expansions(
    predicates: list[str],
    documents: dict[str, dict[str, float]],
    schema: SchemaDef,
    tau: float = 0.35,
) -> list[frozenset[str]]:
    """Per-predicate token sets: the predicate's own tokens plus the top
    weighted terms of each attribute it interprets to. An uninterpretable
    predicate falls back to its raw tokens."""
    expansions = []
    for predicate in predicates:
        tokens = set(tokenize(predicate))
        if not tokens:
            continue
        try:
            interp = interpret_predicate(predicate, documents, schema, tau)
            for component in interp.components:
                tokens.update(top_terms(documents.get(component.attribute, {}), 10))
        except UninterpretablePredicateError:
            pass
        expansions.append(frozenset(tokens))
    return expansions


def rank_candidates(
    candidates: list[Candidate],
    predicates: list[str],
    alias: AliasTable,
    documents: dict[str, dict[str, float]],
    schema: SchemaDef,
    config: EngineConfig | None = None,
) -> list[Candidate]:
    """Order candidates by alpha * significance + (1 - alpha) * relevance.

    Relevance is the best cosine between any predicate expansion and the
    candidate's alias-expanded tokens; with no predicates it is zero and
    ordering falls back to significance alone.
    """
    config = config or EngineConfig()
    expansions = predicate_expansions(predicates, documents, schema, config.tau)
    for candidate in candidates:
        expanded = frozenset(alias.expand(candidate.tokens))
        relevance = 0.0
        for expansion in expansions:
            relevance = max(relevance, set_cosine(expansion, expanded))
        candidate.relevance = relevance
        candidate.score = (
            config.alpha * (candidate.significance or 0.0)
            + (1.0 - config.alpha) * relevance
        )
    return sorted(candidates, key=lambda c: (-c.score, c.sort_key()))
