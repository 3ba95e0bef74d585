"""Turn review text into (attribute, phrase, polarity) extraction records.

The extractor is lexicon and window based: an opinion word within 4 tokens
of a schema aspect term yields a record whose phrase is the minimal text
span covering every matched aspect term and every paired opinion word in
the sentence. Negators within 3 tokens before an opinion word flip its
polarity; an immediately preceding intensifier scales it by 1.5 (clamped).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .corpus import ReviewRecord, SchemaDef
from .lexicon import (
    EXTREME_SENTIMENT,
    INTENSIFIER_FACTOR,
    NEGATION_WINDOW,
    PAIRING_WINDOW,
    Lexicon,
    load_lexicon,
)

_TOKEN_RE = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*")
_BOUNDARY_RE = re.compile(r"[.!?]+|\n+")


@dataclass(frozen=True)
class Sentence:
    review_id: str
    entity_id: str
    index: int
    text: str
    tokens: tuple[str, ...]
    token_spans: tuple[tuple[int, int], ...] = field(default=(), compare=False)


@dataclass(frozen=True)
class ExtractionRecord:
    entity_id: str
    review_id: str
    sentence_index: int
    attribute: str
    phrase: str
    polarity: float


def tokenize(text: str) -> list[str]:
    """Lowercase word tokens; punctuation is stripped except intra-word
    apostrophes and hyphens."""
    return [m.group().lower() for m in _TOKEN_RE.finditer(text)]


def tokenize_with_spans(text: str) -> tuple[list[str], list[tuple[int, int]]]:
    tokens, spans = [], []
    for m in _TOKEN_RE.finditer(text):
        tokens.append(m.group().lower())
        spans.append((m.start(), m.end()))
    return tokens, spans


def _is_abbreviation(text: str, dot_pos: int, abbreviations: frozenset[str]) -> bool:
    # word immediately before the terminator, possibly dotted itself (e.g.)
    start = dot_pos
    while start > 0 and (text[start - 1].isalnum() or text[start - 1] == "."):
        start -= 1
    word = text[start:dot_pos].lower().rstrip(".")
    return word in abbreviations or word.replace(".", "") in abbreviations


def split_sentences(review: ReviewRecord, lexicon: Lexicon | None = None) -> list[Sentence]:
    """Split a review into sentences on . ! ? and newlines, skipping
    abbreviation dots and decimal points. Whitespace-only text yields []."""
    lexicon = lexicon or load_lexicon()
    text = review.text
    pieces: list[str] = []
    last = 0
    for m in _BOUNDARY_RE.finditer(text):
        if m.group().startswith("."):
            after = m.end()
            # a lone dot glued to the next character is internal
            # ("e.g.", "3.5", "host.example")
            if len(m.group()) == 1 and after < len(text) and not text[after].isspace():
                continue
            if _is_abbreviation(text, m.start(), lexicon.abbreviations):
                continue
        pieces.append(text[last : m.end()])
        last = m.end()
    if last < len(text):
        pieces.append(text[last:])

    sentences: list[Sentence] = []
    for piece in pieces:
        stripped = piece.strip()
        if not stripped:
            continue
        tokens, spans = tokenize_with_spans(stripped)
        if not tokens:
            continue
        sentences.append(
            Sentence(
                review_id=review.review_id,
                entity_id=review.entity_id,
                index=len(sentences),
                text=stripped,
                tokens=tuple(tokens),
                token_spans=tuple(spans),
            )
        )
    return sentences


def token_polarity(tokens: tuple[str, ...] | list[str], i: int, lexicon: Lexicon) -> float | None:
    """Signed polarity of tokens[i], or None if it is not an opinion word.

    Applies the intensifier boost from the immediately preceding token and
    the negation flip for a negator within the preceding window.
    """
    value = lexicon.polarity(tokens[i])
    if value is None:
        return None
    if i > 0 and tokens[i - 1] in lexicon.intensifiers:
        value *= INTENSIFIER_FACTOR
    for j in range(max(0, i - NEGATION_WINDOW), i):
        if lexicon.is_negation(tokens[j]):
            value = -value
            break
    return max(-1.0, min(1.0, value))


def sentiment_score(sentence: Sentence, lexicon: Lexicon | None = None) -> float:
    """Mean signed polarity of the sentence's opinion words; 0.0 when none
    match."""
    lexicon = lexicon or load_lexicon()
    values = []
    for i in range(len(sentence.tokens)):
        value = token_polarity(sentence.tokens, i, lexicon)
        if value is not None:
            values.append(value)
    if not values:
        return 0.0
    return sum(values) / len(values)


def is_extreme(score: float) -> bool:
    return abs(score) >= EXTREME_SENTIMENT


def extract_phrases(
    sentence: Sentence, schema: SchemaDef, lexicon: Lexicon | None = None
) -> list[ExtractionRecord]:
    """At most one record per (sentence, attribute): requires an aspect term
    plus at least one opinion word within the pairing window."""
    lexicon = lexicon or load_lexicon()
    tokens = sentence.tokens
    records: list[ExtractionRecord] = []
    for attr in schema.attributes:
        seed_idx = [i for i, t in enumerate(tokens) if t in attr.seed_aspect_terms]
        if not seed_idx:
            continue
        opinion: dict[int, float] = {}
        for i in range(len(tokens)):
            if min(abs(i - s) for s in seed_idx) > PAIRING_WINDOW:
                continue
            value = token_polarity(tokens, i, lexicon)
            if value is not None:
                opinion[i] = value
        if not opinion:
            continue
        covered = seed_idx + sorted(opinion)
        lo, hi = min(covered), max(covered)
        start = sentence.token_spans[lo][0]
        end = sentence.token_spans[hi][1]
        phrase = sentence.text[start:end].lower()
        polarity = sum(opinion.values()) / len(opinion)
        records.append(
            ExtractionRecord(
                entity_id=sentence.entity_id,
                review_id=sentence.review_id,
                sentence_index=sentence.index,
                attribute=attr.name,
                phrase=phrase,
                polarity=polarity,
            )
        )
    return records


def extract_review(
    review: ReviewRecord, schema: SchemaDef, lexicon: Lexicon | None = None
) -> list[ExtractionRecord]:
    """Extraction records for a whole review, in sentence order."""
    lexicon = lexicon or load_lexicon()
    records: list[ExtractionRecord] = []
    for sentence in split_sentences(review, lexicon):
        records.extend(extract_phrases(sentence, schema, lexicon))
    return records
