"""Bundled lexicon resources: opinion polarities, negations, abbreviations,
tip patterns, and imperative verbs.

All files live under ``subjsearch/resources`` and are plain text, one entry
per line; the opinion lexicon is tab-separated ``token<TAB>value``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

INTENSIFIERS = frozenset({"very", "extremely", "really"})
INTENSIFIER_FACTOR = 1.5

# token window sizes used by the extractor
NEGATION_WINDOW = 3
PAIRING_WINDOW = 4

# |sentiment| at or above this counts as extreme
EXTREME_SENTIMENT = 0.5


def _read_resource(name: str) -> list[str]:
    text = resources.files("subjsearch.resources").joinpath(name).read_text("utf-8")
    return [line.strip() for line in text.splitlines() if line.strip()]


@dataclass(frozen=True)
class Lexicon:
    """Immutable bundle of all lexical resources."""

    opinion: dict[str, float]
    negations: frozenset[str]
    abbreviations: frozenset[str]
    tip_patterns: tuple[tuple[str, ...], ...]
    imperative_verbs: frozenset[str]
    intensifiers: frozenset[str] = field(default=INTENSIFIERS)

    def polarity(self, token: str) -> float | None:
        return self.opinion.get(token)

    def is_negation(self, token: str) -> bool:
        # contracted forms ("don't", "wasn't") negate like a bare "not"
        return token in self.negations or token.endswith("n't")


@lru_cache(maxsize=1)
def load_lexicon() -> Lexicon:
    opinion: dict[str, float] = {}
    for line in _read_resource("opinion_lexicon.tsv"):
        token, _, value = line.partition("\t")
        opinion[token] = float(value)
    return Lexicon(
        opinion=opinion,
        negations=frozenset(_read_resource("negations.txt")),
        abbreviations=frozenset(_read_resource("abbreviations.txt")),
        tip_patterns=tuple(tuple(p.split()) for p in _read_resource("tip_patterns.txt")),
        imperative_verbs=frozenset(_read_resource("imperative_verbs.txt")),
    )
