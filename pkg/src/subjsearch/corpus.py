"""Corpus loading: entities, reviews, subjective schema, and alias table.

File formats are line-oriented JSON (one object per line) except the schema,
which is a single JSON object. Loading validates referential integrity and
the schema invariants; the loaded corpus is immutable afterwards.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable

CATEGORIES = ("hotel", "attraction", "restaurant")


class CorpusError(ValueError):
    """Raised for malformed or inconsistent corpus files."""


@dataclass(frozen=True)
class EntityRecord:
    id: str
    name: str
    category: str
    lat: float
    lon: float
    objective_attrs: dict[str, Any] = field(default_factory=dict)
    extra: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class ReviewRecord:
    review_id: str
    entity_id: str
    text: str
    rating: int | None = None
    extra: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Marker:
    """One level of an attribute's quality spectrum; ordinal 0 is the most
    positive pole."""

    label: str
    ordinal: int
    seed_phrases: tuple[str, ...]


@dataclass(frozen=True)
class SubjectiveAttributeDef:
    name: str
    seed_aspect_terms: frozenset[str]
    markers: tuple[Marker, ...]

    def pole(self, ordinal: int) -> float:
        """Map a marker ordinal linearly onto [+1, -1]."""
        k = len(self.markers)
        if k == 1:
            return 1.0
        return 1.0 - 2.0 * ordinal / (k - 1)


@dataclass(frozen=True)
class SchemaDef:
    attributes: tuple[SubjectiveAttributeDef, ...]

    def attribute(self, name: str) -> SubjectiveAttributeDef:
        for attr in self.attributes:
            if attr.name == name:
                return attr
        raise KeyError(name)

    @property
    def names(self) -> list[str]:
        return [a.name for a in self.attributes]


@dataclass(frozen=True)
class AliasTable:
    """Surface-token to concept-token mapping (e.g. a landmark name to the
    kind of place it is)."""

    entries: dict[str, frozenset[str]] = field(default_factory=dict)

    def concepts(self, token: str) -> frozenset[str]:
        return self.entries.get(token, frozenset())

    def expand(self, tokens: Iterable[str]) -> set[str]:
        out = set(tokens)
        for tok in tuple(out):
            out |= self.entries.get(tok, frozenset())
        return out


def _iter_json_lines(path: str | Path) -> Iterable[tuple[int, dict]]:
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{path}: malformed line {lineno}: {exc.msg}") from exc
            if not isinstance(obj, dict):
                raise CorpusError(f"{path}: malformed line {lineno}: expected an object")
            yield lineno, obj


def _require(obj: dict, key: str, path: str | Path, lineno: int) -> Any:
    if key not in obj:
        raise CorpusError(f"{path}: line {lineno}: missing required field '{key}'")
    return obj[key]


def load_entities(path: str | Path) -> list[EntityRecord]:
    """Load entity records in file order.

    Raises CorpusError naming the offending line or id on malformed input,
    duplicate ids, out-of-range coordinates, or a non-positive price_pn.
    """
    entities: list[EntityRecord] = []
    seen: set[str] = set()
    known = {"id", "name", "category", "lat", "lon", "attrs"}
    for lineno, obj in _iter_json_lines(path):
        eid = str(_require(obj, "id", path, lineno))
        if eid in seen:
            raise CorpusError(f"duplicate id {eid} (line {lineno})")
        seen.add(eid)
        category = str(_require(obj, "category", path, lineno))
        if category not in CATEGORIES:
            raise CorpusError(
                f"{path}: line {lineno}: unknown category '{category}' "
                f"(expected one of {', '.join(CATEGORIES)})"
            )
        lat = float(_require(obj, "lat", path, lineno))
        lon = float(_require(obj, "lon", path, lineno))
        if not -90.0 <= lat <= 90.0:
            raise CorpusError(f"{path}: line {lineno}: latitude {lat} out of range")
        if not -180.0 <= lon <= 180.0:
            raise CorpusError(f"{path}: line {lineno}: longitude {lon} out of range")
        attrs = dict(obj.get("attrs") or {})
        price = attrs.get("price_pn")
        if price is not None and (not isinstance(price, (int, float)) or price <= 0):
            raise CorpusError(f"{path}: line {lineno}: price_pn must be > 0")
        entities.append(
            EntityRecord(
                id=eid,
                name=str(_require(obj, "name", path, lineno)),
                category=category,
                lat=lat,
                lon=lon,
                objective_attrs=attrs,
                extra={k: v for k, v in obj.items() if k not in known},
            )
        )
    return entities


def load_reviews(path: str | Path, entities: list[EntityRecord]) -> list[ReviewRecord]:
    """Load review records; every review must reference a loaded entity."""
    entity_ids = {e.id for e in entities}
    reviews: list[ReviewRecord] = []
    seen: set[str] = set()
    known = {"review_id", "entity_id", "text", "rating"}
    for lineno, obj in _iter_json_lines(path):
        rid = str(_require(obj, "review_id", path, lineno))
        if rid in seen:
            raise CorpusError(f"duplicate review_id {rid} (line {lineno})")
        seen.add(rid)
        eid = str(_require(obj, "entity_id", path, lineno))
        if eid not in entity_ids:
            raise CorpusError(f"review {rid} references unknown entity {eid}")
        text = str(_require(obj, "text", path, lineno))
        if not text:
            raise CorpusError(f"{path}: line {lineno}: review {rid} has empty text")
        rating = obj.get("rating")
        if rating is not None:
            rating = int(rating)
            if not 1 <= rating <= 5:
                raise CorpusError(f"{path}: line {lineno}: rating {rating} out of [1,5]")
        reviews.append(
            ReviewRecord(
                review_id=rid,
                entity_id=eid,
                text=text,
                rating=rating,
                extra={k: v for k, v in obj.items() if k not in known},
            )
        )
    return reviews


def load_schema(path: str | Path) -> SchemaDef:
    """Load the subjective schema.

    Marker list order defines ordinals; index 0 is the most positive pole.
    """
    with open(path, encoding="utf-8") as f:
        try:
            obj = json.load(f)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"{path}: malformed schema: {exc.msg}") from exc
    raw_attrs = obj.get("attributes")
    if not isinstance(raw_attrs, list) or not raw_attrs:
        raise CorpusError(f"{path}: schema must have a non-empty 'attributes' list")
    attrs: list[SubjectiveAttributeDef] = []
    names: set[str] = set()
    for raw in raw_attrs:
        name = str(raw.get("name", ""))
        if not name:
            raise CorpusError(f"{path}: attribute without a name")
        if name in names:
            raise CorpusError(f"{path}: duplicate attribute name '{name}'")
        names.add(name)
        raw_markers = raw.get("markers") or []
        if len(raw_markers) < 2:
            raise CorpusError(f"{path}: attribute '{name}' needs at least 2 markers")
        markers = []
        labels: set[str] = set()
        for ordinal, m in enumerate(raw_markers):
            label = str(m.get("label", ""))
            if not label:
                raise CorpusError(f"{path}: attribute '{name}' has a marker without a label")
            if label in labels:
                raise CorpusError(f"{path}: attribute '{name}' repeats marker label '{label}'")
            labels.add(label)
            phrases = tuple(str(p).lower() for p in m.get("phrases") or [])
            markers.append(Marker(label=label, ordinal=ordinal, seed_phrases=phrases))
        terms = frozenset(str(t).lower() for t in raw.get("aspect_terms") or [])
        attrs.append(
            SubjectiveAttributeDef(
                name=name, seed_aspect_terms=terms, markers=tuple(markers)
            )
        )
    return SchemaDef(attributes=tuple(attrs))


def load_aliases(path: str | Path) -> AliasTable:
    """Load the optional alias table (surface token -> concept tokens)."""
    entries: dict[str, frozenset[str]] = {}
    for lineno, obj in _iter_json_lines(path):
        token = str(_require(obj, "token", path, lineno)).lower()
        concepts = frozenset(str(c).lower() for c in obj.get("concepts") or [])
        if not concepts:
            raise CorpusError(f"{path}: line {lineno}: alias '{token}' has no concepts")
        entries[token] = concepts
    return AliasTable(entries=entries)
