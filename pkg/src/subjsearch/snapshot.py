"""Offline ingest and the immutable index snapshot the service reads.

Ingest runs the full pipeline (extraction, marker assignment, summaries,
domains, attribute documents, tip/fact candidates) and serializes every
artifact to line-oriented files plus a manifest carrying a content hash.
Re-running on identical inputs reproduces the hash byte for byte. The
service loads a snapshot without re-extraction and swaps it atomically on
reload.
"""

from __future__ import annotations

import hashlib
import json
import threading
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from pathlib import Path

from .aggregate import (
    AssignedExtraction,
    LinguisticDomain,
    MarkerSummary,
    assign_extractions,
    summaries_from_assigned,
    build_domains,
)
from .config import EngineConfig
from .corpus import (
    AliasTable,
    EntityRecord,
    SchemaDef,
    load_aliases,
    load_entities,
    load_reviews,
    load_schema,
)
from .extraction import Sentence, extract_phrases, sentiment_score, split_sentences, tokenize
from .facts import Candidate, fact_filter, informative_tokens, textrank_dedup, tip_filter
from .interpret import build_attribute_documents
from .lexicon import load_lexicon

MANIFEST = "manifest.json"
CONTENT_FILES = (
    "schema.json",
    "entities.jsonl",
    "aliases.jsonl",
    "extractions.jsonl",
    "domains.jsonl",
    "summaries.jsonl",
    "documents.jsonl",
    "candidates.jsonl",
)


@dataclass(frozen=True)
class IndexSnapshot:
    version: str
    entities: tuple[EntityRecord, ...]
    schema: SchemaDef
    alias: AliasTable
    domains: tuple[LinguisticDomain, ...]
    summaries: dict[tuple[str, str], MarkerSummary]
    documents: dict[str, dict[str, float]]
    assigned: tuple[AssignedExtraction, ...]
    candidates: dict[str, list[Candidate]]  # entity_id -> deduped candidates
    entities_by_id: dict[str, EntityRecord] = field(default_factory=dict)
    assigned_by_entity: dict[str, list[AssignedExtraction]] = field(default_factory=dict)

    def __post_init__(self):
        self.entities_by_id.update({e.id: e for e in self.entities})
        for record in self.assigned:
            self.assigned_by_entity.setdefault(record.entity_id, []).append(record)

    def entity_candidates(self, entity_id: str, kind: str) -> list[Candidate]:
        return [c for c in self.candidates.get(entity_id, []) if c.kind == kind]


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def _write_lines(path: Path, rows: list[str]) -> None:
    path.write_text("".join(r + "\n" for r in rows), encoding="utf-8")


def build_snapshot(
    entities: list[EntityRecord],
    reviews,
    schema: SchemaDef,
    alias: AliasTable,
    config: EngineConfig | None = None,
) -> IndexSnapshot:
    """Run the in-memory pipeline; the version hash is filled by save()."""
    config = config or EngineConfig()
    lexicon = load_lexicon()

    sentences_by_entity: dict[str, list[Sentence]] = defaultdict(list)
    extractions = []
    for review in reviews:
        for sentence in split_sentences(review, lexicon):
            sentences_by_entity[sentence.entity_id].append(sentence)
            extractions.extend(extract_phrases(sentence, schema, lexicon))
    extractions.sort(key=lambda r: (r.entity_id, r.review_id, r.sentence_index, r.attribute))

    assigned = assign_extractions(extractions, schema)
    summaries = summaries_from_assigned(assigned, schema)
    domains = build_domains(extractions, schema)
    documents = build_attribute_documents(domains, schema)

    # same-category backgrounds for informative tokens
    entity_counts: dict[str, Counter[str]] = {}
    category_counts: dict[str, Counter[str]] = defaultdict(Counter)
    by_id = {e.id: e for e in entities}
    for entity_id, sentences in sentences_by_entity.items():
        counts: Counter[str] = Counter()
        for sentence in sentences:
            counts.update(sentence.tokens)
        entity_counts[entity_id] = counts
        category_counts[by_id[entity_id].category].update(counts)

    candidates: dict[str, list[Candidate]] = {}
    for entity in entities:
        sentences = sentences_by_entity.get(entity.id, [])
        if not sentences:
            continue
        background = category_counts[entity.category] - entity_counts[entity.id]
        informative = informative_tokens(
            entity.id, entity_counts[entity.id], background, config.rho, config.c_min
        )
        tips: list[Candidate] = []
        facts: list[Candidate] = []
        for sentence in sentences:
            sentiment = sentiment_score(sentence, lexicon)
            if tip_filter(sentence, lexicon):
                tips.append(_candidate(sentence, "tip"))
            if fact_filter(sentence, informative, sentiment, lexicon):
                facts.append(_candidate(sentence, "fact"))
        kept = textrank_dedup(tips, config.theta) + textrank_dedup(facts, config.theta)
        if kept:
            candidates[entity.id] = kept

    return IndexSnapshot(
        version="",
        entities=tuple(entities),
        schema=schema,
        alias=alias,
        domains=tuple(domains),
        summaries={(s.entity_id, s.attribute): s for s in summaries},
        documents=documents,
        assigned=tuple(assigned),
        candidates=candidates,
    )


def _candidate(sentence: Sentence, kind: str) -> Candidate:
    return Candidate(
        entity_id=sentence.entity_id,
        review_id=sentence.review_id,
        sentence_index=sentence.index,
        text=sentence.text,
        tokens=sentence.tokens,
        kind=kind,
    )


def save_snapshot(snapshot: IndexSnapshot, out_dir: str | Path) -> str:
    """Serialize all artifacts; returns the content hash written into the
    manifest."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    schema_obj = {
        "attributes": [
            {
                "name": a.name,
                "aspect_terms": sorted(a.seed_aspect_terms),
                "markers": [
                    {"label": m.label, "phrases": list(m.seed_phrases)} for m in a.markers
                ],
            }
            for a in snapshot.schema.attributes
        ]
    }
    (out / "schema.json").write_text(_dump(schema_obj) + "\n", encoding="utf-8")

    _write_lines(
        out / "entities.jsonl",
        [
            _dump(
                {
                    "id": e.id,
                    "name": e.name,
                    "category": e.category,
                    "lat": e.lat,
                    "lon": e.lon,
                    "attrs": e.objective_attrs,
                    **e.extra,
                }
            )
            for e in snapshot.entities
        ],
    )
    _write_lines(
        out / "aliases.jsonl",
        [
            _dump({"token": t, "concepts": sorted(c)})
            for t, c in sorted(snapshot.alias.entries.items())
        ],
    )
    _write_lines(
        out / "extractions.jsonl",
        [
            _dump(
                {
                    "entity_id": r.entity_id,
                    "review_id": r.review_id,
                    "sentence_index": r.sentence_index,
                    "attribute": r.attribute,
                    "phrase": r.phrase,
                    "polarity": r.polarity,
                    "marker": r.marker,
                }
            )
            for r in snapshot.assigned
        ],
    )
    _write_lines(
        out / "domains.jsonl",
        [
            _dump({"attribute": d.attribute, "phrase": p, "count": c})
            for d in snapshot.domains
            for p, c in d.phrases.items()
        ],
    )
    _write_lines(
        out / "summaries.jsonl",
        [
            _dump(
                {
                    "entity_id": s.entity_id,
                    "attribute": s.attribute,
                    "counts": s.counts,
                    "total": s.total,
                }
            )
            for _, s in sorted(snapshot.summaries.items())
        ],
    )
    _write_lines(
        out / "documents.jsonl",
        [
            _dump({"attribute": name, "weights": weights})
            for name, weights in sorted(snapshot.documents.items())
        ],
    )
    _write_lines(
        out / "candidates.jsonl",
        [
            _dump(
                {
                    "entity_id": c.entity_id,
                    "review_id": c.review_id,
                    "sentence_index": c.sentence_index,
                    "text": c.text,
                    "kind": c.kind,
                    "significance": c.significance,
                }
            )
            for eid in sorted(snapshot.candidates)
            for c in snapshot.candidates[eid]
        ],
    )

    digest = hashlib.sha256()
    for name in CONTENT_FILES:
        digest.update(name.encode())
        digest.update((out / name).read_bytes())
    version = digest.hexdigest()
    manifest = {
        "version": version,
        "files": list(CONTENT_FILES),
        "counts": {
            "entities": len(snapshot.entities),
            "extractions": len(snapshot.assigned),
            "summaries": len(snapshot.summaries),
            "candidates": sum(len(v) for v in snapshot.candidates.values()),
        },
    }
    (out / MANIFEST).write_text(_dump(manifest) + "\n", encoding="utf-8")
    return version


def ingest(
    entities_path: str | Path,
    reviews_path: str | Path,
    schema_path: str | Path,
    alias_path: str | Path | None,
    out_dir: str | Path,
    config: EngineConfig | None = None,
) -> IndexSnapshot:
    """Load, build, and persist a snapshot; returns it with its version."""
    entities = load_entities(entities_path)
    reviews = load_reviews(reviews_path, entities)
    schema = load_schema(schema_path)
    alias = load_aliases(alias_path) if alias_path else AliasTable()
    snapshot = build_snapshot(entities, reviews, schema, alias, config)
    version = save_snapshot(snapshot, out_dir)
    return _with_version(snapshot, version)


def _with_version(snapshot: IndexSnapshot, version: str) -> IndexSnapshot:
    return IndexSnapshot(
        version=version,
        entities=snapshot.entities,
        schema=snapshot.schema,
        alias=snapshot.alias,
        domains=snapshot.domains,
        summaries=snapshot.summaries,
        documents=snapshot.documents,
        assigned=snapshot.assigned,
        candidates=snapshot.candidates,
    )


def load_snapshot(index_dir: str | Path) -> IndexSnapshot:
    """Load a previously ingested snapshot without re-extraction."""
    root = Path(index_dir)
    manifest = json.loads((root / MANIFEST).read_text("utf-8"))

    entities = tuple(load_entities(root / "entities.jsonl"))
    schema = load_schema(root / "schema.json")
    alias = load_aliases(root / "aliases.jsonl")

    assigned = []
    for line in (root / "extractions.jsonl").read_text("utf-8").splitlines():
        obj = json.loads(line)
        assigned.append(AssignedExtraction(**obj))

    domain_phrases: dict[str, dict[str, int]] = defaultdict(dict)
    for line in (root / "domains.jsonl").read_text("utf-8").splitlines():
        obj = json.loads(line)
        domain_phrases[obj["attribute"]][obj["phrase"]] = obj["count"]
    domains = tuple(
        LinguisticDomain(attribute=a, phrases=p) for a, p in sorted(domain_phrases.items())
    )

    summaries = {}
    for line in (root / "summaries.jsonl").read_text("utf-8").splitlines():
        obj = json.loads(line)
        summaries[(obj["entity_id"], obj["attribute"])] = MarkerSummary(**obj)

    documents = {}
    for line in (root / "documents.jsonl").read_text("utf-8").splitlines():
        obj = json.loads(line)
        documents[obj["attribute"]] = obj["weights"]

    candidates: dict[str, list[Candidate]] = defaultdict(list)
    for line in (root / "candidates.jsonl").read_text("utf-8").splitlines():
        obj = json.loads(line)
        candidates[obj["entity_id"]].append(
            Candidate(
                entity_id=obj["entity_id"],
                review_id=obj["review_id"],
                sentence_index=obj["sentence_index"],
                text=obj["text"],
                tokens=tuple(tokenize(obj["text"])),
                kind=obj["kind"],
                significance=obj["significance"],
            )
        )

    return IndexSnapshot(
        version=manifest["version"],
        entities=entities,
        schema=schema,
        alias=alias,
        domains=domains,
        summaries=summaries,
        documents=documents,
        assigned=tuple(assigned),
        candidates=dict(candidates),
    )


class SnapshotHolder:
    """Atomic reference to the currently served snapshot.

    Readers grab .current once per request; reload() swaps the reference in
    one assignment, so concurrent requests see either the old or the new
    snapshot, never a mix.
    """

    def __init__(self, snapshot: IndexSnapshot, index_dir: str | Path | None = None):
        self._lock = threading.Lock()
        self._snapshot = snapshot
        self.index_dir = Path(index_dir) if index_dir else None

    @property
    def current(self) -> IndexSnapshot:
        return self._snapshot

    def reload(self, index_dir: str | Path | None = None) -> IndexSnapshot:
        path = Path(index_dir) if index_dir else self.index_dir
        if path is None:
            raise ValueError("no index directory to reload from")
        fresh = load_snapshot(path)
        with self._lock:
            self._snapshot = fresh
            self.index_dir = path
        return fresh
