import json

import pytest

from subjsearch.config import EngineConfig
from subjsearch.snapshot import (
    SnapshotHolder,
    build_snapshot,
    ingest,
    load_snapshot,
    save_snapshot,
)

from conftest import DATA_DIR
import gen


def run_ingest(tmp_path, out_name="index"):
    return ingest(
        DATA_DIR / "entities.jsonl",
        DATA_DIR / "reviews.jsonl",
        DATA_DIR / "schema.json",
        DATA_DIR / "aliases.jsonl",
        tmp_path / out_name,
    )


class TestIngest:
    def test_manifest_written_and_hash_stable(self, tmp_path):
        first = run_ingest(tmp_path, "index1")
        second = run_ingest(tmp_path, "index2")
        assert first.version == second.version
        manifest = json.loads((tmp_path / "index1" / "manifest.json").read_text())
        assert manifest["version"] == first.version
        assert manifest["counts"]["entities"] == 5

    def test_rerun_same_dir_identical_bytes(self, tmp_path):
        run_ingest(tmp_path)
        before = {
            p.name: p.read_bytes() for p in (tmp_path / "index").iterdir()
        }
        run_ingest(tmp_path)
        after = {p.name: p.read_bytes() for p in (tmp_path / "index").iterdir()}
        assert before == after

    def test_missing_schema_fails(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            ingest(
                DATA_DIR / "entities.jsonl",
                DATA_DIR / "reviews.jsonl",
                tmp_path / "nope.json",
                None,
                tmp_path / "index",
            )

    def test_alias_optional(self, tmp_path):
        snapshot = ingest(
            DATA_DIR / "entities.jsonl",
            DATA_DIR / "reviews.jsonl",
            DATA_DIR / "schema.json",
            None,
            tmp_path / "index",
        )
        assert snapshot.alias.entries == {}


class TestLoadSnapshot:
    def test_roundtrip_equivalence(self, tmp_path, sample_snapshot):
        run_ingest(tmp_path)
        loaded = load_snapshot(tmp_path / "index")
        assert loaded.summaries == sample_snapshot.summaries
        assert loaded.documents == sample_snapshot.documents
        assert tuple(loaded.assigned) == tuple(sample_snapshot.assigned)
        assert loaded.schema == sample_snapshot.schema
        assert {e.id for e in loaded.entities} == {e.id for e in sample_snapshot.entities}
        for entity_id, cands in sample_snapshot.candidates.items():
            got = loaded.candidates[entity_id]
            assert [(c.text, c.kind, c.significance) for c in got] == [
                (c.text, c.kind, c.significance) for c in cands
            ]

    def test_loaded_version_matches_manifest(self, tmp_path):
        snapshot = run_ingest(tmp_path)
        assert load_snapshot(tmp_path / "index").version == snapshot.version


class TestHolder:
    def test_atomic_swap(self, tmp_path, sample_entities, sample_reviews, schema, sample_alias):
        run_ingest(tmp_path)
        holder = SnapshotHolder(load_snapshot(tmp_path / "index"), tmp_path / "index")
        old = holder.current

        # ingest a different corpus into a second directory and reload
        entities, reviews = gen.random_corpus(n_entities=3, n_reviews=9, seed=1)
        epath, rpath = gen.write_corpus_files(entities, reviews, tmp_path)
        ingest(epath, rpath, DATA_DIR / "schema.json", None, tmp_path / "index2")
        fresh = holder.reload(tmp_path / "index2")
        assert holder.current is fresh
        assert holder.current is not old
        assert holder.current.version != old.version

    def test_reload_without_dir_errors(self, sample_snapshot):
        holder = SnapshotHolder(sample_snapshot)
        with pytest.raises(ValueError):
            holder.reload()


def test_build_snapshot_deterministic(sample_entities, sample_reviews, schema, sample_alias, tmp_path):
    a = build_snapshot(sample_entities, sample_reviews, schema, sample_alias)
    b = build_snapshot(sample_entities, sample_reviews, schema, sample_alias)
    va = save_snapshot(a, tmp_path / "a")
    vb = save_snapshot(b, tmp_path / "b")
    assert va == vb
