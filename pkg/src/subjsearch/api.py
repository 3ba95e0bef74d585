"""HTTP/JSON service over an immutable index snapshot.

Endpoints:
    GET /api/search?q=&limit=
    GET /api/entities/{id}
    GET /api/entities/{id}/facts?q=
    GET /api/entities/{id}/summary?q=
    GET /api/health

All handlers are stateless readers of the snapshot held by SnapshotHolder;
identical requests against one snapshot return identical bodies.
"""

from __future__ import annotations

import dataclasses

from fastapi import FastAPI, Query as QueryParam, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import schemas
from .config import EngineConfig
from .facts import Candidate, rank_candidates
from .interpret import Interpretation, UninterpretablePredicateError, interpret_predicate
from .querylang import Query, QueryParseError, parse_query
from .scoring import search
from .snapshot import IndexSnapshot, SnapshotHolder
from .summarize import ReviewSummary, summarize_predicate

# applied when neither the request nor the query carries a limit
DEFAULT_LIMIT = 10


class UnknownEntityError(KeyError):
    def __init__(self, entity_id: str):
        super().__init__(entity_id)
        self.entity_id = entity_id


def _entity_out(entity) -> schemas.EntityOut:
    return schemas.EntityOut(
        id=entity.id,
        name=entity.name,
        category=entity.category,
        lat=entity.lat,
        lon=entity.lon,
        attrs=entity.objective_attrs,
    )


def _interp_out(interp: Interpretation) -> schemas.InterpretationOut:
    return schemas.InterpretationOut(
        predicate=interp.predicate,
        components=[
            schemas.ComponentOut(attribute=c.attribute, marker=c.marker, weight=c.weight)
            for c in interp.components
        ],
        matched_directly=interp.matched_directly,
    )


def _summary_out(summary: ReviewSummary) -> schemas.SummaryOut:
    return schemas.SummaryOut(
        predicate=summary.predicate,
        statement=summary.statement,
        percentage=summary.percentage,
        review_count=summary.review_count,
        snippets=[
            schemas.SnippetOut(text=s.text, review_id=s.review_id) for s in summary.snippets
        ],
    )


def _candidate_out(candidate: Candidate) -> schemas.CandidateOut:
    return schemas.CandidateOut(
        text=candidate.text,
        review_id=candidate.review_id,
        kind=candidate.kind,
        significance=candidate.significance or 0.0,
        relevance=candidate.relevance,
        score=candidate.score,
    )


def _predicates_from(q: str | None) -> list[str]:
    """Entity sub-endpoints accept either full dialect text or one bare
    predicate."""
    if not q:
        return []
    try:
        return list(parse_query(q).subjective)
    except QueryParseError:
        return [q]


def _ranked(
    snapshot: IndexSnapshot,
    entity_id: str,
    kind: str,
    predicates: list[str],
    config: EngineConfig,
) -> list[Candidate]:
    return rank_candidates(
        snapshot.entity_candidates(entity_id, kind),
        predicates,
        snapshot.alias,
        snapshot.documents,
        snapshot.schema,
        config,
    )


def create_app(holder: SnapshotHolder, config: EngineConfig | None = None) -> FastAPI:
    config = config or EngineConfig()
    app = FastAPI(title="subjsearch", version="0.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.holder = holder
    app.state.config = config

    @app.exception_handler(QueryParseError)
    async def _bad_query(request: Request, exc: QueryParseError):
        return JSONResponse(
            status_code=400,
            content=schemas.ApiErrorOut(
                code="bad_query", message=exc.message, position=exc.offset
            ).model_dump(),
        )

    @app.exception_handler(UninterpretablePredicateError)
    async def _uninterpretable(request: Request, exc: UninterpretablePredicateError):
        return JSONResponse(
            status_code=422,
            content=schemas.ApiErrorOut(
                code="uninterpretable_predicate", message=str(exc)
            ).model_dump(),
        )

    @app.exception_handler(UnknownEntityError)
    async def _unknown_entity(request: Request, exc: UnknownEntityError):
        return JSONResponse(
            status_code=404,
            content=schemas.ApiErrorOut(
                code="unknown_entity", message=f"unknown entity {exc.entity_id!r}"
            ).model_dump(),
        )

    def _get_entity(snapshot: IndexSnapshot, entity_id: str):
        entity = snapshot.entities_by_id.get(entity_id)
        if entity is None:
            raise UnknownEntityError(entity_id)
        return entity

    @app.get("/api/health", response_model=schemas.HealthOut)
    def health():
        return schemas.HealthOut(version=holder.current.version)

    @app.get(
        "/api/search",
        response_model=schemas.SearchResponse,
        response_model_exclude_none=True,
    )
    def handle_search(q: str, limit: int | None = QueryParam(default=None, ge=1)):
        snapshot = holder.current
        query = parse_query(q)
        effective = limit if limit is not None else (query.limit or DEFAULT_LIMIT)
        query = dataclasses.replace(query, limit=effective)
        interpretations = [
            interpret_predicate(p, snapshot.documents, snapshot.schema, config.tau)
            for p in query.subjective
        ]
        ranked = search(
            query,
            interpretations,
            list(snapshot.entities),
            snapshot.summaries,
            snapshot.schema,
            config,
        )
        predicates = list(query.subjective)
        results = []
        for result in ranked:
            entity = snapshot.entities_by_id[result.entity_id]
            assigned = snapshot.assigned_by_entity.get(entity.id, [])
            summaries = [
                summarize_predicate(
                    entity.id,
                    interp,
                    assigned,
                    snapshot.schema,
                    config.snippet_k,
                    config.seed,
                    config.delta,
                )
                for interp in interpretations
            ]
            results.append(
                schemas.ResultOut(
                    entity=_entity_out(entity),
                    score=result.score,
                    rank=result.rank,
                    memberships=[
                        schemas.MembershipOut(
                            predicate=m.predicate, value=m.value, evidence=m.evidence_total
                        )
                        for m in result.memberships
                    ],
                    summaries=[_summary_out(s) for s in summaries],
                    facts=[
                        _candidate_out(c)
                        for c in _ranked(snapshot, entity.id, "fact", predicates, config)[:3]
                    ],
                    tips=[
                        _candidate_out(c)
                        for c in _ranked(snapshot, entity.id, "tip", predicates, config)[:3]
                    ],
                )
            )
        return schemas.SearchResponse(
            results=results, interpretations=[_interp_out(i) for i in interpretations]
        )

    @app.get("/api/entities/{entity_id}", response_model=schemas.EntityOut)
    def handle_entity(entity_id: str):
        return _entity_out(_get_entity(holder.current, entity_id))

    @app.get(
        "/api/entities/{entity_id}/facts",
        response_model=schemas.FactsResponse,
        response_model_exclude_none=True,
    )
    def handle_facts(entity_id: str, q: str | None = None):
        snapshot = holder.current
        _get_entity(snapshot, entity_id)
        predicates = _predicates_from(q)
        return schemas.FactsResponse(
            entity_id=entity_id,
            facts=[_candidate_out(c) for c in _ranked(snapshot, entity_id, "fact", predicates, config)],
            tips=[_candidate_out(c) for c in _ranked(snapshot, entity_id, "tip", predicates, config)],
        )

    @app.get(
        "/api/entities/{entity_id}/summary",
        response_model=schemas.SummaryResponse,
        response_model_exclude_none=True,
    )
    def handle_summary(entity_id: str, q: str):
        snapshot = holder.current
        entity = _get_entity(snapshot, entity_id)
        assigned = snapshot.assigned_by_entity.get(entity.id, [])
        summaries = []
        for predicate in _predicates_from(q):
            interp = interpret_predicate(
                predicate, snapshot.documents, snapshot.schema, config.tau
            )
            summaries.append(
                summarize_predicate(
                    entity.id,
                    interp,
                    assigned,
                    snapshot.schema,
                    config.snippet_k,
                    config.seed,
                    config.delta,
                )
            )
        return schemas.SummaryResponse(
            entity_id=entity_id, summaries=[_summary_out(s) for s in summaries]
        )

    return app
