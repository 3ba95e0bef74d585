"""Pydantic request/response models for the HTTP API."""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel


class EntityOut(BaseModel):
    id: str
    name: str
    category: str
    lat: float
    lon: float
    attrs: dict[str, Any] = {}


class ComponentOut(BaseModel):
    attribute: str
    marker: str
    weight: float


class InterpretationOut(BaseModel):
    predicate: str
    components: list[ComponentOut]
    matched_directly: bool


class MembershipOut(BaseModel):
    predicate: str
    value: float
    evidence: int


class SnippetOut(BaseModel):
    text: str
    review_id: str


class SummaryOut(BaseModel):
    predicate: str
    statement: Optional[str] = None
    percentage: Optional[int] = None
    review_count: Optional[int] = None
    snippets: list[SnippetOut] = []


class CandidateOut(BaseModel):
    text: str
    review_id: str
    kind: str
    significance: float
    relevance: float
    score: float


class ResultOut(BaseModel):
    entity: EntityOut
    score: float
    rank: int
    memberships: list[MembershipOut]
    summaries: list[SummaryOut]
    facts: list[CandidateOut]
    tips: list[CandidateOut]


class SearchResponse(BaseModel):
    results: list[ResultOut]
    interpretations: list[InterpretationOut]


class FactsResponse(BaseModel):
    entity_id: str
    facts: list[CandidateOut]
    tips: list[CandidateOut]


class SummaryResponse(BaseModel):
    entity_id: str
    summaries: list[SummaryOut]


class HealthOut(BaseModel):
    version: str


class ApiErrorOut(BaseModel):
    code: str  # bad_query | unknown_entity | uninterpretable_predicate | internal
    message: str
    position: Optional[int] = None
