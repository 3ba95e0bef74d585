// API response shapes, mirroring the server's JSON exactly.

export type Category = "hotel" | "attraction" | "restaurant";

export interface EntityOut {
  id: string;
  name: string;
  category: Category;
  lat: number;
  lon: number;
  attrs: Record<string, unknown>;
}

export interface ComponentOut {
  attribute: string;
  marker: string;
  weight: number;
}

export interface InterpretationOut {
  predicate: string;
  components: ComponentOut[];
  matched_directly: boolean;
}

export interface MembershipOut {
  predicate: string;
  value: number;
  evidence: number;
}

export interface SnippetOut {
  text: string;
  review_id: string;
}

export interface SummaryOut {
  predicate: string;
  statement?: string;
  percentage?: number;
  review_count?: number;
  snippets: SnippetOut[];
}

export interface CandidateOut {
  text: string;
  review_id: string;
  kind: "tip" | "fact";
  significance: number;
  relevance: number;
  score: number;
}

export interface ResultOut {
  entity: EntityOut;
  score: number;
  rank: number;
  memberships: MembershipOut[];
  summaries: SummaryOut[];
  facts: CandidateOut[];
  tips: CandidateOut[];
}

export interface SearchResponse {
  results: ResultOut[];
  interpretations: InterpretationOut[];
}

export interface ApiError {
  code: "bad_query" | "unknown_entity" | "uninterpretable_predicate" | "internal";
  message: string;
  position?: number;
}
