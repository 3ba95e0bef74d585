// Thin typed client for the search service. At most one search request is
// in flight: a newer submission aborts the older one.

import type { ApiError, SearchResponse } from "./types.js";

export class ApiRequestError extends Error {
  readonly detail: ApiError;

  constructor(detail: ApiError) {
    super(detail.message);
    this.detail = detail;
  }
}

export class ApiClient {
  private readonly baseUrl: string;
  private inflight: AbortController | null = null;

  constructor(baseUrl: string) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
  }

  async search(queryText: string, limit?: number): Promise<SearchResponse> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;

    const params = new URLSearchParams({ q: queryText });
    if (limit !== undefined) {
      params.set("limit", String(limit));
    }
    const response = await fetch(`${this.baseUrl}/api/search?${params}`, {
      signal: controller.signal,
    });
    if (this.inflight === controller) {
      this.inflight = null;
    }
    const body = await response.json();
    if (!response.ok) {
      throw new ApiRequestError(body as ApiError);
    }
    return body as SearchResponse;
  }

  async health(): Promise<{ version: string }> {
    const response = await fetch(`${this.baseUrl}/api/health`);
    return (await response.json()) as { version: string };
  }
}
