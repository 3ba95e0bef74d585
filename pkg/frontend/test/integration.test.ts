// Live round-trip against a running server. Set SUBJSEARCH_URL, e.g.
//   subjsearch serve --index /tmp/index --port 8000 &
//   SUBJSEARCH_URL=http://127.0.0.1:8000 npm run test:integration

import { describe, expect, it } from "vitest";

import { buildQueryText, DEFAULT_STATE, echoedPredicates } from "../src/querybuilder.js";
import type { SearchResponse } from "../src/types.js";

const BASE = process.env.SUBJSEARCH_URL;

describe.skipIf(!BASE)("live server round-trip", () => {
  it("parses the built query and echoes both chips", async () => {
    const chips = ["quiet", "friendly staff"];
    const text = buildQueryText({
      ...DEFAULT_STATE,
      priceMin: 200,
      priceMax: 350,
      chips,
    });
    const response = await fetch(
      `${BASE}/api/search?` + new URLSearchParams({ q: text }),
    );
    expect(response.status).toBe(200);
    const body = (await response.json()) as SearchResponse;
    expect(echoedPredicates(body.interpretations)).toEqual(chips);
    for (const result of body.results) {
      const price = result.entity.attrs["price_pn"] as number;
      expect(price).toBeGreaterThanOrEqual(200);
      expect(price).toBeLessThanOrEqual(350);
    }
  });

  it("escaped chips survive the round trip", async () => {
    const chips = ['quiet "room"'];
    const text = buildQueryText({ ...DEFAULT_STATE, chips });
    const response = await fetch(
      `${BASE}/api/search?` + new URLSearchParams({ q: text }),
    );
    // predicate may be uninterpretable on a small index (422), but the
    // dialect text itself must never be a parse error (400)
    expect(response.status).not.toBe(400);
    if (response.status === 200) {
      const body = (await response.json()) as SearchResponse;
      expect(echoedPredicates(body.interpretations)).toEqual(chips);
    }
  });
});
