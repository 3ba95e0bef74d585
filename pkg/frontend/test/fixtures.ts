import type { SearchResponse } from "../src/types.js";

/** Two-result search response shaped exactly like the live server's JSON. */
export const TWO_RESULTS: SearchResponse = {
  results: [
    {
      entity: {
        id: "h1",
        name: "Harbor Rest Inn",
        category: "hotel",
        lat: 37.8021,
        lon: -122.4416,
        attrs: { price_pn: 280 },
      },
      score: 0.731,
      rank: 1,
      memberships: [
        { predicate: "quiet", value: 0.86, evidence: 130 },
        { predicate: "friendly staff", value: 0.85, evidence: 96 },
      ],
      summaries: [
        {
          predicate: "quiet",
          statement: "75% of 200 reviews say it is very quiet",
          percentage: 75,
          review_count: 200,
          snippets: [
            { text: "quiet and peaceful location", review_id: "h1-r2" },
            { text: "very quiet at night", review_id: "h1-r12" },
          ],
        },
      ],
      facts: [
        {
          text: "10 min walk to Presidio.",
          review_id: "h1-r2",
          kind: "fact",
          significance: 0.9,
          relevance: 0.4,
          score: 0.65,
        },
      ],
      tips: [
        {
          text: "Make sure to book the parking in advance.",
          review_id: "h1-r4",
          kind: "tip",
          significance: 1.0,
          relevance: 0.0,
          score: 0.5,
        },
      ],
    },
    {
      entity: {
        id: "h2",
        name: "Midtown Plaza Hotel",
        category: "hotel",
        lat: 37.7879,
        lon: -122.4074,
        attrs: { price_pn: 320 },
      },
      score: 0.412,
      rank: 2,
      memberships: [
        { predicate: "quiet", value: 0.52, evidence: 88 },
        { predicate: "friendly staff", value: 0.79, evidence: 64 },
      ],
      summaries: [
        {
          predicate: "quiet",
          statement: "41% of 150 reviews say it is very quiet",
          percentage: 41,
          review_count: 150,
          snippets: [],
        },
      ],
      facts: [],
      tips: [],
    },
  ],
  interpretations: [
    {
      predicate: "quiet",
      components: [{ attribute: "room_quietness", marker: "very_quiet", weight: 1.0 }],
      matched_directly: true,
    },
    {
      predicate: "friendly staff",
      components: [
        { attribute: "staff_friendliness", marker: "friendly", weight: 1.0 },
      ],
      matched_directly: true,
    },
  ],
};
