// Query builder state and its serialization into the server dialect.
// The emitted text must always parse on the server, so escaping and
// validation happen here, before anything is sent.

import type { Category } from "./types.js";

export interface QueryBuilderState {
  category: Category;
  priceMin: number | null;
  priceMax: number | null;
  chips: string[];
  limit: number;
}

export const DEFAULT_STATE: QueryBuilderState = {
  category: "hotel",
  priceMin: null,
  priceMax: null,
  chips: [],
  limit: 10,
};

const RELATION: Record<Category, string> = {
  hotel: "Hotels",
  attraction: "Attractions",
  restaurant: "Restaurants",
};

/** Human-readable validation problem, or null when the state is sendable. */
export function validateState(state: QueryBuilderState): string | null {
  if (
    state.priceMin !== null &&
    state.priceMax !== null &&
    state.priceMin > state.priceMax
  ) {
    return "Minimum price exceeds maximum price.";
  }
  if (state.priceMin !== null && state.priceMin < 0) {
    return "Prices cannot be negative.";
  }
  if (state.chips.some((chip) => chip.trim() === "")) {
    return "Empty search chips are not allowed.";
  }
  return null;
}

function escapePredicate(chip: string): string {
  return chip.replace(/\\/g, "\\\\").replace(/"/g, '\\"');
}

/** Serialize state to dialect text; throws on an invalid state. */
export function buildQueryText(state: QueryBuilderState): string {
  const problem = validateState(state);
  if (problem) {
    throw new Error(problem);
  }
  const terms: string[] = [];
  if (state.priceMax !== null) {
    terms.push(`price_pn <= ${state.priceMax}`);
  }
  if (state.priceMin !== null) {
    terms.push(`price_pn >= ${state.priceMin}`);
  }
  for (const chip of state.chips) {
    terms.push(`"${escapePredicate(chip.trim())}"`);
  }
  let text = `select * from ${RELATION[state.category]}`;
  if (terms.length > 0) {
    text += ` where ${terms.join(" and ")}`;
  }
  return text;
}

/** Chips listed by the server's interpretation echo, for round-trip checks. */
export function echoedPredicates(interpretations: { predicate: string }[]): string[] {
  return interpretations.map((i) => i.predicate);
}
