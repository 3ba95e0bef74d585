// HTML for result cards and error banners. Pure string templates so the
// rendering contract is testable without a browser; every number shown
// comes straight from a response field, never computed here.

import { escapeHtml } from "./map.js";
import type { ApiError, ResultOut, SearchResponse } from "./types.js";

function candidateList(title: string, items: { text: string }[]): string {
  if (items.length === 0) {
    return "";
  }
  const rows = items
    .map((c) => `<li class="candidate">${escapeHtml(c.text)}</li>`)
    .join("");
  return `<div class="candidates"><h4>${title}</h4><ul>${rows}</ul></div>`;
}

export function cardHtml(result: ResultOut): string {
  const price = result.entity.attrs["price_pn"];
  const priceLine =
    typeof price === "number"
      ? `<span class="price">$${price} / night</span>`
      : "";
  const statements = result.summaries
    .filter((s) => s.statement)
    .map(
      (s) =>
        `<p class="statement" data-predicate="${escapeHtml(s.predicate)}">` +
        `${escapeHtml(s.statement as string)}</p>`,
    )
    .join("");
  const snippets = result.summaries
    .flatMap((s) => s.snippets)
    .slice(0, 3)
    .map((s) => `<li class="snippet">&ldquo;${escapeHtml(s.text)}&rdquo;</li>`)
    .join("");
  return (
    `<article class="result-card" data-entity-id="${result.entity.id}">` +
    `<header><span class="rank">#${result.rank}</span>` +
    `<h3>${escapeHtml(result.entity.name)}</h3>` +
    `<span class="score">score ${result.score.toFixed(3)}</span></header>` +
    priceLine +
    `<section class="summaries">${statements}` +
    (snippets ? `<ul class="snippets">${snippets}</ul>` : "") +
    `</section>` +
    candidateList("Interesting facts", result.facts) +
    candidateList("Tips", result.tips) +
    `</article>`
  );
}

export function resultsHtml(response: SearchResponse): string {
  if (response.results.length === 0) {
    return `<p class="empty-state">No results matched your search.</p>`;
  }
  return response.results.map(cardHtml).join("");
}

export function bannerHtml(error: ApiError): string {
  const position =
    error.position !== undefined && error.position !== null
      ? ` (at byte ${error.position})`
      : "";
  return (
    `<div class="banner error" data-code="${error.code}">` +
    `<span>${escapeHtml(error.message)}${position}</span>` +
    `<button class="dismiss" aria-label="Dismiss">&times;</button></div>`
  );
}

/** Numeric tokens visible in rendered text, for the traceability check. */
export function visibleNumbers(html: string): number[] {
  const text = html.replace(/<[^>]*>/g, " ");
  const matches = text.match(/-?\d+(?:\.\d+)?/g) ?? [];
  return matches.map(Number);
}
