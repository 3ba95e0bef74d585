// Page wiring: query builder form, results list, map, error banners.

import { ApiClient, ApiRequestError } from "./api.js";
import { buildQueryText, DEFAULT_STATE, validateState } from "./querybuilder.js";
import type { QueryBuilderState } from "./querybuilder.js";
import { mapHtml, projectMarkers } from "./map.js";
import { bannerHtml, resultsHtml } from "./render.js";
import type { Category, SearchResponse } from "./types.js";

const API_BASE =
  new URLSearchParams(window.location.search).get("api") ?? "http://127.0.0.1:8000";

const client = new ApiClient(API_BASE);
const state: QueryBuilderState = { ...DEFAULT_STATE, chips: [] };
let lastResponse: SearchResponse | null = null;
let selectedId: string | null = null;

const el = (id: string) => document.getElementById(id) as HTMLElement;

function readForm(): void {
  state.category = (el("category") as HTMLSelectElement).value as Category;
  const min = (el("price-min") as HTMLInputElement).value;
  const max = (el("price-max") as HTMLInputElement).value;
  state.priceMin = min === "" ? null : Number(min);
  state.priceMax = max === "" ? null : Number(max);
}

function renderChips(): void {
  el("chips").innerHTML = state.chips
    .map(
      (chip, i) =>
        `<span class="chip">${chip.replace(/</g, "&lt;")}` +
        `<button data-chip="${i}" aria-label="Remove">&times;</button></span>`,
    )
    .join("");
  for (const button of el("chips").querySelectorAll("button")) {
    button.addEventListener("click", () => {
      state.chips.splice(Number(button.dataset.chip), 1);
      renderChips();
    });
  }
}

function showBanner(error: { code: string; message: string; position?: number }): void {
  el("banners").insertAdjacentHTML("beforeend", bannerHtml(error as never));
  const banner = el("banners").lastElementChild as HTMLElement;
  banner.querySelector(".dismiss")?.addEventListener("click", () => banner.remove());
}

function renderMap(): void {
  const results = lastResponse?.results ?? [];
  el("map").innerHTML = mapHtml(projectMarkers(results, selectedId));
}

function renderResults(): void {
  if (!lastResponse) {
    return;
  }
  el("results").innerHTML = resultsHtml(lastResponse);
  for (const card of el("results").querySelectorAll(".result-card")) {
    card.addEventListener("click", () => {
      selectedId = (card as HTMLElement).dataset.entityId ?? null;
      for (const other of el("results").querySelectorAll(".result-card")) {
        other.classList.toggle("selected", other === card);
      }
      renderMap();
    });
  }
  renderMap();
}

async function runSearch(): Promise<void> {
  readForm();
  const problem = validateState(state);
  if (problem) {
    showBanner({ code: "bad_query", message: problem });
    return;
  }
  try {
    lastResponse = await client.search(buildQueryText(state), state.limit);
    selectedId = null;
    renderResults();
  } catch (error) {
    if (error instanceof ApiRequestError) {
      showBanner(error.detail);
    } else if ((error as Error).name !== "AbortError") {
      showBanner({ code: "internal", message: String(error) });
    }
  }
}

function init(): void {
  el("add-chip").addEventListener("click", () => {
    const input = el("chip-input") as HTMLInputElement;
    const value = input.value.trim();
    if (value) {
      state.chips.push(value);
      input.value = "";
      renderChips();
    }
  });
  (el("chip-input") as HTMLInputElement).addEventListener("keydown", (event) => {
    if (event.key === "Enter") {
      event.preventDefault();
      el("add-chip").click();
    }
  });
  el("search").addEventListener("click", () => void runSearch());
  client
    .health()
    .then((h) => (el("status").textContent = `index ${h.version.slice(0, 12)}`))
    .catch(() => (el("status").textContent = "server unreachable"));
}

init();
