// Plain coordinate map: markers positioned by linear projection of
// lat/lon into a padded bounding box. No tiles, no geocoding; selecting a
// result pans the layer so its marker sits at the center.

import type { ResultOut } from "./types.js";

export interface MapMarker {
  entityId: string;
  name: string;
  rank: number;
  x: number; // percentage 0..100 within the map container
  y: number;
  selected: boolean;
}

export interface MapView {
  markers: MapMarker[];
  // translation (in percentage points) applied to the marker layer so the
  // selected marker lands at the container center
  panX: number;
  panY: number;
}

const PADDING = 0.15;

export function projectMarkers(
  results: ResultOut[],
  selectedId: string | null = null,
): MapView {
  if (results.length === 0) {
    return { markers: [], panX: 0, panY: 0 };
  }
  const lats = results.map((r) => r.entity.lat);
  const lons = results.map((r) => r.entity.lon);
  const latSpan = Math.max(Math.max(...lats) - Math.min(...lats), 1e-6);
  const lonSpan = Math.max(Math.max(...lons) - Math.min(...lons), 1e-6);
  const latMin = Math.min(...lats) - latSpan * PADDING;
  const lonMin = Math.min(...lons) - lonSpan * PADDING;
  const latMax = Math.max(...lats) + latSpan * PADDING;
  const lonMax = Math.max(...lons) + lonSpan * PADDING;

  const markers = results.map((result) => ({
    entityId: result.entity.id,
    name: result.entity.name,
    rank: result.rank,
    x: ((result.entity.lon - lonMin) / (lonMax - lonMin)) * 100,
    // screen y grows downward, latitude grows upward
    y: ((latMax - result.entity.lat) / (latMax - latMin)) * 100,
    selected: result.entity.id === selectedId,
  }));

  let panX = 0;
  let panY = 0;
  const selected = markers.find((m) => m.selected);
  if (selected) {
    panX = 50 - selected.x;
    panY = 50 - selected.y;
  }
  return { markers, panX, panY };
}

export function mapHtml(view: MapView): string {
  const layer = view.markers
    .map(
      (m) =>
        `<div class="map-marker${m.selected ? " selected" : ""}" ` +
        `data-entity-id="${m.entityId}" ` +
        `style="left:${m.x.toFixed(2)}%;top:${m.y.toFixed(2)}%" ` +
        `title="${escapeHtml(m.name)}">${m.rank}</div>`,
    )
    .join("");
  return (
    `<div class="map-layer" style="transform:translate(${view.panX.toFixed(2)}%,` +
    `${view.panY.toFixed(2)}%)">${layer}</div>`
  );
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
