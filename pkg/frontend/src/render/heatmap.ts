import { GRID_COLS, WORLD_GRID } from "../assets/world-grid";
import { esc } from "./layout";

// Incident-count shading for the tile map.  Buckets, not a continuous
// ramp — at desk scale the counts are small integers and a ramp would
// make 1 vs 2 indistinguishable.
const SHADES = ["#2b3040", "#4a5a8a", "#5f74b8", "#7d94dd", "#a7bdf5", "#d8e2ff"];

export function shadeFor(count: number, max: number): string {
  if (count <= 0 || max <= 0) return SHADES[0];
  const step = Math.min(SHADES.length - 2, Math.floor(((SHADES.length - 2) * (count - 1)) / max));
  return SHADES[1 + step];
}

export interface CountryCount {
  country: string;
  code: string | null;
  incident_count: number;
}

const TILE = 26;
const GAP = 2;

/**
 * Render the world tile grid as an SVG string.  Every country with a
 * known cell is drawn; targeted ones are shaded by incident count and
 * carry a `data-code` attribute.  Counts whose code has no cell (or no
 * code at all) are listed in an overflow strip so nothing is dropped.
 */
export function renderHeatmap(counts: CountryCount[]): string {
  const byCode = new Map<string, CountryCount>();
  const overflow: CountryCount[] = [];
  let max = 0;
  for (const row of counts) {
    if (row.code && WORLD_GRID[row.code]) {
      byCode.set(row.code, row);
    } else {
      overflow.push(row);
    }
    if (row.incident_count > max) max = row.incident_count;
  }

  const rowsUsed = Object.values(WORLD_GRID).reduce((m, c) => Math.max(m, c.row), 0) + 1;
  const width = GRID_COLS * (TILE + GAP);
  const height = rowsUsed * (TILE + GAP);

  const tiles: string[] = [];
  for (const [code, cell] of Object.entries(WORLD_GRID)) {
    const hit = byCode.get(code);
    const count = hit ? hit.incident_count : 0;
    const fill = shadeFor(count, max);
    const x = cell.col * (TILE + GAP);
    const y = cell.row * (TILE + GAP);
    const cls = count > 0 ? "tile tile-hot" : "tile";
    const title = count > 0 ? `${cell.name}: ${count} incident(s)` : cell.name;
    tiles.push(
      `<g class="${cls}" data-code="${esc(code)}" data-count="${count}">` +
        `<rect x="${x}" y="${y}" width="${TILE}" height="${TILE}" rx="3" fill="${fill}">` +
        `<title>${esc(title)}</title></rect>` +
        `<text x="${x + TILE / 2}" y="${y + TILE / 2 + 3}" text-anchor="middle">${esc(code)}</text>` +
        `</g>`,
    );
  }

  const strip = overflow.length
    ? `<div class="heatmap-overflow">Unmapped: ${overflow
        .map((o) => `<span class="tile-extra" data-count="${o.incident_count}">${esc(o.country)} (${o.incident_count})</span>`)
        .join(" ")}</div>`
    : "";

  return `
  <div class="heatmap" data-max="${max}">
    <svg viewBox="0 0 ${width} ${height}" role="img" aria-label="Targeted countries">${tiles.join("")}</svg>
    ${strip}
  </div>`;
}
