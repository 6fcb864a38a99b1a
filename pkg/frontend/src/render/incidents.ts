import type { GraphView, IncidentDetail, IncidentPage } from "../types";
import { renderGraph } from "./graph";
import { emptyState, esc, panel } from "./layout";

// ── list page ──

export function renderIncidentList(result: IncidentPage, q: string): string {
  const rows = result.rows
    .map(
      (r) => `
      <tr>
        <td><a href="#/incidents/${esc(r.id)}">${esc(r.name)}</a></td>
        <td class="muted">${esc(r.excerpt)}</td>
        <td class="ts">${esc(r.first_seen)}</td>
      </tr>`,
    )
    .join("");
  const table = result.rows.length
    ? `<table class="data-table" id="incident-rows"><thead><tr><th>Name</th><th>Summary</th><th>First seen</th></tr></thead><tbody>${rows}</tbody></table>`
    : emptyState(q ? `No incidents match “${q}”.` : "No incidents stored yet.");

  const pages = Math.max(1, Math.ceil(result.total / result.page_size));
  const pager = `
  <div class="pager">
    <button class="btn btn-ghost" id="page-prev" ${result.page <= 1 ? "disabled" : ""}>&larr; Prev</button>
    <span class="pager-label">Page ${result.page} of ${pages} &middot; ${result.total} total</span>
    <button class="btn btn-ghost" id="page-next" ${result.page >= pages ? "disabled" : ""}>Next &rarr;</button>
  </div>`;

  const search = `
  <form id="incident-search" class="searchbar">
    <input type="search" id="search-q" placeholder="Filter by name…" value="${esc(q)}">
    <button class="btn" type="submit">Search</button>
  </form>`;

  return `<div data-page="incident-list">${panel("Incidents", search + table + pager)}</div>`;
}

// ── detail page ──

function chip(t: IncidentDetail["techniques"][number]): string {
  const code = t.external_id ?? "?";
  const phases = t.phases.join(", ");
  return `<span class="chip" data-code="${esc(code)}" title="${esc(phases)}"><b>${esc(code)}</b> ${esc(t.name)}</span>`;
}

function metaRow(label: string, value: string): string {
  return `<div class="meta-key">${esc(label)}</div><div class="meta-val">${value}</div>`;
}

export function renderIncidentDetail(
  detail: IncidentDetail,
  graph: GraphView,
  bundleJson: string,
  favorite: boolean,
): string {
  const inc = detail.incident;
  const actors = detail.actors.length
    ? detail.actors.map((a) => `<span class="chip chip-actor">${esc(a.name)}</span>`).join(" ")
    : `<span class="muted">none recorded</span>`;
  const locations = detail.locations.length
    ? detail.locations
        .map((l) => `<span class="chip chip-country">${esc(l.name)}${l.country ? ` <i>${esc(l.country)}</i>` : ""}</span>`)
        .join(" ")
    : `<span class="muted">none recorded</span>`;
  const techniques = detail.techniques.length
    ? `<div class="chips" id="technique-chips">${detail.techniques.map(chip).join(" ")}</div>`
    : emptyState("No techniques attached.");

  const favLabel = favorite ? "★ Favorited" : "☆ Add favorite";
  const header = `
  <div class="detail-head">
    <h1>${esc(inc.name)}</h1>
    <div class="detail-actions">
      <button class="btn" id="favorite-toggle" data-favorite="${favorite}">${favLabel}</button>
      <button class="btn" id="report-download">Report (Markdown)</button>
    </div>
  </div>`;

  const meta = `
  <div class="meta-grid">
    ${metaRow("Date", `<span class="ts">${esc(inc.first_seen ?? "unknown")}</span>`)}
    ${metaRow("Recorded", `<span class="ts">${esc(inc.created ?? "—")}</span>`)}
    ${metaRow("Last modified", `<span class="ts">${esc(inc.modified ?? "—")}</span>`)}
    ${metaRow("Threat actors", actors)}
    ${metaRow("Target countries", locations)}
    ${metaRow("Relationships", String(detail.relationship_count))}
  </div>
  <p class="description">${esc(inc.description) || '<span class="muted">No description.</span>'}</p>`;

  const bundlePanel = panel(
    "STIX bundle",
    `<pre class="bundle-view" id="bundle-json">${esc(bundleJson)}</pre>`,
    `<span>
      <button class="btn btn-ghost" id="bundle-copy">Copy</button>
      <button class="btn btn-ghost" id="bundle-download">Download</button>
    </span>`,
  );

  return `
  <div data-page="incident-detail" data-incident-id="${esc(inc.id)}">
    ${header}
    ${panel("Incident", meta)}
    ${panel(`Techniques (${detail.techniques.length})`, techniques)}
    ${panel("Relationship graph", renderGraph(graph))}
    ${bundlePanel}
  </div>`;
}
