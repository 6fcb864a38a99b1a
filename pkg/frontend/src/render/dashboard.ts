import type { DashboardView } from "../types";
import { renderHeatmap } from "./heatmap";
import { emptyState, esc, panel } from "./layout";

function statCard(label: string, value: number): string {
  return `
  <div class="card">
    <div class="card-label">${esc(label)}</div>
    <div class="card-value">${value.toLocaleString("en-US")}</div>
  </div>`;
}

function recentTable(view: DashboardView): string {
  if (view.recent_incidents.length === 0) return emptyState("No incidents yet. Upload one to get started.");
  const rows = view.recent_incidents
    .map(
      (r) => `
      <tr>
        <td><a href="#/incidents/${esc(r.id)}">${esc(r.name)}</a></td>
        <td class="muted">${esc(r.excerpt)}</td>
        <td class="ts">${esc(r.first_seen)}</td>
      </tr>`,
    )
    .join("");
  return `<table class="data-table"><thead><tr><th>Name</th><th>Summary</th><th>First seen</th></tr></thead><tbody>${rows}</tbody></table>`;
}

function actorTable(view: DashboardView): string {
  if (view.top_actors.length === 0) return emptyState("No actors recorded yet.");
  const rows = view.top_actors
    .map(
      (a) => `
      <tr data-actor="${esc(a.name)}">
        <td>${esc(a.name)}</td>
        <td class="num">${a.incident_count}</td>
      </tr>`,
    )
    .join("");
  return `<table class="data-table" id="top-actors"><thead><tr><th>Actor</th><th class="num">Incidents</th></tr></thead><tbody>${rows}</tbody></table>`;
}

function countryTable(view: DashboardView): string {
  if (view.top_countries.length === 0) return emptyState("No targeted countries recorded yet.");
  const rows = view.top_countries
    .map(
      (c) => `
      <tr data-code="${esc(c.code ?? "")}">
        <td>${esc(c.country)}</td>
        <td class="muted">${esc(c.code ?? "—")}</td>
        <td class="num">${c.incident_count}</td>
      </tr>`,
    )
    .join("");
  return `<table class="data-table" id="top-countries"><thead><tr><th>Country</th><th>Code</th><th class="num">Incidents</th></tr></thead><tbody>${rows}</tbody></table>`;
}

export function renderDashboard(view: DashboardView): string {
  const cards = `
  <div class="cards">
    ${statCard("Incidents", view.incident_count)}
    ${statCard("Stored objects", view.object_count)}
    ${statCard("Threat actors", view.actor_count)}
    ${statCard("Targeted countries", view.country_count)}
  </div>`;

  const map =
    view.top_countries.length === 0
      ? panel("Targeted countries", emptyState("The map lights up once incidents name target countries."))
      : panel("Targeted countries", renderHeatmap(view.top_countries));

  return `
  <div data-page="dashboard">
    ${cards}
    ${map}
    <div class="columns">
      ${panel("Most active threat actors", actorTable(view))}
      ${panel("Most attacked countries", countryTable(view))}
    </div>
    ${panel("Recent incidents", recentTable(view), `<button class="btn btn-ghost" id="dash-refresh">Refresh</button>`)}
  </div>`;
}
