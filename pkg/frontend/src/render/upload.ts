import { countryOptions } from "../assets/world-grid";
import type { CatalogListing, ImportReport } from "../types";
import { emptyState, esc, panel } from "./layout";

function techniquePicker(catalog: CatalogListing): string {
  const groups = catalog.tactics
    .map((tactic) => {
      const boxes = tactic.techniques
        .map(
          (t) => `
        <label class="pick-row" title="${esc(t.description)}">
          <input type="checkbox" name="technique" value="${esc(t.external_id)}">
          <b>${esc(t.external_id)}</b> ${esc(t.name)}
        </label>`,
        )
        .join("");
      return `
      <details class="pick-group">
        <summary>${esc(tactic.phase)} <span class="muted">(${tactic.techniques.length})</span></summary>
        ${boxes}
      </details>`;
    })
    .join("");
  return `
  <div class="picker" id="technique-picker" data-catalog-version="${esc(catalog.version)}">
    ${groups}
    <label class="field">Extra technique codes (comma-separated)
      <input type="text" id="f-extra-techniques" placeholder="e.g. T0019">
    </label>
  </div>`;
}

function countrySelect(): string {
  const options = countryOptions()
    .map((c) => `<option value="${esc(c.name)}">${esc(c.name)}</option>`)
    .join("");
  return `
  <label class="field">Target countries
    <select id="f-countries" multiple size="8">${options}</select>
  </label>
  <label class="field">Other countries (comma-separated)
    <input type="text" id="f-extra-countries" placeholder="names not in the list">
  </label>`;
}

export function renderUploadPage(catalog: CatalogListing, formError = "", report: ImportReport | null = null): string {
  const errorBox = formError
    ? `<div class="form-error" id="form-error">${esc(formError)}</div>`
    : `<div id="form-error" hidden></div>`;

  const form = `
  <form id="incident-form" class="upload-form">
    ${errorBox}
    <label class="field">Name
      <input type="text" id="f-name" required placeholder="Short incident title">
    </label>
    <label class="field">Description
      <textarea id="f-description" rows="3" placeholder="What happened?"></textarea>
    </label>
    <label class="field">Date
      <input type="date" id="f-date" required>
    </label>
    <label class="field">Threat actors (comma-separated)
      <input type="text" id="f-actors" placeholder="e.g. Pravda Network">
    </label>
    ${countrySelect()}
    <div class="field">Techniques ${techniquePicker(catalog)}</div>
    <button class="btn btn-primary" type="submit" id="submit-incident">Create incident</button>
  </form>`;

  const bulk = `
  <form id="bulk-form" class="upload-form">
    <p class="muted">Upload the CSV import template or a STIX bundle (JSON).
    Each row or incident is reported individually below.</p>
    <label class="field">File
      <input type="file" id="f-bulk-file" accept=".csv,.json" required>
    </label>
    <button class="btn btn-primary" type="submit" id="submit-bulk">Import file</button>
  </form>
  <div id="import-report">${report ? renderImportReport(report) : ""}</div>`;

  return `
  <div data-page="upload" class="columns">
    ${panel("New incident", form)}
    ${panel("Bulk import", bulk)}
  </div>`;
}

export function renderImportReport(report: ImportReport): string {
  const rejected = report.rejected.length
    ? `<table class="data-table" id="reject-rows">
        <thead><tr><th>Row</th><th>Reason</th></tr></thead>
        <tbody>${report.rejected
          .map((r) => `<tr><td class="num">${r.row}</td><td>${esc(r.reason)}</td></tr>`)
          .join("")}</tbody>
      </table>`
    : emptyState("No rows were rejected.");
  const dropped = report.dropped_object_ids?.length
    ? `<p class="muted">${report.dropped_object_ids.length} unrelated object(s) in the bundle were ignored.</p>`
    : "";
  return `
  <div class="import-summary">
    <p><b>${report.accepted}</b> accepted &middot; <b>${report.rejected.length}</b> rejected</p>
    ${rejected}
    ${dropped}
  </div>`;
}
