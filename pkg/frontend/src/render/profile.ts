import type { ApiKeyRow, FreshApiKey } from "../types";
import { emptyState, esc, panel } from "./layout";

function keyRow(key: ApiKeyRow): string {
  const status = key.revoked
    ? `<span class="badge badge-revoked">revoked</span>`
    : `<span class="badge badge-active">active</span>`;
  const action = key.revoked
    ? ""
    : `<button class="btn btn-ghost revoke-key" data-key-id="${esc(key.key_id)}">Revoke</button>`;
  return `
  <tr data-key-id="${esc(key.key_id)}" data-revoked="${key.revoked}">
    <td>${esc(key.label) || '<span class="muted">unlabelled</span>'}</td>
    <td class="ts">${esc(key.created_at)}</td>
    <td class="muted">••••••••</td>
    <td>${status}</td>
    <td>${action}</td>
  </tr>`;
}

/**
 * The raw token panel renders only when `fresh` is passed, and the app
 * passes it for exactly one render after creation.  The key listing
 * endpoint never returns tokens, so no later render can resurrect it.
 */
export function renderProfile(
  keys: ApiKeyRow[],
  favorites: Array<{ id: string; name: string }>,
  fresh: FreshApiKey | null,
): string {
  const freshPanel = fresh
    ? `
    <div class="token-reveal" id="fresh-token-panel">
      <p><b>API key created.</b> Copy it now — it is shown only this once and cannot be retrieved again.</p>
      <code id="fresh-token">${esc(fresh.token)}</code>
      <button class="btn" id="copy-token">Copy token</button>
    </div>`
    : "";

  const table = keys.length
    ? `<table class="data-table" id="key-rows">
        <thead><tr><th>Label</th><th>Created</th><th>Token</th><th>Status</th><th></th></tr></thead>
        <tbody>${keys.map(keyRow).join("")}</tbody>
      </table>`
    : emptyState("No API keys yet. Create one to let a connector poll the public feed.");

  const createForm = `
  <form id="key-form" class="inline-form">
    <input type="text" id="key-label" placeholder="Key label (e.g. downstream connector)">
    <button class="btn btn-primary" type="submit" id="create-key">Create API key</button>
  </form>`;

  const favList = favorites.length
    ? `<ul class="fav-list" id="favorite-list">${favorites
        .map((f) => `<li><a href="#/incidents/${esc(f.id)}">${esc(f.name)}</a></li>`)
        .join("")}</ul>`
    : emptyState("No favorites yet. Star an incident from its detail page.");

  return `
  <div data-page="profile">
    ${panel("API keys", freshPanel + createForm + table)}
    ${panel("Favorites", favList)}
  </div>`;
}
