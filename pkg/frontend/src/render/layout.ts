// Shared chrome: HTML escaping, the navigation bar, panels, empty states.

export interface SessionState {
  username: string;
  role: string;
}

export function esc(value: unknown): string {
  return String(value ?? "")
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

const NAV_LINKS: Array<{ route: string; label: string; needsUpload?: boolean }> = [
  { route: "#/dashboard", label: "Dashboard" },
  { route: "#/incidents", label: "Incidents" },
  { route: "#/upload", label: "Upload", needsUpload: true },
  { route: "#/profile", label: "Profile" },
];

/** Viewers browse; reporters and admins also upload. */
export function canUpload(role: string): boolean {
  return role === "reporter" || role === "admin";
}

export function page(content: string, session: SessionState | null, active = ""): string {
  const links = NAV_LINKS.filter((l) => !l.needsUpload || (session && canUpload(session.role)))
    .map((l) => {
      const cls = active.startsWith(l.route) ? "nav-link active" : "nav-link";
      return `<a class="${cls}" href="${l.route}">${esc(l.label)}</a>`;
    })
    .join("");
  const who = session
    ? `<span class="nav-user">${esc(session.username)} <span class="role-tag">${esc(session.role)}</span></span>
       <button class="btn btn-ghost" id="nav-logout">Sign out</button>`
    : `<a class="nav-link" href="#/login">Sign in</a>`;
  return `
  <header class="topbar">
    <a class="brand" href="#/dashboard">disinfo<span>.exchange</span></a>
    <nav class="nav">${links}</nav>
    <div class="nav-right">${who}</div>
  </header>
  <main class="content">${content}</main>`;
}

export function panel(title: string, body: string, extra = ""): string {
  return `
  <section class="panel">
    <div class="panel-header"><span class="panel-title">${esc(title)}</span>${extra}</div>
    <div class="panel-body">${body}</div>
  </section>`;
}

export function emptyState(message: string): string {
  return `<div class="empty">${esc(message)}</div>`;
}

export function errorPanel(title: string, message: string): string {
  return `
  <section class="panel panel-error">
    <div class="panel-header"><span class="panel-title">${esc(title)}</span></div>
    <div class="panel-body"><div class="empty">${esc(message)}</div></div>
  </section>`;
}

export function notFoundPage(incidentId: string): string {
  return `
  <section class="panel panel-error" data-page="not-found">
    <div class="panel-header"><span class="panel-title">Incident not found</span></div>
    <div class="panel-body">
      <div class="empty">No incident with id <code>${esc(incidentId)}</code>.
      It may have been removed, or the link is stale.</div>
      <p><a class="btn" href="#/incidents">Back to the incident list</a></p>
    </div>
  </section>`;
}
