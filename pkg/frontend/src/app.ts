import { ApiError, type BackendClient } from "./api";
import type { FreshApiKey, NewIncidentForm } from "./types";
import { renderDashboard } from "./render/dashboard";
import { renderIncidentDetail, renderIncidentList } from "./render/incidents";
import { canUpload, errorPanel, notFoundPage, page, type SessionState } from "./render/layout";
import { renderLogin } from "./render/login";
import { renderProfile } from "./render/profile";
import { renderImportReport, renderUploadPage } from "./render/upload";

export interface StorageLike {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
  removeItem(key: string): void;
}

interface StoredSession extends SessionState {
  token: string;
}

const SESSION_KEY = "dx-session";

/** In-memory fallback when localStorage is unavailable (private mode). */
export class MemoryStorage implements StorageLike {
  private map = new Map<string, string>();
  getItem(key: string) {
    return this.map.get(key) ?? null;
  }
  setItem(key: string, value: string) {
    this.map.set(key, value);
  }
  removeItem(key: string) {
    this.map.delete(key);
  }
}

function defaultStorage(): StorageLike {
  try {
    const probe = globalThis.localStorage;
    probe.getItem(SESSION_KEY);
    return probe;
  } catch {
    return new MemoryStorage();
  }
}

/**
 * Hash-routed single-page console.  Every page render is a pure string
 * from `render/`; this class owns fetching, navigation, and event
 * wiring.  All async work triggered by the DOM is tracked so tests can
 * `await app.whenIdle()` after dispatching events.
 */
export class App {
  session: StoredSession | null = null;
  route = "";

  private root: HTMLElement;
  private api: BackendClient;
  private storage: StorageLike;
  private pending = new Set<Promise<unknown>>();
  private freshKey: FreshApiKey | null = null;

  constructor(root: HTMLElement, api: BackendClient, storage?: StorageLike) {
    this.root = root;
    this.api = api;
    this.storage = storage ?? defaultStorage();
    this.restoreSession();
  }

  /** Wire browser navigation; called once by the entry point. */
  start(): void {
    window.addEventListener("hashchange", () => {
      const hash = window.location.hash || "#/dashboard";
      if (hash !== this.route) this.track(this.navigate(hash));
    });
    this.track(this.navigate(window.location.hash || "#/dashboard"));
  }

  async whenIdle(): Promise<void> {
    while (this.pending.size > 0) {
      await Promise.allSettled([...this.pending]);
    }
  }

  private track<T>(work: Promise<T>): Promise<T> {
    this.pending.add(work);
    void work.finally(() => this.pending.delete(work)).catch(() => undefined);
    return work;
  }

  // ── session plumbing ──

  private restoreSession(): void {
    try {
      const raw = this.storage.getItem(SESSION_KEY);
      if (!raw) return;
      const parsed = JSON.parse(raw) as StoredSession;
      if (parsed && parsed.token) {
        this.session = parsed;
        (this.api as { token?: string | null }).token = parsed.token;
      }
    } catch {
      this.storage.removeItem(SESSION_KEY);
    }
  }

  private saveSession(session: StoredSession | null): void {
    this.session = session;
    (this.api as { token?: string | null }).token = session?.token ?? null;
    if (session) {
      this.storage.setItem(SESSION_KEY, JSON.stringify(session));
    } else {
      this.storage.removeItem(SESSION_KEY);
    }
  }

  // ── routing ──

  async navigate(route: string): Promise<void> {
    this.route = route;
    if (typeof window !== "undefined" && window.location.hash !== route) {
      window.location.hash = route;
    }

    const [path, query = ""] = route.replace(/^#/, "").split("?");
    const params = new URLSearchParams(query);

    if (!this.session && path !== "/login") {
      await this.showLogin();
      return;
    }

    try {
      if (path === "/login") {
        await this.showLogin();
      } else if (path === "/" || path === "/dashboard" || path === "") {
        await this.showDashboard();
      } else if (path === "/incidents") {
        await this.showIncidentList(params);
      } else if (path.startsWith("/incidents/")) {
        await this.showIncidentDetail(decodeURIComponent(path.slice("/incidents/".length)));
      } else if (path === "/upload") {
        await this.showUpload();
      } else if (path === "/profile") {
        await this.showProfile();
      } else {
        this.draw(errorPanel("Unknown page", `There is nothing at ${route}.`));
      }
    } catch (err) {
      if (err instanceof ApiError && err.status === 401) {
        this.saveSession(null);
        await this.showLogin("Your session has expired; sign in again.");
        return;
      }
      const message = err instanceof Error ? err.message : String(err);
      this.draw(errorPanel("Something went wrong", message));
    }
  }

  private draw(content: string): void {
    this.root.innerHTML = page(content, this.session, this.route);
    const logout = this.root.querySelector<HTMLElement>("#nav-logout");
    if (logout) {
      logout.addEventListener("click", () => {
        this.track(
          (async () => {
            try {
              await this.api.logout();
            } catch {
              // token already dead server-side; discard it regardless
            }
            this.saveSession(null);
            await this.navigate("#/login");
          })(),
        );
      });
    }
  }

  private onSubmit(id: string, handler: (form: HTMLFormElement) => Promise<void>): void {
    const form = this.root.querySelector<HTMLFormElement>(`#${id}`);
    if (!form) return;
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      this.track(handler(form));
    });
  }

  private onClick(selector: string, handler: (el: HTMLElement) => Promise<void> | void): void {
    for (const el of this.root.querySelectorAll<HTMLElement>(selector)) {
      el.addEventListener("click", (event) => {
        event.preventDefault();
        const result = handler(el);
        if (result) this.track(result);
      });
    }
  }

  private inputValue(id: string): string {
    return this.root.querySelector<HTMLInputElement>(`#${id}`)?.value.trim() ?? "";
  }

  // ── login ──

  private async showLogin(notice = "", error = ""): Promise<void> {
    this.draw(renderLogin(error, notice));
    this.onSubmit("login-form", async () => {
      const username = this.inputValue("login-username");
      const password = this.root.querySelector<HTMLInputElement>("#login-password")?.value ?? "";
      try {
        const session = await this.api.login(username, password);
        this.saveSession({ token: session.token, username: session.username, role: session.role });
        await this.navigate("#/dashboard");
      } catch (err) {
        const message = err instanceof ApiError ? err.message : "login failed";
        await this.showLogin("", message);
      }
    });
    this.onSubmit("register-form", async () => {
      const username = this.inputValue("register-username");
      const password = this.root.querySelector<HTMLInputElement>("#register-password")?.value ?? "";
      try {
        await this.api.register(username, password);
        const session = await this.api.login(username, password);
        this.saveSession({ token: session.token, username: session.username, role: session.role });
        await this.navigate("#/dashboard");
      } catch (err) {
        const message = err instanceof ApiError ? err.message : "registration failed";
        await this.showLogin("", message);
      }
    });
  }

  // ── dashboard ──

  private async showDashboard(): Promise<void> {
    const view = await this.api.dashboard();
    this.draw(renderDashboard(view));
    this.onClick("#dash-refresh", () => this.navigate(this.route));
  }

  // ── incident list ──

  private async showIncidentList(params: URLSearchParams): Promise<void> {
    const pageNum = Math.max(1, Number(params.get("page") ?? "1") || 1);
    const q = params.get("q") ?? "";
    const result = await this.api.listIncidents(pageNum, 25, q);
    this.draw(renderIncidentList(result, q));

    const go = (nextPage: number, nextQ: string) => {
      const next = new URLSearchParams();
      if (nextPage > 1) next.set("page", String(nextPage));
      if (nextQ) next.set("q", nextQ);
      const suffix = next.toString();
      return this.navigate(suffix ? `#/incidents?${suffix}` : "#/incidents");
    };
    this.onSubmit("incident-search", async () => {
      await go(1, this.inputValue("search-q"));
    });
    this.onClick("#page-prev", () => go(result.page - 1, q));
    this.onClick("#page-next", () => go(result.page + 1, q));
  }

  // ── incident detail ──

  private async showIncidentDetail(incidentId: string): Promise<void> {
    let detail;
    try {
      detail = await this.api.incidentDetail(incidentId);
    } catch (err) {
      if (err instanceof ApiError && err.status === 404) {
        this.draw(notFoundPage(incidentId));
        return;
      }
      throw err;
    }
    const [graph, bundleJson, favorites] = await Promise.all([
      this.api.incidentGraph(incidentId),
      this.api.incidentBundle(incidentId),
      this.api.favorites(),
    ]);
    const favorite = favorites.includes(incidentId);
    this.draw(renderIncidentDetail(detail, graph, bundleJson, favorite));

    this.onClick("#favorite-toggle", async () => {
      await this.api.setFavorite(incidentId, !favorite);
      await this.navigate(this.route);
    });
    this.onClick("#report-download", async () => {
      const markdown = await this.api.incidentReport(incidentId);
      triggerDownload(`${detail.incident.name || "incident"}.md`, markdown, "text/markdown");
    });
    this.onClick("#bundle-copy", () => copyText(bundleJson));
    this.onClick("#bundle-download", () => {
      triggerDownload(`${incidentId}.json`, bundleJson, "application/json");
    });
  }

  // ── upload ──

  private async showUpload(): Promise<void> {
    if (!this.session || !canUpload(this.session.role)) {
      this.draw(errorPanel("Uploads unavailable", "Your role only permits browsing incidents."));
      return;
    }
    const catalog = await this.api.catalog();
    this.draw(renderUploadPage(catalog));

    this.onSubmit("incident-form", async () => {
      const form = this.collectIncidentForm();
      try {
        const created = await this.api.createIncident(form);
        await this.navigate(`#/incidents/${created.incident_id}`);
      } catch (err) {
        this.showFormError(err);
      }
    });

    this.onSubmit("bulk-form", async () => {
      const target = this.root.querySelector<HTMLElement>("#import-report");
      if (!target) return;
      const input = this.root.querySelector<HTMLInputElement>("#f-bulk-file");
      const file = input?.files?.[0];
      if (!file) {
        target.innerHTML = `<div class="form-error">Choose a file first.</div>`;
        return;
      }
      const contentType = file.name.toLowerCase().endsWith(".csv") ? "text/csv" : "application/json";
      try {
        const body = await file.text();
        const report = await this.api.bulkImport(body, contentType);
        target.innerHTML = renderImportReport(report);
      } catch (err) {
        const message = err instanceof ApiError ? `${err.message} (${err.code})` : String(err);
        target.innerHTML = `<div class="form-error">${message.replace(/</g, "&lt;")}</div>`;
      }
    });
  }

  private collectIncidentForm(): NewIncidentForm {
    const splitCsv = (raw: string) =>
      raw
        .split(",")
        .map((part) => part.trim())
        .filter((part) => part.length > 0);

    const select = this.root.querySelector<HTMLSelectElement>("#f-countries");
    const picked = select
      ? Array.from(select.options)
          .filter((o) => o.selected)
          .map((o) => o.value)
      : [];
    const countries = [...picked, ...splitCsv(this.inputValue("f-extra-countries"))];

    const checked = Array.from(
      this.root.querySelectorAll<HTMLInputElement>('input[name="technique"]:checked'),
    ).map((box) => box.value);
    const techniques = [...checked, ...splitCsv(this.inputValue("f-extra-techniques"))];

    return {
      name: this.inputValue("f-name"),
      description: this.root.querySelector<HTMLTextAreaElement>("#f-description")?.value ?? "",
      date: this.inputValue("f-date"),
      threat_actors: splitCsv(this.inputValue("f-actors")),
      target_countries: countries,
      techniques,
    };
  }

  /** Inline validation: surface the 422 message without wiping the form. */
  private showFormError(err: unknown): void {
    const box = this.root.querySelector<HTMLElement>("#form-error");
    if (!box) return;
    const message = err instanceof ApiError ? err.message : String(err);
    box.textContent = message;
    box.classList.add("form-error");
    box.removeAttribute("hidden");
  }

  // ── profile ──

  private async showProfile(): Promise<void> {
    const [keys, favoriteIds] = await Promise.all([this.api.listApiKeys(), this.api.favorites()]);
    const favorites = await Promise.all(
      favoriteIds.map(async (id) => {
        try {
          const detail = await this.api.incidentDetail(id);
          return { id, name: detail.incident.name };
        } catch {
          return { id, name: id };
        }
      }),
    );

    // Consume the freshly created key: it renders this once and is gone.
    const fresh = this.freshKey;
    this.freshKey = null;
    this.draw(renderProfile(keys, favorites, fresh));

    this.onSubmit("key-form", async () => {
      this.freshKey = await this.api.createApiKey(this.inputValue("key-label"));
      await this.showProfile();
    });
    this.onClick("#copy-token", () => {
      if (fresh) copyText(fresh.token);
    });
    this.onClick(".revoke-key", async (el) => {
      const keyId = el.dataset.keyId;
      if (keyId) await this.api.revokeApiKey(keyId);
      await this.showProfile();
    });
  }
}

// ── browser-only helpers ──

function copyText(text: string): void {
  try {
    void navigator.clipboard?.writeText(text);
  } catch {
    // clipboard API unavailable; the text is on screen to copy by hand
  }
}

function triggerDownload(filename: string, text: string, mime: string): void {
  try {
    const url = URL.createObjectURL(new Blob([text], { type: mime }));
    const anchor = document.createElement("a");
    anchor.href = url;
    anchor.download = filename;
    anchor.click();
    URL.revokeObjectURL(url);
  } catch {
    // headless environments have no object URLs; nothing to do
  }
}
