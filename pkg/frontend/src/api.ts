import type {
  ApiKeyRow,
  CatalogListing,
  CreatedIncident,
  DashboardView,
  FreshApiKey,
  GraphView,
  ImportReport,
  IncidentDetail,
  IncidentPage,
  NewIncidentForm,
  SessionInfo,
  WhoAmI,
} from "./types";

/** Error body produced by every backend endpoint on failure. */
export class ApiError extends Error {
  status: number;
  code: string;
  details: unknown;

  constructor(status: number, code: string, message: string, details?: unknown) {
    super(message);
    this.status = status;
    this.code = code;
    this.details = details ?? {};
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

/**
 * Everything the pages need from the backend.  `ApiClient` is the real
 * HTTP implementation; tests substitute an in-memory fake.
 */
export interface BackendClient {
  register(username: string, password: string): Promise<{ user_id: string; username: string; role: string }>;
  login(username: string, password: string): Promise<SessionInfo>;
  logout(): Promise<void>;
  whoami(): Promise<WhoAmI>;

  listApiKeys(): Promise<ApiKeyRow[]>;
  createApiKey(label: string): Promise<FreshApiKey>;
  revokeApiKey(keyId: string): Promise<void>;
  favorites(): Promise<string[]>;
  setFavorite(incidentId: string, favorite: boolean): Promise<string[]>;

  createIncident(form: NewIncidentForm): Promise<CreatedIncident>;
  bulkImport(body: string, contentType: string): Promise<ImportReport>;
  listIncidents(page: number, pageSize: number, q: string): Promise<IncidentPage>;
  incidentDetail(id: string): Promise<IncidentDetail>;
  incidentGraph(id: string): Promise<GraphView>;
  incidentBundle(id: string): Promise<string>;
  incidentReport(id: string): Promise<string>;

  dashboard(): Promise<DashboardView>;
  catalog(): Promise<CatalogListing>;
}

/** Thin typed wrapper over the backend REST surface. */
export class ApiClient implements BackendClient {
  token: string | null = null;

  private base: string;
  private fetchImpl: FetchLike;

  constructor(base = "", fetchImpl?: FetchLike) {
    this.base = base.replace(/\/$/, "");
    this.fetchImpl = fetchImpl ?? ((url, init) => fetch(url, init));
  }

  private async request(method: string, path: string, body?: unknown, contentType?: string): Promise<Response> {
    const headers: Record<string, string> = {};
    if (this.token) headers["Authorization"] = `Bearer ${this.token}`;
    let payload: string | undefined;
    if (body !== undefined) {
      if (contentType) {
        headers["Content-Type"] = contentType;
        payload = body as string;
      } else {
        headers["Content-Type"] = "application/json";
        payload = JSON.stringify(body);
      }
    }
    const response = await this.fetchImpl(this.base + path, { method, headers, body: payload });
    if (!response.ok) {
      let parsed: any = null;
      try {
        parsed = await response.json();
      } catch {
        // non-JSON error body; fall through to the generic message
      }
      const err = parsed && typeof parsed === "object" ? (parsed.error ?? parsed) : null;
      throw new ApiError(
        response.status,
        err?.code ?? "http-error",
        err?.message ?? `request failed with status ${response.status}`,
        err?.details,
      );
    }
    return response;
  }

  private async json<T>(method: string, path: string, body?: unknown, contentType?: string): Promise<T> {
    const response = await this.request(method, path, body, contentType);
    return (await response.json()) as T;
  }

  private async text(method: string, path: string): Promise<string> {
    const response = await this.request(method, path);
    return await response.text();
  }

  // ── accounts ──

  async register(username: string, password: string) {
    return this.json<{ user_id: string; username: string; role: string }>("POST", "/api/users", { username, password });
  }

  async login(username: string, password: string): Promise<SessionInfo> {
    const session = await this.json<SessionInfo>("POST", "/api/session", { username, password });
    this.token = session.token;
    return session;
  }

  async logout(): Promise<void> {
    try {
      await this.request("DELETE", "/api/session");
    } finally {
      this.token = null;
    }
  }

  whoami(): Promise<WhoAmI> {
    return this.json<WhoAmI>("GET", "/api/session");
  }

  // ── profile ──

  async listApiKeys(): Promise<ApiKeyRow[]> {
    const body = await this.json<{ keys: ApiKeyRow[] }>("GET", "/api/profile/apikeys");
    return body.keys;
  }

  createApiKey(label: string): Promise<FreshApiKey> {
    return this.json<FreshApiKey>("POST", "/api/profile/apikeys", { label });
  }

  async revokeApiKey(keyId: string): Promise<void> {
    await this.request("DELETE", `/api/profile/apikeys/${encodeURIComponent(keyId)}`);
  }

  async favorites(): Promise<string[]> {
    const body = await this.json<{ favorites: string[] }>("GET", "/api/profile/favorites");
    return body.favorites;
  }

  async setFavorite(incidentId: string, favorite: boolean): Promise<string[]> {
    const body = await this.json<{ favorites: string[] }>("PUT", "/api/profile/favorites", {
      incident_id: incidentId,
      favorite,
    });
    return body.favorites;
  }

  // ── incidents ──

  createIncident(form: NewIncidentForm): Promise<CreatedIncident> {
    return this.json<CreatedIncident>("POST", "/api/incidents", form);
  }

  bulkImport(body: string, contentType: string): Promise<ImportReport> {
    return this.json<ImportReport>("POST", "/api/incidents/bulk", body, contentType);
  }

  listIncidents(page: number, pageSize: number, q: string): Promise<IncidentPage> {
    const params = new URLSearchParams({ page: String(page), page_size: String(pageSize) });
    if (q) params.set("q", q);
    return this.json<IncidentPage>("GET", `/api/incidents?${params}`);
  }

  incidentDetail(id: string): Promise<IncidentDetail> {
    return this.json<IncidentDetail>("GET", `/api/incidents/${encodeURIComponent(id)}`);
  }

  incidentGraph(id: string): Promise<GraphView> {
    return this.json<GraphView>("GET", `/api/incidents/${encodeURIComponent(id)}/graph`);
  }

  incidentBundle(id: string): Promise<string> {
    return this.text("GET", `/api/incidents/${encodeURIComponent(id)}/bundle`);
  }

  incidentReport(id: string): Promise<string> {
    return this.text("GET", `/api/incidents/${encodeURIComponent(id)}/report?format=markup`);
  }

  // ── stats and catalog ──

  dashboard(): Promise<DashboardView> {
    return this.json<DashboardView>("GET", "/api/stats/dashboard");
  }

  catalog(): Promise<CatalogListing> {
    return this.json<CatalogListing>("GET", "/api/catalog/techniques");
  }
}
