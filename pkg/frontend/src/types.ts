// Payload shapes, mirroring the backend endpoints one-to-one.  The client
// never interprets STIX; everything rendered comes straight off these types.

export interface SessionInfo {
  token: string;
  username: string;
  role: string;
}

export interface WhoAmI {
  username: string;
  role: string;
  user_id: string;
}

export interface IncidentRow {
  id: string;
  name: string;
  excerpt: string;
  first_seen: string;
}

export interface IncidentPage {
  rows: IncidentRow[];
  total: number;
  page: number;
  page_size: number;
}

export interface IncidentDetail {
  incident: {
    id: string;
    name: string;
    description: string;
    first_seen: string | null;
    created: string | null;
    modified: string | null;
  };
  actors: Array<{ id: string; name: string }>;
  locations: Array<{ id: string; name: string; country: string | null }>;
  techniques: Array<{
    id: string;
    name: string;
    external_id: string | null;
    phases: string[];
  }>;
  relationship_count: number;
}

export interface GraphView {
  nodes: Array<{ id: string; type: string; label: string }>;
  edges: Array<{ id: string; source: string; target: string; type: string }>;
}

export interface DashboardView {
  incident_count: number;
  object_count: number;
  actor_count: number;
  country_count: number;
  recent_incidents: IncidentRow[];
  top_actors: Array<{ name: string; incident_count: number }>;
  top_countries: Array<{ country: string; code: string | null; incident_count: number }>;
}

export interface CatalogListing {
  version: string;
  tactics: Array<{
    phase: string;
    techniques: Array<{ external_id: string; name: string; description: string }>;
  }>;
}

export interface ApiKeyRow {
  key_id: string;
  label: string;
  created_at: string;
  revoked: boolean;
}

export interface FreshApiKey {
  key_id: string;
  label: string;
  created_at: string;
  token: string;
}

export interface ImportReport {
  accepted: number;
  rejected: Array<{ row: number; reason: string }>;
  dropped_object_ids?: string[];
}

export interface CreatedIncident {
  incident_id: string;
  object_count: number;
}

export interface NewIncidentForm {
  name: string;
  description: string;
  date: string;
  threat_actors: string[];
  target_countries: string[];
  techniques: string[];
}
