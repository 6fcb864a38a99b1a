// Canned backend payloads used by the render unit tests.  Shapes match
// the documented endpoint contracts; counts follow the 1+A+C+T / A+C+T
// rule so graph fixtures stay internally consistent.

import type {
  CatalogListing,
  DashboardView,
  GraphView,
  ImportReport,
  IncidentDetail,
  IncidentPage,
} from "../src/types";

export const EMPTY_DASHBOARD: DashboardView = {
  incident_count: 0,
  object_count: 0,
  actor_count: 0,
  country_count: 0,
  recent_incidents: [],
  top_actors: [],
  top_countries: [],
};

export const SEEDED_DASHBOARD: DashboardView = {
  incident_count: 3,
  object_count: 47,
  actor_count: 2,
  country_count: 3,
  recent_incidents: [
    {
      id: "intrusion-set--11111111-1111-4111-8111-111111111111",
      name: "Flooded comment sections",
      excerpt: "Coordinated replies swamped local news portals.",
      first_seen: "2023-06-10",
    },
    {
      id: "intrusion-set--22222222-2222-4222-8222-222222222222",
      name: "Cloned ministry site",
      excerpt: "Lookalike domain pushed a forged press release.",
      first_seen: "2023-05-02",
    },
  ],
  top_actors: [
    { name: "Russia", incident_count: 2 },
    { name: "Pravda Network", incident_count: 1 },
  ],
  top_countries: [
    { country: "Ukraine", code: "UA", incident_count: 2 },
    { country: "Moldova", code: "MD", incident_count: 1 },
    { country: "Atlantis", code: null, incident_count: 1 },
  ],
};

function technique(n: number): IncidentDetail["techniques"][number] {
  const code = `T${String(n).padStart(4, "0")}`;
  return {
    id: `attack-pattern--00000000-0000-4000-8000-${String(n).padStart(12, "0")}`,
    name: `Technique ${code}`,
    external_id: code,
    phases: ["plan-strategy"],
  };
}

export const DETAIL_12: IncidentDetail = {
  incident: {
    id: "intrusion-set--33333333-3333-4333-8333-333333333333",
    name: "Bucha massacre at Ukraine",
    description: "Denial campaign around documented atrocities.",
    first_seen: "2022-04-01",
    created: "2022-04-02T08:00:00.000000Z",
    modified: "2022-04-02T08:00:00.000000Z",
  },
  actors: [{ id: "threat-actor--aaaaaaaa-aaaa-4aaa-8aaa-aaaaaaaaaaaa", name: "Russia" }],
  locations: [{ id: "location--bbbbbbbb-bbbb-4bbb-8bbb-bbbbbbbbbbbb", name: "Ukraine", country: "UA" }],
  techniques: Array.from({ length: 12 }, (_, i) => technique(i + 1)),
  relationship_count: 14,
};

export function graphFor(detail: IncidentDetail): GraphView {
  const center = { id: detail.incident.id, type: "intrusion-set", label: detail.incident.name };
  const nodes = [
    center,
    ...detail.actors.map((a) => ({ id: a.id, type: "threat-actor", label: a.name })),
    ...detail.locations.map((l) => ({ id: l.id, type: "location", label: l.name })),
    ...detail.techniques.map((t) => ({ id: t.id, type: "attack-pattern", label: t.name })),
  ];
  const edge = (i: number, target: string, type: string) => ({
    id: `relationship--cccccccc-cccc-4ccc-8ccc-${String(i).padStart(12, "0")}`,
    source: center.id,
    target,
    type,
  });
  let i = 0;
  const edges = [
    ...detail.actors.map((a) => edge(i++, a.id, "attributed-to")),
    ...detail.locations.map((l) => edge(i++, l.id, "targets")),
    ...detail.techniques.map((t) => edge(i++, t.id, "uses")),
  ];
  return { nodes, edges };
}

export const BUNDLE_JSON = JSON.stringify(
  { type: "bundle", id: "bundle--dddddddd-dddd-4ddd-8ddd-dddddddddddd", objects: [] },
  null,
  2,
);

export const PAGE_1: IncidentPage = {
  rows: SEEDED_DASHBOARD.recent_incidents,
  total: 60,
  page: 1,
  page_size: 25,
};

export const CATALOG: CatalogListing = {
  version: "DISARM test slice",
  tactics: [
    {
      phase: "plan-strategy",
      techniques: [
        { external_id: "T0001", name: "Technique T0001", description: "first" },
        { external_id: "T0002", name: "Technique T0002", description: "second" },
      ],
    },
    {
      phase: "develop-content",
      techniques: [{ external_id: "T0010", name: "Technique T0010", description: "third" }],
    },
  ],
};

export const REPORT_2_BAD: ImportReport = {
  accepted: 8,
  rejected: [
    { row: 3, reason: "unknown technique 'T9999'" },
    { row: 7, reason: "empty name" },
  ],
};
