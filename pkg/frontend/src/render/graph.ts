import type { GraphView } from "../types";
import { esc } from "./layout";

const NODE_COLORS: Record<string, string> = {
  "intrusion-set": "#e8b44c",
  "threat-actor": "#e06c75",
  location: "#61afaf",
  "attack-pattern": "#8fa1e3",
};

const W = 720;
const H = 520;
const R = 200;

/**
 * Static node-link rendering of an incident graph: the incident in the
 * centre, everything else on a ring.  The layout is deterministic — no
 * physics — so the same payload always produces the same markup.
 */
export function renderGraph(graph: GraphView): string {
  if (graph.nodes.length === 0) {
    return `<div class="empty">No graph to display.</div>`;
  }

  const center = graph.nodes.find((n) => n.type === "intrusion-set") ?? graph.nodes[0];
  const ring = graph.nodes.filter((n) => n.id !== center.id);

  const pos = new Map<string, { x: number; y: number }>();
  pos.set(center.id, { x: W / 2, y: H / 2 });
  ring.forEach((node, i) => {
    const angle = (2 * Math.PI * i) / Math.max(ring.length, 1) - Math.PI / 2;
    pos.set(node.id, {
      x: W / 2 + R * Math.cos(angle),
      y: H / 2 + R * Math.sin(angle),
    });
  });

  const edges = graph.edges
    .map((edge) => {
      const a = pos.get(edge.source);
      const b = pos.get(edge.target);
      if (!a || !b) return "";
      const mx = (a.x + b.x) / 2;
      const my = (a.y + b.y) / 2;
      return (
        `<g class="edge" data-type="${esc(edge.type)}">` +
        `<line x1="${a.x.toFixed(1)}" y1="${a.y.toFixed(1)}" x2="${b.x.toFixed(1)}" y2="${b.y.toFixed(1)}"/>` +
        `<text x="${mx.toFixed(1)}" y="${my.toFixed(1)}">${esc(edge.type)}</text>` +
        `</g>`
      );
    })
    .join("");

  const nodes = graph.nodes
    .map((node) => {
      const p = pos.get(node.id)!;
      const fill = NODE_COLORS[node.type] ?? "#9aa0ab";
      const r = node.id === center.id ? 22 : 14;
      const label = node.label.length > 28 ? node.label.slice(0, 27) + "…" : node.label;
      return (
        `<g class="node node-${esc(node.type)}" data-id="${esc(node.id)}">` +
        `<circle cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="${r}" fill="${fill}">` +
        `<title>${esc(node.type)}: ${esc(node.label)}</title></circle>` +
        `<text x="${p.x.toFixed(1)}" y="${(p.y + r + 13).toFixed(1)}" text-anchor="middle">${esc(label)}</text>` +
        `</g>`
      );
    })
    .join("");

  return `
  <div class="graph" data-nodes="${graph.nodes.length}" data-edges="${graph.edges.length}">
    <svg viewBox="0 0 ${W} ${H}" role="img" aria-label="Relationship graph">${edges}${nodes}</svg>
  </div>`;
}
