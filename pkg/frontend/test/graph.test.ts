import { describe, expect, it } from "vitest";

import { renderGraph } from "../src/render/graph";
import { DETAIL_12, graphFor } from "./fixtures";

function mount(html: string): HTMLElement {
  const div = document.createElement("div");
  div.innerHTML = html;
  return div;
}

describe("graph rendering", () => {
  const graph = graphFor(DETAIL_12);

  it("draws every node and edge it is given", () => {
    const dom = mount(renderGraph(graph));
    expect(dom.querySelectorAll(".node").length).toBe(15);
    expect(dom.querySelectorAll(".edge").length).toBe(14);
    expect(dom.querySelector(".graph")?.getAttribute("data-nodes")).toBe("15");
    expect(dom.querySelector(".graph")?.getAttribute("data-edges")).toBe("14");
  });

  it("puts the incident at the centre of the viewBox", () => {
    const dom = mount(renderGraph(graph));
    const center = dom.querySelector(".node-intrusion-set circle");
    expect(center?.getAttribute("cx")).toBe("360.0");
    expect(center?.getAttribute("cy")).toBe("260.0");
  });

  it("is deterministic for the same payload", () => {
    expect(renderGraph(graph)).toBe(renderGraph(graph));
  });

  it("labels edges with their relationship type", () => {
    const html = renderGraph(graph);
    expect(html).toContain('data-type="attributed-to"');
    expect(html).toContain('data-type="targets"');
    expect(html).toContain('data-type="uses"');
  });

  it("survives an empty graph", () => {
    const dom = mount(renderGraph({ nodes: [], edges: [] }));
    expect(dom.querySelector(".empty")).not.toBeNull();
  });

  it("skips edges whose endpoints are unknown rather than crashing", () => {
    const dom = mount(
      renderGraph({
        nodes: [{ id: "a", type: "intrusion-set", label: "A" }],
        edges: [{ id: "r", source: "a", target: "ghost", type: "uses" }],
      }),
    );
    expect(dom.querySelectorAll(".node").length).toBe(1);
    expect(dom.querySelectorAll(".edge line").length).toBe(0);
  });
});
