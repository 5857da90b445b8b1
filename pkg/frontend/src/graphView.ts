import type { ViewState } from "./state.js";
import type { GraphPayload } from "./types.js";

export const LAYOUT_SEED = 1337;

const SVG_NS = "http://www.w3.org/2000/svg";

export interface Point {
  x: number;
  y: number;
}

/** Small deterministic PRNG so the layout is reproducible for a given seed. */
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

/**
 * Force-directed layout: seeded circular start, then pairwise repulsion,
 * springs along edges (heavier edges pull tighter), and a weak centering
 * pull. Pure function of (graph, size, seed).
 */
export function layoutGraph(
  graph: GraphPayload,
  width: number,
  height: number,
  seed: number = LAYOUT_SEED,
): Map<string, Point> {
  const nodes = graph.nodes;
  const positions = new Map<string, Point>();
  if (nodes.length === 0) return positions;

  const rand = mulberry32(seed);
  const cx = width / 2;
  const cy = height / 2;
  const radius = 0.35 * Math.min(width, height);
  nodes.forEach((term, i) => {
    const angle = (2 * Math.PI * i) / nodes.length;
    positions.set(term, {
      x: cx + radius * Math.cos(angle) + (rand() - 0.5) * 10,
      y: cy + radius * Math.sin(angle) + (rand() - 0.5) * 10,
    });
  });
  if (nodes.length === 1) return positions;

  const repulsion = (width * height) / nodes.length;
  const springBase = 0.45 * Math.min(width, height);
  for (let iter = 0; iter < 200; iter++) {
    const cooling = 1 - iter / 200;
    const shift = new Map<string, Point>(nodes.map((t) => [t, { x: 0, y: 0 }]));

    for (let i = 0; i < nodes.length; i++) {
      for (let j = i + 1; j < nodes.length; j++) {
        const a = positions.get(nodes[i])!;
        const b = positions.get(nodes[j])!;
        const dx = a.x - b.x;
        const dy = a.y - b.y;
        const dist2 = Math.max(dx * dx + dy * dy, 1);
        const push = repulsion / dist2;
        const dist = Math.sqrt(dist2);
        shift.get(nodes[i])!.x += (dx / dist) * push;
        shift.get(nodes[i])!.y += (dy / dist) * push;
        shift.get(nodes[j])!.x -= (dx / dist) * push;
        shift.get(nodes[j])!.y -= (dy / dist) * push;
      }
    }

    for (const edge of graph.edges) {
      const a = positions.get(edge.a);
      const b = positions.get(edge.b);
      if (!a || !b) continue;
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const dist = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const rest = springBase * (1.2 - 0.8 * Math.min(edge.weight, 1));
      const pull = 0.02 * (dist - rest);
      shift.get(edge.a)!.x += (dx / dist) * pull * dist;
      shift.get(edge.a)!.y += (dy / dist) * pull * dist;
      shift.get(edge.b)!.x -= (dx / dist) * pull * dist;
      shift.get(edge.b)!.y -= (dy / dist) * pull * dist;
    }

    for (const term of nodes) {
      const pos = positions.get(term)!;
      const delta = shift.get(term)!;
      pos.x += (delta.x + (cx - pos.x) * 0.03) * 0.05 * cooling;
      pos.y += (delta.y + (cy - pos.y) * 0.03) * 0.05 * cooling;
      pos.x = Math.min(Math.max(pos.x, 30), width - 30);
      pos.y = Math.min(Math.max(pos.y, 24), height - 24);
    }
  }
  return positions;
}

/** SVG rendering of the accepted-term similarity graph. */
export function renderGraphView(state: ViewState, width = 800, height = 520): HTMLElement {
  const root = document.createElement("section");
  root.className = "graph-view";
  const view = state.view;
  if (view === null) return root;

  const graph = view.graph;
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "similarity-graph");
  const positions = layoutGraph(graph, width, height);

  for (const edge of graph.edges) {
    const a = positions.get(edge.a)!;
    const b = positions.get(edge.b)!;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("class", "graph-edge");
    line.setAttribute("x1", a.x.toFixed(1));
    line.setAttribute("y1", a.y.toFixed(1));
    line.setAttribute("x2", b.x.toFixed(1));
    line.setAttribute("y2", b.y.toFixed(1));
    line.setAttribute("stroke-width", (0.5 + 3 * edge.weight).toFixed(2));
    line.dataset.weight = edge.weight.toFixed(2);
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = `${edge.a} ~ ${edge.b}: ${edge.weight.toFixed(2)}`;
    line.append(title);
    svg.append(line);
  }

  const displayByTerm = new Map(view.accepted.map((e) => [e.term, e.display]));
  for (const term of graph.nodes) {
    const pos = positions.get(term)!;
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", "graph-node");
    group.dataset.term = term;
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", pos.x.toFixed(1));
    circle.setAttribute("cy", pos.y.toFixed(1));
    circle.setAttribute("r", "7");
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", pos.x.toFixed(1));
    label.setAttribute("y", (pos.y - 12).toFixed(1));
    label.setAttribute("text-anchor", "middle");
    label.textContent = displayByTerm.get(term) ?? term;
    group.append(circle, label);
    svg.append(group);
  }

  root.append(svg);
  return root;
}
