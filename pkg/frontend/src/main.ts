import { ApiClient } from "./api.js";
import { quantileScale, vertexTriangleWeights, EDGE_PALETTE, NODE_PALETTE } from "./color.js";
import { ExplorerController } from "./controller.js";
import { normalizeRect, type Rect } from "./geometry.js";
import { formatCount, magnitude } from "./format.js";
import { ALL_CLASS_IDS, CLASS_LABELS, PATTERNS, type Pattern } from "./types.js";

const apiBase = (window as unknown as { GRAPHLETS_API?: string }).GRAPHLETS_API
  ?? `${window.location.protocol}//${window.location.host}`.replace(/\/$/, "")
  ?? "http://127.0.0.1:8020";

const api = new ApiClient(apiBase.startsWith("http") ? apiBase : "http://127.0.0.1:8020");
const controller = new ExplorerController(api);

const canvas = document.getElementById("graph") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const dropZone = document.getElementById("drop-zone")!;
const header = document.getElementById("graph-header")!;
const errorBanner = document.getElementById("error-banner")!;
const retryBadge = document.getElementById("retry-badge")!;
const countsBody = document.getElementById("counts-body")!;
const gfdChart = document.getElementById("gfd-chart")!;
const legendBox = document.getElementById("legend")!;
const patternSelect = document.getElementById("pattern") as HTMLSelectElement;
const fileInput = document.getElementById("file-input") as HTMLInputElement;

let dragRect: Rect | null = null;
let triangleNodeWeights: Map<number, number> | null = null;

for (const pattern of PATTERNS) {
  const option = document.createElement("option");
  option.value = pattern;
  option.textContent = pattern;
  patternSelect.appendChild(option);
}

function render(): void {
  const s = controller.state;
  errorBanner.textContent = s.error ?? "";
  errorBanner.style.display = s.error ? "block" : "none";
  retryBadge.style.display = s.retryPending ? "inline-block" : "none";
  if (!s.sessionId) return;

  header.textContent = `n=${s.graphN}  m=${s.graphM}  session=${s.sessionId}`;

  // Counts panel: selection counts when a selection exists, else global.
  const counts = s.displayed?.counts ?? s.globalCounts ?? {};
  const scopeLabel = s.displayed
    ? `selection (${s.displayed.nActive} nodes, ${s.displayed.mActive} edges)`
    : "whole graph";
  document.getElementById("counts-scope")!.textContent = scopeLabel;
  countsBody.innerHTML = "";
  for (const cid of ALL_CLASS_IDS) {
    const row = document.createElement("tr");
    row.innerHTML = `<td>${cid}</td><td>${CLASS_LABELS[cid]}</td>` +
      `<td class="num">${formatCount(counts[cid] ?? 0)}</td>`;
    countsBody.appendChild(row);
  }

  // GFD bar chart (k=4 connected classes).
  const gfd = s.displayed ? s.gfdSelection : s.gfdGlobal;
  gfdChart.innerHTML = "";
  if (gfd) {
    gfd.forEach((value, i) => {
      const bar = document.createElement("div");
      bar.className = "bar";
      bar.style.height = `${Math.round(96 * value) + 2}px`;
      bar.title = `g4_${i + 1}: ${value.toFixed(4)}`;
      const label = document.createElement("span");
      label.textContent = `g4_${i + 1}`;
      bar.appendChild(label);
      gfdChart.appendChild(bar);
    });
  }

  drawGraph();
}

function drawGraph(): void {
  const s = controller.state;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!s.positions.size) return;

  const edgeScale = s.edgeWeights ? quantileScale(s.edgeWeights, EDGE_PALETTE) : null;
  ctx.lineWidth = 1;
  s.edges.forEach(([u, v], i) => {
    const p = s.positions.get(u);
    const q = s.positions.get(v);
    if (!p || !q) return;
    ctx.strokeStyle = edgeScale ? edgeScale.colorOf(s.edgeWeights![i]) : "#bbb";
    ctx.beginPath();
    ctx.moveTo(p.x, p.y);
    ctx.lineTo(q.x, q.y);
    ctx.stroke();
  });

  const nodeScale = triangleNodeWeights
    ? quantileScale([...triangleNodeWeights.values()], NODE_PALETTE)
    : null;
  for (const id of s.nodes) {
    const p = s.positions.get(id);
    if (!p) continue;
    const selected = s.intended.has(id);
    ctx.beginPath();
    ctx.arc(p.x, p.y, selected ? 5 : 3.5, 0, 2 * Math.PI);
    ctx.fillStyle = nodeScale && triangleNodeWeights
      ? nodeScale.colorOf(triangleNodeWeights.get(id) ?? 0)
      : "#444";
    ctx.fill();
    if (selected) {
      ctx.strokeStyle = "#ff8800";
      ctx.lineWidth = 2;
      ctx.stroke();
      ctx.lineWidth = 1;
    }
  }

  if (dragRect) {
    const r = normalizeRect(dragRect);
    ctx.strokeStyle = "#ff8800";
    ctx.setLineDash([4, 3]);
    ctx.strokeRect(r.x0, r.y0, r.x1 - r.x0, r.y1 - r.y0);
    ctx.setLineDash([]);
  }
}

function renderLegend(): void {
  const s = controller.state;
  legendBox.innerHTML = "";
  if (!s.edgeWeights || !s.pattern) return;
  const scale = quantileScale(s.edgeWeights, EDGE_PALETTE);
  const title = document.createElement("div");
  title.textContent =
    `edges by ${s.pattern} (min ${magnitude(scale.min)}, max ${magnitude(scale.max)})`;
  legendBox.appendChild(title);
  const bounds = [...scale.breaks, scale.max];
  scale.colors.forEach((color, i) => {
    const item = document.createElement("span");
    item.className = "swatch";
    item.style.background = color;
    item.title = `<= ${bounds[Math.min(i, bounds.length - 1)]}`;
    legendBox.appendChild(item);
  });
}

async function loadFile(file: File): Promise<void> {
  const text = await file.text();
  try {
    await controller.loadGraphText(text);
  } catch {
    return; // error already in state + banner
  }
  dropZone.classList.add("loaded");
  controller.runLayout(canvas.width, canvas.height);
  // Node coloring by triangle participation (server-provided edge weights).
  const weights = await api.getEdgeWeights(controller.state.sessionId!, "triangle");
  triangleNodeWeights = vertexTriangleWeights(weights.edges.map(
    ([u, v]) => [u, v] as [number, number]), weights.weights);
  render();
}

controller.onChange(() => {
  render();
  renderLegend();
});

dropZone.addEventListener("dragover", (event) => event.preventDefault());
dropZone.addEventListener("drop", (event) => {
  event.preventDefault();
  const file = event.dataTransfer?.files?.[0];
  if (file) void loadFile(file);
});
fileInput.addEventListener("change", () => {
  const file = fileInput.files?.[0];
  if (file) void loadFile(file);
});

patternSelect.addEventListener("change", () => {
  const pattern = patternSelect.value as Pattern;
  if (pattern) void controller.colorByPattern(pattern);
});

canvas.addEventListener("mousedown", (event) => {
  const bounds = canvas.getBoundingClientRect();
  const x = event.clientX - bounds.left;
  const y = event.clientY - bounds.top;
  dragRect = { x0: x, y0: y, x1: x, y1: y };
});
canvas.addEventListener("mousemove", (event) => {
  if (!dragRect) return;
  const bounds = canvas.getBoundingClientRect();
  dragRect.x1 = event.clientX - bounds.left;
  dragRect.y1 = event.clientY - bounds.top;
  controller.dragSelect(dragRect); // batcher coalesces to one send per 100 ms
  drawGraph();
});
window.addEventListener("mouseup", () => {
  if (!dragRect) return;
  controller.dragSelect(dragRect);
  dragRect = null;
  drawGraph();
});

render();
