// Glue generated by: wasm-bindgen --target web --out-dir www/pkg <ogt_web.wasm>
import init, { construct, domination, compressibility } from "./pkg/ogt_web.js";

const $ = (id) => document.getElementById(id);
const out = $("out");
const canvas = $("view");
const ctx = canvas.getContext("2d");

function show(text, isError) {
  out.textContent = text;
  out.className = isError ? "err" : "";
}

function arrow(x1, y1, x2, y2, r, color, width) {
  const a = Math.atan2(y2 - y1, x2 - x1);
  const sx = x1 + r * Math.cos(a), sy = y1 + r * Math.sin(a);
  const ex = x2 - r * Math.cos(a), ey = y2 - r * Math.sin(a);
  ctx.strokeStyle = color;
  ctx.fillStyle = color;
  ctx.lineWidth = width;
  ctx.beginPath();
  ctx.moveTo(sx, sy);
  ctx.lineTo(ex, ey);
  ctx.stroke();
  ctx.beginPath();
  ctx.moveTo(ex, ey);
  ctx.lineTo(ex - 9 * Math.cos(a - 0.35), ey - 9 * Math.sin(a - 0.35));
  ctx.lineTo(ex - 9 * Math.cos(a + 0.35), ey - 9 * Math.sin(a + 0.35));
  ctx.closePath();
  ctx.fill();
}

// vertices on a circle, arcs grey; `highlight` arcs drawn on top in red
function draw(g, highlight = []) {
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const n = g.n, cx = canvas.width / 2, cy = canvas.height / 2;
  const R = Math.min(cx, cy) - 30, r = n > 30 ? 6 : 11;
  const pos = [...Array(n).keys()].map((i) => {
    const t = -Math.PI / 2 + (2 * Math.PI * i) / Math.max(n, 1);
    return [cx + R * Math.cos(t), cy + R * Math.sin(t)];
  });
  for (const [u, v] of g.arcs) arrow(...pos[u], ...pos[v], r, "#9aa", 1);
  for (const [u, v] of highlight) arrow(...pos[u], ...pos[v], r, "#c22", 2.5);
  ctx.font = "11px sans-serif";
  ctx.textAlign = "center";
  ctx.textBaseline = "middle";
  pos.forEach(([x, y], i) => {
    ctx.fillStyle = "#fff";
    ctx.strokeStyle = "#333";
    ctx.lineWidth = 1;
    ctx.beginPath();
    ctx.arc(x, y, r, 0, 2 * Math.PI);
    ctx.fill();
    ctx.stroke();
    if (n <= 30) {
      ctx.fillStyle = "#000";
      ctx.fillText(String(i), x, y);
    }
  });
}

function run(f) {
  try {
    f();
  } catch (e) {
    show(String(e), true);
  }
}

await init();

$("draw").onclick = () => run(() => {
  const g = JSON.parse(construct($("expr").value));
  draw(g);
  const lines = [`${g.n} vertices, ${g.arcs.length} arcs`, `digraph6 ${g.digraph6}`];
  if (g.hex) lines.push(`hex ${g.hex}`);
  lines.push(g.longest_path === null ? "has a directed cycle" : `longest path: ${g.longest_path} vertices`);
  show(lines.join("\n"));
});

$("dom").onclick = () => run(() => {
  const d = JSON.parse(domination($("expr").value));
  draw(d.tournament, d.undominated);
  show([
    `undominated arcs (red): ${d.undominated.map(([u, v]) => `${u}->${v}`).join(" ") || "none"}`,
    `structure: ${d.shape.replace("_", " ")}`,
    JSON.stringify(d.classification),
  ].join("\n"));
});

$("tau").onclick = () => {
  show("sweeping...");
  // let the message paint before the synchronous sweep
  setTimeout(() => run(() => {
    const maxk = Number($("maxk").value);
    const r = JSON.parse(compressibility($("expr").value, maxk));
    const head = r.exact ? `tau = ${r.tau}` : `tau >= ${r.tau} (no level up to ${maxk} works)`;
    const lines = [head, `longest path: ${r.p} vertices`];
    for (const [k, w] of Object.entries(r.witnesses)) lines.push(`level ${k}: ${w} receives no homomorphism`);
    show(lines.join("\n"));
  }), 20);
};

$("draw").click();
