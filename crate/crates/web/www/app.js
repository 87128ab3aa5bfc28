import init, { decompose, cayley, check_vertex } from "./pkg/lambek_web.js";

const $ = (id) => document.getElementById(id);

function tableHtml(t) {
  const head = t.columns.map((c) => `<th>${c}</th>`).join("");
  const body = t.rows
    .map((r) => `<tr>${r.map((c) => `<td>${c}</td>`).join("")}</tr>`)
    .join("");
  return `<p>${t.title}</p><table><tr>${head}</tr>${body}</table>`;
}

function reportHtml(report) {
  const checks = report.payload.checks
    .map((c) => `<p class="${c.pass ? "pass" : "fail"}">${c.pass ? "PASS" : "FAIL"} ${c.name}: ${c.detail}</p>`)
    .join("");
  return report.payload.tables.map(tableHtml).join("") + checks;
}

function show(out, f) {
  try {
    out.innerHTML = reportHtml(JSON.parse(f()));
  } catch (e) {
    out.innerHTML = `<pre class="fail">${e}</pre>`;
  }
}

let current = null;

function drawCayley() {
  let report;
  try {
    report = JSON.parse(cayley($("group").value));
  } catch (e) {
    $("hover").textContent = String(e);
    return;
  }
  current = report.payload.group;
  const n = current.order;
  const canvas = $("heatmap");
  const ctx = canvas.getContext("2d");
  const cell = canvas.width / n;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  for (let r = 0; r < n; r++) {
    for (let c = 0; c < n; c++) {
      const hue = (360 * current.cayley[r][c]) / n;
      ctx.fillStyle = `hsl(${hue}, 65%, 55%)`;
      ctx.fillRect(c * cell, r * cell, Math.ceil(cell), Math.ceil(cell));
    }
  }
  $("hover").textContent = `${current.name}: order ${n}, ${current.classes.length} conjugacy classes`;
}

function hover(ev) {
  if (!current) return;
  const canvas = $("heatmap");
  const rect = canvas.getBoundingClientRect();
  const n = current.order;
  const c = Math.floor(((ev.clientX - rect.left) / rect.width) * n);
  const r = Math.floor(((ev.clientY - rect.top) / rect.height) * n);
  if (r < 0 || c < 0 || r >= n || c >= n) return;
  const e = current.elements;
  $("hover").textContent = `${e[r]} * ${e[c]} = ${e[current.cayley[r][c]]}`;
}

await init();
$("go-decompose").onclick = () =>
  show($("decompose-out"), () => decompose($("target").value, $("second").value, $("mode").value));
$("go-vertex").onclick = () => show($("vertex-out"), () => check_vertex($("vertex").value));
$("go-cayley").onclick = drawCayley;
$("heatmap").onmousemove = hover;
drawCayley();
