import init, { classifyClass, heightLandscape, minimaTable } from "./pkg/cxj_wasm_demo.js";

const $ = (id) => document.getElementById(id);

function colour(v, lo, hi) {
  const x = Math.max(0, Math.min(1, (v - lo) / (hi - lo || 1)));
  // dark blue at the minimum, pale yellow far from it
  return [Math.round(30 + 225 * x), Math.round(40 + 200 * x), Math.round(120 + 40 * (1 - x))];
}

function drawSlice() {
  const g = parseInt($("g").value, 10);
  const canvas = $("slice");
  const ctx = canvas.getContext("2d");
  let land;
  try {
    // window centred on t*, wide enough to show the parabola
    const probe = JSON.parse(heightLandscape(g, $("la").value, $("lb").value, $("lc").value, 0, 1, 1, 2, 2));
    const ts = probe.t_star_f;
    const half = Math.max(2 * Math.abs(ts), 1 / g, 0.05);
    const tmin = ts - half, tmax = ts + half;
    const smax = Math.max(g * half * half, 3 * probe.s_star_f, 0.05);
    land = JSON.parse(heightLandscape(g, $("la").value, $("lb").value, $("lc").value,
      tmin, tmax, smax, canvas.width / 2, canvas.height / 2));
    Object.assign(land, { tmin, tmax, smax });
  } catch (e) {
    $("minimum").innerHTML = `<span class="err">${e}</span>`;
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    return;
  }
  const { cols, rows, values } = land;
  const finite = values.filter((v) => v !== null);
  const lo = Math.min(...finite), hi = Math.max(...finite);
  const img = ctx.createImageData(cols, rows);
  values.forEach((v, i) => {
    const [r, gg, b] = v === null ? [200, 200, 200] : colour(v, lo, hi);
    img.data.set([r, gg, b, 255], 4 * i);
  });
  const off = new OffscreenCanvas(cols, rows);
  off.getContext("2d").putImageData(img, 0, 0);
  ctx.imageSmoothingEnabled = false;
  ctx.drawImage(off, 0, 0, canvas.width, canvas.height);

  const px = (t) => ((t - land.tmin) / (land.tmax - land.tmin)) * canvas.width;
  const py = (s) => (1 - s / land.smax) * canvas.height;
  ctx.strokeStyle = "#000";
  ctx.beginPath();
  for (let i = 0; i <= 200; i++) {
    const t = land.tmin + ((land.tmax - land.tmin) * i) / 200;
    const s = g * t * t;
    i ? ctx.lineTo(px(t), py(s)) : ctx.moveTo(px(t), py(s));
  }
  ctx.stroke();
  ctx.fillStyle = "#d00";
  ctx.beginPath();
  ctx.arc(px(land.t_star_f), py(land.s_star_f), 5, 0, 2 * Math.PI);
  ctx.fill();

  $("tmin").textContent = land.tmin.toFixed(3);
  $("tmax").textContent = land.tmax.toFixed(3);
  $("smax").textContent = land.smax.toFixed(3);
  const w = land.witness ? `f_{${land.witness.p},${land.witness.q}}^*θ = ${land.witness.class}` : "none";
  const h = land.h_curve ? land.h_curve.exact : "undefined";
  $("minimum").textContent =
    `infimum  ${land.infimum.exact}  (${land.infimum.approx})\n` +
    `t*       ${land.t_star.exact}\n` +
    `s*       ${land.s_star.exact}\n` +
    `witness  ${w}\n` +
    `h(C_K)   ${h}`;
  canvas.onmousemove = (ev) => {
    const r = canvas.getBoundingClientRect();
    const t = land.tmin + ((ev.clientX - r.left) / canvas.width) * (land.tmax - land.tmin);
    const s = land.smax * (1 - (ev.clientY - r.top) / canvas.height);
    canvas.title = `t = ${t.toFixed(4)}, s = ${s.toFixed(4)}`;
  };
}

function doClassify() {
  try {
    const v = JSON.parse(classifyClass(parseInt($("g").value, 10), $("ca").value, $("cb").value, $("cc").value));
    const flags = [v.is_ample && "ample", v.is_nef && "nef", v.is_big && "big", v.is_psef && "pseudo-effective"]
      .filter(Boolean).join(", ") || "none";
    $("verdict").textContent = `${v.class}: ${v.region}${v.apex ? " (apex)" : ""}; ${flags}; ab − gc² = ${v.defect.exact}`;
  } catch (e) {
    $("verdict").innerHTML = `<span class="err">${e}</span>`;
  }
}

function doTable() {
  const t = $("table");
  try {
    const rows = JSON.parse(minimaTable(parseInt($("gmin").value, 10), parseInt($("gmax").value, 10)));
    t.innerHTML = "<tr><th>g</th><th>e₁ = e₂</th><th>h(C_K)</th><th>(e₁+e₂)/2 − h</th><th>h ≥ (e₁+e₂)/2?</th></tr>" +
      rows.map((r) => `<tr><td>${r.g}</td><td>${r.e1.exact}</td><td>${r.h.exact}</td>` +
        `<td>${r.margin.exact}</td><td>${r.second_inequality_holds ? "yes" : "no"}</td></tr>`).join("");
  } catch (e) {
    t.innerHTML = `<tr><td class="err">${e}</td></tr>`;
  }
}

function resetPolarization() {
  $("la").value = $("g").value;
  $("lb").value = "1";
  $("lc").value = "1";
  drawSlice();
}

await init();
for (const id of ["la", "lb", "lc"]) $(id).addEventListener("change", drawSlice);
$("g").addEventListener("change", () => { drawSlice(); doClassify(); });
$("reset-l").addEventListener("click", resetPolarization);
$("classify").addEventListener("click", doClassify);
$("table-go").addEventListener("click", doTable);
drawSlice();
doClassify();
doTable();
