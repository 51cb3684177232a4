/** DOM wiring for the explorer: sliders drive debounced decodes, inverse
 * targets produce geometries with an out-of-range banner, and the verify
 * button overlays the FEM diagonal against the requested target. Every
 * number on screen comes from a service payload. */

import { ApiClient, ApiError, type RegistryInfo } from "./api";
import { Debouncer } from "./debounce";
import { PolylineModel } from "./polyline";
import { curveCoords, drawCurves, drawHeatmap } from "./render";
import { SequenceGate } from "./sequence";
import { ExplorerState } from "./state";

const api = new ApiClient("");
const gates = {
  decode: new SequenceGate(),
  overlay: new SequenceGate(),
  inverse: new SequenceGate(),
  verify: new SequenceGate(),
};

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function toast(message: string): void {
  const box = el<HTMLDivElement>("toasts");
  const item = document.createElement("div");
  item.className = "toast";
  item.textContent = message;
  box.appendChild(item);
  setTimeout(() => item.remove(), 4200);
}

async function guard<T>(name: string, state: ExplorerState, p: Promise<T>):
    Promise<T | null> {
  state.inFlight[name] = true;
  try {
    return await p;
  } catch (err) {
    toast(err instanceof ApiError ? `${err.status}: ${err.message}` : String(err));
    return null;
  } finally {
    state.inFlight[name] = false;
  }
}

function fmt(x: number | null | undefined, digits = 4): string {
  return x == null ? "–" : x.toFixed(digits);
}

async function boot(): Promise<void> {
  let registry: RegistryInfo;
  try {
    registry = await api.models();
  } catch (err) {
    el<HTMLDivElement>("app").textContent =
      `service unreachable: ${err instanceof Error ? err.message : err}`;
    return;
  }
  const state = new ExplorerState(registry);
  const { ny, nx } = registry.mesh;
  const geomCanvas = el<HTMLCanvasElement>("geom-canvas");
  const stressCanvas = el<HTMLCanvasElement>("stress-canvas");
  const invCanvas = el<HTMLCanvasElement>("inverse-canvas");
  const curveCanvas = el<HTMLCanvasElement>("curve-canvas");
  const banner = el<HTMLDivElement>("banner");
  const liveStress = el<HTMLInputElement>("live-stress");

  // ---- latent explore ----------------------------------------------------
  const sliderBox = el<HTMLDivElement>("sliders");
  const sliderEls: HTMLInputElement[] = [];
  registry.alpha_min.forEach((lo, i) => {
    const hi = registry.alpha_max[i];
    const wrap = document.createElement("label");
    wrap.className = "slider";
    wrap.textContent = `α${i}`;
    const input = document.createElement("input");
    input.type = "range";
    input.min = String(lo);
    input.max = String(hi);
    input.step = String((hi - lo) / 400);
    input.value = String(state.alpha[i]);
    const readout = document.createElement("span");
    readout.textContent = fmt(state.alpha[i], 3);
    input.addEventListener("input", () => {
      const v = state.setAlpha(i, Number(input.value));
      readout.textContent = fmt(v, 3);
      decodeDebounced.call();
    });
    wrap.append(input, readout);
    sliderBox.appendChild(wrap);
    sliderEls.push(input);
  });

  async function decodeNow(): Promise<void> {
    const ticket = gates.decode.issue();
    const resp = await guard("decode", state, api.decode([...state.alpha]));
    if (!resp || !gates.decode.isCurrent(ticket)) return;
    state.lastDecode = resp;
    drawHeatmap(geomCanvas, resp.grid, ny, nx, "density");
    el<HTMLSpanElement>("vf-readout").textContent = fmt(resp.volume_fraction);
    el<HTMLSpanElement>("clamp-readout").textContent = resp.clamped ? "yes" : "no";
    if (liveStress.checked && registry.qois.includes("2d")) {
      const t2 = gates.overlay.issue();
      const stress = await guard("overlay", state,
        api.predictDirect2d(resp.grid, resp.shape));
      if (stress && gates.overlay.isCurrent(t2)) {
        drawHeatmap(stressCanvas, stress.grid, ny, nx, "stress");
      }
    }
  }
  const decodeDebounced = new Debouncer(() => void decodeNow(), 150);

  // ---- inverse design ------------------------------------------------------
  const target = new PolylineModel(ny);
  const qoiSelect = el<HTMLSelectElement>("inverse-qoi");
  const scalarInput = el<HTMLInputElement>("scalar-target");
  if (registry.s_min !== undefined && registry.s_max !== undefined) {
    scalarInput.value = String(0.5 * (registry.s_min + registry.s_max));
  }

  function redrawTarget(): void {
    const curves = [{
      values: target.sample(),
      style: { color: "#1f77b4", label: "target σ" },
    }];
    if (state.lastVerify && state.lastTarget) {
      curves.push({
        values: state.lastVerify.vm_diag,
        style: { color: "#e8a117", dash: [6, 3], label: "FEM σ" } as never,
      });
    }
    drawCurves(curveCanvas, curves, target.anchors);
  }

  let dragging = false;
  curveCanvas.addEventListener("mousedown", () => (dragging = true));
  window.addEventListener("mouseup", () => (dragging = false));
  curveCanvas.addEventListener("mousemove", (evt) => {
    if (!dragging) return;
    const yMax = Math.max(...target.sample(), 1e-9) * 1.1;
    const { x, y } = curveCoords(curveCanvas, evt, ny, yMax);
    target.drag(x, y);
    state.lastVerify = null;
    state.lastDiscrepancy = null;
    redrawTarget();
  });

  async function runInverse(): Promise<void> {
    const ticket = gates.inverse.issue();
    const qoi = qoiSelect.value;
    let resp;
    if (qoi === "s") {
      resp = await guard("inverse", state,
        api.inverseScalar(Number(scalarInput.value)));
    } else {
      resp = await guard("inverse", state, api.inverse1d(target.sample()));
    }
    if (!resp || !gates.inverse.isCurrent(ticket)) return;
    state.lastInverse = resp;
    drawHeatmap(invCanvas, resp.grid, ny, nx, "density");
    el<HTMLSpanElement>("inv-vf").textContent = fmt(resp.volume_fraction);
    banner.hidden = !resp.out_of_range;
  }
  el<HTMLButtonElement>("inverse-run").addEventListener("click", () => void runInverse());

  // ---- FEM verify ----------------------------------------------------------
  async function runVerify(): Promise<void> {
    if (!state.lastInverse) {
      toast("run an inverse prediction first");
      return;
    }
    const ticket = gates.verify.issue();
    const requested = target.sample();
    const resp = await guard("verify", state,
      api.femVerify(state.lastInverse.grid, state.lastInverse.shape, requested));
    if (!resp || !gates.verify.isCurrent(ticket)) return;
    state.lastVerify = resp;
    state.lastTarget = requested;
    // displayed exactly as the service reported it
    state.lastDiscrepancy = resp.discrepancy ?? null;
    el<HTMLSpanElement>("discrepancy").textContent = fmt(state.lastDiscrepancy);
    el<HTMLSpanElement>("vm-max").textContent = fmt(resp.vm_max);
    el<HTMLSpanElement>("compliance").textContent = fmt(resp.compliance, 2);
    redrawTarget();
  }
  el<HTMLButtonElement>("verify-run").addEventListener("click", () => void runVerify());

  // ---- interpolation -------------------------------------------------------
  const markSelectA = el<HTMLSelectElement>("mark-a");
  const markSelectB = el<HTMLSelectElement>("mark-b");
  el<HTMLButtonElement>("save-mark").addEventListener("click", () => {
    const mark = state.saveBookmark(`state ${state.bookmarks.length + 1}`);
    for (const sel of [markSelectA, markSelectB]) {
      const opt = document.createElement("option");
      opt.value = String(state.bookmarks.length - 1);
      opt.textContent = `${mark.name} [${mark.alpha.map((a) => a.toFixed(2)).join(", ")}]`;
      sel.appendChild(opt);
    }
  });
  el<HTMLInputElement>("t-scrub").addEventListener("input", async (evt) => {
    const a = state.bookmarks[Number(markSelectA.value)];
    const b = state.bookmarks[Number(markSelectB.value)];
    if (!a || !b) return;
    const t = Number((evt.target as HTMLInputElement).value);
    const resp = await guard("interp", state, api.interpolate(a.alpha, b.alpha, t));
    if (!resp) return;
    resp.alpha.forEach((v, i) => {
      state.setAlpha(i, v);
      sliderEls[i].value = String(state.alpha[i]);
    });
    decodeDebounced.call();
  });

  redrawTarget();
  await decodeNow();
}

void boot();
