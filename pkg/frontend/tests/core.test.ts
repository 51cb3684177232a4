import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient, ApiError } from "../src/api";
import { STRESS_CAP, densityColor, stressColor } from "../src/colormap";
import { Debouncer } from "../src/debounce";
import { PolylineModel } from "../src/polyline";
import { SequenceGate } from "../src/sequence";
import { ExplorerState } from "../src/state";

const REGISTRY = {
  models: [],
  mesh: { ny: 4, nx: 4 },
  alpha_min: [-1.0, -2.0],
  alpha_max: [1.0, 2.0],
  qois: ["s", "1d", "2d"],
  s_min: 1.0,
  s_max: 2.0,
};

describe("SequenceGate", () => {
  it("discards stale responses", () => {
    const gate = new SequenceGate();
    const first = gate.issue();
    const second = gate.issue();
    expect(gate.isCurrent(first)).toBe(false);
    expect(gate.isCurrent(second)).toBe(true);
  });
});

describe("Debouncer", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("collapses rapid calls into the trailing one", () => {
    const fn = vi.fn();
    const d = new Debouncer(fn, 150);
    d.call(1);
    vi.advanceTimersByTime(100);
    d.call(2);
    vi.advanceTimersByTime(100);
    d.call(3);
    expect(fn).not.toHaveBeenCalled();
    vi.advanceTimersByTime(150);
    expect(fn).toHaveBeenCalledTimes(1);
    expect(fn).toHaveBeenCalledWith(3);
  });

  it("cancel drops the pending call", () => {
    const fn = vi.fn();
    const d = new Debouncer(fn, 150);
    d.call();
    expect(d.pending).toBe(true);
    d.cancel();
    vi.advanceTimersByTime(400);
    expect(fn).not.toHaveBeenCalled();
  });
});

describe("ExplorerState", () => {
  it("clamps sliders to the training hull", () => {
    const state = new ExplorerState(REGISTRY);
    expect(state.setAlpha(0, 5.0)).toBe(1.0);
    expect(state.setAlpha(0, -5.0)).toBe(-1.0);
    expect(state.setAlpha(1, 0.5)).toBe(0.5);
  });

  it("starts at the hull midpoint", () => {
    const state = new ExplorerState(REGISTRY);
    expect(state.alpha).toEqual([0.0, 0.0]);
  });

  it("bookmarks copy the current alpha", () => {
    const state = new ExplorerState(REGISTRY);
    state.setAlpha(0, 0.7);
    const mark = state.saveBookmark("a");
    state.setAlpha(0, -0.3);
    expect(mark.alpha[0]).toBe(0.7);
  });

  it("out_of_range mirrors the last inverse payload", () => {
    const state = new ExplorerState(REGISTRY);
    expect(state.outOfRange).toBe(false);
    state.lastInverse = {
      grid: [], shape: [4, 4], volume_fraction: 0.5,
      clamped: false, out_of_range: true,
    };
    expect(state.outOfRange).toBe(true);
  });
});

describe("colormap", () => {
  it("stress scale caps at 7.5", () => {
    expect(STRESS_CAP).toBe(7.5);
    expect(stressColor(7.5)).toEqual(stressColor(100.0));
    expect(stressColor(0)).not.toEqual(stressColor(7.5));
  });

  it("density renders solid as dark", () => {
    expect(densityColor(1)).toEqual([0, 0, 0]);
    expect(densityColor(0)).toEqual([255, 255, 255]);
    expect(densityColor(2)).toEqual([0, 0, 0]); // clamped
  });
});

describe("PolylineModel", () => {
  it("samples a straight segment linearly", () => {
    const p = new PolylineModel(5);
    p.anchors = [{ x: 0, y: 0 }, { x: 4, y: 4 }];
    expect(p.sample()).toEqual([0, 1, 2, 3, 4]);
  });

  it("dragging moves the nearest anchor and keeps order", () => {
    const p = new PolylineModel(9);
    p.drag(4, 2.5);
    const mid = p.anchors.find((a) => a.x === 4);
    expect(mid?.y).toBe(2.5);
    const xs = p.anchors.map((a) => a.x);
    expect([...xs].sort((a, b) => a - b)).toEqual(xs);
  });

  it("endpoint anchors keep their x", () => {
    const p = new PolylineModel(9);
    p.drag(0.4, 3.0);
    expect(p.anchors[0].x).toBe(0);
    expect(p.anchors[0].y).toBe(3.0);
  });

  it("negative values clamp to zero", () => {
    const p = new PolylineModel(9);
    p.drag(4, -1.0);
    expect(Math.min(...p.sample())).toBeGreaterThanOrEqual(0);
  });

  it("seeds anchors from an existing curve", () => {
    const curve = Array.from({ length: 9 }, (_, i) => i * 0.5);
    const p = new PolylineModel(9, curve);
    expect(p.sample()[8]).toBeCloseTo(4.0);
  });
});

describe("ApiClient", () => {
  function mockFetch(status: number, body: unknown) {
    return vi.fn(async (_input: string, _init?: RequestInit) =>
      new Response(JSON.stringify(body), { status }));
  }

  it("posts the decode payload and parses the response", async () => {
    const fetchImpl = mockFetch(200, {
      grid: [0, 1], shape: [1, 2], volume_fraction: 0.5, clamped: false,
    });
    const api = new ApiClient("http://x", fetchImpl);
    const resp = await api.decode([0.1, 0.2]);
    expect(resp.volume_fraction).toBe(0.5);
    expect(fetchImpl).toHaveBeenCalledWith("http://x/v1/geometry/decode",
      expect.objectContaining({
        method: "POST",
        body: JSON.stringify({ alpha: [0.1, 0.2] }),
      }));
  });

  it("sends the verify target so the service reports the discrepancy", async () => {
    const fetchImpl = mockFetch(200, {
      vm_grid: [], shape: [1, 1], vm_diag: [1], vm_max: 1,
      compliance: 2, discrepancy: 0.125,
    });
    const api = new ApiClient("", fetchImpl);
    const resp = await api.femVerify([0.5], [1, 1], [1.0]);
    expect(resp.discrepancy).toBe(0.125);
    const body = JSON.parse(fetchImpl.mock.calls[0][1]?.body as string);
    expect(body.target).toEqual([1.0]);
  });

  it("surfaces service errors with status codes", async () => {
    const api = new ApiClient("", mockFetch(422, { error: "bad shape" }));
    await expect(api.decode([1])).rejects.toThrowError(ApiError);
    await expect(api.decode([1])).rejects.toMatchObject({
      status: 422,
      message: "bad shape",
    });
  });

  it("hits the expected endpoints", async () => {
    const fetchImpl = mockFetch(200, { alpha: [1] });
    const api = new ApiClient("", fetchImpl);
    await api.interpolate([0], [1], 0.5);
    expect(fetchImpl.mock.calls[0][0]).toBe("/v1/latent/interpolate");
    await api.inverseScalar(1.5);
    expect(fetchImpl.mock.calls[1][0]).toBe("/v1/predict/inverse/s");
    await api.models();
    expect(fetchImpl.mock.calls[2][0]).toBe("/v1/models");
    expect(fetchImpl.mock.calls[2][1]?.method).toBe("GET");
  });
});
