/** Canvas drawing helpers: pixel heatmaps and the target-vs-FEM curve
 * overlay. Pure functions of the data they are given. */

import { densityColor, gridToImageData, stressColor, type Rgb } from "./colormap";

export function drawHeatmap(
  canvas: HTMLCanvasElement,
  grid: number[],
  ny: number,
  nx: number,
  kind: "density" | "stress",
): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const color: (v: number) => Rgb = kind === "density" ? densityColor : stressColor;
  const img = new ImageData(gridToImageData(grid, ny, nx, color), nx, ny);
  const off = document.createElement("canvas");
  off.width = nx;
  off.height = ny;
  off.getContext("2d")!.putImageData(img, 0, 0);
  ctx.imageSmoothingEnabled = false;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.drawImage(off, 0, 0, canvas.width, canvas.height);
}

export interface CurveStyle {
  color: string;
  dash?: number[];
  label: string;
}

/** Plot one or more curves over the element axis with a shared y-scale. */
export function drawCurves(
  canvas: HTMLCanvasElement,
  curves: { values: number[]; style: CurveStyle }[],
  anchors?: { x: number; y: number }[],
): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const w = canvas.width;
  const h = canvas.height;
  ctx.clearRect(0, 0, w, h);
  ctx.fillStyle = "#fafafa";
  ctx.fillRect(0, 0, w, h);
  const all = curves.flatMap((c) => c.values);
  if (!all.length) return;
  const yMax = Math.max(...all, 1e-9) * 1.1;
  const n = curves[0].values.length;
  const px = (i: number) => (i / (n - 1)) * (w - 20) + 10;
  const py = (v: number) => h - 12 - (v / yMax) * (h - 24);

  for (const { values, style } of curves) {
    ctx.strokeStyle = style.color;
    ctx.setLineDash(style.dash ?? []);
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    values.forEach((v, i) => {
      if (i === 0) ctx.moveTo(px(i), py(v));
      else ctx.lineTo(px(i), py(v));
    });
    ctx.stroke();
  }
  ctx.setLineDash([]);
  if (anchors) {
    ctx.fillStyle = "#1f77b4";
    for (const a of anchors) {
      ctx.beginPath();
      ctx.arc(px(a.x), py(a.y), 4, 0, 2 * Math.PI);
      ctx.fill();
    }
  }
  // legend
  let lx = 14;
  for (const { style } of curves) {
    ctx.strokeStyle = style.color;
    ctx.setLineDash(style.dash ?? []);
    ctx.beginPath();
    ctx.moveTo(lx, 12);
    ctx.lineTo(lx + 18, 12);
    ctx.stroke();
    ctx.setLineDash([]);
    ctx.fillStyle = "#333";
    ctx.font = "11px sans-serif";
    ctx.fillText(style.label, lx + 22, 15);
    lx += 26 + ctx.measureText(style.label).width + 14;
  }
}

/** Map a mouse event on the curve canvas back to (element index, value). */
export function curveCoords(
  canvas: HTMLCanvasElement,
  evt: { offsetX: number; offsetY: number },
  n: number,
  yMax: number,
): { x: number; y: number } {
  const w = canvas.width;
  const h = canvas.height;
  const x = ((evt.offsetX - 10) / (w - 20)) * (n - 1);
  const y = ((h - 12 - evt.offsetY) / (h - 24)) * yMax;
  return { x: Math.max(0, Math.min(n - 1, x)), y: Math.max(0, y) };
}
