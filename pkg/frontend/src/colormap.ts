/** Color scales for the canvas heatmaps. Densities render as grayscale
 * (1 = solid = dark). Stress fields use a fixed-cap sequential map: the
 * maximum of the scale is 7.5, matching the reference plots, so frames are
 * comparable across requests. */

export const STRESS_CAP = 7.5;

export type Rgb = [number, number, number];

export function densityColor(rho: number): Rgb {
  const v = Math.max(0, Math.min(1, rho));
  const g = Math.round(255 * (1 - v));
  return [g, g, g];
}

/** Piecewise-linear blue->yellow->red ramp clamped to [0, STRESS_CAP]. */
export function stressColor(value: number, cap: number = STRESS_CAP): Rgb {
  const t = Math.max(0, Math.min(1, value / cap));
  if (t < 0.5) {
    const u = t / 0.5;
    return [
      Math.round(20 + u * (250 - 20)),
      Math.round(40 + u * (220 - 40)),
      Math.round(160 * (1 - u) + 60 * u),
    ];
  }
  const u = (t - 0.5) / 0.5;
  return [
    Math.round(250 - u * 30),
    Math.round(220 * (1 - u) + 30 * u),
    Math.round(60 * (1 - u) + 30 * u),
  ];
}

export function gridToImageData(
  grid: number[],
  ny: number,
  nx: number,
  color: (v: number) => Rgb,
): Uint8ClampedArray<ArrayBuffer> {
  const out = new Uint8ClampedArray(new ArrayBuffer(ny * nx * 4));
  for (let i = 0; i < ny * nx; i++) {
    const [r, g, b] = color(grid[i]);
    out[4 * i] = r;
    out[4 * i + 1] = g;
    out[4 * i + 2] = b;
    out[4 * i + 3] = 255;
  }
  return out;
}
