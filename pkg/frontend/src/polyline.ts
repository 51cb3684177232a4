/** Editable 1d stress-target model: a piecewise-linear curve over the
 * element axis, controlled by a handful of draggable anchor points. The
 * sampled curve (one value per diagonal element) is what gets POSTed. */

export interface Anchor {
  x: number; // element index, 0..n-1
  y: number; // stress value, >= 0
}

export class PolylineModel {
  anchors: Anchor[];

  constructor(public n: number, initial?: number[]) {
    if (initial && initial.length === n) {
      // seed anchors from an existing curve at regular intervals
      const k = 9;
      this.anchors = [];
      for (let i = 0; i < k; i++) {
        const x = Math.round((i * (n - 1)) / (k - 1));
        this.anchors.push({ x, y: initial[x] });
      }
    } else {
      this.anchors = [
        { x: 0, y: 1.0 },
        { x: Math.floor((n - 1) / 2), y: 0.5 },
        { x: n - 1, y: 1.0 },
      ];
    }
  }

  /** Move the anchor nearest to element index x to (x, y); endpoints keep
   * their x so the curve always spans the full axis. */
  drag(x: number, y: number): void {
    const xc = Math.max(0, Math.min(this.n - 1, Math.round(x)));
    const yc = Math.max(0, y);
    let best = 0;
    let bestDist = Infinity;
    this.anchors.forEach((a, i) => {
      const d = Math.abs(a.x - xc);
      if (d < bestDist) {
        bestDist = d;
        best = i;
      }
    });
    const isEndpoint = best === 0 || best === this.anchors.length - 1;
    this.anchors[best] = { x: isEndpoint ? this.anchors[best].x : xc, y: yc };
    this.anchors.sort((a, b) => a.x - b.x);
  }

  /** Linear interpolation through the anchors, one sample per element. */
  sample(): number[] {
    const out = new Array<number>(this.n);
    let seg = 0;
    for (let i = 0; i < this.n; i++) {
      while (seg + 1 < this.anchors.length - 1 && this.anchors[seg + 1].x <= i) {
        seg += 1;
      }
      const a = this.anchors[seg];
      const b = this.anchors[Math.min(seg + 1, this.anchors.length - 1)];
      if (b.x === a.x) {
        out[i] = a.y;
      } else {
        const t = Math.max(0, Math.min(1, (i - a.x) / (b.x - a.x)));
        out[i] = a.y + t * (b.y - a.y);
      }
    }
    return out;
  }
}
