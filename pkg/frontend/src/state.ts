/** Explorer state container: slider values clamped to the train hull, the
 * latest response payloads per workflow, and saved latent bookmarks for
 * interpolation. Pure data + transitions; DOM wiring lives in main.ts. */

import type {
  DecodeResponse,
  FemVerifyResponse,
  InverseResponse,
  RegistryInfo,
} from "./api";

export type Qoi = "s" | "1d" | "2d";

export interface Bookmark {
  name: string;
  alpha: number[];
}

export class ExplorerState {
  alpha: number[] = [];
  qoi: Qoi = "1d";
  lastDecode: DecodeResponse | null = null;
  lastInverse: InverseResponse | null = null;
  lastVerify: FemVerifyResponse | null = null;
  /** the 1d target the last verify was compared against */
  lastTarget: number[] | null = null;
  /** relative-L2 discrepancy as reported by the service round trip; the UI
   * displays this value unmodified */
  lastDiscrepancy: number | null = null;
  bookmarks: Bookmark[] = [];
  inFlight: Record<string, boolean> = {};

  constructor(public registry: RegistryInfo) {
    this.alpha = registry.alpha_min.map(
      (lo, i) => 0.5 * (lo + registry.alpha_max[i]),
    );
  }

  /** Clamp a slider value into the training hull extent. */
  setAlpha(index: number, value: number): number {
    const lo = this.registry.alpha_min[index];
    const hi = this.registry.alpha_max[index];
    const v = Math.max(lo, Math.min(hi, value));
    this.alpha[index] = v;
    return v;
  }

  saveBookmark(name: string): Bookmark {
    const mark = { name, alpha: [...this.alpha] };
    this.bookmarks.push(mark);
    return mark;
  }

  get outOfRange(): boolean {
    return this.lastInverse?.out_of_range ?? false;
  }
}
