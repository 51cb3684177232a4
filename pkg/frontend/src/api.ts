/** Typed client for the explorer HTTP service. All numbers displayed in the
 * UI come straight from these payloads; nothing is recomputed client-side. */

export interface ModelInfo {
  kind: string;
  flavor?: string;
  latent?: number;
  k_max?: number;
  train_loss?: number | null;
  r2_train?: number | null;
  in_dim?: number;
  out_dim?: number;
}

export interface RegistryInfo {
  models: ModelInfo[];
  mesh: { ny: number; nx: number };
  alpha_min: number[];
  alpha_max: number[];
  qois: string[];
  s_min?: number;
  s_max?: number;
}

export interface DecodeResponse {
  grid: number[];
  shape: [number, number];
  volume_fraction: number;
  clamped: boolean;
}

export interface InverseResponse extends DecodeResponse {
  out_of_range: boolean;
}

export interface FemVerifyResponse {
  vm_grid: number[];
  shape: [number, number];
  vm_diag: number[];
  vm_max: number;
  compliance: number;
  /** relative L2 between the posted target curve and vm_diag; present only
   * when a target was sent */
  discrepancy?: number;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, body?: unknown): Promise<T> {
    const init: RequestInit = body === undefined
      ? { method: "GET" }
      : {
          method: "POST",
          headers: { "Content-Type": "application/json" },
          body: JSON.stringify(body),
        };
    const resp = await this.fetchImpl(this.baseUrl + path, init);
    const text = await resp.text();
    if (!resp.ok) {
      let message = text;
      try {
        message = (JSON.parse(text) as { error?: string }).error ?? text;
      } catch {
        /* non-JSON error body */
      }
      throw new ApiError(resp.status, message);
    }
    return JSON.parse(text) as T;
  }

  models(): Promise<RegistryInfo> {
    return this.request<RegistryInfo>("/v1/models");
  }

  decode(alpha: number[]): Promise<DecodeResponse> {
    return this.request<DecodeResponse>("/v1/geometry/decode", { alpha });
  }

  encode(grid: number[], shape: [number, number]): Promise<{ alpha: number[] }> {
    return this.request("/v1/geometry/encode", { grid, shape });
  }

  predictDirect2d(grid: number[], shape: [number, number]):
      Promise<{ grid: number[]; shape: [number, number] }> {
    return this.request("/v1/predict/direct/2d", { grid, shape });
  }

  predictDirectScalar(grid: number[], shape: [number, number]): Promise<{ value: number }> {
    return this.request("/v1/predict/direct/s", { grid, shape });
  }

  inverseScalar(value: number): Promise<InverseResponse> {
    return this.request("/v1/predict/inverse/s", { value });
  }

  inverse1d(curve: number[]): Promise<InverseResponse> {
    return this.request("/v1/predict/inverse/1d", { curve });
  }

  interpolate(alphaA: number[], alphaB: number[], t: number): Promise<{ alpha: number[] }> {
    return this.request("/v1/latent/interpolate", {
      alpha_a: alphaA,
      alpha_b: alphaB,
      t,
    });
  }

  femVerify(grid: number[], shape: [number, number], target?: number[]):
      Promise<FemVerifyResponse> {
    const body: Record<string, unknown> = { grid, shape };
    if (target) body.target = target;
    return this.request("/v1/fem/verify", body);
  }
}
