import type {
  ApiErrorBody, CountsResponse, GfdResponse, SelectionOpWire,
  SelectionResponse, UploadResponse, WeightsResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
    public detail?: ApiErrorBody["detail"],
  ) {
    super(message);
  }
}

async function parseError(response: Response): Promise<never> {
  let body: ApiErrorBody | null = null;
  try {
    body = (await response.json()) as ApiErrorBody;
  } catch {
    /* non-JSON error body */
  }
  throw new ApiError(
    response.status,
    body?.code ?? "http_error",
    body?.message ?? `HTTP ${response.status}`,
    body?.detail,
  );
}

/** Thin typed client over the service endpoints. The UI never computes
 * graphlet counts itself; every number it shows came through here. */
export class ApiClient {
  constructor(private baseUrl: string, private fetchFn: typeof fetch = fetch) {}

  private async get<T>(path: string): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`);
    if (!response.ok) await parseError(response);
    return (await response.json()) as T;
  }

  async uploadGraph(text: string): Promise<UploadResponse> {
    const response = await this.fetchFn(`${this.baseUrl}/graphs`, {
      method: "POST",
      headers: { "content-type": "text/plain" },
      body: text,
    });
    if (!response.ok) await parseError(response);
    return (await response.json()) as UploadResponse;
  }

  getCounts(id: string): Promise<CountsResponse> {
    return this.get(`/graphs/${id}/counts`);
  }

  getGfd(id: string, k = 4, scope = "connected"): Promise<GfdResponse> {
    return this.get(`/graphs/${id}/gfd?k=${k}&scope=${scope}`);
  }

  async sendSelectionOps(
    id: string, ops: SelectionOpWire[], clientSeq: number,
  ): Promise<SelectionResponse> {
    const response = await this.fetchFn(`${this.baseUrl}/graphs/${id}/selection/ops`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ ops, client_seq: clientSeq }),
    });
    if (!response.ok) await parseError(response);
    return (await response.json()) as SelectionResponse;
  }

  getEdgeWeights(id: string, pattern: string): Promise<WeightsResponse> {
    return this.get(`/graphs/${id}/edges/weights?pattern=${pattern}`);
  }

  audit(id: string): Promise<{ consistent: boolean }> {
    return this.get(`/graphs/${id}/audit`);
  }
}
