/** Thin fetch client for the three service endpoints.
 *
 * identify() keeps the raw response text alongside the parsed body so a
 * download can be byte-identical to what the service sent.
 */

import type {
  HealthOut,
  IdentifyRequest,
  IdentifyResponse,
  MeterInfo,
} from "./types.js";

export interface IdentifyResult {
  body: IdentifyResponse;
  raw: string;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string,
  ) {
    super(`service error ${status}: ${detail}`);
  }
}

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<Response>;

export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  async identify(request: IdentifyRequest): Promise<IdentifyResult> {
    const response = await this.fetchImpl(`${this.baseUrl}/identify`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(request),
    });
    const raw = await response.text();
    if (!response.ok) {
      throw new ApiError(response.status, extractDetail(raw));
    }
    return { body: JSON.parse(raw) as IdentifyResponse, raw };
  }

  async meters(): Promise<MeterInfo[]> {
    const response = await this.fetchImpl(`${this.baseUrl}/meters`);
    const raw = await response.text();
    if (!response.ok) {
      throw new ApiError(response.status, extractDetail(raw));
    }
    return (JSON.parse(raw) as { meters: MeterInfo[] }).meters;
  }

  async health(): Promise<HealthOut> {
    const response = await this.fetchImpl(`${this.baseUrl}/health`);
    return (await response.json()) as HealthOut;
  }
}

function extractDetail(raw: string): string {
  try {
    const parsed = JSON.parse(raw) as { detail?: unknown };
    if (typeof parsed.detail === "string") return parsed.detail;
    if (parsed.detail !== undefined) return JSON.stringify(parsed.detail);
  } catch {
    /* not JSON */
  }
  return raw.slice(0, 200);
}
