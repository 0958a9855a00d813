/** Thin fetch client for the review API; same-origin, JSON in and out. */

import type {
  DiscrepancyRow,
  DistributionPayload,
  RunSummary,
  ScoreSubmission,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

// Same-origin in the browser; tests point this at a live server.
let apiBase = "";

export function setApiBase(base: string): void {
  apiBase = base.replace(/\/$/, "");
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  let response: Response;
  try {
    response = await fetch(apiBase + path, init);
  } catch {
    throw new ApiError(0, "server unreachable");
  }
  if (!response.ok) {
    let detail = `HTTP ${response.status}`;
    try {
      const body = (await response.json()) as { detail?: string };
      if (body.detail) detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export function getRuns(): Promise<RunSummary[]> {
  return request<RunSummary[]>("/api/runs");
}

export function getDiscrepancies(runId: string): Promise<DiscrepancyRow[]> {
  return request<DiscrepancyRow[]>(
    `/api/runs/${encodeURIComponent(runId)}/discrepancies`,
  );
}

export function getDistribution(runId: string): Promise<DistributionPayload> {
  return request<DistributionPayload>(
    `/api/runs/${encodeURIComponent(runId)}/distribution`,
  );
}

export function postScore(
  runId: string,
  arxivId: string,
  submission: ScoreSubmission,
): Promise<{ arxiv_id: string; quality: number }> {
  return request(
    `/api/runs/${encodeURIComponent(runId)}/rows/${encodeURIComponent(arxivId)}/score`,
    {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(submission),
    },
  );
}
