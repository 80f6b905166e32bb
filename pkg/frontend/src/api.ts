// Thin client over the scoring service; the UI consumes only
// /api/v1/catalog and /api/v1/score.

import type { ApiError, CatalogDocument, SchemeSlug, ScoreReport } from "./types.js";

export class ScoreApiError extends Error {
  readonly code: string;
  readonly offendingToken?: string;
  readonly offendingMetric?: string;

  constructor(body: ApiError) {
    super(body.detail);
    this.code = body.code;
    this.offendingToken = body.offendingToken;
    this.offendingMetric = body.offendingMetric;
  }

  banner(): string {
    return `${this.code}: ${this.message}`;
  }
}

export async function fetchCatalog(slug: SchemeSlug): Promise<CatalogDocument> {
  const response = await fetch(`/api/v1/catalog/${slug}`);
  if (!response.ok) {
    throw new Error(`catalog fetch failed (${response.status})`);
  }
  return response.json();
}

export async function postScore(
  vector: string,
  signal?: AbortSignal,
): Promise<ScoreReport> {
  const response = await fetch("/api/v1/score", {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify({ vector }),
    signal,
  });
  if (!response.ok) {
    throw new ScoreApiError((await response.json()) as ApiError);
  }
  return response.json();
}
