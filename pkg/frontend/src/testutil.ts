// Test doubles: a fetch implementation serving recorded service
// responses (generated from the real scoring engine by
// scripts/gen_fixtures.py), so UI tests exercise the actual wire shapes
// without a live backend.

import catalogCvss3 from "./fixtures/catalog_cvss3.json";
import catalogRvss1 from "./fixtures/catalog_rvss1.json";
import scoreCase1 from "./fixtures/score_case1_rvss.json";
import scoreCase1SafetyNone from "./fixtures/score_case1_safety_none.json";
import scoreCase2 from "./fixtures/score_case2_rvss.json";
import scoreCase3 from "./fixtures/score_case3_rvss.json";
import scoreCase4 from "./fixtures/score_case4_rvss.json";
import scoreEnvWorked from "./fixtures/score_env_worked_cvss.json";
import type { ApiError, CatalogDocument, ScoreReport } from "./types.js";

export const CATALOGS: Record<string, CatalogDocument> = {
  cvss3: catalogCvss3 as CatalogDocument,
  rvss1: catalogRvss1 as CatalogDocument,
};

// keyed by the exact vector text a client may post
export const SCORES: Record<string, ScoreReport> = {};
for (const report of [
  scoreCase1, scoreCase2, scoreCase3, scoreCase4,
  scoreEnvWorked, scoreCase1SafetyNone,
] as ScoreReport[]) {
  SCORES[report.canonicalVector] = report;
}

export const TABLE1_TRIPLES: Record<string, [number, number, number]> = {
  [ (scoreCase1 as ScoreReport).canonicalVector ]: [7.7, 7.7, 7.7],
  [ (scoreCase2 as ScoreReport).canonicalVector ]: [10.0, 10.0, 10.0],
  [ (scoreCase3 as ScoreReport).canonicalVector ]: [10.0, 10.0, 10.0],
  [ (scoreCase4 as ScoreReport).canonicalVector ]: [5.9, 5.9, 5.9],
};

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export interface FakeServiceOptions {
  /** catalog requests fail with this status when set */
  catalogFailure?: number;
  /** record of posted score vectors, in order */
  posted?: string[];
}

export function fakeServiceFetch(options: FakeServiceOptions = {}) {
  return async (input: RequestInfo | URL, init?: RequestInit): Promise<Response> => {
    const url = String(input);
    const catalogMatch = url.match(/\/api\/v1\/catalog\/(\w+)$/);
    if (catalogMatch) {
      if (options.catalogFailure) {
        return jsonResponse(
          { status: options.catalogFailure, code: "InternalError", detail: "boom" },
          options.catalogFailure,
        );
      }
      const doc = CATALOGS[catalogMatch[1]];
      if (!doc) {
        return jsonResponse(
          { status: 404, code: "NotFound", detail: "unknown scheme" }, 404);
      }
      return jsonResponse(doc);
    }
    if (url.endsWith("/api/v1/score")) {
      const body = JSON.parse(String(init?.body ?? "{}"));
      const vector: string = body.vector;
      options.posted?.push(vector);
      const report = SCORES[vector];
      if (report) {
        return jsonResponse(report);
      }
      if (vector.includes("Y:QQ")) {
        const unknownValue: ApiError = {
          status: 400,
          code: "UnknownValue",
          detail: "unknown value 'QQ' for metric 'Y'",
          offendingToken: "QQ",
          offendingMetric: "Y",
        };
        return jsonResponse(unknownValue, 400);
      }
      const error: ApiError = {
        status: 400,
        code: "IllegalComposition",
        detail: `illegal attack-vector composition for ${vector}`,
      };
      return jsonResponse(error, 400);
    }
    return jsonResponse({ status: 404, code: "NotFound", detail: "no route" }, 404);
  };
}
