// Wire types for the scoring service API.

export type SchemeSlug = "cvss3" | "rvss1";
export type SchemePrefix = "CVSS:3.0" | "RVSS:1.0";

export interface ValueEntry {
  code: string;
  label: string;
  weight: number;
  weightScopeChanged?: number;
  aliases?: string[];
}

export interface CompositionEntry {
  code: string;
  tokens: string[];
  weight: number;
}

export interface MetricEntry {
  key: string;
  name: string;
  group: "Base" | "Temporal" | "Environmental";
  subgroup: "Exploitability" | "Impact" | null;
  mandatory: boolean;
  composable: boolean;
  values: ValueEntry[];
  compositions?: CompositionEntry[];
}

export interface CatalogDocument {
  scheme: SchemePrefix;
  metrics: MetricEntry[];
}

export interface ScoreReport {
  scheme: SchemePrefix;
  vector: string;
  canonicalVector: string;
  scores: { base: number; temporal: number; environmental: number };
  severities: { base: string; temporal: string; environmental: string };
  subscores?: {
    exploitability: number;
    iscBase: number;
    impact: number;
    mExploitability: number;
    iscModified: number;
    mImpact: number;
  };
}

export interface ApiError {
  status: number;
  code: string;
  detail: string;
  offendingToken?: string;
  offendingMetric?: string;
}
