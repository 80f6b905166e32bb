// Calculator state and the pure logic around it. Everything here is
// side-effect free so the behaviour is unit-testable without a DOM.
//
// Optional metrics default to Not Defined without being part of the
// vector; they join the vector only when the analyst picks a concrete
// value or an imported vector carried them explicitly (including an
// explicit X, which the codec preserves). Picking X by hand returns a
// metric to its default, keeping the built vector minimal.

import type { CatalogDocument, MetricEntry, ScoreReport } from "./types.js";

export interface CalculatorState {
  catalog: CatalogDocument;
  /** metric key -> chosen code, mandatory metrics only (unset = absent) */
  mandatory: Record<string, string>;
  /** metric key -> code for optional metrics explicitly in the vector */
  explicitOptional: Record<string, string>;
}

export function newState(catalog: CatalogDocument): CalculatorState {
  return { catalog, mandatory: {}, explicitOptional: {} };
}

export function metricByKey(catalog: CatalogDocument, key: string): MetricEntry | undefined {
  return catalog.metrics.find((m) => m.key === key);
}

export function setMetric(state: CalculatorState, key: string, code: string): CalculatorState {
  const metric = metricByKey(state.catalog, key);
  if (!metric) {
    return state;
  }
  if (metric.mandatory) {
    const mandatory = { ...state.mandatory };
    if (code === "") {
      delete mandatory[key];
    } else {
      mandatory[key] = code;
    }
    return { ...state, mandatory };
  }
  const explicitOptional = { ...state.explicitOptional };
  if (code === "X" || code === "") {
    delete explicitOptional[key];
  } else {
    explicitOptional[key] = code;
  }
  return { ...state, explicitOptional };
}

export function selectedCode(state: CalculatorState, key: string): string {
  const metric = metricByKey(state.catalog, key);
  if (!metric) {
    return "";
  }
  if (metric.mandatory) {
    return state.mandatory[key] ?? "";
  }
  return state.explicitOptional[key] ?? "X";
}

export function missingMandatory(state: CalculatorState): string[] {
  return state.catalog.metrics
    .filter((m) => m.mandatory && !(m.key in state.mandatory))
    .map((m) => m.key);
}

export function allMandatorySet(state: CalculatorState): boolean {
  return missingMandatory(state).length === 0;
}

/** Vector string in catalog order, or null while mandatory metrics are unset. */
export function buildVector(state: CalculatorState): string | null {
  if (!allMandatorySet(state)) {
    return null;
  }
  const parts: string[] = [state.catalog.scheme];
  for (const metric of state.catalog.metrics) {
    const code = metric.mandatory
      ? state.mandatory[metric.key]
      : state.explicitOptional[metric.key];
    if (code !== undefined) {
      parts.push(`${metric.key}:${code}`);
    }
  }
  return parts.join("/");
}

/**
 * Populate selections from a canonical vector string returned by the
 * service (validation already happened server-side). Composite attack
 * vectors stay whole; the AV selector lists composites as options.
 */
export function stateFromCanonical(
  catalog: CatalogDocument,
  canonicalVector: string,
): CalculatorState {
  let state = newState(catalog);
  const segments = canonicalVector.split("/").slice(1);
  for (const segment of segments) {
    const colon = segment.indexOf(":");
    const key = segment.slice(0, colon);
    const code = segment.slice(colon + 1);
    const metric = metricByKey(catalog, key);
    if (!metric) {
      continue;
    }
    if (metric.mandatory) {
      state = { ...state, mandatory: { ...state.mandatory, [key]: code } };
    } else {
      // keep explicit X distinct from absent, mirroring the codec
      state = {
        ...state,
        explicitOptional: { ...state.explicitOptional, [key]: code },
      };
    }
  }
  return state;
}

/** Tokens of an attack-vector option, for display (e.g. ANPR -> [AN, PR]). */
export function avTokens(metric: MetricEntry, code: string): string[] {
  const composition = metric.compositions?.find((c) => c.code === code);
  if (composition) {
    return composition.tokens;
  }
  return [code];
}

const SEVERITY_COLORS: Record<string, string> = {
  None: "#3f9d4f",
  Low: "#d8c229",
  Medium: "#e08a00",
  High: "#d43a2f",
  Critical: "#8c1007",
};

export function severityColor(label: string): string {
  return SEVERITY_COLORS[label] ?? "#777777";
}

export function formatScore(value: number): string {
  return value.toFixed(1);
}

export function formatTriple(report: ScoreReport): string {
  const s = report.scores;
  return `(${formatScore(s.base)}, ${formatScore(s.temporal)}, ${formatScore(s.environmental)})`;
}
