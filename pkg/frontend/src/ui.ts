// DOM rendering for the calculator. Panels are driven entirely by the
// catalog document; no metric, weight or severity number is hardcoded.

import type { MetricEntry, ScoreReport } from "./types.js";
import {
  avTokens,
  formatScore,
  metricByKey,
  missingMandatory,
  selectedCode,
  severityColor,
  type CalculatorState,
} from "./state.js";

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

function optionLabel(metric: MetricEntry, code: string): string {
  const value = metric.values.find((v) => v.code === code);
  if (value) {
    return `${value.label} (${value.code}) = ${value.weight}`;
  }
  const composition = metric.compositions?.find((c) => c.code === code);
  if (composition) {
    const tokens = avTokens(metric, code);
    const weights = tokens.map((t) => {
      const entry = metric.values.find((v) => v.code === t);
      return entry ? `${entry.weight}` : "?";
    });
    return `${tokens.join(" + ")} (${code}) = ${weights.join(" x ")}`;
  }
  return code;
}

function metricSelect(
  metric: MetricEntry,
  state: CalculatorState,
  onChange: (key: string, code: string) => void,
): HTMLSelectElement {
  const select = el("select");
  select.id = `metric-${metric.key}`;
  select.dataset.key = metric.key;

  if (metric.mandatory) {
    const placeholder = el("option", undefined, "select...");
    placeholder.value = "";
    select.appendChild(placeholder);
  }
  for (const value of metric.values) {
    const option = el("option", undefined, optionLabel(metric, value.code));
    option.value = value.code;
    select.appendChild(option);
  }
  for (const composition of metric.compositions ?? []) {
    const option = el("option", undefined, optionLabel(metric, composition.code));
    option.value = composition.code;
    select.appendChild(option);
  }
  select.value = selectedCode(state, metric.key);
  select.addEventListener("change", () => onChange(metric.key, select.value));
  return select;
}

export function renderPanels(
  container: HTMLElement,
  state: CalculatorState,
  onChange: (key: string, code: string) => void,
): void {
  container.textContent = "";
  for (const group of ["Base", "Temporal", "Environmental"] as const) {
    const metrics = state.catalog.metrics.filter((m) => m.group === group);
    if (metrics.length === 0) {
      continue;
    }
    const panel = el("section", "metric-group");
    panel.dataset.group = group;
    panel.appendChild(el("h2", undefined, group));

    let currentSubgroup: string | null | undefined;
    let list = el("div", "metric-list");
    panel.appendChild(list);
    for (const metric of metrics) {
      if (metric.subgroup !== currentSubgroup) {
        currentSubgroup = metric.subgroup;
        if (metric.subgroup) {
          panel.appendChild(el("h3", "subgroup", metric.subgroup));
          list = el("div", "metric-list");
          panel.appendChild(list);
        }
      }
      const row = el("label", "metric-row");
      row.dataset.metric = metric.key;
      const caption = el("span", "metric-name",
        `${metric.name} (${metric.key})${metric.mandatory ? " *" : ""}`);
      row.appendChild(caption);
      row.appendChild(metricSelect(metric, state, onChange));
      list.appendChild(row);
    }
    container.appendChild(panel);
  }
}

export function renderIncomplete(card: HTMLElement, missing: string[]): void {
  card.textContent = "";
  card.appendChild(el("p", "incomplete",
    `incomplete - set ${missing.join(", ")} to score`));
}

export function renderReport(
  card: HTMLElement,
  report: ScoreReport,
  showSubscores: boolean,
): void {
  card.textContent = "";
  const rows = el("div", "score-rows");
  const entries: Array<[string, number, string]> = [
    ["base", report.scores.base, report.severities.base],
    ["temporal", report.scores.temporal, report.severities.temporal],
    ["environmental", report.scores.environmental, report.severities.environmental],
  ];
  for (const [name, value, severity] of entries) {
    const row = el("div", "score-row");
    row.dataset.score = name;
    row.appendChild(el("span", "score-name", name));
    row.appendChild(el("span", "score-value", formatScore(value)));
    const badge = el("span", "severity-badge", severity);
    badge.style.backgroundColor = severityColor(severity);
    row.appendChild(badge);
    rows.appendChild(row);
  }
  card.appendChild(rows);

  const canonical = el("div", "canonical");
  const code = el("code", "canonical-vector", report.canonicalVector);
  canonical.appendChild(code);
  const copy = el("button", "copy-button", "copy");
  copy.type = "button";
  copy.addEventListener("click", () => {
    void navigator.clipboard?.writeText(report.canonicalVector);
  });
  canonical.appendChild(copy);
  card.appendChild(canonical);

  if (showSubscores && report.subscores) {
    const table = el("dl", "subscores");
    const labels: Array<[string, number]> = [
      ["exploitability", report.subscores.exploitability],
      ["impact sub-score", report.subscores.iscBase],
      ["impact", report.subscores.impact],
      ["modified exploitability", report.subscores.mExploitability],
      ["modified impact sub-score", report.subscores.iscModified],
      ["modified impact", report.subscores.mImpact],
    ];
    for (const [label, value] of labels) {
      table.appendChild(el("dt", undefined, label));
      table.appendChild(el("dd", undefined, value.toFixed(6)));
    }
    card.appendChild(table);
  }
}

export function renderErrorBanner(banner: HTMLElement, message: string | null): void {
  banner.textContent = message ?? "";
  banner.hidden = message === null;
}

/** Re-sync every select with the state (after imports or example loads). */
export function syncSelects(container: HTMLElement, state: CalculatorState): void {
  for (const select of container.querySelectorAll("select")) {
    const key = select.dataset.key;
    if (key && metricByKey(state.catalog, key)) {
      select.value = selectedCode(state, key);
    }
  }
}

/**
 * Flag the metric panel a rejected token belongs to, with the token
 * rendered inline next to it; pass null to clear all marks.
 */
export function markMetricError(
  container: HTMLElement,
  error: { metric?: string; token?: string } | null,
): void {
  for (const note of container.querySelectorAll(".inline-error")) {
    note.remove();
  }
  for (const row of container.querySelectorAll(".metric-error")) {
    row.classList.remove("metric-error");
  }
  if (!error) {
    return;
  }
  let row: HTMLElement | null = null;
  if (error.metric) {
    row = container.querySelector<HTMLElement>(`[data-metric="${error.metric}"]`);
  } else if (error.token) {
    for (const select of container.querySelectorAll("select")) {
      if (select.value === error.token) {
        row = select.closest<HTMLElement>(".metric-row");
        break;
      }
    }
  }
  if (row) {
    row.classList.add("metric-error");
    row.appendChild(el("span", "inline-error", `rejected: ${error.token ?? "value"}`));
  }
}

export { missingMandatory };
