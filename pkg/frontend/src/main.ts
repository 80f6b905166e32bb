// Bootstraps the calculator: catalog-driven panels, debounced live
// scoring through the service, vector import, and the four example
// cases from the built-in comparison corpus.

import { fetchCatalog, postScore, ScoreApiError } from "./api.js";
import { ScoreLoop } from "./scoreLoop.js";
import {
  allMandatorySet,
  buildVector,
  missingMandatory,
  newState,
  setMetric,
  stateFromCanonical,
  type CalculatorState,
} from "./state.js";
import {
  markMetricError,
  renderErrorBanner,
  renderIncomplete,
  renderPanels,
  renderReport,
  syncSelects,
} from "./ui.js";
import type { CatalogDocument, SchemePrefix, SchemeSlug, ScoreReport } from "./types.js";

const SLUG_BY_PREFIX: Record<SchemePrefix, SchemeSlug> = {
  "CVSS:3.0": "cvss3",
  "RVSS:1.0": "rvss1",
};

// Example cases from the built-in corpus (see `rvss compare --builtin`).
export const EXAMPLES: Array<{ label: string; vector: string }> = [
  {
    label: "1 - RoboPlus missing authorization",
    vector: "RVSS:1.0/AV:ANPR/AC:L/PR:N/UI:N/Y:T/S:U/C:N/I:H/A:H/H:E",
  },
  {
    label: "2 - VGo command injection",
    vector: "RVSS:1.0/AV:AN/AC:L/PR:N/UI:N/Y:O/S:U/C:H/I:H/A:H/H:E",
  },
  {
    label: "3 - UR Modbus buffer overflow",
    vector: "RVSS:1.0/AV:AN/AC:L/PR:N/UI:N/Y:T/S:C/C:H/I:H/A:H/H:H",
  },
  {
    label: "4 - ROS 2 launch hang (middleware)",
    vector: "RVSS:1.0/AV:AN/AC:L/PR:N/UI:N/Y:O/S:U/C:N/I:N/A:N/H:H",
  },
];

export interface CalculatorApp {
  state: CalculatorState;
  lastReport: ScoreReport | null;
  importVector(text: string): Promise<void>;
  switchScheme(slug: SchemeSlug): Promise<void>;
}

const EMPTY_CATALOG: CatalogDocument = { scheme: "RVSS:1.0", metrics: [] };

export async function boot(root: HTMLElement): Promise<CalculatorApp> {
  root.innerHTML = `
    <header>
      <h1>Robot vulnerability severity calculator</h1>
      <div class="scheme-picker" id="scheme-picker">
        <label><input type="radio" name="scheme" value="rvss1" checked> RVSS v1.0</label>
        <label><input type="radio" name="scheme" value="cvss3"> CVSS v3.0</label>
      </div>
      <div class="examples" id="examples"></div>
    </header>
    <div class="banner" id="banner" hidden>
      <span id="banner-text"></span>
      <button id="banner-retry" type="button" hidden>retry</button>
    </div>
    <main>
      <div id="panels" class="panels"></div>
      <aside class="sidebar">
        <div id="score-card" class="score-card"></div>
        <label class="subscore-toggle">
          <input type="checkbox" id="subscore-toggle"> show sub-scores
        </label>
        <div class="importer">
          <input id="import-input" placeholder="paste a CVSS:3.0/... or RVSS:1.0/... vector">
          <button id="import-button" type="button">import</button>
        </div>
      </aside>
    </main>
  `;

  const panels = root.querySelector<HTMLElement>("#panels")!;
  const card = root.querySelector<HTMLElement>("#score-card")!;
  const banner = root.querySelector<HTMLElement>("#banner-text")!;
  const bannerBox = root.querySelector<HTMLElement>("#banner")!;
  const retryButton = root.querySelector<HTMLButtonElement>("#banner-retry")!;
  const importInput = root.querySelector<HTMLInputElement>("#import-input")!;
  const importButton = root.querySelector<HTMLButtonElement>("#import-button")!;
  const subscoreToggle = root.querySelector<HTMLInputElement>("#subscore-toggle")!;
  const examplesBox = root.querySelector<HTMLElement>("#examples")!;

  const app: CalculatorApp = {
    state: newState(EMPTY_CATALOG),
    lastReport: null,
    importVector,
    switchScheme,
  };

  function showBanner(message: string | null, retry: SchemeSlug | null = null): void {
    renderErrorBanner(banner, message);
    bannerBox.hidden = message === null;
    retryButton.hidden = retry === null;
    retryButton.onclick = retry === null ? null : () => void switchScheme(retry);
  }

  function showScoreError(error: unknown): void {
    if (error instanceof ScoreApiError) {
      showBanner(error.banner());
      markMetricError(panels, {
        metric: error.offendingMetric,
        token: error.offendingToken,
      });
    } else {
      showBanner(`service unreachable: ${String(error)}`);
    }
  }

  const loop = new ScoreLoop(
    (vector, signal) => postScore(vector, signal),
    (report) => {
      app.lastReport = report;
      showBanner(null);
      markMetricError(panels, null);
      renderReport(card, report, subscoreToggle.checked);
    },
    showScoreError,
  );

  function refresh(): void {
    if (app.state.catalog.metrics.length === 0) {
      card.textContent = "";
      return;
    }
    const vector = buildVector(app.state);
    if (vector === null) {
      loop.cancel();
      app.lastReport = null;
      renderIncomplete(card, missingMandatory(app.state));
      return;
    }
    loop.schedule(vector);
  }

  function onMetricChange(key: string, code: string): void {
    app.state = setMetric(app.state, key, code);
    refresh();
  }

  async function switchScheme(slug: SchemeSlug): Promise<void> {
    try {
      app.state = newState(await fetchCatalog(slug));
    } catch (error) {
      app.state = newState(EMPTY_CATALOG);
      renderPanels(panels, app.state, onMetricChange);
      card.textContent = "";
      showBanner(`catalog fetch failed: ${String(error)}`, slug);
      return;
    }
    showBanner(null);
    renderPanels(panels, app.state, onMetricChange);
    refresh();
  }

  async function importVector(text: string): Promise<void> {
    const trimmed = text.trim();
    if (!trimmed) {
      return;
    }
    try {
      const report = await postScore(trimmed);
      const slug = SLUG_BY_PREFIX[report.scheme];
      if (app.state.catalog.scheme !== report.scheme) {
        app.state = newState(await fetchCatalog(slug));
        const picker = root.querySelector<HTMLInputElement>(
          `#scheme-picker input[value="${slug}"]`);
        if (picker) {
          picker.checked = true;
        }
        renderPanels(panels, app.state, onMetricChange);
      }
      app.state = stateFromCanonical(app.state.catalog, report.canonicalVector);
      syncSelects(panels, app.state);
      app.lastReport = report;
      showBanner(null);
      markMetricError(panels, null);
      renderReport(card, report, subscoreToggle.checked);
    } catch (error) {
      showScoreError(error);
    }
  }

  for (const example of EXAMPLES) {
    const button = document.createElement("button");
    button.type = "button";
    button.className = "example-button";
    button.textContent = example.label;
    button.addEventListener("click", () => void importVector(example.vector));
    examplesBox.appendChild(button);
  }

  root.querySelector<HTMLElement>("#scheme-picker")!.addEventListener("change", (event) => {
    const input = event.target as HTMLInputElement;
    void switchScheme(input.value as SchemeSlug);
  });
  importButton.addEventListener("click", () => void importVector(importInput.value));
  importInput.addEventListener("keydown", (event) => {
    if ((event as KeyboardEvent).key === "Enter") {
      void importVector(importInput.value);
    }
  });
  subscoreToggle.addEventListener("change", () => {
    if (app.lastReport && allMandatorySet(app.state)) {
      renderReport(card, app.lastReport, subscoreToggle.checked);
    }
  });

  await switchScheme("rvss1");
  return app;
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  void boot(document.getElementById("app")!);
}
