import { describe, expect, it } from "vitest";

import {
  allMandatorySet,
  avTokens,
  buildVector,
  metricByKey,
  missingMandatory,
  newState,
  selectedCode,
  setMetric,
  severityColor,
  stateFromCanonical,
} from "./state.js";
import { CATALOGS } from "./testutil.js";

const rvss = CATALOGS.rvss1;
const cvss = CATALOGS.cvss3;

const CASE1 = "RVSS:1.0/AV:ANPR/AC:L/PR:N/UI:N/Y:T/S:U/C:N/I:H/A:H/H:E";

function filledRvss() {
  let state = newState(rvss);
  const codes: Record<string, string> = {
    AV: "ANPR", AC: "L", PR: "N", UI: "N", Y: "T",
    S: "U", C: "N", I: "H", A: "H", H: "E",
  };
  for (const [key, code] of Object.entries(codes)) {
    state = setMetric(state, key, code);
  }
  return state;
}

describe("calculator state", () => {
  it("starts with no mandatory metrics selected and optionals not defined", () => {
    const state = newState(rvss);
    expect(allMandatorySet(state)).toBe(false);
    expect(missingMandatory(state)).toEqual(
      ["AV", "AC", "PR", "UI", "Y", "S", "C", "I", "A", "H"]);
    expect(selectedCode(state, "E")).toBe("X");
    expect(buildVector(state)).toBeNull();
  });

  it("builds the canonical vector once mandatory metrics are set", () => {
    expect(buildVector(filledRvss())).toBe(CASE1);
  });

  it("keeps optional metrics out of the vector until explicitly set", () => {
    let state = filledRvss();
    state = setMetric(state, "E", "P");
    expect(buildVector(state)).toBe(`${CASE1}/E:P`);
    state = setMetric(state, "E", "X");
    expect(buildVector(state)).toBe(CASE1);
  });

  it("orders segments canonically regardless of selection order", () => {
    let state = newState(cvss);
    for (const [key, code] of [
      ["A", "H"], ["AV", "N"], ["C", "N"], ["S", "U"],
      ["UI", "N"], ["I", "H"], ["PR", "N"], ["AC", "L"],
    ] as const) {
      state = setMetric(state, key, code);
    }
    expect(buildVector(state)).toBe("CVSS:3.0/AV:N/AC:L/PR:N/UI:N/S:U/C:N/I:H/A:H");
  });

  it("clearing a mandatory metric makes the state incomplete again", () => {
    let state = filledRvss();
    state = setMetric(state, "AV", "");
    expect(buildVector(state)).toBeNull();
    expect(missingMandatory(state)).toEqual(["AV"]);
  });

  it("populates from a canonical vector, preserving explicit X", () => {
    const state = stateFromCanonical(rvss, `${CASE1}/E:P/MH:X`);
    expect(selectedCode(state, "AV")).toBe("ANPR");
    expect(selectedCode(state, "E")).toBe("P");
    expect(state.explicitOptional.MH).toBe("X");
    expect(buildVector(state)).toBe(`${CASE1}/E:P/MH:X`);
  });

  it("round-trips a pasted canonical vector byte for byte", () => {
    for (const text of [CASE1, "CVSS:3.0/AV:A/AC:L/PR:N/UI:N/S:C/C:L/I:L/A:H"]) {
      const catalog = text.startsWith("RVSS") ? rvss : cvss;
      expect(buildVector(stateFromCanonical(catalog, text))).toBe(text);
    }
  });

  it("decomposes composite attack vectors into their tokens", () => {
    const av = metricByKey(rvss, "AV")!;
    expect(avTokens(av, "ANPR")).toEqual(["AN", "PR"]);
    expect(avTokens(av, "L")).toEqual(["L"]);
    expect(av.compositions).toHaveLength(9);
  });

  it("maps severity labels to the five-band colors", () => {
    const bands = ["None", "Low", "Medium", "High", "Critical"].map(severityColor);
    expect(new Set(bands).size).toBe(5);
    expect(severityColor("garbage")).toBe("#777777");
  });
});
