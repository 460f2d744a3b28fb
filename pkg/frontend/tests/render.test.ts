import { describe, expect, it } from "vitest";

import type {
  ConfigurationResponse,
  ExcitationsResponse,
  LevelsResponse,
} from "../src/api";
import { newSession, placePair } from "../src/model";
import {
  fmt,
  numericStrings,
  renderAlignment,
  renderError,
  renderLadder,
  renderSummary,
} from "../src/render";

const CAL = { tag: "so", G: 296.511, Ga: 0.62, d_gluon: 0.43,
              coulomb_c: 0.0035, so_enabled: true };

const LEVELS: LevelsResponse = {
  schema_version: 1,
  z: 2,
  a: 4,
  calibration: CAL,
  levels: [
    { state: "0,0+", n: 0, l: 0, sign: "plus", averaged: null, members: [],
      pair_binding_mev: 14.1429, pair_pionic_mev: 15.4555,
      proton_binding_mev: 7.3, neutron_binding_mev: 6.8,
      per_nucleon_pionic_mev: 7.7278 },
    { state: "3av", n: null, l: null, sign: null, averaged: 3,
      members: ["0,3+", "1,2+"], pair_binding_mev: 0.6177,
      pair_pionic_mev: 1.93, proton_binding_mev: 0, neutron_binding_mev: 0,
      per_nucleon_pionic_mev: 0.965 },
  ],
};

const SUMMARY: ConfigurationResponse = {
  schema_version: 1,
  calibration: CAL,
  pionic_total: 30.9109,
  binding_with_subtraction: 28.2858,
  required_subtraction: 0.6537,
  open_states: { open: ["0,0+"], resonance: ["2,2+"] },
};

const EXCITATIONS: ExcitationsResponse = {
  schema_version: 1,
  calibration: CAL,
  transitions: [
    { label: "4(0,0+-0,2+)", energy_mev: 23.9064, moves: [] },
    { label: "4(0,0+-0,1+)", energy_mev: 17.0302, moves: [] },
  ],
  matches: [
    { label: "4(0,0+-0,2+)", energy_mev: 23.9064, observed_mev: 23.64,
      deviation_mev: 0.2664 },
  ],
};

function responseNumbers(values: number[]): Set<string> {
  const out = new Set<string>();
  for (const value of values) {
    out.add(fmt(value));
  }
  return out;
}

describe("single source of truth", () => {
  it("ladder shows only response energies", () => {
    const html = renderLadder(LEVELS, newSession(2, 4, "so"));
    const allowed = responseNumbers(LEVELS.levels.map((l) => l.pair_binding_mev));
    for (const numeric of numericStrings(html)) {
      expect(allowed.has(numeric), `${numeric} not from the response`).toBe(true);
    }
  });

  it("summary shows only response values", () => {
    const html = renderSummary(SUMMARY);
    const allowed = responseNumbers([
      SUMMARY.pionic_total,
      SUMMARY.binding_with_subtraction,
      SUMMARY.required_subtraction ?? 0,
    ]);
    for (const numeric of numericStrings(html)) {
      expect(allowed.has(numeric), `${numeric} not from the response`).toBe(true);
    }
  });

  it("alignment shows only response and observed values", () => {
    const html = renderAlignment(EXCITATIONS, [23.64, 25.28]);
    const allowed = responseNumbers([
      ...EXCITATIONS.transitions.map((t) => t.energy_mev),
      ...(EXCITATIONS.matches ?? []).flatMap((m) => [
        m.observed_mev, m.deviation_mev,
      ]),
      23.64,
      25.28,
    ]);
    for (const numeric of numericStrings(html)) {
      expect(allowed.has(numeric), `${numeric} not from the response`).toBe(true);
    }
  });
});

describe("markup structure", () => {
  it("ladder marks occupancy and averaged members", () => {
    let session = newSession(2, 4, "so");
    session = placePair(session, "0,0+");
    const html = renderLadder(LEVELS, session);
    expect(html).toContain('data-state="0,0+"');
    expect(html).toContain("●");
    expect(html).toContain("0,3+ 1,2+");
  });

  it("summary distinguishes the empty board", () => {
    expect(renderSummary(null)).toContain("empty");
    const html = renderSummary(SUMMARY);
    expect(html).toContain("implied subtraction");
    expect(html).toContain("resonance:");
  });

  it("alignment separates matched, extra and unmatched", () => {
    const html = renderAlignment(EXCITATIONS, [23.64, 25.28]);
    expect(html).toContain('class="matched"');
    expect(html).toContain('class="extra"');
    expect(html).toContain('class="tick hit"');
    expect(html).toContain('class="tick unmatched"');
  });

  it("error banner escapes markup and offers retry", () => {
    const html = renderError("<boom>");
    expect(html).toContain("&lt;boom&gt;");
    expect(html).toContain("retry");
  });
});
