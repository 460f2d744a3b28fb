/** Session state of the configuration explorer.
 *
 * Pure functions only: the DOM layer applies them and posts the resulting
 * configuration to the service. Invalid edits are rejected here, so an
 * invalid configuration is never sent.
 */

import type { ConfigurationDoc, LevelRow, OccupancyEntry } from "./api";

export interface Session {
  z: number;
  a: number;
  calibration: string;
  /** occupancy per state label, pn pairs stored as counts of nucleons */
  occupancy: Record<string, { count: number; protons: number }>;
  rules: RulesForm;
  tol: number;
  observedBinding?: number;
  field?: { p: number; n: number };
}

export interface RulesForm {
  wholeNucleus: boolean;
  parity: "any" | "even" | "odd";
  flipSuppressed: boolean;
  averageFromShell?: number;
  maxResonanceStates?: number;
}

export function newSession(z: number, a: number, calibration: string): Session {
  return {
    z,
    a,
    calibration,
    occupancy: {},
    rules: { wholeNucleus: true, parity: "any", flipSuppressed: true },
    tol: 0.4,
  };
}

export function totalNucleons(session: Session): number {
  return Object.values(session.occupancy).reduce((sum, e) => sum + e.count, 0);
}

export function totalProtons(session: Session): number {
  return Object.values(session.occupancy).reduce((sum, e) => sum + e.protons, 0);
}

export function isComplete(session: Session): boolean {
  return totalNucleons(session) === session.a && totalProtons(session) === session.z;
}

/** A pn pair can land on a state while the nuclide still has room. */
export function canPlacePair(session: Session, state: string): boolean {
  if (state.endsWith("av")) return false; // averages are destinations, not slots
  return totalNucleons(session) + 2 <= session.a;
}

export function placePair(session: Session, state: string): Session {
  if (!canPlacePair(session, state)) return session;
  const entry = session.occupancy[state] ?? { count: 0, protons: 0 };
  return {
    ...session,
    occupancy: {
      ...session.occupancy,
      [state]: { count: entry.count + 2, protons: entry.protons + 1 },
    },
  };
}

export function removePair(session: Session, state: string): Session {
  const entry = session.occupancy[state];
  if (!entry || entry.count < 2 || entry.protons < 1) return session;
  const occupancy = { ...session.occupancy };
  if (entry.count === 2) {
    delete occupancy[state];
  } else {
    occupancy[state] = { count: entry.count - 2, protons: entry.protons - 1 };
  }
  return { ...session, occupancy };
}

/** Drag a pair between shells; identity moves and invalid targets are no-ops. */
export function movePair(session: Session, from: string, to: string): Session {
  if (from === to) return session;
  const source = session.occupancy[from];
  if (!source || source.count < 2) return session;
  return placePair(removePair(session, from), to);
}

function parseState(label: string): { n: number; l: number; sign: string } {
  const match = /^(\d+),(\d+)([+-]?)$/.exec(label);
  if (!match) throw new Error(`unparseable state label: ${label}`);
  const sign = match[3] === "+" ? "plus" : match[3] === "-" ? "minus" : "none";
  return { n: Number(match[1]), l: Number(match[2]), sign };
}

export function toConfiguration(session: Session): ConfigurationDoc {
  const occupancy: OccupancyEntry[] = Object.entries(session.occupancy)
    .sort(([a], [b]) => a.localeCompare(b))
    .map(([label, entry]) => {
      const state = parseState(label);
      return { n: state.n, l: state.l, sign: state.sign,
               count: entry.count, protons: entry.protons };
    });
  const doc: ConfigurationDoc = {
    z: session.z,
    a: session.a,
    calibration: session.calibration,
    occupancy,
  };
  if (session.field) doc.field = session.field;
  return doc;
}

export function toRulesDoc(session: Session): Record<string, unknown> {
  const rules: Record<string, unknown> = {
    whole_nucleus: session.rules.wholeNucleus,
    parity: session.rules.parity,
    flip_suppressed: session.rules.flipSuppressed,
  };
  if (session.rules.averageFromShell !== undefined) {
    rules.average_from_shell = session.rules.averageFromShell;
  }
  if (session.rules.maxResonanceStates !== undefined) {
    rules.max_resonance_states = session.rules.maxResonanceStates;
  }
  return rules;
}

/** Serialize the whole session (configuration + rules) for download. */
export function exportSession(session: Session): string {
  const doc = {
    config: toConfiguration(session),
    rules: toRulesDoc(session),
    tol: session.tol,
    observed_binding: session.observedBinding ?? null,
  };
  return JSON.stringify(doc, null, 1);
}

export function importSession(text: string): Session {
  const doc = JSON.parse(text) as {
    config: ConfigurationDoc;
    rules: Record<string, unknown>;
    tol?: number;
    observed_binding?: number | null;
  };
  const config = doc.config;
  if (!config || !Array.isArray(config.occupancy)) {
    throw new Error("session file lacks a configuration");
  }
  const occupancy: Session["occupancy"] = {};
  for (const entry of config.occupancy) {
    const suffix = entry.sign === "plus" ? "+" : entry.sign === "minus" ? "-" : "";
    occupancy[`${entry.n},${entry.l}${suffix}`] = {
      count: entry.count,
      protons: entry.protons,
    };
  }
  const rules = doc.rules ?? {};
  const session: Session = {
    z: config.z,
    a: config.a,
    calibration: config.calibration,
    occupancy,
    rules: {
      wholeNucleus: Boolean(rules.whole_nucleus),
      parity: (rules.parity as RulesForm["parity"]) ?? "any",
      flipSuppressed: rules.flip_suppressed === undefined
        ? true
        : Boolean(rules.flip_suppressed),
      averageFromShell: rules.average_from_shell as number | undefined,
      maxResonanceStates: rules.max_resonance_states as number | undefined,
    },
    tol: doc.tol ?? 0.4,
  };
  if (doc.observed_binding != null) session.observedBinding = doc.observed_binding;
  if (config.field) session.field = config.field;
  return session;
}

/** Observed lines of a nuclide from the reference table (paper_obs rows). */
export function observedLines(
  rows: { system: string; label: string; value: string; source: string }[],
  system: string,
): number[] {
  return rows
    .filter((r) => r.system === system && r.source === "paper_obs" && r.value !== "")
    .map((r) => Number(r.value));
}

/** Ladder slots the board offers: every non-averaged level of the table. */
export function boardSlots(levels: LevelRow[]): string[] {
  return levels.filter((row) => row.averaged === null).map((row) => row.state);
}
