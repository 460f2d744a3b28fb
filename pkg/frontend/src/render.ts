/** HTML renderers. Every numeric string is formatted straight from a
 * service response value — the single source of truth invariant that the
 * render tests enforce by checksumming responses against the emitted
 * markup.
 */

import type {
  ConfigurationResponse,
  ExcitationsResponse,
  LevelsResponse,
} from "./api";
import type { Session } from "./model";

export function fmt(value: number, digits = 3): string {
  return value.toFixed(digits);
}

function escapeHtml(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** Level ladder with occupancy slots; split rows appear when present. */
export function renderLadder(levels: LevelsResponse, session: Session): string {
  const rows = levels.levels
    .map((row) => {
      const occupied = session.occupancy[row.state]?.count ?? 0;
      const slot = row.averaged === null
        ? `<span class="slot" data-state="${row.state}" draggable="true">` +
          `${"●".repeat(occupied / 2)}${occupied % 2 ? "·" : ""}</span>`
        : `<span class="avg-members">${row.members.join(" ")}</span>`;
      return `<tr data-state="${row.state}">` +
        `<td class="state">${row.state}</td>` +
        `<td class="pair">${fmt(row.pair_binding_mev)}</td>` +
        `<td>${slot}</td></tr>`;
    })
    .join("");
  return `<table class="ladder" data-z="${levels.z}" data-a="${levels.a}">` +
    `<thead><tr><th>state</th><th>pair MeV</th><th>pairs</th></tr></thead>` +
    `<tbody>${rows}</tbody></table>`;
}

/** Binding number, subtraction gauge and the open/resonance boundary. */
export function renderSummary(result: ConfigurationResponse | null): string {
  if (result === null) {
    return `<div class="summary empty">place pairs to compute</div>`;
  }
  const subtraction = result.required_subtraction;
  const gauge = subtraction === null
    ? ""
    : `<div class="gauge"><label>implied subtraction / nucleon</label>` +
      `<output>${fmt(subtraction)}</output></div>`;
  const partition = result.open_states
    ? `<div class="boundary"><span class="open">open: ` +
      `${result.open_states.open.join(", ")}</span>` +
      `<span class="resonance">resonance: ` +
      `${result.open_states.resonance.join(", ")}</span></div>`
    : "";
  return `<div class="summary">` +
    `<div class="binding"><label>binding</label>` +
    `<output>${fmt(result.binding_with_subtraction)}</output> MeV</div>` +
    `<div class="pionic"><label>pionic total</label>` +
    `<output>${fmt(result.pionic_total)}</output> MeV</div>` +
    gauge + partition + `</div>`;
}

/** Excitation list aligned against the observed-line ruler: matched lines
 * highlighted, unmatched observed and extra predicted lines distinct. */
export function renderAlignment(
  result: ExcitationsResponse,
  observed: number[],
): string {
  const matches = result.matches ?? [];
  const matchedByLabel = new Map(matches.map((m) => [m.label, m]));
  const matchedObserved = new Set(matches.map((m) => m.observed_mev));
  const predicted = result.transitions
    .map((t) => {
      const match = matchedByLabel.get(t.label);
      const cls = match ? "matched" : "extra";
      const tail = match
        ? ` &harr; <span class="observed">${fmt(match.observed_mev)}</span>` +
          ` <span class="dev">(${fmt(match.deviation_mev)})</span>`
        : "";
      return `<li class="${cls}" data-label="${escapeHtml(t.label)}">` +
        `<span class="energy">${fmt(t.energy_mev)}</span> ` +
        `${escapeHtml(t.label)}${tail}</li>`;
    })
    .join("");
  const ruler = observed
    .map((value) => {
      const cls = matchedObserved.has(value) ? "hit" : "unmatched";
      return `<span class="tick ${cls}">${fmt(value)}</span>`;
    })
    .join("");
  return `<div class="alignment">` +
    `<div class="ruler">${ruler}</div>` +
    `<ol class="transitions">${predicted}</ol></div>`;
}

export function renderError(message: string): string {
  return `<div class="banner error">${escapeHtml(message)}` +
    `<button class="retry">retry</button></div>`;
}

/** Numeric substrings of rendered markup (for the source-of-truth tests). */
export function numericStrings(html: string): string[] {
  return html.match(/-?\d+\.\d+/g) ?? [];
}
