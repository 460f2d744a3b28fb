/** DOM bootstrap: wiring between the board, the service client and the
 * renderers. All state transitions live in model.ts; all numbers shown
 * come from service responses rendered in render.ts.
 */

import { ExplorerApi, LatestWins, ServiceError } from "./api";
import type { LevelsResponse } from "./api";
import {
  Session,
  exportSession,
  importSession,
  isComplete,
  movePair,
  newSession,
  observedLines,
  placePair,
  removePair,
  toConfiguration,
  toRulesDoc,
} from "./model";
import {
  renderAlignment,
  renderError,
  renderLadder,
  renderSummary,
} from "./render";

const api = new ExplorerApi("");
const recompute = new LatestWins();

let session: Session = newSession(2, 4, "so");
let levels: LevelsResponse | null = null;
let lastGood: Session = session;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

async function loadNuclide(): Promise<void> {
  const z = Number(el<HTMLInputElement>("z").value);
  const a = Number(el<HTMLInputElement>("a").value);
  const calibration = el<HTMLSelectElement>("calibration").value;
  session = newSession(z, a, calibration);
  try {
    levels = await api.getLevels(z, a, calibration);
    el("banner").innerHTML = "";
    redraw();
  } catch (error) {
    levels = null;
    el("banner").innerHTML = renderError(String(error));
  }
}

function redraw(): void {
  if (!levels) return;
  el("ladder").innerHTML = renderLadder(levels, session);
  wireBoard();
  void refreshComputation();
}

async function refreshComputation(): Promise<void> {
  const exportButton = el<HTMLButtonElement>("export");
  exportButton.disabled = Object.keys(session.occupancy).length === 0;
  if (!isComplete(session)) {
    el("summary").innerHTML = renderSummary(null);
    return;
  }
  const observed = numberListInput();
  const attempted = session;
  const result = await recompute.run(async (signal) => {
    const config = toConfiguration(attempted);
    const summary = await api.postConfiguration(
      config, attempted.observedBinding, signal);
    const excitations = await api.postExcitations(
      config, toRulesDoc(attempted), observed ?? undefined, attempted.tol, signal);
    return { summary, excitations };
  }).catch((error) => {
    if (error instanceof ServiceError && error.status === 409) {
      session = lastGood; // roll the rejected edit back
      redraw();
      return null;
    }
    el("banner").innerHTML = renderError(String(error));
    return null;
  });
  if (!result) return;
  lastGood = attempted;
  el("summary").innerHTML = renderSummary(result.summary);
  el("alignment").innerHTML = renderAlignment(result.excitations, observed ?? []);
}

function numberListInput(): number[] | null {
  const text = el<HTMLInputElement>("observed").value.trim();
  if (!text) return null;
  return text.split(",").map((v) => Number(v.trim())).filter((v) => !Number.isNaN(v));
}

function wireBoard(): void {
  const board = el("ladder");
  board.querySelectorAll<HTMLTableRowElement>("tr[data-state]").forEach((row) => {
    const state = row.dataset.state!;
    row.addEventListener("click", (event) => {
      session = (event as MouseEvent).shiftKey
        ? removePair(session, state)
        : placePair(session, state);
      redraw();
    });
    row.addEventListener("dragover", (event) => event.preventDefault());
    row.addEventListener("drop", (event) => {
      event.preventDefault();
      const from = (event as DragEvent).dataTransfer?.getData("text/state");
      if (from) {
        session = movePair(session, from, state);
        redraw();
      }
    });
  });
  board.querySelectorAll<HTMLElement>(".slot").forEach((slot) => {
    slot.addEventListener("dragstart", (event) => {
      (event as DragEvent).dataTransfer?.setData(
        "text/state", slot.dataset.state ?? "");
    });
  });
}

function wireControls(): void {
  el("load").addEventListener("click", () => void loadNuclide());
  el<HTMLInputElement>("tol").addEventListener("input", (event) => {
    session.tol = Number((event.target as HTMLInputElement).value);
    el("tolValue").textContent = String(session.tol);
    void refreshComputation();
  });
  ["wholeNucleus", "flipSuppressed"].forEach((id) => {
    el<HTMLInputElement>(id).addEventListener("change", (event) => {
      const checked = (event.target as HTMLInputElement).checked;
      if (id === "wholeNucleus") session.rules.wholeNucleus = checked;
      else session.rules.flipSuppressed = checked;
      void refreshComputation();
    });
  });
  el<HTMLSelectElement>("parity").addEventListener("change", (event) => {
    session.rules.parity = (event.target as HTMLSelectElement)
      .value as Session["rules"]["parity"];
    void refreshComputation();
  });
  el<HTMLInputElement>("observedBinding").addEventListener("change", (event) => {
    const value = Number((event.target as HTMLInputElement).value);
    session.observedBinding = Number.isNaN(value) ? undefined : value;
    void refreshComputation();
  });
  el("export").addEventListener("click", () => {
    const blob = new Blob([exportSession(session)], { type: "application/json" });
    const anchor = document.createElement("a");
    anchor.href = URL.createObjectURL(blob);
    anchor.download = `nonfield-session-${session.z}-${session.a}.json`;
    anchor.click();
  });
  el<HTMLInputElement>("import").addEventListener("change", async (event) => {
    const file = (event.target as HTMLInputElement).files?.[0];
    if (!file) return;
    try {
      session = importSession(await file.text());
      levels = await api.getLevels(session.z, session.a, session.calibration);
      redraw();
    } catch (error) {
      el("banner").innerHTML = renderError(String(error));
    }
  });
  el("loadObserved").addEventListener("click", async () => {
    try {
      const reference = await api.getReference("nuclei_mirror_excitations");
      const system = `${el<HTMLInputElement>("a").value}${guessSymbol()}`;
      const lines = observedLines(reference.rows, system);
      el<HTMLInputElement>("observed").value = lines.join(",");
      void refreshComputation();
    } catch (error) {
      el("banner").innerHTML = renderError(String(error));
    }
  });
}

function guessSymbol(): string {
  const z = Number(el<HTMLInputElement>("z").value);
  return ["", "H", "He", "Li", "Be", "B", "C", "N", "O"][z] ?? "?";
}

if (typeof document !== "undefined" && document.getElementById("ladder")) {
  wireControls();
  void loadNuclide();
}
