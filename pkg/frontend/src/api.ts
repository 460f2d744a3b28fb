/** Typed client for the local nuclide/atomic JSON service.
 *
 * Every number shown anywhere in the explorer originates from one of these
 * response payloads; the UI itself never computes an energy.
 */

export interface CalibrationInfo {
  tag: string;
  G: number;
  Ga: number;
  d_gluon: number;
  coulomb_c: number;
  so_enabled: boolean;
}

export interface LevelRow {
  state: string;
  n: number | null;
  l: number | null;
  sign: string | null;
  averaged: number | null;
  members: string[];
  pair_binding_mev: number;
  pair_pionic_mev: number;
  proton_binding_mev: number;
  neutron_binding_mev: number;
  per_nucleon_pionic_mev: number;
}

export interface LevelsResponse {
  schema_version: number;
  z: number;
  a: number;
  calibration: CalibrationInfo;
  levels: LevelRow[];
}

export interface OccupancyEntry {
  n: number;
  l: number;
  sign: string;
  count: number;
  protons: number;
}

export interface ConfigurationDoc {
  z: number;
  a: number;
  calibration: string;
  occupancy: OccupancyEntry[];
  field?: { p: number; n: number };
}

export interface ConfigurationResponse {
  schema_version: number;
  calibration: CalibrationInfo;
  pionic_total: number;
  binding_with_subtraction: number;
  required_subtraction: number | null;
  open_states: { open: string[]; resonance: string[] } | null;
}

export interface TransitionOut {
  label: string;
  energy_mev: number;
  moves: { source: string; target: string; count: number }[];
}

export interface MatchOut {
  label: string;
  energy_mev: number;
  observed_mev: number;
  deviation_mev: number;
}

export interface ExcitationsResponse {
  schema_version: number;
  calibration: CalibrationInfo;
  transitions: TransitionOut[];
  matches?: MatchOut[];
}

export interface ReferenceRowOut {
  system: string;
  label: string;
  series: string;
  value: string;
  unit: string;
  source: string;
  flags: string;
}

export interface ReferenceResponse {
  schema_version: number;
  name: string;
  rows: ReferenceRowOut[];
}

export class ServiceError extends Error {
  constructor(readonly status: number, detail: string) {
    super(`service ${status}: ${detail}`);
  }
}

async function request<T>(url: string, init?: RequestInit, signal?: AbortSignal): Promise<T> {
  const response = await fetch(url, { ...init, signal });
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { detail?: string };
      if (body.detail) detail = body.detail;
    } catch {
      /* non-JSON error body */
    }
    throw new ServiceError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class ExplorerApi {
  constructor(readonly baseUrl: string) {}

  getLevels(
    z: number,
    a: number,
    calibration: string,
    averageFromShell?: number,
    signal?: AbortSignal,
  ): Promise<LevelsResponse> {
    const params = new URLSearchParams({ calibration });
    if (averageFromShell !== undefined) {
      params.set("average_from_shell", String(averageFromShell));
    }
    return request(`${this.baseUrl}/api/nuclides/${z}/${a}/levels?${params}`, undefined, signal);
  }

  postConfiguration(
    config: ConfigurationDoc,
    observedBinding?: number,
    signal?: AbortSignal,
  ): Promise<ConfigurationResponse> {
    return request(`${this.baseUrl}/api/configuration`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ config, observed_binding: observedBinding ?? null }),
    }, signal);
  }

  postExcitations(
    config: ConfigurationDoc,
    rules: Record<string, unknown>,
    observed?: number[],
    tol?: number,
    signal?: AbortSignal,
  ): Promise<ExcitationsResponse> {
    return request(`${this.baseUrl}/api/excitations`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ config, rules, observed: observed ?? null, tol: tol ?? 0.05 }),
    }, signal);
  }

  getReference(name: string, signal?: AbortSignal): Promise<ReferenceResponse> {
    return request(`${this.baseUrl}/api/reference/${name}`, undefined, signal);
  }
}

/** Sequencer that lets at most one recompute fly; newer calls abort older ones. */
export class LatestWins {
  private controller: AbortController | null = null;

  async run<T>(task: (signal: AbortSignal) => Promise<T>): Promise<T | null> {
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    try {
      return await task(controller.signal);
    } catch (error) {
      if (controller.signal.aborted) return null; // superseded
      throw error;
    } finally {
      if (this.controller === controller) this.controller = null;
    }
  }
}
