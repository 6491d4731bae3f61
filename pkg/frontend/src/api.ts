/**
 * Typed client for the exploration service.
 *
 * Field names mirror the service wire format exactly; they are a
 * compatibility contract, so renames here are breaking changes.
 */

export interface CandidateDisplay {
  x: string;
  y: string;
  energy: string;
  third_moment_over_6: string;
}

export interface CandidateRow {
  p: number;
  q: number;
  x: number;
  y: number;
  energy: number;
  third_moment_over_6: number;
  passes_moment_test: boolean;
  sign_split: boolean;
  coincident: boolean;
  display: CandidateDisplay;
}

export interface CandidateTable {
  n: number;
  m: number;
  known: number[];
  rows: CandidateRow[];
}

export interface KnownFamily {
  values: number[];
  c_plus: number;
  c_minus: number;
  c: number;
  d: number;
}

export interface SessionSnapshot {
  values: number[];
  provenance: string;
}

export interface RealizationRecord {
  snapshot_index: number;
  target: number[];
  found: string[];
  exhausted: boolean;
  fast_fail_reasons: string[];
}

export interface SessionBody {
  id: string;
  n: number;
  m: number;
  known: KnownFamily;
  history: SessionSnapshot[];
  motif_count: number;
  realizations: RealizationRecord[];
}

export interface SessionEnvelope {
  session: SessionBody;
}

export interface FoundGraph {
  graph6: string;
  energy: number;
  spectrum: number[];
  groups: [number, number][];
  display: { energy: string };
}

export interface JobResult {
  found: FoundGraph[];
  exhausted: boolean;
  certified_empty: boolean;
  fast_fail_reasons: string[];
}

export interface JobBody {
  id: string;
  status: "queued" | "running" | "done" | "error";
  progress: { graphs_examined: number; elapsed_seconds: number };
  result: JobResult | null;
  error: string | null;
}

export interface JobEnvelope {
  job: JobBody;
}

export interface RealizeConstraints {
  connected?: boolean;
  bipartite?: boolean;
  regular_degree?: number | null;
  complement_cycles?: boolean;
}

export interface ServiceErrorBody {
  error: { message: string; constraint: string };
}

/** Transport abstraction so tests can replay recorded responses. */
export type Transport = (
  method: string,
  path: string,
  body?: unknown,
) => Promise<unknown>;

export class ServiceError extends Error {
  constructor(
    message: string,
    readonly constraint: string,
    readonly status: number,
  ) {
    super(message);
  }
}

export function httpTransport(baseUrl: string): Transport {
  return async (method, path, body) => {
    const response = await fetch(baseUrl + path, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload: unknown = await response.json();
    if (!response.ok) {
      const err = payload as Partial<ServiceErrorBody>;
      throw new ServiceError(
        err.error?.message ?? `request failed with ${response.status}`,
        err.error?.constraint ?? "unknown",
        response.status,
      );
    }
    return payload;
  };
}

export class ExplorerClient {
  constructor(private readonly transport: Transport) {}

  async createSession(n: number, m: number, known: number[]): Promise<SessionBody> {
    const body = (await this.transport("POST", "/sessions", {
      n,
      m,
      known,
    })) as SessionEnvelope;
    return body.session;
  }

  async getSession(id: string): Promise<SessionBody> {
    const body = (await this.transport("GET", `/sessions/${id}`)) as SessionEnvelope;
    return body.session;
  }

  async candidates(id: string): Promise<CandidateTable> {
    return (await this.transport(
      "GET",
      `/sessions/${id}/candidates`,
    )) as CandidateTable;
  }

  async extendValues(id: string, values: number[]): Promise<SessionBody> {
    const body = (await this.transport("POST", `/sessions/${id}/extend`, {
      values,
    })) as SessionEnvelope;
    return body.session;
  }

  async adoptCandidate(
    id: string,
    row: CandidateRow,
    xCount: number,
    yCount: number,
  ): Promise<SessionBody> {
    const body = (await this.transport("POST", `/sessions/${id}/extend`, {
      adopt: { p: row.p, x: row.x, x_count: xCount, y_count: yCount },
    })) as SessionEnvelope;
    return body.session;
  }

  async extendMotif(id: string, kind: string, length: number): Promise<SessionBody> {
    const body = (await this.transport("POST", `/sessions/${id}/extend`, {
      motif: { kind, length },
    })) as SessionEnvelope;
    return body.session;
  }

  async realizeCandidate(
    id: string,
    row: CandidateRow,
    constraints: RealizeConstraints,
  ): Promise<JobBody> {
    const body = (await this.transport("POST", `/sessions/${id}/realize`, {
      candidate: { p: row.p, x: row.x },
      constraints,
    })) as JobEnvelope;
    return body.job;
  }

  async realizeTarget(
    id: string,
    target: number[],
    constraints: RealizeConstraints,
    matchTol?: number,
  ): Promise<JobBody> {
    const payload: Record<string, unknown> = { target, constraints };
    if (matchTol !== undefined) payload.match_tol = matchTol;
    const body = (await this.transport(
      "POST",
      `/sessions/${id}/realize`,
      payload,
    )) as JobEnvelope;
    return body.job;
  }

  async job(id: string): Promise<JobBody> {
    const body = (await this.transport("GET", `/jobs/${id}`)) as JobEnvelope;
    return body.job;
  }
}
