/**
 * Session controller: what-if exploration state, one mutation in flight at a
 * time, independent job polling, and replay (branching) support.
 */

import type {
  CandidateRow,
  CandidateTable,
  JobBody,
  RealizeConstraints,
  SessionBody,
} from "./api.js";
import { ExplorerClient, ServiceError } from "./api.js";

export type Sleeper = (ms: number) => Promise<void>;

const defaultSleep: Sleeper = (ms) => new Promise((resolve) => setTimeout(resolve, ms));

export interface ControllerState {
  session: SessionBody | null;
  table: CandidateTable | null;
  /** candidate table observed after each history entry, index-aligned */
  timeline: CandidateTable[];
  job: JobBody | null;
  lastError: string | null;
}

export class SessionController {
  readonly state: ControllerState = {
    session: null,
    table: null,
    timeline: [],
    job: null,
    lastError: null,
  };

  private mutationInFlight = false;

  constructor(
    private readonly client: ExplorerClient,
    private readonly sleep: Sleeper = defaultSleep,
    private readonly pollMs = 150,
  ) {}

  async start(n: number, m: number, known: number[]): Promise<void> {
    const session = await this.client.createSession(n, m, known);
    this.state.session = session;
    this.state.timeline = [];
    await this.refreshTable();
  }

  async refreshTable(): Promise<CandidateTable> {
    const session = this.requireSession();
    const table = await this.client.candidates(session.id);
    this.state.table = table;
    this.state.timeline[session.history.length - 1] = table;
    return table;
  }

  /** Adoption is offered only while the family keeps at least two unknowns. */
  canAdopt(copies: number): boolean {
    const session = this.requireSession();
    return session.known.values.length + copies <= session.n - 2;
  }

  async addValues(values: number[]): Promise<void> {
    await this.mutate((id) => this.client.extendValues(id, values));
  }

  async adopt(row: CandidateRow, xCount: number, yCount: number): Promise<void> {
    await this.mutate((id) => this.client.adoptCandidate(id, row, xCount, yCount));
  }

  async addMotif(kind: string, length: number): Promise<void> {
    await this.mutate((id) => this.client.extendMotif(id, kind, length));
  }

  /**
   * Undo is branching: history itself is immutable, so going back means
   * replaying a prefix of the recorded extensions onto a fresh session.
   */
  async branchFrom(index: number): Promise<void> {
    const session = this.requireSession();
    const history = session.history.slice(0, index + 1);
    const fresh = await this.client.createSession(
      session.n,
      session.m,
      [...history[0].values],
    );
    let current = fresh;
    for (let step = 1; step < history.length; step += 1) {
      const previous = history[step - 1].values.length;
      const addition = history[step].values.slice(previous);
      current = await this.client.extendValues(fresh.id, [...addition]);
    }
    this.state.session = current;
    this.state.timeline = [];
    await this.refreshTable();
  }

  async realize(
    row: CandidateRow,
    constraints: RealizeConstraints,
  ): Promise<JobBody> {
    const session = this.requireSession();
    const submitted = await this.client.realizeCandidate(session.id, row, constraints);
    return this.track(submitted.id);
  }

  async track(jobId: string): Promise<JobBody> {
    let job = await this.client.job(jobId);
    this.state.job = job;
    while (job.status === "queued" || job.status === "running") {
      await this.sleep(this.pollMs);
      job = await this.client.job(jobId);
      this.state.job = job;
    }
    return job;
  }

  private requireSession(): SessionBody {
    if (this.state.session === null) {
      throw new Error("no session started");
    }
    return this.state.session;
  }

  private async mutate(
    action: (sessionId: string) => Promise<SessionBody>,
  ): Promise<void> {
    if (this.mutationInFlight) {
      throw new Error("another session mutation is still in flight");
    }
    const session = this.requireSession();
    this.mutationInFlight = true;
    try {
      this.state.session = await action(session.id);
      this.state.lastError = null;
      await this.refreshTable();
    } catch (error) {
      // surfaced, never destructive: the session and table stay as they were
      if (error instanceof ServiceError) {
        this.state.lastError = `${error.constraint}: ${error.message}`;
      } else {
        this.state.lastError = String(error);
      }
      throw error;
    } finally {
      this.mutationInFlight = false;
    }
  }
}

/**
 * Replay a recorded session's extensions against a fresh service and return
 * the candidate table observed after every step.
 */
export async function replaySession(
  client: ExplorerClient,
  recorded: SessionBody,
): Promise<CandidateTable[]> {
  const fresh = await client.createSession(
    recorded.n,
    recorded.m,
    [...recorded.history[0].values],
  );
  const tables: CandidateTable[] = [await client.candidates(fresh.id)];
  for (let step = 1; step < recorded.history.length; step += 1) {
    const previous = recorded.history[step - 1].values.length;
    const addition = recorded.history[step].values.slice(previous);
    await client.extendValues(fresh.id, [...addition]);
    tables.push(await client.candidates(fresh.id));
  }
  return tables;
}
