import { describe, expect, it } from "vitest";

import type { CandidateTable, JobEnvelope, SessionEnvelope } from "../src/api.js";
import { ExplorerClient, ServiceError } from "../src/api.js";
import { SessionController, replaySession } from "../src/controller.js";
import { FakeService, instantSleep } from "./helpers.js";

import candidates1 from "../fixtures/candidates_1.json";
import candidates2 from "../fixtures/candidates_2.json";
import candidates3 from "../fixtures/candidates_3.json";
import jobDone from "../fixtures/job_done.json";
import realizeSubmitted from "../fixtures/realize_submitted.json";
import sessionAfterRealize from "../fixtures/session_after_realize.json";
import sessionCreated from "../fixtures/session_created.json";
import sessionExtended1 from "../fixtures/session_extended_1.json";
import sessionExtended2 from "../fixtures/session_extended_2.json";

const SID = (sessionCreated as SessionEnvelope).session.id;

function walkthroughService(): FakeService {
  return new FakeService([
    { method: "POST", path: "/sessions", responses: [sessionCreated] },
    {
      method: "POST",
      path: `/sessions/${SID}/extend`,
      responses: [sessionExtended1, sessionExtended2],
    },
    {
      method: "GET",
      path: `/sessions/${SID}/candidates`,
      responses: [candidates1, candidates2, candidates3],
    },
  ]);
}

describe("SessionController", () => {
  it("starts a session and keeps the served table verbatim", async () => {
    const service = walkthroughService();
    const controller = new SessionController(
      new ExplorerClient(service.transport),
      instantSleep,
    );
    await controller.start(18, 135, [15.0]);
    expect(service.calls[0]).toEqual({
      method: "POST",
      path: "/sessions",
      body: { n: 18, m: 135, known: [15.0] },
    });
    expect(controller.state.session?.id).toBe(SID);
    expect(controller.state.table).toEqual(candidates1);
    expect(controller.state.timeline[0]).toEqual(candidates1);
  });

  it("issues extends and refreshes the table after each mutation", async () => {
    const service = walkthroughService();
    const controller = new SessionController(
      new ExplorerClient(service.transport),
      instantSleep,
    );
    await controller.start(18, 135, [15.0]);
    await controller.addValues([-3, -3, -3]);
    const extendCalls = service.callsTo("POST", `/sessions/${SID}/extend`);
    expect(extendCalls[0].body).toEqual({ values: [-3, -3, -3] });
    expect(controller.state.table).toEqual(candidates2);
    expect(controller.state.timeline).toHaveLength(2);
  });

  it("adopting a row sends the row's own p and full-precision x", async () => {
    const service = walkthroughService();
    const controller = new SessionController(
      new ExplorerClient(service.transport),
      instantSleep,
    );
    await controller.start(18, 135, [15.0]);
    const row = (candidates1 as CandidateTable).rows.find(
      (r) => r.passes_moment_test,
    )!;
    await controller.adopt(row, 3, 0);
    const call = service.callsTo("POST", `/sessions/${SID}/extend`)[0];
    expect(call.body).toEqual({
      adopt: { p: row.p, x: row.x, x_count: 3, y_count: 0 },
    });
  });

  it("only offers adoption while the family keeps two unknowns", async () => {
    const service = new FakeService([
      { method: "POST", path: "/sessions", responses: [sessionExtended2] },
      {
        method: "GET",
        path: `/sessions/${SID}/candidates`,
        responses: [candidates3],
      },
    ]);
    const controller = new SessionController(
      new ExplorerClient(service.transport),
      instantSleep,
    );
    await controller.start(18, 135, [15.0]);
    // |K| = 12 on 18 vertices: room for 4 more values, not 5
    expect(controller.canAdopt(4)).toBe(true);
    expect(controller.canAdopt(5)).toBe(false);
  });

  it("surfaces infeasible extensions without touching session state", async () => {
    const boom = new ServiceError("sum of squares too large", "second-moment", 400);
    const service = new FakeService([
      { method: "POST", path: "/sessions", responses: [sessionCreated] },
      { method: "GET", path: `/sessions/${SID}/candidates`, responses: [candidates1] },
      { method: "POST", path: `/sessions/${SID}/extend`, responses: [boom] },
    ]);
    const controller = new SessionController(
      new ExplorerClient(service.transport),
      instantSleep,
    );
    await controller.start(18, 135, [15.0]);
    await expect(controller.addValues([50.0])).rejects.toThrow(ServiceError);
    expect(controller.state.lastError).toContain("second-moment");
    expect(controller.state.session).toEqual((sessionCreated as SessionEnvelope).session);
    expect(controller.state.table).toEqual(candidates1);
  });

  it("allows only one mutation in flight per session", async () => {
    const service = walkthroughService();
    const controller = new SessionController(
      new ExplorerClient(service.transport),
      instantSleep,
    );
    await controller.start(18, 135, [15.0]);
    const first = controller.addValues([-3, -3, -3]);
    await expect(controller.addValues([-1])).rejects.toThrow(/in flight/);
    await first;
  });

  it("tracks a realization job to completion", async () => {
    const submitted = (realizeSubmitted as { job: { id: string } }).job;
    const done = (jobDone as JobEnvelope).job;
    const running = structuredClone(done);
    running.status = "running";
    running.result = null;
    const service = new FakeService([
      { method: "POST", path: "/sessions", responses: [sessionExtended2] },
      { method: "GET", path: `/sessions/${SID}/candidates`, responses: [candidates3] },
      {
        method: "POST",
        path: `/sessions/${SID}/realize`,
        responses: [realizeSubmitted],
      },
      {
        method: "GET",
        path: `/jobs/${submitted.id}`,
        responses: [{ job: running }, { job: running }, { job: done }],
      },
    ]);
    const controller = new SessionController(
      new ExplorerClient(service.transport),
      instantSleep,
    );
    await controller.start(18, 135, [15.0]);
    const row = (candidates3 as CandidateTable).rows.find(
      (r) => r.passes_moment_test,
    )!;
    const job = await controller.realize(row, { complement_cycles: true });
    expect(service.callsTo("POST", `/sessions/${SID}/realize`)[0].body).toEqual({
      candidate: { p: row.p, x: row.x },
      constraints: { complement_cycles: true },
    });
    expect(job.status).toBe("done");
    expect(job.result?.found[0].graph6).toBe(done.result!.found[0].graph6);
    expect(controller.state.job).toEqual(done);
  });

  it("branching replays a history prefix onto a fresh session", async () => {
    const recorded = (sessionAfterRealize as SessionEnvelope).session;
    const service = new FakeService([
      {
        method: "POST",
        path: "/sessions",
        responses: [sessionAfterRealize, sessionCreated],
      },
      {
        method: "GET",
        path: `/sessions/${SID}/candidates`,
        responses: [candidates3, candidates2],
      },
      {
        method: "POST",
        path: `/sessions/${SID}/extend`,
        responses: [sessionExtended1],
      },
    ]);
    const controller = new SessionController(
      new ExplorerClient(service.transport),
      instantSleep,
    );
    await controller.start(18, 135, [15.0]);
    await controller.branchFrom(1);
    const creates = service.callsTo("POST", "/sessions");
    expect(creates).toHaveLength(2);
    expect(creates[1].body).toEqual({ n: 18, m: 135, known: [15.0] });
    const extend = service.callsTo("POST", `/sessions/${SID}/extend`)[0];
    expect(extend.body).toEqual({
      values: recorded.history[1].values.slice(recorded.history[0].values.length),
    });
  });
});

describe("replaySession", () => {
  it("re-deriving every recorded extension reproduces the recorded tables", async () => {
    const recorded = (sessionAfterRealize as SessionEnvelope).session;
    const service = walkthroughService();
    const tables = await replaySession(
      new ExplorerClient(service.transport),
      recorded,
    );
    expect(tables).toEqual([candidates1, candidates2, candidates3]);
    const extendCalls = service.callsTo("POST", `/sessions/${SID}/extend`);
    expect(extendCalls).toHaveLength(2);
    expect(extendCalls[0].body).toEqual({ values: [-3, -3, -3] });
    const pentagonValues = recorded.history[2].values.slice(4);
    expect(extendCalls[1].body).toEqual({ values: pentagonValues });
  });
});
