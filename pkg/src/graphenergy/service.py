"""REST service exposing completion tables, session exploration, and
realization jobs.

Wire format is JSON; the field names used here are a compatibility contract
(see the API reference in the README) and tests pin them.  Every numeric
value is served at full precision together with a 4-decimal ``display``
rendering that matches the plain-text tables.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.encoders import jsonable_encoder
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .completion import (
    CompletionCandidate,
    InfeasibleError,
    complete_spectrum,
    derive_constants,
    format_value,
)
from .jobs import JobRegistry
from .search import Budget, SearchResult
from .sessions import (
    Motif,
    Session,
    SessionError,
    SessionStore,
    assemble_target,
    create_session,
    extend_with_adopted,
    extend_with_motif,
    extend_with_values,
    request_realization,
)


class CreateSessionBody(BaseModel):
    n: int
    m: int
    known: list[float] = Field(default_factory=list)


class AdoptBody(BaseModel):
    p: int
    x: float
    x_count: int = 0
    y_count: int = 0


class MotifBody(BaseModel):
    kind: str
    length: Optional[int] = None
    values: list[float] = Field(default_factory=list)


class ExtendBody(BaseModel):
    values: Optional[list[float]] = None
    adopt: Optional[AdoptBody] = None
    motif: Optional[MotifBody] = None


class ConstraintsBody(BaseModel):
    connected: bool = False
    bipartite: bool = False
    regular_degree: Optional[int] = None
    complement_cycles: bool = False


class BudgetBody(BaseModel):
    max_graphs: int = 10_000_000
    max_seconds: float = 300.0


class RealizeBody(BaseModel):
    candidate: Optional[AdoptBody] = None
    target: Optional[list[float]] = None
    constraints: ConstraintsBody = Field(default_factory=ConstraintsBody)
    match_tol: float = 1e-6
    budget: BudgetBody = Field(default_factory=BudgetBody)


def candidate_payload(c: CompletionCandidate) -> dict:
    return {
        "p": c.p,
        "q": c.q,
        "x": c.x,
        "y": c.y,
        "energy": c.energy,
        "third_moment_over_6": c.third_moment_over_6,
        "passes_moment_test": c.passes_moment_test,
        "sign_split": c.sign_split,
        "coincident": c.coincident,
        "display": {
            "x": format_value(c.x),
            "y": format_value(c.y),
            "energy": format_value(c.energy),
            "third_moment_over_6": format_value(c.third_moment_over_6),
        },
    }


def session_payload(session: Session) -> dict:
    fam = derive_constants(session.current)
    return {
        "session": {
            "id": session.id,
            "n": session.n,
            "m": session.m,
            "known": {
                "values": list(fam.values),
                "c_plus": fam.c_plus,
                "c_minus": fam.c_minus,
                "c": fam.c,
                "d": fam.d,
            },
            "history": [
                {"values": list(s.values), "provenance": s.provenance}
                for s in session.history
            ],
            "motif_count": session.motif_count,
            "realizations": session.realizations,
        }
    }


def candidates_payload(session: Session) -> dict:
    return {
        "n": session.n,
        "m": session.m,
        "known": list(session.current),
        "rows": [candidate_payload(c) for c in session.candidates()],
    }


def result_payload(result: SearchResult) -> dict:
    return {
        "found": [
            {
                "graph6": f.code,
                "energy": f.energy,
                "spectrum": list(f.spectrum.values),
                "groups": [[v, mult] for v, mult in f.spectrum.groups()],
                "display": {"energy": format_value(f.energy)},
            }
            for f in result.best
        ],
        "exhausted": result.exhausted,
        "certified_empty": result.exhausted and not result.best,
        "fast_fail_reasons": list(result.fast_fail_reasons),
    }


def create_app(
    session_dir: Optional[str] = None,
    store: Optional[SessionStore] = None,
    registry: Optional[JobRegistry] = None,
) -> FastAPI:
    app = FastAPI(title="graphenergy explorer", version="0.1.0")
    app.state.store = store or SessionStore(session_dir)
    app.state.jobs = registry or JobRegistry()

    @app.exception_handler(SessionError)
    async def _session_error(_, exc: SessionError):
        status = 404 if exc.constraint == "session-id" else 400
        return JSONResponse(
            status_code=status,
            content={"error": {"message": str(exc), "constraint": exc.constraint}},
        )

    @app.exception_handler(InfeasibleError)
    async def _infeasible(_, exc: InfeasibleError):
        return JSONResponse(
            status_code=400,
            content={"error": {"message": str(exc), "constraint": "infeasible"}},
        )

    @app.post("/sessions")
    def post_session(body: CreateSessionBody):
        session = create_session(body.n, body.m, body.known)
        session.candidates()  # fail fast on infeasible completion input
        app.state.store.add(session)
        return session_payload(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        return session_payload(app.state.store.get(session_id))

    @app.get("/sessions/{session_id}/candidates")
    def get_candidates(session_id: str):
        return candidates_payload(app.state.store.get(session_id))

    @app.post("/sessions/{session_id}/extend")
    def post_extend(session_id: str, body: ExtendBody):
        session = app.state.store.get(session_id)
        chosen = [body.values is not None, body.adopt is not None, body.motif is not None]
        if sum(chosen) != 1:
            raise SessionError(
                "extend needs exactly one of values, adopt, motif", "extend-kind"
            )
        if body.values is not None:
            extend_with_values(session, body.values)
        elif body.adopt is not None:
            extend_with_adopted(
                session, body.adopt.p, body.adopt.x, body.adopt.x_count, body.adopt.y_count
            )
        else:
            extend_with_motif(
                session,
                Motif(
                    kind=body.motif.kind,
                    length=body.motif.length,
                    values=tuple(body.motif.values),
                ),
            )
        app.state.store.save(session)
        return session_payload(session)

    @app.post("/sessions/{session_id}/realize")
    def post_realize(session_id: str, body: RealizeBody):
        session = app.state.store.get(session_id)
        if (body.candidate is None) == (body.target is None):
            raise SessionError(
                "realize needs exactly one of candidate, target", "realize-kind"
            )
        if body.candidate is not None:
            match = None
            for cand in session.candidates():
                if cand.p == body.candidate.p and abs(cand.x - body.candidate.x) <= 1e-6:
                    match = cand
                    break
            if match is None:
                raise SessionError(
                    f"no candidate with p={body.candidate.p}, x={body.candidate.x}",
                    "adopt-target",
                )
            target = assemble_target(session, match)
        else:
            target = tuple(body.target)
            if len(target) != session.n:
                raise SessionError(
                    f"target has {len(target)} values, expected {session.n}",
                    "target-length",
                )
        constraints = body.constraints
        budget = Budget(
            max_graphs=body.budget.max_graphs, max_seconds=body.budget.max_seconds
        )

        def work(progress):
            result = request_realization(
                session,
                target,
                connected=constraints.connected,
                bipartite=constraints.bipartite,
                regular_degree=constraints.regular_degree,
                complement_cycles=constraints.complement_cycles,
                match_tol=body.match_tol,
                budget=budget,
                progress=progress,
            )
            app.state.store.save(session)
            return result

        job = app.state.jobs.submit(work)
        return {"job": {"id": job.id, "status": job.status}}

    @app.get("/jobs/{job_id}")
    def get_job(job_id: str):
        snap = app.state.jobs.snapshot(job_id)
        if snap is None:
            raise HTTPException(
                status_code=404,
                detail={"message": f"no job {job_id!r}", "constraint": "job-id"},
            )
        job = app.state.jobs.get(job_id)
        payload = {
            "id": snap["id"],
            "status": snap["status"],
            "progress": {
                "graphs_examined": snap["graphs_examined"],
                "elapsed_seconds": snap["elapsed_seconds"],
            },
            "result": None,
            "error": job.error,
        }
        if job.status == "done" and job.result is not None:
            payload["result"] = result_payload(job.result)
        return {"job": jsonable_encoder(payload)}

    @app.post("/complete")
    def post_complete(body: CreateSessionBody):
        """Stateless candidate table for (n, m, K); convenience endpoint."""
        rows = complete_spectrum(body.n, body.m, body.known)
        return {
            "n": body.n,
            "m": body.m,
            "known": list(body.known),
            "rows": [candidate_payload(c) for c in rows],
        }

    return app
