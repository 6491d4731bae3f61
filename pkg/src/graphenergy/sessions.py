"""Persistent exploration sessions: grow a fixed eigenvalue family step by
step, reading the candidate table after each extension.

A session records (n, m) and an append-only history of K snapshots with
provenance (manual values, adopted candidate roots, or cycle motifs).  The
candidate table served for a snapshot is always recomputed fresh; the cached
copies written into the session file exist for the research record only.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .completion import (
    CompletionCandidate,
    complete_spectrum,
    derive_constants,
    format_value,
)
from .search import Budget, SearchResult, SearchSpec, realize_spectrum
from .spectra import cycle_spectrum

SCHEMA_VERSION = 1


class SessionError(ValueError):
    """Invalid session operation; ``constraint`` names what was violated."""

    def __init__(self, message: str, constraint: str):
        self.constraint = constraint
        super().__init__(message)


@dataclass(frozen=True)
class Motif:
    """A structural guess contributing eigenvalues to K.

    A cycle of the given length placed in the complement of an (n-3)-regular
    graph contributes -v-1 for each non-top cycle eigenvalue v.  Each motif
    after the first also accounts for one extra complement component, which
    shows up as one more -3 eigenvalue.
    """

    kind: str  # "cycle-in-complement" or "explicit-values"
    length: Optional[int] = None
    values: tuple[float, ...] = ()

    def contributed(self, prior_motifs: int) -> list[float]:
        if self.kind == "explicit-values":
            return list(self.values)
        if self.kind != "cycle-in-complement":
            raise SessionError(f"unknown motif kind {self.kind!r}", "motif-kind")
        if self.length is None or self.length < 3:
            raise SessionError("cycle motif needs length >= 3", "motif-length")
        spec = cycle_spectrum(self.length)
        mapped = [-v - 1.0 for v in spec.values[1:]]
        if prior_motifs > 0:
            mapped.append(-3.0)
        return mapped


@dataclass(frozen=True)
class Snapshot:
    values: tuple[float, ...]
    provenance: str


@dataclass
class Session:
    id: str
    n: int
    m: int
    history: list[Snapshot] = field(default_factory=list)
    motif_count: int = 0
    realizations: list[dict] = field(default_factory=list)

    @property
    def current(self) -> tuple[float, ...]:
        return self.history[-1].values

    def candidates(self) -> list[CompletionCandidate]:
        return complete_spectrum(self.n, self.m, self.current)


def _check_family(n: int, m: int, values: Sequence[float]) -> None:
    fam = derive_constants(values)
    if len(values) > n - 2:
        raise SessionError(
            f"|K| = {len(values)} exceeds n - 2 = {n - 2}", "family-size"
        )
    if fam.d > 2 * m + 1e-9:
        raise SessionError(
            f"sum of squares of K is {fam.d:.6g}, above 2m = {2 * m}", "second-moment"
        )


def create_session(
    n: int, m: int, initial: Sequence[float], session_id: Optional[str] = None
) -> Session:
    if m <= 0:
        raise SessionError(f"edge count must be positive, got {m}", "edge-count")
    if n < 2:
        raise SessionError("sessions need n >= 2", "vertex-count")
    values = tuple(float(v) for v in initial)
    _check_family(n, m, values)
    return Session(
        id=session_id or uuid.uuid4().hex[:12],
        n=n,
        m=m,
        history=[Snapshot(values=values, provenance="initial")],
    )


def extend_with_values(session: Session, values: Sequence[float], note: str = "") -> Session:
    new = session.current + tuple(float(v) for v in values)
    _check_family(session.n, session.m, new)
    label = note or ("values: " + ", ".join(format_value(v) for v in values))
    session.history.append(Snapshot(values=new, provenance=label))
    return session


def extend_with_adopted(
    session: Session, p: int, x: float, x_count: int, y_count: int = 0
) -> Session:
    """Adopt copies of a candidate's root values into K.

    The candidate is identified by its multiplicity row p and its x value.
    Copy counts are explicit because adopting all p + q copies would complete
    the spectrum and leave no room for further unknowns.
    """
    if x_count < 0 or y_count < 0 or x_count + y_count == 0:
        raise SessionError("adopt needs a positive number of copies", "adopt-count")
    match = None
    for cand in session.candidates():
        if cand.p == p and abs(cand.x - x) <= 1e-6:
            match = cand
            break
    if match is None:
        raise SessionError(f"no candidate with p={p}, x={x}", "adopt-target")
    if x_count > match.p or y_count > match.q:
        raise SessionError(
            f"candidate offers at most {match.p} copies of x and {match.q} of y",
            "adopt-count",
        )
    addition = [match.x] * x_count + [match.y] * y_count
    note = (
        f"adopt p={match.p} x={format_value(match.x)}: "
        f"{x_count} copies of x, {y_count} of y"
    )
    return extend_with_values(session, addition, note)


def extend_with_motif(session: Session, motif: Motif) -> Session:
    addition = motif.contributed(prior_motifs=session.motif_count)
    label = (
        f"motif: {motif.kind}({motif.length}) "
        f"[component {session.motif_count + 1}]"
        if motif.kind == "cycle-in-complement"
        else "motif: explicit-values"
    )
    out = extend_with_values(session, addition, label)
    out.motif_count += 1
    return out


def assemble_target(
    session: Session, candidate: CompletionCandidate
) -> tuple[float, ...]:
    """Full spectrum K + x^p + y^q for a realization request."""
    values = candidate.multiset(derive_constants(session.current))
    if len(values) != session.n:
        raise SessionError(
            f"assembled spectrum has {len(values)} values, expected {session.n}",
            "target-length",
        )
    return tuple(values)


def request_realization(
    session: Session,
    target: Sequence[float],
    connected: bool = False,
    bipartite: bool = False,
    regular_degree: Optional[int] = None,
    complement_cycles: bool = False,
    match_tol: float = 1e-6,
    budget: Optional[Budget] = None,
    progress=None,
) -> SearchResult:
    """Run a realization search for the assembled spectrum and record it."""
    if len(target) != session.n:
        raise SessionError(
            f"target has {len(target)} values, expected {session.n}", "target-length"
        )
    spec = SearchSpec(
        n=session.n,
        m=session.m,
        connected=connected,
        bipartite=bipartite,
        regular_degree=regular_degree,
        complement_cycles=complement_cycles,
        target=tuple(float(v) for v in target),
        match_tol=match_tol,
        objective="realize",
        budget=budget or Budget(),
    )
    result = realize_spectrum(spec, progress=progress)
    session.realizations.append(
        {
            "snapshot_index": len(session.history) - 1,
            "target": [float(v) for v in target],
            "found": [f.code for f in result.best],
            "exhausted": result.exhausted,
            "fast_fail_reasons": list(result.fast_fail_reasons),
        }
    )
    return result


# ---------------------------------------------------------------------------
# persistence
# ---------------------------------------------------------------------------


def session_document(session: Session) -> dict:
    """Serializable session state, including per-snapshot candidate tables."""
    snapshots = []
    for snap in session.history:
        cands = complete_spectrum(session.n, session.m, snap.values)
        snapshots.append(
            {
                "values": list(snap.values),
                "provenance": snap.provenance,
                "candidates": [
                    {
                        "p": c.p,
                        "q": c.q,
                        "x": c.x,
                        "y": c.y,
                        "energy": c.energy,
                        "third_moment_over_6": c.third_moment_over_6,
                        "passes_moment_test": c.passes_moment_test,
                    }
                    for c in cands
                ],
            }
        )
    return {
        "schema": SCHEMA_VERSION,
        "id": session.id,
        "n": session.n,
        "m": session.m,
        "motif_count": session.motif_count,
        "history": snapshots,
        "realizations": session.realizations,
    }


class SessionStore:
    """In-memory session registry with explicit save/load to a directory."""

    def __init__(self, directory: Optional[str | Path] = None):
        self._dir = Path(directory) if directory else None
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}
        if self._dir is not None:
            self._dir.mkdir(parents=True, exist_ok=True)
            for file in sorted(self._dir.glob("*.json")):
                session = _from_document(json.loads(file.read_text()))
                self._sessions[session.id] = session

    def add(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.id] = session
            self._persist(session)

    def get(self, session_id: str) -> Session:
        with self._lock:
            try:
                return self._sessions[session_id]
            except KeyError:
                raise SessionError(f"no session {session_id!r}", "session-id") from None

    def ids(self) -> list[str]:
        with self._lock:
            return sorted(self._sessions)

    def save(self, session: Session) -> None:
        with self._lock:
            self._persist(session)

    def _persist(self, session: Session) -> None:
        if self._dir is None:
            return
        doc = session_document(session)
        path = self._dir / f"{session.id}.json"
        path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _from_document(doc: dict) -> Session:
    if doc.get("schema") != SCHEMA_VERSION:
        raise SessionError(
            f"unsupported session schema {doc.get('schema')!r}", "schema"
        )
    session = Session(
        id=doc["id"],
        n=doc["n"],
        m=doc["m"],
        motif_count=doc.get("motif_count", 0),
        realizations=list(doc.get("realizations", [])),
    )
    for snap in doc["history"]:
        session.history.append(
            Snapshot(values=tuple(snap["values"]), provenance=snap["provenance"])
        )
    return session
