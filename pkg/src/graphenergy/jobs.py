"""Background jobs for long-running searches.

Realization requests return a token immediately; polling the registry gives
progress (candidate graphs examined) until the search lands.  Jobs run in
daemon threads and never touch each other's state.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from typing import Any, Callable, Optional


@dataclass
class Job:
    id: str
    status: str = "queued"  # queued | running | done | error
    graphs_examined: int = 0
    started: float = field(default_factory=time.monotonic)
    result: Optional[Any] = None
    error: Optional[str] = None

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.started


class JobRegistry:
    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._jobs: dict[str, Job] = {}

    def submit(self, work: Callable[[Callable[[int], None]], Any]) -> Job:
        """Run work(progress_cb) in a thread; returns the job immediately."""
        job = Job(id=uuid.uuid4().hex[:12])
        with self._lock:
            self._jobs[job.id] = job

        def progress(count: int) -> None:
            with self._lock:
                job.graphs_examined = count

        def run() -> None:
            with self._lock:
                job.status = "running"
                job.started = time.monotonic()
            try:
                result = work(progress)
            except Exception as exc:  # surfaced to the poller, not swallowed
                with self._lock:
                    job.status = "error"
                    job.error = f"{type(exc).__name__}: {exc}"
                return
            with self._lock:
                job.result = result
                job.status = "done"

        threading.Thread(target=run, daemon=True).start()
        return job

    def get(self, job_id: str) -> Optional[Job]:
        with self._lock:
            return self._jobs.get(job_id)

    def snapshot(self, job_id: str) -> Optional[dict]:
        with self._lock:
            job = self._jobs.get(job_id)
            if job is None:
                return None
            return {
                "id": job.id,
                "status": job.status,
                "graphs_examined": job.graphs_examined,
                "elapsed_seconds": job.elapsed,
            }

    def wait(self, job_id: str, timeout: float = 60.0, poll: float = 0.02) -> Job:
        deadline = time.monotonic() + timeout
        while time.monotonic() < deadline:
            job = self.get(job_id)
            if job is not None and job.status in ("done", "error"):
                return job
            time.sleep(poll)
        raise TimeoutError(f"job {job_id} still running after {timeout}s")
