"""Isomorph-free search over constrained graph classes.

Two independent enumeration paths exist on purpose:

* the production path grows graphs one vertex at a time, pruning by degree
  feasibility, bipartiteness, edge budgets and (for realization targets)
  eigenvalue interlacing, and rejects isomorphs per level via integer
  invariant buckets plus exact isomorphism search;
* ``bitmask_classes`` deduplicates every labeled graph on n <= 7 vertices by
  brute force over all vertex permutations, and is the completeness oracle
  the first path is tested against.

Enumeration is deterministic for a fixed spec.  Budgets are explicit: when a
graph-count or wall-clock budget trips, results carry ``exhausted=False``
rather than being silently truncated.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field, replace
from typing import Callable, Iterator, Literal, Optional, Sequence

import numpy as np

from . import graph6
from .canon import are_isomorphic
from .graphs import Graph, complement, union_of_cycles
from .spectra import Spectrum, cycle_spectrum, energy, is_bipartite_spectral

Objective = Literal["max", "min", "realize"]

#: default budgets; the historical big runs (billions of graphs) are out of reach
DEFAULT_MAX_GRAPHS = 10_000_000
DEFAULT_MAX_SECONDS = 300.0


class BudgetExceeded(Exception):
    """Internal signal: stop enumerating, mark the result non-exhaustive."""


@dataclass(frozen=True)
class Budget:
    max_graphs: int = DEFAULT_MAX_GRAPHS
    max_seconds: float = DEFAULT_MAX_SECONDS

    def __post_init__(self) -> None:
        if self.max_graphs <= 0 or self.max_seconds <= 0:
            raise ValueError("budgets must be positive")


@dataclass(frozen=True)
class SearchSpec:
    """A constrained graph class plus an objective over it."""

    n: int
    m: Optional[int] = None
    connected: bool = False
    bipartite: bool = False
    regular_degree: Optional[int] = None
    tree: bool = False
    complement_cycles: bool = False
    objective: Optional[Objective] = None
    target: Optional[tuple[float, ...]] = None
    match_tol: float = 1e-6
    budget: Budget = field(default_factory=Budget)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")
        r = self.regular_degree
        if r is not None:
            if not (0 <= r < self.n):
                raise ValueError(f"regular degree {r} out of range for n={self.n}")
            if (self.n * r) % 2:
                raise ValueError(f"no {r}-regular graph on {self.n} vertices (odd degree sum)")
            if self.m is not None and self.m != self.n * r // 2:
                raise ValueError(
                    f"m={self.m} conflicts with regular degree {r} (needs {self.n * r // 2})"
                )
        if self.tree and self.m is not None and self.m != self.n - 1:
            raise ValueError(f"m={self.m} conflicts with the tree constraint (needs {self.n - 1})")
        if self.tree and r is not None and not (r == 1 and self.n == 2):
            raise ValueError("tree and regular-degree constraints conflict")
        if self.tree and self.complement_cycles:
            raise ValueError("tree and complement-of-cycles constraints conflict")
        if self.complement_cycles:
            if r is not None and r != self.n - 3:
                raise ValueError(
                    "complement-of-cycles graphs are regular of degree n-3"
                )
            want = self.n * (self.n - 3) // 2
            if self.m is not None and self.m != want:
                raise ValueError(f"m={self.m} conflicts with complement-of-cycles (needs {want})")
        if self.target is not None and len(self.target) != self.n:
            raise ValueError("target spectrum length must equal n")
        if self.match_tol <= 0:
            raise ValueError("match tolerance must be positive")

    def effective_m(self) -> Optional[int]:
        if self.m is not None:
            return self.m
        if self.regular_degree is not None:
            return self.n * self.regular_degree // 2
        if self.tree:
            return self.n - 1
        if self.complement_cycles:
            return self.n * (self.n - 3) // 2
        return None


@dataclass(frozen=True)
class FoundGraph:
    graph: Graph
    code: str
    spectrum: Spectrum
    energy: float


@dataclass
class SearchResult:
    best: list[FoundGraph]
    graphs_examined: int
    exhausted: bool
    empty_class: bool = False
    fast_fail_reasons: list[str] = field(default_factory=list)


class _Tracker:
    """Budget bookkeeping shared across one search run."""

    _CLOCK_STRIDE = 1024  # wall-clock and progress checks amortized over charges

    def __init__(self, budget: Budget, progress: Optional[Callable[[int], None]] = None):
        self.budget = budget
        self.examined = 0
        self.started = time.monotonic()
        self.exhausted = True
        self._progress = progress
        self._next_check = self._CLOCK_STRIDE

    def charge(self, count: int = 1) -> None:
        self.examined += count
        if self.examined > self.budget.max_graphs:
            self.exhausted = False
            raise BudgetExceeded
        if self.examined >= self._next_check:
            self._next_check = self.examined + self._CLOCK_STRIDE
            if self._progress is not None:
                self._progress(self.examined)
            if time.monotonic() - self.started > self.budget.max_seconds:
                self.exhausted = False
                raise BudgetExceeded

    def finish_progress(self) -> None:
        if self._progress is not None:
            self._progress(self.examined)

    @property
    def elapsed(self) -> float:
        return time.monotonic() - self.started


# ---------------------------------------------------------------------------
# integer invariants for isomorph rejection
# ---------------------------------------------------------------------------


def _walk_keys(mats: np.ndarray, ms: np.ndarray, degs: np.ndarray) -> list[tuple]:
    """Exact integer bucket keys for a batch of adjacency matrices.

    Uses closed-walk counts (diagonals of A^3 and A^4, trace of A^5), which
    are exact in int64 at desk scale, so no float rounding can split an
    isomorphism class across buckets.
    """
    a = mats.astype(np.int64)
    a2 = a @ a
    a3 = a2 @ a
    d3 = np.sort(np.diagonal(a3, axis1=1, axis2=2), axis=1)
    d4 = np.sort(np.einsum("bij,bij->bi", a2, a2), axis=1)
    t5 = np.einsum("bij,bji->b", a2, a3)
    degs_sorted = np.sort(degs, axis=1)
    return [
        (
            int(ms[i]),
            tuple(degs_sorted[i].tolist()),
            tuple(d3[i].tolist()),
            tuple(d4[i].tolist()),
            int(t5[i]),
        )
        for i in range(len(ms))
    ]


class _LevelStore:
    """Per-level isomorph rejection: invariant buckets + exact search."""

    def __init__(self) -> None:
        self.entries: list[tuple[Graph, np.ndarray]] = []
        self._buckets: dict[tuple, list[int]] = {}

    def add(self, g: Graph, eigs: np.ndarray, key: tuple) -> bool:
        bucket = self._buckets.setdefault(key, [])
        for idx in bucket:
            if are_isomorphic(self.entries[idx][0], g):
                return False
        bucket.append(len(self.entries))
        self.entries.append((g, eigs))
        return True


# ---------------------------------------------------------------------------
# vertex-augmentation enumeration
# ---------------------------------------------------------------------------


def _interlacing_ok(eigs_desc: np.ndarray, target_desc: np.ndarray, tol: float) -> np.ndarray:
    """Boolean mask: which rows of eigs_desc interlace the target.

    For an induced subgraph on j of n vertices: lambda_i <= target_i and
    lambda_i >= target_{i + n - j} (1-indexed), both within tol.
    """
    num, j = eigs_desc.shape
    n = len(target_desc)
    upper = target_desc[:j]
    lower = target_desc[n - j :]
    ok_hi = np.all(eigs_desc <= upper + tol, axis=1)
    ok_lo = np.all(eigs_desc >= lower - tol, axis=1)
    return ok_hi & ok_lo


def _augmentation_stream(spec: SearchSpec, tracker: _Tracker) -> Iterator[tuple[Graph, np.ndarray]]:
    n = spec.n
    m_goal = spec.effective_m()
    r = spec.regular_degree
    cap = r if r is not None else n - 1
    want_forest = spec.tree
    # the first vertex of a connected graph is arbitrary; later vertices must
    # attach to the existing part, which keeps every prefix connected
    prefix_connected = spec.connected or spec.tree
    target = (
        np.array(sorted(spec.target, reverse=True), dtype=float)
        if spec.target is not None
        else None
    )
    inter_tol = spec.match_tol + 1e-9

    level = _LevelStore()
    seed = Graph.from_edges(1, [])
    level.add(seed, np.zeros(1), (0, (0,), (0,), (0,), 0))

    chunk = 4096
    for j in range(1, n):
        remaining_after = n - (j + 1)
        future_max = sum(min(cap, j + 1 + t) for t in range(remaining_after))
        size = j + 1
        next_level = _LevelStore()

        def flush(block: list[tuple[Graph, tuple[int, ...]]]) -> None:
            if not block:
                return
            mats = np.zeros((len(block), size, size))
            ms = np.zeros(len(block), dtype=np.int64)
            degs = np.zeros((len(block), size), dtype=np.int64)
            graphs: list[Optional[Graph]] = []
            for i, (parent, subset) in enumerate(block):
                edges = set(parent.edges)
                edges.update((v, j) for v in subset)
                child = Graph(size, frozenset(edges))
                if spec.bipartite and not child.is_bipartite():
                    graphs.append(None)
                    continue
                a = mats[i]
                for u, v in edges:
                    a[u, v] = 1.0
                    a[v, u] = 1.0
                ms[i] = len(edges)
                degs[i] = a.sum(axis=0)
                graphs.append(child)
            alive = [i for i, g in enumerate(graphs) if g is not None]
            if not alive:
                return
            eig_all = np.linalg.eigvalsh(mats[alive])[:, ::-1]
            if target is not None:
                keep_mask = _interlacing_ok(eig_all, target, inter_tol)
            else:
                keep_mask = np.ones(len(alive), dtype=bool)
            kept = [alive[i] for i in range(len(alive)) if keep_mask[i]]
            if not kept:
                return
            keys = _walk_keys(mats[kept], ms[kept], degs[kept])
            eig_kept = eig_all[keep_mask]
            for row, idx in enumerate(kept):
                next_level.add(graphs[idx], eig_kept[row], keys[row])

        batch: list[tuple[Graph, tuple[int, ...]]] = []
        for g, _ in level.entries:
            deg = g.degrees()
            eligible = [v for v in range(j) if deg[v] < cap]
            max_size = min(cap, len(eligible))
            if want_forest:
                max_size = min(max_size, 1)
            min_size = 1 if (prefix_connected and j >= 1) else 0
            if r is not None:
                # every short vertex must still reach enough future vertices
                slack = remaining_after + 1  # the vertex being added counts too
                if any(r - d > slack for d in deg):
                    continue
            for subset_size in range(min_size, max_size + 1):
                if m_goal is not None:
                    mp = g.m + subset_size
                    if mp > m_goal:
                        break
                    if mp + future_max < m_goal:
                        continue
                for subset in itertools.combinations(eligible, subset_size):
                    if r is not None:
                        newdeg = list(deg)
                        for v in subset:
                            newdeg[v] += 1
                        newdeg.append(subset_size)
                        if remaining_after == 0:
                            if any(d != r for d in newdeg):
                                continue
                        else:
                            if any(r - d > remaining_after for d in newdeg):
                                continue
                            if sum(r - d for d in newdeg) > remaining_after * r:
                                continue
                    tracker.charge()
                    batch.append((g, subset))
                    if len(batch) >= chunk:
                        flush(batch)
                        batch = []
        flush(batch)
        if not next_level.entries:
            return
        level = next_level

    for g, eigs in level.entries:
        if m_goal is not None and g.m != m_goal:
            continue
        if r is not None and any(d != r for d in g.degrees()):
            continue
        if (spec.connected or spec.tree) and not g.is_connected():
            continue
        if spec.tree and g.m != g.n - 1:
            continue
        yield g, eigs


# ---------------------------------------------------------------------------
# special-cased classes
# ---------------------------------------------------------------------------


def partitions_min_part(total: int, min_part: int = 3) -> Iterator[tuple[int, ...]]:
    """Partitions of total into parts >= min_part, parts descending."""

    def rec(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        top = min(max_part, remaining)
        for part in range(top, min_part - 1, -1):
            rest = remaining - part
            if rest == 0 or rest >= min_part:
                for tail in rec(rest, part):
                    yield (part,) + tail

    if total < min_part:
        return
    yield from rec(total, total)


def cycle_partition_spectrum(partition: Sequence[int], n: int) -> Spectrum:
    """Analytic spectrum of the complement of a disjoint union of cycles.

    The union is 2-regular, so the complement spectrum follows from the
    regular-complement map: one top eigenvalue 2 becomes n - 3, every other
    union eigenvalue v becomes -v - 1.  With c cycles the union has c copies
    of 2, so the complement picks up eigenvalue -3 with multiplicity c - 1.
    """
    parts = list(partition)
    if sum(parts) != n:
        raise ValueError(f"partition {parts} does not sum to n={n}")
    values: list[float] = []
    for part in parts:
        values.extend(cycle_spectrum(part).values)
    values.sort(reverse=True)
    top, rest = values[0], values[1:]
    if abs(top - 2.0) > 1e-9:
        raise AssertionError("union of cycles must have top eigenvalue 2")
    return Spectrum.from_values([float(n - 3)] + [-v - 1.0 for v in rest])


def _complement_cycles_stream(
    spec: SearchSpec, tracker: _Tracker
) -> Iterator[tuple[Graph, np.ndarray]]:
    for parts in partitions_min_part(spec.n, 3):
        tracker.charge()
        g = complement(union_of_cycles(parts))
        if spec.connected and not g.is_connected():
            continue
        if spec.bipartite and not g.is_bipartite():
            continue
        eigs = np.linalg.eigvalsh(g.adjacency_matrix())[::-1]
        yield g, eigs


def _prufer_tree(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, w), max(u, w)))
    return edges


def _tree_certificate(n: int, edges: Sequence[tuple[int, int]]) -> tuple:
    """Canonical rooted-at-center certificate (AHU) of a labeled tree."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    if n == 1:
        return ("()",)
    # peel leaves to find the one- or two-vertex center
    degree = [len(a) for a in adj]
    layer = [v for v in range(n) if degree[v] == 1]
    removed = 0
    alive = [True] * n
    while n - removed > 2:
        nxt = []
        for v in layer:
            alive[v] = False
            removed += 1
            for w in adj[v]:
                if alive[w]:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = [v for v in range(n) if alive[v]]

    def encode(v: int, parent: int) -> str:
        subs = sorted(encode(w, v) for w in adj[v] if w != parent)
        return "(" + "".join(subs) + ")"

    return tuple(sorted(encode(c, -1) for c in centers))


def _tree_stream_prufer(spec: SearchSpec, tracker: _Tracker) -> Iterator[tuple[Graph, np.ndarray]]:
    n = spec.n
    if n == 1:
        yield Graph.from_edges(1, []), np.zeros(1)
        return
    if n == 2:
        g = Graph.from_edges(2, [(0, 1)])
        yield g, np.linalg.eigvalsh(g.adjacency_matrix())[::-1]
        return
    seen: set[tuple] = set()
    reps: list[Graph] = []
    for seq in itertools.product(range(n), repeat=n - 2):
        tracker.charge()
        edges = _prufer_tree(seq, n)
        cert = _tree_certificate(n, edges)
        if cert in seen:
            continue
        seen.add(cert)
        reps.append(Graph.from_edges(n, edges))
    for g in reps:
        yield g, np.linalg.eigvalsh(g.adjacency_matrix())[::-1]


#: labeled-tree generation stays exact up to this size; above it the
#: augmentation path (with forest pruning) takes over
PRUFER_LIMIT = 9


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def _stream(spec: SearchSpec, tracker: _Tracker) -> Iterator[tuple[Graph, np.ndarray]]:
    if spec.complement_cycles:
        return _complement_cycles_stream(spec, tracker)
    if spec.tree and spec.n <= PRUFER_LIMIT:
        return _tree_stream_prufer(spec, tracker)
    return _augmentation_stream(spec, tracker)


def enumerate_graphs(spec: SearchSpec, tracker: Optional[_Tracker] = None) -> Iterator[Graph]:
    """One representative per isomorphism class satisfying the constraints.

    Order is deterministic for a fixed spec.  If a budget trips, the stream
    simply ends early; callers needing the distinction should pass their own
    tracker and inspect ``exhausted``.
    """
    own = tracker or _Tracker(spec.budget)
    try:
        for g, _ in _stream(spec, own):
            yield g
    except BudgetExceeded:
        return


def _found(g: Graph, eigs: np.ndarray) -> FoundGraph:
    s = Spectrum.from_values(eigs)
    return FoundGraph(graph=g, code=graph6.encode(g), spectrum=s, energy=energy(s))


def extremal_energy(
    spec: SearchSpec, progress: Optional[Callable[[int], None]] = None
) -> SearchResult:
    """All co-optimal graphs for the max/min energy objective, within budget."""
    if spec.objective not in ("max", "min"):
        raise ValueError("extremal_energy needs objective 'max' or 'min'")
    sign = 1.0 if spec.objective == "max" else -1.0
    tracker = _Tracker(spec.budget, progress)
    best_score: Optional[float] = None
    best: list[FoundGraph] = []
    try:
        for g, eigs in _stream(spec, tracker):
            e = float(np.abs(eigs).sum())
            score = sign * e
            if best_score is None or score > best_score + 1e-9:
                best_score = score
                best = [_found(g, eigs)]
            elif abs(score - best_score) <= 1e-9:
                best.append(_found(g, eigs))
    except BudgetExceeded:
        pass
    tracker.finish_progress()
    return SearchResult(
        best=best,
        graphs_examined=tracker.examined,
        exhausted=tracker.exhausted,
        empty_class=tracker.exhausted and not best,
    )


def _moment_fast_fail(spec: SearchSpec) -> list[str]:
    t = np.array(sorted(spec.target, reverse=True), dtype=float)
    tol = spec.match_tol
    reasons = []
    m1 = float(t.sum())
    if abs(m1) > len(t) * tol + 1e-9:
        reasons.append(f"first moment is {m1:.6g}, not 0")
    m2 = float((t**2).sum())
    m2_tol = 2.0 * float(np.abs(t).sum()) * tol + 1e-9
    nearest_even = 2 * round(m2 / 2.0)
    if abs(m2 - nearest_even) > m2_tol:
        reasons.append(f"second moment {m2:.6g} is not an even integer")
    elif spec.m is not None and nearest_even != 2 * spec.m:
        reasons.append(f"second moment {m2:.6g} does not equal 2m = {2 * spec.m}")
    m3 = float((t**3).sum()) / 6.0
    m3_tol = 0.5 * float((t**2).sum()) * tol + 1e-6
    if abs(m3 - round(m3)) > m3_tol or round(m3) < 0:
        reasons.append(
            f"third moment over 6 is {m3:.6g}, not a non-negative integer"
        )
    return reasons


def realize_spectrum(
    spec: SearchSpec, progress: Optional[Callable[[int], None]] = None
) -> SearchResult:
    """Graphs in the class whose spectrum matches the target entrywise.

    Cheap certificates run first: the three moment identities, the
    regularity criterion (top eigenvalue 2m/n) and bipartite symmetry.  An
    exhausted run with no hits certifies non-existence in the class.
    """
    if spec.target is None:
        raise ValueError("realize_spectrum needs a target spectrum")
    target = tuple(sorted((float(v) for v in spec.target), reverse=True))
    spec = replace(spec, target=target)
    tol = spec.match_tol

    reasons = _moment_fast_fail(spec)
    m_val = spec.effective_m()
    if m_val is None:
        m2 = sum(v * v for v in target)
        m_val = round(m2 / 2.0)
    if spec.regular_degree is not None and abs(target[0] - spec.regular_degree) > tol:
        reasons.append(
            f"top eigenvalue {target[0]:.6g} contradicts regularity of degree "
            f"{spec.regular_degree}"
        )
    if spec.bipartite and not is_bipartite_spectral(Spectrum.from_values(target), max(tol, 1e-9)):
        reasons.append("target is not symmetric about 0, bipartite class is empty")
    if reasons:
        return SearchResult(
            best=[], graphs_examined=0, exhausted=True, empty_class=True,
            fast_fail_reasons=reasons,
        )

    work = replace(spec, m=m_val, objective="realize")
    # regular graphs have the top eigenvalue simple iff connected
    if work.regular_degree is not None and not work.connected:
        mult_top = sum(1 for v in target if abs(v - target[0]) <= tol)
        if mult_top == 1:
            work = replace(work, connected=True)

    flip = (
        work.regular_degree is not None
        and work.regular_degree > (work.n - 1) // 2
        and not work.bipartite
        and not work.tree
        and not work.complement_cycles
    )
    if flip:
        comp_target = tuple(
            sorted(
                [work.n - target[0] - 1.0] + [-v - 1.0 for v in target[1:]],
                reverse=True,
            )
        )
        comp_r = work.n - 1 - work.regular_degree
        work = SearchSpec(
            n=work.n,
            regular_degree=comp_r,
            target=comp_target,
            match_tol=work.match_tol,
            objective="realize",
            connected=False,
            budget=work.budget,
        )

    tracker = _Tracker(spec.budget, progress)
    hits: list[FoundGraph] = []
    try:
        for g, eigs in _stream(work, tracker):
            cand = complement(g) if flip else g
            cand_eigs = (
                np.linalg.eigvalsh(cand.adjacency_matrix())[::-1] if flip else eigs
            )
            diffs = np.abs(cand_eigs - np.array(target))
            if float(diffs.max()) <= tol:
                hits.append(_found(cand, cand_eigs))
    except BudgetExceeded:
        pass
    tracker.finish_progress()
    return SearchResult(
        best=hits,
        graphs_examined=tracker.examined,
        exhausted=tracker.exhausted,
        empty_class=tracker.exhausted and not hits,
    )


# ---------------------------------------------------------------------------
# brute-force bitmask oracle (n <= 7)
# ---------------------------------------------------------------------------

BITMASK_LIMIT = 7


def _edge_index(n: int) -> dict[tuple[int, int], int]:
    idx = {}
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            idx[(u, v)] = k
            k += 1
    return idx


def _mask_orbit_minima(n: int) -> np.ndarray:
    """canon[mask] = smallest labeled mask isomorphic to mask, for all masks."""
    if n > BITMASK_LIMIT:
        raise ValueError(f"bitmask oracle supports n <= {BITMASK_LIMIT}")
    e = n * (n - 1) // 2
    idx = _edge_index(n)
    masks = np.arange(1 << e, dtype=np.uint32)
    canon = masks.copy()
    chunk_bits = 7
    n_chunks = (e + chunk_bits - 1) // chunk_bits
    chunk_vals = np.arange(1 << chunk_bits, dtype=np.uint32)
    for perm in itertools.permutations(range(n)):
        if perm == tuple(range(n)):
            continue
        dst = [0] * e
        for (u, v), k in idx.items():
            pu, pv = perm[u], perm[v]
            dst[k] = idx[(pu, pv) if pu < pv else (pv, pu)]
        permuted = np.zeros_like(masks)
        for c in range(n_chunks):
            table = np.zeros(1 << chunk_bits, dtype=np.uint32)
            for b in range(chunk_bits):
                src = c * chunk_bits + b
                if src >= e:
                    break
                table |= ((chunk_vals >> b) & 1).astype(np.uint32) << np.uint32(dst[src])
            permuted |= table[(masks >> np.uint32(c * chunk_bits)) & np.uint32(0x7F)]
        np.minimum(canon, permuted, out=canon)
    return canon


def _mask_to_graph(mask: int, n: int) -> Graph:
    idx = _edge_index(n)
    edges = [pair for pair, k in idx.items() if (mask >> k) & 1]
    return Graph.from_edges(n, edges)


def bitmask_classes(n: int) -> list[Graph]:
    """Every isomorphism class on n <= 7 vertices, via labeled brute force."""
    canon = _mask_orbit_minima(n)
    masks = np.arange(len(canon), dtype=np.uint32)
    reps = masks[canon == masks]
    return [_mask_to_graph(int(mask), n) for mask in reps]


def bitmask_class_count(n: int) -> int:
    canon = _mask_orbit_minima(n)
    masks = np.arange(len(canon), dtype=np.uint32)
    return int((canon == masks).sum())


def bitmask_extremal_energy(n: int, objective: Literal["max", "min"] = "max") -> SearchResult:
    """Extremal energy over every labeled graph on n <= 7 vertices.

    Energies are computed for all 2^C(n,2) adjacency matrices; only the
    co-optimal masks are deduplicated by isomorphism at the end.
    """
    if n > BITMASK_LIMIT:
        raise ValueError(f"bitmask oracle supports n <= {BITMASK_LIMIT}")
    e = n * (n - 1) // 2
    idx = _edge_index(n)
    total = 1 << e
    sign = 1.0 if objective == "max" else -1.0
    best_score = -np.inf
    best_masks: list[int] = []
    chunk = 1 << 16
    pairs = list(idx.items())
    for start in range(0, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.uint32)
        mats = np.zeros((len(masks), n, n))
        for (u, v), k in pairs:
            bit = ((masks >> np.uint32(k)) & 1).astype(float)
            mats[:, u, v] = bit
            mats[:, v, u] = bit
        energies = np.abs(np.linalg.eigvalsh(mats)).sum(axis=1)
        scores = sign * energies
        top = float(scores.max())
        if top > best_score + 1e-9:
            best_score = top
            best_masks = [int(m) for m in masks[scores >= top - 1e-9]]
        elif top >= best_score - 1e-9:
            best_masks.extend(int(m) for m in masks[scores >= best_score - 1e-9])
    reps: list[Graph] = []
    for mask in best_masks:
        g = _mask_to_graph(mask, n)
        if not any(are_isomorphic(g, r) for r in reps):
            reps.append(g)
    found = []
    for g in reps:
        eigs = np.linalg.eigvalsh(g.adjacency_matrix())[::-1]
        found.append(_found(g, eigs))
    return SearchResult(
        best=found, graphs_examined=total, exhausted=True, empty_class=False
    )
