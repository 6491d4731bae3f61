"""Simple undirected graphs and the named constructions used by the toolkit.

Vertices are 0..n-1, edges are unordered pairs.  Graphs are immutable values
and safe to share between threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph, normalizing edge order and rejecting loops."""
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbors(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=float)
        for u, v in self.edges:
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Relabel vertices: vertex i becomes perm[i]."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = self.neighbors()
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def component_count(self) -> int:
        adj = self.neighbors()
        seen = [False] * self.n
        count = 0
        for s in range(self.n):
            if seen[s]:
                continue
            count += 1
            seen[s] = True
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
        return count

    def bipartition(self) -> Optional[tuple[frozenset[int], frozenset[int]]]:
        """2-coloring if one exists, else None.  Isolated vertices go left."""
        color = [-1] * self.n
        adj = self.neighbors()
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if color[w] == -1:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return None
        left = frozenset(v for v in range(self.n) if color[v] == 0)
        right = frozenset(v for v in range(self.n) if color[v] == 1)
        return left, right

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def triangle_count(self) -> int:
        """Number of triangles, counted combinatorially (no eigenvalues)."""
        adj = self.neighbors()
        total = 0
        for u, v in self.edges:
            total += len(adj[u] & adj[v])
        return total // 3


def complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return Graph.from_edges(g.n, edges)


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    edges: list[Edge] = []
    offset = 0
    for part in parts:
        edges.extend((u + offset, v + offset) for u, v in part.edges)
        offset += part.n
    return Graph.from_edges(offset, edges)


def line_graph(g: Graph) -> Graph:
    """Graph on the edges of g, adjacent when they share an endpoint."""
    base = g.edge_list()
    edges = []
    for i in range(len(base)):
        for j in range(i + 1, len(base)):
            if set(base[i]) & set(base[j]):
                edges.append((i, j))
    return Graph.from_edges(len(base), edges)


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError("n must be non-negative")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    return Graph.from_edges(n, [])


def star(leaves: int) -> Graph:
    """K_{1,leaves} on leaves+1 vertices, center 0."""
    if leaves < 0:
        raise ValueError("leaf count must be non-negative")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise ValueError("part sizes must be non-negative")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(length: int) -> Graph:
    if length < 3:
        raise ValueError(f"cycle length must be >= 3, got {length}")
    return Graph.from_edges(length, [(i, (i + 1) % length) for i in range(length)])


def union_of_cycles(parts: Sequence[int]) -> Graph:
    """Disjoint union of cycles with the given lengths (each >= 3)."""
    for part in parts:
        if part < 3:
            raise ValueError(f"cycle length must be >= 3, got {part}")
    return disjoint_union([cycle(part) for part in parts])


_FAMILIES = {
    "complete": lambda n: complete(int(n)),
    "empty": lambda n: empty(int(n)),
    "star": lambda leaves: star(int(leaves)),
    "complete_bipartite": lambda a, b: complete_bipartite(int(a), int(b)),
    "path": lambda n: path(int(n)),
    "cycle": lambda length: cycle(int(length)),
    "cycle_union": lambda parts: union_of_cycles(list(parts)),
    "disjoint_union": lambda graphs: disjoint_union(list(graphs)),
    "complement": lambda graph: complement(graph),
    "line_graph": lambda graph: line_graph(graph),
}


def construct(family: str, **params) -> Graph:
    """Build a named graph family; see _FAMILIES for the accepted names."""
    try:
        builder = _FAMILIES[family]
    except KeyError:
        raise ValueError(
            f"unknown family {family!r}; expected one of {sorted(_FAMILIES)}"
        ) from None
    return builder(**params)
