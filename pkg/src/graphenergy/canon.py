"""Isomorphism testing via color refinement with individualization.

A cheap integer invariant key (degree sequence plus characteristic-polynomial
coefficients, which are exact integers for adjacency matrices) buckets graphs
first; exact isomorphism search runs only inside a bucket.  This keeps the
highly symmetric cases (complete graphs, circulants) out of the expensive
path entirely.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .graphs import Graph


def _refine(adj: list[set[int]], colors: list[int]) -> list[int]:
    """Stable 1-WL refinement with canonical color ids.

    Ids are assigned by sorting the (old color, neighbor color multiset)
    signatures, so two graphs with matching signature multisets end up with
    directly comparable colorings.
    """
    n = len(adj)
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in adj[v])))
            for v in range(n)
        ]
        index = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [index[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _color_histogram(colors: list[int]) -> tuple[tuple[int, int], ...]:
    hist: dict[int, int] = {}
    for c in colors:
        hist[c] = hist.get(c, 0) + 1
    return tuple(sorted(hist.items()))


def _first_split_class(colors: list[int]) -> Optional[int]:
    """Color id of the smallest (then lowest-id) class with >= 2 members."""
    hist: dict[int, int] = {}
    for c in colors:
        hist[c] = hist.get(c, 0) + 1
    candidates = [(size, c) for c, size in hist.items() if size >= 2]
    if not candidates:
        return None
    return min(candidates)[1]


def _match_discrete(
    adj1: list[set[int]], adj2: list[set[int]], c1: list[int], c2: list[int]
) -> bool:
    n = len(c1)
    pos1 = {c: v for v, c in enumerate(c1)}
    pos2 = {c: v for v, c in enumerate(c2)}
    perm = [pos2[c1[v]] for v in range(n)]  # vertex v of g1 -> perm[v] of g2
    for v in range(n):
        if {perm[u] for u in adj1[v]} != adj2[perm[v]]:
            return False
    return True


def _iso_search(
    adj1: list[set[int]], adj2: list[set[int]], c1: list[int], c2: list[int]
) -> bool:
    c1 = _refine(adj1, c1)
    c2 = _refine(adj2, c2)
    if _color_histogram(c1) != _color_histogram(c2):
        return False
    target = _first_split_class(c1)
    if target is None:
        return _match_discrete(adj1, adj2, c1, c2)
    fresh = len(c1)  # unused color id, identical on both sides
    v = c1.index(target)
    split1 = list(c1)
    split1[v] = fresh
    for w in range(len(c2)):
        if c2[w] != target:
            continue
        split2 = list(c2)
        split2[w] = fresh
        if _iso_search(adj1, adj2, list(split1), split2):
            return True
    return False


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    n = g1.n
    if n == 0:
        return True
    return _iso_search(g1.neighbors(), g2.neighbors(), [0] * n, [0] * n)


def charpoly_coefficients(eigenvalues: np.ndarray) -> tuple[int, ...]:
    """Integer characteristic-polynomial coefficients from float eigenvalues.

    Adjacency matrices have integer characteristic polynomials; at desk scale
    the float error is far below 0.5, so rounding is exact.
    """
    coeffs = np.poly(eigenvalues) if len(eigenvalues) else np.array([1.0])
    return tuple(int(round(c)) for c in coeffs)


def invariant_key(g: Graph, eigenvalues: Optional[np.ndarray] = None) -> tuple:
    """Isomorphism-invariant bucket key: (n, m, degree sequence, char poly)."""
    if eigenvalues is None:
        eigenvalues = np.linalg.eigvalsh(g.adjacency_matrix()) if g.n else np.array([])
    return (
        g.n,
        g.m,
        tuple(sorted(g.degrees())),
        charpoly_coefficients(eigenvalues),
    )
