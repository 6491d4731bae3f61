"""Adjacency spectra, graph energy, spectral moments, and spectral predicates.

Spectra are always held sorted descending, with the largest eigenvalue first.
That convention lets the regularity cross-check and the complement-spectrum
map run without any extra ordering input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .graphs import Graph

#: golden ratio, always computed at full precision
PHI = (1.0 + math.sqrt(5.0)) / 2.0

#: absolute gap tolerance used to cluster eigenvalues into multiplicity groups
GROUP_TOL = 1e-6


@dataclass(frozen=True)
class Spectrum:
    """Multiset of real eigenvalues, sorted descending."""

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        for a, b in zip(self.values, self.values[1:]):
            if a < b:
                raise ValueError("spectrum must be sorted descending")

    @classmethod
    def from_values(cls, values: Iterable[float]) -> "Spectrum":
        return cls(tuple(sorted((float(v) for v in values), reverse=True)))

    @property
    def n(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def groups(self, tol: float = GROUP_TOL) -> list[tuple[float, int]]:
        """(value, multiplicity) pairs after clustering with gap tolerance tol."""
        out: list[tuple[float, int]] = []
        cluster: list[float] = []
        for v in self.values:
            if cluster and cluster[-1] - v > tol:
                out.append((sum(cluster) / len(cluster), len(cluster)))
                cluster = []
            cluster.append(v)
        if cluster:
            out.append((sum(cluster) / len(cluster), len(cluster)))
        return out

    def negated(self) -> "Spectrum":
        return Spectrum.from_values(-v for v in self.values)


@dataclass(frozen=True)
class EnergyReport:
    """Energy and low moments of one spectrum, with the n-vertex energy bound."""

    energy: float
    moment1: float
    moment2: float
    moment3: float
    triangle_count: float  # moment3 / 6
    triangle_integral: bool  # within GROUP_TOL of a non-negative integer
    km_bound: float  # (n/2)(1 + sqrt(n))
    km_slack: float  # km_bound - energy


def eigenvalues(g: Graph) -> Spectrum:
    """Spectrum of the adjacency matrix, sorted descending."""
    if g.n == 0:
        return Spectrum(())
    vals = np.linalg.eigvalsh(g.adjacency_matrix())
    return Spectrum.from_values(vals)


def energy(s: Spectrum) -> float:
    """Sum of absolute eigenvalues."""
    return float(sum(abs(v) for v in s.values))


def graph_energy(g: Graph) -> float:
    return energy(eigenvalues(g))


def spectral_moment(s: Spectrum, k: int) -> float:
    """k-th power sum of the eigenvalues, k >= 1."""
    if k < 1:
        raise ValueError(f"moment order must be >= 1, got {k}")
    return float(sum(v**k for v in s.values))


def koolen_moulton_bound(n: int) -> float:
    """Upper bound (n/2)(1 + sqrt(n)) on the energy of any n-vertex graph."""
    if n < 1:
        raise ValueError("n must be positive")
    return 0.5 * n * (1.0 + math.sqrt(n))


def energy_report(g: Graph, tol: float = GROUP_TOL) -> EnergyReport:
    s = eigenvalues(g)
    m3 = spectral_moment(s, 3) if s.n else 0.0
    triangles = m3 / 6.0
    return EnergyReport(
        energy=energy(s),
        moment1=spectral_moment(s, 1) if s.n else 0.0,
        moment2=spectral_moment(s, 2) if s.n else 0.0,
        moment3=m3,
        triangle_count=triangles,
        triangle_integral=(
            abs(triangles - round(triangles)) <= tol and round(triangles) >= 0
        ),
        km_bound=koolen_moulton_bound(g.n) if g.n >= 1 else 0.0,
        km_slack=(koolen_moulton_bound(g.n) - energy(s)) if g.n >= 1 else 0.0,
    )


def is_regular(g: Graph) -> tuple[bool, Optional[int]]:
    """(True, degree) iff all degrees are equal."""
    if g.n == 0:
        return True, None
    degs = g.degrees()
    if min(degs) == max(degs):
        return True, degs[0]
    return False, None


def regularity_spectral_check(g: Graph, tol: float = 1e-8) -> bool:
    """Cross-check: a graph is regular iff its top eigenvalue equals 2m/n."""
    if g.n == 0:
        return True
    s = eigenvalues(g)
    return abs(s.values[0] - 2.0 * g.m / g.n) <= tol


def is_bipartite_spectral(s: Spectrum, tol: float) -> bool:
    """True iff the eigenvalue multiset equals its own negation within tol."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    neg = s.negated()
    return all(abs(a - b) <= tol for a, b in zip(s.values, neg.values))


def complement_spectrum_regular(
    s: Spectrum, n: int, source: Optional[Graph] = None, tol: float = 1e-8
) -> Spectrum:
    """Spectrum of the complement of a regular graph with spectrum s.

    The top eigenvalue x1 maps to n - x1 - 1 and every other value v maps
    to -v - 1.  When the source graph is supplied, it must pass both the
    degree check and the spectral regularity criterion.
    """
    if s.n != n or n < 1:
        raise ValueError(f"spectrum length {s.n} does not match n={n}")
    if source is not None:
        regular, _ = is_regular(source)
        if not regular or abs(s.values[0] - 2.0 * source.m / source.n) > tol:
            raise ValueError("source graph is not regular; complement map needs regularity")
    top = n - s.values[0] - 1.0
    rest = [-v - 1.0 for v in s.values[1:]]
    return Spectrum.from_values([top, *rest])


def cycle_spectrum(length: int) -> Spectrum:
    """Eigenvalues 2 cos(2 pi j / length), j = 1..length, sorted descending."""
    if length < 3:
        raise ValueError(f"cycle length must be >= 3, got {length}")
    vals = [2.0 * math.cos(2.0 * math.pi * j / length) for j in range(1, length + 1)]
    return Spectrum.from_values(vals)


def spectrum_matches(s: Spectrum, target: Sequence[float], tol: float) -> bool:
    """Entrywise comparison of two descending-sorted value lists."""
    t = sorted((float(v) for v in target), reverse=True)
    if len(t) != s.n:
        return False
    return all(abs(a - b) <= tol for a, b in zip(s.values, t))
