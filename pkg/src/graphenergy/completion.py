"""Completing a partial spectrum with two values of chosen multiplicities.

Given vertex/edge counts (n, m) and a fixed family K of eigenvalues, the
remaining |J| = n - |K| eigenvalues are assumed to take just two values x, y
with multiplicities p, q.  The first two power-sum constraints

    p + q = |J|,    p x + q y = -C,    p x^2 + q y^2 = 2m - D

leave, for each p, a quadratic in x:

    p (p + q) x^2 + 2 C p x + (C^2 - q (2m - D)) = 0.

Every real solution is reported together with its energy
E = p|x| + q|y| + C+ - C- and the third-moment diagnostic
(p x^3 + q y^3 + sum(K^3)) / 6, which must be a non-negative integer for the
completed multiset to be the spectrum of an actual graph (it counts
triangles).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, Optional, Sequence

#: residual bound each emitted candidate must meet on the power-sum constraints
CONSTRAINT_TOL = 1e-9

#: default absolute tolerance for the third-moment integrality test
MOMENT_TEST_TOL = 1e-6

#: tolerance for flagging x or y colliding with a member of K
COLLISION_TOL = 1e-9


class InfeasibleError(ValueError):
    """The (n, m, K) data admits no completion at all."""


class NoUnknownsError(InfeasibleError):
    """K leaves fewer than two eigenvalues free."""


class EmptySelectionError(ValueError):
    """Candidate selection got an empty list or filtered everything away."""

    def __init__(self, message: str, empty_input: bool):
        self.empty_input = empty_input
        super().__init__(message)


@dataclass(frozen=True)
class KnownFamily:
    """A fixed eigenvalue family K with its derived constants.

    c_plus sums the non-negative members, c_minus the negative ones,
    c their total, and d the sum of squares.
    """

    values: tuple[float, ...]
    c_plus: float
    c_minus: float
    c: float
    d: float

    @property
    def size(self) -> int:
        return len(self.values)

    def abs_sum(self) -> float:
        return self.c_plus - self.c_minus

    def cube_sum(self) -> float:
        return sum(v**3 for v in self.values)


def derive_constants(k_values: Iterable[float]) -> KnownFamily:
    """Build a KnownFamily; values >= 0 count toward the plus part."""
    values = tuple(float(v) for v in k_values)
    c_plus = sum(v for v in values if v >= 0.0)
    c_minus = sum(v for v in values if v < 0.0)
    return KnownFamily(
        values=values,
        c_plus=c_plus,
        c_minus=c_minus,
        c=c_plus + c_minus,
        d=sum(v * v for v in values),
    )


def _as_family(k: "KnownFamily | Iterable[float]") -> KnownFamily:
    return k if isinstance(k, KnownFamily) else derive_constants(k)


@dataclass(frozen=True)
class CompletionCandidate:
    """One solution (p, q, x, y) with its energy and moment diagnostic."""

    p: int
    q: int
    x: float
    y: float
    energy: float
    third_moment_over_6: float
    passes_moment_test: bool
    sign_split: bool  # {x, y} holds both a non-negative and a negative value
    coincident: bool  # zero discriminant, x == y
    k_collisions: tuple[float, ...]  # members of K that x or y duplicates

    def multiset(self, k: KnownFamily) -> list[float]:
        """Full completed spectrum K + x^p + y^q, sorted descending."""
        return sorted(
            list(k.values) + [self.x] * self.p + [self.y] * self.q, reverse=True
        )


def third_moment_test(
    cand: CompletionCandidate,
    k: "KnownFamily | Iterable[float]",
    tol: float = MOMENT_TEST_TOL,
) -> tuple[float, bool]:
    """(value, pass): value = (p x^3 + q y^3 + sum K^3)/6, pass iff it is a
    non-negative integer within tol."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    fam = _as_family(k)
    value = (cand.p * cand.x**3 + cand.q * cand.y**3 + fam.cube_sum()) / 6.0
    nearest = round(value)
    return value, abs(value - nearest) <= tol and nearest >= 0


def _make_candidate(
    p: int,
    q: int,
    x: float,
    fam: KnownFamily,
    coincident: bool,
    moment_tol: float,
) -> CompletionCandidate:
    y = (-fam.c - p * x) / q
    e = p * abs(x) + q * abs(y) + fam.abs_sum()
    third = (p * x**3 + q * y**3 + fam.cube_sum()) / 6.0
    nearest = round(third)
    lo, hi = min(x, y), max(x, y)
    collisions = tuple(
        v
        for v in fam.values
        if abs(v - x) <= COLLISION_TOL or abs(v - y) <= COLLISION_TOL
    )
    return CompletionCandidate(
        p=p,
        q=q,
        x=x,
        y=y,
        energy=e,
        third_moment_over_6=third,
        passes_moment_test=abs(third - nearest) <= moment_tol and nearest >= 0,
        sign_split=(hi >= 0.0 and lo < 0.0),
        coincident=coincident,
        k_collisions=collisions,
    )


def complete_spectrum(
    n: int,
    m: int,
    k: "KnownFamily | Iterable[float]",
    moment_tol: float = MOMENT_TEST_TOL,
    full_range: bool = False,
) -> list[CompletionCandidate]:
    """All two-value completions of K under the first two moment constraints.

    p runs over 1..floor(|J|/2) (the remaining rows are the same solutions
    with (p, x) and (q, y) swapped; pass full_range=True to get them too).
    The result is ordered by (p ascending, x descending); each p contributes
    0, 1, or 2 candidates depending on the discriminant sign.
    """
    fam = _as_family(k)
    if m <= 0:
        raise InfeasibleError(f"edge count must be positive, got {m}")
    free = n - fam.size
    if free < 2:
        raise NoUnknownsError(
            f"|K| = {fam.size} leaves {free} unknowns; need at least two"
        )
    s = 2.0 * m - fam.d
    if s < 0.0:
        raise InfeasibleError(
            f"sum of squares of K is {fam.d:.6g} > 2m = {2 * m}; violates the "
            "second moment identity"
        )
    # discriminant/4 = p*q*(|J|*s - c^2) for every p, so feasibility is global
    if free * s < fam.c**2 - CONSTRAINT_TOL:
        raise InfeasibleError(
            f"2m - D = {s:.6g} is below C^2/|J| = {fam.c ** 2 / free:.6g}; "
            "no real completion exists for any p"
        )

    p_max = free - 1 if full_range else free // 2
    out: list[CompletionCandidate] = []
    for p in range(1, p_max + 1):
        q = free - p
        a = float(p * free)
        b = 2.0 * fam.c * p
        const = fam.c**2 - q * s
        disc = b * b - 4.0 * a * const
        zero_scale = 1e-12 * max(1.0, b * b, abs(4.0 * a * const))
        if disc < -zero_scale:
            continue
        if disc <= zero_scale:
            roots = [(-b / (2.0 * a), True)]
        else:
            sq = math.sqrt(disc)
            # stable form: compute the root away from cancellation first
            r1 = (-b - sq) / (2.0 * a) if b >= 0 else (-b + sq) / (2.0 * a)
            r2 = const / (a * r1) if r1 != 0.0 else (-b + sq) / (2.0 * a)
            roots = [(max(r1, r2), False), (min(r1, r2), False)]
        for x, coincident in roots:
            cand = _make_candidate(p, q, x, fam, coincident, moment_tol)
            _check_residuals(cand, fam, n, m)
            out.append(cand)
    return out


def _check_residuals(cand: CompletionCandidate, fam: KnownFamily, n: int, m: int) -> None:
    lin = cand.p * cand.x + cand.q * cand.y + fam.c
    quad = cand.p * cand.x**2 + cand.q * cand.y**2 - (2.0 * m - fam.d)
    if abs(lin) > CONSTRAINT_TOL * max(1.0, abs(fam.c)) or abs(quad) > (
        CONSTRAINT_TOL * max(1.0, 2.0 * m)
    ):
        raise ArithmeticError(
            f"candidate p={cand.p} failed constraint residuals: "
            f"linear {lin:.3e}, quadratic {quad:.3e}"
        )


def best_candidates(
    cands: Sequence[CompletionCandidate],
    which: Literal["all", "moment-pass-only"] = "all",
    objective: Literal["max", "min"] = "max",
) -> list[CompletionCandidate]:
    """Candidates ordered by energy per the objective.

    Ties break toward smaller p, then larger x, so the ordering is
    deterministic.  Filtering everything away is reported distinctly from an
    empty input.
    """
    if not cands:
        raise EmptySelectionError("no candidates supplied", empty_input=True)
    if which == "moment-pass-only":
        pool = [c for c in cands if c.passes_moment_test]
        if not pool:
            raise EmptySelectionError(
                "no candidate passes the third-moment test", empty_input=False
            )
    elif which == "all":
        pool = list(cands)
    else:
        raise ValueError(f"unknown filter {which!r}")
    sign = -1.0 if objective == "max" else 1.0
    if objective not in ("max", "min"):
        raise ValueError(f"unknown objective {objective!r}")
    return sorted(pool, key=lambda c: (sign * c.energy, c.p, -c.x))


def swapped(cand: CompletionCandidate) -> CompletionCandidate:
    """The same solution with the roles of (p, x) and (q, y) exchanged."""
    return CompletionCandidate(
        p=cand.q,
        q=cand.p,
        x=cand.y,
        y=cand.x,
        energy=cand.energy,
        third_moment_over_6=cand.third_moment_over_6,
        passes_moment_test=cand.passes_moment_test,
        sign_split=cand.sign_split,
        coincident=cand.coincident,
        k_collisions=cand.k_collisions,
    )


def format_value(v: float, places: int = 4) -> str:
    """Fixed-point rendering with negative zero normalized away."""
    text = f"{v:.{places}f}"
    if text == "-0." + "0" * places:
        return text[1:]
    return text


def format_table(
    cands: Sequence[CompletionCandidate],
    include_third: bool = True,
) -> str:
    """Plain-text candidate table: p, q, x, y, E, third/6 and a +/- mark."""
    header = ["   p    q         x         y         E"]
    if include_third:
        header.append("   third/6")
    header.append("  test")
    lines = ["".join(header)]
    for c in cands:
        row = [
            f"{c.p:4d} {c.q:4d} {format_value(c.x):>9s} {format_value(c.y):>9s} "
            f"{format_value(c.energy):>9s}"
        ]
        if include_third:
            row.append(f" {format_value(c.third_moment_over_6):>9s}")
        row.append(f"     {'+' if c.passes_moment_test else '-'}")
        lines.append("".join(row))
    return "\n".join(lines)
