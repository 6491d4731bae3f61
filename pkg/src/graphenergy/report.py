"""Report rendering: delimited tables plus matplotlib figures on disk.

Each report writes a CSV and a PNG side by side in the output directory and
returns the paths it created.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .catalog import KNOWN_EXTREMAL
from .completion import CompletionCandidate
from .graphs import Graph
from .spectra import eigenvalues, energy, koolen_moulton_bound

_FIG_KW = {"figsize": (7.0, 4.2), "dpi": 150}


def _ensure_dir(out_dir: str | Path) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def completion_report(
    cands: Sequence[CompletionCandidate],
    n: int,
    m: int,
    known: Sequence[float],
    out_dir: str | Path,
    stem: str = "candidates",
) -> list[Path]:
    out = _ensure_dir(out_dir)
    csv_path = out / f"{stem}.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["p", "q", "x", "y", "energy", "third_moment_over_6",
             "passes_moment_test", "sign_split"]
        )
        for c in cands:
            writer.writerow(
                [c.p, c.q, repr(c.x), repr(c.y), repr(c.energy),
                 repr(c.third_moment_over_6), c.passes_moment_test, c.sign_split]
            )

    fig, ax = plt.subplots(**_FIG_KW)
    fails = [c for c in cands if not c.passes_moment_test]
    passes = [c for c in cands if c.passes_moment_test]
    ax.scatter(
        [c.p for c in fails], [c.energy for c in fails],
        marker="x", color="tab:gray", label="fails moment test",
    )
    if passes:
        ax.scatter(
            [c.p for c in passes], [c.energy for c in passes],
            marker="o", color="tab:red", zorder=3, label="integral third moment",
        )
    bound = koolen_moulton_bound(n)
    ax.axhline(bound, linestyle="--", color="tab:blue", linewidth=1,
               label=f"energy bound {bound:.3f}")
    ax.set_xlabel("multiplicity p of the larger completion value")
    ax.set_ylabel("candidate energy")
    known_str = ", ".join(f"{v:g}" for v in known) or "none"
    ax.set_title(f"two-value completions: n={n}, m={m}, fixed {{{known_str}}}")
    ax.grid(alpha=0.3)
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    png_path = out / f"{stem}.png"
    fig.savefig(png_path)
    plt.close(fig)
    return [csv_path, png_path]


def spectrum_report(
    g: Graph,
    out_dir: str | Path,
    stem: str = "spectrum",
    label: Optional[str] = None,
) -> list[Path]:
    out = _ensure_dir(out_dir)
    s = eigenvalues(g)
    e = energy(s)
    csv_path = out / f"{stem}.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["index", "eigenvalue"])
        for i, v in enumerate(s.values, start=1):
            writer.writerow([i, repr(v)])
        writer.writerow([])
        writer.writerow(["group_value", "multiplicity"])
        for v, mult in s.groups():
            writer.writerow([repr(v), mult])

    fig, ax = plt.subplots(**_FIG_KW)
    ax.stem(range(1, s.n + 1), s.values)
    ax.axhline(0.0, color="black", linewidth=0.8)
    bound = koolen_moulton_bound(g.n) if g.n else 0.0
    ax.set_xlabel("index (descending order)")
    ax.set_ylabel("eigenvalue")
    title = label or f"{g.n} vertices, {g.m} edges"
    ax.set_title(f"{title}: energy {e:.4f}, bound {bound:.4f}")
    ax.grid(alpha=0.3)
    fig.tight_layout()
    png_path = out / f"{stem}.png"
    fig.savefig(png_path)
    plt.close(fig)
    return [csv_path, png_path]


def catalog_report(out_dir: str | Path, stem: str = "known-extremal") -> list[Path]:
    """Energies of the bundled known maximal-energy graphs against the bound."""
    out = _ensure_dir(out_dir)
    csv_path = out / f"{stem}.csv"
    rows = []
    for entry in KNOWN_EXTREMAL:
        bound = koolen_moulton_bound(entry.n)
        rows.append((entry.n, entry.code, entry.m, entry.energy, bound, bound - entry.energy))
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "graph6", "m", "energy", "energy_bound", "slack"])
        for row in rows:
            writer.writerow(row)

    fig, ax = plt.subplots(**_FIG_KW)
    ns = [r[0] for r in rows]
    ax.plot(ns, [r[3] for r in rows], "o-", label="known maximal energy")
    ax.plot(ns, [r[4] for r in rows], "s--", label="(n/2)(1 + sqrt(n)) bound")
    ax.set_xlabel("vertices")
    ax.set_ylabel("energy")
    ax.set_title("maximal energy versus the general bound")
    ax.grid(alpha=0.3)
    ax.legend()
    fig.tight_layout()
    png_path = out / f"{stem}.png"
    fig.savefig(png_path)
    plt.close(fig)
    return [csv_path, png_path]
