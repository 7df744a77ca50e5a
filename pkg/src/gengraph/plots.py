"""Report figures: renders range-table rows to PNG files next to the CSV."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from gengraph.indices import harmonic_formula_all_pairs, harmonic_gap


def _style(ax, xlabel: str, ylabel: str, title: str) -> None:
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(True, alpha=0.3)


def render_report_figures(rows: list[dict], out_dir: Path, dpi: int = 150) -> list[Path]:
    """Write the three report figures; returns the paths written.

    Expects the table rows produced by the CLI report path (keys n, phi,
    edges, diameter, wiener, gutman, harmonic, randic, sombor,
    metric_dimension).
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    ns = [r["n"] for r in rows]
    written: list[Path] = []

    fig, ax = plt.subplots(figsize=(7.0, 4.5), constrained_layout=True)
    for key, label in (
        ("wiener", "Wiener"),
        ("gutman", "Gutman"),
        ("sombor", "Sombor"),
        ("harmonic", "harmonic"),
        ("randic", "Randic"),
    ):
        ax.semilogy(ns, [r[key] for r in rows], lw=1.2, label=label)
    _style(ax, "group order n", "index value (log scale)", "Topological indices of generator graphs")
    ax.legend(frameon=False, fontsize=9)
    path = out_dir / "indices_vs_n.png"
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(7.0, 4.5), constrained_layout=True)
    measured = [float(harmonic_formula_all_pairs(r["n"], r["phi"])) - r["harmonic"] for r in rows]
    law = [float(harmonic_gap(r["n"], r["phi"])) for r in rows]
    ax.plot(ns, law, lw=1.0, color="tab:orange", label="(n-s)(n-s-1) / 2s")
    ax.scatter(ns, measured, s=12, color="tab:blue", zorder=3, label="all-pairs form minus edge sum")
    _style(ax, "group order n", "harmonic excess", "All-pairs harmonic form vs the edge-sum value")
    ax.legend(frameon=False, fontsize=9)
    path = out_dir / "harmonic_gap_vs_n.png"
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(7.0, 4.5), constrained_layout=True)
    ax.scatter(ns, [r["phi"] for r in rows], s=12, label="generator count")
    ax.plot(ns, [r["metric_dimension"] for r in rows], lw=1.0, color="tab:red",
            label="metric dimension")
    ax.plot(ns, [r["diameter"] for r in rows], lw=1.0, color="tab:green", label="diameter")
    _style(ax, "group order n", "value", "Structure of generator graphs")
    ax.legend(frameon=False, fontsize=9)
    path = out_dir / "structure_vs_n.png"
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
    written.append(path)

    return written
