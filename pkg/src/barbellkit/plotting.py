"""Figures for partitions and census summaries (written to files, Agg backend)."""

from __future__ import annotations

import math
from collections import Counter
from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import FancyArrowPatch  # noqa: E402

from .barbell import BarbellPartition  # noqa: E402
from .graph import Graph  # noqa: E402

__all__ = ["CLASS_COLORS", "layout", "draw_partition", "census_summary"]

CLASS_COLORS = {"R": "#2ca02c", "W1": "#d62728", "W2": "#1f77b4", None: "#bbbbbb"}


def layout(G: Graph, grid: tuple[int, int] | None = None) -> list[tuple[float, float]]:
    """Vertex positions: a grid for product graphs, otherwise a circle."""
    if grid is not None:
        rows, cols = grid
        if rows * cols != G.n:
            raise ValueError(f"grid {rows}x{cols} does not match {G.n} vertices")
        return [(float(v % cols), float(-(v // cols))) for v in range(G.n)]
    if G.n == 1:
        return [(0.0, 0.0)]
    return [
        (math.cos(math.pi / 2 - 2 * math.pi * v / G.n), math.sin(math.pi / 2 - 2 * math.pi * v / G.n))
        for v in range(G.n)
    ]


def _classes(G: Graph, P: BarbellPartition | None) -> list[str | None]:
    if P is None:
        return [None] * G.n
    out = []
    for v in range(G.n):
        out.append("R" if v in P.R else "W1" if v in P.W1 else "W2")
    return out


def draw_partition(
    G: Graph,
    P: BarbellPartition | None,
    path: str | Path,
    *,
    title: str | None = None,
    grid: tuple[int, int] | None = None,
) -> Path:
    """Draw ``G`` with R green, W1 red and W2 blue; uncolored if ``P`` is None."""
    pos = layout(G, grid)
    cls = _classes(G, P)
    size = max(4.0, min(12.0, 1.2 * math.sqrt(G.n) + 3))
    fig, ax = plt.subplots(figsize=(size, size))
    for u, v in G.edges():
        (x0, y0), (x1, y1) = pos[u], pos[v]
        if grid is not None and math.hypot(x1 - x0, y1 - y0) > 1.01:
            # wrap-around or diagonal edges in a product grid: bend them off the rows
            ax.add_patch(
                FancyArrowPatch(
                    (x0, y0), (x1, y1), arrowstyle="-", connectionstyle="arc3,rad=0.15",
                    color="#999999", lw=0.8, zorder=1,
                )
            )
        else:
            ax.plot([x0, x1], [y0, y1], color="#555555", lw=1, zorder=1)
    for name in ("R", "W1", "W2", None):
        idx = [v for v in range(G.n) if cls[v] == name]
        if not idx:
            continue
        ax.scatter(
            [pos[v][0] for v in idx],
            [pos[v][1] for v in idx],
            s=320,
            color=CLASS_COLORS[name],
            edgecolors="black",
            zorder=2,
            label=name,
        )
    if G.n <= 64:
        for v in range(G.n):
            ax.annotate(G.label(v), pos[v], ha="center", va="center", fontsize=7, zorder=3)
    if P is not None:
        ax.legend(loc="upper left", bbox_to_anchor=(1.01, 1.0), fontsize=8)
    ax.set_title(title or f"n={G.n}, m={G.m}")
    ax.set_aspect("equal")
    ax.axis("off")
    out = Path(path)
    fig.savefig(out, dpi=100, bbox_inches="tight")
    plt.close(fig)
    return out


def census_summary(records: Iterable[dict], path: str | Path) -> Path:
    """Stacked bars of verdict counts per vertex count."""
    counts: Counter = Counter()
    ns = set()
    for rec in records:
        n = rec["n"]
        ns.add(n)
        counts[(n, rec["barbell"]["verdict"])] += 1
    order = sorted(ns)
    verdicts: Sequence[tuple[str, str]] = (
        ("admits", "#d62728"),
        ("does_not_admit", "#2ca02c"),
        ("budget_exceeded", "#7f7f7f"),
    )
    fig, ax = plt.subplots(figsize=(6, 4))
    bottom = [0] * len(order)
    for verdict, color in verdicts:
        heights = [counts[(n, verdict)] for n in order]
        if any(heights):
            ax.bar([str(n) for n in order], heights, bottom=bottom, color=color, label=verdict)
            bottom = [b + h for b, h in zip(bottom, heights)]
    ax.set_xlabel("vertices")
    ax.set_ylabel("graphs")
    ax.set_title("barbell partitions by order")
    if order:
        ax.legend(fontsize=8)
    out = Path(path)
    fig.savefig(out, dpi=100, bbox_inches="tight")
    plt.close(fig)
    return out
