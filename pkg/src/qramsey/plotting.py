"""Matplotlib renderings of commutation graphs and interference patterns."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .catalog import EdgeColor  # noqa: E402

EDGE_COLORS = {EdgeColor.RED: "#c0392b", EdgeColor.GREEN: "#27ae60"}

_TEX = {
    "p_x": r"$\hat p_x$", "p_y": r"$\hat p_y$", "p_z": r"$\hat p_z$",
    "x": r"$\hat x$", "y": r"$\hat y$", "z": r"$\hat z$",
    "l_x": r"$\hat l_x$", "l_y": r"$\hat l_y$", "l_z": r"$\hat l_z$",
    "L2": r"$\hat L^2$", "r": r"$\hat r$", "p_r": r"$\hat p_r$",
    "H_central": r"$\hat H$", "H_generic": r"$\hat H'$",
}

# PNG metadata would otherwise carry the matplotlib version string
_SAVE_KW = {"metadata": {"Software": None}, "dpi": 120}


def _label(name):
    return _TEX.get(name, name)


def plot_graph(g, report=None, path=None, title=None):
    """Draw ``g`` on a circle; edges on a monochromatic triangle are thicker."""
    n = len(g.vertices)
    pos = {
        v: (math.cos(math.pi / 2 - 2 * math.pi * i / n), math.sin(math.pi / 2 - 2 * math.pi * i / n))
        for i, v in enumerate(g.vertices)
    }
    bold = set()
    if report is not None:
        for a, b, c in report.red_triangles + report.green_triangles:
            bold.update({frozenset((a, b)), frozenset((a, c)), frozenset((b, c))})

    fig, ax = plt.subplots(figsize=(4, 4))
    for (a, b), e in g.edges.items():
        (x0, y0), (x1, y1) = pos[a], pos[b]
        width = 3.0 if frozenset((a, b)) in bold else 1.3
        ax.plot([x0, x1], [y0, y1], color=EDGE_COLORS[e.color], lw=width, zorder=1)
    for v, (x, y) in pos.items():
        ax.scatter([x], [y], s=900, color="white", edgecolors="black", zorder=2)
        ax.text(x, y, _label(v), ha="center", va="center", fontsize=12, zorder=3)
    ax.set_xlim(-1.35, 1.35)
    ax.set_ylim(-1.35, 1.35)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=10)
    if path is not None:
        fig.savefig(path, **_SAVE_KW)
        plt.close(fig)
    return fig


def plot_patterns(patterns, path=None, title=None):
    """Overlay ``{label: Pattern}`` intensity curves."""
    fig, ax = plt.subplots(figsize=(6.5, 3.5))
    for label, p in patterns.items():
        ax.plot(p.positions, p.intensities, lw=1.2, label=label)
    ax.set_xlabel("screen position s")
    ax.set_ylabel("intensity")
    ax.set_xlim(p.positions[0], p.positions[-1])
    ax.set_ylim(bottom=0)
    if len(patterns) > 1:
        ax.legend(frameon=False, fontsize=8)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    if path is not None:
        fig.savefig(path, **_SAVE_KW)
        plt.close(fig)
    return fig
