"""Bloch-sphere figure of Majorana points, written as SVG."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.linewidth": 0.6,
    "svg.hashsalt": "hyperlu",  # stable element ids, so identical input gives identical files
    "svg.fonttype": "none",
}


def _sphere(ax):
    u = np.linspace(0, 2 * np.pi, 48)
    v = np.linspace(0, np.pi, 24)
    x = np.outer(np.cos(u), np.sin(v))
    y = np.outer(np.sin(u), np.sin(v))
    z = np.outer(np.ones_like(u), np.cos(v))
    ax.plot_wireframe(x, y, z, color="0.85", linewidth=0.3, rstride=4, cstride=4)
    t = np.linspace(0, 2 * np.pi, 200)
    ax.plot(np.cos(t), np.sin(t), 0 * t, color="0.6", linewidth=0.5)
    for vec, lab in (((0, 0, 1), r"$|0\rangle$"), ((0, 0, -1), r"$|1\rangle$"), ((1, 0, 0), r"$|+\rangle$"),
                     ((0, 1, 0), r"$|{+i}\rangle$")):
        ax.plot(*zip((0, 0, 0), vec), color="0.5", linewidth=0.5)
        ax.text(*(1.15 * np.array(vec)), lab, ha="center", va="center")


def bloch_figure(points, title: str | None = None, axes=None):
    """Figure with the points on the sphere; repeated points are drawn larger
    and annotated with their multiplicity."""
    P = np.asarray(points, dtype=float).reshape(-1, 3)
    with plt.rc_context(STYLE):
        fig = plt.figure(figsize=(4, 4))
        ax = fig.add_subplot(projection="3d")
        _sphere(ax)
        uniq: list[list] = []
        for p in P:
            for u in uniq:
                if np.linalg.norm(u[0] - p) < 1e-6:
                    u[1] += 1
                    break
            else:
                uniq.append([p, 1])
        for p, k in uniq:
            ax.scatter(*p, s=30 + 20 * (k - 1), color="C3", depthshade=False)
            if k > 1:
                ax.text(*(1.08 * p), f"x{k}", color="C3")
        for a, b in axes or []:
            ax.plot(*zip(-1.2 * np.asarray(a), 1.2 * np.asarray(a)), linestyle="--", color=b, linewidth=0.7)
        ax.set_box_aspect((1, 1, 1))
        ax.set_xlim(-1, 1)
        ax.set_ylim(-1, 1)
        ax.set_zlim(-1, 1)
        ax.set_axis_off()
        if title:
            ax.set_title(title)
    return fig


def save_bloch_svg(points, path: str, title: str | None = None, axes=None) -> None:
    fig = bloch_figure(points, title, axes)
    with plt.rc_context(STYLE):
        fig.savefig(path, format="svg", metadata={"Date": None}, bbox_inches="tight")
    plt.close(fig)
