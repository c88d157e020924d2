"""Figure rendering for the report commands.

matplotlib is imported lazily with the Agg backend so that plain CLI use
never touches a display and the import cost is only paid under --plot.
"""
from __future__ import annotations

from typing import Sequence

__all__ = ["render_table_heatmap", "render_levelset", "render_conjecture"]


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_table_heatmap(values: Sequence[Sequence[int]], path: str) -> None:
    """Heatmap of sg over the (n, m) grid; values[i][j] is row m = i + 1,
    column n = j + 1."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 6))
    im = ax.imshow(values, origin="lower", cmap="viridis", aspect="auto",
                   extent=(0.5, len(values[0]) + 0.5, 0.5, len(values) + 0.5))
    ax.set_xlabel("n")
    ax.set_ylabel("m")
    ax.set_title("strong geodetic number of K(n, m)")
    fig.colorbar(im, ax=ax, label="sg")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_levelset(pairs: Sequence[tuple[int, int]], k: int, path: str) -> None:
    """Scatter of all (n, m) on one level of sg."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 6))
    if pairs:
        ax.scatter([p[0] for p in pairs], [p[1] for p in pairs], s=14, marker="s")
    ax.set_xlabel("n")
    ax.set_ylabel("m")
    ax.set_title(f"pairs with sg(K(n, m)) = {k}")
    ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_conjecture(ms: Sequence[int], gaps: Sequence[float], n: int, path: str) -> None:
    """Root-distance gap as a function of m for one fixed n."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(ms, gaps, lw=0.8)
    ax.axhline(2.0, color="red", ls="--", lw=0.8, label="conjectured bound 2")
    ax.set_xlabel("m")
    ax.set_ylabel("nearest-root gap")
    ax.set_title(f"quartic root distance to sg, n = {n}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
