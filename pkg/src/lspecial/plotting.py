"""Matplotlib rendering of traced curves."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

__all__ = ["render_traces"]

_STYLES = [
    {"color": "black", "linewidth": 1.6, "linestyle": "-"},
    {"color": "tab:red", "linewidth": 1.0, "linestyle": "--"},
    {"color": "tab:blue", "linewidth": 1.0, "linestyle": ":"},
]


def render_traces(traces, path, title: str = "", width: float = 8.0, dpi: int = 150) -> None:
    """Draw each ``(trace, label)`` as a closed curve with equal axis scaling and save to ``path``.

    The figure height follows the data aspect ratio (clamped), so strongly
    flattened ovals stay readable.
    """
    traces = list(traces)
    if not traces:
        raise ValueError("nothing to plot")
    xs = [p[0] for t, _ in traces for p in t.points]
    ys = [p[1] for t, _ in traces for p in t.points]
    aspect = (max(ys) - min(ys)) / max(max(xs) - min(xs), 1e-300)
    height = min(max(width * aspect * 1.6, 2.5), width)
    fig, ax = plt.subplots(figsize=(width, height))
    for k, (trace, label) in enumerate(traces):
        pts = list(trace.points)
        if trace.closed:
            pts.append(pts[0])
        ax.plot([p[0] for p in pts], [p[1] for p in pts], label=label, **_STYLES[k % len(_STYLES)])
    ax.set_aspect("equal", adjustable="datalim")
    ax.axhline(0, color="0.85", linewidth=0.6, zorder=0)
    ax.axvline(0, color="0.85", linewidth=0.6, zorder=0)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    if title:
        ax.set_title(title)
    if any(label for _, label in traces):
        # below the axes, so it never hides the curve
        ax.legend(loc="upper center", bbox_to_anchor=(0.5, -0.32), ncol=len(traces), fontsize=8, frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi, bbox_inches="tight")
    plt.close(fig)
