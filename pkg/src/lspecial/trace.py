"""Level curves of positive homogeneous polynomials, traced in polar form.

If ``p`` is homogeneous of degree ``n`` and positive on the unit circle, the
level set ``p = level`` is star-shaped about the origin and meets the ray at
angle ``theta`` exactly once, at radius ``(level / p(cos theta, sin theta))**(1/n)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .errors import IoError, NotHomogeneous, NotPositiveOnCircle
from .poly import BivarPoly, Space

__all__ = ["CurveTrace", "trace_level", "boundedness_check", "emit", "svg_text", "csv_text"]


@dataclass(frozen=True)
class CurveTrace:
    points: tuple[tuple[float, float], ...]
    closed: bool
    samples: int

    def __len__(self):
        return len(self.points)

    def bbox(self) -> tuple[float, float, float, float]:
        xs = [p[0] for p in self.points]
        ys = [p[1] for p in self.points]
        return min(xs), min(ys), max(xs), max(ys)


def _float_terms(p: BivarPoly):
    terms = []
    for (i, j), c in p.items():
        if c.im != 0:
            raise ValueError("trace_level needs a real polynomial")
        terms.append((i, j, float(c.re)))
    return terms


def trace_level(p: BivarPoly, level: float = 1.0, samples: int = 720) -> CurveTrace:
    if p.space is not Space.XY:
        raise ValueError("trace_level expects an xy polynomial")
    if p.is_zero() or not p.is_homogeneous():
        raise NotHomogeneous("trace_level needs a nonzero homogeneous polynomial")
    if samples < 4:
        raise ValueError("samples must be at least 4")
    if not level > 0:
        raise ValueError("level must be positive")
    n = p.degree
    terms = _float_terms(p)
    points = []
    for k in range(samples):
        # nested grids: theta for (2N, 2k) equals theta for (N, k) bit for bit
        theta = (2.0 * math.pi * k) / samples
        c, s = math.cos(theta), math.sin(theta)
        value = math.fsum(coef * c ** i * s ** j for i, j, coef in terms)
        if not value > 0:
            raise NotPositiveOnCircle(
                f"polynomial is not positive at theta={theta:.6g} (value {value:.6g}); level set is not a bounded star"
            )
        r = (level / value) ** (1.0 / n)
        points.append((r * c, r * s))
    return CurveTrace(tuple(points), True, samples)


def boundedness_check(beta: float, alpha: float) -> bool:
    """Whether the quartic family's level set encloses a bounded component (alpha < 1/sqrt(beta))."""
    return alpha < 1.0 / math.sqrt(beta)


def csv_text(trace: CurveTrace) -> str:
    lines = ["x,y"]
    lines += [f"{x:.17g},{y:.17g}" for x, y in trace.points]
    return "\n".join(lines) + "\n"


def svg_text(trace: CurveTrace, stroke: str = "black") -> str:
    x0, y0, x1, y1 = trace.bbox()
    w, h = x1 - x0, y1 - y0
    mx, my = 0.05 * w, 0.05 * h
    # SVG y grows downward, so plot (x, -y)
    vb = (x0 - mx, -(y1 + my), w + 2 * mx, h + 2 * my)
    stroke_width = 0.005 * max(vb[2], vb[3])
    coords = " L ".join(f"{x:.17g} {-y:.17g}" for x, y in trace.points)
    path = f"M {coords}" + (" Z" if trace.closed else "")
    width_px = 800
    height_px = max(1, round(width_px * vb[3] / vb[2]))
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width_px}" height="{height_px}" '
        f'viewBox="{vb[0]:.17g} {vb[1]:.17g} {vb[2]:.17g} {vb[3]:.17g}" preserveAspectRatio="xMidYMid meet">\n'
        f'  <path d="{path}" fill="none" stroke="{stroke}" stroke-width="{stroke_width:.6g}"/>\n'
        "</svg>\n"
    )


def emit(trace: CurveTrace, fmt: str, path) -> None:
    if not trace.points:
        raise IoError("cannot emit an empty trace")
    if fmt == "csv":
        text = csv_text(trace)
    elif fmt == "svg":
        text = svg_text(trace)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise IoError(str(exc)) from exc
