"""Deterministic SVG pictures of rims and their mismatch trapezia.

All coordinates are integers derived from height profiles, so output bytes
are a pure function of the input rims and the layout config.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rims import Rim, height_profile
from .trapezia import build_word


@dataclass(frozen=True)
class RenderConfig:
    """Layout constants; unit should stay even so midpoints are integers."""

    unit: int = 40
    rim_gap: int = 2  # vertical units between the lowest point of I and the top of J
    margin: int = 60
    stroke: int = 3
    font: int = 16


DEFAULT_CONFIG = RenderConfig()


def _polyline(xs: list[int], ys: list[int], dash: str | None, config: RenderConfig) -> str:
    points = " ".join(f"{x},{y}" for x, y in zip(xs, ys))
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    return (
        f'<polyline points="{points}" fill="none" stroke="black" '
        f'stroke-width="{config.stroke}"{dash_attr}/>'
    )


def _edge_labels(heights: tuple[int, ...], origin_y: int, below: bool, config: RenderConfig) -> list[str]:
    unit, font = config.unit, config.font
    out = []
    for e in range(1, len(heights)):
        x = config.margin + e * unit - unit // 2
        y0 = origin_y - heights[e - 1] * unit
        y1 = origin_y - heights[e] * unit
        y = max(y0, y1) + font + 4 if below else min(y0, y1) - 8
        out.append(
            f'<text x="{x}" y="{y}" text-anchor="middle" '
            f'font-family="monospace" font-size="{font}">{e}</text>'
        )
    return out


def render_svg(rim_i: Rim, rim_j: Rim | None = None, config: RenderConfig = DEFAULT_CONFIG) -> str:
    """SVG 1.1 document: rim paths, edge labels, dotted trapezium boundaries."""
    n = rim_i.n
    unit, margin = config.unit, config.margin
    hi = height_profile(rim_i).heights
    xs = [margin + v * unit for v in range(n + 1)]
    origin_i = margin + max(hi) * unit
    ys_i = [origin_i - h * unit for h in hi]
    width = 2 * margin + n * unit

    parts = [_polyline(xs, ys_i, None, config)]
    parts.extend(_edge_labels(hi, origin_i, below=False, config=config))

    if rim_j is None:
        height = origin_i - min(hi) * unit + margin
    else:
        hj = height_profile(rim_j).heights
        origin_j = origin_i - min(hi) * unit + (config.rim_gap + max(hj)) * unit
        ys_j = [origin_j - h * unit for h in hj]
        parts.append(_polyline(xs, ys_j, "8,5", config))
        parts.extend(_edge_labels(hj, origin_j, below=True, config=config))
        boundaries: set[int] = set()
        for letter in build_word(rim_i, rim_j).letters:
            boundaries.add(letter.edges[0] - 1)
            boundaries.add(letter.edges[-1])
        if n in boundaries:
            boundaries.add(0)
        for v in sorted(boundaries):
            parts.append(
                f'<line x1="{xs[v]}" y1="{ys_i[v]}" x2="{xs[v]}" y2="{ys_j[v]}" '
                f'stroke="black" stroke-width="1" stroke-dasharray="2,4"/>'
            )
        height = origin_j - min(hj) * unit + margin

    header = (
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">'
    )
    return "\n".join([header, *parts, "</svg>"]) + "\n"
