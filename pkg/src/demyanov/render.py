"""Deterministic SVG rendering of collections as a grid of panels.

One panel per member in canonical order, all panels sharing the bounding
box of the whole collection so shapes stay comparable across panels.
Coordinates are computed in exact rationals and formatted with a fixed
rule, so identical inputs yield byte-identical output everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .converter import Collection
from .geometry import Point

PALETTE = (
    ("#c6dbef", "#2171b5"),
    ("#fdd0a2", "#d94801"),
    ("#c7e9c0", "#238b45"),
    ("#dadaeb", "#6a51a3"),
    ("#fcbba1", "#cb181d"),
    ("#d9d9d9", "#525252"),
)


@dataclass(frozen=True)
class RenderSpec:
    """Canvas geometry and styling for render_svg."""

    panel_size: int = 160
    margin: int = 16
    per_row: int = 4
    style_indices: tuple[int, ...] = ()
    palette: tuple[tuple[str, str], ...] = PALETTE


def _fmt(value: Fraction) -> str:
    # Fixed-point decimal, at most 4 places, round half up, exact arithmetic.
    sign = "-" if value < 0 else ""
    magnitude = -value if value < 0 else value
    scaled = (magnitude.numerator * 20_000 + magnitude.denominator) // (2 * magnitude.denominator)
    if scaled == 0:
        return "0"
    whole, frac = divmod(scaled, 10_000)
    if frac == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{f'{frac:04d}'.rstrip('0')}"


def render_svg(omega: Collection, spec: RenderSpec | None = None) -> str:
    """Render each member of the collection into its own panel."""
    spec = spec or RenderSpec()
    if spec.panel_size <= 2 * spec.margin:
        raise ValueError("panel_size must exceed twice the margin")
    if spec.per_row < 1:
        raise ValueError("per_row must be at least 1")

    xs = [v.x for member in omega.members for v in member.vertices]
    ys = [v.y for member in omega.members for v in member.vertices]
    min_x, max_x, min_y, max_y = min(xs), max(xs), min(ys), max(ys)
    width_units = max_x - min_x
    height_units = max_y - min_y
    span = max(width_units, height_units)
    inner = Fraction(spec.panel_size - 2 * spec.margin)
    scale = inner / span if span > 0 else Fraction(1)
    pad_x = (inner - width_units * scale) / 2
    pad_y = (inner - height_units * scale) / 2

    count = len(omega.members)
    cols = min(count, spec.per_row)
    rows = (count + spec.per_row - 1) // spec.per_row
    canvas_w = cols * spec.panel_size
    canvas_h = rows * spec.panel_size

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{canvas_w}" height="{canvas_h}" '
        f'viewBox="0 0 {canvas_w} {canvas_h}">',
    ]
    for i, member in enumerate(omega.members):
        panel_x = (i % spec.per_row) * spec.panel_size
        panel_y = (i // spec.per_row) * spec.panel_size
        origin_x = panel_x + spec.margin + pad_x
        origin_y = panel_y + spec.margin + pad_y

        def to_canvas(v: Point) -> tuple[Fraction, Fraction]:
            return (origin_x + (v.x - min_x) * scale, origin_y + (max_y - v.y) * scale)

        style = spec.style_indices[i] if i < len(spec.style_indices) else i
        fill, stroke = spec.palette[style % len(spec.palette)]
        lines.append('<g class="panel">')
        lines.append(
            f'<rect x="{panel_x}" y="{panel_y}" width="{spec.panel_size}" '
            f'height="{spec.panel_size}" fill="#ffffff" stroke="#cccccc" stroke-width="1"/>'
        )
        points = [to_canvas(v) for v in member.vertices]
        if len(points) == 1:
            cx, cy = points[0]
            lines.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="3" fill="{stroke}"/>')
        elif len(points) == 2:
            (x1, y1), (x2, y2) = points
            lines.append(
                f'<path d="M {_fmt(x1)} {_fmt(y1)} L {_fmt(x2)} {_fmt(y2)}" fill="none" '
                f'stroke="{stroke}" stroke-width="2" stroke-linecap="round"/>'
            )
        else:
            path = " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in points)
            lines.append(
                f'<path d="M {path} Z" fill="{fill}" fill-opacity="0.7" '
                f'stroke="{stroke}" stroke-width="2" stroke-linejoin="round"/>'
            )
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
