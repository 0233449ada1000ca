"""Deterministic SVG rendering of the unrolled strip.

Coordinates come straight from the layout; edges that wrap a seam are drawn
to the translated copy of their far endpoint, so the picture matches the
planar representation with its boundary identifications.  Output bytes are a
pure function of the inputs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .core_map import Cycle, SurfaceMap
from .generators import Layout

SCALE = 40
MARGIN = 30


class MismatchedInputs(ValueError):
    """Map, layout and cycle do not describe the same instance."""


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _endpoints(layout: Layout, u: int, v: int):
    """Drawn endpoints of edge (u, v), unwrapping across seams via the
    recorded displacement when the naive segment is wrong."""
    xu, yu = layout.coords[u]
    xv, yv = layout.coords[v]
    d = layout.disp.get((u, v))
    if d is None:
        return (xu, yu), (xv, yv)
    # displacement is in (slot, row) units; convert to drawn units
    su = Fraction(layout.width, layout.i)
    sv = Fraction(layout.height, layout.j)
    tx = xu + d[0] * su
    ty = yu + d[1] * sv
    return (xu, yu), (tx, ty)


def render_svg(
    m: SurfaceMap,
    layout: Layout,
    cycle: Optional[Cycle] = None,
) -> str:
    if m.vertex_count != len(layout.coords):
        raise MismatchedInputs(
            f"map has {m.vertex_count} vertices, layout has {len(layout.coords)}"
        )
    if cycle is not None and len(cycle.vertices) != m.vertex_count:
        raise MismatchedInputs(
            f"cycle covers {len(cycle.vertices)} of {m.vertex_count} vertices"
        )

    W = float(layout.width)
    H = float(layout.height)

    def px(x: Fraction) -> float:
        return MARGIN + float(x) * SCALE

    def py(y: Fraction) -> float:
        return MARGIN + (H - float(y)) * SCALE

    out = []
    out.append(
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_fmt(2 * MARGIN + W * SCALE)}" '
        f'height="{_fmt(2 * MARGIN + H * SCALE)}">'
    )
    out.append(
        f'<!-- {layout.type_name} i={layout.i} j={layout.j} k={layout.k} -->'
    )
    # seam markers: the strip boundary
    out.append(
        f'<rect x="{_fmt(px(Fraction(0)))}" y="{_fmt(py(layout.height))}" '
        f'width="{_fmt(W * SCALE)}" height="{_fmt(H * SCALE)}" '
        'fill="none" stroke="#c0c0c0" stroke-width="2" stroke-dasharray="6 4"/>'
    )
    # edges
    for (u, v) in sorted(m.edges):
        (x1, y1), (x2, y2) = _endpoints(layout, u, v)
        out.append(
            f'<line x1="{_fmt(px(x1))}" y1="{_fmt(py(y1))}" '
            f'x2="{_fmt(px(x2))}" y2="{_fmt(py(y2))}" '
            'stroke="#555555" stroke-width="1"/>'
        )
    # cycle as thick strokes
    if cycle is not None:
        for u, v in cycle.edges():
            (x1, y1), (x2, y2) = _endpoints(layout, u, v)
            out.append(
                f'<line x1="{_fmt(px(x1))}" y1="{_fmt(py(y1))}" '
                f'x2="{_fmt(px(x2))}" y2="{_fmt(py(y2))}" '
                'stroke="#000000" stroke-width="4" class="cycle"/>'
            )
    # vertices and labels
    for v in range(m.vertex_count):
        x, y = layout.coords[v]
        gap = v in layout.gap_index
        out.append(
            f'<circle cx="{_fmt(px(x))}" cy="{_fmt(py(y))}" r="3.5" '
            f'fill="{"#d06000" if gap else "#1040c0"}"/>'
        )
        out.append(
            f'<text x="{_fmt(px(x) + 5)}" y="{_fmt(py(y) - 5)}" '
            f'font-size="9">{layout.labels[v]}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
