"""SVG drawings of affine cactus words on a cylinder.

The cylinder is cut open along a seam and drawn as a rectangle whose left
and right edges are identified. Letters are stacked top to bottom; for each
letter sigma_{i,j} the strands of [i,j]_c run into one node and come out in
reverse order. Strand pieces that cross the seam are drawn dashed, once near
each edge.
"""
from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .words import CactusWord, support_size


@dataclass(frozen=True)
class Layout:
    strand_pitch: float = 40.0
    row_pitch: float = 60.0
    margin: float = 24.0
    label_height: float = 18.0
    stroke: float = 2.0
    node_radius: float = 3.5
    dash: str = "5,4"


LAYOUT = Layout()


def _fmt(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def render_svg(w: CactusWord, layout: Layout = LAYOUT) -> str:
    n = w.n
    width = n * layout.strand_pitch
    top = layout.margin + layout.label_height
    height = max(len(w), 1) * layout.row_pitch
    left = layout.margin

    def x_of(t: float) -> float:
        """x coordinate of unrolled strand position t (1-based, may exceed n)."""
        return left + (t - 0.5) * layout.strand_pitch

    parts: list[str] = []

    def segment(x1, y1, x2, y2, dashed=False):
        style = f' stroke-dasharray="{layout.dash}"' if dashed else ""
        parts.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"{style}/>')

    def wrapped(x1, y1, x2, y2):
        # both copies, clipped to the rectangle; dashed when the piece leaves it
        crosses = max(x1, x2) > left + width
        segment(x1, y1, x2, y2, dashed=crosses)
        if crosses:
            segment(x1 - width, y1, x2 - width, y2, dashed=True)

    for r, a in enumerate(w):
        y0 = top + r * layout.row_pitch
        y1 = y0 + layout.row_pitch
        ym = (y0 + y1) / 2
        size = support_size(a, n)
        moved = {(a.i - 1 + t) % n + 1 for t in range(size)}
        for p in range(1, n + 1):
            if p not in moved:
                segment(x_of(p), y0, x_of(p), y1)
        unrolled = [a.i + t for t in range(size)]
        xc = sum(map(x_of, unrolled)) / size
        for t in unrolled:
            wrapped(x_of(t), y0, xc, ym)
            wrapped(xc, ym, x_of(2 * a.i + size - 1 - t), y1)
        node_x = xc if xc <= left + width else xc - width
        parts.append(f'<circle class="node" cx="{_fmt(node_x)}" cy="{_fmt(ym)}" r="{_fmt(layout.node_radius)}"/>')
    if not w.letters:
        for p in range(1, n + 1):
            segment(x_of(p), top, x_of(p), top + height)

    total_w = width + 2 * layout.margin
    total_h = height + top + layout.margin
    labels = "".join(
        f'<text x="{_fmt(x_of(p))}" y="{_fmt(layout.margin + layout.label_height / 2)}">{p}</text>'
        for p in range(1, n + 1))
    title = escape(str(w) or "1")
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(total_w)}" height="{_fmt(total_h)}" '
        f'viewBox="0 0 {_fmt(total_w)} {_fmt(total_h)}">\n'
        f'<title>{title}</title>\n'
        f'<defs><clipPath id="cyl"><rect x="{_fmt(left)}" y="{_fmt(top)}" width="{_fmt(width)}" '
        f'height="{_fmt(height)}"/></clipPath></defs>\n'
        f'<rect x="{_fmt(left)}" y="{_fmt(top)}" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'fill="none" stroke="#bbb" stroke-dasharray="2,3"/>\n'
        f'<g font-family="sans-serif" font-size="12" text-anchor="middle">{labels}</g>\n'
        f'<g clip-path="url(#cyl)" stroke="black" stroke-width="{_fmt(layout.stroke)}" fill="black">\n'
        + "\n".join(parts) + "\n</g>\n</svg>\n"
    )
