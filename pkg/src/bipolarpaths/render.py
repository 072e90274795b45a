"""Static renderers: SVG for path triples, Graphviz DOT for the map objects."""

from __future__ import annotations

from .bipolar import BipolarOrientation
from .encode import PathTriple, check_endpoints, is_nonintersecting
from .errors import Intersecting
from .schnyder import SchnyderWood
from .separating import SeparatingDecomposition

CELL = 40
MARGIN = 30
_PATH_STYLE = (("upper", "#2e7d32"), ("middle", "#1565c0"), ("lower", "#c62828"))
_DOT_COLORS = {"B": "blue", "R": "red", "G": "green"}


def render_triple(p: PathTriple) -> str:
    """Grid with the three paths as polylines and labelled endpoints."""
    i, j = check_endpoints(p)
    if not is_nonintersecting(p):
        raise Intersecting(p.steps())
    xmin, xmax, ymin, ymax = -1, i + 1, -1, j + 1
    width = (xmax - xmin) * CELL + 2 * MARGIN
    height = (ymax - ymin) * CELL + 2 * MARGIN

    def px(x: int, y: int) -> tuple[int, int]:
        return MARGIN + (x - xmin) * CELL, MARGIN + (ymax - y) * CELL

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        '<g stroke="#dddddd" stroke-width="1">',
    ]
    for x in range(xmin, xmax + 1):
        (x0, y0), (_, y1) = px(x, ymin), px(x, ymax)
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/>')
    for y in range(ymin, ymax + 1):
        (x0, y0), (x1, _) = px(xmin, y), px(xmax, y)
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/>')
    out.append("</g>")

    for name, colour in _PATH_STYLE:
        path = getattr(p, name)
        pts = path.points()
        coords = " ".join(f"{a},{b}" for a, b in (px(*q) for q in pts))
        if len(pts) > 1:
            out.append(
                f'<polyline class="{name}" points="{coords}" fill="none" '
                f'stroke="{colour}" stroke-width="3"/>'
            )
        for q in (pts[0], pts[-1]):
            cx, cy = px(*q)
            out.append(f'<circle cx="{cx}" cy="{cy}" r="4" fill="{colour}"/>')
        ex, ey = px(*pts[-1])
        out.append(
            f'<text x="{ex + 6}" y="{ey - 6}" font-family="monospace" font-size="11" '
            f'fill="{colour}">({pts[-1][0]},{pts[-1][1]})</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def export_dot(obj: BipolarOrientation | SeparatingDecomposition | SchnyderWood) -> str:
    """Directed graph in DOT syntax, one line per vertex then one per edge."""
    cmap = obj.map
    lines = ["digraph G {"]
    for v in range(cmap.vertex_count):
        attrs = []
        if isinstance(obj, SeparatingDecomposition):
            attrs.append(f'class="{"black" if obj.is_black(v) else "white"}"')
            attrs.append("style=filled")
            attrs.append(f'fillcolor="{"black" if obj.is_black(v) else "white"}"')
            attrs.append(f'fontcolor="{"white" if obj.is_black(v) else "black"}"')
        poles = {}
        if isinstance(obj, (BipolarOrientation, SeparatingDecomposition)):
            poles = {obj.s: "s", obj.t: "t"}
        elif isinstance(obj, SchnyderWood):
            poles = {obj.s: "s", obj.t: "t", obj.u: "u"}
        if v in poles:
            attrs.append(f'pole="{poles[v]}"')
            attrs.append(f'label="{poles[v]}"')
        lines.append(f"  v{v} [{', '.join(attrs)}];" if attrs else f"  v{v};")
    for k, (x, y) in enumerate(cmap.edges):
        if isinstance(obj, BipolarOrientation):
            tail, colour = obj.tails[k], None
        else:
            tail, colour = obj.tails[k], obj.colors[k]
        if tail is None:
            a, b = cmap.origin(x), cmap.origin(y)
            lines.append(f"  v{a} -> v{b} [dir=none];")
            continue
        a, b = cmap.origin(tail), cmap.target(tail)
        attr = f' [color="{_DOT_COLORS[colour]}"]' if colour else ""
        lines.append(f"  v{a} -> v{b}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
