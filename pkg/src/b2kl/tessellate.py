"""SVG pictures of the alcove tessellation.

Each group element of length at most ``radius`` is drawn as its alcove.  Edges
are coloured by the generator whose wall they lie on (red ``s1``, blue ``s2``,
green ``s0``) and the identity alcove carries a dot.  Fill is either by region
(big lightest, thin intermediate, thick darkest) or by membership in one or more
lower intervals, darker the more intervals contain the element.

>>> scene = build_scene(4, "interval:1212")
>>> sum(1 for t in scene.triangles if t.fill == "shade1")
8
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coxeter import IDENTITY, Element, alcove, ball, canonical_word, from_word, lower_interval, parse_word
from .families import classify

SCALE = 24
MARGIN = 12

STYLE = {
    "stroke_width": 1.2,
    "edge": {1: "#d62728", 2: "#1f77b4", 0: "#2ca02c"},
    "fill": {
        "none": "#ffffff",
        "identity": "#ffffff",
        "big": "#e0e0e0",
        "thin": "#a8a8a8",
        "thick": "#606060",
        "shade1": "#d9d9d9",
        "shade2": "#b0b0b0",
        "shade3": "#878787",
        "shade4": "#5e5e5e",
        "shade5": "#3a3a3a",
    },
    "dot_radius": 3,
}

# sides of the base alcove (0,0), (2,0), (1,1) as pairs of vertex indices,
# keyed by the generator reflecting in that side
_SIDES = {1: (0, 2), 2: (0, 1), 0: (1, 2)}


@dataclass(frozen=True)
class Triangle:
    element: Element
    vertices: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]
    fill: str


@dataclass
class SvgScene:
    triangles: list[Triangle]
    legend: list[tuple[str, str]] = field(default_factory=list)


def _region_class(w: Element) -> str:
    if w == IDENTITY:
        return "identity"
    tag = classify(w)
    if tag is None:
        return "none"
    if tag.region.startswith("Big"):
        return "big"
    if tag.region.startswith("Thick"):
        return "thick"
    return "thin"


def parse_color_by(mode: str, sep: str | None = None) -> tuple[str, list[Element]]:
    """``"region"`` or ``"interval:<word>[,<word>...]"``."""
    if mode == "region":
        return "region", []
    if mode.startswith("interval:"):
        words = mode[len("interval:"):].split(",")
        tops = [from_word(parse_word(wd, sep)) for wd in words]
        if not tops or len(tops) > 5:
            raise ValueError("give between one and five interval tops")
        return "interval", tops
    raise ValueError(f"color mode must be 'region' or 'interval:<word>', not {mode!r}")


def build_scene(radius: int, color_by: str = "region", sep: str | None = None) -> SvgScene:
    if radius < 0:
        raise ValueError("radius must be non-negative")
    kind, tops = parse_color_by(color_by, sep)
    below = [lower_interval(t) for t in tops]
    tris = []
    for level in ball(radius):
        for w in sorted(level, key=canonical_word):
            if kind == "region":
                fill = _region_class(w)
            else:
                depth = sum(1 for b in below if w in b)
                fill = f"shade{depth}" if depth else "none"
            tris.append(Triangle(w, alcove(w), fill))
    if kind == "region":
        legend = [("big", "big region"), ("thin", "thin region"), ("thick", "thick region")]
    else:
        legend = [(f"shade{i + 1}", "below " + (canonical_word(t) or "e")) for i, t in enumerate(tops)]
    return SvgScene(tris, legend)


def _edges(t: Triangle):
    for s, (i, j) in _SIDES.items():
        a, b = t.vertices[i], t.vertices[j]
        yield s, (a, b) if a <= b else (b, a)


def render_svg(scene: SvgScene) -> str:
    xs = [p[0] for t in scene.triangles for p in t.vertices]
    ys = [p[1] for t in scene.triangles for p in t.vertices]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    width = (x1 - x0) * SCALE + 2 * MARGIN
    legend_h = 18 * len(scene.legend) + 8
    height = (y1 - y0) * SCALE + 2 * MARGIN + legend_h

    def px(p):
        # flip y so that north is up
        return (MARGIN + (p[0] - x0) * SCALE, MARGIN + (y1 - p[1]) * SCALE)

    fills = STYLE["fill"]
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g id="alcoves" stroke="none">',
    ]
    for t in scene.triangles:
        pts = " ".join(f"{x},{y}" for x, y in map(px, t.vertices))
        lines.append(f'<polygon class="{t.fill}" data-word="{canonical_word(t.element) or "e"}" '
                     f'points="{pts}" fill="{fills[t.fill]}"/>')
    lines.append("</g>")
    seen = {}
    for t in scene.triangles:
        for s, seg in _edges(t):
            seen.setdefault(seg, s)
    lines.append(f'<g id="walls" stroke-width="{STYLE["stroke_width"]}" stroke-linecap="round">')
    for (a, b), s in sorted(seen.items()):
        (ax, ay), (bx, by) = px(a), px(b)
        lines.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="{STYLE["edge"][s]}"/>')
    lines.append("</g>")
    ident = next((t for t in scene.triangles if t.element == IDENTITY), None)
    if ident is not None:
        cx = sum(px(p)[0] for p in ident.vertices) / 3
        cy = sum(px(p)[1] for p in ident.vertices) / 3
        lines.append(f'<circle id="identity" cx="{cx:.1f}" cy="{cy:.1f}" r="{STYLE["dot_radius"]}" fill="#000000"/>')
    ly = height - legend_h + 4
    for i, (cls, label) in enumerate(scene.legend):
        y = ly + 18 * i
        lines.append(f'<rect x="{MARGIN}" y="{y}" width="12" height="12" fill="{fills[cls]}" stroke="#000000"/>')
        lines.append(f'<text x="{MARGIN + 18}" y="{y + 10}" font-size="11" font-family="sans-serif">{label}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_svg(path: str, radius: int, color_by: str = "region", sep: str | None = None) -> SvgScene:
    scene = build_scene(radius, color_by, sep)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(scene))
    return scene
