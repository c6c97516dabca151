"""Deterministic SVG pictures of regions and their pipeline artifacts.

Layers (drawn in this fixed order regardless of how they are listed):

* ``subdivision`` -- the inside squares/triangles of the quadtree cover
  and, on the square lattice, the unit-level sleeve triangles;
* ``tiling`` -- the maximum tiling (dominoes) or a lozenge tiling from
  the matching reference;
* ``boundary`` -- the region outline;
* ``heights`` -- height labels on the vertices (full heights when the
  region is tileable, otherwise the boundary heights).

Output is byte-identical for a fixed region, layer set, and scale: all
collections are sorted before drawing and floats are printed with a
fixed format.  Triangular-grid vertices are embedded here and nowhere
else: (q, r) maps to q*(1, 0) + r*(-1/2, sqrt(3)/2), y flipped for
screen coordinates.
"""

from __future__ import annotations

import math
from typing import Dict, Iterable, List, Tuple

from tiler.errors import NotTileable
from tiler.lozenge import (LozengeBoundary, build_tri_subdivision, face_corners,
                           lozenge_boundary_height, lozenge_matching_decide,
                           _piece_corners)
from tiler.reference import extract_tiling, thurston_full
from tiler.region import RegionBoundary, boundary_height
from tiler.subdivision import build_subdivision

LAYERS = ("boundary", "subdivision", "heights", "tiling")

_STYLE = {
    "subdivision-fill": "#eef3fb",
    "subdivision-stroke": "#7a93b8",
    "sleeve-fill": "#dde8f5",
    "tiling-fill": "#f8e8c8",
    "tiling-stroke": "#b07818",
    "boundary-stroke": "#202020",
    "text-fill": "#a02020",
}


def _f(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def _check_layers(layers: Iterable[str]) -> List[str]:
    out = []
    for name in layers:
        if name not in LAYERS:
            raise ValueError(f"unknown layer {name!r}, expected one of {LAYERS}")
        if name not in out:
            out.append(name)
    return [name for name in ("subdivision", "tiling", "boundary", "heights")
            if name in out]


def _svg(width: float, height: float, body: List[str]) -> str:
    head = ('<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{_f(width)}" height="{_f(height)}" '
            f'viewBox="0 0 {_f(width)} {_f(height)}">')
    bg = f'<rect width="{_f(width)}" height="{_f(height)}" fill="white"/>'
    return "\n".join([head, bg] + body + ["</svg>"]) + "\n"


def _poly(points: List[Tuple[float, float]], fill: str, stroke: str,
          width: float) -> str:
    pts = " ".join(f"{_f(x)},{_f(y)}" for x, y in points)
    return (f'<polygon points="{pts}" fill="{fill}" stroke="{stroke}" '
            f'stroke-width="{_f(width)}"/>')


def _text(x: float, y: float, size: float, s: str) -> str:
    return (f'<text x="{_f(x)}" y="{_f(y)}" font-size="{_f(size)}" '
            f'font-family="monospace" text-anchor="middle" '
            f'fill="{_STYLE["text-fill"]}">{s}</text>')


def render_square(b: RegionBoundary, layers: Iterable[str] = ("boundary",),
                  scale: int = 24) -> str:
    layers = _check_layers(layers)
    xs = [v[0] for v in b.vertices]
    ys = [v[1] for v in b.vertices]
    # The subdivision reaches outside the region bounding box; pad by it.
    pad = 2
    xmin, ymin = min(xs) - pad, min(ys) - pad
    xmax, ymax = max(xs) + pad, max(ys) + pad
    margin = scale

    def pt(x: float, y: float) -> Tuple[float, float]:
        return (margin + (x - xmin) * scale, margin + (ymax - y) * scale)

    body: List[str] = []
    thurston = None
    if "tiling" in layers or "heights" in layers:
        thurston = thurston_full(b, want_heights=True)

    if "subdivision" in layers:
        sub = build_subdivision(b)
        for level, key in sorted(sub.inside_squares()):
            corners = [pt(*c) for c in sub.corners_xy(level, key)]
            body.append(_poly(corners, _STYLE["subdivision-fill"],
                              _STYLE["subdivision-stroke"], 1.0))
        for tri in sorted(sub.triangles):
            body.append(_poly([pt(*c) for c in tri.verts],
                              _STYLE["sleeve-fill"],
                              _STYLE["subdivision-stroke"], 0.5))

    if "tiling" in layers:
        if not thurston.tileable:
            raise NotTileable("tiling layer requested for an untileable region")
        inset = 0.12
        for a, c in sorted(extract_tiling(b, thurston.heights)):
            x0, y0 = min(a[0], c[0]), min(a[1], c[1])
            x1, y1 = max(a[0], c[0]) + 1, max(a[1], c[1]) + 1
            left, top = pt(x0 + inset, y1 - inset)
            right, bottom = pt(x1 - inset, y0 + inset)
            body.append(f'<rect x="{_f(left)}" y="{_f(top)}" '
                        f'width="{_f(right - left)}" height="{_f(bottom - top)}" '
                        f'rx="{_f(0.18 * scale)}" '
                        f'fill="{_STYLE["tiling-fill"]}" '
                        f'stroke="{_STYLE["tiling-stroke"]}" '
                        f'stroke-width="{_f(scale / 12)}"/>')

    if "boundary" in layers:
        d = "M " + " L ".join(f"{_f(px)} {_f(py)}"
                              for px, py in (pt(*v) for v in b.vertices)) + " Z"
        body.append(f'<path d="{d}" fill="none" '
                    f'stroke="{_STYLE["boundary-stroke"]}" '
                    f'stroke-width="{_f(scale / 10)}"/>')

    if "heights" in layers:
        if thurston.tileable:
            labels: Dict[Tuple[int, int], int] = dict(thurston.heights)
        else:
            bh = boundary_height(b)
            if not bh.valid:
                raise NotTileable("boundary heights do not close up")
            labels = dict(bh.heights)
        for (x, y), h in sorted(labels.items()):
            px, py = pt(x, y)
            body.append(_text(px, py - 0.12 * scale, 0.38 * scale, str(h)))

    return _svg((xmax - xmin) * scale + 2 * margin,
                (ymax - ymin) * scale + 2 * margin, body)


_SQRT3 = math.sqrt(3.0)


def render_lozenge(b: LozengeBoundary, layers: Iterable[str] = ("boundary",),
                   scale: int = 24) -> str:
    layers = _check_layers(layers)
    averts = b._averts
    embedded = [(q - r / 2.0, r * _SQRT3 / 2.0) for q, r in averts]

    sub = build_tri_subdivision(b) if "subdivision" in layers else None
    extra: List[Tuple[float, float]] = []
    if sub is not None:
        for piece in sub.pieces:
            extra.extend((q - r / 2.0, r * _SQRT3 / 2.0)
                         for q, r in _piece_corners(piece))

    xs = [x for x, _ in embedded + extra]
    ys = [y for _, y in embedded + extra]
    xmin, xmax = min(xs) - 1, max(xs) + 1
    ymin, ymax = min(ys) - 1, max(ys) + 1
    margin = scale

    def pt(q: int, r: int) -> Tuple[float, float]:
        x = q - r / 2.0
        y = r * _SQRT3 / 2.0
        return (margin + (x - xmin) * scale, margin + (ymax - y) * scale)

    body: List[str] = []
    if sub is not None:
        for piece in sub.pieces:
            body.append(_poly([pt(*c) for c in _piece_corners(piece)],
                              _STYLE["subdivision-fill"],
                              _STYLE["subdivision-stroke"], 1.0))

    if "tiling" in layers:
        tiling = lozenge_matching_decide(b)
        if tiling is None:
            raise NotTileable("tiling layer requested for an untileable region")
        for up, down in sorted(tiling):
            cu, cd = set(face_corners(up)), set(face_corners(down))
            shared = sorted(cu & cd)
            quad = [(cu - cd).pop(), shared[0], (cd - cu).pop(), shared[1]]
            body.append(_poly([pt(*c) for c in quad], _STYLE["tiling-fill"],
                              _STYLE["tiling-stroke"], 1.5))

    if "boundary" in layers:
        d = "M " + " L ".join(f"{_f(px)} {_f(py)}"
                              for px, py in (pt(*v) for v in averts)) + " Z"
        body.append(f'<path d="{d}" fill="none" '
                    f'stroke="{_STYLE["boundary-stroke"]}" '
                    f'stroke-width="{_f(scale / 10)}"/>')

    if "heights" in layers:
        lh = lozenge_boundary_height(b)
        if not lh.valid:
            raise NotTileable("boundary heights do not close up")
        for (q, r), v in sorted(zip(averts, (lh[w] for w in b.vertices))):
            px, py = pt(q, r)
            body.append(_text(px, py - 0.12 * scale, 0.38 * scale, str(v)))

    return _svg((xmax - xmin) * scale + 2 * margin,
                (ymax - ymin) * scale + 2 * margin, body)
