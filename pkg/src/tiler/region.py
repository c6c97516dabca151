"""Boundary words, region geometry, and boundary height functions.

A region is described by a single closed walk over the moves ``R``, ``U``,
``L``, ``D``.  Parsing validates that the walk closes, never revisits a
vertex (this also rejects pinch points), and encloses a nonzero area.  The
walk is then normalised: counterclockwise orientation, first vertex at the
origin.
"""

from __future__ import annotations

import json
from bisect import bisect_right, insort
from typing import Dict, Iterator, List, Optional, Tuple

from tiler.errors import EmptyInterior, NotClosed, SelfIntersecting
from tiler.lattice import Point, edge_step

MOVES: Dict[str, Point] = {"R": (1, 0), "U": (0, 1), "L": (-1, 0), "D": (0, -1)}
INVERSE = {"R": "L", "L": "R", "U": "D", "D": "U"}


def _cross(a: Point, b: Point) -> int:
    return a[0] * b[1] - a[1] * b[0]


def direction_enters_interior(din: Point, dout: Point, d: Point) -> bool:
    """Whether direction ``d`` points into the region at a boundary vertex.

    ``din``/``dout`` are the directions of the boundary edges arriving at and
    leaving the vertex, with the interior on the left of travel.  The interior
    occupies the sector swept counterclockwise from ``dout`` to ``-din``; the
    test is exact for any ``d`` not parallel to the boundary edges, which is
    the only way it is used (diagonal ``d`` against axis edges).
    """
    p = dout
    q = (-din[0], -din[1])
    c = _cross(p, q)
    if c > 0:
        return _cross(p, d) > 0 and _cross(d, q) > 0
    if c < 0:
        return _cross(p, d) > 0 or _cross(d, q) > 0
    # Straight passage: interior is the open half-plane left of dout.
    return _cross(p, d) > 0


class RegionBoundary:
    """A validated, counterclockwise boundary walk anchored at the origin.

    Attributes:
      moves: the normalised move word, one character per edge.
      vertices: the p boundary vertices in walk order, starting at (0, 0).
      area: number of cells enclosed.
      name: optional label carried through from the input.
    """

    def __init__(self, moves: str, vertices: List[Point], area: int, name: Optional[str] = None):
        self.moves = moves
        self.vertices = vertices
        self.area = area
        self.name = name
        self.vertex_set = set(vertices)
        self.vertex_dirs: Dict[Point, Tuple[Point, Point]] = {}
        prev_dir = MOVES[moves[-1]]
        for i, v in enumerate(vertices):
            out_dir = MOVES[moves[i]]
            self.vertex_dirs[v] = (prev_dir, out_dir)
            prev_dir = out_dir
        xs = [v[0] for v in vertices]
        ys = [v[1] for v in vertices]
        self.bbox = (min(xs), min(ys), max(xs), max(ys))
        self._rows: Optional[Dict[int, List[int]]] = None

    @property
    def p(self) -> int:
        return len(self.moves)

    def edges(self) -> Iterator[Tuple[Point, Point]]:
        verts = self.vertices
        for i in range(len(verts) - 1):
            yield verts[i], verts[i + 1]
        yield verts[-1], verts[0]

    def _row_index(self) -> Dict[int, List[int]]:
        """Per-row sorted x positions of vertical boundary edges.

        Crossing them left to right alternates outside/inside, so a cell is
        inside iff an odd number of vertical edges sit at or left of it.
        """
        if self._rows is None:
            rows: Dict[int, List[int]] = {}
            for (x0, y0), (x1, y1) in self.edges():
                if x0 == x1:
                    row = min(y0, y1)
                    insort(rows.setdefault(row, []), x0)
            self._rows = rows
        return self._rows

    def contains_cell(self, cell: Point) -> bool:
        xs = self._row_index().get(cell[1])
        if not xs:
            return False
        return bisect_right(xs, cell[0]) % 2 == 1

    def vertex_in_closure(self, v: Point) -> bool:
        x, y = v
        return (
            self.contains_cell((x, y))
            or self.contains_cell((x - 1, y))
            or self.contains_cell((x, y - 1))
            or self.contains_cell((x - 1, y - 1))
        )

    def cells(self) -> Iterator[Point]:
        """All cells of the region, row by row.  Costs O(area)."""
        for row, xs in sorted(self._row_index().items()):
            for k in range(0, len(xs), 2):
                for x in range(xs[k], xs[k + 1]):
                    yield (x, row)

    def interior_direction(self, v: Point, d: Point) -> bool:
        """Whether ``d`` points locally into the region at boundary vertex ``v``."""
        din, dout = self.vertex_dirs[v]
        return direction_enters_interior(din, dout, d)

    def to_json(self) -> str:
        payload = {"moves": self.moves}
        if self.name is not None:
            payload["name"] = self.name
        return json.dumps(payload)

    def __repr__(self) -> str:
        label = self.name or self.moves[:16] + ("..." if len(self.moves) > 16 else "")
        return f"RegionBoundary({label!r}, p={self.p}, n={self.area})"


def _walk(moves: str) -> Tuple[List[Point], int]:
    """Vertices visited by the walk and twice its signed area."""
    verts = [(0, 0)]
    x = y = 0
    area2 = 0
    for m in moves:
        dx, dy = MOVES[m]
        # Shoelace contribution of the edge (x, y) -> (x + dx, y + dy).
        area2 += x * dy - y * dx
        x += dx
        y += dy
        verts.append((x, y))
    return verts, area2


def parse_boundary(text: str) -> RegionBoundary:
    """Parse a boundary word (or a JSON wrapper around one) into a region.

    Whitespace is ignored and case does not matter.  Unknown characters
    raise ``ValueError`` whose ``args[1]`` is the offending index in the
    cleaned-up word.
    """
    name = None
    stripped = text.strip()
    if stripped.startswith("{"):
        payload = json.loads(stripped)
        word = payload["moves"]
        name = payload.get("name")
    else:
        word = stripped
    cleaned = "".join(word.split()).upper()
    for i, ch in enumerate(cleaned):
        if ch not in MOVES:
            raise ValueError(f"invalid move {ch!r} at index {i}", i)
    if not cleaned:
        raise NotClosed("empty boundary word")

    verts, area2 = _walk(cleaned)
    if verts[-1] != (0, 0):
        raise NotClosed(f"walk ends at {verts[-1]}, not at the origin")
    verts.pop()
    if area2 == 0:
        raise EmptyInterior("boundary encloses no area")
    seen = set()
    for v in verts:
        if v in seen:
            raise SelfIntersecting(f"vertex {v} visited twice")
        seen.add(v)

    if area2 < 0:
        cleaned = "".join(INVERSE[m] for m in reversed(cleaned))
        verts, area2 = _walk(cleaned)
        verts.pop()
    return RegionBoundary(cleaned, verts, area2 // 2, name)


class BoundaryHeight:
    """Heights along the boundary walk, anchored at h(origin) = 0.

    ``valid`` is False when the walk's forced increments fail to close up,
    which happens exactly when the region's cell colours are unbalanced.
    Invalidity is a value, not an exception: callers turn it into an
    untileability verdict.
    """

    __slots__ = ("heights", "valid")

    def __init__(self, heights: Dict[Point, int], valid: bool):
        self.heights = heights
        self.valid = valid

    def __getitem__(self, v: Point) -> int:
        return self.heights[v]


def boundary_height(b: RegionBoundary) -> BoundaryHeight:
    heights: Dict[Point, int] = {}
    h = 0
    for tail, head in b.edges():
        heights[tail] = h
        h += edge_step(tail, head)
    return BoundaryHeight(heights, h == 0)
