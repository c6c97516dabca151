"""Incremental queries against the maximum tiling of a region.

Preprocessing runs the boundary-only pipeline (subdivision, site graph,
height relaxation) and keeps the per-line sorted arrays of valued points.
A height query for a vertex that is not a site descends into the inside
squares covering it, splitting them dyadically: each split adds the four
side midpoints and the centre of the square, and each new point is valued
as the minimum of ``value + 2 * gap`` over its nearest valued neighbour in
the four diagonal directions, together with ``value + max step`` over any
valued axis neighbour.  Straight diagonal segments between such
neighbours cannot leave the region (every boundary vertex on the line is
itself a valued site), so each candidate is a sound upper bound, and once
a square has shrunk to a single cell the four axis neighbours of its
centre pin the centre's height exactly.

The refinement overlay (new points, touched line arrays, split squares)
is query state, not preprocessing state; ``reset`` drops it.  A domino
query reads the four corner heights of a cell and crosses the unique side
whose height gap is 3.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right, insort
from typing import Dict, List, NamedTuple, Sequence, Set, Tuple, Union

from tiler.approxgraph import build_graph
from tiler.errors import InternalInconsistency, NotTileable, OutsideRegion
from tiler.lattice import Point, alpha
from tiler.region import RegionBoundary, boundary_height, parse_boundary
from tiler.solver import compute_gmax
from tiler.subdivision import build_subdivision

Box = Tuple[int, int, int]  # umin, vmin, side


class DominoPlacement(NamedTuple):
    cell: Point
    partner: Point
    orientation: str  # "H" when the two cells share a vertical side

    def as_pair(self) -> Tuple[Point, Point]:
        a, b = self.cell, self.partner
        return (a, b) if a < b else (b, a)


class TilingOracle:
    def __init__(self, source: Union[str, RegionBoundary]):
        b = parse_boundary(source) if isinstance(source, str) else source
        bh = boundary_height(b)
        if not bh.valid:
            raise NotTileable("boundary height walk does not close up")
        sub = build_subdivision(b)
        graph = build_graph(b, sub)
        g, bad = compute_gmax(graph, bh)
        if bad is not None:
            raise NotTileable(
                f"sites {bad.x} and {bad.y} have height gap {bad.gy - bad.gx}, "
                f"bounds are -{bad.alpha_yx}..{bad.alpha_xy}")
        self.b = b
        self.sub = sub
        self._base: Dict[Point, int] = g
        self._base_v: Dict[int, List[int]] = {}
        self._base_u: Dict[int, List[int]] = {}
        for x, y in g:
            self._base_v.setdefault(x - y, []).append(x)
            self._base_u.setdefault(x + y, []).append(x)
        for arr in self._base_v.values():
            arr.sort()
        for arr in self._base_u.values():
            arr.sort()
        self.reset()

    def reset(self) -> None:
        """Drop all refinement state accumulated by queries."""
        self._values: Dict[Point, int] = dict(self._base)
        self._over_v: Dict[int, List[int]] = {}
        self._over_u: Dict[int, List[int]] = {}
        self._split: Set[Box] = set()
        self.stats = {"height_queries": 0, "domino_queries": 0,
                      "points_added": 0, "boxes_split": 0,
                      "valuations": 0, "last_rounds": 0,
                      "last_valuations": 0}

    # -- queries ------------------------------------------------------------

    def height_at(self, w: Point) -> int:
        """Value of the maximum height function at a vertex of the closed
        region."""
        self.stats["height_queries"] += 1
        w = (w[0], w[1])
        if w not in self._values:
            if not self.b.vertex_in_closure(w):
                raise OutsideRegion(f"vertex {w} is not on a region cell")
            before = self.stats["valuations"]
            self.stats["last_rounds"] = self._refine_to(w)
            self.stats["last_valuations"] = self.stats["valuations"] - before
        return self._values[w]

    def domino_at(self, cell: Point) -> DominoPlacement:
        """The domino covering ``cell`` in the maximum tiling."""
        self.stats["domino_queries"] += 1
        cx, cy = cell
        if not self.b.contains_cell((cx, cy)):
            raise OutsideRegion(f"cell {cell} is not in the region")
        sw = self.height_at((cx, cy))
        se = self.height_at((cx + 1, cy))
        nw = self.height_at((cx, cy + 1))
        ne = self.height_at((cx + 1, cy + 1))
        partners = []
        if abs(se - sw) == 3:
            partners.append((cx, cy - 1))
        if abs(ne - nw) == 3:
            partners.append((cx, cy + 1))
        if abs(nw - sw) == 3:
            partners.append((cx - 1, cy))
        if abs(ne - se) == 3:
            partners.append((cx + 1, cy))
        if len(partners) != 1:
            raise InternalInconsistency(
                f"cell {cell} has {len(partners)} crossed sides")
        other = partners[0]
        orient = "H" if other[1] == cy else "V"
        return DominoPlacement((cx, cy), other, orient)

    # -- refinement ---------------------------------------------------------

    def _line_v(self, v: int) -> Sequence[int]:
        arr = self._over_v.get(v)
        return arr if arr is not None else self._base_v.get(v, ())

    def _line_u(self, u: int) -> Sequence[int]:
        arr = self._over_u.get(u)
        return arr if arr is not None else self._base_u.get(u, ())

    def _register(self, w: Point, value: int) -> None:
        self._values[w] = value
        x, y = w
        for over, base, line in ((self._over_v, self._base_v, x - y),
                                 (self._over_u, self._base_u, x + y)):
            if line not in over:
                over[line] = list(base.get(line, ()))
            insort(over[line], x)
        self.stats["points_added"] += 1

    def _value_point(self, w: Point) -> int:
        """Minimum over the nearest valued point in each diagonal
        direction, plus any valued axis neighbour.  Candidate segments
        stay inside the region (any boundary vertex on a diagonal would
        itself be a valued site; axis edges of an interior vertex border
        region cells), so each candidate bounds the height from above and
        the axis neighbours of a square centre make the bound tight."""
        self.stats["valuations"] += 1
        x, y = w
        best = None
        for arr, other in ((self._line_v(x - y), lambda c: c - (x - y)),
                           (self._line_u(x + y), lambda c: (x + y) - c)):
            i = bisect_right(arr, x)
            if i < len(arr):
                c = arr[i]
                cand = self._values[(c, other(c))] + 2 * (c - x)
                if best is None or cand < best:
                    best = cand
            i = bisect_left(arr, x) - 1
            if i >= 0:
                c = arr[i]
                cand = self._values[(c, other(c))] + 2 * (x - c)
                if best is None or cand < best:
                    best = cand
        for n in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            hn = self._values.get(n)
            if hn is not None:
                cand = hn + alpha(n, w)
                if best is None or cand < best:
                    best = cand
        if best is None:
            raise InternalInconsistency(f"no valued neighbours for {w}")
        return best

    def _locate_boxes(self, w: Point) -> List[Box]:
        """Inside squares of the static subdivision whose closure holds w."""
        u, v = w[0] + w[1], w[0] - w[1]
        sub = self.sub
        out = []
        for level in range(1, sub.t + 1):
            s = sub.side(level)
            offu, offv = u - sub.U0, v - sub.V0
            kus = [offu // s] + ([offu // s - 1] if offu % s == 0 else [])
            kvs = [offv // s] + ([offv // s - 1] if offv % s == 0 else [])
            for a in kus:
                for c in kvs:
                    if sub.classes[level].get((a, c)):
                        out.append((sub.U0 + a * s, sub.V0 + c * s, s))
        return out

    def _refine_to(self, w: Point) -> int:
        u, v = w[0] + w[1], w[0] - w[1]
        boxes = self._locate_boxes(w)
        rounds = 0
        while w not in self._values:
            if not boxes:
                raise InternalInconsistency(f"refinement exhausted before valuing {w}")
            rounds += 1
            nxt: List[Box] = []
            for box in boxes:
                if box not in self._split:
                    self._split_box(box)
                umin, vmin, s = box
                if s > 2:
                    h = s // 2
                    for cu in (umin, umin + h):
                        for cv in (vmin, vmin + h):
                            if cu <= u <= cu + h and cv <= v <= cv + h:
                                nxt.append((cu, cv, h))
            boxes = nxt
        return rounds

    def _split_box(self, box: Box) -> None:
        umin, vmin, s = box
        if s > 2:
            h = s // 2
            uv_pts = ((umin + h, vmin), (umin, vmin + h), (umin + s, vmin + h),
                      (umin + h, vmin + s), (umin + h, vmin + h))
        else:
            uv_pts = ((umin + 1, vmin + 1),)
        pts = []
        for pu, pv in uv_pts:
            pt = ((pu + pv) // 2, (pu - pv) // 2)
            if pt not in self._values:
                pts.append(pt)
        for pt in pts:
            self._register(pt, self._value_point(pt))
        # The batch is valued in a fixed order; settle mutual influence.
        changed = True
        while changed:
            changed = False
            for pt in pts:
                nv = self._value_point(pt)
                if nv < self._values[pt]:
                    self._values[pt] = nv
                    changed = True
        self._split.add(box)
        self.stats["boxes_split"] += 1
