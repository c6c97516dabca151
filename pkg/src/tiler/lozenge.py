"""Lozenge tileability on the triangular grid.

Vertices are points a*v1 + b*v2 + c*v3 for the three unit directions
v1, v2, v3 at 120 degrees apart (v1 + v2 + v3 = 0).  Since adding
(1, 1, 1) does not move the point, each vertex is stored uniquely as the
triple (a, b, c) of nonnegative integers with min{a, b, c} = 0; see
``tri_point`` and ``tri_axial`` for conversion from and to the axial
pair (q, r) = q*v1 + r*v2 used internally for face bookkeeping.

Vertices are 3-colored by (a + b + c) mod 3; every edge changes the
color.  A lozenge tiling induces integer heights on the vertices of the
region: stepping along an edge that advances the color cycle changes the
height by +1 when the edge lies on a lozenge edge and by -2 when a
lozenge covers it, and the reverse signs hold against the cycle.  The
maximal plane height vanishing at x is ``tri_alpha(x, y)``: the
coordinate sum of y - x in canonical form.

The decision pipeline mirrors the square-lattice one: walk the boundary
heights, cover the region by a quadtree of upward and downward
lattice-aligned triangles whose side halves until it clears the
boundary, take the piece corners plus the boundary as sites, join
consecutive sites along the three line families, and relax the maximal
height over that graph, reporting the first violated pair.  Degrees are
at most six (two per family).

The second half of the file holds the brute-force counterparts used by
the tests: a shortest-path alpha oracle, geodesic enumeration, a
perfect-matching decider on the up/down triangle graph, and polyiamond
enumeration and random generation.
"""

from __future__ import annotations

import heapq
from bisect import bisect_right
from enum import IntEnum
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from tiler.errors import (CapExceeded, EmptyInterior, InternalInconsistency,
                          NotClosed, RadiusExceeded, SelfIntersecting)
from tiler.approxgraph import ApproxGraph
from tiler.solver import TileabilityVerdict, compute_gmax

TriPoint = Tuple[int, int, int]
Axial = Tuple[int, int]
Face = Tuple[int, int, bool]  # axial anchor q, anchor r, points-up

STEPS: Dict[int, Axial] = {1: (1, 0), 2: (0, 1), 3: (-1, -1),
                           -1: (-1, 0), -2: (0, -1), -3: (1, 1)}
TOKENS = {v: k for k, v in STEPS.items()}


class TriColor(IntEnum):
    BLACK = 0
    RED = 1
    BLUE = 2


def tri_point(q: int, r: int) -> TriPoint:
    """Normalized vertex for the axial combination q*v1 + r*v2."""
    m = min(q, r, 0)
    return (q - m, r - m, -m)


def tri_axial(p: TriPoint) -> Axial:
    return (p[0] - p[2], p[1] - p[2])


def tri_color(p: TriPoint) -> TriColor:
    return TriColor((p[0] + p[1] + p[2]) % 3)


def tri_alpha(x: TriPoint, y: TriPoint) -> int:
    """Coordinate sum of y - x in canonical form: the maximum height of
    y over plane height functions vanishing at x."""
    da, db, dc = y[0] - x[0], y[1] - x[1], y[2] - x[2]
    return da + db + dc - 3 * min(da, db, dc)


def _step_sign(u: TriPoint, w: TriPoint) -> int:
    """Height change along the boundary edge u -> w: +1 when the edge
    advances the color cycle, else -1."""
    return 1 if (sum(w) - sum(u)) % 3 == 1 else -1


def face_corners(f: Face) -> Tuple[Axial, Axial, Axial]:
    q, r, up = f
    if up:
        return ((q, r), (q + 1, r), (q + 1, r + 1))
    return ((q, r), (q + 1, r + 1), (q, r + 1))


def face_neighbors(f: Face) -> Tuple[Face, Face, Face]:
    q, r, up = f
    if up:
        return ((q, r, False), (q + 1, r, False), (q, r - 1, False))
    return ((q, r, True), (q - 1, r, True), (q, r + 1, True))


class LozengeBoundary:
    """Simple closed walk on the triangular grid, region on the left."""

    __slots__ = ("moves", "vertices", "vertex_set", "n", "_averts", "_seps")

    def __init__(self, moves: Tuple[int, ...], averts: List[Axial], n: int):
        self.moves = moves
        self._averts = averts
        self.vertices = [tri_point(q, r) for q, r in averts]
        self.vertex_set = set(self.vertices)
        self.n = n
        # Boundary edges cut the horizontal strips of faces; within strip r
        # the faces in scan order are ..., D(q,r), U(q,r), D(q+1,r), ...
        # at positions 2q and 2q+1, and a cut between positions pos-1 and
        # pos is recorded as pos.  Parity of the cuts left of a face gives
        # region membership.
        seps: Dict[int, List[int]] = {}
        for u, w in zip(averts, averts[1:] + averts[:1]):
            d = (w[0] - u[0], w[1] - u[1])
            if d == (0, 1):
                seps.setdefault(u[1], []).append(2 * u[0])
            elif d == (0, -1):
                seps.setdefault(w[1], []).append(2 * w[0])
            elif d == (1, 1):
                seps.setdefault(u[1], []).append(2 * u[0] + 1)
            elif d == (-1, -1):
                seps.setdefault(w[1], []).append(2 * w[0] + 1)
        for arr in seps.values():
            arr.sort()
            if len(arr) % 2:
                raise InternalInconsistency("odd number of strip cuts")
        self._seps = seps

    @property
    def p(self) -> int:
        return len(self.moves)

    @property
    def word(self) -> str:
        return ",".join(str(t) for t in self.moves)

    def face_inside(self, f: Face) -> bool:
        arr = self._seps.get(f[1])
        if not arr:
            return False
        return bisect_right(arr, 2 * f[0] + (1 if f[2] else 0)) % 2 == 1

    def faces(self) -> Iterator[Face]:
        for r, arr in sorted(self._seps.items()):
            for k in range(0, len(arr), 2):
                for pos in range(arr[k], arr[k + 1]):
                    yield (pos // 2, r, pos % 2 == 1)

    def vertex_in_closure(self, v: TriPoint) -> bool:
        if v in self.vertex_set:
            return True
        q, r = tri_axial(v)
        return any(self.face_inside(f) for f in (
            (q, r, True), (q - 1, r, True), (q - 1, r - 1, True),
            (q, r, False), (q - 1, r - 1, False), (q, r - 1, False)))

    def edge_in_region(self, u: TriPoint, w: TriPoint) -> bool:
        """Whether the unit edge borders at least one region face."""
        ua, wa = tri_axial(u), tri_axial(w)
        d = (wa[0] - ua[0], wa[1] - ua[1])
        if d not in ((1, 0), (0, 1), (1, 1)):
            ua, d = wa, (-d[0], -d[1])
        q, r = ua
        if d == (1, 0):
            flanks = ((q, r, True), (q, r - 1, False))
        elif d == (0, 1):
            flanks = ((q - 1, r, True), (q, r, False))
        else:
            flanks = ((q, r, True), (q, r, False))
        return any(self.face_inside(f) for f in flanks)


def parse_lozenge(text: str) -> LozengeBoundary:
    """Parse a comma-separated walk over the six unit directions
    1, 2, 3, -1, -2, -3 (for +-v1, +-v2, +-v3).  A clockwise walk is
    reversed; bad tokens raise ``ValueError`` with the token index as
    ``args[1]``."""
    raw = [t.strip() for t in text.split(",")]
    moves: List[int] = []
    for i, tok in enumerate(raw):
        try:
            step = int(tok)
        except ValueError:
            raise ValueError(f"invalid move {tok!r} at index {i}", i) from None
        if step not in STEPS:
            raise ValueError(f"invalid move {tok!r} at index {i}", i)
        moves.append(step)
    if not moves:
        raise NotClosed("empty boundary word")

    def walk(seq: Sequence[int]) -> List[Axial]:
        verts: List[Axial] = [(0, 0)]
        for t in seq:
            dq, dr = STEPS[t]
            q, r = verts[-1]
            verts.append((q + dq, r + dr))
        return verts

    verts = walk(moves)
    if verts[-1] != (0, 0):
        raise NotClosed(f"walk ends at {verts[-1]}, not at the origin")
    verts.pop()
    count = sum(q1 * r2 - q2 * r1 for (q1, r1), (q2, r2)
                in zip(verts, verts[1:] + verts[:1]))
    if count == 0:
        raise EmptyInterior("boundary encloses no area")
    if count < 0:
        moves = [-t for t in reversed(moves)]
        verts = walk(moves)
        verts.pop()
        count = -count
    seen: Set[Axial] = set()
    for v in verts:
        if v in seen:
            raise SelfIntersecting(f"vertex {v} visited twice")
        seen.add(v)
    return LozengeBoundary(tuple(moves), verts, count)


class LozengeHeight:
    """Heights along the boundary walk, anchored at 0 on the first
    vertex; ``valid`` is False when the forced increments fail to close."""

    __slots__ = ("heights", "valid")

    def __init__(self, heights: Dict[TriPoint, int], valid: bool):
        self.heights = heights
        self.valid = valid

    def __getitem__(self, v: TriPoint) -> int:
        return self.heights[v]


def lozenge_boundary_height(b: LozengeBoundary) -> LozengeHeight:
    h: Dict[TriPoint, int] = {}
    cur = 0
    for u, w in zip(b.vertices, b.vertices[1:] + b.vertices[:1]):
        h[u] = cur
        cur += _step_sign(u, w)
    return LozengeHeight(h, cur == 0)


# ---------------------------------------------------------------------------
# Subdivision into lattice-aligned triangles.

Piece = Tuple[int, int, int, bool]  # axial anchor q, anchor r, side, points-up


class TriSubdivision:
    __slots__ = ("Q0", "R0", "N", "t", "pieces")

    def __init__(self, Q0: int, R0: int, N: int, t: int, pieces: List[Piece]):
        self.Q0 = Q0
        self.R0 = R0
        self.N = N
        self.t = t
        self.pieces = pieces


def _piece_corners(piece: Piece) -> Tuple[Axial, Axial, Axial]:
    a, b, s, up = piece
    if up:
        return ((a, b), (a + s, b), (a + s, b + s))
    return ((a, b), (a + s, b + s), (a, b + s))


def build_tri_subdivision(b: LozengeBoundary) -> TriSubdivision:
    """Quadtree cover rooted at one big upward triangle.

    An upward triangle splits into three upward corners and a central
    downward one, and vice versa.  A triangle is crossed when a boundary
    vertex lies in its closure (a unit edge cannot enter a lattice
    triangle without an endpoint in it); crossed triangles split, their
    untouched children are kept when their anchor face is in the region,
    and at unit side the crossed faces themselves are kept when inside.
    """
    averts = b._averts
    R0 = min(r for _, r in averts) - 1
    Q0 = min(q - r for q, r in averts) - 1 + R0
    need = max(q for q, _ in averts) + 1 - Q0
    N = 2
    while N < need:
        N *= 2
    t = N.bit_length() - 1

    def containing(level: int, w: Axial) -> List[Tuple[bool, int, int]]:
        s = N >> level
        n = 1 << level
        x, y = w[0] - Q0, w[1] - R0
        out = []
        for i in (x // s - 1, x // s):
            if not 0 <= i < n:
                continue
            for j in (y // s - 1, y // s):
                if not 0 <= j < n:
                    continue
                if (j <= i and y >= j * s and x <= (i + 1) * s
                        and x - y >= (i - j) * s):
                    out.append((True, Q0 + i * s, R0 + j * s))
                if (j <= i - 1 and x >= i * s and y <= (j + 1) * s
                        and x - y <= (i - j) * s):
                    out.append((False, Q0 + i * s, R0 + j * s))
        return out

    crossed: List[Set[Tuple[bool, int, int]]] = [set() for _ in range(t + 1)]
    for w in averts:
        for level in range(t + 1):
            crossed[level].update(containing(level, w))
    if (True, Q0, R0) not in crossed[0]:
        raise InternalInconsistency("root triangle misses the boundary")

    pieces: List[Piece] = []
    for level in range(1, t + 1):
        h = N >> level
        for up, a, c in crossed[level - 1]:
            if up:
                kids = ((True, a, c), (True, a + h, c), (True, a + h, c + h),
                        (False, a + h, c))
            else:
                kids = ((False, a, c), (False, a + h, c + h),
                        (False, a, c + h), (True, a, c + h))
            for kid in kids:
                if kid in crossed[level]:
                    continue
                if b.face_inside((kid[1], kid[2], kid[0])):
                    pieces.append((kid[1], kid[2], h, kid[0]))
    for up, a, c in crossed[t]:
        if b.face_inside((a, c, up)):
            pieces.append((a, c, 1, up))
    pieces.sort()
    return TriSubdivision(Q0, R0, N, t, pieces)


def build_tri_graph(b: LozengeBoundary, sub: TriSubdivision) -> ApproxGraph:
    """Sites joined along the three line families.

    Lattice lines only meet the boundary at vertices, and every boundary
    vertex on a line is a site, so the open segment between consecutive
    sites lies on one side throughout.  An endpoint that is not a
    boundary vertex is strictly interior and settles the side; when both
    endpoints sit on the boundary the first unit step decides it via the
    flanking-face test.
    """
    site_set: Set[Axial] = set(b._averts)
    for piece in sub.pieces:
        site_set.update(_piece_corners(piece))
    sites = sorted(site_set)

    lines_a: Dict[int, List[Axial]] = {}
    lines_b: Dict[int, List[Axial]] = {}
    lines_c: Dict[int, List[Axial]] = {}
    for w in sites:
        q, r = w
        lines_a.setdefault(r, []).append(w)
        lines_b.setdefault(q, []).append(w)
        lines_c.setdefault(q - r, []).append(w)

    bvs = set(b._averts)
    norm = {w: tri_point(*w) for w in sites}
    adj: Dict[Axial, Set[Axial]] = {w: set() for w in sites}
    for lines, coord, step in ((lines_a, lambda w: w[0], (1, 0)),
                               (lines_b, lambda w: w[1], (0, 1)),
                               (lines_c, lambda w: w[0], (1, 1))):
        for pts in lines.values():
            pts.sort(key=coord)
            for w1, w2 in zip(pts, pts[1:]):
                if w1 in bvs and w2 in bvs:
                    first = tri_point(w1[0] + step[0], w1[1] + step[1])
                    if not b.edge_in_region(norm[w1], first):
                        continue
                adj[w1].add(w2)
                adj[w2].add(w1)

    for w, nb in adj.items():
        if len(nb) > 6:
            raise InternalInconsistency(
                f"site {w} has {len(nb)} neighbours, bound is 6")
    edge_count = sum(len(nb) for nb in adj.values()) // 2
    return ApproxGraph(sorted(norm.values()),
                       {norm[w]: tuple(sorted(norm[v] for v in nb))
                        for w, nb in adj.items()},
                       edge_count, set(b.vertex_set))


def decide_lozenge(source) -> TileabilityVerdict:
    b = parse_lozenge(source) if isinstance(source, str) else source
    lh = lozenge_boundary_height(b)
    if not lh.valid:
        return TileabilityVerdict(False, "unbalanced-boundary", None,
                                  b.p, b.n, 0, 0)
    sub = build_tri_subdivision(b)
    graph = build_tri_graph(b, sub)
    g, bad = compute_gmax(graph, lh, metric=tri_alpha)
    if bad is not None:
        return TileabilityVerdict(False, "bad-pair", bad,
                                  b.p, b.n, len(graph.sites), graph.edge_count)
    return TileabilityVerdict(True, "ok", None,
                              b.p, b.n, len(graph.sites), graph.edge_count,
                              heights=g)


# ---------------------------------------------------------------------------
# Brute-force counterparts.

def tri_alpha_oracle(x: TriPoint, y: TriPoint) -> int:
    """Shortest path from x to y with per-edge maximal height steps
    (+1 along the color cycle, +2 against it), on a box wide enough that
    restriction cannot matter."""
    xa, ya = tri_axial(x), tri_axial(y)
    rad = max(abs(ya[0] - xa[0]), abs(ya[1] - xa[1]))
    if rad > 16:
        raise RadiusExceeded(f"offset {rad} exceeds supported radius 16")
    m = 3 * rad + 4
    dist = {xa: 0}
    heap = [(0, xa)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist.get(u, 1 << 30):
            continue
        if u == ya:
            return d
        for dq, dr in STEPS.values():
            v = (u[0] + dq, u[1] + dr)
            if abs(v[0] - xa[0]) > m or abs(v[1] - xa[1]) > m:
                continue
            nd = d + (1 if (dq + dr) % 3 == 1 else 2)
            if nd < dist.get(v, 1 << 30):
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    raise InternalInconsistency("target not reached")  # pragma: no cover


class TriGeodesicRegion:
    """Union of the geodesic paths from x to y: the parallelogram (or
    segment, or point) spanned by the at most two unit directions of the
    canonical form of y - x."""

    __slots__ = ("x", "y", "counts")

    def __init__(self, x: TriPoint, y: TriPoint):
        self.x = x
        self.y = y
        d = (y[0] - x[0], y[1] - x[1], y[2] - x[2])
        m = min(d)
        self.counts = (d[0] - m, d[1] - m, d[2] - m)

    def contains(self, z: TriPoint) -> bool:
        return tri_alpha(self.x, z) + tri_alpha(z, self.y) == tri_alpha(self.x, self.y)

    def points(self) -> Set[TriPoint]:
        used = [(i, cnt) for i, cnt in enumerate(self.counts) if cnt > 0]
        if not used:
            return {self.x}

        def shift(i: int, k: int, j: int, l: int) -> TriPoint:
            v = list(self.x)
            v[i] += k
            v[j] += l
            m = min(v)
            return (v[0] - m, v[1] - m, v[2] - m)

        if len(used) == 1:
            (i, cnt), = used
            return {shift(i, k, i, 0) for k in range(cnt + 1)}
        (i, c1), (j, c2) = used
        return {shift(i, k, j, l)
                for k in range(c1 + 1) for l in range(c2 + 1)}


def tri_geodesic_region(x: TriPoint, y: TriPoint) -> TriGeodesicRegion:
    return TriGeodesicRegion(x, y)


def tri_geodesic_points_brute(x: TriPoint, y: TriPoint) -> Set[TriPoint]:
    """Vertices of all geodesic paths from x to y, by path enumeration.
    A path step adds one of v1, v2, v3 and must increase the distance
    from x by one."""
    total = tri_alpha(x, y)
    out: Set[TriPoint] = set()

    def go(cur: TriPoint, dist: int, trail: List[TriPoint]) -> None:
        if cur == y and dist == total:
            out.update(trail)
            return
        if dist >= total:
            return
        for i in range(3):
            v = list(cur)
            v[i] += 1
            m = min(v)
            nxt = (v[0] - m, v[1] - m, v[2] - m)
            if tri_alpha(x, nxt) == dist + 1:
                trail.append(nxt)
                go(nxt, dist + 1, trail)
                trail.pop()

    go(x, 0, [x])
    return out


def lozenge_matching_decide(b: LozengeBoundary, cap: Optional[int] = None,
                            ) -> Optional[List[Tuple[Face, Face]]]:
    """Perfect matching between upward and downward unit triangles; a
    matching is a lozenge tiling and is returned, otherwise None."""
    from tiler.reference import _cap, _hopcroft_karp
    limit = _cap(cap if cap is not None else 10 ** 5)
    if b.n > limit:
        raise CapExceeded(f"region has {b.n} triangles, cap is {limit}")
    if b.n % 2 != 0:
        return None
    faces = sorted(b.faces())
    face_set = set(faces)
    ups = [f for f in faces if f[2]]
    downs = [f for f in faces if not f[2]]
    if len(ups) != len(downs):
        return None
    down_index = {f: i for i, f in enumerate(downs)}
    adj = [sorted(down_index[g] for g in face_neighbors(f) if g in face_set)
           for f in ups]
    match_up = _hopcroft_karp(len(ups), len(downs), adj)
    if any(m < 0 for m in match_up):
        return None
    return [(f, downs[m]) for f, m in zip(ups, match_up)]


def faces_to_lozenge_word(faces: Set[Face]) -> str:
    """Boundary word of a face set, region kept on the left of travel."""
    succ: Dict[Axial, Axial] = {}

    def put(tail: Axial, head: Axial) -> None:
        assert tail not in succ, f"pinched boundary at {tail}"
        succ[tail] = head

    for f in faces:
        corners = face_corners(f)
        for (tail, head), other in zip(
                ((corners[0], corners[1]), (corners[1], corners[2]),
                 (corners[2], corners[0])),
                _across(f)):
            if other not in faces:
                put(tail, head)

    start = min(succ)
    word = []
    v = start
    steps = 0
    while True:
        w = succ[v]
        word.append(str(TOKENS[(w[0] - v[0], w[1] - v[1])]))
        v = w
        steps += 1
        if v == start:
            break
        assert steps <= len(succ), "boundary walk does not close"
    assert steps == len(succ), "boundary has more than one component"
    return ",".join(word)


def _across(f: Face) -> Tuple[Face, Face, Face]:
    """Neighbours of a face in the order of its directed corner edges."""
    q, r, up = f
    if up:
        return ((q, r - 1, False), (q + 1, r, False), (q, r, False))
    return ((q, r, True), (q, r + 1, True), (q - 1, r, True))


def _tri_has_hole(faces: Set[Face]) -> bool:
    qs = [f[0] for f in faces]
    rs = [f[1] for f in faces]
    qlo, qhi = min(qs) - 1, max(qs) + 1
    rlo, rhi = min(rs) - 1, max(rs) + 1
    outside: Set[Face] = set()
    stack: List[Face] = [(qlo, rlo, False)]
    while stack:
        f = stack.pop()
        if f in outside:
            continue
        outside.add(f)
        for g in face_neighbors(f):
            if (qlo <= g[0] <= qhi and rlo <= g[1] <= rhi
                    and g not in faces and g not in outside):
                stack.append(g)
    total = 2 * (qhi - qlo + 1) * (rhi - rlo + 1)
    return len(outside) + len(faces) != total


def enumerate_lozenge_regions(max_triangles: int) -> Iterator[LozengeBoundary]:
    """All fixed hole-free polyiamonds up to the given size, each once,
    as parsed boundaries.  Shapes are rooted at their scan-order minimal
    face, which may point either way, hence the two passes."""

    def key(f: Face) -> Tuple[int, int]:
        return (f[1], 2 * f[0] + (1 if f[2] else 0))

    def run(root: Face) -> Iterator[LozengeBoundary]:
        rkey = key(root)
        poly: List[Face] = []

        def emit() -> Optional[LozengeBoundary]:
            faces = set(poly)
            if _tri_has_hole(faces):
                return None
            return parse_lozenge(faces_to_lozenge_word(faces))

        def grow(untried: List[Face], seen: Set[Face]) -> Iterator[LozengeBoundary]:
            for i, f in enumerate(untried):
                poly.append(f)
                region = emit()
                if region is not None:
                    yield region
                if len(poly) < max_triangles:
                    new = []
                    for g in face_neighbors(f):
                        if g in seen or key(g) < rkey:
                            continue
                        new.append(g)
                    yield from grow(untried[i + 1:] + new, seen | set(new))
                poly.pop()

        yield from grow([root], {root})

    yield from run((0, 0, False))
    yield from run((0, 0, True))


def _tri_fill_and_unpinch(faces: Set[Face]) -> Set[Face]:
    """Close holes and absorb pinch vertices until the set is clean."""
    faces = set(faces)
    while True:
        changed = False
        qs = [f[0] for f in faces]
        rs = [f[1] for f in faces]
        qlo, qhi = min(qs) - 1, max(qs) + 1
        rlo, rhi = min(rs) - 1, max(rs) + 1
        outside: Set[Face] = set()
        stack: List[Face] = [(qlo, rlo, False)]
        while stack:
            f = stack.pop()
            if f in outside:
                continue
            outside.add(f)
            for g in face_neighbors(f):
                if (qlo <= g[0] <= qhi and rlo <= g[1] <= rhi
                        and g not in faces and g not in outside):
                    stack.append(g)
        for q in range(qlo, qhi + 1):
            for r in range(rlo, rhi + 1):
                for up in (False, True):
                    f = (q, r, up)
                    if f not in faces and f not in outside:
                        faces.add(f)
                        changed = True
        # A pinch vertex has its six surrounding faces split into more
        # than one arc of region faces; absorb the whole ring.
        verts = {c for f in faces for c in face_corners(f)}
        for q, r in sorted(verts):
            ring = ((q, r, True), (q, r, False), (q - 1, r, True),
                    (q - 1, r - 1, False), (q - 1, r - 1, True),
                    (q, r - 1, False))
            ins = [f in faces for f in ring]
            arcs = sum(1 for a, bb in zip(ins, ins[1:] + ins[:1])
                       if a and not bb)
            if arcs > 1:
                for f in ring:
                    if f not in faces:
                        faces.add(f)
                        changed = True
        if not changed:
            return faces


def random_lozenge_region(rng, target_triangles: int) -> LozengeBoundary:
    """Random simply connected triangular region of very roughly the
    target size, grown face by face and then repaired."""
    faces: Set[Face] = {(0, 0, True)}
    frontier: List[Face] = list(face_neighbors((0, 0, True)))
    while len(faces) < target_triangles:
        i = rng.randrange(len(frontier))
        f = frontier[i]
        frontier[i] = frontier[-1]
        frontier.pop()
        if f in faces:
            continue
        faces.add(f)
        for g in face_neighbors(f):
            if g not in faces:
                frontier.append(g)
    faces = _tri_fill_and_unpinch(faces)
    return parse_lozenge(faces_to_lozenge_word(faces))
