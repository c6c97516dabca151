"""Reference implementations: small, slow, and obviously correct.

Everything here exists to check the fast code against an independent route:
shortest-path distances computed by explicit Dijkstra, tileability by
bipartite matching, maximum height functions by a whole-region shortest-path
sweep, and exhaustive or randomised region generators to feed them.  All of
it scales with the area of the region, not the perimeter, and several
entry points enforce a cell cap (override with the TILER_CAP environment
variable) so a typo cannot freeze a test run.
"""

from __future__ import annotations

import heapq
import os
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np

from tiler.errors import CapExceeded, RadiusExceeded
from tiler.lattice import Point, alpha, cheb, edge_max_delta, edge_step
from tiler.region import RegionBoundary, boundary_height, parse_boundary

Domino = Tuple[Point, Point]
Tiling = Set[Domino]

_AXIS = ((1, 0), (-1, 0), (0, 1), (0, -1))
_KING = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1))


def _cap(default: int) -> int:
    value = os.environ.get("TILER_CAP")
    return int(value) if value else default


def domino(a: Point, b: Point) -> Domino:
    """Canonical form of a domino: its two cells in sorted order."""
    return (a, b) if a <= b else (b, a)


# ---------------------------------------------------------------------------
# Distances in the unconstrained plane.


def alpha_oracle(x: Point, y: Point) -> int:
    """Largest admissible height difference h(y) - h(x) over the full plane.

    Computed as an explicit shortest path over grid edges weighted by the
    maximum height increase each edge permits.  Exact, but costs area of a
    box around the pair, so it refuses distant arguments.
    """
    r = cheb(x, y)
    if r > 16:
        raise RadiusExceeded(f"alpha_oracle limited to Chebyshev radius 16, got {r}")
    if r == 0:
        return 0
    # Edge weights are at least 1, and a staircase walk shows the distance
    # is at most 2r + 1, so no shortest path leaves this box.
    lo_x, hi_x = x[0] - 3 * r - 4, x[0] + 3 * r + 4
    lo_y, hi_y = x[1] - 3 * r - 4, x[1] + 3 * r + 4
    dist: Dict[Point, int] = {}
    heap: List[Tuple[int, Point]] = [(0, x)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in dist:
            continue
        dist[u] = d
        if u == y:
            return d
        for dx, dy in _AXIS:
            v = (u[0] + dx, u[1] + dy)
            if v in dist or not (lo_x <= v[0] <= hi_x and lo_y <= v[1] <= hi_y):
                continue
            heapq.heappush(heap, (d + edge_max_delta(u, v), v))
    raise AssertionError("target not reached inside the search box")


def geodesic_points_brute(x: Point, y: Point) -> Set[Point]:
    """Every lattice point on some minimum-length king walk from x to y.

    Direct depth-first enumeration of the walks themselves; intended for
    small radii only.
    """
    points: Set[Point] = {x}
    path: List[Point] = [x]

    def extend(z: Point) -> None:
        if z == y:
            points.update(path)
            return
        left = cheb(z, y)
        for dx, dy in _KING:
            w = (z[0] + dx, z[1] + dy)
            if cheb(w, y) == left - 1:
                path.append(w)
                extend(w)
                path.pop()

    extend(x)
    return points


# ---------------------------------------------------------------------------
# Valid pairs, by brute force.


def _step_in_region(b: RegionBoundary, z: Point, d: Point) -> bool:
    """Whether the king step z -> z + d stays strongly inside the region.

    An axis step needs at least one of the two cells flanking the traversed
    edge; a diagonal step needs the cell it cuts through.
    """
    zx, zy = z
    dx, dy = d
    if dx == 0:
        cy = zy if dy > 0 else zy - 1
        return b.contains_cell((zx - 1, cy)) or b.contains_cell((zx, cy))
    if dy == 0:
        cx = zx if dx > 0 else zx - 1
        return b.contains_cell((cx, zy - 1)) or b.contains_cell((cx, zy))
    return b.contains_cell((zx if dx > 0 else zx - 1, zy if dy > 0 else zy - 1))


def pair_connected_brute(b: RegionBoundary, sites: Set[Point], x: Point, y: Point) -> bool:
    """Whether some king geodesic runs from x to y strongly inside the
    region without touching another site on the way."""
    if x == y:
        return False
    blocked = sites - {x, y}
    memo: Dict[Point, bool] = {}

    def reach(z: Point) -> bool:
        if z == y:
            return True
        if z in memo:
            return memo[z]
        memo[z] = False
        left = cheb(z, y)
        for d in _KING:
            w = (z[0] + d[0], z[1] + d[1])
            if cheb(w, y) != left - 1 or (w in blocked) or not _step_in_region(b, z, d):
                continue
            if reach(w):
                memo[z] = True
                break
        return memo[z]

    return reach(x)


def valid_pairs_brute(b: RegionBoundary, sites: Sequence[Point]) -> Set[Tuple[Point, Point]]:
    """All ordered site pairs joined by a clean geodesic (both directions)."""
    out: Set[Tuple[Point, Point]] = set()
    site_set = set(sites)
    ordered = sorted(site_set)
    for i, x in enumerate(ordered):
        for y in ordered[i + 1:]:
            if pair_connected_brute(b, site_set, x, y):
                out.add((x, y))
                out.add((y, x))
    return out


def pairs_condition_decide(b: RegionBoundary) -> bool:
    """Tileability via the boundary pair condition, checked by brute force.

    The region is tileable iff the boundary heights close up and every
    geodesically linked pair of boundary vertices satisfies
    h(y) - h(x) <= alpha(x, y).  Quadratic in the perimeter and worse,
    so only for cross-checks on small regions.
    """
    bh = boundary_height(b)
    if not bh.valid:
        return False
    for x, y in valid_pairs_brute(b, b.vertices):
        if bh[y] - bh[x] > alpha(x, y):
            return False
    return True


# ---------------------------------------------------------------------------
# Whole-region maximum height function.


class ThurstonResult:
    """Outcome of the area-scaling decision: verdict plus, when requested
    and tileable, the maximum height function on every vertex."""

    __slots__ = ("tileable", "heights", "n")

    def __init__(self, tileable: bool, heights: Optional[Dict[Point, int]], n: int):
        self.tileable = tileable
        self.heights = heights
        self.n = n


def _region_vertex_arrays(b: RegionBoundary):
    cells = np.array(list(b.cells()), dtype=np.int64)
    corner_off = np.array([(0, 0), (1, 0), (0, 1), (1, 1)], dtype=np.int64)
    corners = (cells[:, None, :] + corner_off[None, :, :]).reshape(-1, 2)
    verts = np.unique(corners, axis=0)
    return cells, verts


def thurston_full(b: RegionBoundary, cap: Optional[int] = None, want_heights: bool = True) -> ThurstonResult:
    """Decide tileability by building the maximum height function everywhere.

    Seeds every boundary vertex with its forced height, then relaxes over
    all interior edges (shortest paths from a virtual source).  The region
    is tileable iff the result respects the seeds and every edge difference
    is admissible.  Time and memory scale with the area.
    """
    n = b.area
    limit = _cap(cap if cap is not None else 10 ** 6)
    if n > limit:
        raise CapExceeded(f"region has {n} cells, cap is {limit}")
    bh = boundary_height(b)
    if not bh.valid:
        return ThurstonResult(False, None, n)

    cells, verts = _region_vertex_arrays(b)
    index: Dict[Point, int] = {(int(vx), int(vy)): i for i, (vx, vy) in enumerate(verts)}
    nv = len(verts)

    # Interior edges are exactly the cell sides shared by two cells.  Count
    # each cell's four sides; the duplicated ones are interior.
    side_off = np.array(
        [((0, 0), (1, 0)), ((0, 1), (1, 1)), ((0, 0), (0, 1)), ((1, 0), (1, 1))],
        dtype=np.int64,
    )
    sides = cells[:, None, None, :] + side_off[None, :, :, :]
    sides = sides.reshape(-1, 4)  # rows: tail x, tail y, head x, head y
    interior, counts = np.unique(sides, axis=0, return_counts=True)
    interior = interior[counts == 2]

    tails = interior[:, :2]
    heads = interior[:, 2:]
    # Height step of the uncrossed edge tail -> head; the edge may instead
    # be crossed by a domino, in which case the difference moves 4 the
    # other way.  The maximum increase along tail -> head is therefore
    # 3 when the step is -1, else 1 (and symmetrically in reverse).
    step = np.where((tails[:, 0] + tails[:, 1] + (heads[:, 0] - tails[:, 0])) % 2 == 0, 1, -1)
    w_fwd = np.where(step < 0, 3, 1)
    w_bwd = np.where(-step < 0, 3, 1)

    tail_idx = np.array([index[(int(a), int(c))] for a, c in tails], dtype=np.int64)
    head_idx = np.array([index[(int(a), int(c))] for a, c in heads], dtype=np.int64)

    seeds = [(index[v], bh[v]) for v in b.vertices]
    seed_idx = np.array([i for i, _ in seeds], dtype=np.int64)
    seed_h = np.array([h for _, h in seeds], dtype=np.int64)
    h_min = int(seed_h.min())

    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import dijkstra

    source = nv
    row = np.concatenate([tail_idx, head_idx, np.full(len(seeds), source)])
    col = np.concatenate([head_idx, tail_idx, seed_idx])
    wgt = np.concatenate([w_fwd, w_bwd, seed_h - h_min])
    graph = coo_matrix((wgt, (row, col)), shape=(nv + 1, nv + 1))
    dist = dijkstra(graph, directed=True, indices=source)
    h_full = dist[:nv] + h_min

    assert np.all(np.isfinite(h_full)), "region vertex unreachable from the boundary"
    h_full = h_full.astype(np.int64)
    if not np.array_equal(h_full[seed_idx], seed_h):
        return ThurstonResult(False, None, n)
    diff = h_full[head_idx] - h_full[tail_idx]
    if np.any((diff - step) % 4 != 0):
        return ThurstonResult(False, None, n)

    heights = None
    if want_heights:
        heights = {(int(vx), int(vy)): int(h) for (vx, vy), h in zip(verts, h_full)}
    return ThurstonResult(True, heights, n)


def extract_tiling(b: RegionBoundary, heights: Dict[Point, int]) -> Tiling:
    """Read the tiling off a valid height function.

    Each cell has exactly one side whose height difference is +-3; the
    domino covering the cell crosses that side.
    """
    tiling: Tiling = set()
    for cx, cy in b.cells():
        crossed = []
        sw, se = (cx, cy), (cx + 1, cy)
        nw, ne = (cx, cy + 1), (cx + 1, cy + 1)
        if abs(heights[se] - heights[sw]) == 3:
            crossed.append((cx, cy - 1))
        if abs(heights[ne] - heights[nw]) == 3:
            crossed.append((cx, cy + 1))
        if abs(heights[nw] - heights[sw]) == 3:
            crossed.append((cx - 1, cy))
        if abs(heights[ne] - heights[se]) == 3:
            crossed.append((cx + 1, cy))
        if len(crossed) != 1:
            raise AssertionError(f"cell {(cx, cy)} has {len(crossed)} crossed sides")
        tiling.add(domino((cx, cy), crossed[0]))
    return tiling


def verify_tiling(b: RegionBoundary, tiling: Tiling) -> bool:
    """Exact cover check: every cell in exactly one domino, all cells in R."""
    covered: Set[Point] = set()
    for a, c in tiling:
        if abs(a[0] - c[0]) + abs(a[1] - c[1]) != 1:
            return False
        for cell in (a, c):
            if cell in covered or not b.contains_cell(cell):
                return False
            covered.add(cell)
    return len(covered) == b.area


def height_from_tiling(b: RegionBoundary, tiling: Tiling) -> Dict[Point, int]:
    """Height function induced by a tiling, anchored at h(origin) = 0.

    Walks the vertex graph of the region; every edge contributes its plain
    step unless a domino crosses it, in which case the difference moves by
    4 in the opposite direction.  Inconsistencies (which would mean the
    tiling is broken) raise AssertionError.
    """
    heights: Dict[Point, int] = {(0, 0): 0}
    stack: List[Point] = [(0, 0)]
    in_r = b.contains_cell

    def edge_cells(u: Point, v: Point) -> Tuple[Point, Point]:
        if u[0] == v[0]:  # vertical edge
            y = min(u[1], v[1])
            return (u[0] - 1, y), (u[0], y)
        x = min(u[0], v[0])
        return (x, u[1] - 1), (x, u[1])

    while stack:
        u = stack.pop()
        for d in _AXIS:
            v = (u[0] + d[0], u[1] + d[1])
            c1, c2 = edge_cells(u, v)
            if not (in_r(c1) or in_r(c2)):
                continue
            delta = edge_step(u, v)
            if in_r(c1) and in_r(c2) and domino(c1, c2) in tiling:
                delta -= 4 if delta > 0 else -4
            h = heights[u] + delta
            if v in heights:
                assert heights[v] == h, f"inconsistent heights at {v}"
            else:
                heights[v] = h
                stack.append(v)
    return heights


# ---------------------------------------------------------------------------
# Tileability by bipartite matching.


def matching_decide(b: RegionBoundary, cap: Optional[int] = None) -> Optional[Tiling]:
    """Maximum matching between the two cell colours; a perfect matching is
    a tiling and is returned, otherwise None.  Deterministic."""
    n = b.area
    limit = _cap(cap if cap is not None else 10 ** 5)
    if n > limit:
        raise CapExceeded(f"region has {n} cells, cap is {limit}")
    if n % 2 != 0:
        return None
    cells = sorted(b.cells())
    cell_set = set(cells)
    whites = [c for c in cells if (c[0] + c[1]) % 2 == 0]
    blacks = [c for c in cells if (c[0] + c[1]) % 2 == 1]
    if len(whites) != len(blacks):
        return None
    black_index = {c: i for i, c in enumerate(blacks)}
    adj: List[List[int]] = []
    for w in whites:
        adj.append(sorted(
            black_index[(w[0] + dx, w[1] + dy)]
            for dx, dy in _AXIS
            if (w[0] + dx, w[1] + dy) in cell_set
        ))
    match_w = _hopcroft_karp(len(whites), len(blacks), adj)
    if any(m < 0 for m in match_w):
        return None
    return {domino(w, blacks[m]) for w, m in zip(whites, match_w)}


def _hopcroft_karp(nw: int, nb: int, adj: List[List[int]]) -> List[int]:
    """Maximum bipartite matching; returns the matched black index per
    white vertex, -1 where unmatched."""
    INF = float("inf")
    match_w = [-1] * nw
    match_b = [-1] * nb
    while True:
        # BFS: layer the free white vertices.
        layer = [INF] * nw
        queue = [w for w in range(nw) if match_w[w] < 0]
        for w in queue:
            layer[w] = 0
        found = False
        qi = 0
        while qi < len(queue):
            w = queue[qi]
            qi += 1
            for v in adj[w]:
                w2 = match_b[v]
                if w2 < 0:
                    found = True
                elif layer[w2] == INF:
                    layer[w2] = layer[w] + 1
                    queue.append(w2)
        if not found:
            return match_w

        def dfs(w: int) -> bool:
            for v in adj[w]:
                w2 = match_b[v]
                if w2 < 0 or (layer[w2] == layer[w] + 1 and dfs(w2)):
                    match_w[w] = v
                    match_b[v] = w
                    return True
            layer[w] = INF
            return False

        for w in range(nw):
            if match_w[w] < 0:
                dfs(w)


# ---------------------------------------------------------------------------
# Region generators.


def cells_to_boundary(cells: Set[Point]) -> str:
    """Boundary word of a cell set, region kept on the left of travel.

    Requires the set to be edge-connected with no holes and no pinch
    vertices; any violation surfaces as an AssertionError here or a parse
    error downstream.
    """
    succ: Dict[Point, Point] = {}

    def put(tail: Point, head: Point) -> None:
        assert tail not in succ, f"pinched boundary at {tail}"
        succ[tail] = head

    for a, bb in cells:
        if (a, bb - 1) not in cells:
            put((a, bb), (a + 1, bb))
        if (a + 1, bb) not in cells:
            put((a + 1, bb), (a + 1, bb + 1))
        if (a, bb + 1) not in cells:
            put((a + 1, bb + 1), (a, bb + 1))
        if (a - 1, bb) not in cells:
            put((a, bb + 1), (a, bb))

    start = min(succ)
    word = []
    v = start
    steps = 0
    while True:
        w = succ[v]
        word.append({(1, 0): "R", (-1, 0): "L", (0, 1): "U", (0, -1): "D"}[(w[0] - v[0], w[1] - v[1])])
        v = w
        steps += 1
        if v == start:
            break
        assert steps <= len(succ), "boundary walk does not close"
    assert steps == len(succ), "boundary has more than one component"
    return "".join(word)


def _has_hole(cells: Set[Point]) -> bool:
    xs = [c[0] for c in cells]
    ys = [c[1] for c in cells]
    lo = (min(xs) - 1, min(ys) - 1)
    hi = (max(xs) + 1, max(ys) + 1)
    outside: Set[Point] = set()
    stack = [lo]
    while stack:
        c = stack.pop()
        if c in outside:
            continue
        outside.add(c)
        for dx, dy in _AXIS:
            w = (c[0] + dx, c[1] + dy)
            if lo[0] <= w[0] <= hi[0] and lo[1] <= w[1] <= hi[1] and w not in cells and w not in outside:
                stack.append(w)
    total = (hi[0] - lo[0] + 1) * (hi[1] - lo[1] + 1)
    return len(outside) + len(cells) != total


def enumerate_simply_connected(max_area: int) -> Iterator[RegionBoundary]:
    """All fixed polyominoes without holes, up to the given area.

    Enumeration never revisits a shape: a cell picked and rejected at one
    branch stays forbidden in the branches explored after it.
    """
    poly: List[Point] = []

    def emit() -> Optional[RegionBoundary]:
        cells = set(poly)
        if _has_hole(cells):
            return None
        return parse_boundary(cells_to_boundary(cells))

    def grow(untried: List[Point], seen: Set[Point]) -> Iterator[RegionBoundary]:
        for i, u in enumerate(untried):
            poly.append(u)
            region = emit()
            if region is not None:
                yield region
            if len(poly) < max_area:
                new = []
                for dx, dy in _AXIS:
                    v = (u[0] + dx, u[1] + dy)
                    if v in seen or v[1] < 0 or (v[1] == 0 and v[0] < 0):
                        continue
                    new.append(v)
                yield from grow(untried[i + 1:] + new, seen | set(new))
            poly.pop()

    yield from grow([(0, 0)], {(0, 0)})


def _fill_and_unpinch(cells: Set[Point]) -> Set[Point]:
    """Close holes and repair pinch vertices until the set is clean."""
    cells = set(cells)
    while True:
        changed = False
        # Holes: bounded complement components get absorbed.
        xs = [c[0] for c in cells]
        ys = [c[1] for c in cells]
        lo = (min(xs) - 1, min(ys) - 1)
        hi = (max(xs) + 1, max(ys) + 1)
        outside: Set[Point] = set()
        stack = [lo]
        while stack:
            c = stack.pop()
            if c in outside:
                continue
            outside.add(c)
            for dx, dy in _AXIS:
                w = (c[0] + dx, c[1] + dy)
                if lo[0] <= w[0] <= hi[0] and lo[1] <= w[1] <= hi[1] and w not in cells and w not in outside:
                    stack.append(w)
        for x in range(lo[0], hi[0] + 1):
            for y in range(lo[1], hi[1] + 1):
                if (x, y) not in cells and (x, y) not in outside:
                    cells.add((x, y))
                    changed = True
        # Pinch vertices: two diagonal cells present, the other two absent.
        for a, bb in sorted(cells):
            for corner in ((a, bb), (a + 1, bb), (a, bb + 1), (a + 1, bb + 1)):
                x, y = corner
                ne, nw = (x, y), (x - 1, y)
                sw, se = (x - 1, y - 1), (x, y - 1)
                ins = [c in cells for c in (ne, nw, sw, se)]
                if ins == [True, False, True, False]:
                    cells.add(nw)
                    changed = True
                elif ins == [False, True, False, True]:
                    cells.add(ne)
                    changed = True
        if not changed:
            return cells


def random_region(rng, target_area: int) -> RegionBoundary:
    """Random simply connected region of very roughly the target area.

    Grows a blob cell by cell from a seeded frontier, then repairs holes
    and pinches, which may overshoot the target a little.
    """
    cells: Set[Point] = {(0, 0)}
    frontier: List[Point] = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    while len(cells) < target_area:
        i = rng.randrange(len(frontier))
        c = frontier[i]
        frontier[i] = frontier[-1]
        frontier.pop()
        if c in cells:
            continue
        cells.add(c)
        for dx, dy in _AXIS:
            w = (c[0] + dx, c[1] + dy)
            if w not in cells:
                frontier.append(w)
    cells = _fill_and_unpinch(cells)
    return parse_boundary(cells_to_boundary(cells))


def random_tileable_region(rng, target_area: int, max_tries: int = 1000) -> RegionBoundary:
    """Random simply connected region that is domino tileable (checked by
    matching), resampling until one is found."""
    for _ in range(max_tries):
        b = random_region(rng, target_area)
        if b.area % 2 == 0 and matching_decide(b) is not None:
            return b
    raise AssertionError(f"no tileable region of area ~{target_area} in {max_tries} tries")
