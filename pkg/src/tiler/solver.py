"""Boundary-only tileability decision.

On a tileable region every tiling induces a height function on the
lattice vertices, and the pointwise maximum of these is itself a height
function.  Its restriction to the sites of the sleeve graph satisfies

    g(y) = min over graph neighbours x of  g(x) + alpha(x, y)

with g fixed to the boundary height on boundary sites, because along any
edge of the graph the height can increase by at most alpha.  We compute g
by a single-source-per-boundary-vertex shortest-path relaxation (one heap,
all boundary sites seeded at once) and report the region untileable
exactly when some edge constraint

    -alpha(y, x) <= g(y) - g(x) <= alpha(x, y)

fails.  An unbalanced boundary word (closure defect in the height walk)
is rejected before any graph is built.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from typing import Dict, NamedTuple, Optional, Tuple, Union

from tiler.approxgraph import ApproxGraph, build_graph
from tiler.errors import InternalInconsistency
from tiler.lattice import Point, alpha
from tiler.region import BoundaryHeight, RegionBoundary, boundary_height, parse_boundary
from tiler.subdivision import build_subdivision


class ViolatedPair(NamedTuple):
    """An edge of the site graph whose height gap exceeds the bound."""

    x: Point
    y: Point
    gx: int
    gy: int
    alpha_xy: int
    alpha_yx: int


@dataclass
class TileabilityVerdict:
    tileable: bool
    reason: str  # "ok" | "unbalanced-boundary" | "bad-pair"
    witness: Optional[ViolatedPair]
    p: int
    n: int
    sites: int
    edges: int
    heights: Optional[Dict[Point, int]] = None

    def to_json(self) -> str:
        w = None
        if self.reason == "unbalanced-boundary":
            w = {"kind": "unbalanced-boundary"}
        elif self.witness is not None:
            w = {
                "kind": "bad-pair",
                "x": list(self.witness.x),
                "y": list(self.witness.y),
                "gx": self.witness.gx,
                "gy": self.witness.gy,
                "alpha_xy": self.witness.alpha_xy,
                "alpha_yx": self.witness.alpha_yx,
            }
        return json.dumps({
            "tileable": self.tileable,
            "witness": w,
            "p": self.p,
            "n": self.n,
            "sites": self.sites,
            "edges": self.edges,
        })


def compute_gmax(graph: ApproxGraph, bh, metric=alpha,
                 ) -> Tuple[Dict[Point, int], Optional[ViolatedPair]]:
    """Relax the maximal height over the site graph.

    Returns the per-site heights and the first violated edge constraint,
    if any.  Boundary sites are fixed, never popped, and their mutual
    edges are checked up front.  ``metric`` is the directed per-pair
    height bound; the default is the square-lattice one, the lozenge
    pipeline passes its own.
    """
    g: Dict[Point, int] = {}
    for s in graph.sites:
        if s in graph.boundary:
            g[s] = bh[s]

    for x in graph.sites:
        if x not in g:
            continue
        for y in graph.adj[x]:
            if y in g and x < y:
                axy, ayx = metric(x, y), metric(y, x)
                if g[y] - g[x] > axy or g[x] - g[y] > ayx:
                    return g, ViolatedPair(x, y, g[x], g[y], axy, ayx)

    heap = []
    for x in graph.sites:
        if x in g:
            for y in graph.adj[x]:
                if y not in g:
                    heapq.heappush(heap, (g[x] + metric(x, y), y))

    while heap:
        k, y = heapq.heappop(heap)
        if y in g:
            continue
        g[y] = k
        for z in graph.adj[y]:
            if z in g:
                ayz, azy = metric(y, z), metric(z, y)
                if g[z] - k > ayz or k - g[z] > azy:
                    return g, ViolatedPair(y, z, k, g[z], ayz, azy)
            else:
                heapq.heappush(heap, (k + metric(y, z), z))

    if len(g) != len(graph.sites):
        raise InternalInconsistency("site graph left %d sites unreached"
                                    % (len(graph.sites) - len(g)))
    return g, None


def decide_tileable(source: Union[str, RegionBoundary]) -> TileabilityVerdict:
    b = parse_boundary(source) if isinstance(source, str) else source
    bh = boundary_height(b)
    if not bh.valid:
        return TileabilityVerdict(False, "unbalanced-boundary", None,
                                  b.p, b.area, 0, 0)
    sub = build_subdivision(b)
    graph = build_graph(b, sub)
    g, bad = compute_gmax(graph, bh)
    if bad is not None:
        return TileabilityVerdict(False, "bad-pair", bad,
                                  b.p, b.area, len(graph.sites), graph.edge_count)
    return TileabilityVerdict(True, "ok", None,
                              b.p, b.area, len(graph.sites), graph.edge_count,
                              heights=g)
