"""Triangular-grid pipeline against its brute-force counterparts.

Expected values marked as frozen were produced by the shortest-path
alpha oracle, the geodesic path enumerator, and the up/down triangle
matching decider in this file's own helpers, then pinned.
"""

import random
from itertools import product

import pytest

from tiler.errors import (EmptyInterior, NotClosed, RadiusExceeded,
                          SelfIntersecting)
from tiler.lozenge import (LozengeBoundary, TriColor, build_tri_graph,
                           build_tri_subdivision, decide_lozenge,
                           enumerate_lozenge_regions, faces_to_lozenge_word,
                           lozenge_boundary_height, lozenge_matching_decide,
                           parse_lozenge, random_lozenge_region, tri_alpha,
                           tri_alpha_oracle, tri_axial, tri_color,
                           tri_geodesic_points_brute, tri_geodesic_region,
                           tri_point)

HEXAGON = "1,1,-3,-3,2,2,-1,-1,3,3,-2,-2"  # H(2,2,2), 24 triangles


# ---------------------------------------------------------------------------
# Coordinates, colors, alpha.

def test_tri_point_normalization_round_trip():
    for q, r in product(range(-7, 8), repeat=2):
        p = tri_point(q, r)
        assert min(p) == 0
        assert tri_axial(p) == (q, r)


def test_tri_color_changes_across_every_edge():
    for q, r in product(range(-4, 5), repeat=2):
        p = tri_point(q, r)
        for dq, dr in ((1, 0), (0, 1), (-1, -1), (-1, 0), (0, -1), (1, 1)):
            assert tri_color(p) != tri_color(tri_point(q + dq, r + dr))
    assert tri_color((0, 0, 0)) is TriColor.BLACK
    assert tri_color(tri_point(1, 0)) is TriColor.RED
    assert tri_color(tri_point(1, 1)) is TriColor.BLUE


def test_tri_alpha_frozen_values():
    o = tri_point(0, 0)
    assert tri_alpha(o, o) == 0
    # One step with / against a unit direction: 1 forward, 2 back.
    assert tri_alpha(o, tri_point(1, 0)) == 1
    assert tri_alpha(o, tri_point(-1, 0)) == 2
    assert tri_alpha(o, tri_point(0, 1)) == 1
    assert tri_alpha(o, tri_point(-1, -1)) == 1
    assert tri_alpha(o, tri_point(1, 1)) == 2
    assert tri_alpha(o, tri_point(2, 0)) == 2
    assert tri_alpha(o, tri_point(1, -1)) == 3


def test_tri_alpha_matches_oracle_radius_6():
    # Exhaustive from an origin of each color class.
    for x0 in ((0, 0), (1, 0), (1, 1)):
        x = tri_point(*x0)
        for dq, dr in product(range(-6, 7), repeat=2):
            y = tri_point(x0[0] + dq, x0[1] + dr)
            assert tri_alpha(x, y) == tri_alpha_oracle(x, y), (x, y)


def test_tri_alpha_oracle_radius_guard():
    with pytest.raises(RadiusExceeded):
        tri_alpha_oracle(tri_point(0, 0), tri_point(17, 0))


# ---------------------------------------------------------------------------
# Geodesics.

def test_geodesic_region_matches_path_enumeration():
    box = [tri_point(q, r) for q, r in product(range(-11, 12), repeat=2)]
    for dq, dr in product(range(-5, 6), repeat=2):
        x, y = tri_point(0, 0), tri_point(dq, dr)
        reg = tri_geodesic_region(x, y)
        brute = tri_geodesic_points_brute(x, y)
        assert reg.points() == brute, (x, y)
        assert {z for z in box if reg.contains(z)} == brute, (x, y)


def test_geodesic_degenerate_shapes():
    o = tri_point(0, 0)
    assert tri_geodesic_region(o, o).points() == {o}
    # A straight multiple of one direction gives the segment.
    seg = tri_geodesic_region(o, tri_point(3, 0))
    assert seg.points() == {tri_point(k, 0) for k in range(4)}


def test_alpha_additive_and_strictly_increasing_on_geodesics():
    rng = random.Random(919)
    for _ in range(200):
        x = tri_point(rng.randrange(-4, 5), rng.randrange(-4, 5))
        y = tri_point(x[0] - x[2] + rng.randrange(-5, 6),
                      x[1] - x[2] + rng.randrange(-5, 6))
        reg = tri_geodesic_region(x, y)
        for z in reg.points():
            assert tri_alpha(x, z) + tri_alpha(z, y) == tri_alpha(x, y)
        # Walk one geodesic path greedily; alpha from x must step by 1.
        cur, d = x, 0
        while cur != y:
            for i in range(3):
                v = list(cur)
                v[i] += 1
                m = min(v)
                nxt = (v[0] - m, v[1] - m, v[2] - m)
                if tri_alpha(x, nxt) == d + 1 and reg.contains(nxt):
                    cur, d = nxt, d + 1
                    break
            else:
                pytest.fail(f"stuck between {x} and {y} at {cur}")
        assert d == tri_alpha(x, y)


# ---------------------------------------------------------------------------
# Parsing.

def test_parse_single_lozenge():
    b = parse_lozenge("1,2,-1,-2")
    assert b.p == 4 and b.n == 2
    assert sorted(b.faces()) == [(0, 0, False), (0, 0, True)]
    assert b.word == "1,2,-1,-2"


def test_parse_reports_bad_token_index():
    with pytest.raises(ValueError) as err:
        parse_lozenge("1,2,x,-2")
    assert err.value.args[1] == 2
    with pytest.raises(ValueError) as err:
        parse_lozenge("1,4,-1,-2")
    assert err.value.args[1] == 1


def test_parse_rejects_open_empty_and_crossing_walks():
    with pytest.raises(NotClosed):
        parse_lozenge("1,2")
    with pytest.raises(EmptyInterior):
        parse_lozenge("1,-1")
    with pytest.raises(SelfIntersecting):
        # Two triangles joined only at the origin.
        parse_lozenge("1,2,3,2,3,-2,-3")


def test_clockwise_words_are_reversed():
    ccw = parse_lozenge("1,2,-1,-2")
    cw = parse_lozenge("2,1,-2,-1")
    assert set(ccw.faces()) == set(cw.faces())
    assert cw.n == 2


def test_boundary_heights_anchor_color_and_closure():
    b = parse_lozenge(HEXAGON)
    lh = lozenge_boundary_height(b)
    assert lh.valid
    assert lh[b.vertices[0]] == 0
    for u, w in zip(b.vertices, b.vertices[1:] + b.vertices[:1]):
        assert abs(lh[u] - lh[w]) == 1
    for u in b.vertices:
        for w in b.vertices:
            same = tri_color(u) == tri_color(w)
            assert ((lh[u] - lh[w]) % 3 == 0) == same
    # A lone triangle's walk gains height 3 and cannot close.
    assert not lozenge_boundary_height(parse_lozenge("1,2,3")).valid


# ---------------------------------------------------------------------------
# Decision pipeline.

def test_frozen_verdicts():
    v = decide_lozenge("1,2,-1,-2")
    assert (v.tileable, v.reason, v.n) == (True, "ok", 2)
    v = decide_lozenge("1,2,3")
    assert (v.tileable, v.reason, v.n) == (False, "unbalanced-boundary", 1)
    v = decide_lozenge(HEXAGON)
    assert (v.tileable, v.reason, v.n) == (True, "ok", 24)
    tiling = lozenge_matching_decide(parse_lozenge(HEXAGON))
    assert tiling is not None and len(tiling) == 12


def test_unbalanced_up_down_counts_detected():
    # Three lozenges around one vertex plus a dangling triangle: balanced
    # walk but matching impossible is not constructible; instead check a
    # shape whose up/down counts differ: side-2 triangle, 3 up 1 down.
    v = decide_lozenge("1,1,2,2,3,3")
    assert not v.tileable
    b = parse_lozenge("1,1,2,2,3,3")
    assert b.n == 4
    assert lozenge_matching_decide(b) is None


def test_graph_degree_bound_and_sites_cover_boundary():
    rng = random.Random(31415)
    for _ in range(25):
        b = random_lozenge_region(rng, rng.randrange(10, 150))
        sub = build_tri_subdivision(b)
        graph = build_tri_graph(b, sub)
        assert max(len(nb) for nb in graph.adj.values()) <= 6
        assert set(b.vertex_set) <= set(graph.sites)
        # Pieces are perimeter-sized, not area-sized.
        assert len(sub.pieces) <= 6 * b.p


def test_solved_heights_respect_edge_and_color_rules():
    v = decide_lozenge(HEXAGON)
    g = v.heights
    for x in g:
        for y in g:
            if tri_alpha(x, y) == 1:  # unit forward step
                assert g[y] - g[x] in (1, -2)


def test_exhaustive_agreement_up_to_9_triangles():
    count = 0
    for b in enumerate_lozenge_regions(9):
        count += 1
        fast = decide_lozenge(b).tileable
        slow = lozenge_matching_decide(b) is not None
        assert fast == slow, b.word
    # Fixed hole-free polyiamond census, frozen from the enumerator and
    # cross-checked against the published fixed polyiamond counts
    # (2, 3, 6, 14, 36, 94, 250, 675, 1838 with 6 holey at size 9).
    assert count == 2912


def test_enumeration_census_by_size():
    by_n = {}
    for b in enumerate_lozenge_regions(6):
        by_n[b.n] = by_n.get(b.n, 0) + 1
    assert by_n == {1: 2, 2: 3, 3: 6, 4: 14, 5: 36, 6: 94}


def test_random_regions_agree_with_matching():
    rng = random.Random(2718)
    for _ in range(200):
        b = random_lozenge_region(rng, rng.randrange(8, 220))
        fast = decide_lozenge(b).tileable
        slow = lozenge_matching_decide(b) is not None
        assert fast == slow, b.word


def test_lines_reentering_across_a_notch():
    # Concave region where lattice lines exit at one boundary vertex and
    # re-enter at another with nothing between.  The straight segment
    # joining those two sites runs outside the region, so it must not
    # become a graph edge; with it, the free-space metric understates
    # the in-region distance and the verdict flips to a false negative.
    word = ("-3,1,1,2,-3,-2,-3,-2,3,-2,-1,-2,3,1,-2,-3,2,-3,-2,-3,-2,-3,"
            "-2,1,-2,-3,2,-3,-1,-3,-3,-2,-2,-3,2,1,2,1,-2,-3,-3,2,1,2,-1,"
            "-3,1,2,-3,2,-1,-1,2,2,2,2,3,2,2,-1,-1,2,3,2,3,3,-1,3,3,-1,3,"
            "1,3,1,3,3,3,3,-2,-2,-1,3,-2,-2,3,-2")
    b = parse_lozenge(word)
    assert decide_lozenge(b).tileable
    assert lozenge_matching_decide(b) is not None

    graph = build_tri_graph(b, build_tri_subdivision(b))
    for u in graph.sites:
        for w in graph.adj[u]:
            if u >= w:
                continue
            ua, wa = tri_axial(u), tri_axial(w)
            gap = max(abs(wa[0] - ua[0]), abs(wa[1] - ua[1]))
            sq, sr = (wa[0] - ua[0]) // gap, (wa[1] - ua[1]) // gap
            cur = ua
            for _ in range(gap):
                nxt = (cur[0] + sq, cur[1] + sr)
                assert b.edge_in_region(tri_point(*cur), tri_point(*nxt)), (u, w)
                cur = nxt


def test_word_round_trip_through_faces():
    rng = random.Random(5050)
    for _ in range(20):
        b = random_lozenge_region(rng, rng.randrange(5, 80))
        again = parse_lozenge(faces_to_lozenge_word(set(b.faces())))
        assert set(again.faces()) == set(b.faces())
        assert again.n == b.n


def test_vertex_closure_and_edge_membership():
    b = parse_lozenge(HEXAGON)
    assert b.vertex_in_closure(tri_point(1, 1))      # interior
    assert b.vertex_in_closure(b.vertices[0])        # on the walk
    assert not b.vertex_in_closure(tri_point(-3, -3))
    assert b.edge_in_region(tri_point(1, 1), tri_point(2, 1))
    assert not b.edge_in_region(tri_point(-3, -3), tri_point(-2, -3))
