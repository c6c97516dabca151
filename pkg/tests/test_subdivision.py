"""Quadtree construction around boundaries: crossed-square census,
in/out classification, and the boundary sleeve of unit triangles."""

import random

import pytest

from tiler.errors import InternalInconsistency
from tiler.reference import enumerate_simply_connected, random_region
from tiler.region import parse_boundary
from tiler.subdivision import build_subdivision


def cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def test_square_2x2_structure():
    b = parse_boundary("RRUULLDD")
    sub = build_subdivision(b)
    assert sub.n0 == 16 and sub.t == 4
    assert sub.si_census[0] == 1
    # Last level: one diamond per side of the square, two kept triangles
    # in each.
    centers = sorted(sub.center_xy(sub.t, k) for k in sub.crossed[sub.t])
    assert centers == [(0, 1), (1, 0), (1, 2), (2, 1)]
    assert len(sub.triangles) == 8
    assert sorted({tri.cell for tri in sub.triangles}) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    verts = {v for tri in sub.triangles for v in tri.verts}
    assert verts == {(x, y) for x in range(3) for y in range(3)}


def test_triangles_are_ccw_quarter_cells():
    rng = random.Random(17)
    for _ in range(10):
        b = random_region(rng, 30)
        sub = build_subdivision(b)
        for tri in sub.triangles:
            apex, c1, c2 = tri.verts
            d1 = (c1[0] - apex[0], c1[1] - apex[1])
            d2 = (c2[0] - apex[0], c2[1] - apex[1])
            assert sorted((abs(d1[0]) + abs(d1[1]), abs(d2[0]) + abs(d2[1]))) == [1, 1]
            assert cross2(d1, d2) == 1
            assert b.contains_cell(tri.cell)
            for v in tri.verts:
                assert min(tri.cell[0], tri.cell[1]) - 1 <= max(v)  # cheap sanity


def test_every_boundary_edge_is_a_leg_of_one_kept_triangle():
    rng = random.Random(23)
    regions = [parse_boundary("RRUULLDD"), parse_boundary("RRRULULDLD")]
    regions += [random_region(rng, a) for a in (12, 40, 90)]
    for b in regions:
        sub = build_subdivision(b)
        legs = {}
        for tri in sub.triangles:
            apex, c1, c2 = tri.verts
            for corner in (c1, c2):
                leg = frozenset((apex, corner))
                legs[leg] = legs.get(leg, 0) + 1
        for edge in b.edges():
            assert legs.get(frozenset(edge), 0) == 1, edge


def test_boundary_edges_live_in_crossed_squares_at_every_level():
    rng = random.Random(4)
    b = random_region(rng, 60)
    sub = build_subdivision(b)
    for level in range(sub.t + 1):
        for tail, head in b.edges():
            u2 = (tail[0] + tail[1]) + (head[0] + head[1])
            v2 = (tail[0] - tail[1]) + (head[0] - head[1])
            assert sub.key_of_uv2(level, u2, v2) in sub.crossed[level]


def _intersecting_cells(sub, level, key, bbox):
    """Cells of the expanded bbox whose open intersection with the open
    square is nonempty."""
    s = sub.side(level)
    umin, vmin = sub.uv_min(level, key)
    x0, y0, x1, y1 = bbox
    for a in range(x0 - 2, x1 + 2):
        for bb in range(y0 - 2, y1 + 2):
            if a + bb + 2 > umin and a + bb < umin + s and a - bb + 1 > vmin and a - bb - 1 < vmin + s:
                yield (a, bb)


def test_classification_agrees_with_cell_membership():
    rng = random.Random(31)
    regions = [parse_boundary("RRUULLDD")] + [random_region(rng, a) for a in (9, 25, 70)]
    for b in regions:
        sub = build_subdivision(b)
        checked = 0
        for level in range(1, sub.t + 1):
            for key, inside in sub.classes[level].items():
                for cell in _intersecting_cells(sub, level, key, b.bbox):
                    assert b.contains_cell(cell) == inside, (level, key, cell)
                    checked += 1
        assert checked > 0


def test_inside_squares_exist_for_fat_regions():
    # A 12x12 block has room for classified-inside squares well away from
    # the boundary sleeve.
    word = "R" * 12 + "U" * 12 + "L" * 12 + "D" * 12
    sub = build_subdivision(parse_boundary(word))
    assert any(inside for level in range(sub.t + 1) for inside in sub.classes[level].values())
    assert any(not inside for level in range(sub.t + 1) for inside in sub.classes[level].values())


def test_census_bound_over_enumerated_regions():
    for b in enumerate_simply_connected(6):
        sub = build_subdivision(b)  # raises InternalInconsistency on violation
        for level in range(1, sub.t + 1):
            assert sub.si_census[level] < 9 * 2 ** (level - 1)


def test_census_bound_on_larger_random_regions():
    rng = random.Random(101)
    for target in (50, 200, 500):
        b = random_region(rng, target)
        build_subdivision(b)


def test_dump_lines_deterministic():
    b = parse_boundary("RRUULLDD")
    lines1 = build_subdivision(b).dump_lines()
    lines2 = build_subdivision(b).dump_lines()
    assert lines1 == lines2
    assert lines1[0] == "SQ 0 1 1 16"
    assert sum(1 for ln in lines1 if ln.startswith("TR ")) == 8
