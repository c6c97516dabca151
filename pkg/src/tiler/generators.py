"""Boundary-word generators for test and benchmark regions.

Each family returns a boundary word.  The small families build an explicit
cell set and trace its outline; ``dilate`` then scales any word at the
word level (every move repeated k times turns each cell into a k x k
block), which is how the benchmark families reach large perimeters
without ever materialising their cells.
"""

from __future__ import annotations

import random
from typing import Set, Tuple

from tiler.reference import cells_to_boundary, random_region

Point = Tuple[int, int]


def rect(w: int, h: int) -> str:
    if w < 1 or h < 1:
        raise ValueError("rectangle sides must be positive")
    return "R" * w + "U" * h + "L" * w + "D" * h


def aztec(order: int) -> str:
    """Aztec diamond: staircase-bounded rows of width 2, 4, ..., 2k, ..., 2."""
    if order < 1:
        raise ValueError("order must be positive")
    k = order
    cells: Set[Point] = set()
    for y in range(2 * k):
        lo = k - 1 - y if y < k else y - k
        hi = k + y if y < k else 3 * k - 1 - y
        for x in range(lo, hi + 1):
            cells.add((x, y))
    return cells_to_boundary(cells)


def snake(length: int, rows: int) -> str:
    """Serpentine corridor: full-width rows joined by single connector
    cells at alternating ends."""
    if length < 2 or rows < 1:
        raise ValueError("need length >= 2 and rows >= 1")
    cells: Set[Point] = set()
    for i in range(rows):
        for x in range(length):
            cells.add((x, 2 * i))
        if i + 1 < rows:
            cells.add((length - 1 if i % 2 == 0 else 0, 2 * i + 1))
    return cells_to_boundary(cells)


def spiral(turns: int) -> str:
    """Width-1 spiral corridor with a one-cell gap between arms."""
    if turns < 1:
        raise ValueError("need at least one turn")
    cells: Set[Point] = {(0, 0)}
    x = y = 0
    dirs = ((1, 0), (0, 1), (-1, 0), (0, -1))
    for i in range(2 * turns):
        dx, dy = dirs[i % 4]
        for _ in range(2 * (i // 2 + 1)):
            x += dx
            y += dy
            cells.add((x, y))
    return cells_to_boundary(cells)


def random_word(area: int, seed: int) -> str:
    if area < 1:
        raise ValueError("area must be positive")
    return random_region(random.Random(seed), area).moves


def dilate(word: str, k: int) -> str:
    if k < 1:
        raise ValueError("dilation factor must be positive")
    return "".join(m * k for m in word)
