"""Shared test utilities: independent oracles and a polygon generator.

The oracles here deliberately avoid the library's own triangulation and
enumeration paths so that expected values are derived along a second route.
"""

from __future__ import annotations

import random
from fractions import Fraction

from toriclogk import EmptyInput, LatticePolytope, NotFullDimensional, build

Point = tuple[Fraction, Fraction]


def shoelace_area(cycle: list[tuple[int, int]]) -> Fraction:
    """Polygon area from a hand-ordered boundary cycle."""
    total = Fraction(0)
    for (x0, y0), (x1, y1) in zip(cycle, cycle[1:] + cycle[:1]):
        total += Fraction(x0) * y1 - Fraction(x1) * y0
    return abs(total) / 2


def polygon_centroid(cycle: list[tuple[int, int]]) -> tuple[Fraction, Fraction]:
    """Polygon centroid via the boundary-sum formula (signed, exact)."""
    area2 = Fraction(0)
    cx = Fraction(0)
    cy = Fraction(0)
    for (x0, y0), (x1, y1) in zip(cycle, cycle[1:] + cycle[:1]):
        cross = Fraction(x0) * y1 - Fraction(x1) * y0
        area2 += cross
        cx += (x0 + x1) * cross
        cy += (y0 + y1) * cross
    return cx / (3 * area2), cy / (3 * area2)


# Boundary cycles of the example polygons, ordered by hand along their edges.
CYCLES = {
    "p2": [(-1, -1), (2, -1), (-1, 2)],
    "bl1p2": [(-1, 0), (0, -1), (2, -1), (-1, 2)],
    "bl2p2": [(-1, -1), (1, -1), (1, 0), (0, 1), (-1, 1)],
    "p1xp1": [(-1, -1), (1, -1), (1, 1), (-1, 1)],
}


def random_reflexive_polygons(count: int, seed: int = 20260810, bound: int = 2,
                              max_attempts: int = 50000) -> list[LatticePolytope]:
    """Deterministic sample of distinct reflexive polygons with small vertices.

    Draws random point sets from the coordinate box, builds their hull and
    keeps the reflexive ones; distinctness is by vertex set.
    """
    rng = random.Random(seed)
    box = [(x, y) for x in range(-bound, bound + 1) for y in range(-bound, bound + 1)]
    found: list[LatticePolytope] = []
    seen = set()
    for _ in range(max_attempts):
        if len(found) == count:
            break
        points = rng.sample(box, rng.randint(3, 6))
        try:
            poly = build(points)
        except (NotFullDimensional, EmptyInput):
            continue
        if not poly.is_reflexive or poly.vertices in seen:
            continue
        seen.add(poly.vertices)
        found.append(poly)
    assert len(found) == count, f"only found {len(found)} reflexive polygons"
    return found
