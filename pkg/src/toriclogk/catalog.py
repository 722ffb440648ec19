"""Built-in named polytopes for zero-setup runs.

The four planar standards: the projective plane, its one- and two-point
blow-ups, and the product of two lines.
"""

from __future__ import annotations

from .polytope import LatticePolytope, build

_BUILTIN_VERTICES: dict[str, list[tuple[int, ...]]] = {
    "p2": [(-1, -1), (2, -1), (-1, 2)],
    "bl1p2": [(-1, 0), (-1, 2), (2, -1), (0, -1)],
    "bl2p2": [(-1, -1), (-1, 1), (0, 1), (1, 0), (1, -1)],
    "p1xp1": [(-1, -1), (-1, 1), (1, -1), (1, 1)],
}

BUILTIN_NAMES: tuple[str, ...] = tuple(sorted(_BUILTIN_VERTICES))


def builtin_polytope(name: str) -> LatticePolytope:
    try:
        vertices = _BUILTIN_VERTICES[name]
    except KeyError:
        raise KeyError(f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_NAMES)}")
    return build(vertices)
