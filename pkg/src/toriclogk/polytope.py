"""Exact rational geometry of full-dimensional lattice polytopes.

A :class:`LatticePolytope` is built from integer vertex lists and carries both
a V-representation (extreme points) and an H-representation (facet
half-spaces with primitive integer normals), cross-validated against each
other on construction.  All arithmetic is exact ``Fraction`` arithmetic; no
floating point enters any computation path.

The facet enumeration is a naive exact dual-description scan: every
hyperplane spanned by ``dim`` affinely independent input points is tested for
one-sidedness.  That is quadratic-to-combinatorial in the number of points,
which is fine at desk scale (dim <= 4, up to ~100 points) and trades speed
for unconditional correctness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Iterable, Iterator, Sequence, Union

from .errors import (
    EmptyInput,
    NotFullDimensional,
    OriginNotInterior,
    ZeroDirection,
)
from .linalg import det, nullspace, primitive_integer, rank

Scalar = Union[int, Fraction, str]


def as_fraction(value: Scalar) -> Fraction:
    """Coerce to an exact rational; floats are refused, never rounded."""
    if isinstance(value, float):
        raise TypeError("exact rational required (no floats)")
    return Fraction(value)


class RatVec:
    """Immutable point/direction with exact rational coordinates.

    Supports the vector arithmetic the geometry needs (sum, difference,
    negation, scalar multiple, dot product) plus lexicographic ordering,
    which the package uses everywhere a deterministic order is required.
    Floats are rejected outright to keep the exactness contract honest.
    """

    __slots__ = ("_coords",)

    def __init__(self, coords: Iterable[Scalar]):
        self._coords: tuple[Fraction, ...] = tuple(as_fraction(c) for c in coords)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return self._coords

    def __len__(self) -> int:
        return len(self._coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._coords)

    def __getitem__(self, i: int) -> Fraction:
        return self._coords[i]

    def __add__(self, other: "RatVec") -> "RatVec":
        return RatVec(a + b for a, b in zip(self._coords, other._coords, strict=True))

    def __sub__(self, other: "RatVec") -> "RatVec":
        return RatVec(a - b for a, b in zip(self._coords, other._coords, strict=True))

    def __neg__(self) -> "RatVec":
        return RatVec(-a for a in self._coords)

    def __mul__(self, scalar: Scalar) -> "RatVec":
        s = as_fraction(scalar)
        return RatVec(a * s for a in self._coords)

    __rmul__ = __mul__

    def dot(self, other: "RatVec") -> Fraction:
        return sum((a * b for a, b in zip(self._coords, other._coords, strict=True)), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self._coords)

    @property
    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self._coords)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RatVec) and self._coords == other._coords

    def __hash__(self) -> int:
        return hash(self._coords)

    def __lt__(self, other: "RatVec") -> bool:
        return self._coords < other._coords

    def __le__(self, other: "RatVec") -> bool:
        return self._coords <= other._coords

    def __repr__(self) -> str:
        return "RatVec(%s)" % ", ".join(str(c) for c in self._coords)

    def __str__(self) -> str:
        return "(%s)" % ", ".join(str(c) for c in self._coords)


@dataclass(frozen=True, order=True)
class HalfSpace:
    """Inequality <normal, x> <= offset with a primitive integer normal."""

    normal: tuple[int, ...]
    offset: Fraction

    def __post_init__(self) -> None:
        if all(v == 0 for v in self.normal):
            raise ValueError("half-space normal must be nonzero")

    def value(self, x: RatVec) -> Fraction:
        return sum((Fraction(n) * c for n, c in zip(self.normal, x, strict=True)), Fraction(0))

    def satisfies(self, x: RatVec) -> bool:
        return self.value(x) <= self.offset

    def active_at(self, x: RatVec) -> bool:
        return self.value(x) == self.offset

    def __str__(self) -> str:
        terms = "(%s)" % ", ".join(str(n) for n in self.normal)
        return f"<{terms}, x> <= {self.offset}"


class Location(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class PointLocation:
    """Membership verdict; ``facets`` are the active (boundary) or violated
    (outside) half-spaces, empty for interior points."""

    kind: Location
    facets: tuple[HalfSpace, ...]

    @property
    def is_interior(self) -> bool:
        return self.kind is Location.INTERIOR

    @property
    def is_boundary(self) -> bool:
        return self.kind is Location.BOUNDARY

    @property
    def is_outside(self) -> bool:
        return self.kind is Location.OUTSIDE


def _as_ratvec(value: Union[RatVec, Sequence[Scalar]]) -> RatVec:
    return value if isinstance(value, RatVec) else RatVec(value)


def _facet_halfspaces(points: Sequence[RatVec], dim: int) -> list[HalfSpace]:
    """All facet half-spaces of conv(points), assumed full-dimensional.

    A supporting hyperplane that contains ``dim`` affinely independent input
    points cuts out a (dim-1)-dimensional face, i.e. a facet; conversely every
    facet is affinely spanned by input points, so scanning all ``dim``-subsets
    finds each facet at least once.
    """
    found: dict[tuple[tuple[int, ...], Fraction], HalfSpace] = {}
    for subset in itertools.combinations(range(len(points)), dim):
        base = points[subset[0]]
        rows = [tuple(points[i] - base) for i in subset[1:]]
        kernel = nullspace(rows, dim)
        if len(kernel) != 1:
            continue  # affinely dependent subset; skip
        normal = primitive_integer(kernel[0])
        offset = sum((Fraction(n) * c for n, c in zip(normal, base)), Fraction(0))
        below = above = False
        for p in points:
            v = sum((Fraction(n) * c for n, c in zip(normal, p)), Fraction(0))
            if v > offset:
                above = True
            elif v < offset:
                below = True
            if above and below:
                break
        if above and below:
            continue  # not supporting
        if above:
            normal = tuple(-n for n in normal)
            offset = -offset
        key = (normal, offset)
        if key not in found:
            found[key] = HalfSpace(normal, offset)
    return sorted(found.values())


def _extreme_points(points: Sequence[RatVec], facets: Sequence[HalfSpace], dim: int) -> list[RatVec]:
    """Input points that are vertices of the hull.

    A point of the polytope is a vertex exactly when the normals of its
    active facets span the whole space (its minimal face is 0-dimensional).
    """
    unique = sorted(set(points))
    keep = []
    for p in unique:
        active = [f.normal for f in facets if f.active_at(p)]
        if len(active) >= dim and rank(active) == dim:
            keep.append(p)
    return keep


def _triangulate(vertices: Sequence[RatVec], facets: Sequence[HalfSpace], dim: int) -> Iterator[tuple[RatVec, ...]]:
    """Fan triangulation from the first (lexicographically least) vertex.

    Each facet not containing the apex is triangulated recursively in the
    coordinates obtained by dropping one coordinate where its normal is
    nonzero (an affine bijection on the facet), then coned to the apex.
    """
    if dim == 1:
        yield (vertices[0], vertices[-1])
        return
    apex = vertices[0]
    for facet in facets:
        if facet.active_at(apex):
            continue
        on_facet = [v for v in vertices if facet.active_at(v)]
        drop = next(i for i, n in enumerate(facet.normal) if n != 0)
        lift = {}
        for v in on_facet:
            proj = RatVec(c for i, c in enumerate(v) if i != drop)
            lift[proj] = v
        sub_points = sorted(lift)
        sub_facets = _facet_halfspaces(sub_points, dim - 1)
        for simplex in _triangulate(sub_points, sub_facets, dim - 1):
            yield (apex,) + tuple(lift[q] for q in simplex)


class LatticePolytope:
    """Full-dimensional lattice polytope with exact V- and H-representations.

    Construction deduplicates the input, reduces it to extreme points, and
    derives facet half-spaces with primitive integer normals.  Instances are
    immutable after construction and safe for concurrent read-only use.
    """

    def __init__(self, vertices: Iterable[Union[RatVec, Sequence[Scalar]]]):
        points = [_as_ratvec(v) for v in vertices]
        if not points:
            raise EmptyInput("a polytope needs at least one vertex")
        dim = len(points[0])
        if dim == 0:
            raise EmptyInput("vertices must have at least one coordinate")
        for p in points:
            if len(p) != dim:
                raise ValueError("vertices have inconsistent dimensions")
            if not p.is_integral:
                raise ValueError(f"vertex {p} has non-integer coordinates")
        base = points[0]
        if rank([tuple(p - base) for p in points[1:]]) < dim:
            raise NotFullDimensional(
                f"affine hull of the input has dimension below {dim}"
            )
        facets = _facet_halfspaces(points, dim)
        verts = _extreme_points(points, facets, dim)

        # Cross-validate the two representations before trusting either.
        for p in points:
            for f in facets:
                if not f.satisfies(p):
                    raise AssertionError(f"hull bug: {p} violates {f}")
        for f in facets:
            on_facet = [v for v in verts if f.active_at(v)]
            if len(on_facet) < dim or rank([tuple(v - on_facet[0]) for v in on_facet[1:]]) != dim - 1:
                raise AssertionError(f"hull bug: facet {f} is not spanned by vertices")

        self._dim = dim
        self._vertices = tuple(verts)
        self._facets = tuple(facets)

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def vertices(self) -> tuple[RatVec, ...]:
        """Extreme points, lexicographically sorted."""
        return self._vertices

    @property
    def facets(self) -> tuple[HalfSpace, ...]:
        """Facet half-spaces, lexicographically sorted by (normal, offset)."""
        return self._facets

    @cached_property
    def is_reflexive(self) -> bool:
        """True iff every facet is <normal, x> <= 1 with primitive integer
        normal; the origin is then automatically strictly interior."""
        return all(f.offset == 1 for f in self._facets)

    @cached_property
    def _measure(self) -> tuple[Fraction, RatVec]:
        volume = Fraction(0)
        weighted = RatVec([0] * self._dim)
        for simplex in _triangulate(self._vertices, self._facets, self._dim):
            apex = simplex[0]
            mat = [tuple(v - apex) for v in simplex[1:]]
            vol = abs(det(mat)) / factorial(self._dim)
            centroid = RatVec([0] * self._dim)
            for v in simplex:
                centroid = centroid + v
            volume += vol
            weighted = weighted + centroid * (vol / (self._dim + 1))
        return volume, weighted * (1 / volume)

    @property
    def volume(self) -> Fraction:
        """Euclidean (Lebesgue) volume, exact."""
        return self._measure[0]

    @property
    def barycenter(self) -> RatVec:
        """Exact volume centroid."""
        return self._measure[1]

    def support(self, direction: Union[RatVec, Sequence[Scalar]]) -> Fraction:
        """Support value: the maximum of <v, direction> over the polytope."""
        d = _as_ratvec(direction)
        if d.is_zero:
            raise ZeroDirection("support direction must be nonzero")
        return max(v.dot(d) for v in self._vertices)

    def support_face(self, direction: Union[RatVec, Sequence[Scalar]]) -> list[RatVec]:
        """Vertices attaining the support value, lexicographically sorted."""
        d = _as_ratvec(direction)
        if d.is_zero:
            raise ZeroDirection("support direction must be nonzero")
        best = max(v.dot(d) for v in self._vertices)
        return [v for v in self._vertices if v.dot(d) == best]

    def classify_point(self, x: Union[RatVec, Sequence[Scalar]]) -> PointLocation:
        """Exact membership test against every facet inequality."""
        p = _as_ratvec(x)
        violated = tuple(f for f in self._facets if f.value(p) > f.offset)
        if violated:
            return PointLocation(Location.OUTSIDE, violated)
        active = tuple(f for f in self._facets if f.active_at(p))
        if active:
            return PointLocation(Location.BOUNDARY, active)
        return PointLocation(Location.INTERIOR, ())

    def ray_exit_scale(self, direction: Union[RatVec, Sequence[Scalar]]) -> Fraction:
        """Largest t >= 0 with t * direction inside the polytope.

        Requires the origin to be strictly interior; the exit scale is the
        minimum of offset / <normal, direction> over facets whose normal has
        positive pairing with the direction.
        """
        d = _as_ratvec(direction)
        if d.is_zero:
            raise ZeroDirection("ray direction must be nonzero")
        origin = RatVec([0] * self._dim)
        if not self.classify_point(origin).is_interior:
            raise OriginNotInterior("ray exit requires the origin strictly inside")
        scales = [f.offset / f.value(d) for f in self._facets if f.value(d) > 0]
        if not scales:
            raise AssertionError("bounded polytope must stop the ray")
        return min(scales)

    def lattice_points(self, k: int) -> list[RatVec]:
        """All integer points of the k-th dilate, in lexicographic order.

        Scans the bounding box of the scaled vertices and filters by the
        scaled facet inequalities; acceptable at desk-scale k.
        """
        if k < 0:
            raise ValueError("dilation factor must be nonnegative")
        if k == 0:
            return [RatVec([0] * self._dim)]
        lows = []
        highs = []
        for i in range(self._dim):
            values = [int(v[i]) * k for v in self._vertices]
            lows.append(min(values))
            highs.append(max(values))
        result = []
        for coords in itertools.product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs))):
            p = RatVec(coords)
            if all(f.value(p) <= k * f.offset for f in self._facets):
                result.append(p)
        return result

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LatticePolytope)
            and self._dim == other._dim
            and self._vertices == other._vertices
        )

    def __hash__(self) -> int:
        return hash((self._dim, self._vertices))

    def __repr__(self) -> str:
        kind = "reflexive " if self.is_reflexive else ""
        return (
            f"LatticePolytope(dim={self._dim}, {len(self._vertices)} vertices, "
            f"{len(self._facets)} facets, {kind}volume={self.volume})"
        )


def build(vertices: Iterable[Union[RatVec, Sequence[Scalar]]]) -> LatticePolytope:
    """Construct a :class:`LatticePolytope` from integer points.

    Duplicates and non-extreme points are dropped silently; callers that need
    strictness can compare input and output vertex counts.
    """
    return LatticePolytope(vertices)
