"""Constant-curvature cone metrics on the Riemann sphere with marked points.

Marked points carry weights alpha_i in (0, 1) and are otherwise anonymous:
every formula below depends only on the weight vector, so no positions are
stored.  The degree of the weighted anticanonical class is 2 - sum(alpha);
its sign picks the curvature (+1, 0, -1) of the candidate constant-curvature
metric, and the Troyanov / McOwen / Thurston / Luo-Tian criterion decides
existence.  The log-Futaki value of the degeneration pushing everything away
from point i is sum_{j != i} alpha_j - alpha_i, in the t -> infinity
orientation where stability demands positivity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import IndexOutOfRange

ScalarIn = Union[int, str, Fraction]


@dataclass(frozen=True)
class ConeData:
    """Cone weights alpha_i, each strictly between 0 and 1, r >= 1."""

    alphas: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.alphas:
            raise ValueError("need at least one marked point")
        for a in self.alphas:
            if not 0 < a < 1:
                raise ValueError(f"cone weight {a} outside (0, 1)")

    @property
    def r(self) -> int:
        return len(self.alphas)


@dataclass(frozen=True)
class ExistenceResult:
    exists: bool
    curvature_sign: int
    failed_conditions: tuple[str, ...]


@dataclass(frozen=True)
class StabilityCheck:
    stable_all: bool
    futaki_values: tuple[Fraction, ...]


def cone_data(alphas: Iterable[ScalarIn]) -> ConeData:
    return ConeData(tuple(Fraction(a) for a in alphas))


def log_futaki_p1(cone: ConeData, index: int) -> Fraction:
    """Log-Futaki value of the degeneration at marked point ``index`` (1-based)."""
    if not 1 <= index <= cone.r:
        raise IndexOutOfRange(f"index {index} outside 1..{cone.r}")
    a_i = cone.alphas[index - 1]
    return sum(cone.alphas, Fraction(0)) - 2 * a_i


def mean_scalar(cone: ConeData) -> Fraction:
    """Degree of the weighted anticanonical class: 2 - sum(alpha).

    Its sign selects the curvature (+1 spherical, 0 flat, -1 hyperbolic) of
    the constant-curvature equation to solve.
    """
    return 2 - sum(cone.alphas, Fraction(0))


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def existence_check(cone: ConeData) -> ExistenceResult:
    """Existence of a constant-curvature cone metric with these weights.

    Spherical case: needs sum(alpha) < 2 and, for every i, the strict
    inequality sum_{j != i} alpha_j > alpha_i.  Flat and hyperbolic cases
    need only the sign condition on the total weight; there the positivity
    of each sum_{j != i} alpha_j - alpha_i follows automatically.
    """
    curvature = _sign(mean_scalar(cone))
    failed = []
    if curvature > 0:
        for i in range(1, cone.r + 1):
            if log_futaki_p1(cone, i) <= 0:
                failed.append(f"(b,{i})")
    else:
        # sum(alpha) >= 2 forces each sum_{j != i} - alpha_i > 2 - 2 alpha_i > 0.
        assert all(log_futaki_p1(cone, i) > 0 for i in range(1, cone.r + 1))
    return ExistenceResult(
        exists=not failed,
        curvature_sign=curvature,
        failed_conditions=tuple(failed),
    )


def stability_check(cone: ConeData) -> StabilityCheck:
    """All per-point log-Futaki values, positive across the board iff stable.

    Uses the t -> infinity orientation, so stability is strict positivity;
    zeros (balanced pairs) land on the boundary and count as not stable.
    """
    values = tuple(log_futaki_p1(cone, i) for i in range(1, cone.r + 1))
    return StabilityCheck(stable_all=all(v > 0 for v in values), futaki_values=values)
