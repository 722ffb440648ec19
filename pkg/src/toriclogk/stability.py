"""Trichotomy classification of (polytope, angle) pairs along torus directions.

The verdict at angle beta is read off the position of the rescaled boundary
point Q_beta: interior means every torus direction has negative log-Futaki
value (stable), on the boundary means some facet direction attains zero
(semistable), outside means the violated facet's normal is a destabilizer.
Each verdict is cross-checked against the direct comparison of beta with the
R-invariant, and every returned witness is re-evaluated through the
log-Futaki formula before being handed out.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .errors import BetaOutOfRange, NotReflexive
from .invariants import critical_beta, log_futaki_toric, q_beta, r_invariant
from .polytope import LatticePolytope, RatVec

SEMISTABLE_NOTE = (
    "witness direction has vanishing log-Futaki invariant; the equality "
    "escape clause for product degenerations is reported, not adjudicated"
)


class Verdict(Enum):
    STABLE = "stable"
    SEMISTABLE = "semistable"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class StabilityVerdict:
    beta: Fraction
    R: Fraction
    verdict: Verdict
    witness: Optional[RatVec]
    q_beta: Optional[RatVec]
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class SweepResult:
    """Critical angle per facet normal; R is their minimum (1 if all None)."""

    R: Fraction
    per_facet: tuple[tuple[RatVec, Optional[Fraction]], ...]


def _check_beta(beta: Union[Fraction, int, str]) -> Fraction:
    b = Fraction(beta)
    if not 0 < b < 1:
        raise BetaOutOfRange(f"beta must lie in (0, 1), got {b}")
    return b


def classify(P: LatticePolytope, beta: Union[Fraction, int, str]) -> StabilityVerdict:
    """Stable/semistable/unstable verdict at angle beta with exact witness.

    Witness tie-breaking is the lexicographically smallest facet normal, for
    deterministic golden output.
    """
    if not P.is_reflexive:
        raise NotReflexive("classification requires a reflexive polytope")
    b = _check_beta(beta)
    r = r_invariant(P)

    if P.barycenter.is_zero:
        return StabilityVerdict(beta=b, R=r, verdict=Verdict.STABLE, witness=None, q_beta=None)

    qb = q_beta(P, b)
    location = P.classify_point(qb)
    if location.is_interior:
        verdict, witness, notes = Verdict.STABLE, None, ()
    elif location.is_boundary:
        verdict = Verdict.SEMISTABLE
        witness = RatVec(min(f.normal for f in location.facets))
        notes = (SEMISTABLE_NOTE,)
    else:
        verdict = Verdict.UNSTABLE
        witness = RatVec(min(f.normal for f in location.facets))
        notes = ()

    # Independent path: the verdict must agree with comparing beta to R.
    expected = (
        Verdict.STABLE if b < r else Verdict.SEMISTABLE if b == r else Verdict.UNSTABLE
    )
    if verdict is not expected:
        raise AssertionError(
            f"trichotomy mismatch: membership says {verdict.value}, "
            f"beta vs R says {expected.value}"
        )
    if witness is not None:
        value = log_futaki_toric(P, witness, b).value
        if verdict is Verdict.SEMISTABLE and value != 0:
            raise AssertionError(f"semistable witness has nonzero value {value}")
        if verdict is Verdict.UNSTABLE and value <= 0:
            raise AssertionError(f"unstable witness has nonpositive value {value}")

    return StabilityVerdict(beta=b, R=r, verdict=verdict, witness=witness, q_beta=qb, notes=notes)


def sweep(P: LatticePolytope) -> SweepResult:
    """Critical angle for every facet normal, normals sorted lexicographically.

    The minimum over defined entries recovers the R-invariant exactly (the
    facet containing Q attains it); with a centered barycenter every entry is
    None and R is 1.
    """
    if not P.is_reflexive:
        raise NotReflexive("sweep requires a reflexive polytope")
    entries = []
    for f in sorted(P.facets, key=lambda f: f.normal):
        normal = RatVec(f.normal)
        entries.append((normal, critical_beta(P, normal)))
    r = r_invariant(P)
    defined = [c for _, c in entries if c is not None]
    if (min(defined) if defined else Fraction(1)) != r:
        raise AssertionError("facet sweep minimum disagrees with the R-invariant")
    return SweepResult(R=r, per_facet=tuple(entries))


def witness_destabilizer(
    P: LatticePolytope, beta: Union[Fraction, int, str]
) -> Optional[RatVec]:
    """Integer direction with strictly positive log-Futaki value, or None.

    None whenever beta <= R; otherwise the violated facet normal reported by
    :func:`classify`, already re-verified there.
    """
    result = classify(P, beta)
    if result.verdict is not Verdict.UNSTABLE:
        return None
    return result.witness
