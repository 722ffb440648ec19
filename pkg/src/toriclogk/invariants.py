"""Closed-form stability invariants of a reflexive polytope.

The central quantity is the log-Futaki value of the 1-parameter subgroup of a
direction lambda at angle parameter beta:

    F(lambda, beta) = -(beta <P_c, lambda> + (1 - beta) W(lambda)) Vol

with P_c the barycenter and W the support function.  Its sign matches the
sign of <Q_beta - P_lambda, lambda> (the positive factor (1-beta) Vol
dropped), where Q_beta rescales the boundary point Q hit by the ray from the
origin away from the barycenter.  ``r_invariant`` is the ratio |OQ| / |P_c Q|
along that ray, which is exactly the largest angle parameter that keeps
Q_beta inside the polytope.

Sign convention: stability along a direction means F <= 0; the opposite-sign
convention for degenerations at t -> infinity is only ever surfaced as a
documented flag on reports, never baked into stored values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import BarycenterAtOrigin, BetaOutOfRange, NotReflexive, ZeroB0, ZeroDirection
from .ehrhart import CoeffTuple
from .polytope import LatticePolytope, RatVec, Scalar, as_fraction


@dataclass(frozen=True)
class LogFutakiResult:
    """Log-Futaki value together with every ingredient needed to recheck it:
    value == -(beta * pairing + (1 - beta) * support) * vol."""

    value: Fraction
    beta: Fraction
    direction: RatVec
    support: Fraction
    pairing: Fraction
    vol: Fraction

    def recomputed(self) -> Fraction:
        return -(self.beta * self.pairing + (1 - self.beta) * self.support) * self.vol


def _as_direction(direction: Union[RatVec, Sequence[Scalar]]) -> RatVec:
    d = direction if isinstance(direction, RatVec) else RatVec(direction)
    if d.is_zero:
        raise ZeroDirection("direction must be nonzero")
    return d


def _as_beta(beta: Union[Fraction, int, str], lo_open: bool, hi: Fraction) -> Fraction:
    b = as_fraction(beta)
    low_ok = b > 0 if lo_open else b >= 0
    if not (low_ok and b < hi):
        lo = "(0" if lo_open else "[0"
        raise BetaOutOfRange(f"beta must lie in {lo}, {hi}), got {b}")
    return b


def r_invariant(P: LatticePolytope) -> Fraction:
    """Greatest angle parameter, in (0, 1]; equals 1 iff the barycenter is O.

    For off-center polytopes this is t / (1 + t) where t is the exit scale of
    the ray from the origin in direction -P_c, so the boundary point is
    Q = -(R / (1 - R)) P_c.
    """
    if not P.is_reflexive:
        raise NotReflexive("R-invariant requires a reflexive polytope")
    pc = P.barycenter
    if pc.is_zero:
        return Fraction(1)
    t = P.ray_exit_scale(-pc)
    return t / (1 + t)


def classical_futaki(P: LatticePolytope, direction: Union[RatVec, Sequence[Scalar]]) -> Fraction:
    """Ordinary obstruction character: -Vol * <barycenter, direction>."""
    d = _as_direction(direction)
    return -P.volume * P.barycenter.dot(d)


def q_beta(P: LatticePolytope, beta: Union[Fraction, int, str]) -> RatVec:
    """Rescaled boundary point (beta (1-R)) / ((1-beta) R) * Q.

    Interior / boundary / outside position of this point encodes the
    stable / semistable / unstable trichotomy at angle beta.
    """
    b = _as_beta(beta, lo_open=True, hi=Fraction(1))
    pc = P.barycenter
    if pc.is_zero:
        raise BarycenterAtOrigin("Q is undefined when the barycenter is the origin")
    t = P.ray_exit_scale(-pc)
    q = -pc * t
    r = t / (1 + t)
    return q * (b * (1 - r) / ((1 - b) * r))


def log_futaki_toric(
    P: LatticePolytope,
    direction: Union[RatVec, Sequence[Scalar]],
    beta: Union[Fraction, int, str],
) -> LogFutakiResult:
    """Log-Futaki value of the direction's 1-parameter subgroup at angle beta."""
    d = _as_direction(direction)
    b = _as_beta(beta, lo_open=False, hi=Fraction(1))
    support = P.support(d)
    pairing = P.barycenter.dot(d)
    vol = P.volume
    value = -(b * pairing + (1 - b) * support) * vol
    return LogFutakiResult(value=value, beta=b, direction=d, support=support, pairing=pairing, vol=vol)


def log_futaki_algebraic(coeffs: CoeffTuple, beta: Union[Fraction, int, str]) -> Fraction:
    """Log-Futaki value from fitted expansion coefficients.

    At beta = 0 this is the plain two-term combination
    (2 a1 - a0_tilde) b0 - a0 (2 b1 - b0_tilde), divided by b0; at beta = 1
    the divisor term vanishes and it reduces to 2 (a1 b0 - a0 b1) / b0.
    """
    if coeffs.b0 <= 0:
        raise ZeroB0(f"b0 must be positive, got {coeffs.b0}")
    b = as_fraction(beta)
    classical = 2 * (coeffs.a1 * coeffs.b0 - coeffs.a0 * coeffs.b1) / coeffs.b0
    divisor = -coeffs.a0_tilde + coeffs.b0_tilde / coeffs.b0 * coeffs.a0
    return classical + (1 - b) * divisor


def critical_beta(
    P: LatticePolytope, direction: Union[RatVec, Sequence[Scalar]]
) -> Optional[Fraction]:
    """Unique root of beta -> log_futaki_toric(P, direction, beta) in (0, 1).

    The root is W / (W - <P_c, direction>); it lands in (0, 1) exactly when
    the barycenter pairing is negative, otherwise None is returned.
    """
    d = _as_direction(direction)
    support = P.support(d)
    pairing = P.barycenter.dot(d)
    if support == pairing:
        return None
    root = support / (support - pairing)
    if 0 < root < 1:
        return root
    return None
