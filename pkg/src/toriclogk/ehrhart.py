"""Brute-force counting oracle for section dimensions and torus weights.

For a lattice polytope P and a direction lambda, the k-th dilate contributes

    d_k = #(kP over the integers)          (section count)
    w_k = -sum of <p, lambda> over kP      (total torus weight)

Both are exact polynomials in k (degree n and n+1), so the expansions are
recovered by exact Vandermonde interpolation with a mandatory held-out sample
instead of asymptotic fitting: polynomiality is asserted, not assumed.  The
sign convention is that the monomial attached to lattice point p carries
weight -<p, lambda> under the one-parameter subgroup of lambda.

The hyperplane-section sequences come from quotienting by the degenerated
section, whose weight is -W(lambda):

    wt_k = w_k - (w_{k-1} - W(lambda) d_{k-1}),   dt_k = d_k - d_{k-1}

with d_0 = 1 and w_0 = 0 (the 0-th dilate is the origin alone).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import NotPolynomial, ZeroDirection
from .linalg import solve
from .polytope import LatticePolytope, RatVec, Scalar


@dataclass(frozen=True)
class WeightSeries:
    """Sampled (k, d_k, w_k) rows for one direction, k strictly increasing."""

    direction: RatVec
    samples: tuple[tuple[int, int, Fraction], ...]

    @property
    def ks(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.samples)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s[1] for s in self.samples)

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return tuple(s[2] for s in self.samples)


@dataclass(frozen=True)
class CoeffTuple:
    """Leading expansion coefficients, all exact rationals.

    a0, a1 lead the weight series (degree n+1); b0, b1 lead the dimension
    series (degree n); a0_tilde and b0_tilde lead the hyperplane-section
    series (degrees n and n-1).
    """

    a0: Fraction
    a1: Fraction
    b0: Fraction
    b1: Fraction
    a0_tilde: Fraction
    b0_tilde: Fraction
    n: int


def _fit_polynomial(ks: Sequence[int], ys: Sequence[Fraction], degree: int) -> tuple[Fraction, ...]:
    """Exact polynomial coefficients (ascending powers) with holdout check.

    Solves the Vandermonde system on the first degree+1 samples and requires
    every remaining sample to match exactly; a mismatch means the data is not
    the polynomial it is claimed to be.
    """
    if len(ks) < degree + 2:
        raise ValueError(f"need at least {degree + 2} samples (one held out)")
    head = degree + 1
    matrix = [[Fraction(k) ** j for j in range(head)] for k in ks[:head]]
    coeffs = tuple(solve(matrix, [Fraction(y) for y in ys[:head]]))
    for k, y in zip(ks[head:], ys[head:]):
        predicted = sum(c * Fraction(k) ** j for j, c in enumerate(coeffs))
        if predicted != y:
            raise NotPolynomial(
                f"held-out sample k={k} gives {y}, interpolation predicts {predicted}"
            )
    return coeffs


def sample_series(
    P: LatticePolytope,
    direction: Union[RatVec, Sequence[Scalar]],
    k_max: int | None = None,
) -> WeightSeries:
    """Enumerate d_k and w_k for k = 1..k_max by direct lattice-point scans.

    Defaults to k_max = n + 4: the minimum n + 3 needed for interpolation
    plus one extra safety sample.
    """
    d = direction if isinstance(direction, RatVec) else RatVec(direction)
    if d.is_zero:
        raise ZeroDirection("weight direction must be nonzero")
    if k_max is None:
        k_max = P.dim + 4
    if k_max < P.dim + 3:
        raise ValueError(f"k_max must be at least n + 3 = {P.dim + 3}")
    samples = []
    for k in range(1, k_max + 1):
        points = P.lattice_points(k)
        weight = -sum((p.dot(d) for p in points), Fraction(0))
        samples.append((k, len(points), weight))
    return WeightSeries(direction=d, samples=tuple(samples))


def fit_expansions(series: WeightSeries, P: LatticePolytope) -> CoeffTuple:
    """Interpolate the sampled series exactly and extract leading coefficients.

    The hyperplane-section recursion starts at k = 1 using d_0 = 1, w_0 = 0;
    if its holdout check fails there (a degenerate limit section at k = 1)
    the fit restarts from k = 2 with a warning rather than silently patching.
    """
    n = P.dim
    ks = list(series.ks)
    if len(ks) < n + 3:
        raise ValueError(f"need at least n + 3 = {n + 3} samples")
    ds = [Fraction(v) for v in series.dims]
    ws = list(series.weights)

    w_coeffs = _fit_polynomial(ks, ws, n + 1)
    d_coeffs = _fit_polynomial(ks, ds, n)
    a0, a1 = w_coeffs[n + 1], w_coeffs[n]
    b0, b1 = d_coeffs[n], d_coeffs[n - 1]

    w_at = {0: Fraction(0), **dict(zip(ks, ws))}
    d_at = {0: Fraction(1), **dict(zip(ks, ds))}
    support = P.support(series.direction)
    wt = [w_at[k] - (w_at[k - 1] - support * d_at[k - 1]) for k in ks]
    dt = [d_at[k] - d_at[k - 1] for k in ks]

    try:
        wt_coeffs = _fit_polynomial(ks, wt, n)
        dt_coeffs = _fit_polynomial(ks, dt, n - 1)
    except NotPolynomial:
        warnings.warn(
            "hyperplane-section recursion inconsistent at k=1; refitting from k=2",
            stacklevel=2,
        )
        wt_coeffs = _fit_polynomial(ks[1:], wt[1:], n)
        dt_coeffs = _fit_polynomial(ks[1:], dt[1:], n - 1)
    a0_tilde = wt_coeffs[n]
    b0_tilde = dt_coeffs[n - 1]

    if b0 <= 0:
        raise AssertionError("dimension series fitted a nonpositive volume")
    if b0_tilde < 0:
        raise AssertionError("section series fitted a negative boundary volume")
    return CoeffTuple(a0=a0, a1=a1, b0=b0, b1=b1, a0_tilde=a0_tilde, b0_tilde=b0_tilde, n=n)


def orbifold_a1(coeffs: CoeffTuple) -> Fraction:
    """Second weight coefficient after absorbing the divisor: (2 a1 - a0_tilde) / 2."""
    return (2 * coeffs.a1 - coeffs.a0_tilde) / 2
