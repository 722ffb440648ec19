"""Exact stability toolkit for reflexive lattice polytopes.

Computes the R-invariant, log-Futaki invariants and stability verdicts of
toric pairs from nothing but exact rational polytope geometry, with a
lattice-point-counting oracle that independently re-derives every closed-form
coefficient, plus the constant-curvature cone-metric criteria on the sphere.
"""

__version__ = "0.1.0"

from .ehrhart import CoeffTuple, WeightSeries, fit_expansions, orbifold_a1, sample_series
from .errors import (
    BarycenterAtOrigin,
    BetaOutOfRange,
    EmptyInput,
    IndexOutOfRange,
    InvalidInput,
    NotFullDimensional,
    NotPolynomial,
    NotReflexive,
    OriginNotInterior,
    ToricLogKError,
    UnsupportedDimension,
    ZeroB0,
    ZeroDirection,
)
from .invariants import (
    LogFutakiResult,
    classical_futaki,
    critical_beta,
    log_futaki_algebraic,
    log_futaki_toric,
    q_beta,
    r_invariant,
)
from .p1conic import (
    ConeData,
    ExistenceResult,
    StabilityCheck,
    cone_data,
    existence_check,
    log_futaki_p1,
    mean_scalar,
    stability_check,
)
from .polytope import HalfSpace, LatticePolytope, Location, PointLocation, RatVec, build
from .stability import StabilityVerdict, SweepResult, Verdict, classify, sweep, witness_destabilizer
from .svg import render_svg
from .catalog import BUILTIN_NAMES, builtin_polytope

__all__ = [
    "BUILTIN_NAMES",
    "BarycenterAtOrigin",
    "BetaOutOfRange",
    "CoeffTuple",
    "ConeData",
    "EmptyInput",
    "ExistenceResult",
    "HalfSpace",
    "IndexOutOfRange",
    "InvalidInput",
    "LatticePolytope",
    "Location",
    "LogFutakiResult",
    "NotFullDimensional",
    "NotPolynomial",
    "NotReflexive",
    "OriginNotInterior",
    "PointLocation",
    "RatVec",
    "StabilityCheck",
    "StabilityVerdict",
    "SweepResult",
    "ToricLogKError",
    "UnsupportedDimension",
    "Verdict",
    "WeightSeries",
    "ZeroB0",
    "ZeroDirection",
    "build",
    "builtin_polytope",
    "classical_futaki",
    "classify",
    "cone_data",
    "critical_beta",
    "existence_check",
    "fit_expansions",
    "log_futaki_algebraic",
    "log_futaki_p1",
    "log_futaki_toric",
    "mean_scalar",
    "orbifold_a1",
    "q_beta",
    "r_invariant",
    "render_svg",
    "sample_series",
    "stability_check",
    "sweep",
    "witness_destabilizer",
]
