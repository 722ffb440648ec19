"""Exception hierarchy for domain validation failures.

Every error carries a stable ``code`` (the class name) so the CLI can emit
machine-readable error reports.
"""


class ToricLogKError(ValueError):
    """Base class for all validation errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


class EmptyInput(ToricLogKError):
    """No points were supplied."""


class NotFullDimensional(ToricLogKError):
    """The affine hull of the input points has deficient dimension."""


class ZeroDirection(ToricLogKError):
    """A direction vector must be nonzero."""


class OriginNotInterior(ToricLogKError):
    """The origin must lie strictly inside the polytope."""


class NotReflexive(ToricLogKError):
    """The operation requires a reflexive polytope."""


class BetaOutOfRange(ToricLogKError):
    """The angle parameter lies outside its admissible interval."""


class BarycenterAtOrigin(ToricLogKError):
    """The boundary point of the barycenter ray is undefined."""


class NotPolynomial(ToricLogKError):
    """A held-out sample contradicts the exact polynomial fit."""


class ZeroB0(ToricLogKError):
    """The leading dimension coefficient must be positive."""


class IndexOutOfRange(ToricLogKError):
    """A marked-point index lies outside 1..r."""


class UnsupportedDimension(ToricLogKError):
    """The renderer only supports planar polytopes."""


class InvalidInput(ToricLogKError):
    """Malformed file contents or unparsable literals."""
