"""Section dimensions via the Poincare series of the graded coordinate ring.

For a quasi-smooth well-formed family the defining forms are a regular
sequence, so dim A_k is the t^k coefficient of prod(1 - t^d) / prod(1 - t^a);
otherwise the same coefficient is still returned but flagged as formal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UsageError
from .wci import WciFamily, _geometry


def series_coefficients(degrees, weights, upto: int) -> list[int]:
    """Coefficients 0..upto of prod_j (1-t^{d_j}) / prod_i (1-t^{a_i})."""
    if upto < 0:
        raise UsageError(f"series order must be nonnegative, got {upto}")
    coeffs = [0] * (upto + 1)
    coeffs[0] = 1
    for a in weights:  # multiply by 1/(1-t^a): running prefix sums
        for i in range(a, upto + 1):
            coeffs[i] += coeffs[i - a]
    for d in degrees:  # multiply by (1-t^d), safely in place from the top
        for i in range(upto, d - 1, -1):
            coeffs[i] -= coeffs[i - d]
    return coeffs


@dataclass(eq=False)
class PoincareSeries:
    """Lazily extended coefficient table of the Hilbert series of a pair."""

    numerator_degrees: tuple[int, ...]
    denominator_weights: tuple[int, ...]
    _coeffs: list[int] = field(default_factory=list, repr=False)

    @classmethod
    def for_family(cls, family: WciFamily) -> "PoincareSeries":
        return cls(family.degrees, family.weights.expand())

    def extend(self, upto: int) -> None:
        if upto >= len(self._coeffs):
            self._coeffs = series_coefficients(
                self.numerator_degrees, self.denominator_weights, upto
            )

    def coefficient(self, k: int) -> int:
        if k < 0:
            raise UsageError(f"coefficient index must be nonnegative, got {k}")
        self.extend(k)
        return self._coeffs[k]

    def coefficients(self, upto: int) -> list[int]:
        self.extend(upto)
        return self._coeffs[: upto + 1]


def h0(family: WciFamily, k: int) -> int:
    """dim H^0(X, O_X(k)) for the general member (series coefficient)."""
    if not isinstance(k, int) or k < 0:
        raise UsageError(f"k must be a nonnegative integer, got {k!r}")
    return series_coefficients(family.degrees, family.weights.expand(), k)[k]


def section_dim(family: WciFamily, k: int) -> tuple[int, bool]:
    """(h0, formal) where formal means the geometric identification of the
    coefficient with a section count is not backed by the preconditions
    (quasi-smooth + well-formed, not a linear cone)."""
    cone, space_wf, wf, qs = _geometry(family)
    formal = not (space_wf and wf is True and not cone and qs is True)
    return h0(family, k), formal


def nonvanishing(family: WciFamily, k: int) -> bool:
    """Is the linear system of degree k nonempty on the general member?"""
    if not isinstance(k, int) or k < 1:
        raise UsageError(f"k must be a positive integer, got {k!r}")
    return h0(family, k) >= 1
