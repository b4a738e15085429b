"""wcikit: arithmetic of weighted complete intersections.

Submodules: arith (semigroup arithmetic, Frobenius numbers), pairs (the
degree/weight pair calculus), wci (geometric predicates of families), hilbert
(section dimensions), verify (bounded exhaustive claim verification), cli.
"""

from .arith import (
    SemigroupTable,
    brauer_bound,
    brauer_bound_min,
    frobenius,
    gcd_many,
    lcm_many,
    monomial_count,
    representable,
)
from .errors import BoundsExceededError, DomainError, ParseError, UsageError, WciError
from .hilbert import PoincareSeries, h0, nonvanishing, section_dim
from .pairs import (
    Pair,
    PairSplit,
    RegularityCheck,
    cancel,
    check_h_regular,
    delta,
    is_h_regular,
    is_regular,
    split_prime,
    strip_units,
)
from .verify import (
    SearchBounds,
    VerifyReport,
    enumerate_instances,
    verify_conjecture_regular,
    verify_hypersurface,
    verify_lemma_qdiv,
    verify_nonvanishing,
    verify_prop_regular,
)
from .wci import (
    BaseLocusComponent,
    Classification,
    IndexReport,
    QsReport,
    StratumCheck,
    WciFamily,
    WeightClasses,
    augment,
    base_locus,
    canonical_degree,
    classify,
    fundamental_index,
    is_linear_cone,
    is_quasi_smooth,
    is_smooth,
    quasi_smooth,
    space_well_formed,
    stratum_meets,
    wci_well_formed,
)

__version__ = "0.1.0"

__all__ = [
    "BaseLocusComponent",
    "BoundsExceededError",
    "Classification",
    "DomainError",
    "IndexReport",
    "Pair",
    "PairSplit",
    "ParseError",
    "PoincareSeries",
    "QsReport",
    "RegularityCheck",
    "SearchBounds",
    "SemigroupTable",
    "StratumCheck",
    "UsageError",
    "VerifyReport",
    "WciError",
    "WciFamily",
    "WeightClasses",
    "augment",
    "base_locus",
    "brauer_bound",
    "brauer_bound_min",
    "cancel",
    "canonical_degree",
    "check_h_regular",
    "classify",
    "delta",
    "enumerate_instances",
    "frobenius",
    "fundamental_index",
    "gcd_many",
    "h0",
    "is_h_regular",
    "is_linear_cone",
    "is_quasi_smooth",
    "is_regular",
    "is_smooth",
    "lcm_many",
    "monomial_count",
    "nonvanishing",
    "quasi_smooth",
    "representable",
    "section_dim",
    "space_well_formed",
    "split_prime",
    "strip_units",
    "stratum_meets",
    "verify_conjecture_regular",
    "verify_hypersurface",
    "verify_lemma_qdiv",
    "verify_nonvanishing",
    "verify_prop_regular",
    "wci_well_formed",
]
