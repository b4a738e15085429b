"""Bounded exhaustive verification of the amplitude and nonvanishing claims.

Every claim quantifies over canonical (sorted-descending) pairs or families
inside finite SearchBounds.  Enumeration is partitioned by the largest weight
entry; partitions can run on worker processes and the merged report is sorted
by canonical encoding, so output is byte-identical for any worker count.

Regularity is decided wholesale: a weight tuple induces requirements
(g -> minimum count of degrees divisible by g), degree multisets are
pre-grouped by their divisibility signature, and only matching groups are
visited.  Amplitude thresholds then reduce to bisection on per-group sums.
"""

from __future__ import annotations

import json
import math
import os
from bisect import bisect_left, bisect_right
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from functools import lru_cache, reduce
from itertools import combinations, combinations_with_replacement
from time import perf_counter

from . import hilbert
from .arith import frobenius, is_prime
from .errors import BoundsExceededError, UsageError
from .pairs import Pair, _encode_run_length, is_regular
from .wci import (
    WciFamily,
    _gcd_subsets,
    _index_value,
    _meets,
    base_locus,
    canonical_degree,
    is_linear_cone,
    is_quasi_smooth,
    space_well_formed,
    wci_well_formed,
)

DEFAULT_CEILING = 10**8

_FILTER_NAMES = (
    "require_fano",
    "require_calabi_yau",
    "require_smooth",
    "require_quasi_smooth",
    "require_well_formed",
    "exclude_linear_cones",
    "gcd_one_weights",
)


@dataclass(frozen=True)
class SearchBounds:
    """Finite search window plus optional instance filters."""

    max_codim: int
    max_vars: int
    max_weight: int
    max_degree: int
    require_fano: bool = False
    require_calabi_yau: bool = False
    require_smooth: bool = False
    require_quasi_smooth: bool = False
    require_well_formed: bool = False
    exclude_linear_cones: bool = False
    gcd_one_weights: bool = False

    def __post_init__(self):
        if self.max_codim < 0:
            raise UsageError("max_codim must be nonnegative")
        for name in ("max_vars", "max_weight", "max_degree"):
            if getattr(self, name) < 1:
                raise UsageError(f"{name} must be at least 1")

    def as_dict(self) -> dict:
        return {
            "max_codim": self.max_codim,
            "max_vars": self.max_vars,
            "max_weight": self.max_weight,
            "max_degree": self.max_degree,
            "filters": {name: getattr(self, name) for name in _FILTER_NAMES},
        }


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one claim run; deterministic apart from elapsed_ms."""

    claim: str
    bounds: SearchBounds
    instances_checked: int
    counterexamples: tuple[dict, ...]
    equality_witnesses: tuple[dict, ...]
    elapsed_ms: int

    def as_dict(self, include_elapsed: bool = True) -> dict:
        out = {
            "claim": self.claim,
            "bounds": self.bounds.as_dict(),
            "checked": self.instances_checked,
            "counterexamples": list(self.counterexamples),
            "equality_witnesses": list(self.equality_witnesses),
        }
        if include_elapsed:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    def canonical_json(self) -> str:
        """Byte-identical across runs and worker counts (no timing field)."""
        return json.dumps(self.as_dict(include_elapsed=False), sort_keys=True)


def instance_ceiling() -> int:
    """Hard cap on enumerated instances; WCI_INSTANCE_CEILING overrides."""
    raw = os.environ.get("WCI_INSTANCE_CEILING")
    if raw is None:
        return DEFAULT_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"WCI_INSTANCE_CEILING must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError("WCI_INSTANCE_CEILING must be positive")
    return value


def default_workers() -> int:
    return os.cpu_count() or 1


# -- enumeration primitives -----------------------------------------------------


def _weight_values(max_weight: int, min_value: int = 1, divisor: int = 1) -> list[int]:
    return [v for v in range(max_weight, min_value - 1, -1) if v % divisor == 0]


def _tuples_with_first(first: int, values_desc: list[int], min_len: int, max_len: int):
    """Non-increasing tuples of the given lengths whose largest entry is first."""
    smaller = [v for v in values_desc if v <= first]
    for length in range(max(min_len, 1), max_len + 1):
        for rest in combinations_with_replacement(smaller, length - 1):
            yield (first,) + rest


def _count_tuples(num_values: int, min_len: int, max_len: int) -> int:
    return sum(math.comb(num_values + L - 1, L) for L in range(min_len, max_len + 1))


def _regularity_requirements(weights: tuple[int, ...]) -> dict[int, int]:
    """g -> required count of g-divisible degrees for the pair to be regular."""
    mult = Counter(weights)
    values = [v for v in mult if v > 1]
    req: dict[int, int] = {}
    for size in range(1, len(values) + 1):
        for subset in combinations(values, size):
            g = reduce(math.gcd, subset)
            if g > 1:
                k = sum(mult[v] for v in subset)
                if req.get(g, 0) < k:
                    req[g] = k
    return req


@lru_cache(maxsize=16)
def _degree_universe(
    max_codim: int, max_degree: int, min_degree: int, divisor: int, sig_max: int
) -> dict[tuple[int, ...], tuple[tuple[int, tuple[int, ...]], ...]]:
    """Degree multisets grouped by divisibility signature, sorted by sum.

    The signature of a multiset is (count of entries divisible by g, capped at
    max_codim) for g in 2..sig_max; a requirement map is satisfied by exactly
    the groups whose signature dominates it.
    """
    values = [d for d in range(max_degree, min_degree - 1, -1) if d % divisor == 0]
    groups: dict[tuple[int, ...], list] = {}
    for c in range(1, max_codim + 1):
        for ds in combinations_with_replacement(values, c):
            sig = tuple(
                min(sum(1 for d in ds if d % g == 0), max_codim)
                for g in range(2, sig_max + 1)
            )
            groups.setdefault(sig, []).append((sum(ds), ds, frozenset(ds)))
    return {
        sig: tuple(sorted(lst, key=lambda e: e[:2])) for sig, lst in groups.items()
    }


_match_cache: dict[tuple, tuple[tuple[int, ...], ...]] = {}


def _matching_sigs(universe_key: tuple, req: dict[int, int]) -> tuple[tuple[int, ...], ...]:
    max_codim = universe_key[0]
    if any(k > max_codim for k in req.values()):
        return ()
    key = (universe_key, tuple(sorted(req.items())))
    hit = _match_cache.get(key)
    if hit is not None:
        return hit
    universe = _degree_universe(*universe_key)
    result = tuple(
        sig
        for sig in universe
        if all(sig[g - 2] >= k for g, k in req.items())
    )
    _match_cache[key] = result
    return result


def _matched_groups(universe_key: tuple, weights: tuple[int, ...]):
    universe = _degree_universe(*universe_key)
    for sig in _matching_sigs(universe_key, _regularity_requirements(weights)):
        yield universe[sig]


@lru_cache(maxsize=None)
def _frobenius_cached(weights_sorted: tuple[int, ...]) -> int:
    return frobenius(list(weights_sorted))


def _encode_weights(weights: tuple[int, ...]) -> str:
    return _encode_run_length(tuple(weights))


def _pair_encoding(degrees: tuple[int, ...], weights: tuple[int, ...]) -> str:
    return Pair.of(degrees, weights).encode()


def _entry_key(entry: dict) -> tuple[str, str]:
    enc = entry.get("pair") or entry.get("family") or entry.get("weights") or ""
    return (enc, json.dumps(entry, sort_keys=True))


# -- per-claim partition workers --------------------------------------------------


def _part_conjecture(bounds: SearchBounds, q, first: int):
    universe_key = (bounds.max_codim, bounds.max_degree, 1, 1, bounds.max_weight)
    values = _weight_values(bounds.max_weight, min_value=2)
    checked = 0
    cex: list[dict] = []
    for weights in _tuples_with_first(first, values, 2, bounds.max_vars):
        if reduce(math.gcd, weights) != 1:
            continue
        value_set = set(weights)
        max_c = len(weights) - 1  # c <= n
        sum_a = sum(weights)
        G = _frobenius_cached(tuple(sorted(weights)))
        for group in _matched_groups(universe_key, weights):
            for sum_d, ds, dvals in group:
                if len(ds) > max_c or not value_set.isdisjoint(dvals):
                    continue
                checked += 1
                delta = sum_d - sum_a
                if delta < G:
                    cex.append(
                        {
                            "pair": _pair_encoding(ds, weights),
                            "delta": delta,
                            "frobenius": G,
                        }
                    )
    return checked, cex, []


_EXPECTED_FORM_NOTE = "(6^s,1^(c-s); 2^s,3^s)"


def _prop_equality_form(ds: tuple[int, ...], weights: tuple[int, ...]) -> tuple[bool, int]:
    s = sum(1 for d in ds if d == 6)
    ok = (
        all(d in (6, 1) for d in ds)
        and Counter(weights) == Counter({2: s, 3: s})
    )
    return ok, s


def _part_prop(bounds: SearchBounds, q, first: int):
    universe_key = (bounds.max_codim, bounds.max_degree, 1, 1, bounds.max_weight)
    values = _weight_values(bounds.max_weight, min_value=2)
    checked = 0
    cex: list[dict] = []
    wits: list[dict] = []
    for weights in _tuples_with_first(first, values, 1, bounds.max_vars):
        sum_a = sum(weights)
        value_set = set(weights)
        gcd_one = reduce(math.gcd, weights) == 1
        for group in _matched_groups(universe_key, weights):
            for sum_d, ds, dvals in group:
                if not value_set.isdisjoint(dvals):
                    continue
                checked += 1
                c = len(ds)
                delta = sum_d - sum_a
                if delta < c:
                    cex.append(
                        {
                            "pair": _pair_encoding(ds, weights),
                            "delta": delta,
                            "codim": c,
                        }
                    )
                elif gcd_one and delta == c:
                    ok, s = _prop_equality_form(ds, weights)
                    enc = _pair_encoding(ds, weights)
                    wits.append({"pair": enc, "s": s if ok else None, "matches_form": ok})
                    if not ok:
                        cex.append(
                            {
                                "pair": enc,
                                "delta": c,
                                "reason": f"equality pair not of the form {_EXPECTED_FORM_NOTE}",
                            }
                        )
    return checked, cex, wits


def _part_qdiv(bounds: SearchBounds, q: int, first: int):
    universe_key = (bounds.max_codim, bounds.max_degree, 1, q, bounds.max_weight)
    values = _weight_values(bounds.max_weight, divisor=q)
    checked = 0
    cex: list[dict] = []
    wits: list[dict] = []
    for weights in _tuples_with_first(first, values, 1, bounds.max_vars):
        value_set = set(weights)
        sum_a = sum(weights)
        for group in _matched_groups(universe_key, weights):
            for sum_d, ds, dvals in group:
                if not value_set.isdisjoint(dvals):
                    continue
                checked += 1
                c = len(ds)
                delta = sum_d - sum_a
                if delta < c * q:
                    cex.append(
                        {"pair": _pair_encoding(ds, weights), "delta": delta, "bound": c * q}
                    )
                elif delta == c * q:
                    wits.append(
                        {
                            "pair": _pair_encoding(ds, weights),
                            "codim": c,
                            "nvars": len(weights),
                            "c_equals_nvars": c == len(weights),
                        }
                    )
    return checked, cex, wits


def _expected_equality_family(family: WciFamily) -> bool:
    c = family.codim
    return family.degrees == (6,) * c and family.weights.classes == ((3, c), (2, c), (1, c))


def _part_nonvanishing(bounds: SearchBounds, q, first: int):
    values = _weight_values(bounds.max_weight)
    degree_lists = _plain_degree_lists(bounds.max_codim, bounds.max_degree)
    checked = 0
    cex: list[dict] = []
    wits: list[dict] = []
    for weights in _tuples_with_first(first, values, 2, bounds.max_vars):
        if not space_well_formed_cached(weights):
            continue
        sum_a = sum(weights)
        value_set = set(weights)
        max_c = min(bounds.max_codim, len(weights) - 1)
        for c in range(1, max_c + 1):
            sums, lists = degree_lists[c]
            for i in range(bisect_right(sums, sum_a)):  # delta <= 0
                ds = lists[i]
                if not value_set.isdisjoint(ds):
                    continue
                family = WciFamily.of(ds, weights)
                if not wci_well_formed(family) or not is_quasi_smooth(family):
                    continue
                checked += 1
                enc = family.encode()
                index = _index_value(family)
                if hilbert.h0(family, index) < 1:
                    cex.append(
                        {"family": enc, "check": "nonvanishing", "index": index, "h0": 0}
                    )
                if any(_meets(family, W) for W, _g, _k in _gcd_subsets(family)):
                    continue  # not smooth; (b) and (c) do not apply
                c1 = family.weights.multiplicity(1)
                delta = sums[i] - sum_a
                if c1 < c:
                    cex.append({"family": enc, "check": "c1_ge_c", "c1": c1, "codim": c})
                elif c1 == c:
                    ok = _expected_equality_family(family)
                    wits.append({"family": enc, "c1": c1, "is_expected_form": ok})
                    if not ok:
                        cex.append(
                            {
                                "family": enc,
                                "check": "equality_form",
                                "reason": "c1 = c outside the classified family",
                            }
                        )
                if c1 <= -delta:
                    cex.append(
                        {
                            "family": enc,
                            "check": "c1_gt_index",
                            "c1": c1,
                            "fano_index": -delta,
                        }
                    )
    return checked, cex, wits


@lru_cache(maxsize=65536)
def space_well_formed_cached(weights: tuple[int, ...]) -> bool:
    return space_well_formed(weights)


@lru_cache(maxsize=8)
def _plain_degree_lists(max_codim: int, max_degree: int):
    """Per codimension: (sorted sums, multisets in the same order)."""
    out = {}
    for c in range(1, max_codim + 1):
        entries = sorted(
            (sum(ds), ds)
            for ds in combinations_with_replacement(range(max_degree, 0, -1), c)
        )
        out[c] = ([s for s, _ in entries], [ds for _, ds in entries])
    return out


def _pairwise_gcd_lcm(weights: tuple[int, ...]) -> int:
    h = 1
    for x, y in combinations(weights, 2):
        h = math.lcm(h, math.gcd(x, y))
    return h


def _part_hypersurface(bounds: SearchBounds, q, first: int):
    values = _weight_values(bounds.max_weight)
    checked = 0
    cex: list[dict] = []
    for weights in _tuples_with_first(first, values, 2, bounds.max_vars):
        # (a) the amplitude inequality for the lcm degree
        h = _pairwise_gcd_lcm(weights)
        if all(h % a != 0 for a in weights):
            checked += 1
            f = math.lcm(*weights)
            lhs = f - sum(weights)
            for s, t in combinations(range(len(weights)), 2):
                a_s, a_t = weights[s], weights[t]
                rhs = math.lcm(a_s, a_t) - a_s - a_t
                if lhs < rhs:
                    cex.append(
                        {
                            "part": "a",
                            "weights": _encode_weights(weights),
                            "s": a_s,
                            "t": a_t,
                            "lhs": lhs,
                            "rhs": rhs,
                        }
                    )
        # (b), (c): quasi-smooth well-formed non-cone hypersurfaces
        if not space_well_formed_cached(weights):
            continue
        value_set = set(weights)
        for f in range(1, bounds.max_degree + 1):
            if f in value_set:
                continue
            family = WciFamily.of((f,), weights)
            if not wci_well_formed(family) or not is_quasi_smooth(family):
                continue
            checked += 1
            enc = family.encode()
            delta = canonical_degree(family)
            index = _index_value(family)
            start = (max(delta, 0) // index + 1) * index  # least multiple > max(delta, 0)
            if start <= bounds.max_degree:
                coeffs = hilbert.series_coefficients(
                    family.degrees, family.weights.expand(), bounds.max_degree
                )
                for h_prime in range(start, bounds.max_degree + 1, index):
                    if coeffs[h_prime] < 1:
                        cex.append(
                            {
                                "part": "b",
                                "family": enc,
                                "h_prime": h_prime,
                                "h0": 0,
                            }
                        )
            if delta % index == 0:
                n = len(weights) - 1
                for m in range(n, n + 3):
                    ell = delta + m * index
                    if ell < 1:
                        continue  # trivial or empty system; nothing to base-lock
                    components = base_locus(family, ell)
                    if components:
                        cex.append(
                            {
                                "part": "c",
                                "family": enc,
                                "ell": ell,
                                "m": m,
                                "components": [list(comp.values) for comp in components],
                            }
                        )
    return checked, cex, []


_PARTITION_FUNCS = {
    "conjecture-regular": _part_conjecture,
    "prop-regular": _part_prop,
    "lemma-qdiv": _part_qdiv,
    "nonvanishing": _part_nonvanishing,
    "hypersurface": _part_hypersurface,
}


def _run_partition(args):
    claim, bounds, q, first = args
    return _PARTITION_FUNCS[claim](bounds, q, first)


# -- estimates --------------------------------------------------------------------


# Refining an estimate beyond the raw product requires materializing the degree
# universe and walking every weight tuple; only do so below these sizes.
_REFINE_MULTISET_CAP = 500_000
_REFINE_TUPLE_CAP = 2_000_000


def _estimate_regular(
    bounds: SearchBounds, min_weight: int, divisor: int, min_len: int, ceiling: int
) -> int:
    values = _weight_values(bounds.max_weight, min_value=min_weight, divisor=divisor)
    n_tuples = _count_tuples(len(values), min_len, bounds.max_vars)
    n_multisets = _count_tuples(bounds.max_degree // divisor, 1, bounds.max_codim)
    raw = n_tuples * n_multisets
    if raw <= ceiling or n_multisets > _REFINE_MULTISET_CAP or n_tuples > _REFINE_TUPLE_CAP:
        return raw
    # The raw product trips the ceiling, but regularity requirements usually
    # match only a sliver of the universe; count the matched groups exactly.
    universe_key = (bounds.max_codim, bounds.max_degree, 1, divisor, bounds.max_weight)
    sizes = {sig: len(lst) for sig, lst in _degree_universe(*universe_key).items()}
    total = 0
    for first in values:
        for weights in _tuples_with_first(first, values, min_len, bounds.max_vars):
            for sig in _matching_sigs(universe_key, _regularity_requirements(weights)):
                total += sizes[sig]
    return total


def _estimate_delta_le_zero(bounds: SearchBounds, ceiling: int) -> int:
    values = _weight_values(bounds.max_weight)
    n_tuples = _count_tuples(len(values), 2, bounds.max_vars)
    n_multisets = _count_tuples(bounds.max_degree, 1, bounds.max_codim)
    raw = n_tuples * n_multisets
    if raw <= ceiling or n_multisets > _REFINE_MULTISET_CAP or n_tuples > _REFINE_TUPLE_CAP:
        return raw
    degree_lists = _plain_degree_lists(bounds.max_codim, bounds.max_degree)
    total = 0
    for first in values:
        for weights in _tuples_with_first(first, values, 2, bounds.max_vars):
            sum_a = sum(weights)
            max_c = min(bounds.max_codim, len(weights) - 1)
            for c in range(1, max_c + 1):
                sums, _lists = degree_lists[c]
                total += bisect_right(sums, sum_a)
    return total


def _estimate(claim: str, bounds: SearchBounds, q, ceiling: int) -> int:
    if claim == "conjecture-regular":
        return _estimate_regular(bounds, 2, 1, 2, ceiling)
    if claim == "prop-regular":
        return _estimate_regular(bounds, 2, 1, 1, ceiling)
    if claim == "lemma-qdiv":
        return _estimate_regular(bounds, q, q, 1, ceiling)
    if claim == "nonvanishing":
        return _estimate_delta_le_zero(bounds, ceiling)
    if claim == "hypersurface":
        tuples = _count_tuples(bounds.max_weight, 2, bounds.max_vars)
        return tuples * (bounds.max_degree + 1)
    raise UsageError(f"unknown claim {claim!r}")


# -- drivers ----------------------------------------------------------------------


def _claim_partitions(claim: str, bounds: SearchBounds, q) -> list[int]:
    if claim in ("conjecture-regular", "prop-regular"):
        return _weight_values(bounds.max_weight, min_value=2)
    if claim == "lemma-qdiv":
        return _weight_values(bounds.max_weight, divisor=q)
    return _weight_values(bounds.max_weight)


def _run_claim(claim: str, bounds: SearchBounds, q=None, workers: int | None = None) -> VerifyReport:
    start = perf_counter()
    ceiling = instance_ceiling()
    estimate = _estimate(claim, bounds, q, ceiling)
    if estimate > ceiling:
        raise BoundsExceededError(estimate, ceiling)
    workers = workers or 1
    tasks = [(claim, bounds, q, first) for first in _claim_partitions(claim, bounds, q)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_partition, tasks))
    else:
        parts = [_run_partition(t) for t in tasks]
    checked = sum(p[0] for p in parts)
    cex = sorted((e for p in parts for e in p[1]), key=_entry_key)
    wits = sorted((e for p in parts for e in p[2]), key=_entry_key)
    elapsed_ms = int((perf_counter() - start) * 1000)
    return VerifyReport(claim, bounds, checked, tuple(cex), tuple(wits), elapsed_ms)


def verify_conjecture_regular(bounds: SearchBounds, workers: int | None = None) -> VerifyReport:
    """delta >= frobenius(weights) for regular pairs without units or cones."""
    return _run_claim("conjecture-regular", bounds, workers=workers)


def verify_prop_regular(bounds: SearchBounds, workers: int | None = None) -> VerifyReport:
    """delta >= codim for regular pairs with weights > 1; gcd-one equality
    pairs must be of the form (6^s,1^(c-s); 2^s,3^s)."""
    return _run_claim("prop-regular", bounds, workers=workers)


def verify_lemma_qdiv(bounds: SearchBounds, q: int, workers: int | None = None) -> VerifyReport:
    """delta >= codim*q when q divides every entry; equality forces c = n+1."""
    if not is_prime(q):
        raise UsageError(f"q must be prime, got {q!r}")
    return _run_claim("lemma-qdiv", bounds, q=q, workers=workers)


def verify_nonvanishing(bounds: SearchBounds, workers: int | None = None) -> VerifyReport:
    """Fundamental linear systems are nonempty on Fano/Calabi-Yau families, and
    smooth ones satisfy the unit-count inequalities."""
    return _run_claim("nonvanishing", bounds, workers=workers)


def verify_hypersurface(bounds: SearchBounds, workers: int | None = None) -> VerifyReport:
    """Hypersurface amplitude inequality, Cartier nonvanishing, and base-point
    freeness of the adjoint systems in the Gorenstein case."""
    return _run_claim("hypersurface", bounds, workers=workers)


CLAIMS = {
    "conjecture-regular": verify_conjecture_regular,
    "prop-regular": verify_prop_regular,
    "lemma-qdiv": verify_lemma_qdiv,
    "nonvanishing": verify_nonvanishing,
    "hypersurface": verify_hypersurface,
}


# -- instance enumeration ----------------------------------------------------------


def _family_filters_requested(bounds: SearchBounds) -> list[str]:
    return [name for name in _FILTER_NAMES if getattr(bounds, name)]


def _pair_annotations(ds: tuple[int, ...], weights: tuple[int, ...]) -> dict:
    pair = Pair.of(ds, weights)
    return {
        "codim": len(ds),
        "delta": sum(ds) - sum(weights),
        "regular": is_regular(pair),
        "gcd_one": reduce(math.gcd, weights) == 1,
    }


def _family_annotations(family: WciFamily) -> dict:
    cone = is_linear_cone(family)
    space_wf = space_well_formed_cached(family.weights.expand())
    wf = bool(space_wf and wci_well_formed(family))
    qs = is_quasi_smooth(family) if not cone else None
    delta = canonical_degree(family)
    smooth = None
    if not cone and wf and qs:
        smooth = not any(_meets(family, W) for W, _g, _k in _gcd_subsets(family))
    kind = None
    if not cone and wf and qs:
        kind = "fano" if delta < 0 else ("calabi_yau" if delta == 0 else "general")
    return {
        "codim": family.codim,
        "delta": delta,
        "linear_cone": cone,
        "well_formed": wf,
        "quasi_smooth": qs,
        "smooth": smooth,
        "kind": kind,
    }


def _family_passes(bounds: SearchBounds, ann: dict, weights: tuple[int, ...]) -> bool:
    if bounds.exclude_linear_cones and ann["linear_cone"]:
        return False
    if bounds.require_well_formed and not ann["well_formed"]:
        return False
    if bounds.require_quasi_smooth and not ann["quasi_smooth"]:
        return False
    if bounds.require_smooth and not ann["smooth"]:
        return False
    if bounds.gcd_one_weights and reduce(math.gcd, weights) != 1:
        return False
    if bounds.require_fano or bounds.require_calabi_yau:
        wanted = set()
        if bounds.require_fano:
            wanted.add("fano")
        if bounds.require_calabi_yau:
            wanted.add("calabi_yau")
        if ann["kind"] not in wanted:
            return False
    return True


def enumerate_instances(bounds: SearchBounds, kind: str = "families") -> list[tuple[str, dict]]:
    """Canonical encodings with per-instance annotations, sorted by encoding.

    kind='pairs' streams bare degree/weight pairs (codim may be 0) annotated
    with the pair predicates; geometric filters are rejected.  kind='families'
    streams shape-valid families annotated with the geometric predicates, and
    the bounds filters drop non-matching instances.
    """
    if kind not in ("pairs", "families"):
        raise UsageError(f"kind must be 'pairs' or 'families', got {kind!r}")
    values = _weight_values(bounds.max_weight)
    num_degree_values = bounds.max_degree
    if kind == "pairs":
        geometric = [
            name
            for name in _family_filters_requested(bounds)
            if name != "gcd_one_weights"
        ]
        if geometric:
            raise UsageError(f"filters {geometric} apply only to kind='families'")
        estimate = _count_tuples(num_degree_values, 0, bounds.max_codim) * _count_tuples(
            len(values), 1, bounds.max_vars
        )
    else:
        estimate = _count_tuples(num_degree_values, 1, bounds.max_codim) * _count_tuples(
            len(values), 2, bounds.max_vars
        )
    ceiling = instance_ceiling()
    if estimate > ceiling:
        raise BoundsExceededError(estimate, ceiling)

    out: list[tuple[str, dict]] = []
    degree_values = list(range(bounds.max_degree, 0, -1))
    if kind == "pairs":
        for wlen in range(1, bounds.max_vars + 1):
            for weights in combinations_with_replacement(values, wlen):
                gcd_one = reduce(math.gcd, weights) == 1
                if bounds.gcd_one_weights and not gcd_one:
                    continue
                for c in range(0, bounds.max_codim + 1):
                    for ds in combinations_with_replacement(degree_values, c):
                        out.append((_pair_encoding(ds, weights), _pair_annotations(ds, weights)))
    else:
        for wlen in range(2, bounds.max_vars + 1):
            for weights in combinations_with_replacement(values, wlen):
                max_c = min(bounds.max_codim, wlen - 1)
                for c in range(1, max_c + 1):
                    for ds in combinations_with_replacement(degree_values, c):
                        family = WciFamily.of(ds, weights)
                        ann = _family_annotations(family)
                        if _family_passes(bounds, ann, weights):
                            out.append((family.encode(), ann))
    out.sort(key=lambda item: (item[0], ))
    return out
