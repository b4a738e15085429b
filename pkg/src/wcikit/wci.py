"""Weighted complete intersection families: well-formedness, quasi-smoothness,
smoothness, Cartier index of the hyperplane class, classification, base loci.

A family X_{d_1..d_c} in P(a_0..a_n) is encoded by its degree multiset and its
weight classes.  All predicates about the singular strata of the ambient space
reduce to distinct-value subsets W of the weights: within one value class the
coordinates are interchangeable, and for each W the maximal coordinate subset
(all coordinates carrying those values) is the binding case.  That reduction
is validated against an exhaustive all-index-subsets oracle in the test suite.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import combinations

from .arith import _membership, monomial_count
from .errors import DomainError, UsageError
from .pairs import Pair, _encode_run_length, parse_sides


@dataclass(frozen=True)
class WeightClasses:
    """Run-length form of a weight multiset: (value, multiplicity) descending."""

    classes: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.classes:
            raise UsageError("weights must be nonempty")
        last = None
        for v, m in self.classes:
            if v < 1 or m < 1:
                raise UsageError(f"bad weight class ({v}, {m})")
            if last is not None and v >= last:
                raise UsageError("weight classes must be strictly descending")
            last = v

    @classmethod
    def from_weights(cls, weights) -> "WeightClasses":
        counts = Counter(weights)
        if not counts:
            raise UsageError("weights must be nonempty")
        return cls(tuple(sorted(counts.items(), reverse=True)))

    def expand(self) -> tuple[int, ...]:
        out: list[int] = []
        for v, m in self.classes:
            out.extend([v] * m)
        return tuple(out)

    def values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.classes)

    def multiplicity(self, value: int) -> int:
        for v, m in self.classes:
            if v == value:
                return m
        return 0

    @property
    def total(self) -> int:
        return sum(m for _, m in self.classes)


@dataclass(frozen=True)
class WciFamily:
    """A complete intersection family: degrees (descending) and weight classes.

    Construction enforces codimension <= dimension of the ambient space, so
    every family has dim X = n - c >= 0; the pure pair calculus (pairs module)
    stays shape-free.
    """

    degrees: tuple[int, ...]
    weights: WeightClasses

    def __post_init__(self):
        if list(self.degrees) != sorted(self.degrees, reverse=True):
            raise UsageError("degrees must be sorted descending")
        for d in self.degrees:
            if d < 1:
                raise UsageError(f"degrees must be positive, got {d}")
        if len(self.degrees) > self.weights.total - 1:
            raise UsageError(
                f"codimension {len(self.degrees)} exceeds ambient dimension "
                f"{self.weights.total - 1}"
            )

    @classmethod
    def of(cls, degrees, weights) -> "WciFamily":
        ws = weights if isinstance(weights, WeightClasses) else WeightClasses.from_weights(weights)
        return cls(tuple(sorted(degrees, reverse=True)), ws)

    @classmethod
    def parse(cls, text: str) -> "WciFamily":
        degrees, weights = parse_sides(text)
        return cls.of(degrees, weights)

    def encode(self) -> str:
        return ",".join(map(str, self.degrees)) + "/" + _encode_run_length(self.weights.expand())

    def pair(self) -> Pair:
        return Pair(self.degrees, self.weights.expand())

    @property
    def codim(self) -> int:
        return len(self.degrees)

    @property
    def nvars(self) -> int:
        return self.weights.total

    @property
    def dim(self) -> int:
        return self.nvars - 1 - self.codim


# -- ambient space ------------------------------------------------------------


def space_well_formed(weights) -> bool:
    """True iff the gcd of any n of the n+1 weights is 1."""
    ws = weights if isinstance(weights, WeightClasses) else WeightClasses.from_weights(weights)
    if ws.total < 2:
        raise UsageError("well-formedness needs at least two weights")
    # dropping one coordinate only matters per value class
    for v, m in ws.classes:
        rest = [u for u, _ in ws.classes if u != v]
        if m > 1:
            rest.append(v)
        if not rest or reduce(math.gcd, rest) != 1:
            return False
    return True


def is_linear_cone(family: WciFamily) -> bool:
    """True iff some degree equals some weight."""
    values = set(family.weights.values())
    return any(d in values for d in family.degrees)


# -- stratum bookkeeping --------------------------------------------------------


def _repr_over(d: int, values: tuple[int, ...]) -> bool:
    """Representability of d over a distinct-value tuple (cached dense table)."""
    return _membership(values, d)[d]


def _value_subsets(values_asc: tuple[int, ...]):
    """Nonempty subsets of distinct values, ascending tuples in lex order."""
    chosen: list[int] = []

    def rec(start: int):
        for i in range(start, len(values_asc)):
            chosen.append(values_asc[i])
            yield tuple(chosen)
            yield from rec(i + 1)
            chosen.pop()

    yield from rec(0)


# -- Q2 selection search --------------------------------------------------------
#
# Q2 asks, for the degrees left over after l pure ones, for sets S_j of exactly
# r = k - l outside coordinates (drawn from the availability set E_j) with
# |union over j in J of S_j| >= r + |J| - 1 for every nonempty J.  Coordinates
# within a weight class are interchangeable, so a candidate selection is a
# vector over coverage types K (which subset of the degrees shares an element),
# with class capacities.  Writing z_K for the count of overlap types |K| >= 2,
# the union bounds become  sum_K (|K cap J| - 1) z_K <= (r-1)(|J| - 1),  and a
# profile is realizable iff the induced supplies fit the class capacities
# (a transportation feasibility, decided by max flow).  The search over z is
# exhaustive, so the decision is exact; the set-level union bound on the full
# E_j is only a necessary pre-filter (it is exact for |T| <= 1 and for
# identical availability masks, where the nested profile attains the bound).


def _transport_feasible(supplies: tuple[tuple[int, int], ...], mults: tuple[int, ...]) -> bool:
    """Can the supplies (class-bitmask, amount) be packed into class capacities?"""
    total = sum(a for _, a in supplies)
    if total == 0:
        return True
    S, p = len(supplies), len(mults)
    src, snk = 0, S + p + 1
    n = snk + 1
    cap = [[0] * n for _ in range(n)]
    for i, (mask, amount) in enumerate(supplies):
        cap[src][i + 1] = amount
        for b in range(p):
            if mask >> b & 1:
                cap[i + 1][S + 1 + b] = amount
    for b, m in enumerate(mults):
        cap[S + 1 + b][snk] = m
    flow = 0
    while flow < total:
        parent = [-1] * n
        parent[src] = src
        queue = [src]
        for u in queue:
            for v in range(n):
                if parent[v] < 0 and cap[u][v] > 0:
                    parent[v] = u
                    queue.append(v)
        if parent[snk] < 0:
            return False
        aug = total
        v = snk
        while v != src:
            aug = min(aug, cap[parent[v]][v])
            v = parent[v]
        v = snk
        while v != src:
            u = parent[v]
            cap[u][v] -= aug
            cap[v][u] += aug
            v = u
        flow += aug
    return True


@lru_cache(maxsize=100_000)
def _selection_exists(r: int, masks: tuple[int, ...], mults: tuple[int, ...]) -> bool:
    """Exact decision of the Q2 selection problem.

    masks[j] is the bitmask of weight classes available to the j-th leftover
    degree, mults the class multiplicities.  Exponential only in the number of
    leftover degrees (codimension bound), with memoization across strata.
    """
    t = len(masks)
    if t == 0:
        return True
    ones = [bin(J).count("1") for J in range(1 << t)]
    # necessary: union bound on the full availability sets
    for J in range(1, 1 << t):
        union = 0
        for j in range(t):
            if J >> j & 1:
                union |= masks[j]
        cap = sum(m for b, m in enumerate(mults) if union >> b & 1)
        if cap < r + ones[J] - 1:
            return False
    if t == 1 or all(m == masks[0] for m in masks):
        return True
    types = []
    for K in range(1, 1 << t):
        if ones[K] < 2:
            continue
        allowed = ~0
        for j in range(t):
            if K >> j & 1:
                allowed &= masks[j]
        if allowed:
            types.append((K, allowed))
    total_cap = sum(m for b, m in enumerate(mults))
    need_mass = r * t - total_cap  # overlap mass forced by scarce capacity
    max_mass = (r - 1) * (t - 1)
    if need_mass > max_mass:
        return False
    big_J = [J for J in range(1, 1 << t) if ones[J] >= 2]
    slack = {J: (r - 1) * (ones[J] - 1) for J in big_J}
    per_j = [r] * t
    z: dict[int, int] = {}
    descending = need_mass > 0

    def leaf() -> bool:
        supplies = [(allowed, z[K]) for (K, allowed) in types if z.get(K)]
        supplies += [(masks[j], per_j[j]) for j in range(t) if per_j[j]]
        return _transport_feasible(tuple(supplies), mults)

    def dfs(idx: int) -> bool:
        if idx == len(types):
            return leaf()
        K, _allowed = types[idx]
        cap = min(per_j[j] for j in range(t) if K >> j & 1)
        for J in big_J:
            w = ones[K & J] - 1
            if w > 0:
                cap = min(cap, slack[J] // w)
        order = range(cap, -1, -1) if descending else range(cap + 1)
        for zk in order:
            if zk:
                z[K] = zk
                for j in range(t):
                    if K >> j & 1:
                        per_j[j] -= zk
                for J in big_J:
                    w = ones[K & J] - 1
                    if w > 0:
                        slack[J] -= w * zk
            if dfs(idx + 1):
                return True
            if zk:
                del z[K]
                for j in range(t):
                    if K >> j & 1:
                        per_j[j] += zk
                for J in big_J:
                    w = ones[K & J] - 1
                    if w > 0:
                        slack[J] += w * zk
        return False

    return dfs(0)


# -- quasi-smoothness -----------------------------------------------------------


@dataclass(frozen=True)
class StratumCheck:
    """Outcome of the tangency conditions on one singular stratum class."""

    values: tuple[int, ...]
    k: int
    outcome: str  # "Q1" | "Q2" | "FAIL"
    witness: dict

    def as_dict(self) -> dict:
        return {
            "values": list(self.values),
            "k": self.k,
            "outcome": self.outcome,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class QsReport:
    verdict: bool
    strata: tuple[StratumCheck, ...]

    def as_dict(self) -> dict:
        return {"verdict": self.verdict, "strata": [s.as_dict() for s in self.strata]}


def _pure_choices(value_counts: list[tuple[int, int]], l: int):
    """Ways to take l elements from value classes, as count vectors."""
    if l == 0:
        yield ()
        return
    if not value_counts:
        return
    v, m = value_counts[0]
    for take in range(min(l, m), -1, -1):
        for rest in _pure_choices(value_counts[1:], l - take):
            yield ((v, take),) + rest if take else rest


def _stratum_outcome(family: WciFamily, W: tuple[int, ...], detailed: bool):
    """Classify one distinct-value stratum as Q1 / Q2 / FAIL."""
    degrees = family.degrees
    c = len(degrees)
    k = sum(family.weights.multiplicity(v) for v in W)
    rho = min(c, k)
    pure = [j for j, d in enumerate(degrees) if _repr_over(d, W)]
    if len(pure) >= rho:
        return "Q1", ({"degrees": [degrees[j] for j in pure[:rho]]} if detailed else {})

    outside = [(v, m) for v, m in family.weights.classes if v not in W]
    mults = tuple(m for _, m in outside)

    def avail_mask(d: int) -> int:
        mask = 0
        for b, (v, _m) in enumerate(outside):
            if d >= v and _repr_over(d - v, W):
                mask |= 1 << b
        return mask

    mask_of = {d: avail_mask(d) for d in set(degrees)}
    pure_counts = list(Counter(degrees[j] for j in pure).items())

    for l in range(min(rho - 1, len(pure)), -1, -1):
        r = k - l
        for choice in _pure_choices(pure_counts, l):
            taken = Counter(dict(choice))
            leftover: list[int] = []
            for d in degrees:
                if taken.get(d, 0) > 0 and _repr_over(d, W):
                    taken[d] -= 1
                else:
                    leftover.append(d)
            masks = tuple(sorted(mask_of[d] for d in leftover))
            if masks and masks[0] == 0:
                continue
            if _selection_exists(r, masks, mults):
                if not detailed:
                    return "Q2", {}
                witness = {
                    "l": l,
                    "pure_degrees": sorted(
                        (v for v, n in choice for _ in range(n)), reverse=True
                    ),
                    "availability": [
                        {
                            "degree": d,
                            "classes": [v for b, (v, _m) in enumerate(outside) if mask_of[d] >> b & 1],
                        }
                        for d in sorted(set(leftover), reverse=True)
                    ],
                }
                return "Q2", witness
    if not detailed:
        return "FAIL", {}
    return "FAIL", _fail_diagnosis(degrees, W, k, rho, pure, mask_of, outside, mults)


def _fail_diagnosis(degrees, W, k, rho, pure, mask_of, outside, mults) -> dict:
    """Describe why neither condition holds, from the most favorable attempt."""
    diag = {"rho": rho, "representable": len(pure)}
    l = min(rho - 1, len(pure))
    r = k - l
    leftover = [d for j, d in enumerate(degrees) if j not in set(pure[:l])]
    starved = [d for d in leftover if mask_of[d] == 0]
    if starved:
        diag["q2"] = {"reason": "no availability", "degree": max(starved), "r": r}
        return diag
    # first violated set-level union bound, if any
    t = len(leftover)
    for size in range(1, t + 1):
        for sub in combinations(range(t), size):
            union = 0
            for j in sub:
                union |= mask_of[leftover[j]]
            cap = sum(m for b, m in enumerate(mults) if union >> b & 1)
            if cap < r + size - 1:
                diag["q2"] = {
                    "reason": "union bound",
                    "degrees": sorted((leftover[j] for j in sub), reverse=True),
                    "available": cap,
                    "required": r + size - 1,
                }
                return diag
    diag["q2"] = {"reason": "no feasible selection", "r": r}
    return diag


def quasi_smooth(family: WciFamily) -> QsReport:
    """Tangency criterion for the general member over every singular stratum
    class; verdict true iff no stratum fails.  Linear cones are rejected."""
    if is_linear_cone(family):
        raise DomainError("quasi-smoothness undefined for a linear cone")
    if family.codim == 0:
        return QsReport(True, ())
    values_asc = tuple(sorted(family.weights.values()))
    strata = []
    verdict = True
    for W in _value_subsets(values_asc):
        outcome, witness = _stratum_outcome(family, W, detailed=True)
        k = sum(family.weights.multiplicity(v) for v in W)
        strata.append(StratumCheck(W, k, outcome, witness))
        if outcome == "FAIL":
            verdict = False
    return QsReport(verdict, tuple(strata))


def is_quasi_smooth(family: WciFamily) -> bool:
    """Verdict-only fast path of quasi_smooth."""
    if is_linear_cone(family):
        raise DomainError("quasi-smoothness undefined for a linear cone")
    if family.codim == 0:
        return True
    values_asc = tuple(sorted(family.weights.values()))
    for W in _value_subsets(values_asc):
        if W[0] == 1:
            continue  # a unit weight represents every degree, so Q1 holds
        if _stratum_outcome(family, W, detailed=False)[0] == "FAIL":
            return False
    return True


# -- well-formedness of the intersection ---------------------------------------


def _gcd_subsets(family: WciFamily):
    """Value subsets with gcd > 1, with (subset, gcd, k) per item, lex order."""
    values_asc = tuple(sorted(family.weights.values()))
    for W in _value_subsets(values_asc):
        g = reduce(math.gcd, W)
        if g > 1:
            k = sum(family.weights.multiplicity(v) for v in W)
            yield W, g, k


def _stratum_profile(family: WciFamily, W: tuple[int, ...]):
    """(k, representable degree list) for the maximal stratum of W."""
    k = sum(family.weights.multiplicity(v) for v in W)
    rep = [d for d in family.degrees if _repr_over(d, W)]
    return k, rep


def _meets(family: WciFamily, W: tuple[int, ...]) -> bool:
    k, rep = _stratum_profile(family, W)
    if (k - 1) - len(rep) < 0:
        return False
    stratum_weights = [v for v, m in family.weights.classes if v in W for _ in range(m)]
    return all(monomial_count(d, stratum_weights) >= 2 for d in rep)


def wci_well_formed(family: WciFamily) -> bool:
    """True iff the general member misses every singular stratum in codimension
    at least 2; empty intersections pass vacuously."""
    if not space_well_formed(family.weights):
        raise DomainError("ambient space is not well formed")
    dim_x = family.dim
    for W, _g, k in _gcd_subsets(family):
        rep = [d for d in family.degrees if _repr_over(d, W)]
        excess = (k - 1) - len(rep)
        if excess < 0:
            continue
        stratum_weights = [v for v, m in family.weights.classes if v in W for _ in range(m)]
        if any(monomial_count(d, stratum_weights) == 1 for d in rep):
            continue
        if dim_x - excess < 2:
            return False
    return True


def stratum_meets(family: WciFamily, value_subset) -> bool:
    """Does a general member meet the open stratum of these weight values?

    Degrees not representable over the values restrict to zero and impose no
    condition; representable degrees each cut the dimension by one, and a
    single-monomial restriction empties the intersection.
    """
    W = tuple(sorted(set(value_subset)))
    if not W:
        raise UsageError("value subset must be nonempty")
    known = set(family.weights.values())
    for v in W:
        if v not in known:
            raise UsageError(f"value {v} is not a weight of this family")
    return _meets(family, W)


# -- geometric gatekeeping ------------------------------------------------------


@lru_cache(maxsize=65536)
def _geometry(family: WciFamily) -> tuple[bool, bool, bool | None, bool | None]:
    """(linear_cone, space_wf, wci_wf, quasi_smooth) with None for undefined."""
    cone = is_linear_cone(family)
    space_wf = family.nvars >= 2 and space_well_formed(family.weights)
    wf = wci_well_formed(family) if space_wf else None
    qs = is_quasi_smooth(family) if not cone else None
    return cone, space_wf, wf, qs


def _require_geometric(family: WciFamily, op: str):
    cone, space_wf, wf, qs = _geometry(family)
    if cone:
        raise DomainError(f"{op}: family is a linear cone")
    if not space_wf:
        raise DomainError(f"{op}: ambient space is not well formed")
    if not wf:
        raise DomainError(f"{op}: family is not well formed")
    if not qs:
        raise DomainError(f"{op}: family is not quasi-smooth")


# -- index, classification, smoothness ------------------------------------------


@dataclass(frozen=True)
class IndexStratum:
    values: tuple[int, ...]
    gcd: int
    meets: bool
    condition_i_holds: bool

    def as_dict(self) -> dict:
        return {
            "values": list(self.values),
            "gcd": self.gcd,
            "meets": self.meets,
            "condition_i_holds": self.condition_i_holds,
        }


@dataclass(frozen=True)
class IndexReport:
    """Smallest h with O_X(h) Cartier, modeled as the lcm of stratum gcds over
    strata that meet a general member and fail the divisibility condition."""

    index: int
    contributors: tuple[IndexStratum, ...]

    def as_dict(self) -> dict:
        return {"index": self.index, "contributors": [s.as_dict() for s in self.contributors]}


def _index_value(family: WciFamily) -> int:
    """The lcm of stratum gcds over met strata failing divisibility; no gate."""
    index = 1
    for W, g, k in _gcd_subsets(family):
        if sum(1 for d in family.degrees if d % g == 0) < k and _meets(family, W):
            index = math.lcm(index, g)
    return index


def fundamental_index(family: WciFamily) -> IndexReport:
    """Cartier index of the hyperplane class on a general member."""
    _require_geometric(family, "fundamental_index")
    index = 1
    contributors = []
    for W, g, k in _gcd_subsets(family):
        cond_i = sum(1 for d in family.degrees if d % g == 0) >= k
        meets = _meets(family, W)
        contributors.append(IndexStratum(W, g, meets, cond_i))
        if meets and not cond_i:
            index = math.lcm(index, g)
    return IndexReport(index, tuple(contributors))


def canonical_degree(family: WciFamily) -> int:
    """Degree of the canonical class: sum of degrees minus sum of weights."""
    return sum(family.degrees) - sum(family.weights.expand())


@dataclass(frozen=True)
class Classification:
    kind: str  # "fano" | "calabi_yau" | "general"
    delta: int
    fano_index: int | None

    def as_dict(self) -> dict:
        return {"kind": self.kind, "delta": self.delta, "fano_index": self.fano_index}


def classify(family: WciFamily) -> Classification:
    """Fano / Calabi-Yau / general type by the sign of the canonical degree."""
    if family.codim == 0:
        raise DomainError("classify: the ambient space itself is not classified")
    _require_geometric(family, "classify")
    d = canonical_degree(family)
    if d < 0:
        return Classification("fano", d, -d)
    if d == 0:
        return Classification("calabi_yau", d, None)
    return Classification("general", d, None)


def is_smooth(family: WciFamily) -> bool:
    """True iff a general member misses every singular stratum of the space."""
    _require_geometric(family, "is_smooth")
    return all(not _meets(family, W) for W, _g, _k in _gcd_subsets(family))


# -- base locus ------------------------------------------------------------------


@dataclass(frozen=True)
class BaseLocusComponent:
    values: tuple[int, ...]
    family: WciFamily

    def as_dict(self) -> dict:
        return {"values": list(self.values), "family": self.family.encode()}


def base_locus(family: WciFamily, ell: int) -> list[BaseLocusComponent]:
    """Components of the base locus of |O_X(ell)| on a general member.

    A stratum lies in the base locus iff no monomial of degree ell exists in
    its variables; reported are the inclusion-maximal value subsets among
    those whose stratum the general member actually meets, each with the
    induced intersection family on the stratum.  Empty list means the class
    is base-point free.
    """
    if not isinstance(ell, int) or ell < 1:
        raise UsageError(f"ell must be a positive integer, got {ell!r}")
    _require_geometric(family, "base_locus")
    values_asc = tuple(sorted(family.weights.values()))
    hits = [
        W
        for W in _value_subsets(values_asc)
        if not _repr_over(ell, W) and _meets(family, W)
    ]
    components = []
    for W in hits:
        sw = set(W)
        if any(sw < set(W2) for W2 in hits):
            continue
        degrees = [d for d in family.degrees if _repr_over(d, W)]
        classes = WeightClasses(tuple((v, m) for v, m in family.weights.classes if v in sw))
        components.append(BaseLocusComponent(W, WciFamily.of(degrees, classes)))
    return components


def augment(family: WciFamily, ell: int) -> WciFamily:
    """Family of general degree-ell divisors inside the family's members."""
    if not isinstance(ell, int) or ell < 1:
        raise UsageError(f"ell must be a positive integer, got {ell!r}")
    return WciFamily.of(family.degrees + (ell,), family.weights)
