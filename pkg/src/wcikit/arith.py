"""Numerical semigroup arithmetic: representability, Frobenius numbers, Brauer
bounds, and weighted monomial counts.

Everything here is exact integer arithmetic.  Membership and count tables are
dense lists indexed by target value; the module keeps a small cache of
membership tables keyed by the distinct generator set because the geometric
layer asks the same representability questions for many families.
"""

from __future__ import annotations

import itertools
import math
import threading
from dataclasses import dataclass
from functools import reduce

from .errors import DomainError, UsageError

_MAX_FACTOR_INPUT = 10**6


def _check_positive(values, what: str) -> tuple[int, ...]:
    vals = tuple(values)
    if not vals:
        raise UsageError(f"{what} must be nonempty")
    for v in vals:
        if not isinstance(v, int) or v < 1:
            raise UsageError(f"{what} must be positive integers, got {v!r}")
    return vals


def gcd_many(values) -> int:
    """gcd of a nonempty list of positive integers."""
    return reduce(math.gcd, _check_positive(values, "values"))


def lcm_many(values) -> int:
    """lcm of a nonempty list of positive integers."""
    return reduce(math.lcm, _check_positive(values, "values"))


def is_prime(n: int) -> bool:
    """Trial-division primality test; inputs in this domain are small."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int, ceiling: int = _MAX_FACTOR_INPUT) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs, trial division.

    Inputs beyond `ceiling` are refused rather than silently taking minutes.
    """
    if not isinstance(n, int) or n < 1:
        raise UsageError(f"factorize expects a positive integer, got {n!r}")
    if n > ceiling:
        raise UsageError(f"factorize input {n} exceeds ceiling {ceiling}")
    out: list[tuple[int, int]] = []
    rest = n
    for p in itertools.chain((2,), itertools.count(3, 2)):
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            out.append((p, e))
    if rest > 1:
        out.append((rest, 1))
    return out


# -- membership tables -------------------------------------------------------

# Keys are sorted distinct generator tuples; values are dense boolean tables
# that only ever grow.  The lock serializes growth; readers that see a stale,
# shorter table simply re-enter under the lock.
_membership_cache: dict[tuple[int, ...], list[bool]] = {}
_membership_lock = threading.Lock()


def _membership(generators: tuple[int, ...], bound: int) -> list[bool]:
    """Dense table t -> representable(t) for 0 <= t <= bound, cached.

    The recurrence membership[t] = OR over generators g <= t of
    membership[t-g] is order-free, so the table extends in place.
    """
    key = tuple(sorted(set(generators)))
    table = _membership_cache.get(key)
    if table is not None and len(table) > bound:
        return table
    with _membership_lock:
        table = _membership_cache.setdefault(key, [True])
        for t in range(len(table), bound + 1):
            table.append(any(t >= g and table[t - g] for g in key))
    return table


def representable(target: int, generators) -> bool:
    """True iff target is a nonnegative integer combination of the generators."""
    gens = _check_positive(generators, "generators")
    if not isinstance(target, int) or target < 0:
        raise UsageError(f"target must be a nonnegative integer, got {target!r}")
    return _membership(gens, target)[target]


def monomial_count(target: int, weights) -> int:
    """Number of monomials of weighted degree `target` in one variable per
    weight entry, i.e. the coefficient of x^target in prod 1/(1 - x^w_i).

    Repeated weights are distinct variables.  Negative targets give 0.
    """
    ws = _check_positive(weights, "weights")
    if target < 0:
        return 0
    counts = [0] * (target + 1)
    counts[0] = 1
    for w in ws:
        for t in range(w, target + 1):
            counts[t] += counts[t - w]
    return counts[target]


@dataclass(frozen=True)
class SemigroupTable:
    """Dense membership (and optionally count) table for a generating set."""

    generators: tuple[int, ...]
    bound: int
    membership: tuple[bool, ...]
    counts: tuple[int, ...] | None = None

    @classmethod
    def build(cls, generators, bound: int, with_counts: bool = False) -> "SemigroupTable":
        gens = _check_positive(generators, "generators")
        if bound < 0:
            raise UsageError("bound must be nonnegative")
        member = tuple(_membership(gens, bound)[: bound + 1])
        counts = None
        if with_counts:
            # counts use every entry (variables), membership only distinct values
            arr = [0] * (bound + 1)
            arr[0] = 1
            for g in gens:
                for t in range(g, bound + 1):
                    arr[t] += arr[t - g]
            counts = tuple(arr)
        return cls(gens, bound, member, counts)

    def contains(self, target: int) -> bool:
        if not 0 <= target <= self.bound:
            raise UsageError(f"target {target} outside table bound {self.bound}")
        return self.membership[target]

    def gaps(self) -> tuple[int, ...]:
        """Non-representable targets within the table bound."""
        return tuple(t for t, m in enumerate(self.membership) if not m)


def brauer_bound(generators) -> int:
    """Order-sensitive bound: every integer above it is representable.

    With g_j = gcd(a_0..a_j) this is sum_{j>=1} a_j * g_{j-1}/g_j - sum a_i;
    it depends on the ordering of the generators as given.
    """
    gens = _check_positive(generators, "generators")
    if gcd_many(gens) != 1:
        raise DomainError("Brauer bound requires generators with gcd 1")
    g = gens[0]
    total = 0
    for a in gens[1:]:
        g_next = math.gcd(g, a)
        total += a * (g // g_next)
        g = g_next
    return total - sum(gens)


def brauer_bound_min(generators) -> int:
    """Minimum Brauer bound over all orderings; exhaustive for <= 8 entries."""
    gens = _check_positive(generators, "generators")
    if len(gens) > 8:
        raise UsageError("brauer_bound_min is exhaustive only up to 8 entries")
    if gcd_many(gens) != 1:
        raise DomainError("Brauer bound requires generators with gcd 1")
    return min(brauer_bound(p) for p in set(itertools.permutations(gens)))


def _frobenius_scan_bound(gens: tuple[int, ...]) -> int:
    """A provable upper bound for the Frobenius number of a gcd-1 set.

    For a coprime pair (a, b) the classical value ab - a - b bounds the whole
    set (extra generators only shrink the Frobenius number); sets with no
    coprime pair (e.g. {6, 10, 15}) fall back on the Brauer bound, which is
    valid for any ordering.
    """
    best = brauer_bound(tuple(sorted(gens)))
    for a, b in itertools.combinations(sorted(set(gens)), 2):
        if math.gcd(a, b) == 1:
            best = min(best, a * b - a - b)
    return max(best, 0)


def frobenius(generators) -> int:
    """Largest integer not representable by the generators; -1 if none.

    Undefined (DomainError) when the generators have a common factor.
    """
    gens = _check_positive(generators, "generators")
    if gcd_many(gens) != 1:
        raise DomainError("Frobenius number undefined: generators share a factor")
    if 1 in gens:
        return -1
    bound = _frobenius_scan_bound(gens)
    table = _membership(gens, bound)
    for t in range(bound, -1, -1):
        if not table[t]:
            return t
    raise AssertionError("gcd-1 set without 1 must have a gap")
