"""Independent brute-force reference implementations used to validate the library.

Everything here works at the level of individual coordinates (index subsets of
{0..n}), with no value-class grouping and no search-space reductions, so that
agreement with the library exercises its maximal-subset reduction and its
selection search.
"""

from functools import lru_cache
from itertools import combinations
from math import gcd, lcm


# -- numerical semigroup ----------------------------------------------------------


@lru_cache(maxsize=None)
def representable(d: int, weights: tuple[int, ...]) -> bool:
    """Is d a nonnegative integer combination of the weights (plain recursion)?"""
    if d == 0:
        return True
    if d < 0 or not weights:
        return False
    head, rest = weights[0], weights[1:]
    t = d
    while t >= 0:
        if representable(t, rest):
            return True
        t -= head
    return False


@lru_cache(maxsize=None)
def monomial_count(d: int, weights: tuple[int, ...]) -> int:
    """Number of monomials of weighted degree d (plain recursion)."""
    if d == 0:
        return 1
    if d < 0 or not weights:
        return 0
    head, rest = weights[0], weights[1:]
    return sum(monomial_count(d - m * head, rest) for m in range(d // head + 1))


def frobenius(gens: list[int]) -> int:
    """Largest non-representable integer, by sieving until min(gens) hits in a row."""
    g = gcd(*gens) if len(gens) > 1 else gens[0]
    if g != 1:
        raise ValueError("generators must have gcd 1")
    if 1 in gens:
        return -1
    step = min(gens)
    limit = step * max(gens)  # safe restart ceiling; grown if the run is not found
    while True:
        reach = [False] * (limit + 1)
        reach[0] = True
        run, last_gap = 0, -1
        for i in range(1, limit + 1):
            if any(a <= i and reach[i - a] for a in gens):
                reach[i] = True
                run += 1
                if run == step:
                    return last_gap
            else:
                run, last_gap = 0, i
        limit *= 2


# -- pair regularity ---------------------------------------------------------------


def h_regular(degrees: tuple[int, ...], weights: tuple[int, ...], h: int) -> bool:
    """Every index subset I with gcd(a_i) > 1 divides h or |I| of the degrees."""
    n1 = len(weights)
    for k in range(1, n1 + 1):
        for idx in combinations(range(n1), k):
            g = gcd(*(weights[i] for i in idx))
            if g == 1 or h % g == 0:
                continue
            if sum(1 for d in degrees if d % g == 0) < k:
                return False
    return True


# -- quasi-smoothness over all index subsets ---------------------------------------


def _q2_subset(
    rest_avail: list[tuple[int, ...]], r: int, universe: tuple[int, ...]
) -> bool:
    """Can each remaining degree pick r distinct outside coordinates from its
    availability set so that every union over a sub-collection J has at least
    r + |J| - 1 coordinates?"""
    if any(len(av) < r for av in rest_avail):
        return False

    def extend(chosen: list[frozenset]) -> bool:
        t = len(chosen)
        if t == len(rest_avail):
            return True
        for pick in combinations(rest_avail[t], r):
            s = frozenset(pick)
            ok = True
            for size in range(1, t + 1):
                for js in combinations(range(t), size):
                    union = s.union(*(chosen[j] for j in js))
                    if len(union) < r + size:  # |J| = size + 1 including s
                        ok = False
                        break
                if not ok:
                    break
            if ok and extend(chosen + [s]):
                return True
        return False

    return extend([])


def quasi_smooth(degrees: tuple[int, ...], weights: tuple[int, ...]) -> bool:
    """Stratum-by-stratum smoothness test over every index subset of coordinates."""
    n1 = len(weights)
    c = len(degrees)
    if c == 0:
        return True
    for k in range(1, n1 + 1):
        for idx in combinations(range(n1), k):
            stratum = tuple(weights[i] for i in idx)
            rho = min(c, k)
            pure = [j for j in range(c) if representable(degrees[j], stratum)]
            if len(pure) >= rho:
                continue  # Q1
            outside = [e for e in range(n1) if e not in idx]
            found = False
            for l in range(min(len(pure), rho - 1) + 1):
                r = k - l
                for chosen_pure in combinations(pure, l):
                    rest = [j for j in range(c) if j not in chosen_pure]
                    avail = [
                        tuple(
                            e
                            for e in outside
                            if degrees[j] >= weights[e]
                            and representable(degrees[j] - weights[e], stratum)
                        )
                        for j in rest
                    ]
                    if _q2_subset(avail, r, tuple(outside)):
                        found = True
                        break
                if found:
                    break
            if not found:
                return False
    return True


# -- well-formedness, strata, fundamental index ------------------------------------


def _stratum_excess(degrees, stratum: tuple[int, ...]) -> tuple[int, bool]:
    """(number of degrees representable on the stratum, any with a single monomial)."""
    repr_count = 0
    single = False
    for d in degrees:
        if representable(d, stratum):
            repr_count += 1
            if monomial_count(d, stratum) == 1:
                single = True
    return repr_count, single


def stratum_meets(degrees, weights, idx: tuple[int, ...]) -> bool:
    """Does the coordinate stratum for idx intersect a general member?"""
    stratum = tuple(weights[i] for i in idx)
    repr_count, single = _stratum_excess(degrees, stratum)
    return (len(idx) - 1) - repr_count >= 0 and not single


def wci_well_formed(degrees: tuple[int, ...], weights: tuple[int, ...]) -> bool:
    """Every singular coordinate stratum misses X or meets it in codimension >= 2."""
    n1 = len(weights)
    dim_x = n1 - 1 - len(degrees)
    for k in range(1, n1 + 1):
        for idx in combinations(range(n1), k):
            g = gcd(*(weights[i] for i in idx))
            if g == 1:
                continue
            stratum = tuple(weights[i] for i in idx)
            repr_count, single = _stratum_excess(degrees, stratum)
            excess = (k - 1) - repr_count
            if excess < 0 or single:
                continue  # the stratum misses a general member
            if dim_x - excess < 2:
                return False
    return True


def fundamental_index(degrees: tuple[int, ...], weights: tuple[int, ...]) -> int:
    """lcm of the orders of singular strata meeting X where divisibility fails."""
    n1 = len(weights)
    out = 1
    for k in range(1, n1 + 1):
        for idx in combinations(range(n1), k):
            g = gcd(*(weights[i] for i in idx))
            if g == 1:
                continue
            if sum(1 for d in degrees if d % g == 0) >= k:
                continue
            if stratum_meets(degrees, weights, idx):
                out = lcm(out, g)
    return out


def is_smooth(degrees: tuple[int, ...], weights: tuple[int, ...]) -> bool:
    """Quasi-smooth and every singular stratum of the ambient space misses X."""
    if not quasi_smooth(degrees, weights):
        return False
    n1 = len(weights)
    for k in range(1, n1 + 1):
        for idx in combinations(range(n1), k):
            g = gcd(*(weights[i] for i in idx))
            if g > 1 and stratum_meets(degrees, weights, idx):
                return False
    return True


# -- Hilbert series -----------------------------------------------------------------


def h0(degrees: tuple[int, ...], weights: tuple[int, ...], k: int) -> int:
    """Coefficient of t^k in prod(1-t^d) / prod(1-t^a) by inclusion-exclusion."""
    total = 0
    for size in range(len(degrees) + 1):
        for sub in combinations(degrees, size):
            e = k - sum(sub)
            if e >= 0:
                total += (-1) ** size * monomial_count(e, tuple(weights))
    return total
