"""Extremal revelation orders on the path: enumeration and counting.

A worst-case order drives the dominating set up to ceil(n/2) vertices, a
best-case order down to ceil(n/3).  Worst-case orders are counted three
independent ways (exhaustive simulation, a parity-split recurrence, and a
generating function in the series module), best-case orders two ways
(exhaustive simulation and residue-class closed formulas); every route
cross-checks the others.

The exhaustive census walks all n! orders once and tallies everything the
rest of the package needs from brute force: the full size distribution,
the realized worst-case sets with multiplicities, and capped witness
lists.  Orders are processed in lexicographic order, partitioned into
independent slabs by first revealed vertex, so worker count never changes
the merged result.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .domination import check_permutation, is_independent_dominating
from .errors import DEFAULT_BRUTE_CAP, check_brute_cap
from .graphs import path

DEFAULT_WITNESS_CAP = 100
SUBSET_SEARCH_CAP = 18


def max_dominating_size(n: int) -> int:
    """Largest size any revelation order can force on the n-path: ceil(n/2)."""
    if n < 1:
        raise ValueError("n must be positive")
    return (n + 1) // 2


def min_dominating_size(n: int) -> int:
    """Smallest size any revelation order can reach on the n-path: ceil(n/3)."""
    if n < 1:
        raise ValueError("n must be positive")
    return (n + 2) // 3


def odd_vertex_set(n: int) -> frozenset[int]:
    return frozenset(range(1, n + 1, 2))


def maximal_independent_dominating_sets(n: int) -> list[frozenset[int]]:
    """All size-maximal independent dominating sets of the n-path.

    Odd n admits a single such set, the odd vertices.  Even n admits
    n/2 + 1: the odd vertices, the even vertices, and the one-gap hybrids
    {1, 3, ..., 2j-1, 2j+2, 2j+4, ..., n} for j = 1 .. n/2 - 1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n % 2:
        return [odd_vertex_set(n)]
    sets = [odd_vertex_set(n), frozenset(range(2, n + 1, 2))]
    for j in range(1, n // 2):
        sets.append(
            frozenset(itertools.chain(range(1, 2 * j, 2), range(2 * j + 2, n + 1, 2)))
        )
    return sets


def independent_dominating_sets_bruteforce(
    n: int,
    size: int | None = None,
    *,
    cap: int = SUBSET_SEARCH_CAP,
    force: bool = False,
) -> list[frozenset[int]]:
    """Exhaustive 2^n subset search for independent dominating sets of the n-path."""
    if n < 1:
        raise ValueError("n must be positive")
    check_brute_cap(n, cap, force, "exhaustive subset search")
    graph = path(n)
    found = []
    for bits in range(1, 1 << n):
        if size is not None and bits.bit_count() != size:
            continue
        subset = frozenset(v for v in range(1, n + 1) if bits >> (v - 1) & 1)
        if is_independent_dominating(graph, subset):
            found.append(subset)
    return found


def set_first_order(vertex_set: Iterable[int], n: int) -> tuple[int, ...]:
    """Revelation order listing the set first (ascending), then the rest.

    Listing an independent dominating set first realizes exactly that set.
    """
    members = sorted(vertex_set)
    rest = sorted(set(range(1, n + 1)) - set(members))
    return tuple(members + rest)


# ---------------------------------------------------------------------------
# Exhaustive census
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PathCensus:
    """Tally of the online procedure over every revelation order of the n-path."""

    n: int
    size_counts: tuple[int, ...]  # index = dominating-set size
    worst_set_counts: dict[frozenset[int], int]  # realized worst-case sets
    worst_witnesses: tuple[tuple[int, ...], ...]
    best_witnesses: tuple[tuple[int, ...], ...]

    @property
    def total(self) -> int:
        return sum(self.size_counts)

    @property
    def worst_size(self) -> int:
        return max_dominating_size(self.n)

    @property
    def best_size(self) -> int:
        return min_dominating_size(self.n)

    @property
    def worst_count(self) -> int:
        return self.size_counts[self.worst_size]

    @property
    def best_count(self) -> int:
        return self.size_counts[self.best_size]

    @property
    def odd_configuration_count(self) -> int:
        """Orders whose final set is exactly the odd vertices."""
        return self.worst_set_counts.get(odd_vertex_set(self.n), 0)

    @property
    def expectation(self) -> Fraction:
        weighted = sum(size * count for size, count in enumerate(self.size_counts))
        return Fraction(weighted, math.factorial(self.n))

    def distribution(self) -> dict[int, int]:
        return {size: c for size, c in enumerate(self.size_counts) if c}


def _census_block(
    args: tuple[int, tuple[int, ...], int],
) -> tuple[list[int], dict[bytes, int], list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Census over the lexicographic slab of orders starting with `firsts`."""
    n, firsts, witness_cap = args
    worst = (n + 1) // 2
    best = (n + 2) // 3
    size_counts = [0] * (worst + 1)
    worst_sets: Counter[bytes] = Counter()
    worst_wit: list[tuple[int, ...]] = []
    best_wit: list[tuple[int, ...]] = []
    # One sentinel byte on each side; v-1 / v+1 never go out of range.
    mask = bytearray(n + 2)
    permutations = itertools.permutations
    for first in firsts:
        rest_pool = [v for v in range(1, n + 1) if v != first]
        for rest in permutations(rest_pool):
            mask[first] = 1  # the first reveal always joins the set
            size = 1
            for v in rest:
                if not (mask[v - 1] or mask[v + 1]):
                    mask[v] = 1
                    size += 1
            size_counts[size] += 1
            if size == worst:
                worst_sets[bytes(mask)] += 1
                if len(worst_wit) < witness_cap:
                    worst_wit.append((first,) + rest)
            if size == best and len(best_wit) < witness_cap:
                best_wit.append((first,) + rest)
            mask[first] = 0
            for v in rest:
                mask[v] = 0
    return size_counts, dict(worst_sets), worst_wit, best_wit


def path_census(
    n: int,
    *,
    cap: int = DEFAULT_BRUTE_CAP,
    force: bool = False,
    workers: int = 1,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> PathCensus:
    """Simulate every one of the n! revelation orders of the n-path."""
    if n < 1:
        raise ValueError("n must be positive")
    check_brute_cap(n, cap, force, "exhaustive census")
    blocks = [(n, (first,), witness_cap) for first in range(1, n + 1)]
    if workers > 1 and n >= 8:
        with ProcessPoolExecutor(max_workers=min(workers, len(blocks))) as pool:
            results = list(pool.map(_census_block, blocks))
    else:
        results = [_census_block(block) for block in blocks]

    size_counts = [0] * (max_dominating_size(n) + 1)
    mask_counts: Counter[bytes] = Counter()
    worst_wit: list[tuple[int, ...]] = []
    best_wit: list[tuple[int, ...]] = []
    for counts, sets, ww, bw in results:
        for size, c in enumerate(counts):
            size_counts[size] += c
        mask_counts.update(sets)
        worst_wit.extend(ww)
        best_wit.extend(bw)
    worst_set_counts = {
        frozenset(v for v in range(1, n + 1) if key[v]): c
        for key, c in mask_counts.items()
    }
    return PathCensus(
        n=n,
        size_counts=tuple(size_counts),
        worst_set_counts=worst_set_counts,
        worst_witnesses=tuple(worst_wit[:witness_cap]),
        best_witnesses=tuple(best_wit[:witness_cap]),
    )


@dataclass(frozen=True)
class ExtremalReport:
    """Result of one extremal count: how many orders hit the bound, and how."""

    n: int
    bound_kind: str  # "worst" | "best"
    extremal_size: int
    count: int
    method: str
    witnesses: tuple[tuple[int, ...], ...] = ()

    def to_json_dict(self, include_witnesses: bool = True) -> dict:
        out = {
            "n": self.n,
            "bound_kind": self.bound_kind,
            "extremal_size": self.extremal_size,
            "count": str(self.count),
            "method": self.method,
        }
        if include_witnesses and self.witnesses:
            out["witnesses"] = [list(w) for w in self.witnesses]
        return out


def count_extremal_bruteforce(
    n: int,
    bound_kind: str,
    *,
    cap: int = DEFAULT_BRUTE_CAP,
    force: bool = False,
    workers: int = 1,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    census: PathCensus | None = None,
) -> ExtremalReport:
    """Count extremal orders by running the procedure on every permutation."""
    if bound_kind not in ("worst", "best"):
        raise ValueError("bound_kind must be 'worst' or 'best'")
    if census is None or census.n != n:
        census = path_census(
            n, cap=cap, force=force, workers=workers, witness_cap=witness_cap
        )
    if bound_kind == "worst":
        size, count, wit = census.worst_size, census.worst_count, census.worst_witnesses
    else:
        size, count, wit = census.best_size, census.best_count, census.best_witnesses
    return ExtremalReport(
        n=n,
        bound_kind=bound_kind,
        extremal_size=size,
        count=count,
        method="brute_force",
        witnesses=wit[:witness_cap],
    )


def extremal_permutations(
    n: int,
    bound_kind: str,
    *,
    cap: int = DEFAULT_BRUTE_CAP,
    force: bool = False,
) -> list[tuple[int, ...]]:
    """Materialize every worst- or best-case order (memory scales with the count)."""
    if bound_kind == "worst":
        target = max_dominating_size(n)
    elif bound_kind == "best":
        target = min_dominating_size(n)
    else:
        raise ValueError("bound_kind must be 'worst' or 'best'")
    check_brute_cap(n, cap, force, "extremal order enumeration")
    out = []
    mask = bytearray(n + 2)
    for perm in itertools.permutations(range(1, n + 1)):
        size = 0
        for v in perm:
            if not (mask[v - 1] or mask[v + 1]):
                mask[v] = 1
                size += 1
        if size == target:
            out.append(perm)
        for v in perm:
            mask[v] = 0
    return out


def count_odd_configuration_bruteforce(
    n: int,
    *,
    cap: int = DEFAULT_BRUTE_CAP,
    force: bool = False,
    workers: int = 1,
    census: PathCensus | None = None,
) -> int:
    """Count orders whose final dominating set is exactly the odd vertices.

    The odd set always has size ceil(n/2), so the census worst-set tally
    already contains this count.
    """
    if census is None or census.n != n:
        census = path_census(n, cap=cap, force=force, workers=workers)
    return census.odd_configuration_count


# ---------------------------------------------------------------------------
# Recurrence and closed-formula counts
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def worst_case_count_recurrence(n: int) -> int:
    """Number of worst-case orders, by recurrence on the first revealed vertex.

    Seeds: 1 at n = 0 and n = 1.  For odd n only odd split points
    contribute (both remaining segments must have odd length); for even n
    every split point does.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 1:
        return 1
    comb = math.comb
    rec = worst_case_count_recurrence
    total = 2 * (n - 1) * rec(n - 2)
    if n % 2:
        inner = sum(
            comb(n - 3, i - 2) * rec(i - 2) * rec(n - i - 1)
            for i in range(3, n - 1, 2)
        )
    else:
        inner = sum(
            comb(n - 3, i - 2) * rec(i - 2) * rec(n - i - 1) for i in range(2, n)
        )
    return total + (n - 1) * (n - 2) * inner


def best_case_count_formula(n: int) -> int:
    """Number of best-case orders by the residue-class closed formulas.

    Applicable for n % 3 == 0 with n >= 3, n % 3 == 2 with n > 2, and
    n % 3 == 1 with n > 7; outside those ranges (n in {1, 2, 4, 7}) only
    exhaustive counting applies.
    """
    if n < 1:
        raise ValueError("n must be positive")
    comb, fact = math.comb, math.factorial
    residue = n % 3
    if residue == 0:
        # The unique best-case set is {2, 5, ..., n-1}; each of the n/3
        # triples independently needs its middle vertex revealed first.
        return fact(n) // 3 ** (n // 3)
    if residue == 2:
        if n <= 2:
            raise ValueError(
                "closed formula for n % 3 == 2 requires n > 2; "
                "use brute-force counting for n = 2"
            )
        block = 24 * comb(n, 5) * (fact(n - 5) // 3 ** ((n - 5) // 3)) * ((n - 2) // 3)
        ends = 2 * comb(n, 2) * (fact(n - 2) // 3 ** ((n - 2) // 3))
        return block + ends
    if n <= 7:
        raise ValueError(
            "closed formula for n % 3 == 1 requires n > 7; "
            "use brute-force counting for n in {1, 4, 7}"
        )
    k = (n - 4) // 3
    adjacent_pair = 720 * comb(n, 7) * k * (fact(n - 7) // 3 ** ((n - 7) // 3))
    split_pair = (
        24 * 24 * comb(10, 5) * comb(n, 10) * comb(k, 2)
        * (fact(n - 10) // 3 ** ((n - 10) // 3))
    )
    both_ends = 6 * comb(n, 4) * (fact(n - 4) // 3 ** ((n - 4) // 3))
    one_end = 2 * (
        9 * comb(n, 4) * (fact(n - 4) // 3 ** ((n - 4) // 3))
        + 24 * comb(n, 2) * comb(n - 2, 5)
        * (fact(n - 7) // 3 ** ((n - 7) // 3)) * k
    )
    return adjacent_pair + split_pair + both_ends + one_end


def best_case_formula_applicable(n: int) -> bool:
    if n < 1:
        return False
    residue = n % 3
    return residue == 0 or (residue == 2 and n > 2) or (residue == 1 and n > 7)


# ---------------------------------------------------------------------------
# Permutation combinatorics
# ---------------------------------------------------------------------------


def inverse(perm: Sequence[int]) -> tuple[int, ...]:
    """Inverse permutation: position of each value."""
    check_permutation(perm)
    inv = [0] * len(perm)
    for position, value in enumerate(perm, start=1):
        inv[value - 1] = position
    return tuple(inv)


def complement(perm: Sequence[int]) -> tuple[int, ...]:
    """Value complement: each entry v becomes n+1-v."""
    check_permutation(perm)
    n = len(perm)
    return tuple(n + 1 - v for v in perm)


def is_weakly_alternating(perm: Sequence[int]) -> bool:
    """True when every even position holds a weak peak.

    A weak peak at position i means at least one existing neighbor is
    smaller; at the right boundary of an even-length permutation only the
    left neighbor exists.
    """
    n = len(perm)
    for j in range(1, n, 2):  # 0-based indices of even positions
        here = perm[j]
        if perm[j - 1] < here:
            continue
        if j + 1 < n and perm[j + 1] < here:
            continue
        return False
    return True


def has_no_even_local_maxima(perm: Sequence[int]) -> bool:
    """True when no even position is a strict local maximum.

    A strict local maximum exceeds all of its existing neighbors; entries
    are distinct, so one larger neighbor is enough to clear a position.
    """
    n = len(perm)
    for j in range(1, n, 2):
        here = perm[j]
        if perm[j - 1] > here:
            continue
        if j + 1 < n and perm[j + 1] > here:
            continue
        return False
    return True


def _filtered_permutations(
    n: int, predicate: Callable[[tuple[int, ...]], bool]
) -> list[tuple[int, ...]]:
    return [
        perm
        for perm in itertools.permutations(range(1, n + 1))
        if predicate(perm)
    ]


def weakly_alternating_permutations(
    n: int, *, cap: int = DEFAULT_BRUTE_CAP, force: bool = False
) -> list[tuple[int, ...]]:
    if n < 1:
        raise ValueError("n must be positive")
    check_brute_cap(n, cap, force, "weak-alternation enumeration")
    return _filtered_permutations(n, is_weakly_alternating)


def count_weakly_alternating(
    n: int, *, cap: int = DEFAULT_BRUTE_CAP, force: bool = False
) -> int:
    """Count weakly alternating orders by explicit enumeration."""
    return len(weakly_alternating_permutations(n, cap=cap, force=force))


def count_no_even_local_maxima(
    n: int, *, cap: int = DEFAULT_BRUTE_CAP, force: bool = False
) -> int:
    """Count orders with no strict local maximum in any even position."""
    if n < 1:
        raise ValueError("n must be positive")
    check_brute_cap(n, cap, force, "local-maxima enumeration")
    return len(_filtered_permutations(n, has_no_even_local_maxima))
