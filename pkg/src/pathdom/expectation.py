"""Exact expected dominating-set sizes, family by family.

Everything here is exact rational arithmetic unless a function name says
float.  The path expectation is computed two independent ways:

* a memoized recurrence on the first revealed vertex,
      E(n) = 1 + (2/n) * sum_{i=1}^{n-2} E(i),       E(n) = 0 for n <= 0,
* a closed form extracted from the ordinary generating function,
      E(n) = -(1/2) * sum_{j=0}^{n} (n+1-j) (-2)^j / j!  +  (n+1)/2.

The two must agree exactly for every n, and both must match the brute
force average at small n; the cycle, star, wheel and complete
multipartite expectations reduce to the path case or to direct weighting.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence

from .errors import DEFAULT_BRUTE_CAP, check_brute_cap
from .graphs import Graph

# Memoized recurrence table; index n, with a running prefix sum so that
# extending to N costs O(N) rational operations in total.
_values: list[Fraction] = [Fraction(0), Fraction(1)]
_prefix: list[Fraction] = [Fraction(0), Fraction(1)]


def _extend(n: int) -> None:
    while len(_values) <= n:
        m = len(_values)
        val = 1 + 2 * _prefix[m - 2] / m
        _values.append(val)
        _prefix.append(_prefix[-1] + val)


def expected_gamma_path(n: int) -> Fraction:
    """Expected dominating-set size on the n-vertex path, by recurrence.

    Returns 0 for n <= 0 (the empty-path convention used by the derived
    family formulas).
    """
    if n <= 0:
        return Fraction(0)
    _extend(n)
    return _values[n]


def expected_gamma_path_closed_form(n: int) -> Fraction:
    """Expected dominating-set size on the n-vertex path, by closed form.

    Evaluates the full alternating sum over a common denominator of n!,
    including its final j = n term.  Must equal expected_gamma_path(n)
    for every n >= 1.
    """
    if n < 1:
        raise ValueError("closed form requires n >= 1")
    n_fact = math.factorial(n)
    falling = n_fact  # n!/j! for the current j
    sign_pow = 1  # (-2)^j
    acc = 0
    for j in range(n + 1):
        acc += (n + 1 - j) * sign_pow * falling
        sign_pow *= -2
        if j < n:
            falling //= j + 1
    return Fraction((n + 1) * n_fact - acc, 2 * n_fact)


def expected_gamma_path_float(n: int) -> float:
    """Floating-point recurrence evaluation; O(n), usable far past exact range."""
    if n <= 0:
        return 0.0
    if n <= 2:
        return 1.0
    prev, curr = 1.0, 1.0  # values at m-2 and m-1
    acc = 0.0  # sum of values 1 .. m-3
    for m in range(3, n + 1):
        acc += prev
        prev, curr = curr, 1.0 + 2.0 * acc / m
    return curr


def expected_gamma_limit() -> float:
    """Limit of expected_gamma_path(n)/n: (e^2 - 1) / (2 e^2) = 0.4323..."""
    return 0.5 - 0.5 * math.exp(-2.0)


def expected_gamma_cycle(n: int) -> Fraction:
    """Cycle on n >= 3 vertices: the first pick always reduces to a path."""
    if n < 3:
        raise ValueError("cycle expectation requires n >= 3")
    return 1 + expected_gamma_path(n - 3)


def expected_gamma_star(leaves: int) -> Fraction:
    """Star with n >= 1 leaves: (n^2 + 1) / (n + 1).

    A first-revealed leaf forces every other leaf into the set; a
    first-revealed hub dominates everything.
    """
    if leaves < 1:
        raise ValueError("star expectation requires at least 1 leaf")
    return Fraction(leaves * leaves + 1, leaves + 1)


def expected_gamma_wheel(spokes: int, as_printed: bool = False) -> Fraction:
    """Wheel with n >= 3 spokes.

    Default form: (1 + n * (1 + E(P_{n-3}))) / (n + 1), validated against
    brute force.  With as_printed=True, returns the uncorrected variant
    1/(n+1) + n/(n+1) * E(P_{n-3}), which omits the rim vertex that the
    first reveal always adds; it is kept only for side-by-side reporting
    and disagrees with brute force.
    """
    if spokes < 3:
        raise ValueError("wheel expectation requires at least 3 spokes")
    rim_rest = expected_gamma_path(spokes - 3)
    if as_printed:
        return Fraction(1, spokes + 1) + Fraction(spokes, spokes + 1) * rim_rest
    return (1 + spokes * (1 + rim_rest)) / Fraction(spokes + 1)


def expected_gamma_complete_multipartite(part_sizes: Sequence[int]) -> Fraction:
    """Complete multipartite: the first pick's part must be taken entirely,
    so the answer is the size-weighted average (sum p_i^2) / (sum p_i)."""
    if not part_sizes:
        raise ValueError("at least one part is required")
    if any(p < 1 for p in part_sizes):
        raise ValueError("every part must have size >= 1")
    return Fraction(sum(p * p for p in part_sizes), sum(part_sizes))


def caro_wei_bound(graph: Graph) -> Fraction:
    """Degree-based lower bound on the expected size: sum_v 1/(1 + deg v).

    Each vertex revealed before all of its neighbors necessarily enters
    the set, and that event has probability 1/(1 + deg v).
    """
    return sum(
        (Fraction(1, 1 + len(graph.adj[v])) for v in graph.vertices),
        start=Fraction(0),
    )


def bruteforce_expected_gamma(
    graph: Graph, *, cap: int = DEFAULT_BRUTE_CAP, force: bool = False
) -> Fraction:
    """Average dominating-set size over all n! revelation orders, simulated.

    The independent oracle for every family formula above.
    """
    n = graph.n
    check_brute_cap(n, cap, force, "exhaustive expectation")
    adj = graph.adj
    in_set = bytearray(n + 1)
    total = 0
    for perm in itertools.permutations(range(1, n + 1)):
        size = 0
        for v in perm:
            for u in adj[v]:
                if in_set[u]:
                    break
            else:
                in_set[v] = 1
                size += 1
        total += size
        for v in perm:
            in_set[v] = 0
    return Fraction(total, math.factorial(n))
