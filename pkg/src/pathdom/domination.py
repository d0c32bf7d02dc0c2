"""The online domination procedure.

Vertices are revealed one at a time in the order given by a permutation;
a revealed vertex joins the dominating set exactly when none of its
neighbors is already in the set (a member dominates itself and all its
neighbors).  The final set is therefore always an independent dominating
set, and its size depends only on the graph and the revelation order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graphs import Graph


@dataclass(frozen=True)
class DominationOutcome:
    """Dominating set produced by one run, in insertion order."""

    chosen: tuple[int, ...]
    chosen_mask: tuple[bool, ...]  # index 0 unused

    @property
    def size(self) -> int:
        return len(self.chosen)

    @property
    def chosen_set(self) -> frozenset[int]:
        return frozenset(self.chosen)


def check_permutation(perm: Sequence[int], n: int | None = None) -> None:
    """Validate that perm is a bijection on {1, ..., len(perm)}.

    When n is given, the length must also equal n.  Raises ValueError on
    any violation.
    """
    if n is not None and len(perm) != n:
        raise ValueError(
            f"permutation length {len(perm)} does not match vertex count {n}"
        )
    m = len(perm)
    if m < 1:
        raise ValueError("a permutation must have length at least 1")
    seen = bytearray(m + 1)
    for v in perm:
        if not isinstance(v, (int, np.integer)) or not 1 <= v <= m or seen[v]:
            raise ValueError(f"not a permutation of 1..{m}: {tuple(perm)}")
        seen[v] = 1


def run_online_domination(graph: Graph, perm: Sequence[int]) -> DominationOutcome:
    """Reveal vertices in the order perm and grow the dominating set greedily."""
    check_permutation(perm, graph.n)
    adj = graph.adj
    in_set = bytearray(graph.n + 1)
    chosen: list[int] = []
    for v in perm:
        for u in adj[v]:
            if in_set[u]:
                break
        else:
            in_set[v] = 1
            chosen.append(v)
    return DominationOutcome(
        chosen=tuple(chosen), chosen_mask=tuple(bool(b) for b in in_set)
    )


def gamma(graph: Graph, perm: Sequence[int]) -> int:
    """Size of the dominating set produced for the given revelation order."""
    return run_online_domination(graph, perm).size


def is_independent_dominating(graph: Graph, vertex_set: Iterable[int]) -> bool:
    """True iff the set is independent and dominates every vertex."""
    members = set(vertex_set)
    for v in members:
        graph.check_vertex(v)
    for v in members:
        if any(u in members for u in graph.adj[v]):
            return False  # two adjacent members
    for v in graph.vertices:
        if v not in members and not any(u in members for u in graph.adj[v]):
            return False  # v is left undominated
    return True


def gamma_batch_path(n: int, perms: np.ndarray) -> np.ndarray:
    """Vectorized gamma over many revelation orders of the n-vertex path.

    perms must be an integer array of shape (k, n) whose rows are
    permutations of 1..n (not re-validated here).  Returns the k
    dominating-set sizes; row i matches gamma(path(n), perms[i]).
    """
    perms = np.asarray(perms, dtype=np.int64)
    if perms.ndim != 2 or perms.shape[1] != n:
        raise ValueError(f"expected shape (k, {n}), got {perms.shape}")
    k = perms.shape[0]
    # Row-major masks with one sentinel column on each side, so v-1 and v+1
    # never need boundary checks.
    mask = np.zeros(k * (n + 2), dtype=bool)
    row_offset = np.arange(k, dtype=np.int64) * (n + 2)
    sizes = np.zeros(k, dtype=np.int64)
    for i in range(n):
        pos = row_offset + perms[:, i]
        fresh = ~(mask[pos - 1] | mask[pos + 1])
        mask[pos[fresh]] = True
        sizes += fresh
    return sizes
