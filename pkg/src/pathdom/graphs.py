"""Graph families on vertex set {1, ..., n}.

Paths are labeled along the line, with edges (i, i+1).  Cycles close the
path with the extra edge (n, 1).  Stars and wheels put the hub last: a
star with k leaves has leaves 1..k and hub k+1, a wheel with k spokes has
rim cycle 1..k and hub k+1.  Complete multipartite graphs assign
consecutive labels part by part.  An explicit edge list covers everything
else, so one simulation engine serves every family.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Graph:
    """Undirected graph with 1-based vertex labels and sorted adjacency tuples."""

    family: str
    n: int
    adj: tuple[tuple[int, ...], ...]  # adj[0] is an unused placeholder

    def check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range for a {self.n}-vertex graph")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self.adj[v]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adj[v])

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.vertices for v in self.adj[u] if u < v]


def _build(family: str, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    neigh: list[set[int]] = [set() for _ in range(n + 1)]
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        neigh[u].add(v)
        neigh[v].add(u)
    return Graph(family=family, n=n, adj=tuple(tuple(sorted(s)) for s in neigh))


def path(n: int) -> Graph:
    """Path on n >= 1 vertices, edges (i, i+1)."""
    if n < 1:
        raise ValueError("a path needs at least 1 vertex")
    return _build("path", n, ((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, n)]
    edges.append((n, 1))
    return _build("cycle", n, edges)


def star(leaves: int) -> Graph:
    """Star with the given number of leaves; the hub is vertex leaves+1."""
    if leaves < 1:
        raise ValueError("a star needs at least 1 leaf")
    hub = leaves + 1
    return _build("star", hub, ((i, hub) for i in range(1, hub)))


def wheel(spokes: int) -> Graph:
    """Wheel: rim cycle 1..spokes plus hub spokes+1 joined to every rim vertex."""
    if spokes < 3:
        raise ValueError("a wheel needs at least 3 spokes")
    hub = spokes + 1
    edges = [(i, i + 1) for i in range(1, spokes)]
    edges.append((spokes, 1))
    edges.extend((i, hub) for i in range(1, hub))
    return _build("wheel", hub, edges)


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; parts take consecutive label blocks."""
    if not part_sizes:
        raise ValueError("at least one part is required")
    if any(p < 1 for p in part_sizes):
        raise ValueError("every part must have size >= 1")
    n = sum(part_sizes)
    part_of = []
    for idx, size in enumerate(part_sizes):
        part_of.extend([idx] * size)
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if part_of[u - 1] != part_of[v - 1]
    ]
    return _build("complete_multipartite", n, edges)


def explicit(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Arbitrary graph from an edge list; the escape hatch for everything else."""
    if n < 1:
        raise ValueError("a graph needs at least 1 vertex")
    return _build("explicit", n, edges)
