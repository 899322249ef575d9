"""Immutable simple undirected graphs and their structural queries."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np


class GraphError(ValueError):
    """Raised for input that does not describe a simple graph."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency[i]`` is the sorted tuple of neighbours of vertex ``i``. Use
    :func:`from_edges` rather than the constructor for unchecked input.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency must list one neighbour set per vertex")
        for i, nbrs in enumerate(self.adjacency):
            for j in nbrs:
                if not 0 <= j < self.n:
                    raise GraphError(f"neighbour index {j} out of range")
                if j == i:
                    raise GraphError(f"loop at vertex {i}")
                if i not in self.adjacency[j]:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbours of {i} must be sorted and distinct")

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    @cached_property
    def m(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        return [(i, j) for i, nbrs in enumerate(self.adjacency) for j in nbrs if i < j]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self._neighbor_sets[i]

    @cached_property
    def _neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitsets (bit ``j`` set iff ``j`` is a neighbour)."""
        return tuple(sum(1 << j for j in nbrs) for nbrs in self.adjacency)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for i, nbrs in enumerate(self.adjacency):
            a[i, list(nbrs)] = 1.0
        return a

    def remove_edge(self, i: int, j: int) -> Graph:
        if not self.has_edge(i, j):
            raise GraphError(f"no edge ({i}, {j})")
        return from_edges(self.n, [e for e in self.edges() if e != (min(i, j), max(i, j))])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate and reversed pairs collapse."""
    if n < 1:
        raise GraphError("a graph needs at least one vertex")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge ({i}, {j}) has an index outside [0, {n})")
        if i == j:
            raise GraphError(f"loop edge at vertex {i}")
        nbrs[i].add(j)
        nbrs[j].add(i)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


@dataclass(frozen=True)
class StructureProfile:
    connected: bool
    component_count: int
    bipartite: bool
    diameter: int | None  # None when disconnected
    degree_sequence: tuple[int, ...]  # non-increasing
    distinct_degree_count: int
    regularity: str  # "regular", "semiregular" or "irregular"
    regular_degree: int | None = field(default=None)

    @property
    def irregular(self) -> bool:
        return self.distinct_degree_count >= 2


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [v for v, d in enumerate(bfs_distances(g, s)) if d >= 0]
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return min(bfs_distances(g, 0)) >= 0


def diameter(g: Graph) -> int | None:
    best = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if min(dist) < 0:
            return None
        best = max(best, max(dist))
    return best


def two_coloring(g: Graph) -> list[int] | None:
    """A proper 2-colouring certificate, or ``None`` if an odd cycle exists."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return color


def structure_profile(g: Graph) -> StructureProfile:
    comps = components(g)
    connected = len(comps) == 1
    degs = tuple(sorted(g.degrees, reverse=True))
    distinct = len(set(degs))
    if distinct == 1:
        regularity, r = "regular", degs[0]
    elif distinct == 2:
        regularity, r = "semiregular", None
    else:
        regularity, r = "irregular", None
    return StructureProfile(
        connected=connected,
        component_count=len(comps),
        bipartite=two_coloring(g) is not None,
        diameter=diameter(g) if connected else None,
        degree_sequence=degs,
        distinct_degree_count=distinct,
        regularity=regularity,
        regular_degree=r,
    )
