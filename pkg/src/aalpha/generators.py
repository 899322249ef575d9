"""Named graph families, seeded random graphs and exhaustive enumeration."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from aalpha.graph import Graph, GraphError, from_edges

MAX_ENUMERATION_ORDER = 7
_MASK64 = (1 << 64) - 1


def complete(n: int) -> Graph:
    return from_edges(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    """K_{1,n-1}: vertex 0 joined to the other ``n - 1`` vertices."""
    return from_edges(n, [(0, i) for i in range(1, n)])


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise GraphError("both sides of K_{p,q} need at least one vertex")
    return from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def circulant(n: int, offsets: Iterable[int]) -> Graph:
    offsets = sorted(set(offsets))
    if any(not 1 <= s <= n // 2 for s in offsets):
        raise GraphError(f"circulant offsets must lie in [1, {n // 2}]")
    return from_edges(n, [(i, (i + s) % n) for i in range(n) for s in offsets])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


NAMED = {
    "complete": complete,
    "star": star,
    "path": path,
    "cycle": cycle,
    "complete_bipartite": complete_bipartite,
    "circulant": circulant,
}


def generate_named(kind: str, *params) -> Graph:
    try:
        make = NAMED[kind]
    except KeyError:
        raise GraphError(f"unknown graph family {kind!r}") from None
    if kind != "circulant" and any(p < 1 for p in params):
        raise GraphError("graph orders must be positive")
    return make(*params)


def h_feasible(n: int, second_degree: int) -> bool:
    k = second_degree
    return 1 <= k < n - 1 and (k - 1) * (n - 1) % 2 == 0


def generate_h(n: int, second_degree: int) -> Graph:
    """One universal vertex (0) over a (second_degree - 1)-regular circulant on 1..n-1."""
    if not h_feasible(n, second_degree):
        raise GraphError(f"no H graph with n={n}, second degree {second_degree}")
    k = second_degree - 1
    rest = n - 1
    if k % 2 == 0:
        offsets = list(range(1, k // 2 + 1))
    else:
        offsets = list(range(1, (k - 1) // 2 + 1)) + [rest // 2]
    edges = [(0, i) for i in range(1, n)]
    edges += [(1 + i, 1 + (i + s) % rest) for i in range(rest) for s in offsets]
    return from_edges(n, edges)


def h_family(max_order: int) -> Iterator[tuple[int, int, Graph]]:
    for n in range(3, max_order + 1):
        for k in range(1, n - 1):
            if h_feasible(n, k):
                yield n, k, generate_h(n, k)


class SplitMix64:
    """The splitmix64 generator; a full-period 64-bit stream from any seed."""

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); pairs are drawn in (i, j), i < j, lexicographic order."""
    if not 0.0 <= p <= 1.0:
        raise GraphError("edge probability must lie in [0, 1]")
    rng = SplitMix64(seed)
    return from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def pair_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 column order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def connected_masks(n: int) -> np.ndarray:
    """Ascending edge bitmasks (bit k = k-th pair of :func:`pair_order`) of connected graphs."""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}")
    pairs = pair_order(n)
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    nbr = [np.zeros_like(masks) for _ in range(n)]
    for k, (i, j) in enumerate(pairs):
        bit = (masks >> k) & 1
        nbr[i] |= bit << j
        nbr[j] |= bit << i
    reach = np.ones_like(masks)
    for _ in range(n - 1):
        grown = reach.copy()
        for v in range(n):
            grown |= np.where((reach >> v) & 1, nbr[v], 0)
        reach = grown
    return masks[reach == (1 << n) - 1]


def graph_from_mask(n: int, mask: int) -> Graph:
    return from_edges(n, [e for k, e in enumerate(pair_order(n)) if mask >> k & 1])


def enumerate_connected(n: int) -> Iterator[Graph]:
    """All connected labelled graphs on ``n`` vertices in ascending bitmask order."""
    for mask in connected_masks(n):
        yield graph_from_mask(n, int(mask))
