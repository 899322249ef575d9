"""Scalar graph invariants: degree statistics, Zagreb indices, clique number."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from aalpha.graph import Graph, structure_profile

log = logging.getLogger(__name__)

CLIQUE_WARN_ORDER = 64


@dataclass(frozen=True)
class InvariantSet:
    n: int
    m: int
    max_degree: int
    second_max_degree: int  # largest degree value below the maximum (maximum if regular)
    second_largest_degree: int  # d_2 of the non-increasing degree sequence
    min_degree: int
    mean_degree: float
    zagreb1: int
    zagreb2: int
    clique_number: int
    diameter: int | None
    connected: bool
    bipartite: bool
    irregular: bool
    degrees: tuple[int, ...]  # non-increasing

    @property
    def regular(self) -> bool:
        return not self.irregular

    def is_h_graph(self) -> bool:
        """True iff the graph has one universal vertex and all others share degree < n-1.

        This is the equality family of the second-degree bound (together with
        regular graphs). Structural check only, no isomorphism test.
        """
        n, d = self.n, self.degrees
        if n < 3 or not self.connected or d[0] != n - 1:
            return False
        rest = set(d[1:])
        return len(rest) == 1 and d[1] < n - 1


def second_max_degree(g: Graph) -> int:
    """Largest degree value strictly below the maximum; the maximum for regular graphs.

    Distinct values are compared, so with degrees (4, 4, 2, 2, ...) the answer is 2.
    """
    values = sorted(set(g.degrees), reverse=True)
    return values[1] if len(values) > 1 else values[0]


def second_largest_degree(g: Graph) -> int:
    """``d_2``: the second entry of the non-increasing degree sequence."""
    degs = sorted(g.degrees, reverse=True)
    return degs[1] if g.n > 1 else degs[0]


def zagreb_indices(g: Graph, p: float = 2) -> tuple[int, int, float]:
    """First, second and general first Zagreb indices ``(Z1, Z2, Z^(p))``."""
    if p in (0, 1):
        raise ValueError("the general Zagreb exponent must differ from 0 and 1")
    degs = g.degrees
    if p < 0 and 0 in degs:
        raise ValueError("negative exponent is undefined for a graph with an isolated vertex")
    z1 = sum(d * d for d in degs)
    z2 = sum(degs[i] * degs[j] for i, j in g.edges())
    zp = sum(d**p for d in degs)
    return z1, z2, zp


def degeneracy_order(g: Graph) -> list[int]:
    """Repeatedly remove a minimum-degree vertex (smallest index on ties)."""
    remaining = set(range(g.n))
    deg = list(g.degrees)
    order = []
    while remaining:
        v = min(remaining, key=lambda u: (deg[u], u))
        order.append(v)
        remaining.discard(v)
        for u in g.adjacency[v]:
            if u in remaining:
                deg[u] -= 1
    return order


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximum_clique(g: Graph) -> tuple[int, ...]:
    """A maximum clique, found by Bron-Kerbosch with pivoting over a degeneracy order."""
    if g.n > CLIQUE_WARN_ORDER:
        log.warning("exact clique search on %d vertices may take exponential time", g.n)
    nb = g.neighbor_masks
    best = 1 << 0
    best_size = 1

    def expand(r: int, size: int, p: int, x: int) -> None:
        nonlocal best, best_size
        if not p:
            if size > best_size:
                best, best_size = r, size
            return
        if size + p.bit_count() <= best_size:
            return
        pivot = max(_bits(p | x), key=lambda u: (p & nb[u]).bit_count())
        for v in _bits(p & ~nb[pivot]):
            bit = 1 << v
            expand(r | bit, size + 1, p & nb[v], x & nb[v])
            p &= ~bit
            x |= bit

    order = degeneracy_order(g)
    later = (1 << g.n) - 1
    earlier = 0
    for v in order:
        later &= ~(1 << v)
        expand(1 << v, 1, nb[v] & later, nb[v] & earlier)
        earlier |= 1 << v
    return tuple(_bits(best))


def clique_number(g: Graph) -> int:
    return len(maximum_clique(g))


def das_z1_lower(n: int, m: int, max_degree: int, min_degree: int) -> Fraction:
    """Lower bound ``D^2 + d^2 + (2m - D - d)^2 / (n - 2)`` on Z1, as an exact rational."""
    if n < 3:
        raise ValueError("the lower Zagreb bound needs n >= 3")
    rest = 2 * m - max_degree - min_degree
    return max_degree**2 + min_degree**2 + Fraction(rest * rest, n - 2)


def das_z1_upper(n: int, m: int, min_degree: int) -> int:
    """Upper bound ``2mn - n(n-1)d + 2m(d-1)`` on Z1 for connected graphs."""
    return 2 * m * n - n * (n - 1) * min_degree + 2 * m * (min_degree - 1)


def compute_invariants(g: Graph) -> InvariantSet:
    prof = structure_profile(g)
    z1, z2, _ = zagreb_indices(g)
    degs = prof.degree_sequence
    return InvariantSet(
        n=g.n,
        m=g.m,
        max_degree=degs[0],
        second_max_degree=second_max_degree(g),
        second_largest_degree=second_largest_degree(g),
        min_degree=degs[-1],
        mean_degree=2 * g.m / g.n,
        zagreb1=z1,
        zagreb2=z2,
        clique_number=clique_number(g),
        diameter=prof.diameter,
        connected=prof.connected,
        bipartite=prof.bipartite,
        irregular=prof.irregular,
        degrees=degs,
    )
