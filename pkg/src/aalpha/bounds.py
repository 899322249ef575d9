"""Evaluators for the A_alpha eigenvalue bounds.

Each evaluator takes an :class:`InvariantSet` (plus alpha or a spectrum) and
returns a :class:`BoundReport`. ``gap`` is signed so that ``gap >= 0`` means
the bound holds; inapplicable inputs are reported, not raised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from aalpha.graph import Graph
from aalpha.invariants import InvariantSet, compute_invariants
from aalpha.spectra import Spectrum, check_alpha, spectrum

EQUALITY_RTOL = 1e-8
# Tolerated round-off below zero in a radicand, relative to the magnitude of its terms.
RADICAND_RTOL = 1e-12

BOUND_IDS = (
    "T31", "T32", "T33", "T34", "C35", "T36", "T37", "C38",
    "T39_LO", "T39_HI", "P210", "MEAN_LO",
)

UPPER_L1 = "upper-l1"
LOWER_L1 = "lower-l1"
LOWER_LN = "lower-ln"
UPPER_LN = "upper-ln"
SUM_L1_LN = "sum-l1+ln"
PER_INDEX = "per-index"


class BoundEvaluationError(ArithmeticError):
    """A bound formula produced a value outside its domain (e.g. negative radicand)."""


@dataclass(frozen=True, slots=True)
class BoundReport:
    bound_id: str
    side: str
    strict: bool
    applicable: bool
    bound_value: float = math.nan
    observed: float = math.nan
    gap: float = math.nan
    equality: bool = False
    reason: str = ""

    @property
    def holds(self) -> bool:
        return not self.applicable or self.gap >= 0


def _report(bound_id, side, strict, bound_value, observed) -> BoundReport:
    if side in (UPPER_L1, UPPER_LN, PER_INDEX):
        gap = bound_value - observed
    else:
        gap = observed - bound_value
    eq = abs(gap) <= EQUALITY_RTOL * max(1.0, abs(observed))
    return BoundReport(bound_id, side, strict, True, bound_value, observed, gap, eq)


def _skip(bound_id, side, strict, reason) -> BoundReport:
    return BoundReport(bound_id, side, strict, False, reason=reason)


def _sqrt(value: float, scale: float, what: str) -> float:
    if value < 0:
        if value >= -RADICAND_RTOL * max(1.0, scale):
            return 0.0
        raise BoundEvaluationError(f"negative radicand {value!r} in {what}")
    return math.sqrt(value)


def bound_t31(inv: InvariantSet, alpha: float, lambda1: float) -> BoundReport:
    """Diameter bound: ``l1 < D - (1-a)(nD-2m) / (n (diam (nD-2m) + 1))``."""
    alpha = check_alpha(alpha)
    if not inv.connected:
        return _skip("T31", UPPER_L1, True, "connected graph required")
    if not inv.irregular:
        return _skip("T31", UPPER_L1, True, "irregular graph required")
    if alpha >= 1.0:
        return _skip("T31", UPPER_L1, True, "alpha must be < 1")
    n, d = inv.n, inv.max_degree
    excess = n * d - 2 * inv.m
    value = d - (1 - alpha) * excess / (n * (inv.diameter * excess + 1))
    return _report("T31", UPPER_L1, True, value, lambda1)


def bound_t32(inv: InvariantSet, alpha: float, lambda1: float) -> BoundReport:
    """``l1 < D - (1-a) / (2n(nD-1) D^2)`` for connected irregular graphs."""
    alpha = check_alpha(alpha)
    if not inv.connected:
        return _skip("T32", UPPER_L1, True, "connected graph required")
    if not inv.irregular:
        return _skip("T32", UPPER_L1, True, "irregular graph required")
    if alpha >= 1.0:
        return _skip("T32", UPPER_L1, True, "alpha must be < 1")
    n, d = inv.n, inv.max_degree
    value = d - (1 - alpha) / (2 * n * (n * d - 1) * d * d)
    return _report("T32", UPPER_L1, True, value, lambda1)


def closed_form_lambda1_h(n: int, second_degree: int, alpha: float) -> float:
    """Largest A_alpha eigenvalue of the graph with one universal vertex and all
    other vertices of degree ``second_degree`` (the larger root of the 2x2
    quotient's characteristic polynomial)."""
    alpha = check_alpha(alpha)
    k = second_degree
    if not 1 <= k < n - 1:
        raise ValueError("need 1 <= second degree < n - 1")
    disc = (
        alpha**2 * n**2 + (k - 1) ** 2
        - 2 * alpha * ((n - 2) * k + 3 * n - 2)
        + 4 * (n - 1)
    )
    root = _sqrt(disc, alpha**2 * n**2 + (k - 1) ** 2 + 4 * n, "closed-form H eigenvalue")
    return (alpha * n + k - 1 + root) / 2


def t33_value(max_degree: int, second_degree: int, alpha: float) -> float:
    d, k = max_degree, second_degree
    rad = (
        alpha**2 * (d + 1) ** 2 + (k - 1) ** 2
        - 2 * alpha * ((d - 1) * k + 3 * d + 1)
        + 4 * d
    )
    root = _sqrt(rad, alpha**2 * (d + 1) ** 2 + (k - 1) ** 2 + 4 * d, "T33")
    return (alpha * (d + 1) + k - 1 + root) / 2


def bound_t33(inv: InvariantSet, alpha: float, lambda1: float) -> BoundReport:
    """Second-degree bound on ``l1``, evaluated with ``d_2`` of the degree sequence.

    With the distinct-value second maximum degree the inequality is false
    (the path P4 violates it for every alpha < 1), so the second entry of the
    sorted degree sequence is used. Equality holds exactly for regular graphs
    and the one-universal-vertex family, where both readings coincide.
    """
    alpha = check_alpha(alpha)
    if not inv.connected:
        return _skip("T33", UPPER_L1, False, "connected graph required")
    value = t33_value(inv.max_degree, inv.second_largest_degree, alpha)
    return _report("T33", UPPER_L1, False, value, lambda1)


def t34_radicand(n: int, m: int, z1: int, alpha):
    """Radicand of the T34 bound; exact when ``alpha`` is a Fraction."""
    a = alpha
    return (n - 1) * (a * a * (-4 * m * m + 2 * m * n + n * z1) - 4 * a * m * n + 2 * m * n)


def t34_value(n: int, m: int, z1: int, alpha: float) -> float:
    a = alpha
    scale = (n - 1) * (a * a * (4 * m * m + 2 * m * n + n * z1) + 4 * a * m * n + 2 * m * n)
    return (2 * a * m + _sqrt(t34_radicand(n, m, z1, a), scale, "T34")) / n


def bound_t34(inv: InvariantSet, alpha: float, lambda1: float) -> BoundReport:
    """Zagreb bound from the two trace identities; tight on complete graphs."""
    alpha = check_alpha(alpha)
    value = t34_value(inv.n, inv.m, inv.zagreb1, alpha)
    return _report("T34", UPPER_L1, False, value, lambda1)


def c35_radicand(n: int, m: int, min_degree: int, alpha):
    """Radicand of the C35 bound; exact when ``alpha`` is a Fraction."""
    a, d = alpha, min_degree
    return (n - 1) * (
        -4 * a * a * m * m + 2 * m * n * ((n + d) * a * a - 2 * a + 1) - n * n * a * a * (n - 1) * d
    )


def c35_value(n: int, m: int, min_degree: int, alpha: float) -> float:
    a, d = alpha, min_degree
    scale = (n - 1) * (
        4 * a * a * m * m + 2 * m * n * ((n + d) * a * a + 2 * a + 1) + n * n * a * a * (n - 1) * d
    )
    return (2 * a * m + _sqrt(c35_radicand(n, m, d, a), scale, "C35")) / n


def bound_c35(inv: InvariantSet, alpha: float, lambda1: float) -> BoundReport:
    """T34 with Z1 replaced by its upper bound for connected graphs."""
    alpha = check_alpha(alpha)
    if not inv.connected:
        return _skip("C35", UPPER_L1, False, "connected graph required")
    value = c35_value(inv.n, inv.m, inv.min_degree, alpha)
    return _report("C35", UPPER_L1, False, value, lambda1)


def bound_t36(inv: InvariantSet, alpha: float, lambda1: float) -> BoundReport:
    alpha = check_alpha(alpha)
    w = inv.clique_number
    value = alpha * inv.max_degree + (1 - alpha) * (1 - 1 / w) * inv.n
    return _report("T36", UPPER_L1, False, value, lambda1)


def bound_t37(inv: InvariantSet, alpha: float, lambda_n: float) -> BoundReport:
    alpha = check_alpha(alpha)
    if not inv.connected:
        return _skip("T37", LOWER_LN, False, "connected graph required")
    if inv.bipartite:
        return _skip("T37", LOWER_LN, False, "non-bipartite graph required")
    value = -inv.max_degree + (1 + alpha) / (inv.n * (inv.diameter + 1))
    return _report("T37", LOWER_LN, False, value, lambda_n)


def bound_c38(inv: InvariantSet, s: Spectrum) -> BoundReport:
    """``l1 + ln >= (1+a) / (n (diam+1))`` for connected non-bipartite regular graphs."""
    if not inv.connected:
        return _skip("C38", SUM_L1_LN, False, "connected graph required")
    if inv.irregular:
        return _skip("C38", SUM_L1_LN, False, "regular graph required")
    if inv.bipartite:
        return _skip("C38", SUM_L1_LN, False, "non-bipartite graph required")
    value = (1 + s.alpha) / (inv.n * (inv.diameter + 1))
    return _report("C38", SUM_L1_LN, False, value, s.largest + s.smallest)


def bound_t39(inv: InvariantSet, alpha: float, lambda_n: float) -> tuple[BoundReport, BoundReport]:
    """Clique-number bracket ``a*delta -/+ sqrt(2m(1-a)(1-1/w))`` around ``ln``."""
    alpha = check_alpha(alpha)
    w = inv.clique_number
    radius = math.sqrt(2 * inv.m * (1 - alpha) * (1 - 1 / w))
    centre = alpha * inv.min_degree
    return (
        _report("T39_LO", LOWER_LN, False, centre - radius, lambda_n),
        _report("T39_HI", UPPER_LN, False, centre + radius, lambda_n),
    )


def bound_p210(degrees, s: Spectrum) -> BoundReport:
    """``l_k <= d_k`` for every k; reports the index with the smallest slack."""
    d = np.sort(np.asarray(degrees, dtype=float))[::-1]
    slack = d - s.eigenvalues
    k = int(np.argmin(slack))
    rep = _report("P210", PER_INDEX, False, float(d[k]), float(s.eigenvalues[k]))
    return rep


def bound_mean_lo(inv: InvariantSet, lambda1: float) -> BoundReport:
    """``mean degree <= l1`` (Rayleigh quotient of the all-ones vector)."""
    return _report("MEAN_LO", LOWER_L1, False, inv.mean_degree, lambda1)


def evaluate_reports(inv: InvariantSet, s: Spectrum) -> list[BoundReport]:
    """All bound reports for precomputed invariants and spectrum, ordered as BOUND_IDS."""
    a, l1, ln = s.alpha, s.largest, s.smallest
    lo, hi = bound_t39(inv, a, ln)
    return [
        bound_t31(inv, a, l1),
        bound_t32(inv, a, l1),
        bound_t33(inv, a, l1),
        bound_t34(inv, a, l1),
        bound_c35(inv, a, l1),
        bound_t36(inv, a, l1),
        bound_t37(inv, a, ln),
        bound_c38(inv, s),
        lo,
        hi,
        bound_p210(inv.degrees, s),
        bound_mean_lo(inv, l1),
    ]


def evaluate_all(g: Graph, alpha: float) -> list[BoundReport]:
    inv = compute_invariants(g)
    return evaluate_reports(inv, spectrum(g, alpha))
