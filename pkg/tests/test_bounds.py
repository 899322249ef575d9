import math

import numpy as np
import pytest

from aalpha import generators
from aalpha.bounds import (
    BOUND_IDS,
    bound_c35,
    bound_c38,
    bound_mean_lo,
    bound_p210,
    bound_t31,
    bound_t32,
    bound_t33,
    bound_t34,
    bound_t36,
    bound_t37,
    bound_t39,
    closed_form_lambda1_h,
    evaluate_all,
    t33_value,
)
from aalpha.graph import from_edges
from aalpha.invariants import compute_invariants
from aalpha.spectra import quotient_matrix, spectrum
from oracles import a_alpha_dense, eig_desc

SQRT3 = math.sqrt(3)


def lam(g, alpha):
    """Independent eigenvalue oracle (LAPACK)."""
    return eig_desc(a_alpha_dense(g.n, g.edges(), alpha))


def inv_of(g):
    return compute_invariants(g)


def test_t31_star():
    star = generators.star(4)
    r = bound_t31(inv_of(star), 0.0, lam(star, 0)[0])
    assert r.applicable and r.strict
    assert r.bound_value == pytest.approx(3 - 6 / 52)
    assert r.observed == pytest.approx(SQRT3)
    assert r.gap > 0


def test_t31_t32_inapplicable():
    k4 = inv_of(generators.complete(4))
    r = bound_t31(k4, 0.5, 3.0)
    assert not r.applicable and "irregular" in r.reason
    assert not bound_t32(k4, 0.5, 3.0).applicable
    star = inv_of(generators.star(4))
    assert not bound_t31(star, 1.0, 3.0).applicable
    assert not bound_t32(star, 1.0, 3.0).applicable
    disc = inv_of(from_edges(4, [(0, 1), (1, 2)]))
    assert "connected" in bound_t31(disc, 0.5, 1.0).reason


def test_t32_examples(star_with_chords):
    star = generators.star(4)
    r = bound_t32(inv_of(star), 0.0, lam(star, 0)[0])
    assert r.bound_value == pytest.approx(3 - 1 / 792)
    assert r.gap > 0
    r = bound_t32(inv_of(star_with_chords), 0.5, lam(star_with_chords, 0.5)[0])
    assert r.bound_value == pytest.approx(5 - 1 / 17400, abs=1e-15)
    assert r.gap > 0


def test_closed_form_h_examples():
    assert closed_form_lambda1_h(4, 1, 0.0) == pytest.approx(SQRT3)
    assert closed_form_lambda1_h(4, 1, 0.5) == pytest.approx(2.0)
    assert lam(generators.star(4), 0.5)[0] == pytest.approx(2.0)
    with pytest.raises(ValueError):
        closed_form_lambda1_h(4, 3, 0.5)


@pytest.mark.parametrize("alpha", [0.0, 0.2, 0.5, 0.8, 1.0])
def test_closed_form_matches_quotient_for_h_family(alpha):
    for n, k, g in generators.h_family(12):
        q = quotient_matrix(g, alpha, [[0], list(range(1, n))])
        assert closed_form_lambda1_h(n, k, alpha) == pytest.approx(q.quotient_eigenvalues[0], abs=1e-10)


def test_t33_examples():
    star = generators.star(4)
    r = bound_t33(inv_of(star), 0.5, lam(star, 0.5)[0])
    assert r.bound_value == pytest.approx(2.0) and r.equality
    k4 = inv_of(generators.complete(4))
    for a in [0.0, 0.25, 0.5, 1.0]:
        r = bound_t33(k4, a, 3.0)
        assert r.bound_value == pytest.approx(3.0) and r.equality
        # the regular-case simplification
        assert r.bound_value == pytest.approx((a * 4 + 3 - 1 + 4 * (1 - a)) / 2)
    c5 = generators.cycle(5)
    r = bound_t33(inv_of(c5), 0.0, lam(c5, 0)[0])
    assert r.bound_value == pytest.approx(2.0) and r.equality


def test_t33_uses_second_entry_of_degree_sequence():
    # P4 has degrees (2, 2, 1, 1). With the distinct-value second degree (1)
    # the formula drops below the largest eigenvalue, so that reading is unsound.
    p4 = generators.path(4)
    l1 = lam(p4, 0)[0]
    assert t33_value(2, 1, 0.0) < l1 - 0.2
    r = bound_t33(inv_of(p4), 0.0, l1)
    assert r.bound_value == pytest.approx(2.0) and r.gap > 0


def test_t34_examples():
    k4 = inv_of(generators.complete(4))
    r = bound_t34(k4, 0.5, 3.0)
    assert r.bound_value == pytest.approx(3.0) and r.equality
    k2 = generators.complete(2)
    assert bound_t34(inv_of(k2), 0.0, 1.0).bound_value == pytest.approx(1.0)
    p3 = generators.path(3)
    r = bound_t34(inv_of(p3), 0.0, lam(p3, 0)[0])
    assert r.bound_value == pytest.approx(math.sqrt(24) / 3)
    assert r.observed == pytest.approx(math.sqrt(2)) and r.gap > 0


def test_c35_examples():
    r = bound_c35(inv_of(generators.complete(4)), 0.5, 3.0)
    assert r.bound_value == pytest.approx(3.0) and r.equality
    star = generators.star(4)
    r = bound_c35(inv_of(star), 0.0, SQRT3)
    assert r.bound_value == pytest.approx(math.sqrt(72) / 4)
    assert not bound_c35(inv_of(from_edges(3, [(0, 1)])), 0.5, 1.0).applicable


def test_t36_examples():
    for n in range(2, 8):
        for a in [0.0, 0.5, 1.0]:
            r = bound_t36(inv_of(generators.complete(n)), a, n - 1)
            assert r.bound_value == pytest.approx(n - 1) and r.equality
    c5 = generators.cycle(5)
    assert bound_t36(inv_of(c5), 0.0, 2.0).bound_value == pytest.approx(2.5)
    assert bound_t36(inv_of(generators.star(4)), 0.5, 2.0).bound_value == pytest.approx(2.5)


def test_t37_examples():
    c5 = inv_of(generators.cycle(5))
    ln = 2 * math.cos(4 * math.pi / 5)
    r = bound_t37(c5, 0.0, ln)
    assert r.bound_value == pytest.approx(-2 + 1 / 15) and r.gap > 0
    r = bound_t37(c5, 1.0, 2.0)
    assert r.bound_value == pytest.approx(-2 + 2 / 15) and r.gap > 0
    r = bound_t37(inv_of(generators.path(4)), 0.0, -1.6)
    assert not r.applicable and "bipartite" in r.reason


def test_c38_examples(petersen):
    c5 = generators.cycle(5)
    r = bound_c38(inv_of(c5), spectrum(c5, 0.0))
    assert r.observed == pytest.approx(2 + 2 * math.cos(4 * math.pi / 5))
    assert r.bound_value == pytest.approx(1 / 15) and r.gap > 0
    r = bound_c38(inv_of(petersen), spectrum(petersen, 0.5))
    assert r.observed == pytest.approx(3.5)
    assert r.bound_value == pytest.approx(0.05)
    c6 = generators.cycle(6)
    assert not bound_c38(inv_of(c6), spectrum(c6, 0.5)).applicable
    p4 = generators.path(4)
    assert "regular" in bound_c38(inv_of(p4), spectrum(p4, 0.5)).reason


def test_t39_examples():
    c5 = inv_of(generators.cycle(5))
    ln = 1 + 0.5 * 2 * math.cos(4 * math.pi / 5)
    lo, hi = bound_t39(c5, 0.5, ln)
    assert lo.bound_value == pytest.approx(1 - math.sqrt(2.5))
    assert hi.bound_value == pytest.approx(1 + math.sqrt(2.5))
    assert lo.gap > 0 and hi.gap > 0
    g = generators.gnp(7, 0.5, 4)
    inv = inv_of(g)
    lo, hi = bound_t39(inv, 1.0, float(inv.min_degree))
    assert lo.bound_value == hi.bound_value == inv.min_degree
    assert lo.equality and hi.equality
    lo, hi = bound_t39(inv_of(generators.complete(4)), 0.0, -1.0)
    assert (lo.bound_value, hi.bound_value) == pytest.approx((-3.0, 3.0))


def test_p210_examples():
    k4 = generators.complete(4)
    r = bound_p210(inv_of(k4).degrees, spectrum(k4, 0.3))
    assert r.gap == pytest.approx(0, abs=1e-12) and r.bound_value == 3
    star = generators.star(4)
    s = spectrum(star, 0.0)
    assert s.eigenvalues == pytest.approx([SQRT3, 0, 0, -SQRT3], abs=1e-12)
    r = bound_p210(inv_of(star).degrees, s)
    assert r.gap == pytest.approx(1.0)  # index 2: d = 1, eigenvalue 0
    g = generators.gnp(8, 0.5, 2)
    r = bound_p210(inv_of(g).degrees, spectrum(g, 1.0))
    assert r.equality


def test_mean_lower_bound():
    g = generators.gnp(9, 0.4, 8)
    r = bound_mean_lo(inv_of(g), lam(g, 0.3)[0])
    assert r.bound_value == pytest.approx(2 * g.m / 9) and r.gap >= 0


def test_evaluate_all_k4_equalities():
    reps = {r.bound_id: r for r in evaluate_all(generators.complete(4), 0.5)}
    assert [r for r in BOUND_IDS] == list(reps)
    for bid in ("T33", "T34", "T36", "C35"):
        assert reps[bid].equality, bid


def test_evaluate_all_p4():
    reps = {r.bound_id: r for r in evaluate_all(generators.path(4), 0.0)}
    assert not reps["T37"].applicable and not reps["C38"].applicable
    assert reps["T31"].applicable and reps["T32"].applicable
    assert all(r.gap >= 0 for r in reps.values() if r.applicable)


def test_evaluate_all_edgeless():
    reps = {r.bound_id: r for r in evaluate_all(from_edges(3, []), 0.5)}
    assert reps["T34"].bound_value == 0 and reps["T34"].equality
    assert reps["T39_LO"].bound_value == reps["T39_HI"].bound_value == 0
    assert reps["T39_LO"].equality


def test_evaluate_all_is_deterministic(two_hub_graph):
    assert evaluate_all(two_hub_graph, 0.4) == evaluate_all(two_hub_graph, 0.4)


def test_gap_sign_convention(two_hub_graph):
    s = spectrum(two_hub_graph, 0.4)
    for r in evaluate_all(two_hub_graph, 0.4):
        if r.applicable and r.side in ("upper-l1", "upper-ln", "per-index"):
            assert r.gap == pytest.approx(r.bound_value - r.observed)
        elif r.applicable:
            assert r.gap == pytest.approx(r.observed - r.bound_value)
    assert np.all(np.diff(s.eigenvalues) <= 0)


# Properties over the exhaustive n <= 6 sweep (shared fixture in conftest).


def test_strictness_t31_t32(enumeration_stats):
    for bid, gap in enumeration_stats["strict_min"].items():
        assert gap > 1e-12, bid


def test_t33_equality_biconditional(enumeration_stats):
    assert enumeration_stats["t33_mismatch"] == []


def test_t33_equality_on_h_family_and_regular(petersen):
    for n, k, g in generators.h_family(12):
        inv = inv_of(g)
        for a in (0.0, 0.3, 0.7):
            assert bound_t33(inv, a, lam(g, a)[0]).equality
    for g in [petersen, generators.cycle(7), generators.complete(6), generators.circulant(8, [1, 4])]:
        for a in (0.0, 0.3, 0.7):
            assert bound_t33(inv_of(g), a, lam(g, a)[0]).equality


def test_t34_t36_equality_on_complete_graphs():
    for n in range(2, 11):
        inv = inv_of(generators.complete(n))
        for a in (0, 0.25, 0.5, 0.75, 1):
            l1 = lam(generators.complete(n), a)[0]
            assert bound_t34(inv, a, l1).equality
            assert bound_t36(inv, a, l1).equality


def test_radicands_nonnegative_exactly(enumeration_stats):
    assert enumeration_stats["radicand_min"]["T34"] >= 0
    assert enumeration_stats["radicand_min"]["C35"] >= 0


def test_c35_dominates_t34(enumeration_stats):
    assert enumeration_stats["c35_minus_t34_min"] >= -1e-9
