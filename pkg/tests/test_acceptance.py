"""Acceptance suite: the nine build-blocking criteria.

Each test prints a single PASS line with the measured quantities once its
assertions hold; tolerances are stated inline.
"""

import math
import random
import time

from ordcensus import artin_schreier as asc
from ordcensus import dirichlet as dd
from ordcensus import oracle as orc
from ordcensus import superelliptic as se
from ordcensus.fields import FieldSpec

F2 = FieldSpec(2)
F3 = FieldSpec(3)
F4 = FieldSpec(2, 2)

TABLE1 = {
    # q: (phi(1), P(AS) modified, CEZB)
    2: (0.314148, 0.314148, 0.419422),
    4: (0.593976, 0.514777, 0.737512),
    8: (0.776577, 0.702617, 0.873264),
    16: (0.882162, 0.833730, 0.937270),
    32: (0.939367, 0.911820, 0.968720),
}


def test_criterion_1_table1_reproduction():
    """phi(1), P(AS) modified, CEZB match Table 1 within 1e-5; < 10 s."""
    t0 = time.time()
    worst = 0.0
    for q, (phi_pub, pas_pub, cezb_pub) in TABLE1.items():
        phi = float(dd.phi_at_1(q).value)
        pas = float(dd.ordinary_probability_as(q, 2, include_infinity=True))
        cezb = float(dd.cezb_constant(q))
        for got, want in ((phi, phi_pub), (pas, pas_pub), (cezb, cezb_pub)):
            worst = max(worst, abs(got - want))
            assert abs(got - want) < 1e-5, (q, got, want)
    elapsed = time.time() - t0
    assert elapsed < 10
    print(f"\nPASS criterion 1: Table 1 reproduced, max |dev| = {worst:.2e}, "
          f"{elapsed:.2f}s")


def test_criterion_2_as_census_exactness():
    """Analytic == enumerated (a_m, b_m): p=2 q=2 m<=12 and p=3 q=3 m<=8."""
    t0 = time.time()
    rows_checked = 0
    for field, m_max in ((F2, 12), (F3, 8)):
        for include_inf in (False, True):
            en = asc.census_enumerated(field, m_max, include_inf)
            an = asc.census_analytic(field, m_max, include_inf)
            assert en.rows == an.rows, (field.q, include_inf)
            rows_checked += len(en.rows)
    elapsed = time.time() - t0
    assert elapsed < 300
    print(f"\nPASS criterion 2: AS census exact on {rows_checked} rows "
          f"(q=2 m<=12, q=3 m<=8, both families), {elapsed:.2f}s")


def test_criterion_3_as_probability_convergence():
    """q=2 ratio at m=20 within 0.05 of phi(1)*zeta(2); q=3 ratio halves."""
    target = 0.628296
    r20 = asc.empirical_probability(F2, 20)
    assert abs(r20 - target) < 0.05
    r10 = asc.empirical_probability(F3, 10)
    r30 = asc.empirical_probability(F3, 30)
    assert r30 < r10 / 2
    print(f"\nPASS criterion 3: q=2 ratio(20) = {r20:.6f} "
          f"(|dev| = {abs(r20 - target):.4f} < 0.05); "
          f"q=3 ratio {r10:.4f} -> {r30:.4f} (halved)")


def test_criterion_4_oracle_agreement():
    """cross_validate passes for all AS covers (q=2, m<=6, incl. modified
    family) and all superelliptic n=3 covers (q=2, m<=5)."""
    n_as = 0
    for m in range(2, 7):
        for c in asc.enumerate_covers(F2, m, include_infinity=True):
            assert orc.assert_agreement(c).agree
            n_as += 1
    n_se = 0
    for total_deg in range(0, 6):
        for c in se.enumerate_se_covers(F2, 3, total_deg):
            if not 2 <= c.branch_count <= 5:
                continue
            assert orc.assert_agreement(c).agree
            n_se += 1
    assert n_as > 0 and n_se > 0
    print(f"\nPASS criterion 4: oracle agrees on {n_as}/{n_as} AS covers "
          f"and {n_se}/{n_se} superelliptic covers")


def test_criterion_5_se_census_identities():
    """Routes (i), (ii), (iii) agree exactly: q=2 n=3 m<=10, q=2 n=5 m<=6."""
    checked = 0
    for n, m_max in ((3, 10), (5, 6)):
        rows = se.census_se(F2, n, m_max)  # raises on any route mismatch
        checked += len(rows)
    print(f"\nPASS criterion 5: three census routes identical on {checked} rows "
          f"(n=3 m<=10, n=5 m<=6)")


def test_criterion_6_ordinarity_two_routes():
    """is_ordinary_se == (a_number == 0) and sum d_i = g: exhaustive q=2 n=3
    m<=8 plus 500 seeded random covers, n in {5,7}, q in {2,4}."""
    n_exhaustive = 0
    for total_deg in range(0, 9):
        for c in se.enumerate_se_covers(F2, 3, total_deg):
            if c.branch_count < 2 or c.branch_count > 8:
                continue
            assert se.is_ordinary_se(c) == (se.a_number(c) == 0), c.degrees
            assert sum(se.eigen_degrees(c).d) == se.genus_se(c)
            n_exhaustive += 1
    rng = random.Random(20260824)
    n_random = 0
    for n, field in ((5, F2), (5, F4), (7, F2), (7, F4)):
        for _ in range(125):
            c = se.random_se_cover(field, n, rng.randint(2, 5), rng)
            assert se.is_ordinary_se(c) == (se.a_number(c) == 0), (n, field.q,
                                                                   c.degrees)
            assert sum(se.eigen_degrees(c).d) == se.genus_se(c)
            n_random += 1
    assert n_random == 500
    print(f"\nPASS criterion 6: two ordinarity routes agree on {n_exhaustive} "
          f"exhaustive (n=3, m<=8) + {n_random} random covers (n in {{5,7}}, "
          f"q in {{2,4}})")


def test_criterion_7_kernel_lemma():
    """verify_kernel_lemma for n in {3,5,7,11,13}; rank(A) = (n+1)/2."""
    for n in (3, 5, 7, 11, 13):
        assert se.verify_kernel_lemma(n), n
        assert se.matrix_rank(se.fractional_part_matrix(n)) == (n + 1) // 2
    print("\nPASS criterion 7: kernel lemma verified for n in {3,5,7,11,13}, "
          "rank(A) = (n+1)/2 in exact rationals")


def test_criterion_8_se_vanishing_trend():
    """q=2 n=3: cumulative ordinary ratio x log(q^m) varies by < 2x over
    m in [6, 12]."""
    ratios = dict(se.ordinary_ratio_se(F2, 3, 12))
    vals = [ratios[m] * math.log(2 ** m) for m in range(6, 13)]
    spread = max(vals) / min(vals)
    assert spread < 2, vals
    print(f"\nPASS criterion 8: ratio*log(q^m) in "
          f"[{min(vals):.3f}, {max(vals):.3f}] over m in [6,12], "
          f"spread {spread:.3f} < 2")


def test_criterion_9_growth_bound():
    """Lemma 3.12 numerically: r in {2,3,4}, q=2, X <= 2^30, constant
    (2r)^{r-1}/(r-1)! + 10%."""
    for r in (2, 3, 4):
        assert se.growth_bound_holds(2, r, 30, margin=1.1), r
    print("\nPASS criterion 9: growth bound holds for r in {2,3,4}, q=2, "
          "X up to 2^30 with (2r)^(r-1)/(r-1)! + 10%")
