import random
from itertools import product

import pytest

from hslbound.cohomology import (
    empirical_hsl,
    frobenius_orbit,
    hsl_exact_dim1,
    theoretical_bound,
    zero_class,
)
from hslbound.errors import DimensionMismatchError
from hslbound.intlinalg import dot, vec_add, vec_scale
from hslbound.semigroups import all_facet_data, build, find_gamma, member, n_q, verify_gamma
from oracles import brute_min_power_in_numerical, brute_zero_class

CAP = 470  # 10 * m_q for the wedge certificate below


def pipeline(S):
    cert = find_gamma(S)
    facets = all_facet_data(S)
    return cert, facets


@pytest.fixture(scope="module")
def wedge_ctx(wedge):
    return pipeline(wedge)


@pytest.fixture(scope="module")
def index2_ctx(index2):
    return pipeline(index2)


@pytest.fixture(scope="module")
def ns35_ctx(ns35):
    return pipeline(ns35)


def test_zero_class_neg_interior(wedge, wedge_ctx):
    cert, facets = wedge_ctx
    res = zero_class(wedge, cert, facets, (-1, -1), CAP)
    assert res.verdict == "nonzero" and res.certificate == "neg_interior"
    assert res.recheck(wedge, facets, (-1, -1))


def test_zero_class_boundary_lattice_solve(wedge, wedge_ctx):
    cert, facets = wedge_ctx
    res = zero_class(wedge, cert, facets, (-5, -1), CAP)
    assert res.is_zero and res.facet == 0
    assert res.witness == (5, 1)
    assert vec_add((-5, -1), res.witness) == (0, 0)
    assert res.recheck(wedge, facets, (-5, -1))


def test_zero_class_member_degrees(wedge, wedge_ctx):
    cert, facets = wedge_ctx
    for v in ((0, 0), (5, 1), (6, 4)):
        res = zero_class(wedge, cert, facets, v, CAP)
        assert res.is_zero and res.witness == (0, 0)
        assert res.recheck(wedge, facets, v)


def test_zero_class_search_inside_cone(wedge, wedge_ctx):
    # (1,1) is saturated but not in the semigroup; a facet witness exists
    cert, facets = wedge_ctx
    res = zero_class(wedge, cert, facets, (1, 1), CAP)
    assert res.is_zero
    assert res.recheck(wedge, facets, (1, 1))


def test_zero_class_unknown_under_tiny_cap(wedge, wedge_ctx):
    cert, facets = wedge_ctx
    res = zero_class(wedge, cert, facets, (1, 1), 5)
    assert res.verdict == "unknown" and res.cap == 5


def test_zero_class_boundary_nonzero(index2, index2_ctx):
    cert, facets = index2_ctx
    res = zero_class(index2, cert, facets, (-1, 0), CAP)
    assert res.verdict == "nonzero" and res.certificate == "boundary_lattice"
    assert res.recheck(index2, facets, (-1, 0))
    res2 = zero_class(index2, cert, facets, (-2, 0), CAP)
    assert res2.is_zero and vec_add((-2, 0), res2.witness) in {(0, 0), (2, 0)}


def test_zero_class_dim1_exhaustive_nonzero(ns35, ns35_ctx):
    cert, facets = ns35_ctx
    res = zero_class(ns35, cert, facets, (1,), CAP)
    assert res.verdict == "nonzero" and res.certificate == "finite_facets"
    assert res.recheck(ns35, facets, (1,))
    assert zero_class(ns35, cert, facets, (8,), CAP).is_zero


def test_zero_class_against_brute_force(wedge, wedge_ctx):
    cert, facets = wedge_ctx
    for v in product(range(-6, 7), repeat=2):
        res = zero_class(wedge, cert, facets, v, 60)
        brute = brute_zero_class(wedge, facets, v, 60)
        if res.verdict == "unknown":
            continue
        assert res.is_zero == brute, v
        assert res.recheck(wedge, facets, v)


def test_zero_class_brute_on_index2_boundaries(index2, index2_ctx):
    cert, facets = index2_ctx
    cap = 10 * cert.m_q
    for v in product(range(-5, 6), repeat=2):
        res = zero_class(index2, cert, facets, v, cap)
        if res.verdict == "unknown":
            continue
        assert res.is_zero == brute_zero_class(index2, facets, v, cap), v


def test_orbit_neg_interior_stable(wedge, wedge_ctx):
    cert, facets = wedge_ctx
    for p in (2, 5):
        rep = frobenius_orbit(wedge, cert, facets, (-1, -1), p, 6, CAP)
        assert rep.kind == "not_nilpotent" and rep.order is None
        assert all(s.verdict == "nonzero" for s in rep.statuses)


def test_orbit_dim1_example(ns35, ns35_ctx):
    cert, facets = ns35_ctx
    rep = frobenius_orbit(ns35, cert, facets, (1,), 2, 5, CAP)
    assert [s.verdict for s in rep.statuses[:4]] == [
        "nonzero",
        "nonzero",
        "nonzero",
        "zero",
    ]
    assert rep.kind == "nilpotent" and rep.order == 3


def test_orbit_zero_degree(wedge, wedge_ctx):
    cert, facets = wedge_ctx
    rep = frobenius_orbit(wedge, cert, facets, (0, 0), 3, 4, CAP)
    assert rep.kind == "nilpotent" and rep.order == 0


def test_orbit_statuses_monotone(wedge, wedge_ctx):
    cert, facets = wedge_ctx
    rng = random.Random(31)
    for _ in range(100):
        v = (rng.randint(-8, 8), rng.randint(-8, 8))
        p = rng.choice((2, 3, 5))
        rep = frobenius_orbit(wedge, cert, facets, v, p, 7, CAP)
        seen_zero = False
        for st in rep.statuses:
            if seen_zero:
                assert st.is_zero
            seen_zero = seen_zero or st.is_zero


def test_orbit_positive_order_off_boundary(index2, index2_ctx):
    # (0,1): the only eligible witness sweep walks the even-x facet, so
    # nothing kills the class at e=0, but p*(0,1) dies for every p
    cert, facets = index2_ctx
    cap = 10 * cert.m_q
    assert not brute_zero_class(index2, facets, (0, 1), cap)
    for p in (2, 3, 5):
        rep = frobenius_orbit(index2, cert, facets, (0, 1), p, 4, cap)
        assert rep.kind == "nilpotent" and rep.order == 1
        assert rep.statuses[1].is_zero and not rep.statuses[0].is_zero


def test_empirical_bound_is_tight_on_index2(index2, index2_ctx):
    cert, facets = index2_ctx
    for p in (3, 5):
        bound = theoretical_bound(cert, 2, p)
        rep = empirical_hsl(index2, cert, facets, p, 8, bound + 2, 10 * cert.m_q)
        assert rep.empirical_max == bound == 1
        assert rep.violations == ()


def test_orbit_boundary_small_char(index2, index2_ctx):
    # (-1,0) sits on a facet whose lattice has index 2: dead at e=1 for
    # p=2, injective for p=3
    cert, facets = index2_ctx
    rep2 = frobenius_orbit(index2, cert, facets, (-1, 0), 2, 4, CAP)
    assert rep2.kind == "nilpotent" and rep2.order == 1
    rep3 = frobenius_orbit(index2, cert, facets, (-1, 0), 3, 4, CAP)
    assert rep3.kind == "not_nilpotent"


def test_theoretical_bound(wedge):
    cert47 = verify_gamma(wedge, (14, 9))
    assert cert47.m_q == 47
    assert theoretical_bound(cert47, 0, 53) == 1
    assert theoretical_bound(cert47, 0, 2) == 6
    assert theoretical_bound(cert47, 2, 2) is None
    one = verify_gamma(build(((1,), (2,))), (0,))
    assert one is not None and one.m_q == 0
    assert theoretical_bound(one, 0, 7) == 0


def test_empirical_wedge(wedge, wedge_ctx):
    cert, facets = wedge_ctx
    rep = empirical_hsl(wedge, cert, facets, 2, 12, 8, CAP)
    assert rep.violations == ()
    assert rep.empirical_max <= 6
    total = sum(rep.region_counts.values())
    assert total == 25 * 25
    assert rep.class_counts["unknown"] == 0


def test_empirical_dim1(ns35, ns35_ctx):
    cert, facets = ns35_ctx
    rep = empirical_hsl(ns35, cert, facets, 2, 20, 6, CAP)
    assert rep.empirical_max == 3
    assert rep.violations == ()


def test_empirical_saturated():
    S = build(((1, 0), (0, 1)))
    cert, facets = pipeline(S)
    rep = empirical_hsl(S, cert, facets, 3, 6, 4, 10)
    assert rep.empirical_max == 0
    assert rep.violations == ()


def test_empirical_degenerate_window(wedge, wedge_ctx):
    # radius 0 sweeps only the origin, which is already zero
    cert, facets = wedge_ctx
    rep = empirical_hsl(wedge, cert, facets, 5, 0, 3, CAP)
    assert rep.empirical_max == 0
    assert sum(rep.region_counts.values()) == 1


def test_empirical_small_characteristic(index2, index2_ctx):
    cert, facets = index2_ctx
    assert n_q(index2, facets) == 2
    rep2 = empirical_hsl(index2, cert, facets, 2, 6, 5, 10 * cert.m_q)
    assert rep2.theoretical_bound is None
    assert rep2.small_char_flags  # boundary degrees riding the index-2 facet
    assert (-1, 0) in rep2.small_char_flags
    rep3 = empirical_hsl(index2, cert, facets, 3, 6, 5, 10 * cert.m_q)
    assert rep3.theoretical_bound is not None
    assert rep3.violations == ()
    assert rep3.small_char_flags == ()


def test_hsl_exact_dim1(ns35, ns23):
    assert hsl_exact_dim1(ns35, 2) == 3
    assert hsl_exact_dim1(ns35, 3) == 1
    assert hsl_exact_dim1(ns23, 5) == 1
    assert hsl_exact_dim1(ns23, 7) == 1


def test_hsl_exact_dim1_requires_rank1(wedge):
    with pytest.raises(DimensionMismatchError):
        hsl_exact_dim1(wedge, 2)


def test_dim1_against_brute_and_window(ns35, ns479):
    for S, gens in ((ns35, (3, 5)), (ns479, (4, 7, 9))):
        cert, facets = pipeline(S)
        for p in (2, 3, 5, 7, 11):
            exact = hsl_exact_dim1(S, p)
            assert exact == brute_min_power_in_numerical(gens, p)
            bound = theoretical_bound(cert, 0, p)
            rep = empirical_hsl(S, cert, facets, p, 30, bound + 2, 10 * cert.m_q)
            assert rep.empirical_max == exact
