import pytest

from ordcensus import artin_schreier as asc
from ordcensus.errors import DomainError, ResourceGuardError
from ordcensus.fields import FieldSpec
from ordcensus.polys import MonicPoly, Place, ext_field_for, places_of_degree

F2 = FieldSpec(2)
F3 = FieldSpec(3)

X = Place(MonicPoly.from_text(F2, "0,1"))
X1 = Place(MonicPoly.from_text(F2, "1,1"))
E1 = ext_field_for(X)


def simple_pole(place):
    E = ext_field_for(place)
    return (place, (E.one,))


def test_cover_validation():
    with pytest.raises(DomainError):
        asc.ASCover(F2, (), None)  # nothing ramified
    with pytest.raises(DomainError):
        asc.ASCover(F2, ((X, (E1.one, E1.one)),), None)  # pole order 2 = p
    with pytest.raises(DomainError):
        asc.ASCover(F2, ((X, (E1.one, E1.zero, E1.zero)),), None)  # top coeff zero
    with pytest.raises(DomainError):
        asc.ASCover(F2, ((X, (E1.one, E1.one, E1.one)),), None)  # c_2 must vanish


def test_genus_and_m():
    # f = 1/x + 1/(x+1): two simple poles, m = 4, g = 1
    c = asc.ASCover(F2, (simple_pole(X), simple_pole(X1)), None)
    assert asc.m_invariant(c) == 4
    assert asc.genus(c) == 1
    assert asc.is_ordinary(c)
    # f = 1/x^3: m = 4, g = 1, not ordinary
    c2 = asc.ASCover(F2, ((X, (E1.zero, E1.zero, E1.one)),), None)
    assert asc.m_invariant(c2) == 4
    assert asc.genus(c2) == 1
    assert not asc.is_ordinary(c2)
    # f = 1/x: genus 0
    c3 = asc.ASCover(F2, (simple_pole(X),), None)
    assert asc.genus(c3) == 0
    # ramified at infinity only
    c4 = asc.ASCover(F2, (), (1,))
    assert asc.m_invariant(c4) == 2
    assert asc.genus(c4) == 0
    assert asc.is_ordinary(c4)


def test_admissible_pole_orders():
    assert asc.admissible_pole_orders(2, 8) == [2, 4, 6, 8]
    assert asc.admissible_pole_orders(3, 8) == [2, 3, 5, 6, 8]


def test_count_local_parts():
    # degree-1 place over F_2, simple pole: one nonzero coefficient
    assert asc.count_local_parts(2, 1, 2) == 1
    # pole order 3 over F_2: c_1 free, c_2 = 0, c_3 nonzero
    assert asc.count_local_parts(2, 3, 2) == 2
    # matches the census closed form (|Q|-1)|Q|^{n(p-1)} for k = np+i+1
    assert asc.count_local_parts(4, 1, 2) == 3


def test_enumerate_m2():
    # spec example: p=2, q=2, m=2 -> exactly 2 covers, both simple poles
    covers = list(asc.enumerate_covers(F2, 2))
    assert len(covers) == 2
    assert all(asc.is_ordinary(c) for c in covers)


def test_enumeration_unique_and_sized():
    for m in (2, 4, 6):
        covers = list(asc.enumerate_covers(F2, m, include_infinity=True))
        assert len(set(covers)) == len(covers)
        assert all(asc.m_invariant(c) == m for c in covers)


def test_census_enum_matches_analytic_small():
    for field, m_max in ((F2, 8), (F3, 6)):
        for include_inf in (False, True):
            en = asc.census_enumerated(field, m_max, include_inf)
            an = asc.census_analytic(field, m_max, include_inf)
            assert en.rows == an.rows


def test_census_closed_forms():
    # q=2: a(2t) = q^{2t} - q^{2t-1} = 2^{2t-1} for the unramified family
    table = asc.census_analytic(F2, 12)
    for t in range(1, 7):
        assert table.rows[2 * t][0] == 2 ** (2 * t - 1)
    # odd m impossible for p=2
    for m in (3, 5, 7, 9, 11):
        assert table.rows[m] == (0, 0)
    # ordinary covers at m: simple poles at distinct places, sum deg = m/2
    assert table.rows[2][1] == 2
    assert table.rows[4][1] == 4


def test_census_guard():
    with pytest.raises(ResourceGuardError):
        asc.census_enumerated(FieldSpec(2, 4), 8)  # 16^8 > 2^22


def test_census_table_validation():
    with pytest.raises(DomainError):
        asc.CensusTable(2, 2, {2: (1, 2)}, "enumerated")  # b > a


def test_cumulative_ratio():
    table = asc.census_analytic(F2, 6)
    assert table.cumulative_ratio(2) == 1.0
    r = table.cumulative_ratio(6)
    assert 0 < r < 1


def test_empirical_probability_converges():
    # cumulative ratio approaches phi(1) * zeta(2) = 0.6283 for p = q = 2
    r12 = asc.empirical_probability(F2, 12)
    r20 = asc.empirical_probability(F2, 20)
    target = 0.628296
    assert abs(r20 - target) < abs(r12 - target) + 1e-9
    assert abs(r20 - target) < 0.05


def test_p2_zeta_quotient_identity():
    # p = 2: the full generating product equals zeta(2s-1)/zeta(2s), i.e.
    # (1 - q u^2)/(1 - q^2 u^2) in u = q^{-s} -- exact rational coefficients
    from fractions import Fraction

    from ordcensus.dirichlet import series_multiply, series_one, series_pow
    from ordcensus.polys import count_irreducibles
    q, M = 2, 20
    prod = series_one(q, M)
    for d in range(1, M + 1):
        prod = series_multiply(
            prod,
            series_pow(asc.local_factor_series(q, 2, d, M),
                       count_irreducibles(q, d)),
            M)
    expected = [Fraction(0)] * (M + 1)
    expected[0] = Fraction(1)
    for k in range(1, M // 2 + 1):
        expected[2 * k] = Fraction(q ** (2 * k) - q ** (2 * k - 1))
    assert list(prod.coeffs) == expected


def test_m_invariant_genus_relation():
    # 2g = (p-1)(m-2) across both families
    for field, m_max in ((F2, 6), (F3, 5)):
        for m in range(2, m_max + 1):
            for c in asc.enumerate_covers(field, m, include_infinity=True):
                assert asc.m_invariant(c) == m
                assert 2 * asc.genus(c) == (field.p - 1) * (m - 2)


def test_component_count_growth():
    # p_A(m) / m^{p-2} stabilizes: within 10% between m = 200 and m = 400
    for p in (3, 5):
        r200 = asc.component_count(200, p) / 200 ** (p - 2)
        r400 = asc.component_count(400, p) / 400 ** (p - 2)
        assert abs(r400 - r200) <= 0.1 * r200, (p, r200, r400)


def test_component_count():
    # partitions into parts from {2,...,p}
    assert asc.component_count(0, 3) == 1
    assert asc.component_count(1, 3) == 0
    assert asc.component_count(5, 3) == 1   # 2+3
    assert asc.component_count(6, 3) == 2   # 2+2+2, 3+3
    assert asc.component_count(7, 5) == 3   # 2+5, 3+4, 2+2+3
    with pytest.raises(DomainError):
        asc.component_count(4, 2)
