"""Artin-Schreier covers y^p - y = f(x): representation, genus, ordinarity,
and the exact census by brute-force enumeration and by coefficient
extraction from the Euler product of local zeta factors.

Branch data is stored per irreducible place, never per geometric root: the
local part at a place Q of degree d is the tuple (c_1, ..., c_{d_Q}) of
coefficients of f_alpha in x_alpha = 1/(x - alpha), alpha a fixed root of
Q, each an element of the residue field F_{q^d} (a tuple over the base
field).  Normal form: no constant term, c_j = 0 whenever p | j, and the
top coefficient nonzero (so d_Q is never a multiple of p).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .dirichlet import CoeffSeries, series_multiply, series_one, series_pow
from .errors import DomainError, ResourceGuardError
from .fields import FieldSpec
from .polys import Place, count_irreducibles, ext_field_for, places_of_degree


@dataclass(frozen=True)
class ASCover:
    """Branch data of an Artin-Schreier cover in partial-fraction normal form."""

    field: FieldSpec
    branch: tuple  # sorted tuple of (Place, local coefficient tuple)
    infinity_part: tuple | None = None  # (c_1, ..., c_{d_inf}) over F_q, or None

    def __post_init__(self):
        p = self.field.p
        if not self.branch and self.infinity_part is None:
            raise DomainError("branch data must be nonempty when infinity is unramified")
        for place, coeffs in self.branch:
            _check_local_part(p, coeffs, lambda c: all(x == 0 for x in c))
        if self.infinity_part is not None:
            _check_local_part(p, self.infinity_part, lambda c: c == 0)

    def multiplicity(self, place: Place) -> int:
        for pl, coeffs in self.branch:
            if pl == place:
                return len(coeffs)
        return 0


def _check_local_part(p: int, coeffs, is_zero):
    d = len(coeffs)
    if d == 0:
        raise DomainError("empty local part")
    if d % p == 0:
        raise DomainError("pole order must not be a multiple of p")
    if is_zero(coeffs[-1]):
        raise DomainError("top local coefficient must be nonzero")
    for j in range(p, d + 1, p):
        if not is_zero(coeffs[j - 1]):
            raise DomainError(f"coefficient of index {j} must vanish (index divisible by p)")


def genus(c: ASCover) -> int:
    p = c.field.p
    total = -2 + _weighted_branch_sum(c)
    g2 = (p - 1) * total
    assert g2 % 2 == 0 and g2 >= 0
    return g2 // 2


def m_invariant(c: ASCover) -> int:
    return _weighted_branch_sum(c)


def _weighted_branch_sum(c: ASCover) -> int:
    total = sum(pl.degree * (len(coeffs) + 1) for pl, coeffs in c.branch)
    if c.infinity_part is not None:
        total += len(c.infinity_part) + 1
    return total


def is_ordinary(c: ASCover) -> bool:
    """Simple-poles criterion: every local part has degree 1."""
    if any(len(coeffs) != 1 for _, coeffs in c.branch):
        return False
    return c.infinity_part is None or len(c.infinity_part) == 1


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def admissible_pole_orders(p: int, max_k: int):
    """Multiplicities k = d_Q + 1 that occur: k >= 2, k != 1 mod p."""
    return [k for k in range(2, max_k + 1) if k % p != 1]


def count_local_parts(norm: int, d_q: int, p: int) -> int:
    """Number of admissible local parts with pole order d_q over F_norm."""
    free = sum(1 for j in range(1, d_q + 1) if j % p != 0)
    return (norm - 1) * norm ** (free - 1)


def _local_part_choices(place: Place, d_q: int):
    E = ext_field_for(place)
    p = place.field.p
    per_index = []
    for j in range(1, d_q + 1):
        if j % p == 0:
            per_index.append([E.zero])
        elif j == d_q:
            per_index.append([E.from_index(i) for i in range(1, E.size)])
        else:
            per_index.append([E.from_index(i) for i in range(E.size)])
    yield from itertools.product(*per_index)


def _infinity_part_choices(field: FieldSpec, d_inf: int):
    p = field.p
    per_index = []
    for j in range(1, d_inf + 1):
        if j % p == 0:
            per_index.append([0])
        elif j == d_inf:
            per_index.append(list(range(1, field.q)))
        else:
            per_index.append(list(range(field.q)))
    yield from itertools.product(*per_index)


def _branch_assignments(field: FieldSpec, m: int):
    """All ways to pick places with multiplicities k_Q, sum deg*k = m."""
    places = []
    for d in range(1, m // 2 + 1):
        places.extend(places_of_degree(field, d))
    p = field.p

    def rec(idx, remaining):
        if remaining == 0:
            yield ()
            return
        if idx == len(places):
            return
        yield from rec(idx + 1, remaining)
        pl = places[idx]
        for k in admissible_pole_orders(p, remaining // pl.degree):
            for rest in rec(idx + 1, remaining - pl.degree * k):
                yield ((pl, k),) + rest
    yield from rec(0, m)


def enumerate_covers(field: FieldSpec, m: int, include_infinity: bool = False):
    """All Artin-Schreier covers with invariant m, each exactly once."""
    if m < 2:
        return
    p = field.p
    inf_orders = [None]
    if include_infinity:
        inf_orders += [k for k in admissible_pole_orders(p, m)]
    for k_inf in inf_orders:
        rem = m - (k_inf if k_inf is not None else 0)
        if rem < 0:
            continue
        if k_inf is None and rem == 0:
            continue
        for assignment in _branch_assignments(field, rem):
            if not assignment and k_inf is None:
                continue
            assignment = tuple(sorted(assignment, key=lambda pk: pk[0]))
            local_pools = [list(_local_part_choices(pl, k - 1)) for pl, k in assignment]
            inf_iter = [None] if k_inf is None else _infinity_part_choices(field, k_inf - 1)
            for inf_part in inf_iter:
                for locals_ in itertools.product(*local_pools):
                    branch = tuple((pl, lc) for (pl, _), lc in zip(assignment, locals_))
                    yield ASCover(field, branch, inf_part)


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CensusTable:
    q: int
    p: int
    rows: dict  # m -> (a_m, b_m)
    source: str  # "enumerated" | "analytic"

    def __post_init__(self):
        for m, (a, b) in self.rows.items():
            if not (0 <= b <= a):
                raise DomainError(f"census row m={m} violates 0 <= b <= a")

    def cumulative_ratio(self, m_max: int) -> float:
        a_total = sum(a for m, (a, _) in self.rows.items() if m <= m_max)
        b_total = sum(b for m, (_, b) in self.rows.items() if m <= m_max)
        if a_total == 0:
            raise DomainError("empty census: zero denominator")
        return b_total / a_total


MAX_ENUM = 2 ** 22


def census_enumerated(field: FieldSpec, m_max: int,
                      include_infinity: bool = False) -> CensusTable:
    if field.q ** m_max > MAX_ENUM:
        raise ResourceGuardError(
            f"census enumeration guard exceeded: q^m_max = {field.q}^{m_max} > {MAX_ENUM}")
    rows = {}
    for m in range(2, m_max + 1):
        a = b = 0
        for cover in enumerate_covers(field, m, include_infinity):
            a += 1
            if is_ordinary(cover):
                b += 1
        rows[m] = (a, b)
    return CensusTable(field.q, field.p, rows, "enumerated")


def local_factor_series(q: int, p: int, d: int, M: int) -> CoeffSeries:
    """Z_Q as a series in u = q^{-s} for a place of degree d, order M."""
    norm = q ** d
    coeffs = [Fraction(0)] * (M + 1)
    coeffs[0] = Fraction(1)
    for k in admissible_pole_orders(p, M // d if d else 0):
        if d * k <= M:
            coeffs[d * k] = Fraction(count_local_parts(norm, k - 1, p))
    return CoeffSeries(q, tuple(coeffs), M)


def ordinary_local_factor_series(q: int, d: int, M: int) -> CoeffSeries:
    """Z_{0,Q} = 1 + (|Q|-1)|Q|^{-2s} as a series in u = q^{-s}."""
    norm = q ** d
    coeffs = [Fraction(0)] * (M + 1)
    coeffs[0] = Fraction(1)
    if 2 * d <= M:
        coeffs[2 * d] = Fraction(norm - 1)
    return CoeffSeries(q, tuple(coeffs), M)


def census_analytic(field: FieldSpec, m_max: int,
                    include_infinity: bool = False) -> CensusTable:
    q, p = field.q, field.p
    M = m_max
    a_series = series_one(q, M)
    b_series = series_one(q, M)
    for d in range(1, M + 1):
        i_d = count_irreducibles(q, d)
        a_series = series_multiply(a_series, series_pow(local_factor_series(q, p, d, M), i_d), M)
        b_series = series_multiply(b_series, series_pow(ordinary_local_factor_series(q, d, M), i_d), M)
    if include_infinity:
        # the infinity factor coincides with a degree-1 local factor
        a_series = series_multiply(a_series, local_factor_series(q, p, 1, M), M)
        b_series = series_multiply(b_series, ordinary_local_factor_series(q, 1, M), M)
    rows = {}
    for m in range(2, m_max + 1):
        a = a_series.coeff(m)
        b = b_series.coeff(m)
        assert a.denominator == 1 and b.denominator == 1
        rows[m] = (int(a), int(b))
    return CensusTable(q, p, rows, "analytic")


def empirical_probability(field: FieldSpec, m_max: int,
                          include_infinity: bool = False) -> float:
    """Cumulative ordinary proportion sum b / sum a from the analytic census."""
    if m_max < 2:
        raise DomainError("m_max must be >= 2")
    table = census_analytic(field, m_max, include_infinity)
    return table.cumulative_ratio(m_max)


def component_count(m: int, p: int) -> int:
    """p_A(m): partitions of m into parts from {2, 3, ..., p}."""
    if m < 0:
        raise DomainError("m must be >= 0")
    if p < 3:
        raise DomainError("component count is defined for p >= 3")
    counts = [0] * (m + 1)
    counts[0] = 1
    for part in range(2, p + 1):
        for value in range(part, m + 1):
            counts[value] += counts[value - part]
    return counts[m]
