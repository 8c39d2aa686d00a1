"""Superelliptic covers y^n = f_1 f_2^2 ... f_{n-1}^{n-1} over F_q of
characteristic 2: genus, eigenspace dimensions, a-number, the
degree-symmetry ordinarity criterion, the kernel verifier for the
fractional-part matrix, and the census counting identities.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, ResourceGuardError, InvariantViolation
from .fields import FieldSpec
from .polys import (MonicPoly, count_irreducibles, enumerate_monic,
                    gcd_monic, is_squarefree, mul_monic, omega, poly_one)


def _is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class SECover:
    """A cover y^n = prod f_i^i with squarefree pairwise-coprime monic parts."""

    field: FieldSpec
    n: int
    parts: tuple  # (f_1, ..., f_{n-1}), MonicPoly each (constant 1 allowed)

    def __post_init__(self):
        if not _is_odd_prime(self.n):
            raise DomainError("n must be an odd prime")
        if self.field.p == self.n:
            raise DomainError("n must be coprime to the characteristic")
        if len(self.parts) != self.n - 1:
            raise DomainError(f"expected {self.n - 1} parts")
        for f in self.parts:
            if f.degree > 0 and not is_squarefree(f):
                raise DomainError(f"part {f} is not squarefree")
        for f, g in itertools.combinations(self.parts, 2):
            if f.degree > 0 and g.degree > 0 and gcd_monic(f, g).degree > 0:
                raise DomainError("parts are not pairwise coprime")

    @property
    def degrees(self) -> tuple:
        return tuple(f.degree for f in self.parts)

    @property
    def weighted_degree(self) -> int:
        """N = sum i deg(f_i)."""
        return sum(i * f.degree for i, f in enumerate(self.parts, start=1))

    @property
    def n_infinity(self) -> int:
        return (-self.weighted_degree) % self.n

    @property
    def epsilon(self) -> int:
        return 0 if self.n_infinity == 0 else 1

    @property
    def branch_count(self) -> int:
        """Number of branch points of the cover (the census invariant m)."""
        return sum(self.degrees) + self.epsilon

    def product_poly(self) -> MonicPoly:
        f = poly_one(self.field)
        for i, part in enumerate(self.parts, start=1):
            for _ in range(i):
                f = mul_monic(f, part)
        return f


def genus_se(c: SECover) -> int:
    """Genus, computed from both ramification formulas and cross-checked."""
    n = c.n
    m = c.branch_count
    if m < 2:
        raise DomainError("the equation does not define a curve (fewer than 2 branch points)")
    # general form: -n+1 + (1/2) sum deg(f_i)(n - gcd(n,i)) + (1/2) eps (n - gcd(n, n_inf))
    twice = -2 * (n - 1)
    for i, d in enumerate(c.degrees, start=1):
        twice += d * (n - math.gcd(n, i))
    if c.epsilon:
        twice += n - math.gcd(n, c.n_infinity)
    if twice % 2 != 0:
        raise InvariantViolation("ramification genus formula gave a half-integer")
    g_general = twice // 2
    g_prime = (n - 1) * (m - 2) // 2
    if g_general != g_prime:
        raise InvariantViolation(
            f"genus formulas disagree: {g_general} vs {g_prime} for degrees {c.degrees}")
    if g_prime < 0:
        raise InvariantViolation("negative genus")
    return g_prime


@dataclass(frozen=True)
class EigenDegrees:
    d: tuple  # (d_1, ..., d_{n-1})


def eigen_degrees(c: SECover) -> EigenDegrees:
    """Dimensions of the mu_n-eigenspaces of the regular differentials."""
    n = c.n
    if c.branch_count < 2:
        raise DomainError("eigenspace dimensions require at least 2 branch points")
    degs = c.degrees
    n_inf = c.n_infinity
    out = []
    for i in range(1, n):
        val = Fraction(0)
        for j in range(1, n):
            val += degs[j - 1] * Fraction((i * j) % n, n)
        val += Fraction((i * n_inf) % n, n)
        val -= 1
        if val.denominator != 1:
            raise InvariantViolation(f"eigenspace dimension is not an integer: {val}")
        if val < 0:
            raise InvariantViolation(f"negative eigenspace dimension: {val}")
        out.append(int(val))
    ed = EigenDegrees(tuple(out))
    if sum(out) != genus_se(c):
        raise InvariantViolation("eigenspace dimensions do not sum to the genus")
    return ed


def sigma_permutation(n: int, p: int) -> dict:
    """The permutation with p*sigma(i) = i mod n, on {1, ..., n-1}."""
    if math.gcd(n, p) != 1:
        raise DomainError("p must be invertible mod n")
    p_inv = pow(p, -1, n)
    return {i: (i * p_inv) % n for i in range(1, n)}


def a_number(c: SECover) -> int:
    """g - sum_i min(d_i, d_{sigma(i)}), via the Cartier-rank bound."""
    if c.field.p != 2:
        raise DomainError("the a-number formula here is specific to characteristic 2")
    g = genus_se(c)
    d = eigen_degrees(c).d
    sigma = sigma_permutation(c.n, 2)
    rank = sum(min(d[i - 1], d[sigma[i] - 1]) for i in range(1, c.n))
    a = g - rank
    if a < 0:
        raise InvariantViolation("negative a-number")
    return a


def ordinary_degree_tuple(n: int, degs: tuple) -> bool:
    """Combinatorial ordinarity criterion on (deg f_1, ..., deg f_{n-1}), p = 2.

    Ordinary iff the eigenspace dimensions d_i are constant on the orbits of
    sigma (i -> i/2 mod n).  When 2 generates (Z/nZ)^* -- in particular for
    n = 3 and n = 5 -- sigma is a single cycle and this reduces to the
    degree-symmetry condition of :func:`degree_symmetry_criterion`; for
    n = 7 the symmetric condition is strictly weaker (see that function).
    """
    n_inf = (-sum(i * d for i, d in enumerate(degs, start=1))) % n
    x = [degs[j - 1] + (1 if j == n_inf else 0) for j in range(1, n)]
    d = []
    for i in range(1, n):
        val = sum(xj * Fraction((i * j) % n, n) for j, xj in enumerate(x, start=1)) - 1
        d.append(val)
    sigma = sigma_permutation(n, 2)
    return all(d[i - 1] == d[sigma[i] - 1] for i in range(1, n))


def degree_symmetry_criterion(n: int, degs: tuple) -> bool:
    """The plain degree-symmetry condition: deg f_i = deg f_{n-i} (n_inf = 0)
    or deg f_i + 1 = deg f_{n-i} at i = n_inf with the rest symmetric.

    Sufficient for ordinarity for every odd prime n, and equivalent to it
    exactly when 2 is a primitive root mod n; y^7 = x^3 (x+1)^6 over F_2 is
    ordinary (p-rank 3 = g, by point counting) without being symmetric.
    """
    n_inf = (-sum(i * d for i, d in enumerate(degs, start=1))) % n
    if n_inf == 0:
        return all(degs[i - 1] == degs[n - i - 1] for i in range(1, n))
    i = n_inf
    if degs[i - 1] + 1 != degs[n - i - 1]:
        return False
    return all(degs[j - 1] == degs[n - j - 1] for j in range(1, n) if j not in (i, n - i))


def is_ordinary_se(c: SECover) -> bool:
    return ordinary_degree_tuple(c.n, c.degrees)


# ---------------------------------------------------------------------------
# Exact rational linear algebra and the kernel verifier
# ---------------------------------------------------------------------------


def rref(matrix):
    """Reduced row echelon form over Fraction; returns (rref, pivot columns)."""
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def matrix_rank(matrix) -> int:
    return len(rref(matrix)[1])


def kernel_basis(matrix):
    """Basis of the right kernel over Fraction, scaled to integer vectors."""
    red, pivots = rref(matrix)
    cols = len(matrix[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        denom = math.lcm(*[x.denominator for x in v])
        basis.append([int(x * denom) for x in v])
    return basis


def fractional_part_matrix(n: int):
    """A with A_ij = <ij/n>, 1 <= i, j <= n-1, exact rationals."""
    return [[Fraction((i * j) % n, n) for j in range(1, n)] for i in range(1, n)]


def verify_kernel_lemma(n: int) -> bool:
    """Check the explicit kernel of the fractional-part matrix.

    (i) the stated vectors x^(k) are killed by A, (ii) rank(A) = (n+1)/2,
    (iii) every kernel basis vector v satisfies v_k = v_{n-k}.
    """
    if not _is_odd_prime(n):
        raise DomainError("n must be an odd prime")
    if n > 101:
        raise ResourceGuardError("kernel verification guarded at n <= 101")
    a = fractional_part_matrix(n)
    dim = n - 1
    for k in range(1, (n - 3) // 2 + 1):
        x = [0] * dim
        x[k - 1] += 1
        x[n - k - 1] += 1
        x[(n - 1) // 2 - 1] -= 1
        x[(n + 1) // 2 - 1] -= 1
        for row in a:
            if sum(ri * xi for ri, xi in zip(row, x)) != 0:
                return False
    if matrix_rank(a) != (n + 1) // 2:
        return False
    for v in kernel_basis(a):
        for k in range(1, n):
            if v[k - 1] != v[n - k - 1]:
                return False
    return True


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------

MAX_TUPLE_DEGREE = 16

_SQF_CACHE: dict = {}


def squarefree_monic(field: FieldSpec, d: int) -> tuple:
    key = (field, d)
    if key not in _SQF_CACHE:
        _SQF_CACHE[key] = tuple(f for f in enumerate_monic(field, d) if is_squarefree(f))
    return _SQF_CACHE[key]


_TUPLE_FAMILY_CACHE: dict = {}


def enumerate_tuple_family(field: FieldSpec, e: tuple):
    """All tuples of monic squarefree pairwise-coprime polys of degrees e."""
    if sum(e) > MAX_TUPLE_DEGREE:
        raise ResourceGuardError(
            f"tuple family enumeration guarded at total degree {MAX_TUPLE_DEGREE}")

    def rec(idx, chosen, prod):
        if idx == len(e):
            yield tuple(chosen)
            return
        for f in squarefree_monic(field, e[idx]):
            if f.degree > 0 and prod.degree > 0 and gcd_monic(f, prod).degree > 0:
                continue
            yield from rec(idx + 1, chosen + [f], mul_monic(prod, f))
    yield from rec(0, [], poly_one(field))


def count_tuple_family(field: FieldSpec, e: tuple) -> int:
    """|F_{e_1, ..., e_r}|: squarefree pairwise-coprime tuples of given degrees."""
    key = (field, tuple(e))
    if key not in _TUPLE_FAMILY_CACHE:
        _TUPLE_FAMILY_CACHE[key] = sum(1 for _ in enumerate_tuple_family(field, tuple(e)))
    return _TUPLE_FAMILY_CACHE[key]


def degree_tuples(n: int, m: int):
    """All (e_1, ..., e_{n-1}) of non-negative integers with sum m."""
    def rec(slots, total):
        if slots == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in rec(slots - 1, total - first):
                yield (first,) + rest
    yield from rec(n - 1, m)


def enumerate_se_covers(field: FieldSpec, n: int, m: int):
    """All SECover with sum deg(f_i) = m, in degree-tuple order."""
    for e in degree_tuples(n, m):
        for parts in enumerate_tuple_family(field, e):
            yield SECover(field, n, parts)


def census_a_tuples(field: FieldSpec, n: int, m: int) -> int:
    """Route (i): a(m) as the sum of |F_e| over degree tuples with sum m."""
    return sum(count_tuple_family(field, e) for e in degree_tuples(n, m))


def census_a_omega(field: FieldSpec, n: int, m: int) -> int:
    """Route (ii): a(m) = sum over squarefree monic H of degree m of (n-1)^omega(H)."""
    if m == 0:
        return 1
    return sum((n - 1) ** omega(h) for h in squarefree_monic(field, m))


def census_a_euler(field: FieldSpec, n: int, m_max: int) -> list:
    """Route (iii): coefficients of prod_Q (1 + (n-1)|Q|^{-s}) up to order m_max."""
    q = field.q
    coeffs = [0] * (m_max + 1)
    coeffs[0] = 1
    for d in range(1, m_max + 1):
        i_d = count_irreducibles(q, d)
        # multiply by (1 + (n-1) u^d)^{I_d}
        for _ in range(i_d):
            for m in range(m_max, d - 1, -1):
                coeffs[m] += (n - 1) * coeffs[m - d]
    return coeffs


def census_b_tuples(field: FieldSpec, n: int, m: int) -> int:
    """Ordinary count b(m): sum of |F_e| over tuples passing the symmetry criterion."""
    return sum(count_tuple_family(field, e)
               for e in degree_tuples(n, m) if ordinary_degree_tuple(n, e))


def census_se(field: FieldSpec, n: int, m_max: int):
    """Exact (a(m), b(m)) for m <= m_max, with the three a-routes compared.

    Returns a dict m -> (a_m, b_m).  Raises InvariantViolation if the
    tuple-sum, omega-sum and Euler-product routes disagree.
    """
    if not _is_odd_prime(n):
        raise DomainError("n must be an odd prime")
    euler = census_a_euler(field, n, m_max)
    rows = {}
    for m in range(0, m_max + 1):
        a_i = census_a_tuples(field, n, m)
        a_ii = census_a_omega(field, n, m)
        a_iii = euler[m]
        if not a_i == a_ii == a_iii:
            raise InvariantViolation(
                f"census routes disagree at m={m}: {a_i}, {a_ii}, {a_iii}")
        rows[m] = (a_i, census_b_tuples(field, n, m))
    return rows


def ordinary_ratio_se(field: FieldSpec, n: int, m_max: int) -> list:
    """Cumulative ordinary proportion [(m, sum b / sum a)] for m = 2..m_max."""
    rows = census_se(field, n, m_max)
    out = []
    a_total = b_total = 0
    for m in range(0, m_max + 1):
        a_total += rows[m][0]
        b_total += rows[m][1]
        if m >= 2:
            if a_total == 0:
                raise DomainError("zero denominator in ordinary ratio")
            out.append((m, b_total / a_total))
    return out


def random_se_cover(field: FieldSpec, n: int, m: int, rng) -> SECover:
    """A uniformly-chosen degree tuple with sum m, then rejection-sampled
    squarefree pairwise-coprime monic parts of those degrees."""
    if m > MAX_TUPLE_DEGREE:
        raise ResourceGuardError(f"random cover guarded at total degree {MAX_TUPLE_DEGREE}")
    tuples = [e for e in degree_tuples(n, m) if count_tuple_family(field, e) > 0]
    if not tuples:
        raise DomainError(f"no admissible degree tuples with sum {m}")
    e = rng.choice(tuples)
    while True:
        parts = []
        for d in e:
            cs = tuple(rng.randrange(field.q) for _ in range(d))
            parts.append(MonicPoly(field, cs))
        try:
            return SECover(field, n, tuple(parts))
        except DomainError:
            continue


def bdfl_ratio_report(field: FieldSpec, e1: int, e2: int) -> float:
    """|F_{e1,e2}| zeta(2)^2 / (L_1 q^{e1+e2}): near 1 for large q (report only)."""
    from .dirichlet import l_constant, zeta_affine
    q = field.q
    count = count_tuple_family(field, (e1, e2))
    z2 = zeta_affine(q, 2)
    l1 = l_constant(3, q).value
    return float(count * z2 ** 2 / (l1 * q ** (e1 + e2)))


def tuple_weight_sum(q: int, r: int, m_max: int) -> int:
    """sum over tuples (e_1..e_r) with sum <= m_max of q^{sum e_i}."""
    return sum(math.comb(m + r - 1, r - 1) * q ** m for m in range(m_max + 1))


def growth_bound_holds(q: int, r: int, x_log_max: int, margin: float = 1.1) -> bool:
    """Check sum_{q^{e_1+..+e_r}<X} q^{sum e} <= margin * D_r * X * log_q(X)^{r-1}.

    D_r = (2r)^{r-1}/(r-1)!; X runs over powers q^j, j = r..x_log_max.
    """
    d_r = (2 * r) ** (r - 1) / math.factorial(r - 1)
    for j in range(r, x_log_max + 1):
        x = q ** j  # strict inequality q^m < X means m <= j-1
        lhs = tuple_weight_sum(q, r, j - 1)
        rhs = margin * d_r * x * j ** (r - 1)
        if lhs > rhs:
            return False
    return True
