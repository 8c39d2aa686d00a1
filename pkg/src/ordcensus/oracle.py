"""Independent p-rank oracle: exact point counts over F_{q^k}, the
L-polynomial via Newton's identities and the functional equation, and the
p-rank as the degree of L mod p.

The counting code shares nothing with the combinatorial classification it
checks except the field arithmetic; disagreement means a real bug.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _polyarith as pa
from .errors import DomainError, ResourceGuardError, InvariantViolation
from .fields import ExtField, FieldSpec
from .artin_schreier import ASCover, genus as genus_as, is_ordinary
from .polys import factor, irreducible_polys, local_to_global
from .superelliptic import SECover, a_number, genus_se, is_ordinary_se

MAX_GENUS = 6
MAX_SWEEP = 2 ** 24


@dataclass(frozen=True)
class PointCounts:
    q: int
    genus: int
    counts: tuple  # (N_1, ..., N_k_max)

    def __post_init__(self):
        for k, n_k in enumerate(self.counts, start=1):
            if abs(n_k - (self.q ** k + 1)) ** 2 > 4 * self.genus ** 2 * self.q ** k:
                raise InvariantViolation(
                    f"Weil bound violated: N_{k} = {n_k}, q = {self.q}, g = {self.genus}")


@dataclass(frozen=True)
class LPolynomial:
    q: int
    genus: int
    coeffs: tuple  # (a_0, ..., a_{2g}) exact integers, a_0 = 1

    def __post_init__(self):
        g, q = self.genus, self.q
        if len(self.coeffs) != 2 * g + 1 or self.coeffs[0] != 1:
            raise DomainError("L-polynomial must have a_0 = 1 and degree 2g")
        for i in range(g + 1):
            if self.coeffs[2 * g - i] != q ** (g - i) * self.coeffs[i]:
                raise InvariantViolation("functional equation fails")
        if sum(self.coeffs) <= 0:
            raise InvariantViolation("L(1) = #Jac must be positive")


_EXT_CACHE: dict = {}


def extension_field(field: FieldSpec, k: int) -> ExtField:
    """F_{q^k} as an extension of F_q by its first degree-k irreducible."""
    key = (field, k)
    if key not in _EXT_CACHE:
        _EXT_CACHE[key] = ExtField(field, irreducible_polys(field, k)[0].coeffs)
    return _EXT_CACHE[key]


def _eval_raw(E: ExtField, raw: tuple, x):
    """Evaluate a base-field coefficient tuple at x in the extension."""
    acc = E.zero
    for c in reversed(raw):
        acc = E.add(E.mul(acc, x), E.embed(c))
    return acc


def _guard(field: FieldSpec, g: int, k: int):
    if g > MAX_GENUS:
        raise ResourceGuardError(f"oracle guarded at genus <= {MAX_GENUS}, got {g}")
    if field.q ** k > MAX_SWEEP:
        raise ResourceGuardError(f"point-count sweep q^k = {field.q}^{k} exceeds {MAX_SWEEP}")


def count_points_as(c: ASCover, k: int) -> int:
    """Points of the smooth projective model of y^p - y = f over F_{q^k}."""
    field = c.field
    p = field.p
    _guard(field, genus_as(c), k)
    E = extension_field(field, k)
    numerators = [local_to_global(pl, coeffs) for pl, coeffs in c.branch]
    dens = [pl.poly.full for pl, _ in c.branch]
    inf_poly = ()
    if c.infinity_part is not None:
        inf_poly = (0,) + c.infinity_part  # sum c_j x^j, no constant term
    total = 0
    for x in E.elements():
        den_vals = [_eval_raw(E, d, x) for d in dens]
        if any(v == E.zero for v in den_vals):
            continue  # pole: handled place by place below
        fx = _eval_raw(E, inf_poly, x)
        for num, dv, e in zip(numerators, den_vals,
                              (len(cs) for _, cs in c.branch)):
            fx = E.add(fx, E.mul(_eval_raw(E, num, x), E.inv(E.pow(dv, e))))
        if E.trace(fx) == 0:
            total += p
    # each pole place is totally ramified: one point per root in F_{q^k}
    for pl, _ in c.branch:
        if k % pl.degree == 0:
            total += pl.degree
    total += 1 if c.infinity_part is not None else p
    return total


def count_points_se(c: SECover, k: int) -> int:
    """Points of the smooth projective model of y^n = prod f_i^i over F_{q^k}."""
    field = c.field
    n = c.n
    _guard(field, genus_se(c), k)
    E = extension_field(field, k)
    big_q = field.q ** k
    split = (big_q - 1) % n == 0
    cofactor = (big_q - 1) // n if split else 0
    parts_raw = [(f.full, i) for i, f in enumerate(c.parts, start=1) if f.degree > 0]
    total = 0
    for x in E.elements():
        v = E.one
        ramified = False
        for raw, i in parts_raw:
            fv = _eval_raw(E, raw, x)
            if fv == E.zero:
                ramified = True
                break
            v = E.mul(v, E.pow(fv, i))
        if ramified:
            total += 1  # totally ramified (gcd(n, i) = 1 for prime n)
        elif not split:
            total += 1  # n-th power map is a bijection
        elif E.pow(v, cofactor) == E.one:
            total += n
    if c.epsilon:
        total += 1
    else:
        total += n if split else 1  # leading value 1 is always an n-th power
    return total


def l_polynomial(counts: PointCounts) -> LPolynomial:
    """Recover L from N_1..N_g by Newton's identities + functional equation."""
    g, q = counts.genus, counts.q
    if len(counts.counts) < g:
        raise DomainError(f"need at least N_1..N_{g}")
    s = [None] + [q ** k + 1 - counts.counts[k - 1] for k in range(1, g + 1)]
    a = [Fraction(1)]
    for k in range(1, g + 1):
        acc = Fraction(s[k])
        for i in range(1, k):
            acc += a[i] * s[k - i]
        a_k = -acc / k
        if a_k.denominator != 1:
            raise InvariantViolation(
                f"Newton identity gave non-integer a_{k} = {a_k}: point-count bug")
        a.append(a_k)
    coeffs = [int(x) for x in a]
    for i in range(g - 1, -1, -1):
        coeffs.append(q ** (g - i) * coeffs[i])
    return LPolynomial(q, g, tuple(coeffs))


def counts_from_l(l_poly: LPolynomial, k_max: int) -> tuple:
    """N_1..N_{k_max} implied by L, via Newton's identities run forward."""
    g, q = l_poly.genus, l_poly.q
    a = list(l_poly.coeffs) + [0] * max(0, k_max - 2 * g)
    s = [0] * (k_max + 1)
    for k in range(1, k_max + 1):
        acc = k * a[k]
        for i in range(1, k):
            acc += a[i] * s[k - i]
        s[k] = -acc
    return tuple(q ** k + 1 - s[k] for k in range(1, k_max + 1))


def p_rank(l_poly: LPolynomial, p: int) -> int:
    reduced = [c % p for c in l_poly.coeffs]
    deg = max(i for i, c in enumerate(reduced) if c != 0)
    if deg > l_poly.genus:
        raise InvariantViolation(f"deg(L mod {p}) = {deg} exceeds the genus {l_poly.genus}")
    return deg


@dataclass(frozen=True)
class OracleReport:
    kind: str  # "artin-schreier" | "superelliptic"
    genus: int
    counts: tuple
    l_coeffs: tuple
    p_rank: int
    ordinary_by_criterion: bool
    agree: bool
    detail: str


def _count_fn(c):
    if isinstance(c, ASCover):
        return count_points_as, genus_as(c), is_ordinary(c), "artin-schreier"
    if isinstance(c, SECover):
        return count_points_se, genus_se(c), is_ordinary_se(c), "superelliptic"
    raise DomainError(f"not a cover: {c!r}")


def cross_validate(c) -> OracleReport:
    """Compare the combinatorial ordinarity criterion against the p-rank.

    Counts N_1..N_{2g}, reconstructs L from the first g, checks that L
    reproduces all 2g counts (functional-equation closure), and asserts
    is_ordinary(c) == (p_rank == g).  Superelliptic covers additionally
    assert a_number(c) == 0 iff p_rank == g.
    """
    count, g, ordinary, kind = _count_fn(c)
    p = c.field.p
    counts = PointCounts(c.field.q, g, tuple(count(c, k) for k in range(1, 2 * g + 1)))
    l_poly = l_polynomial(counts)
    problems = []
    if counts_from_l(l_poly, 2 * g) != counts.counts:
        problems.append("L-polynomial does not reproduce the point counts")
    rank = p_rank(l_poly, p)
    if ordinary != (rank == g):
        problems.append(
            f"criterion says ordinary={ordinary} but p-rank is {rank} of genus {g}")
    if kind == "superelliptic":
        a = a_number(c)
        if (a == 0) != (rank == g):
            problems.append(f"a-number {a} inconsistent with p-rank {rank} of genus {g}")
    return OracleReport(kind, g, counts.counts, l_poly.coeffs, rank, ordinary,
                        not problems, "; ".join(problems))


def assert_agreement(c) -> OracleReport:
    """cross_validate, raising InvariantViolation with the cover on failure."""
    report = cross_validate(c)
    if not report.agree:
        from .serialize import cover_to_dict
        raise InvariantViolation(f"oracle disagreement: {report.detail}; "
                                 f"cover = {cover_to_dict(c)}")
    return report
