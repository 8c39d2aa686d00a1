"""Monic polynomials over F_q: enumeration, irreducibles, factorization,
squarefree tests and exact partial-fraction decomposition.

A :class:`MonicPoly` stores only its lower coefficients (lowest degree
first); the leading 1 is implicit, so ``len(coeffs) == degree``.  The degree
zero polynomial is the constant 1.  The zero polynomial is never a
MonicPoly; raw coefficient tuples (see :mod:`_polyarith`) are used wherever
general polynomials are needed.

Text format (used by the CLI): comma-separated coefficient representatives,
lowest degree first, with the leading 1 written explicitly.  Over F_2,
``"0,1,1"`` is x^2 + x.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import total_ordering

from . import _polyarith as pa
from .errors import DomainError, ResourceGuardError
from .fields import ExtField, FieldSpec


@total_ordering
@dataclass(frozen=True)
class MonicPoly:
    field: FieldSpec
    coeffs: tuple  # lower coefficients, low degree first; leading 1 implicit

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @property
    def full(self) -> tuple:
        """All coefficients including the leading 1."""
        return self.coeffs + (1,)

    def __lt__(self, other):
        return (self.degree, self.coeffs) < (other.degree, other.coeffs)

    def to_text(self) -> str:
        return ",".join(str(c) for c in self.full)

    @staticmethod
    def from_text(field: FieldSpec, text: str) -> "MonicPoly":
        try:
            cs = tuple(int(t) for t in text.strip().split(","))
        except ValueError as exc:
            raise DomainError(f"bad polynomial text {text!r}") from exc
        if not cs or cs[-1] != 1:
            raise DomainError(f"polynomial {text!r} is not monic (explicit leading 1 required)")
        if any(c < 0 or c >= field.q for c in cs):
            raise DomainError(f"coefficient out of range for q={field.q} in {text!r}")
        return MonicPoly(field, cs[:-1])

    def __str__(self):
        return self.to_text()


def poly_one(field: FieldSpec) -> MonicPoly:
    return MonicPoly(field, ())


def poly_x(field: FieldSpec) -> MonicPoly:
    return MonicPoly(field, (0,))


def mul_monic(a: MonicPoly, b: MonicPoly) -> MonicPoly:
    prod = pa.mul(a.field, a.full, b.full)
    return MonicPoly(a.field, prod[:-1])


def pow_monic(a: MonicPoly, e: int) -> MonicPoly:
    out = poly_one(a.field)
    for _ in range(e):
        out = mul_monic(out, a)
    return out


def gcd_monic(a: MonicPoly, b: MonicPoly) -> MonicPoly:
    g = pa.gcd(a.field, a.full, b.full)
    return MonicPoly(a.field, g[:-1])


def divmod_monic(a: MonicPoly, b: MonicPoly):
    q, r = pa.divmod_(a.field, a.full, b.full)
    return q, r


@total_ordering
@dataclass(frozen=True)
class Place:
    """A monic irreducible polynomial, the index of an Euler factor."""

    poly: MonicPoly

    def __post_init__(self):
        if not is_irreducible(self.poly):
            raise DomainError(f"{self.poly} is not irreducible")

    @property
    def field(self) -> FieldSpec:
        return self.poly.field

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def norm(self) -> int:
        return self.poly.field.q ** self.poly.degree

    def __lt__(self, other):
        return self.poly < other.poly


def enumerate_monic(field: FieldSpec, d: int):
    """All monic polynomials of degree d, lexicographic on (c_0, ..., c_{d-1})."""
    if d < 0:
        raise DomainError("degree must be >= 0")
    for coeffs in itertools.product(field.elements(), repeat=d):
        yield MonicPoly(field, coeffs)


def mobius(n: int) -> int:
    if n < 1:
        raise DomainError("mobius is defined for n >= 1")
    result = 1
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            result = -result
        f += 1
    if n > 1:
        result = -result
    return result


def count_irreducibles(q: int, d: int) -> int:
    """Number of monic irreducible polynomials of degree d over F_q."""
    if d < 1:
        raise DomainError("degree must be >= 1")
    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            total += mobius(e) * q ** (d // e)
    return total // d


_IRRED_CACHE: dict = {}


def irreducible_polys(field: FieldSpec, d: int) -> tuple:
    """All monic irreducibles of degree d, sorted, via trial-division sieve."""
    key = (field, d)
    if key in _IRRED_CACHE:
        return _IRRED_CACHE[key]
    if field.q ** d > 2 ** 22:
        raise ResourceGuardError(f"enumerating irreducibles of degree {d} over F_{field.q}")
    out = []
    for f in enumerate_monic(field, d):
        if _trial_irreducible(f):
            out.append(f)
    result = tuple(out)
    _IRRED_CACHE[key] = result
    return result


_IRRED_TEST_CACHE: dict = {}


def _trial_irreducible(f: MonicPoly) -> bool:
    if f in _IRRED_TEST_CACHE:
        return _IRRED_TEST_CACHE[f]
    d = f.degree
    result = d > 0
    K = f.field
    for e in range(1, d // 2 + 1):
        if not result:
            break
        for g in irreducible_polys(K, e):
            if pa.mod(K, f.full, g.full) == ():
                result = False
                break
    _IRRED_TEST_CACHE[f] = result
    return result


def is_irreducible(f: MonicPoly) -> bool:
    return _trial_irreducible(f)


_PLACES_CACHE: dict = {}


def places_of_degree(field: FieldSpec, d: int) -> tuple:
    key = (field, d)
    if key not in _PLACES_CACHE:
        _PLACES_CACHE[key] = tuple(Place(g) for g in irreducible_polys(field, d))
    return _PLACES_CACHE[key]


def factor(f: MonicPoly) -> tuple:
    """Factorization into (Place, multiplicity), sorted by place."""
    K = f.field
    rem = f.full
    out = []
    d = 1
    while pa.deg(rem) > 0:
        if 2 * d > pa.deg(rem):
            out.append((Place(MonicPoly(K, rem[:-1])), 1))
            break
        for g in irreducible_polys(K, d):
            mult = 0
            while True:
                q, r = pa.divmod_(K, rem, g.full)
                if r != ():
                    break
                rem = q
                mult += 1
            if mult:
                out.append((Place(g), mult))
        d += 1
    out.sort(key=lambda pm: pm[0])
    return tuple(out)


def omega(f: MonicPoly) -> int:
    """Number of distinct irreducible factors."""
    return len(factor(f))


def is_squarefree(f: MonicPoly) -> bool:
    # Over a perfect field f is squarefree iff gcd(f, f') = 1: if f' = 0 then
    # f = g(x^p) is a p-th power, and a repeated factor always divides f'.
    if f.degree == 0:
        return True
    df = pa.derivative(f.field, f.full)
    if not df:
        return False
    return pa.deg(pa.gcd(f.field, f.full, df)) == 0


def is_nth_power_free(f: MonicPoly, n: int) -> bool:
    if n < 2:
        raise DomainError("n must be >= 2")
    return all(m < n for _, m in factor(f))


# ---------------------------------------------------------------------------
# Partial fractions
# ---------------------------------------------------------------------------

_EXT_CACHE: dict = {}


def ext_field_for(place: Place) -> ExtField:
    key = place
    if key not in _EXT_CACHE:
        _EXT_CACHE[key] = ExtField(place.field, place.poly.coeffs)
    return _EXT_CACHE[key]


@dataclass(frozen=True)
class PartialFraction:
    """num/den = polynomial_part + sum over places of the local parts.

    ``parts`` maps each Place to the tuple (c_1, ..., c_e) of coefficients
    of the local part in the variable x_alpha = 1/(x - alpha), alpha a fixed
    root of the place; entries are elements of the place's residue field
    (tuples over the base field).  c_e is nonzero.
    """

    field: FieldSpec
    polynomial_part: tuple  # raw coefficient tuple over the base field
    parts: tuple  # sorted tuple of (Place, coefficient tuple)

    def parts_dict(self) -> dict:
        return dict(self.parts)


def _lift(E: ExtField, raw: tuple) -> tuple:
    return tuple(E.embed(c) for c in raw)


def _shift_by_root(E: ExtField, poly_E: tuple, alpha) -> tuple:
    """Coefficients of f(alpha + t) as a polynomial in t over E."""
    res: tuple = ()
    lin = (alpha, E.one)  # t + alpha
    for c in reversed(poly_E):
        res = pa.add(E, pa.mul(E, res, lin), (c,))
    return res


def _series_trunc(c: tuple, e: int) -> tuple:
    return tuple(c[:e])


def _series_mul(E: ExtField, a: tuple, b: tuple, e: int) -> tuple:
    return _series_trunc(pa.mul(E, a, b), e)


def _series_inv(E: ExtField, b: tuple, e: int) -> tuple:
    """Inverse of a power series with nonzero constant term, mod t^e."""
    b = tuple(b) + (E.zero,) * max(0, e - len(b))
    c0 = E.inv(b[0])
    out = [c0]
    for i in range(1, e):
        acc = E.zero
        for j in range(1, i + 1):
            acc = E.add(acc, E.mul(b[j], out[i - j]))
        out.append(E.neg(E.mul(c0, acc)))
    return tuple(out)


def local_expansion(place: Place, e: int, numerator: tuple) -> tuple:
    """Coefficients (c_1, ..., c_e) of numerator/place^e at a fixed root.

    numerator is a raw coefficient tuple over the base field with
    deg < e * deg(place) and coprime to the place.
    """
    E = ext_field_for(place)
    alpha = E.gen()
    q_full = place.poly.full
    q_E = _lift(E, q_full)
    a_E = _lift(E, numerator)
    # place = (x - alpha) * R(x) over E
    r_E, rem = pa.divmod_(E, q_E, (E.neg(alpha), E.one))
    if pa.trim(E, rem) != ():
        raise DomainError("internal: generator is not a root of its place")
    a_shift = _series_trunc(_shift_by_root(E, a_E, alpha), e)
    r_shift = _series_trunc(_shift_by_root(E, r_E, alpha), e)
    r_pow = (E.one,)
    for _ in range(e):
        r_pow = _series_mul(E, r_pow, r_shift, e)
    s = _series_mul(E, a_shift, _series_inv(E, r_pow, e), e)
    s = tuple(s) + (E.zero,) * max(0, e - len(s))
    coeffs = tuple(s[e - j] for j in range(1, e + 1))
    if coeffs[-1] == E.zero:
        raise DomainError("internal: top local coefficient vanished")
    return coeffs


def local_to_global(place: Place, coeffs: tuple) -> tuple:
    """Inverse of local_expansion: the numerator A with A/place^e = local part.

    ``coeffs`` is (c_1, ..., c_e) over the place's residue field.  The
    returned raw tuple has coefficients in the base field.
    """
    E = ext_field_for(place)
    K = place.field
    e = len(coeffs)
    d = place.degree
    roots = [E.gen()]
    for _ in range(d - 1):
        roots.append(E.frobenius(roots[-1]))
    conj = [list(coeffs)]
    for _ in range(d - 1):
        conj.append([E.frobenius(c) for c in conj[-1]])
    # linear factors (x - root_i) and their e-th powers
    lin = [(E.neg(r), E.one) for r in roots]
    lin_pow = []
    for L in lin:
        acc = (E.one,)
        for _ in range(e):
            acc = pa.mul(E, acc, L)
        lin_pow.append(acc)
    total: tuple = ()
    for i in range(d):
        # B_i = sum_j c_j^(i) (x - alpha_i)^(e-j)
        b: tuple = ()
        pw = (E.one,)
        for j in range(e, 0, -1):
            b = pa.add(E, b, pa.scale(E, pw, conj[i][j - 1]))
            pw = pa.mul(E, pw, lin[i])
        others = (E.one,)
        for i2 in range(d):
            if i2 != i:
                others = pa.mul(E, others, lin_pow[i2])
        total = pa.add(E, total, pa.mul(E, b, others))
    return tuple(E.in_base(c) for c in total)


def partial_fractions(num: tuple, den: MonicPoly) -> PartialFraction:
    """Decompose num/den; num is a raw coefficient tuple, den monic nonzero."""
    K = den.field
    num = pa.trim(K, tuple(num))
    if not num:
        raise DomainError("numerator must be nonzero")
    if pa.deg(pa.gcd(K, num, den.full)) > 0:
        raise DomainError("numerator and denominator are not coprime")
    poly_part, rem = pa.divmod_(K, num, den.full)
    parts = []
    for place, mult in factor(den):
        m_full = pow_monic(place.poly, mult).full
        other, r = pa.divmod_(K, den.full, m_full)
        assert r == ()
        a = pa.mod(K, pa.mul(K, rem, pa.inv_mod(K, other, m_full)), m_full)
        parts.append((place, local_expansion(place, mult, a)))
    parts.sort(key=lambda pc: pc[0])
    return PartialFraction(K, poly_part, tuple(parts))


def reconstruct(pf: PartialFraction) -> tuple:
    """Return (num, den) raw tuples equal to the decomposition as a fraction."""
    K = pf.field
    den: tuple = (1,)
    for place, coeffs in pf.parts:
        den = pa.mul(K, den, pow_monic(place.poly, len(coeffs)).full)
    num = pa.mul(K, pf.polynomial_part, den)
    for place, coeffs in pf.parts:
        a = local_to_global(place, coeffs)
        m_full = pow_monic(place.poly, len(coeffs)).full
        other, r = pa.divmod_(K, den, m_full)
        assert r == ()
        num = pa.add(K, num, pa.mul(K, a, other))
    return num, den
