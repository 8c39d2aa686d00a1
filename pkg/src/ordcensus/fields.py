"""Exact arithmetic in F_q (q = p^k) and in relative extensions F_q[t]/(h).

Elements of ``FieldSpec`` are integers in [0, q) whose base-p digits are the
coordinates in the power basis of the modulus (lowest power first).  Elements
of ``ExtField`` are fixed-length tuples of base-field representatives.
"""

from __future__ import annotations

import itertools

from . import _polyarith as pa
from .errors import DomainError

MAX_Q = 2 ** 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


class FieldSpec:
    """The finite field F_q with q = p^k, with a fixed modulus over F_p."""

    def __init__(self, p: int, k: int = 1, modulus: tuple | None = None):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        if k < 1:
            raise DomainError("extension degree must be >= 1")
        if p ** k > MAX_Q:
            raise DomainError(f"q = {p}^{k} exceeds the enumeration limit {MAX_Q}")
        self.p = p
        self.k = k
        self.q = p ** k
        if modulus is None:
            modulus = default_modulus(p, k)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != k:
                raise DomainError("modulus must have degree k (leading 1 implicit)")
            if k > 1 and not _is_irreducible_prime_field(p, modulus):
                raise DomainError("modulus is not irreducible over F_p")
        self.modulus = modulus
        self.zero = 0
        self.one = 1
        self._mul_table = None

    # -- hashing / equality ------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FieldSpec)
                and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus))

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, k={self.k})"

    # -- element encoding --------------------------------------------------

    def digits(self, a: int) -> tuple:
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return tuple(out)

    def undigits(self, ds) -> int:
        a = 0
        for d in reversed(tuple(ds)):
            a = a * self.p + d
        return a

    def elements(self):
        return range(self.q)

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self.undigits((x + y) % self.p
                             for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self.undigits((-x) % self.p for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        if self._mul_table is None and self.q <= 4096:
            self._build_mul_table()
        if self._mul_table is not None:
            return self._mul_table[a * self.q + b]
        return self._mul_slow(a, b)

    def _mul_slow(self, a: int, b: int) -> int:
        p = self.p
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce modulo the monic modulus
        full_mod = self.modulus + (1,)
        for i in range(len(prod) - 1, self.k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j, m in enumerate(full_mod[:-1]):
                    prod[i - self.k + j] = (prod[i - self.k + j] - c * m) % p
        return self.undigits(prod[: self.k])

    def _build_mul_table(self):
        q = self.q
        table = [0] * (q * q)
        for a in range(q):
            for b in range(a, q):
                v = self._mul_slow(a, b)
                table[a * q + b] = v
                table[b * q + a] = v
        self._mul_table = table

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("inversion of zero")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def trace(self, a: int) -> int:
        """Absolute trace to F_p, returned as an integer in [0, p)."""
        acc = 0
        x = a
        for _ in range(self.k):
            acc = self.add(acc, x)
            x = self.pow(x, self.p)
        if acc >= self.p:
            raise DomainError("trace did not land in the prime field")
        return acc


class ExtField:
    """Relative extension F_q[t]/(h) of a FieldSpec, h monic irreducible.

    ``modulus`` is the tuple of the k lower coefficients of h over the base
    field (leading 1 implicit).  Elements are tuples of length deg(h) of
    base-field representatives, lowest power of t first.
    """

    def __init__(self, base: FieldSpec, modulus: tuple):
        self.base = base
        self.modulus = tuple(modulus)
        self.d = len(self.modulus)
        if self.d < 1:
            raise DomainError("extension degree must be >= 1")
        self.p = base.p
        self.size = base.q ** self.d
        self.zero = (0,) * self.d
        self.one = self._pad((1,))
        self._mod_poly = tuple(self.modulus) + (1,)

    def _pad(self, c) -> tuple:
        c = tuple(c)
        return c + (0,) * (self.d - len(c))

    def __eq__(self, other):
        return (isinstance(other, ExtField)
                and self.base == other.base and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.base, self.modulus))

    def __repr__(self):
        return f"ExtField(base={self.base!r}, d={self.d})"

    def embed(self, a: int) -> tuple:
        """Embed a base-field element as a constant."""
        return self._pad((a,))

    def gen(self) -> tuple:
        """The class of t, a root of the modulus."""
        if self.d == 1:
            return self.embed(self.base.neg(self.modulus[0]))
        return self._pad((0, 1))

    def elements(self):
        qb = self.base.q
        for idx in range(self.size):
            ds = []
            n = idx
            for _ in range(self.d):
                ds.append(n % qb)
                n //= qb
            yield tuple(ds)

    def index(self, z: tuple) -> int:
        n = 0
        for c in reversed(z):
            n = n * self.base.q + c
        return n

    def from_index(self, n: int) -> tuple:
        ds = []
        for _ in range(self.d):
            ds.append(n % self.base.q)
            n //= self.base.q
        return tuple(ds)

    # -- arithmetic --------------------------------------------------------

    def add(self, a, b):
        K = self.base
        return tuple(K.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        K = self.base
        return tuple(K.neg(x) for x in a)

    def sub(self, a, b):
        K = self.base
        return tuple(K.sub(x, y) for x, y in zip(a, b))

    def mul(self, a, b):
        K = self.base
        prod = pa.mul(K, pa.trim(K, a), pa.trim(K, b))
        return self._pad(pa.mod(K, prod, self._mod_poly))

    def inv(self, a):
        K = self.base
        at = pa.trim(K, a)
        if not at:
            raise DomainError("inversion of zero")
        return self._pad(pa.inv_mod(K, at, self._mod_poly))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def frobenius(self, a):
        """The base-field Frobenius z -> z^(q_base)."""
        return self.pow(a, self.base.q)

    def trace(self, a) -> int:
        """Absolute trace to F_p as an integer in [0, p)."""
        total_deg = self.base.k * self.d
        acc = self.zero
        x = a
        for _ in range(total_deg):
            acc = self.add(acc, x)
            x = self.pow(x, self.p)
        for c in acc[1:]:
            if c != 0:
                raise DomainError("trace did not land in the prime field")
        c0 = acc[0]
        if c0 >= self.p:
            raise DomainError("trace did not land in the prime field")
        return c0

    def in_base(self, a) -> int:
        """Coerce an element known to lie in the base field; error otherwise."""
        for c in a[1:]:
            if c != 0:
                raise DomainError("element does not lie in the base field")
        return a[0]


def _is_irreducible_prime_field(p: int, modulus_low: tuple) -> bool:
    """Rabin irreducibility test for a monic polynomial over F_p."""
    K = FieldSpec(p, 1)
    k = len(modulus_low)
    f = tuple(modulus_low) + (1,)
    x = (0, 1)
    xq = pa.pow_mod(K, x, p ** k, f)
    if pa.trim(K, pa.sub(K, xq, x)) != ():
        return False
    for ell in _prime_factors(k):
        xe = pa.pow_mod(K, x, p ** (k // ell), f)
        g = pa.gcd(K, pa.sub(K, xe, x), f)
        if pa.deg(g) != 0:
            return False
    return True


_DEFAULT_MODULUS_CACHE: dict = {}


def default_modulus(p: int, k: int) -> tuple:
    """Lexicographically smallest irreducible monic degree-k polynomial.

    Lexicographic order is on the coefficient tuple (c_0, ..., c_{k-1}),
    constant coefficient most significant.  The leading 1 is implicit.
    """
    key = (p, k)
    if key in _DEFAULT_MODULUS_CACHE:
        return _DEFAULT_MODULUS_CACHE[key]
    if k == 1:
        _DEFAULT_MODULUS_CACHE[key] = (0,)
        return (0,)
    for coeffs in itertools.product(range(p), repeat=k):
        if _is_irreducible_prime_field(p, coeffs):
            _DEFAULT_MODULUS_CACHE[key] = coeffs
            return coeffs
    raise RuntimeError("unreachable: irreducible polynomials exist in every degree")
