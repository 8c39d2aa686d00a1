"""JSON-friendly cover (de)serialization.

Artin-Schreier covers:
    {"q": 2, "p": 2, "branch": [{"place": "0,1", "local": [1]}, ...],
     "infinity": null}
Places use the polynomial text format; local coefficients are residue-field
elements given by their index (base-q digits of the power-basis coordinates,
lowest power most significant digit last), so for a degree-1 place they are
just base-field representatives.  "infinity" is a list of base-field
representatives or null.

Superelliptic covers:
    {"q": 2, "n": 3, "parts": ["0,1", "1,1"]}
with one polynomial text per f_i, i = 1..n-1 (constant parts written "1").
"""

from __future__ import annotations

from .errors import DomainError
from .fields import FieldSpec, is_prime
from .artin_schreier import ASCover
from .polys import MonicPoly, Place, ext_field_for
from .superelliptic import SECover


def field_from_qp(q: int, p: int) -> FieldSpec:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    k = 0
    n = q
    while n > 1 and n % p == 0:
        n //= p
        k += 1
    if n != 1 or k == 0:
        raise DomainError(f"q = {q} is not a power of p = {p}")
    return FieldSpec(p, k)


def cover_to_dict(c) -> dict:
    if isinstance(c, ASCover):
        branch = []
        for place, coeffs in c.branch:
            E = ext_field_for(place)
            branch.append({"place": place.poly.to_text(),
                           "local": [E.index(z) for z in coeffs]})
        return {"q": c.field.q, "p": c.field.p, "branch": branch,
                "infinity": list(c.infinity_part) if c.infinity_part is not None else None}
    if isinstance(c, SECover):
        return {"q": c.field.q, "n": c.n, "parts": [f.to_text() for f in c.parts]}
    raise DomainError(f"not a cover: {c!r}")


def cover_from_dict(data: dict):
    try:
        q = int(data["q"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"bad cover data: {exc}") from exc
    if "n" in data:
        field = field_from_qp(q, 2)
        n = int(data["n"])
        parts = tuple(MonicPoly.from_text(field, t) for t in data["parts"])
        return SECover(field, n, parts)
    if "p" in data:
        field = field_from_qp(q, int(data["p"]))
        branch = []
        for entry in data.get("branch", []):
            place = Place(MonicPoly.from_text(field, entry["place"]))
            E = ext_field_for(place)
            indices = [int(i) for i in entry["local"]]
            if any(i < 0 or i >= E.size for i in indices):
                raise DomainError(f"local coefficient index out of range for {entry}")
            coeffs = tuple(E.from_index(i) for i in indices)
            branch.append((place, coeffs))
        branch.sort(key=lambda pc: pc[0])
        inf = data.get("infinity")
        inf_part = tuple(int(c) for c in inf) if inf is not None else None
        return ASCover(field, tuple(branch), inf_part)
    raise DomainError("cover data must contain 'p' (Artin-Schreier) or 'n' (superelliptic)")
