"""Exact arithmetic in finite fields GF(p^e).

Field elements are plain ints in ``[0, q)``.  For a prime field the int is
the residue mod p.  For an extension field the int packs the coefficient
vector of the residue polynomial in base p::

    a  <->  a0 + a1*x + ... + a_{e-1}*x^(e-1),   a = a0 + a1*p + ... + a_{e-1}*p^(e-1)

Keeping elements as ints makes the enumeration kernels cheap; the
:class:`FieldElement` wrapper provides operator syntax on top.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

__all__ = ["Field", "FieldElement", "field_create", "is_prime"]

# Fields up to this order get dense numpy add/mul tables (used by kernels).
_TABLE_LIMIT = 4096


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


# ---------------------------------------------------------------------------
# Internal GF(p)[x] helpers on raw coefficient tuples (ascending order).
# Used for modulus validation and extension-field arithmetic; the public
# polynomial type in poly.py is built on top of Field and cannot be used here.


def _tup_trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _tup_mul(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _tup_trim(out)


def _tup_mod(a: Sequence[int], m: Sequence[int], p: int) -> tuple[int, ...]:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - 1 - dm
        factor = a[-1] * inv_lead % p
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * mi) % p
        while a and a[-1] == 0:
            a.pop()
    return tuple(a)


def _tup_gcd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    a, b = _tup_trim(a), _tup_trim(b)
    while b:
        a, b = b, _tup_mod(a, b, p)
    return a


def _tup_is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg(f)/2."""
    f = _tup_trim(f)
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for enc in range(p**d):
            div = [0] * (d + 1)
            v = enc
            for i in range(d):
                div[i] = v % p
                v //= p
            div[d] = 1
            if not _tup_mod(f, div, p):
                return False
    return True


def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Monic irreducible of degree e over GF(p) with the smallest integer
    encoding of its low-order coefficients."""
    for enc in range(p**e):
        c = [0] * (e + 1)
        v = enc
        for i in range(e):
            c[i] = v % p
            v //= p
        c[e] = 1
        if _tup_is_irreducible(c, p):
            return tuple(c)
    raise RuntimeError(f"no irreducible of degree {e} over GF({p})")  # unreachable


# ---------------------------------------------------------------------------


class Field:
    """Finite field of order q = p^e.  Immutable; safe to share."""

    __slots__ = ("p", "e", "q", "modulus", "_add_table", "_mul_table", "_inv_table")

    def __init__(self, p: int, e: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"non-prime characteristic: {p}")
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        if e == 1:
            if modulus is not None:
                raise ValueError("modulus is only meaningful for extension fields")
            mod: tuple[int, ...] | None = None
        else:
            if modulus is None:
                mod = _smallest_irreducible(p, e)
            else:
                mod = _tup_trim(int(c) % p for c in modulus)
                if len(mod) - 1 != e:
                    raise ValueError(f"modulus must have degree {e}")
                if mod[-1] != 1:
                    raise ValueError("modulus must be monic")
                if not _tup_is_irreducible(mod, p):
                    raise ValueError("modulus is reducible over the prime field")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = mod
        self._add_table: np.ndarray | None = None
        self._mul_table: np.ndarray | None = None
        self._inv_table: list[int] | None = None

    # -- identity -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.e == other.e
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.e == 1 else f"GF({self.p}^{self.e})"

    # -- element codec ------------------------------------------------------

    def vector(self, a: int) -> tuple[int, ...]:
        """Coefficient vector (length e) of element a."""
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_vector(self, v: Sequence[int]) -> int:
        a = 0
        for c in reversed(list(v)):
            a = a * self.p + (int(c) % self.p)
        return a

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, self._canon(value))

    def _canon(self, a: int) -> int:
        if self.e == 1:
            return int(a) % self.p
        if 0 <= a < self.q:
            return int(a)
        raise ValueError(f"element {a} out of range for {self}")

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    # -- arithmetic on int representatives ------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mul = 1
        for _ in range(self.e):
            out += ((a % p) + (b % p)) % p * mul
            a //= p
            b //= p
            mul *= p
        return out

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mul = 1
        for _ in range(self.e):
            out += (-(a % p)) % p * mul
            a //= p
            mul *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        prod = _tup_mul(self.vector(a), self.vector(b), self.p)
        return self.from_vector(_tup_mod(prod, self.modulus, self.p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        out, base = 1, a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    # -- dense tables for the numpy kernels -----------------------------------

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """(add, mul) tables of shape (q, q), dtype int16."""
        if self.q > _TABLE_LIMIT:
            raise ValueError(f"field too large for dense tables: q={self.q}")
        if self._add_table is None:
            q = self.q
            add = np.empty((q, q), dtype=np.int16)
            mul = np.empty((q, q), dtype=np.int16)
            for a in range(q):
                for b in range(a, q):
                    s = self.add(a, b)
                    m = self.mul(a, b)
                    add[a, b] = add[b, a] = s
                    mul[a, b] = mul[b, a] = m
            self._add_table = add
            self._mul_table = mul
        return self._add_table, self._mul_table

    def inv_list(self) -> list[int]:
        if self._inv_table is None:
            self._inv_table = [0] + [self.inv(a) for a in range(1, self.q)]
        return self._inv_table


@dataclass(frozen=True)
class FieldElement:
    """Element wrapper with operator syntax; equality is representational."""

    field: Field
    value: int

    def _coerce(self, other: "FieldElement | int") -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return other.value
        return self.field._canon(other)

    def __add__(self, other: "FieldElement | int") -> "FieldElement":
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    def __sub__(self, other: "FieldElement | int") -> "FieldElement":
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __mul__(self, other: "FieldElement | int") -> "FieldElement":
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    def __truediv__(self, other: "FieldElement | int") -> "FieldElement":
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, n: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.value, n))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    @property
    def vector(self) -> tuple[int, ...]:
        return self.field.vector(self.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.value}@{self.field!r}"


_FIELD_CACHE: dict[tuple, Field] = {}


def field_create(p: int, e: int = 1, modulus: object | None = None) -> Field:
    """Build (and cache) GF(p^e).

    ``modulus`` may be any object with ascending-order ``coeffs`` (e.g. a
    :class:`grclib.poly.Poly` over GF(p)) or a plain coefficient sequence.
    When absent and e > 1, the lexicographically smallest monic irreducible
    of degree e is selected.
    """
    coeffs: tuple[int, ...] | None
    if modulus is None:
        coeffs = None
    elif hasattr(modulus, "coeffs"):
        coeffs = tuple(modulus.coeffs)  # type: ignore[attr-defined]
    else:
        coeffs = tuple(modulus)  # type: ignore[arg-type]
    key = (p, e, coeffs)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = Field(p, e, coeffs)
    return _FIELD_CACHE[key]
