"""Arithmetic in GF(q) for prime-power q up to 256.

Field elements are plain integers in ``[0, q)``.  For prime q the integer is
the residue mod q.  For q = p^m the base-p digits of the integer are the
coefficients of the element's polynomial representative (constant term =
least significant digit), so the map index <-> polynomial is a bijection.

Every field is backed by full q x q addition/multiplication lookup tables,
which makes all operations plain (vectorizable) table lookups.  Extension
fields are reduced modulo a fixed primitive polynomial per (p, m) — the
Conway polynomials, listed below as documented constants — so arithmetic is
bit-reproducible across runs and the element ``p`` (the polynomial x) is
always a multiplicative generator.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

FIELD_SIZE_CAP = 256

# Conway polynomials for the non-prime prime powers q = p^m <= 256, encoded
# as integers in base p including the leading (monic) coefficient:
# e.g. GF(4) uses x^2 + x + 1 -> 1*4 + 1*2 + 1 = 7.
# Each entry is validated at field construction: x must have multiplicative
# order exactly q - 1.
_CONWAY_POLY = {
    4: 7,      # x^2 + x + 1
    8: 11,     # x^3 + x + 1
    16: 19,    # x^4 + x + 1
    32: 37,    # x^5 + x^2 + 1
    64: 91,    # x^6 + x^4 + x^3 + x + 1
    128: 131,  # x^7 + x + 1
    256: 285,  # x^8 + x^4 + x^3 + x^2 + 1
    9: 17,     # x^2 + 2x + 2
    27: 34,    # x^3 + 2x + 1
    81: 137,   # x^4 + 2x^3 + 2
    243: 250,  # x^5 + 2x + 1
    25: 47,    # x^2 + 4x + 2
    125: 143,  # x^3 + 3x + 3
    49: 94,    # x^2 + 6x + 3
    121: 200,  # x^2 + 7x + 2
    169: 327,  # x^2 + 12x + 2
}


def prime_factorization(x: int) -> list[tuple[int, int]]:
    """Return the prime factorization of x >= 2 as (prime, exponent) pairs."""
    factors = []
    c = 2
    while c * c <= x:
        if x % c == 0:
            e = 0
            while x % c == 0:
                x //= c
                e += 1
            factors.append((c, e))
        c += 1
    if x > 1:
        factors.append((x, 1))
    return factors


def _digits(x: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds: list[int], p: int) -> int:
    v = 0
    for d in reversed(ds):
        v = v * p + d
    return v


@dataclass(frozen=True, eq=False)
class Field:
    """A finite field GF(q) with full lookup tables.

    Immutable after construction; all operations are pure and accept either
    scalar ints or numpy integer arrays (elementwise).
    """

    q: int
    p: int
    m: int
    poly: int | None  # reducing polynomial for q = p^m, m >= 2; None for prime q
    generator: int    # a multiplicative generator of GF(q)*
    add_table: np.ndarray = dc_field(repr=False, default=None)
    mul_table: np.ndarray = dc_field(repr=False, default=None)
    neg_table: np.ndarray = dc_field(repr=False, default=None)
    inv_table: np.ndarray = dc_field(repr=False, default=None)

    def __repr__(self) -> str:
        return f"Field(q={self.q})"

    def elements(self) -> range:
        return range(self.q)

    def add(self, a, b):
        return self.add_table[a, b]

    def sub(self, a, b):
        return self.add_table[a, self.neg_table[b]]

    def neg(self, a):
        return self.neg_table[a]

    def mul(self, a, b):
        return self.mul_table[a, b]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError(f"0 has no multiplicative inverse in GF({self.q})")
        return self.inv_table[a]

    def div(self, a, b):
        return self.mul_table[a, self.inv(b)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        r = 1
        a = int(a)
        while e > 0:
            if e & 1:
                r = int(self.mul_table[r, a])
            a = int(self.mul_table[a, a])
            e >>= 1
        return r

    def element_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        e, order = int(a), 1
        while e != 1:
            e = int(self.mul_table[e, a])
            order += 1
        return order

    def matmul(self, A, B) -> np.ndarray:
        """Matrix product over GF(q); A is (r x t), B is (t x c)."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.m == 1:
            return ((A @ B) % self.p).astype(np.int16)
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int16)
        for t in range(A.shape[1]):
            term = self.mul_table[A[:, t][:, None], B[t, :][None, :]]
            out = self.add_table[out, term]
        return out


def _build_prime_tables(q: int):
    idx = np.arange(q, dtype=np.int64)
    add = ((idx[:, None] + idx[None, :]) % q).astype(np.int16)
    mul = ((idx[:, None] * idx[None, :]) % q).astype(np.int16)
    return add, mul


def _build_extension_tables(q: int, p: int, m: int, poly: int):
    poly_digits = _digits(poly, p, m + 1)
    if poly_digits[m] != 1:
        raise ValueError(f"reducing polynomial for GF({q}) must be monic")

    def xtime(e: int) -> int:
        ds = _digits(e, p, m)
        carry = ds[m - 1]
        shifted = [0] + ds[: m - 1]
        if carry:
            for i in range(m):
                shifted[i] = (shifted[i] - carry * poly_digits[i]) % p
        return _undigits(shifted, p)

    exp = np.zeros(q - 1, dtype=np.int64)
    e = 1
    for i in range(q - 1):
        exp[i] = e
        e = xtime(e)
    if e != 1 or len(set(exp.tolist())) != q - 1:
        raise ValueError(f"polynomial {poly} is not primitive for GF({q})")
    log = np.zeros(q, dtype=np.int64)
    log[exp] = np.arange(q - 1)

    mul = np.zeros((q, q), dtype=np.int16)
    nz = np.arange(1, q)
    mul[np.ix_(nz, nz)] = exp[(log[nz][:, None] + log[nz][None, :]) % (q - 1)]

    digit_mat = np.zeros((q, m), dtype=np.int64)
    for j in range(m):
        digit_mat[:, j] = (np.arange(q) // p**j) % p
    summed = (digit_mat[:, None, :] + digit_mat[None, :, :]) % p
    weights = p ** np.arange(m, dtype=np.int64)
    add = (summed @ weights).astype(np.int16)
    return add, mul


def _find_prime_generator(q: int, mul: np.ndarray) -> int:
    for g in range(2, q):
        e, order = g, 1
        while e != 1:
            e = int(mul[e, g])
            order += 1
        if order == q - 1:
            return g
    return 1  # q == 2


_FIELD_CACHE: dict[int, Field] = {}


def field_new(q: int) -> Field:
    """Construct (or fetch the cached) field GF(q), 2 <= q <= 256.

    Raises ValueError for non-prime-power q, naming the failed factorization.
    """
    if not isinstance(q, int) or isinstance(q, bool):
        raise ValueError(f"field order must be an integer, got {q!r}")
    if q < 2 or q > FIELD_SIZE_CAP:
        raise ValueError(f"field order {q} outside supported range [2, {FIELD_SIZE_CAP}]")
    cached = _FIELD_CACHE.get(q)
    if cached is not None:
        return cached

    factors = prime_factorization(q)
    if len(factors) != 1:
        shown = " * ".join(
            str(p) if e == 1 else f"{p}^{e}" for p, e in factors
        )
        raise ValueError(f"{q} is not a prime power: {q} = {shown}")
    p, m = factors[0]

    if m == 1:
        add, mul = _build_prime_tables(q)
        poly = None
        generator = _find_prime_generator(q, mul)
    else:
        poly = _CONWAY_POLY[q]
        add, mul = _build_extension_tables(q, p, m, poly)
        generator = p  # x itself; primitivity validated during table building

    neg = (add == 0).argmax(axis=1).astype(np.int16)
    inv = (mul == 1).argmax(axis=1).astype(np.int16)
    inv[0] = -1  # sentinel; Field.inv refuses zero before indexing

    for table in (add, mul, neg, inv):
        table.setflags(write=False)

    fld = Field(q=q, p=p, m=m, poly=poly, generator=generator,
                add_table=add, mul_table=mul, neg_table=neg, inv_table=inv)
    _FIELD_CACHE[q] = fld
    return fld
