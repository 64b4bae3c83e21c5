"""Exact arithmetic in GF(q) for small prime powers.

Elements are stored as integers 0..q-1.  For q = p^e the integer is read in
base p, lowest digit first, as the coefficient vector of a polynomial of
degree < e over GF(p); arithmetic is modulo a fixed irreducible polynomial.
Code 0 is the additive identity and code 1 the multiplicative identity in
every supported field.

Supported orders: any prime q up to 101, plus the prime powers 4, 8 and 9
with fixed modulus polynomials (coefficient lists, lowest degree first):

    GF(4): x^2 + x + 1      -> (1, 1, 1)
    GF(8): x^3 + x + 1      -> (1, 1, 0, 1)
    GF(9): x^2 + 1          -> (1, 0, 1)

All operation tables are precomputed at construction (q <= 9 in practice, so
they are tiny) and never mutated afterwards: a `GF` instance is safe to share
read-only between any number of threads, and every operation is pure.
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from .errors import EnumerationCapExceeded

DEFAULT_ENUM_CAP = 10_000_000
ENUM_CAP_ENV_VAR = "LSEXT_ENUM_CAP"

_MAX_PRIME = 101

# Modulus polynomials for the supported extension fields, keyed by q.
_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
}


def enumeration_cap() -> int:
    """Active cap on one-shot enumerations (env LSEXT_ENUM_CAP or default)."""
    raw = os.environ.get(ENUM_CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENUM_CAP_ENV_VAR} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{ENUM_CAP_ENV_VAR} must be positive, got {value}")
    return value


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _factor_prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, e) with p prime, or raise ValueError."""
    if q < 2:
        raise ValueError(f"field order must be >= 2, got {q}")
    for p in range(2, q + 1):
        if not _is_prime(p):
            continue
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, e
    raise ValueError(f"{q} is not a prime power")


class GF:
    """Arithmetic tables for GF(q), with vectorized helpers over numpy arrays.

    Attributes p, e, q and modulus mirror the field description; add/sub/mul
    are (q, q) uint8 lookup tables, neg and inv are length-q vectors (inv[0]
    is a placeholder and must never be read).
    """

    def __init__(self, q: int) -> None:
        p, e = _factor_prime_power(q)
        if e == 1:
            if p > _MAX_PRIME:
                raise ValueError(f"prime fields are supported up to q={_MAX_PRIME}, got {q}")
            modulus = None
        else:
            if q not in _MODULI:
                raise ValueError(
                    f"extension fields are supported only for q in {sorted(_MODULI)}, got {q}"
                )
            modulus = _MODULI[q]
        self.p = p
        self.e = e
        self.q = q
        self.modulus = modulus
        self._build_tables()
        for table in (self.add_table, self.sub_table, self.mul_table, self.neg, self.inv):
            table.setflags(write=False)

    # -- table construction -------------------------------------------------

    def _digits(self, code: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(code % self.p)
            code //= self.p
        return out

    def _code(self, digits: list[int]) -> int:
        value = 0
        for d in reversed(digits):
            value = value * self.p + d
        return value

    def _poly_mul_mod(self, a: list[int], b: list[int]) -> list[int]:
        p, e = self.p, self.e
        prod = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        # reduce by the monic modulus: x^e = -(lower modulus coefficients)
        mod = self.modulus
        assert mod is not None
        for deg in range(2 * e - 2, e - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for j in range(e):
                    prod[deg - e + j] = (prod[deg - e + j] - c * mod[j]) % p
        return prod[:e]

    def _build_tables(self) -> None:
        q = self.q
        if self.e == 1:
            idx = np.arange(q, dtype=np.int64)
            add = (idx[:, None] + idx[None, :]) % q
            sub = (idx[:, None] - idx[None, :]) % q
            mul = (idx[:, None] * idx[None, :]) % q
        else:
            add = np.zeros((q, q), dtype=np.int64)
            sub = np.zeros((q, q), dtype=np.int64)
            mul = np.zeros((q, q), dtype=np.int64)
            digits = [self._digits(c) for c in range(q)]
            for a in range(q):
                for b in range(q):
                    add[a, b] = self._code(
                        [(x + y) % self.p for x, y in zip(digits[a], digits[b])]
                    )
                    sub[a, b] = self._code(
                        [(x - y) % self.p for x, y in zip(digits[a], digits[b])]
                    )
                    mul[a, b] = self._code(self._poly_mul_mod(digits[a], digits[b]))
        self.add_table = add.astype(np.uint8)
        self.sub_table = sub.astype(np.uint8)
        self.mul_table = mul.astype(np.uint8)
        self.neg = self.sub_table[0].copy()
        inv = np.zeros(q, dtype=np.uint8)
        for a in range(1, q):
            hits = np.nonzero(self.mul_table[a] == 1)[0]
            if len(hits) != 1:
                raise ValueError(f"modulus for GF({q}) is not irreducible")
            inv[a] = hits[0]
        self.inv = inv

    # -- scalar / array operations -------------------------------------------

    def check_codes(self, a) -> np.ndarray:
        """Validate element codes and return them as a uint8 array."""
        arr = np.asarray(a)
        if arr.size and (arr.min() < 0 or arr.max() >= self.q):
            raise ValueError(f"element code out of range 0..{self.q - 1}")
        return arr.astype(np.uint8)

    def add(self, a, b):
        return self.add_table[self.check_codes(a), self.check_codes(b)]

    def sub(self, a, b):
        return self.sub_table[self.check_codes(a), self.check_codes(b)]

    def mul(self, a, b):
        return self.mul_table[self.check_codes(a), self.check_codes(b)]

    def invert(self, a):
        """Multiplicative inverse; raises ZeroDivisionError on 0."""
        arr = self.check_codes(a)
        if np.any(arr == 0):
            raise ZeroDivisionError(f"0 has no multiplicative inverse in GF({self.q})")
        return self.inv[arr]

    def elements(self) -> range:
        return range(self.q)

    # -- vector helpers -------------------------------------------------------

    def vecmat(self, vecs, mat) -> np.ndarray:
        """Row-vector times matrix over GF(q): (m, k) x (k, n) -> (m, n)."""
        vecs = np.atleast_2d(self.check_codes(vecs))
        mat = self.check_codes(mat)
        if mat.ndim != 2 or vecs.shape[1] != mat.shape[0]:
            raise ValueError(
                f"shape mismatch: vectors of length {vecs.shape[1]} vs matrix with {mat.shape[0]} rows"
            )
        if self.e == 1:
            return ((vecs.astype(np.int64) @ mat.astype(np.int64)) % self.p).astype(np.uint8)
        acc = np.zeros((vecs.shape[0], mat.shape[1]), dtype=np.uint8)
        for i in range(mat.shape[0]):
            acc = self.add_table[acc, self.mul_table[vecs[:, i][:, None], mat[i][None, :]]]
        return acc

    def inner(self, a, b) -> np.ndarray:
        """Pairwise inner products: (m, k) x (r, k) -> (m, r)."""
        b = np.atleast_2d(self.check_codes(b))
        return self.vecmat(a, b.T)

    def dot(self, u, v) -> int:
        """Inner product of two length-k vectors."""
        return int(self.inner(np.atleast_2d(u), np.atleast_2d(v))[0, 0])

    def scale_to_canonical(self, vec) -> np.ndarray:
        """Scale a nonzero vector so its first nonzero entry becomes 1."""
        vec = self.check_codes(vec)
        nz = np.nonzero(vec)[0]
        if len(nz) == 0:
            raise ValueError("cannot normalize the zero vector")
        lead = int(vec[nz[0]])
        if lead == 1:
            return vec.copy()
        return self.mul_table[self.inv[lead], vec]

    def __repr__(self) -> str:
        return f"GF({self.q})"


@lru_cache(maxsize=32)
def gf(q: int) -> GF:
    """Shared, cached GF(q) instance (tables are immutable, so sharing is safe)."""
    return GF(q)


def canonical_count(q: int, k: int) -> int:
    """Number of one-dimensional subspaces of GF(q)^k: (q^k - 1)/(q - 1)."""
    return (q**k - 1) // (q - 1)


def canonical_representatives(field: GF, k: int, cap: int | None = None) -> np.ndarray:
    """All canonical subspace representatives of GF(q)^k, lexicographically.

    One vector per one-dimensional subspace, normalized so the first nonzero
    entry is 1, returned as a ((q^k-1)/(q-1), k) uint8 array sorted by the
    integer codes read left to right.  This order fixes the row and column
    indexing used everywhere downstream.
    """
    if k < 1:
        raise ValueError(f"dimension must be >= 1, got {k}")
    if cap is None:
        cap = enumeration_cap()
    q = field.q
    count = canonical_count(q, k)
    if count > cap:
        raise EnumerationCapExceeded(count, cap)
    out = np.zeros((count, k), dtype=np.uint8)
    row = 0
    # Lexicographic order: vectors led by a later 1 sort first.
    for lead in range(k - 1, -1, -1):
        tail = k - 1 - lead
        block = q**tail
        out[row : row + block, lead] = 1
        if tail:
            grids = np.unravel_index(np.arange(block), (q,) * tail)
            for j, g in enumerate(grids):
                out[row : row + block, lead + 1 + j] = g
        row += block
    return out
