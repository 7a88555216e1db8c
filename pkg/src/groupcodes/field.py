"""Finite field arithmetic GF(p^m) for small prime powers.

Elements are encoded as integers in [0, q) in the polynomial basis: the
element with coefficients (c0, c1, ..., c_{m-1}) (constant term first) has
index c0 + c1*p + ... + c_{m-1}*p^(m-1).  Index 0 is zero, index 1 is one,
and ``elements()`` enumerates the field in increasing index order, so for
GF(4) the canonical order is 0, 1, x, x+1.

All binary operations are table lookups on precomputed q x q numpy arrays,
which also makes them directly usable on whole arrays via fancy indexing
(``field.add(A, B)`` works elementwise for equally-shaped integer arrays).
"""

from __future__ import annotations

import math
import re
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import NonPrime, ReducibleModulus, UnsupportedSize

#: Largest supported field size.
SIZE_CAP = 256

# Default monic irreducible moduli, constant-first coefficients
# (index i is the coefficient of x^i).  Fixed in source so that element
# encodings are reproducible bit-for-bit across runs and machines.
DEFAULT_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),        # x^2 + x + 1 over GF(2)
    8: (1, 1, 0, 1),     # x^3 + x + 1 over GF(2)
    9: (1, 0, 1),        # x^2 + 1     over GF(3)
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1 over GF(2)
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(math.isqrt(n)) + 1):
        if n % d == 0:
            return False
    return True


def _poly_trim(p: Sequence[int]) -> tuple[int, ...]:
    out = list(p)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> tuple[int, ...]:
    """Remainder of a modulo the monic polynomial m, coefficients mod p."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _poly_trim(a[:dm])


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(modulus) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        # all monic degree-d polynomials over GF(p)
        for idx in range(p ** d):
            coeffs = []
            t = idx
            for _ in range(d):
                coeffs.append(t % p)
                t //= p
            divisor = tuple(coeffs) + (1,)
            if not _poly_mod(modulus, divisor, p):
                return False
    return True


class FiniteField:
    """GF(p^m) with precomputed arithmetic tables.

    Parameters
    ----------
    p : prime characteristic
    m : extension degree (>= 1)
    modulus : monic irreducible polynomial of degree m over GF(p), as a
        constant-first coefficient sequence of length m+1.  Optional for
        m == 1 (where x is used) and for q in the built-in table.
    """

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise NonPrime(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        q = p ** m
        if q > SIZE_CAP:
            raise UnsupportedSize(f"GF({q}) exceeds the size cap {SIZE_CAP}")
        if modulus is None:
            if m == 1:
                modulus = (0, 1)
            elif q in DEFAULT_MODULI:
                modulus = DEFAULT_MODULI[q]
            else:
                raise ReducibleModulus(
                    f"no built-in modulus for GF({q}); supply one explicitly"
                )
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ReducibleModulus(
                f"modulus must be monic of degree {m}, got {modulus}"
            )
        if not _is_irreducible(modulus, p):
            raise ReducibleModulus(f"modulus {modulus} is reducible over GF({p})")

        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        self._build_tables()

    # -- table construction --------------------------------------------

    def _coeff_matrix(self) -> np.ndarray:
        """(q, m) array: row i holds the coefficients of element i."""
        idx = np.arange(self.q)
        cols = []
        for _ in range(self.m):
            cols.append(idx % self.p)
            idx = idx // self.p
        return np.stack(cols, axis=1).astype(np.int64)

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        C = self._coeff_matrix()
        self._coeffs = C.astype(np.uint8)

        enc = p ** np.arange(m, dtype=np.int64)
        self.add_table = (((C[:, None, :] + C[None, :, :]) % p) @ enc).astype(np.uint8)
        self.neg_table = (((-C) % p) @ enc).astype(np.uint8)
        self.sub_table = self.add_table[:, self.neg_table]

        # multiplication: convolve coefficient vectors, then reduce x^d for
        # d >= m using x^m = -(modulus minus leading term)
        prod = np.zeros((q, q, 2 * m - 1), dtype=np.int64)
        for i in range(m):
            for j in range(m):
                prod[:, :, i + j] += np.multiply.outer(C[:, i], C[:, j])
        prod %= p
        red = [(-c) % p for c in self.modulus[:m]]
        for d in range(2 * m - 2, m - 1, -1):
            c = prod[:, :, d].copy()
            prod[:, :, d] = 0
            for j in range(m):
                if red[j]:
                    prod[:, :, d - m + j] = (prod[:, :, d - m + j] + c * red[j]) % p
        self.mul_table = (prod[:, :, :m] @ enc).astype(np.uint8)

        inv = np.zeros(q, dtype=np.uint8)
        for a in range(1, q):
            hits = np.nonzero(self.mul_table[a] == 1)[0]
            if hits.size != 1:
                raise ReducibleModulus(
                    f"element {a} of GF({q}) has no unique inverse; bad modulus"
                )
            inv[a] = hits[0]
        self.inv_table = inv

    # -- arithmetic (ints or numpy arrays) -------------------------------

    def add(self, a, b):
        return self.add_table[a, b]

    def sub(self, a, b):
        return self.sub_table[a, b]

    def mul(self, a, b):
        return self.mul_table[a, b]

    def neg(self, a):
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return int(self.inv_table[a])

    def div(self, a, b: int):
        return self.mul_table[a, self.inv(b)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        base = int(a)
        while e:
            if e & 1:
                out = int(self.mul_table[out, base])
            base = int(self.mul_table[base, base])
            e >>= 1
        return out

    # -- element views ----------------------------------------------------

    def elements(self) -> range:
        """All q elements in canonical (index) order, zero first."""
        return range(self.q)

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Polynomial coefficients of element a, constant term first."""
        return tuple(int(c) for c in self._coeffs[a])

    def from_coeffs(self, coeffs: Iterable[int]) -> int:
        out = 0
        for i, c in enumerate(coeffs):
            out += (int(c) % self.p) * self.p ** i
        if not 0 <= out < self.q:
            raise ValueError(f"coefficient sequence {coeffs!r} out of range")
        return out

    def element_repr(self, a: int) -> str:
        if self.m == 1:
            return str(int(a))
        terms = []
        for i, c in enumerate(self.coeffs(a)):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                xp = "x" if i == 1 else f"x^{i}"
                terms.append(xp if c == 1 else f"{c}*{xp}")
        return " + ".join(terms) if terms else "0"

    # -- text form ---------------------------------------------------------

    def spec_string(self) -> str:
        """Text form ``GF(q)[c0,c1,...]`` (bracket omitted for prime fields)."""
        if self.m == 1:
            return f"GF({self.q})"
        return f"GF({self.q})[{','.join(str(c) for c in self.modulus)}]"

    @classmethod
    def from_spec(cls, text: str) -> "FiniteField":
        """Parse ``GF(q)``, ``GF(p^m)``, or ``GF(q)[c0,c1,...]``."""
        s = text.strip().replace(" ", "")
        m = re.fullmatch(r"GF\((\d+)(?:\^(\d+))?\)(?:\[([\d,]+)\])?", s)
        if m is None:
            raise ValueError(f"bad field spec {text!r}")
        base = int(m.group(1))
        if m.group(2):
            p, deg = base, int(m.group(2))
        else:
            p, deg = _factor_prime_power(base)
        modulus = None
        if m.group(3):
            modulus = tuple(int(c) for c in m.group(3).split(","))
        return field(p, deg, modulus)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"FiniteField({self.spec_string()})"


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise NonPrime(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            t = q
            while t % p == 0:
                t //= p
                m += 1
            if t != 1:
                raise NonPrime(f"{q} is not a prime power")
            return p, m
    raise NonPrime(f"{q} is not a prime power")


@lru_cache(maxsize=None)
def _field_cached(p: int, m: int, modulus: tuple[int, ...] | None) -> FiniteField:
    return FiniteField(p, m, modulus)


def field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FiniteField:
    """Construct (or fetch the cached copy of) GF(p^m)."""
    mod = tuple(int(c) for c in modulus) if modulus is not None else None
    return _field_cached(p, m, mod)


GF2 = field(2)
