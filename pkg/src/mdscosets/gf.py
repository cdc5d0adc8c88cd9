"""Small finite fields GF(q), 2 <= q <= 32, with table-driven arithmetic.

Field elements are plain ints 0..q-1.  For GF(p^m) an index is read as an
m-digit base-p number whose digit j is the coefficient of x^j in the residue
polynomial, so addition is digitwise mod p.  Multiplication goes through
exp/log tables over a fixed primitive element, making every operation a
table lookup.

Nothing here is randomized.  The modulus is the first irreducible monic
polynomial of degree m when candidates are ordered by their coefficient
digits (constant term = least significant base-p digit), and the primitive
element is the smallest element index of multiplicative order q - 1, so
building GF(q) twice gives identical tables.
"""

from __future__ import annotations

from functools import lru_cache

MIN_ORDER = 2
MAX_ORDER = 32


def prime_power(q: int) -> tuple[int, int] | None:
    """Split q into (p, m) with q = p**m and p prime, or return None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            return q, 1
        if q % p == 0:
            m, rest = 0, q
            while rest % p == 0:
                rest //= p
                m += 1
            return (p, m) if rest == 1 else None
    return None


def _digits(x: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(x % p)
        x //= p
    return out


def _index(digits: list[int], p: int) -> int:
    x = 0
    for c in reversed(digits):
        x = x * p + c
    return x


def _poly_rem(num: list[int], div: list[int], p: int) -> list[int]:
    """Remainder of num by a monic divisor, coefficients mod p (ascending)."""
    num = list(num)
    dd = len(div) - 1
    for top in range(len(num) - 1, dd - 1, -1):
        c = num[top]
        if c:
            shift = top - dd
            for i in range(dd + 1):
                num[shift + i] = (num[shift + i] - c * div[i]) % p
    return num[:dd]


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(poly) - 1
    if m == 1:
        return True
    for e in range(1, m // 2 + 1):
        for ndiv in range(p**e):
            div = _digits(ndiv, p, e) + [1]
            if not any(_poly_rem(poly, div, p)):
                return False
    return True


def _mul_slow(a: int, b: int, modulus: list[int], p: int, m: int) -> int:
    """Reference product of two element indices (polynomial mult mod modulus)."""
    da, db = _digits(a, p, m), _digits(b, p, m)
    prod = [0] * (2 * m - 1)
    for i, ai in enumerate(da):
        if ai:
            for j, bj in enumerate(db):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _index(_poly_rem(prod, modulus, p) if len(prod) > m else prod, p)


class Field:
    """Arithmetic in GF(q); see the module docstring for the element encoding."""

    def __init__(self, q: int):
        pm = prime_power(q)
        if pm is None or not MIN_ORDER <= q <= MAX_ORDER:
            raise ValueError(
                f"q must be a prime power with {MIN_ORDER} <= q <= {MAX_ORDER}, got {q}"
            )
        self.q = q
        self.p, self.m = pm
        self.modulus = self._find_modulus()
        self._add = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
        self._neg = [next(b for b in range(q) if self._add[a][b] == 0) for a in range(q)]
        self.generator = self._find_generator()
        self._exp = [0] * (q - 1)
        self._log = [0] * q  # log of 0 is never consulted
        x = 1
        for i in range(q - 1):
            self._exp[i] = x
            self._log[x] = i
            x = _mul_slow(x, self.generator, self.modulus, self.p, self.m)
        if x != 1:
            raise AssertionError("generator did not cycle back to 1")

    def _find_modulus(self) -> list[int]:
        if self.m == 1:
            return [0, 1]  # reduce mod x: plain mod-p arithmetic
        for ncand in range(self.p**self.m):
            cand = _digits(ncand, self.p, self.m) + [1]
            if _is_irreducible(cand, self.p):
                return cand
        raise AssertionError(f"no irreducible polynomial of degree {self.m} found")

    def _add_slow(self, a: int, b: int) -> int:
        da, db = _digits(a, self.p, self.m), _digits(b, self.p, self.m)
        return _index([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def _find_generator(self) -> int:
        for g in range(1, self.q):
            order, x = 1, g
            while x != 1:
                x = _mul_slow(x, g, self.modulus, self.p, self.m)
                order += 1
            if order == self.q - 1:
                return g
        raise AssertionError("no primitive element found")

    # -- arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative inverse")
        return self._exp[-self._log[a] % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a**e for e >= 0, with 0**0 = 1 (empty product)."""
        if e < 0:
            raise ValueError("negative exponent; apply inv first")
        if e == 0:
            return 1
        if a == 0:
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self) -> str:
        return f"Field(q={self.q})"


@lru_cache(maxsize=None)
def make_field(q: int) -> Field:
    """Build (or fetch the cached) GF(q).  Deterministic: see module docstring."""
    return Field(q)
