"""Arithmetic in GF(p^k) on integer element codes.

An element of GF(p^k) = GF(p)[x]/(m(x)) is the polynomial a_0 + a_1 x + ...
+ a_{k-1} x^{k-1}; its code is a_0 + a_1 p + ... + a_{k-1} p^{k-1}. Code 0 is
zero and code 1 is one. The modulus m is the lexicographically smallest monic
irreducible of degree k, comparing coefficient tuples (a_0, ..., a_{k-1}).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import DivisionByZero, InvalidDegree, NonPrime, NotPrimePower

# Largest field order for which the add/neg tables are materialized.
_ADD_TABLE_MAX = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def parse_order(q: int) -> tuple[int, int]:
    """Split a field order ``q`` into ``(p, k)`` with ``q == p**k``."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(f for f in itertools.count(2) if q % f == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, k


# -- polynomials over GF(p), coefficient lists with the constant term first --

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo ``m`` (``m`` nonzero, any leading coefficient)."""
    a = _poly_trim(list(a))
    m = _poly_trim(list(m))
    lead_inv = pow(m[-1], p - 2, p) if p > 2 else 1
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _poly_trim(a)
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Exhaustive check: no monic factor of degree 1..deg//2 divides ``poly``."""
    k = len(poly) - 1
    for deg in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not _poly_mod(list(poly), list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree ``k`` over GF(p), smallest by (a_0, ..., a_{k-1})."""
    if k == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=k):
        poly = low + (1,)
        if low[0] != 0 and is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {k} over GF({p})")


def _digits(code: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        code, r = divmod(code, p)
        out.append(r)
    return out


def _undigits(digits, p: int) -> int:
    code = 0
    for a in reversed(digits):
        code = code * p + a
    return code


@dataclass(frozen=True)
class FieldSpec:
    """The finite field GF(p^k). Build instances with :func:`make_field`."""

    p: int
    k: int
    q: int
    modulus: tuple[int, ...]

    def __repr__(self):
        return f"GF({self.q})" if self.k == 1 else f"GF({self.p}^{self.k})"

    # Arithmetic tables are derived lazily; they never affect equality.

    @cached_property
    def _exp_log(self) -> tuple[list[int], list[int]]:
        q = self.q
        for g in range(1 if q == 2 else 2, q):
            exp = [1]
            x = 1
            for _ in range(q - 2):
                x = self.poly_mul(x, g)
                if x == 1:
                    break
                exp.append(x)
            else:
                if self.poly_mul(x, g) != 1:
                    continue
                log = [0] * q
                for e, v in enumerate(exp):
                    log[v] = e
                return exp + exp, log
        raise AssertionError(f"no primitive element found in {self!r}")

    @cached_property
    def _add_table(self) -> list[list[int]] | None:
        if self.q > _ADD_TABLE_MAX:
            return None
        return [[self._add_digits(a, b) for b in range(self.q)] for a in range(self.q)]

    def _add_digits(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        return _undigits([(x + y) % p for x, y in zip(_digits(a, p, k), _digits(b, p, k))], p)

    def poly_mul(self, a: int, b: int) -> int:
        """Multiply by polynomial product reduced modulo the modulus (no tables)."""
        p, k = self.p, self.k
        if k == 1:
            return a * b % p
        prod = _poly_mul(_poly_trim(_digits(a, p, k)), _poly_trim(_digits(b, p, k)), p)
        return _undigits(_poly_mod(prod, list(self.modulus), p), p)

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        table = self._add_table
        if table is not None:
            return table[a][b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        if self.p == 2:
            return a
        p, k = self.p, self.k
        return _undigits([-x % p for x in _digits(a, p, k)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        exp, log = self._exp_log
        return exp[log[a] + log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self!r}")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        exp, log = self._exp_log
        return exp[(self.q - 1 - log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.k == 1:
            return pow(a, e, self.p)
        exp, log = self._exp_log
        return exp[log[a] * e % (self.q - 1)]


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FieldSpec:
    """GF(p^k); cached, so repeated calls share arithmetic tables."""
    if k < 1:
        raise InvalidDegree(f"extension degree must be >= 1, got {k}")
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    return FieldSpec(p=p, k=k, q=p**k, modulus=smallest_irreducible(p, k))


def field_of_order(q: int) -> FieldSpec:
    return make_field(*parse_order(q))


def parse_field(text: str) -> FieldSpec:
    """Parse ``"9"`` or ``"3^2"`` into a field."""
    text = text.strip()
    try:
        if "^" in text:
            base, _, exp = text.partition("^")
            return make_field(int(base), int(exp))
        return field_of_order(int(text))
    except NonPrime as exc:
        raise NotPrimePower(f"{text} is not a prime power") from exc
