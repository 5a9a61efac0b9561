"""Exact arithmetic in GF(q) for odd prime powers q, with the quadratic character.

Elements are encoded as integers 0..q-1: the element with coefficient vector
(a_0, ..., a_{k-1}) over F_p (constant term first) has index sum(a_j * p**j).
Index 0 is the zero element and index 1 is the multiplicative identity, so the
encoding doubles as the canonical enumeration used for file formats and for
indexing the projective line.
"""

from functools import cached_property

import numpy as np

from .errors import CharacterOfZero, DivisionByZero, NotOddPrimePower


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p**k and p prime, by trial division.

    Raises NotOddPrimePower when q is not an odd prime power >= 3.
    """
    if not isinstance(q, int) or q < 3 or q % 2 == 0:
        raise NotOddPrimePower(f"q={q} is not an odd prime power")
    p = 3
    while p * p <= q:
        if q % p == 0:
            break
        p += 2
    else:
        return q, 1  # q itself is an odd prime
    k = 0
    rest = q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise NotOddPrimePower(f"q={q} is not an odd prime power")
    return p, k


# -- polynomial helpers over F_p (coefficient lists, constant term first) ----

def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_rem(a, m, p):
    """Remainder of a modulo the monic polynomial m."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [c % p for c in a[:dm]]


def _int_digits(code: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        code, r = divmod(code, p)
        out.append(r)
    return out


def canonical_irreducible(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k over F_p in index order.

    Polynomials are ranked by the integer sum(coeffs[j] * p**j) of their lower
    coefficients; irreducibility is decided by trial division against every
    monic polynomial of degree 1..k//2.
    """
    if k == 1:
        return (0, 1)
    for code in range(p**k):
        cand = _int_digits(code, p, k) + [1]
        divisible = False
        for d in range(1, k // 2 + 1):
            for code2 in range(p**d):
                div = _int_digits(code2, p, d) + [1]
                if not any(_poly_rem(cand, div, p)):
                    divisible = True
                    break
            if divisible:
                break
        if not divisible:
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """GF(p^k) for an odd prime power q = p^k, elements encoded as 0..q-1.

    Construction factors q, picks the canonical irreducible polynomial, and
    finds the first primitive element in enumeration order; multiplication is
    then served from discrete exp/log tables of size q.
    """

    def __init__(self, q: int):
        self.p, self.k = factor_prime_power(q)
        self.q = q
        self.irr = canonical_irreducible(self.p, self.k)
        self._weights = [self.p**j for j in range(self.k)]
        self._digits = [tuple(_int_digits(a, self.p, self.k)) for a in range(q)]
        self._build_exp_log()
        self._neg_one = self.neg(1)

    def __repr__(self):
        return f"GF({self.q})"

    @property
    def elems(self) -> range:
        """Canonical enumeration; elems[0] is zero, elems[1] is one."""
        return range(self.q)

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of element a, constant term first."""
        return self._digits[a]

    def element(self, coeffs) -> int:
        """Index of the element with the given coefficient vector."""
        coeffs = list(coeffs)
        if len(coeffs) != self.k or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"need {self.k} coefficients in [0, {self.p})")
        return sum(c * w for c, w in zip(coeffs, self._weights))

    # -- additive structure (coefficientwise mod p) ---------------------------

    def add(self, a: int, b: int) -> int:
        da, db = self._digits[a], self._digits[b]
        return sum((x + y) % self.p * w for x, y, w in zip(da, db, self._weights))

    def sub(self, a: int, b: int) -> int:
        da, db = self._digits[a], self._digits[b]
        return sum((x - y) % self.p * w for x, y, w in zip(da, db, self._weights))

    def neg(self, a: int) -> int:
        return sum(-x % self.p * w for x, w in zip(self._digits[a], self._weights))

    # -- multiplicative structure ---------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        """Polynomial product reduced modulo irr; table-free bootstrap path."""
        prod = _poly_mul(self._digits[a], self._digits[b], self.p)
        rem = _poly_rem(prod + [0] * self.k, self.irr, self.p) if self.k > 1 else [prod[0]]
        return sum(c * w for c, w in zip(rem, self._weights))

    def _build_exp_log(self):
        q = self.q
        for g in range(1, q):
            x, order = g, 1
            while x != 1:
                x = self._mul_raw(x, g)
                order += 1
                if order > q:  # safety; cannot happen for valid fields
                    break
            if order == q - 1:
                self._prim = g
                break
        exp = [1]
        for _ in range(q - 2):
            exp.append(self._mul_raw(exp[-1], self._prim))
        log = [0] * q
        for i, e in enumerate(exp):
            log[e] = i
        self._exp = exp
        self._log = log

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        """a**e by square-and-multiply (e >= 0)."""
        if a == 0:
            return 0 if e else 1
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.pow(a, self.q - 2)

    def primitive_element(self) -> int:
        """First element in enumeration order with multiplicative order q-1."""
        return self._prim

    def chi(self, a: int) -> int:
        """Quadratic character: +1 on non-zero squares, -1 on non-squares."""
        if a == 0:
            raise CharacterOfZero("chi is undefined at zero")
        r = self.pow(a, (self.q - 1) // 2)
        if r == 1:
            return 1
        if r == self._neg_one:
            return -1
        raise AssertionError(f"chi landed on {r}")  # unreachable

    # -- vectorized tables for cube construction ------------------------------

    @cached_property
    def chi_table(self) -> np.ndarray:
        """chi by element index; entry 0 is a 0 sentinel and must not be read."""
        t = np.zeros(self.q, dtype=np.int8)
        for a in range(1, self.q):
            t[a] = self.chi(a)
        t.flags.writeable = False
        return t

    @cached_property
    def _digit_matrix(self) -> np.ndarray:
        return np.array(self._digits, dtype=np.int64)

    def _from_digit_array(self, d: np.ndarray) -> np.ndarray:
        return d @ np.array(self._weights, dtype=np.int64)

    @cached_property
    def add_table(self) -> np.ndarray:
        d = self._digit_matrix
        t = self._from_digit_array((d[:, None, :] + d[None, :, :]) % self.p)
        t.flags.writeable = False
        return t

    @cached_property
    def sub_table(self) -> np.ndarray:
        d = self._digit_matrix
        t = self._from_digit_array((d[:, None, :] - d[None, :, :]) % self.p)
        t.flags.writeable = False
        return t

    @cached_property
    def mul_table(self) -> np.ndarray:
        q = self.q
        exp = np.array(self._exp, dtype=np.int64)
        log = np.array(self._log, dtype=np.int64)
        t = exp[(log[:, None] + log[None, :]) % (q - 1)]
        t[0, :] = 0
        t[:, 0] = 0
        t.flags.writeable = False
        return t
