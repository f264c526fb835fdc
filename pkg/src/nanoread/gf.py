"""GF(2^m) arithmetic with log/antilog tables and F_2[x] helpers.

Field elements are ints whose bits are polynomial coefficients in the
primitive element alpha. Binary polynomials are ints too (bit i = x^i).
"""

from __future__ import annotations

from functools import lru_cache

# lowest-weight primitive polynomials, bit i = coefficient of x^i
PRIMITIVE_POLYS = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


class GF2m:
    """The field GF(2^m) built from a primitive polynomial."""

    def __init__(self, m: int, poly: int | None = None):
        if poly is None:
            if m not in PRIMITIVE_POLYS:
                raise ValueError(f"no built-in primitive polynomial for m={m}")
            poly = PRIMITIVE_POLYS[m]
        if poly.bit_length() != m + 1:
            raise ValueError(f"polynomial {poly:#b} does not have degree {m}")
        self.m = m
        self.poly = poly
        self.order = (1 << m) - 1
        self.exp = [0] * (2 * self.order)
        self.log = [-1] * (1 << m)
        v = 1
        for i in range(self.order):
            if self.log[v] != -1:
                raise ValueError(f"polynomial {poly:#b} is not primitive")
            self.exp[i] = v
            self.log[v] = i
            v <<= 1
            if v >> m:
                v ^= poly
        if v != 1:
            raise ValueError(f"polynomial {poly:#b} is not primitive")
        for i in range(self.order, 2 * self.order):
            self.exp[i] = self.exp[i - self.order]

    def __repr__(self):
        return f"GF2m(m={self.m}, poly={self.poly:#b})"

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero in GF(2^m)")
        if a == 0:
            return 0
        return self.exp[(self.log[a] - self.log[b]) % self.order]

    def inv(self, a: int) -> int:
        return self.div(1, a)

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            return 0 if k else 1
        return self.exp[(self.log[a] * k) % self.order]

    def alpha_pow(self, k: int) -> int:
        return self.exp[k % self.order]

    def eval_binary_poly(self, poly: int, a: int) -> int:
        """Evaluate a polynomial with 0/1 coefficients at field element a (Horner)."""
        acc = 0
        for i in range(poly.bit_length() - 1, -1, -1):
            acc = self.mul(acc, a) ^ ((poly >> i) & 1)
        return acc

    def minimal_polynomial(self, k: int) -> int:
        """Minimal polynomial of alpha^k over F_2, as a binary int."""
        coset = cyclotomic_coset(k, self.m)
        # prod (x - alpha^j) over the coset, coefficients in GF(2^m)
        coeffs = [1]
        for j in coset:
            root = self.alpha_pow(j)
            nxt = [0] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i + 1] ^= c
                nxt[i] ^= self.mul(c, root)
            coeffs = nxt
        out = 0
        for i, c in enumerate(coeffs):
            if c not in (0, 1):
                raise ArithmeticError("minimal polynomial has non-binary coefficient")
            out |= c << i
        return out


@lru_cache(maxsize=None)
def field(m: int) -> GF2m:
    return GF2m(m)


def cyclotomic_coset(k: int, m: int) -> tuple[int, ...]:
    order = (1 << m) - 1
    k %= order
    coset = []
    j = k
    while j not in coset:
        coset.append(j)
        j = (2 * j) % order
    return tuple(sorted(coset))


def poly_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_mod(a: int, b: int) -> int:
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a
