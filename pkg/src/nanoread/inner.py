"""Classical binary inner codes: (shortened) BCH, repetition, identity.

Codewords are bit tuples c_1..c_n. For BCH, c_i is the coefficient of
x^(n-i), so the message occupies the first k positions (systematic).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .gf import GF2m, cyclotomic_coset, field, poly_mod, poly_mul


class DecodeFailure(Exception):
    """The received word is not within the decoder's correction radius."""


@dataclass(frozen=True)
class InnerCodeSpec:
    n: int
    k: int
    t: int
    kind: str
    m: int = 0          # field degree, BCH only
    generator: int = 0  # generator polynomial, BCH only

    def __post_init__(self):
        if self.kind not in ("bch", "repetition", "identity"):
            raise ValueError(f"unknown inner code kind {self.kind!r}")
        if not 0 < self.k <= self.n:
            raise ValueError(f"need 0 < k <= n, got n={self.n}, k={self.k}")

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    @property
    def gf(self) -> GF2m:
        return field(self.m)

    def describe(self) -> str:
        return f"{self.kind}({self.n},{self.k},t={self.t})"


def bch_generator(m: int, t: int) -> int:
    """lcm of the minimal polynomials of alpha, alpha^2, ..., alpha^(2t)."""
    gf = field(m)
    seen = set()
    g = 1
    for j in range(1, 2 * t + 1):
        coset = cyclotomic_coset(j, m)
        if coset in seen:
            continue
        seen.add(coset)
        g = poly_mul(g, gf.minimal_polynomial(j))
    return g


def bch(n: int, t: int, m: int | None = None) -> InnerCodeSpec:
    """Narrow-sense binary BCH code of designed distance 2t+1, shortened to length n."""
    if t < 1:
        raise ValueError("BCH needs t >= 1")
    if m is None:
        m = max(2, n.bit_length())
    if n > (1 << m) - 1:
        raise ValueError(f"n={n} exceeds the natural length {(1 << m) - 1} for m={m}")
    g = bch_generator(m, t)
    k = n - (g.bit_length() - 1)
    if k < 1:
        raise ValueError(f"BCH length {n} too short for t={t} (generator degree {g.bit_length() - 1})")
    return InnerCodeSpec(n, k, t, "bch", m, g)


def repetition(n: int) -> InnerCodeSpec:
    return InnerCodeSpec(n, 1, (n - 1) // 2, "repetition")


def identity(n: int) -> InnerCodeSpec:
    return InnerCodeSpec(n, n, 0, "identity")


def make_inner(kind: str, n: int, t: int | None = None) -> InnerCodeSpec:
    if kind == "bch":
        return bch(n, 2 if t is None else t)
    if kind == "repetition":
        spec = repetition(n)
        if t is not None and t > spec.t:
            raise ValueError(f"repetition length {n} corrects only {spec.t} errors, asked for {t}")
        return spec
    if kind == "identity":
        if t not in (None, 0):
            raise ValueError("identity code corrects no errors; use t=0")
        return identity(n)
    raise ValueError(f"unknown inner code kind {kind!r}")


def _to_int(bits: Sequence[int]) -> int:
    v = 0
    for b in bits:
        v = (v << 1) | b
    return v


def _to_bits(v: int, n: int) -> tuple[int, ...]:
    return tuple((v >> (n - 1 - i)) & 1 for i in range(n))


def inner_encode(msg: Sequence[int], spec: InnerCodeSpec) -> tuple[int, ...]:
    if len(msg) != spec.k:
        raise ValueError(f"message length {len(msg)} != k={spec.k}")
    if any(b not in (0, 1) for b in msg):
        raise ValueError("message must be binary")
    if spec.kind == "identity":
        return tuple(msg)
    if spec.kind == "repetition":
        return (msg[0],) * spec.n
    shifted = _to_int(msg) << (spec.n - spec.k)
    return _to_bits(shifted ^ poly_mod(shifted, spec.generator), spec.n)


def inner_message(codeword: Sequence[int], spec: InnerCodeSpec) -> tuple[int, ...]:
    return tuple(codeword[:spec.k])


def syndromes(word: Sequence[int], spec: InnerCodeSpec) -> list[int]:
    gf = spec.gf
    r = _to_int(word)
    return [gf.eval_binary_poly(r, gf.alpha_pow(j)) for j in range(1, 2 * spec.t + 1)]


def berlekamp_massey(synd: Sequence[int], gf: GF2m) -> list[int]:
    """Error-locator coefficients [1, L_1, ..., L_d] from syndromes S_1..S_2t."""
    c = [1]
    b = [1]
    L = 0
    shift = 1
    last = 1
    for i, s in enumerate(synd):
        d = s
        for j in range(1, L + 1):
            if j < len(c):
                d ^= gf.mul(c[j], synd[i - j])
        if d == 0:
            shift += 1
            continue
        coef = gf.div(d, last)
        new = c + [0] * max(0, len(b) + shift - len(c))
        for j, bj in enumerate(b):
            new[j + shift] ^= gf.mul(coef, bj)
        if 2 * L <= i:
            b, c = c, new
            L = i + 1 - L
            last = d
            shift = 1
        else:
            c = new
            shift += 1
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    if len(c) - 1 != L:
        raise DecodeFailure("error locator degree disagrees with linear complexity")
    return c


def chien_search(locator: Sequence[int], spec: InnerCodeSpec) -> list[int]:
    """Polynomial degrees e in [0, n) with locator(alpha^-e) = 0."""
    gf = spec.gf
    roots = []
    for e in range(spec.n):
        xinv = gf.alpha_pow(-e)
        acc = 0
        for coef in reversed(locator):
            acc = gf.mul(acc, xinv) ^ coef
        if acc == 0:
            roots.append(e)
    return roots


def inner_decode(word: Sequence[int], spec: InnerCodeSpec) -> tuple[tuple[int, ...], int]:
    """Nearest codeword within radius t and the number of flipped bits.

    Raises DecodeFailure when no codeword lies within distance t (detected).
    """
    if len(word) != spec.n:
        raise ValueError(f"word length {len(word)} != n={spec.n}")
    word = tuple(word)
    if spec.kind == "identity":
        return word, 0
    if spec.kind == "repetition":
        ones = sum(word)
        if 2 * ones == spec.n:
            raise DecodeFailure("repetition tie")
        bit = int(2 * ones > spec.n)
        flips = ones if bit == 0 else spec.n - ones
        if flips > spec.t:
            raise DecodeFailure(f"{flips} flips exceed t={spec.t}")
        return (bit,) * spec.n, flips
    synd = syndromes(word, spec)
    if not any(synd):
        return word, 0
    locator = berlekamp_massey(synd, spec.gf)
    degree = len(locator) - 1
    if degree > spec.t:
        raise DecodeFailure(f"error locator degree {degree} exceeds t={spec.t}")
    roots = chien_search(locator, spec)
    if len(roots) != degree:
        raise DecodeFailure(f"locator of degree {degree} has {len(roots)} roots in range")
    out = list(word)
    for e in roots:
        out[spec.n - 1 - e] ^= 1
    if any(syndromes(out, spec)):
        raise DecodeFailure("residual syndrome after correction")
    return tuple(out), degree


def codewords(spec: InnerCodeSpec):
    for msg in product((0, 1), repeat=spec.k):
        yield inner_encode(msg, spec)


def minimum_distance(spec: InnerCodeSpec, max_k: int = 16) -> int:
    """Exhaustive minimum distance; linear codes only need codeword weights."""
    if spec.k > max_k:
        raise ValueError(f"k={spec.k} too large for exhaustive distance (limit {max_k})")
    if spec.k == spec.n and spec.kind == "identity":
        return 1
    return min(sum(c) for c in codewords(spec) if any(c))


def brute_force_decode(word: Sequence[int], spec: InnerCodeSpec) -> tuple[int, ...] | None:
    """Unique nearest codeword within distance t by exhaustive search, else None."""
    best = [c for c in codewords(spec) if sum(a != b for a, b in zip(c, word)) <= spec.t]
    return best[0] if len(best) == 1 else None
