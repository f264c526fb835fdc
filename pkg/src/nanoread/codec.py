"""Substitution-correcting read code from a classical inner code.

A word x is a codeword iff the parities of its first n read symbols form an
inner codeword. Encoding inverts the parity map; decoding corrects the parity
prefix with the inner decoder, since each read substitution flips at most one
parity bit.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .channel import hamming_distance, invert_parity, mod2_prefix, read_vector
from .inner import DecodeFailure, InnerCodeSpec, inner_decode, inner_encode, inner_message

SIM_CHUNK = 1000


@dataclass(frozen=True)
class CodecInstance:
    inner: InnerCodeSpec
    ell: int

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError(f"ell must be >= 1, got {self.ell}")

    @property
    def n(self) -> int:
        return self.inner.n

    @property
    def k(self) -> int:
        return self.inner.k

    @property
    def t(self) -> int:
        return self.inner.t


@dataclass(frozen=True)
class DecodeResult:
    message: tuple[int, ...]
    x: tuple[int, ...]
    corrections: int
    # read-vector distance between Read(x) and the received vector; > t means
    # the decoder landed on a codeword outside the design radius
    residual: int


def construct_codeword(msg: Sequence[int], codec: CodecInstance) -> tuple[int, ...]:
    return invert_parity(inner_encode(msg, codec.inner), codec.ell)


def decode_read(r: Sequence[int], codec: CodecInstance) -> DecodeResult:
    """Recover the message from a possibly corrupted read vector.

    Raises DecodeFailure when the inner decoder detects too many errors.
    """
    n, ell = codec.n, codec.ell
    if len(r) != n + ell - 1:
        raise ValueError(f"read vector length {len(r)} != n + ell - 1 = {n + ell - 1}")
    parity = mod2_prefix(r, n)
    corrected, flips = inner_decode(parity, codec.inner)
    x = invert_parity(corrected, ell)
    residual = hamming_distance(read_vector(x, ell), r)
    return DecodeResult(inner_message(corrected, codec.inner), x, flips, residual)


def code_redundancy(codec: CodecInstance | InnerCodeSpec) -> int:
    inner = codec.inner if isinstance(codec, CodecInstance) else codec
    return inner.n - inner.k


@dataclass(frozen=True)
class SimStats:
    trials: int
    weight: int
    seed: int
    success: int
    miscorrect: int
    fail: int

    @property
    def success_rate(self) -> float:
        return self.success / self.trials if self.trials else 1.0

    def merged(self, other: "SimStats") -> "SimStats":
        return SimStats(self.trials + other.trials, self.weight, self.seed,
                        self.success + other.success, self.miscorrect + other.miscorrect,
                        self.fail + other.fail)


def _simulate_chunk(codec: CodecInstance, trials: int, weight: int, seed: int,
                    entropy) -> SimStats:
    rng = np.random.default_rng(entropy)
    n, k, ell = codec.n, codec.k, codec.ell
    length = n + ell - 1
    ok = mis = fail = 0
    for _ in range(trials):
        msg = tuple(int(b) for b in rng.integers(0, 2, size=k))
        x = construct_codeword(msg, codec)
        r = list(read_vector(x, ell))
        for pos in rng.choice(length, size=weight, replace=False):
            # uniform over the ell other symbols
            shift = int(rng.integers(1, ell + 1))
            r[pos] = (r[pos] + shift) % (ell + 1)
        try:
            res = decode_read(r, codec)
        except DecodeFailure:
            fail += 1
            continue
        if res.message == msg and res.x == x:
            ok += 1
        else:
            mis += 1
    return SimStats(trials, weight, seed, ok, mis, fail)


def simulate(codec: CodecInstance, trials: int, error_weight: int, seed: int,
             workers: int = 1) -> SimStats:
    """Seeded Monte Carlo over random messages and weight-`error_weight` substitutions.

    Trials are cut into fixed chunks with seeds spawned from `seed`, so the
    result does not depend on `workers`.
    """
    length = codec.n + codec.ell - 1
    if not 0 <= error_weight <= length:
        raise ValueError(f"error weight {error_weight} outside [0, {length}]")
    sizes = [min(SIM_CHUNK, trials - s) for s in range(0, trials, SIM_CHUNK)]
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    args = [(codec, size, error_weight, seed, child) for size, child in zip(sizes, children)]
    if workers <= 1 or len(args) <= 1:
        parts = [_simulate_chunk(*a) for a in args]
    else:
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_simulate_chunk, *zip(*args)))
    total = SimStats(0, error_weight, seed, 0, 0, 0)
    for part in parts:
        total = total.merged(part)
    return total
