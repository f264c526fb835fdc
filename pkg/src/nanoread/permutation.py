"""Block-interleaving coordinate permutation pi_p and its index map."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence


@dataclass(frozen=True)
class PermSpec:
    n: int
    p: int
    ell: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.p < 1:
            raise ValueError(f"p must be >= 1, got {self.p}")
        if self.ell < 2:
            raise ValueError(f"ell must be >= 2, got {self.ell}")

    @property
    def rows_groups(self) -> int:
        return self.n // (self.p * self.ell)

    @property
    def covered(self) -> int:
        """Length of the interleaved prefix, 2*p*m."""
        return 2 * self.p * (self.ell // 2) * self.rows_groups


@lru_cache(maxsize=256)
def _index_map(n: int, p: int, ell: int) -> tuple[int, ...]:
    order = []
    for i in range(n // (p * ell)):
        for j in range(ell // 2):
            for k in range(p):
                base = (i * p + k) * ell + 2 * j
                order.extend((base + 1, base + 2))
    used = set(order)
    order.extend(c for c in range(1, n + 1) if c not in used)
    return tuple(order)


def f_pi(spec: PermSpec) -> tuple[int, ...]:
    """1-based map with pi_p(x)_i = x_{f(i)}.

    >>> f_pi(PermSpec(6, 2, 3))
    (1, 2, 4, 5, 3, 6)
    """
    return _index_map(spec.n, spec.p, spec.ell)


def apply_pi(x: Sequence[int], spec: PermSpec) -> tuple[int, ...]:
    if len(x) != spec.n:
        raise ValueError(f"expected length {spec.n}, got {len(x)}")
    return tuple(x[c - 1] for c in f_pi(spec))


def invert_pi(y: Sequence[int], spec: PermSpec) -> tuple[int, ...]:
    if len(y) != spec.n:
        raise ValueError(f"expected length {spec.n}, got {len(y)}")
    x = [0] * spec.n
    for i, c in enumerate(f_pi(spec)):
        x[c - 1] = y[i]
    return tuple(x)
