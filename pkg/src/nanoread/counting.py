"""Exact clique counts, cover size, and the resulting redundancy lower bound."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from math import comb

import mpmath

from .cover import lambda_sets

PRECISION_DPS = 50


def _tilde_size(p: int) -> int:
    return (1 << (2 * p)) - 2 * p


def count_cliques_formula(m: int, p: int, t: int) -> int:
    """Number of cliques in the cover of the 2pm-bit graph, exact."""
    if m < 0 or p < 1 or t < 1:
        raise ValueError(f"need m >= 0, p >= 1, t >= 1; got m={m}, p={p}, t={t}")
    lt = _tilde_size(p)
    low = sum((1 << i) * comb(m, i) * lt ** (m - i) for i in range(min(t - 1, m) + 1))
    top = 0
    for r in range(m - t + 1):
        top += comb(r + t - 1, t - 1) * lt ** r * (1 << (2 * p * (m - t - r)))
    return low + (1 << t) * top


def _compositions(total_max: int, parts: int):
    """Tuples of `parts` positive ints with sum <= total_max."""
    if parts == 0:
        yield ()
        return
    for first in range(1, total_max - parts + 2):
        for rest in _compositions(total_max - first, parts - 1):
            yield (first,) + rest


def count_cliques_enumerate(m: int, p: int, t: int) -> int:
    """Count cliques by generating every template tuple and orientation.

    Slow by design; an independent check on count_cliques_formula.
    """
    tilde = lambda_sets(p).lambda_tilde
    total = sum(1 for _ in product(tilde, repeat=m))
    for k in range(1, min(t, m) + 1):
        for gaps in _compositions(m, k):
            rest = m - sum(gaps)
            fillers = [product(tilde, repeat=g - 1) for g in gaps]
            if k < t:
                fillers.append(product(tilde, repeat=rest))
            else:
                fillers.append(range(1 << (2 * p * rest)))
            for _ in product(*fillers):
                for _ in product((0, 1), repeat=k):
                    total += 1
    return total


def cover_params_m(n: int, p: int, ell: int) -> int:
    return (ell // 2) * (n // (p * ell))


def cover_size(n: int, p: int, t: int, ell: int) -> int:
    """|Q_p| = 2^(n - 2pm) * |Q(m, p)|."""
    m = cover_params_m(n, p, ell)
    return (1 << (n - 2 * p * m)) * count_cliques_formula(m, p, t)


@dataclass(frozen=True)
class Log2Cover:
    n: int
    p: int
    t: int
    ell: int
    m: int
    size: int
    value: float
    # n - (2p-1)t, log2 of the negative-binomial partial sum, log2 of the
    # correction factor; None when m < t leaves the partial sum empty
    terms: tuple[float, float, float] | None


def log2_cover_size(n: int, p: int, t: int, ell: int) -> Log2Cover:
    m = cover_params_m(n, p, ell)
    size = cover_size(n, p, t, ell)
    value = math.log2(size)
    terms = None
    if m >= t:
        with mpmath.workdps(PRECISION_DPS):
            lam = mpmath.mpf(_tilde_size(p)) / (1 << (2 * p))
            s2 = mpmath.fsum(comb(r + t - 1, t - 1) * lam ** r for r in range(m - t + 1))
            s1 = mpmath.fsum((1 << i) * comb(m, i) * lam ** (m - i) / mpmath.mpf(2) ** (2 * p * i)
                             for i in range(t))
            corr = 1 + mpmath.mpf(2) ** ((2 * p - 1) * t) * s1 / s2
            terms = (float(n - (2 * p - 1) * t), float(mpmath.log(s2, 2)), float(mpmath.log(corr, 2)))
    return Log2Cover(n, p, t, ell, m, size, value, terms)


def choose_p(n: int, epsilon: float) -> int:
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must be in (0, 1), got {epsilon}")
    return max(1, math.ceil(0.5 * (1 - epsilon) * math.log2(n)))


@dataclass(frozen=True)
class BoundReport:
    n: int
    t: int
    ell: int
    epsilon: float | None
    p: int
    m: int
    log2_cover: float
    bound: float
    t_log2_n: float

    @property
    def gap(self) -> float:
        """bound - t*log2(n); stays bounded below as n grows."""
        return self.bound - self.t_log2_n


def redundancy_lower_bound(n: int, t: int, ell: int, epsilon: float = 0.1,
                           p: int | None = None) -> BoundReport:
    """n - log2|Q_p|, a lower bound on the redundancy of any t-substitution ell-read code."""
    if p is None:
        p = choose_p(n, epsilon)
    lc = log2_cover_size(n, p, t, ell)
    return BoundReport(n, t, ell, epsilon, p, lc.m, lc.value, n - lc.value, t * math.log2(n))


def best_lower_bound(n: int, t: int, ell: int) -> BoundReport:
    """Largest bound over every usable p."""
    best = None
    for p in range(1, n // ell + 1):
        rep = redundancy_lower_bound(n, t, ell, epsilon=None, p=p)
        if best is None or rep.bound > best.bound:
            best = rep
    return best


def partial_sum_s1(s: int, m: int, p: int) -> mpmath.mpf:
    """sum_{i<=s} C(m,i) lam^(m-i) / 2^((2p-1)i) with lam = 1 - 2p/4^p."""
    with mpmath.workdps(PRECISION_DPS):
        lam = 1 - mpmath.mpf(2 * p) / (1 << (2 * p))
        return +mpmath.fsum(comb(m, i) * lam ** (m - i) / mpmath.mpf(2) ** ((2 * p - 1) * i)
                            for i in range(min(s, m) + 1))


def partial_sum_s2(r_max: int, t: int, lam) -> mpmath.mpf:
    """sum_{r<=r_max} C(r+t-1, t-1) lam^r."""
    with mpmath.workdps(PRECISION_DPS):
        lam = mpmath.mpf(lam)
        if not 0 < lam < 1:
            raise ValueError(f"lambda must be in (0, 1), got {lam}")
        return +mpmath.fsum(comb(r + t - 1, t - 1) * lam ** r for r in range(r_max + 1))
