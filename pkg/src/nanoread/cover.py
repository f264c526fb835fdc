"""Clique cover of the read-confusability graph built from alternating blocks.

After pi_p, the covered prefix of a word splits into m blocks of 2p bits.
A block is "alternating" when it is (01)^j (10)^(p-j) (family 0) or
(10)^j (01)^(p-j) (family 1), j in [1, p]. A clique fixes everything except
up to t alternating blocks, each of which may slide its j within [1, p].
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

from .channel import hamming_distance, read_vector
from .permutation import PermSpec, apply_pi, f_pi, invert_pi

MAX_VERIFY_N = 16


class CliqueViolation(AssertionError):
    """A materialized clique contains a pair farther apart than allowed."""


@dataclass(frozen=True)
class LambdaAlphabet:
    p: int
    lambda1: tuple[str, ...]
    lambda2: tuple[str, ...]
    lambda_tilde: tuple[str, ...]

    @property
    def alternating(self) -> frozenset[str]:
        return frozenset(self.lambda1) | frozenset(self.lambda2)


def alternating_block(family: int, h: int, p: int) -> str:
    a, b = ("01", "10") if family == 0 else ("10", "01")
    return a * h + b * (p - h)


@lru_cache(maxsize=None)
def lambda_sets(p: int) -> LambdaAlphabet:
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    l1 = tuple(alternating_block(0, j, p) for j in range(1, p + 1))
    l2 = tuple(alternating_block(1, j, p) for j in range(1, p + 1))
    alt = set(l1) | set(l2)
    tilde = tuple(w for w in (format(v, f"0{2 * p}b") for v in range(1 << (2 * p))) if w not in alt)
    return LambdaAlphabet(p, l1, l2, tilde)


@lru_cache(maxsize=None)
def _block_table(p: int) -> dict[str, tuple[int, int]]:
    table = {}
    for fam in (0, 1):
        for j in range(1, p + 1):
            table[alternating_block(fam, j, p)] = (fam, j)
    return table


def classify_block(b: Sequence[int] | str, p: int) -> tuple[int, int] | None:
    """(family, j) for an alternating block, None otherwise."""
    s = b if isinstance(b, str) else "".join(str(v) for v in b)
    if len(s) != 2 * p:
        raise ValueError(f"block length {len(s)} != 2p = {2 * p}")
    return _block_table(p).get(s)


@dataclass(frozen=True)
class CoverParams:
    n: int
    p: int
    t: int
    ell: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError(f"t must be >= 1, got {self.t}")
        PermSpec(self.n, self.p, self.ell)

    @property
    def m(self) -> int:
        return (self.ell // 2) * (self.n // (self.p * self.ell))

    @property
    def covered(self) -> int:
        return 2 * self.p * self.m

    @property
    def perm(self) -> PermSpec:
        return PermSpec(self.n, self.p, self.ell)


@dataclass(frozen=True)
class CliqueKey:
    """Canonical clique identifier.

    positions are 1-based block indices; fillers are (u, v_1, ..., w) as bit
    strings, or a single filler holding the whole prefix for a singleton;
    orientation[r] is the family of the r-th designated block.
    """

    level: int
    positions: tuple[int, ...]
    fillers: tuple[str, ...]
    orientation: tuple[int, ...]
    tail: str

    def __post_init__(self):
        if len(self.positions) != self.level or len(self.orientation) != self.level:
            raise ValueError("positions/orientation must have one entry per level")
        if list(self.positions) != sorted(set(self.positions)):
            raise ValueError("block positions must be strictly increasing")
        expected = 1 if self.level == 0 else self.level + 1
        if len(self.fillers) != expected:
            raise ValueError(f"level {self.level} key needs {expected} fillers, got {len(self.fillers)}")


def _blocks(prefix: Sequence[int], p: int) -> list[str]:
    s = "".join(str(b) for b in prefix)
    return [s[i:i + 2 * p] for i in range(0, len(s), 2 * p)]


def assign_clique(x: Sequence[int], params: CoverParams) -> CliqueKey:
    y = apply_pi(x, params.perm)
    cov = params.covered
    blocks = _blocks(y[:cov], params.p)
    tail = "".join(str(b) for b in y[cov:])
    table = _block_table(params.p)
    hits = [b for b, blk in enumerate(blocks) if blk in table]
    level = min(len(hits), params.t, params.m)
    if level == 0:
        return CliqueKey(0, (), ("".join(blocks),), (), tail)
    chosen = hits[:level]
    fillers = []
    prev = 0
    for b in chosen:
        fillers.append("".join(blocks[prev:b]))
        prev = b + 1
    fillers.append("".join(blocks[prev:]))
    orientation = tuple(table[blocks[b]][0] for b in chosen)
    return CliqueKey(level, tuple(b + 1 for b in chosen), tuple(fillers), orientation, tail)


def clique_members(key: CliqueKey, params: CoverParams) -> list[tuple[int, ...]]:
    spec = params.perm
    if key.level == 0:
        images = [key.fillers[0] + key.tail]
    else:
        images = []
        for hs in product(range(1, params.p + 1), repeat=key.level):
            parts = [key.fillers[0]]
            for r, h in enumerate(hs):
                parts.append(alternating_block(key.orientation[r], h, params.p))
                parts.append(key.fillers[r + 1])
            images.append("".join(parts) + key.tail)
    out = []
    for img in images:
        if len(img) != params.n:
            raise ValueError(f"key does not describe a length-{params.n} word")
        out.append(invert_pi(tuple(int(c) for c in img), spec))
    return out


@dataclass
class CoverReport:
    params: CoverParams
    words: int = 0
    cliques: int = 0
    expected_cliques: int = 0
    max_distance: int = 0
    levels: dict[int, int] = field(default_factory=dict)
    counterexample: dict | None = None

    @property
    def verified(self) -> bool:
        return self.counterexample is None and self.cliques == self.expected_cliques


def _designated_coords(key: CliqueKey, params: CoverParams) -> set[int]:
    f = f_pi(params.perm)
    two_p = 2 * params.p
    coords = set()
    for b in key.positions:
        start = (b - 1) * two_p
        coords.update(f[start:start + two_p])
    return coords


def _verify_slice(params: CoverParams, lo: int, hi: int) -> CoverReport:
    n, ell, t = params.n, params.ell, params.t
    rep = CoverReport(params)
    for v in range(lo, hi):
        x = tuple((v >> (n - 1 - i)) & 1 for i in range(n))
        rep.words += 1
        key = assign_clique(x, params)
        members = clique_members(key, params)
        if x not in members:
            rep.counterexample = {"kind": "uncovered", "x": x, "key": key}
            return rep
        if x != min(members):
            continue
        # each clique is checked once, by its smallest member
        rep.cliques += 1
        rep.levels[key.level] = rep.levels.get(key.level, 0) + 1
        free = _designated_coords(key, params)
        reads = [read_vector(w, ell) for w in members]
        for i, j in combinations(range(len(members)), 2):
            d = hamming_distance(reads[i], reads[j])
            rep.max_distance = max(rep.max_distance, d)
            if d > 2 * min(key.level, t):
                rep.counterexample = {"kind": "distance", "x": members[i], "y": members[j],
                                      "distance": d, "key": key}
                return rep
            diff = {c + 1 for c in range(n) if members[i][c] != members[j][c]}
            if not diff <= free:
                rep.counterexample = {"kind": "outside-blocks", "x": members[i], "y": members[j],
                                      "coords": sorted(diff - free), "key": key}
                return rep
    return rep


def verify_cover(params: CoverParams, workers: int = 1) -> CoverReport:
    """Exhaustively check the cover over all 2^n words.

    Checks that every word lies in its assigned clique, that each clique of
    level s has pairwise read distance <= 2s, that members differ only inside
    the designated blocks, and that the number of distinct cliques equals the
    closed-form count.
    """
    from .counting import cover_size

    n = params.n
    if n > MAX_VERIFY_N:
        raise ValueError(f"verify_cover refuses n={n} > {MAX_VERIFY_N} (2^n enumeration)")
    total = 1 << n
    workers = max(1, min(workers, total))
    bounds = [(total * k // workers, total * (k + 1) // workers) for k in range(workers)]
    if workers == 1:
        parts = [_verify_slice(params, 0, total)]
    else:
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_verify_slice, [params] * workers, *zip(*bounds)))
    rep = CoverReport(params, expected_cliques=cover_size(n, params.p, params.t, params.ell))
    for part in parts:
        rep.words += part.words
        rep.cliques += part.cliques
        rep.max_distance = max(rep.max_distance, part.max_distance)
        for lvl, c in part.levels.items():
            rep.levels[lvl] = rep.levels.get(lvl, 0) + c
        if part.counterexample is not None and rep.counterexample is None:
            rep.counterexample = part.counterexample
    rep.levels = dict(sorted(rep.levels.items()))
    return rep


def _template_pair(spec, p, pos, fill, free_bits, fams, hs):
    xs, ys = [], []
    fill = iter(fill)
    designated = dict(zip(pos, range(len(pos))))
    for b in range(pos[-1] + 1):
        if b in designated:
            d = designated[b]
            xs.append(alternating_block(fams[d], hs[d][0], p))
            ys.append(alternating_block(fams[d], hs[d][1], p))
        else:
            blk = next(fill)
            xs.append(blk)
            ys.append(blk)
    xi = tuple(int(c) for c in "".join(xs) + free_bits)
    yi = tuple(int(c) for c in "".join(ys) + free_bits)
    return invert_pi(xi, spec), invert_pi(yi, spec)


def _pair_templates(s: int, p: int, ell: int, groups: int, rng: random.Random | None):
    """Pairs differing in s same-family alternating blocks.

    Non-designated blocks before the last designated one are drawn from the
    non-alternating set; everything after it is free. Exhaustive when rng is
    None, else a single random draw.
    """
    spec = PermSpec(p * ell * groups, p, ell)
    m = (ell // 2) * groups
    tilde = lambda_sets(p).lambda_tilde
    ordered = [(a, b) for a in range(1, p + 1) for b in range(1, p + 1) if a != b]

    def free_len(pos):
        return spec.n - 2 * p * (pos[-1] + 1)

    if rng is not None:
        pos = tuple(sorted(rng.sample(range(m), s)))
        fill = [rng.choice(tilde) for _ in range(pos[-1] + 1 - s)]
        k = free_len(pos)
        free_bits = format(rng.getrandbits(k), f"0{k}b") if k else ""
        fams = [rng.randrange(2) for _ in range(s)]
        hs = [rng.choice(ordered) for _ in range(s)]
        yield _template_pair(spec, p, pos, fill, free_bits, fams, hs)
        return
    for pos in combinations(range(m), s):
        k = free_len(pos)
        for fill in product(tilde, repeat=pos[-1] + 1 - s):
            for free in range(1 << k):
                free_bits = format(free, f"0{k}b") if k else ""
                for fams in product((0, 1), repeat=s):
                    for hs in product(ordered, repeat=s):
                        yield _template_pair(spec, p, pos, fill, free_bits, fams, hs)


def clique_pair_distance_check(s: int, p: int, ell: int, trials: int | None = None,
                               seed: int = 0, groups: int | None = None) -> int:
    """Max read distance over same-family block pairs; raises CliqueViolation above 2s.

    trials=None enumerates every template exactly; otherwise draws `trials`
    random templates from a seeded generator. The word length is p*ell*groups,
    with groups defaulting to the fewest that fit s blocks.
    """
    if p < 2:
        raise ValueError("p must be >= 2 for two distinct blocks in one family")
    if groups is None:
        groups = -(-s // (ell // 2))
    if (ell // 2) * groups < s:
        raise ValueError(f"{groups} row groups hold fewer than s={s} blocks")
    worst = 0
    if trials is None:
        pairs = _pair_templates(s, p, ell, groups, None)
    else:
        rng = random.Random(seed)
        pairs = (pair for _ in range(trials) for pair in _pair_templates(s, p, ell, groups, rng))
    for x, y in pairs:
        d = hamming_distance(read_vector(x, ell), read_vector(y, ell))
        if d > 2 * s:
            raise CliqueViolation(f"d_H(Read(x), Read(y)) = {d} > {2 * s} for x={x}, y={y}")
        worst = max(worst, d)
    return worst
