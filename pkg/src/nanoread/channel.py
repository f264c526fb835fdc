"""Sliding-window read channel over binary words.

Words and read vectors are plain tuples of ints. Positions in messages and
substitution patterns are 1-based; internal indexing is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

Word = tuple[int, ...]
Read = tuple[int, ...]


@dataclass(frozen=True)
class ChannelParams:
    ell: int
    t: int
    n: int

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError(f"window length ell must be >= 1, got {self.ell}")
        if self.t < 0:
            raise ValueError(f"t must be >= 0, got {self.t}")
        if self.n < 1:
            raise ValueError(f"word length n must be >= 1, got {self.n}")


@dataclass(frozen=True)
class SubstitutionPattern:
    """Edits as (position, new_symbol) pairs; positions are 1-based and distinct."""

    edits: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        positions = [pos for pos, _ in self.edits]
        if len(set(positions)) != len(positions):
            raise ValueError(f"substitution positions must be distinct: {positions}")

    def __len__(self):
        return len(self.edits)

    def noop_count(self, r: Sequence[int]) -> int:
        """Number of edits that rewrite a symbol to its current value."""
        return sum(1 for pos, sym in self.edits if r[pos - 1] == sym)


def as_word(bits: Iterable[int], n: int | None = None) -> Word:
    w = tuple(int(b) for b in bits)
    for i, b in enumerate(w, 1):
        if b not in (0, 1):
            raise ValueError(f"position {i}: expected bit 0/1, got {b}")
    if n is not None and len(w) != n:
        raise ValueError(f"expected length {n}, got {len(w)}")
    return w


def parse_word(s: str) -> Word:
    s = s.strip()
    if not s:
        raise ValueError("empty word")
    if set(s) - {"0", "1"}:
        raise ValueError(f"word must be a 0/1 string, got {s!r}")
    return tuple(int(c) for c in s)


def format_word(x: Sequence[int]) -> str:
    return "".join(str(b) for b in x)


def parse_read(s: str) -> Read:
    s = s.strip()
    if not s:
        raise ValueError("empty read vector")
    try:
        r = tuple(int(tok) for tok in s.split(","))
    except ValueError:
        raise ValueError(f"read vector must be comma-separated integers, got {s!r}") from None
    if any(v < 0 for v in r):
        raise ValueError("read symbols must be non-negative")
    return r


def format_read(r: Sequence[int]) -> str:
    return ",".join(str(v) for v in r)


def read_vector(x: Sequence[int], ell: int) -> Read:
    """Window weights of a length-ell window sliding over zero-padded x.

    >>> read_vector((0, 1, 1, 0, 1, 0), 3)
    (0, 1, 2, 2, 2, 1, 1, 0)
    """
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    n = len(x)
    out = []
    w = 0
    for i in range(n + ell - 1):
        if i < n:
            w += x[i]
        if i >= ell:
            w -= x[i - ell]
        out.append(w)
    return tuple(out)


def mod2_prefix(r: Sequence[int], n: int) -> Word:
    if len(r) < n:
        raise ValueError(f"read vector of length {len(r)} is shorter than n={n}")
    return tuple(v & 1 for v in r[:n])


def invert_parity(p: Sequence[int], ell: int) -> Word:
    """Recover x from the parities of its first n read symbols.

    Uses x_i = p_i ^ p_{i-1} ^ x_{i-ell}, with out-of-range terms zero.
    """
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    x: list[int] = []
    prev = 0
    for i, pi in enumerate(p):
        if pi not in (0, 1):
            raise ValueError(f"position {i + 1}: expected bit 0/1, got {pi}")
        back = x[i - ell] if i >= ell else 0
        x.append(pi ^ prev ^ back)
        prev = pi
    return tuple(x)


def apply_substitutions(r: Sequence[int], pattern: SubstitutionPattern, ell: int | None = None) -> Read:
    out = list(r)
    for pos, sym in pattern.edits:
        if not 1 <= pos <= len(out):
            raise ValueError(f"substitution position {pos} outside [1, {len(out)}]")
        if sym < 0 or (ell is not None and sym > ell):
            raise ValueError(f"substitution symbol {sym} at position {pos} outside [0, {ell}]")
        out[pos - 1] = sym
    return tuple(out)


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(1 for u, v in zip(a, b) if u != v)


def is_t_sub_read_code(words: Iterable[Sequence[int]], params: ChannelParams):
    """Check pairwise read distance > 2t.

    Returns (ok, witness) where witness is None or (x, y, distance) for the
    first violating pair found.
    """
    words = [tuple(w) for w in words]
    for w in words:
        if len(w) != params.n:
            raise ValueError(f"word {format_word(w)} has length {len(w)}, expected {params.n}")
    reads = [read_vector(w, params.ell) for w in words]
    for i, j in combinations(range(len(words)), 2):
        if words[i] == words[j]:
            continue
        d = hamming_distance(reads[i], reads[j])
        if d <= 2 * params.t:
            return False, (words[i], words[j], d)
    return True, None


def reconstruct_from_clean_read(r: Sequence[int], ell: int) -> Word | None:
    """Invert a clean read vector; None if r is not the read of any word."""
    n = len(r) - ell + 1
    if n < 1:
        return None
    x = invert_parity(mod2_prefix(r, n), ell)
    if read_vector(x, ell) != tuple(r):
        return None
    return x
