"""Read-confusability graph G(n) and maximum independent set (= best code).

Vertex v is the word whose bits are v written MSB-first in n bits.
Neighbourhoods are Python ints used as bitsets.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

import numpy as np

from .channel import read_vector

MAX_GRAPH_N = 16
MAX_EXACT_MIS_N = 12


def word_of(v: int, n: int) -> tuple[int, ...]:
    return tuple((v >> (n - 1 - i)) & 1 for i in range(n))


@dataclass(frozen=True)
class ReadGraph:
    n: int
    ell: int
    t: int
    adj: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.adj)

    def neighbors(self, v: int) -> list[int]:
        a = self.adj[v]
        return [u for u in range(self.order) if (a >> u) & 1]

    def edges(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2


def build_graph(n: int, ell: int, t: int) -> ReadGraph:
    """x ~ y iff x != y and d_H(Read(x), Read(y)) <= 2t."""
    if n > MAX_GRAPH_N:
        raise ValueError(f"build_graph refuses n={n} > {MAX_GRAPH_N} (2^n vertices)")
    order = 1 << n
    reads = np.array([read_vector(word_of(v, n), ell) for v in range(order)], dtype=np.uint8)
    adj = []
    for v in range(order):
        close = (reads != reads[v]).sum(axis=1) <= 2 * t
        close[v] = False
        # bit u of the int is vertex u
        packed = np.packbits(close, bitorder="little")
        adj.append(int.from_bytes(packed.tobytes(), "little"))
    return ReadGraph(n, ell, t, tuple(adj))


@dataclass(frozen=True)
class MISResult:
    size: int
    witness: tuple[tuple[int, ...], ...]
    exact: bool


def _greedy_independent(adj: list[int], full: int) -> list[int]:
    cand = full
    chosen = []
    while cand:
        # minimum remaining degree first
        best, best_deg = -1, None
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            deg = bin(adj[v] & cand).count("1")
            if best_deg is None or deg < best_deg:
                best, best_deg = v, deg
            c ^= low
        chosen.append(best)
        cand &= ~adj[best] & ~(1 << best)
    return chosen


def _max_clique(nbr: list[int], full: int, initial: list[int]) -> list[int]:
    """Branch and bound maximum clique with greedy colouring bounds."""
    best = list(initial)

    def colour_sort(p: int):
        order, bounds = [], []
        colour = 0
        while p:
            colour += 1
            q = p
            while q:
                low = q & -q
                v = low.bit_length() - 1
                p &= ~low
                q &= ~low & ~nbr[v]
                order.append(v)
                bounds.append(colour)
        return order, bounds

    def expand(clique: list[int], p: int):
        nonlocal best
        order, bounds = colour_sort(p)
        for idx in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[idx] <= len(best):
                return
            v = order[idx]
            clique.append(v)
            np_ = p & nbr[v]
            if np_:
                expand(clique, np_)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            p &= ~(1 << v)

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 20000))
    try:
        expand([], full)
    finally:
        sys.setrecursionlimit(limit)
    return best


def max_independent_set(g: ReadGraph, exact: bool | None = None) -> MISResult:
    """Largest t-substitution code in G(n); exact up to n = 12, greedy beyond."""
    if exact is None:
        exact = g.n <= MAX_EXACT_MIS_N
    if exact and g.n > MAX_EXACT_MIS_N:
        raise ValueError(f"exact MIS refuses n={g.n} > {MAX_EXACT_MIS_N}")
    full = (1 << g.order) - 1
    adj = list(g.adj)
    greedy = _greedy_independent(adj, full)
    if exact:
        comp = [full & ~a & ~(1 << v) for v, a in enumerate(adj)]
        # relabel so the colouring sees high complement degree first
        perm = sorted(range(g.order), key=lambda v: -bin(comp[v]).count("1"))
        pos = {v: i for i, v in enumerate(perm)}
        relabel = []
        for v in perm:
            bits, a = 0, comp[v]
            while a:
                low = a & -a
                bits |= 1 << pos[low.bit_length() - 1]
                a ^= low
            relabel.append(bits)
        found = _max_clique(relabel, full, [pos[v] for v in greedy])
        chosen = [perm[i] for i in found]
    else:
        chosen = greedy
    witness = tuple(word_of(v, g.n) for v in sorted(chosen))
    return MISResult(len(chosen), witness, exact)
