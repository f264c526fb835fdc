"""Exhaustively verify the clique cover and compare it to the exact best code."""

import argparse
import time

from nanoread.cover import CoverParams, verify_cover
from nanoread.graph import build_graph, max_independent_set

CASES = [(6, 1, 1, 2), (6, 2, 2, 3), (8, 2, 2, 2), (8, 2, 1, 3), (10, 2, 2, 2), (12, 2, 2, 3), (12, 3, 2, 2)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--mis-max-n", type=int, default=8, help="also run exact MIS up to this n")
    a = ap.parse_args()
    for n, p, t, ell in CASES:
        t0 = time.perf_counter()
        rep = verify_cover(CoverParams(n, p, t, ell), workers=a.workers)
        line = (f"n={n} p={p} t={t} ell={ell}: {'ok' if rep.verified else 'FAILED'} "
                f"cliques={rep.cliques} max_d={rep.max_distance}")
        if n <= a.mis_max_n:
            line += f" mis={max_independent_set(build_graph(n, ell, t)).size}"
        print(f"{line} ({time.perf_counter() - t0:.1f}s)", flush=True)


if __name__ == "__main__":
    main()
