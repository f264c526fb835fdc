"""Print the cover bound next to BCH redundancy over a range of lengths."""

import argparse

from nanoread.codec import code_redundancy
from nanoread.counting import best_lower_bound, redundancy_lower_bound
from nanoread.inner import bch


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--ns", default="15,31,63,127,255,511,1023")
    ap.add_argument("--t", type=int, default=2)
    ap.add_argument("--ell", type=int, default=2)
    ap.add_argument("--epsilon", type=float, default=0.1)
    a = ap.parse_args()
    print(f"{'n':>6} {'p':>3} {'bound':>8} {'best p':>6} {'best':>8} {'t log2 n':>9} {'BCH r':>6}")
    for n in (int(v) for v in a.ns.split(",")):
        b = redundancy_lower_bound(n, a.t, a.ell, a.epsilon)
        best = best_lower_bound(n, a.t, a.ell)
        try:
            r = str(code_redundancy(bch(n, a.t)))
        except ValueError:
            r = "-"
        print(f"{n:>6} {b.p:>3} {b.bound:>8.3f} {best.p:>6} {best.bound:>8.3f} {b.t_log2_n:>9.3f} {r:>6}")


if __name__ == "__main__":
    main()
