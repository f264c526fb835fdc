"""Success/miscorrection/failure rates of the BCH read code versus error weight."""

import argparse

from nanoread.codec import CodecInstance, simulate
from nanoread.inner import bch


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=15)
    ap.add_argument("--t", type=int, default=2)
    ap.add_argument("--ell", type=int, default=2)
    ap.add_argument("--trials", type=int, default=5000)
    ap.add_argument("--max-weight", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    a = ap.parse_args()
    codec = CodecInstance(bch(a.n, a.t), a.ell)
    print(f"{codec.inner.describe()}, ell={a.ell}, {a.trials} trials per weight")
    print("weight success miscorrect fail")
    for w in range(a.max_weight + 1):
        s = simulate(codec, a.trials, w, a.seed + w, workers=a.workers)
        print(f"{w:>6} {s.success:>7} {s.miscorrect:>10} {s.fail:>4}")


if __name__ == "__main__":
    main()
