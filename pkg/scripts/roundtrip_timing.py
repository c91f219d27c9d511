"""Time grade-2 inversion on random wedges of growing size.

    python scripts/roundtrip_timing.py --trials 500 --bits 10 64 256
"""
import argparse
import random
import time

from wedgemap.exterior import wedge2
from wedgemap.inversion import invert_rank2


def run(n, bits, trials, rng):
    hi = 2**bits
    t0 = time.perf_counter()
    for _ in range(trials):
        x = [rng.randrange(-hi, hi) for _ in range(n)]
        y = [rng.randrange(-hi, hi) for _ in range(n)]
        Y = wedge2(x, y)
        if Y.is_zero():
            continue
        r = invert_rank2(Y)
        assert wedge2(r.x, r.y) == Y
    return (time.perf_counter() - t0) / trials


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--bits", type=int, nargs="+", default=[10, 64, 256])
    ap.add_argument("--dims", type=int, nargs="+", default=[3, 4, 6, 8, 12])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print("n".rjust(4), *(f"{b}-bit".rjust(12) for b in args.bits))
    for n in args.dims:
        cells = [f"{run(n, b, args.trials, rng) * 1e6:10.1f}us" for b in args.bits]
        print(str(n).rjust(4), *cells)


if __name__ == "__main__":
    main()
