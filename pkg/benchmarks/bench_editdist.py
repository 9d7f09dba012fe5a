"""Benchmark the compiled edit-distance kernel against the pure-Python one.

Workload mirrors the hot loop of correction/evaluation: distances between
WX transliterations of word-sized strings, ~5 to 15 characters. Run with:

    python benchmarks/bench_editdist.py [--pairs 20000] [--repeat 3]
"""

import argparse
import random
import string
import time

from vartani._editdist_py import levenshtein as py_levenshtein

try:
    from vartani._editdist import levenshtein as c_levenshtein
except ImportError:
    c_levenshtein = None


def make_pairs(n: int, seed: int = 11):
    rng = random.Random(seed)
    alphabet = string.ascii_letters
    out = []
    for _ in range(n):
        la, lb = rng.randint(5, 15), rng.randint(5, 15)
        out.append(
            (
                "".join(rng.choice(alphabet) for _ in range(la)),
                "".join(rng.choice(alphabet) for _ in range(lb)),
            )
        )
    return out


def bench(fn, pairs, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for a, b in pairs:
            fn(a, b)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=20_000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    pairs = make_pairs(args.pairs)
    mismatches = sum(
        1 for a, b in pairs[:500]
        if c_levenshtein is not None and c_levenshtein(a, b) != py_levenshtein(a, b)
    )
    if mismatches:
        raise SystemExit(f"kernels disagree on {mismatches} pairs")

    py_time = bench(py_levenshtein, pairs, args.repeat)
    print(f"pure python : {py_time:8.3f} s  ({args.pairs / py_time:11.0f} pairs/s)")
    if c_levenshtein is None:
        print("compiled    : not built (install with Cython and a C compiler)")
        return
    c_time = bench(c_levenshtein, pairs, args.repeat)
    print(f"compiled    : {c_time:8.3f} s  ({args.pairs / c_time:11.0f} pairs/s)")
    print(f"speedup     : {py_time / c_time:8.1f}x")


if __name__ == "__main__":
    main()
