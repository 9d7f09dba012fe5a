"""Check the lexicon load budget: a 470k-word file in under 2 seconds.

Generates a synthetic wordlist of full-dictionary size, loads it, and
reports wall time. Run with:

    python benchmarks/bench_lexicon.py [--words 470000]
"""

import argparse
import itertools
import tempfile
import time

from vartani.lexicon import load_lexicon

SYLLABLES = [
    "क", "खा", "गि", "घी", "चु", "छू", "जे", "झै", "टो", "ठौ",
    "डं", "ढः", "णा", "ता", "थि", "दी", "धु", "ना", "पे", "फो",
    "बा", "भि", "मी", "या", "रु", "ले", "वो", "शा", "षि", "सू",
    "हे", "ळा",
]


def write_wordlist(path: str, count: int) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        made = 0
        for combo in itertools.product(SYLLABLES, repeat=4):
            fh.write("".join(combo) + "\n")
            made += 1
            if made >= count:
                return


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--words", type=int, default=470_000)
    args = parser.parse_args()

    with tempfile.NamedTemporaryFile(suffix=".txt", delete=False) as fh:
        path = fh.name
    write_wordlist(path, args.words)

    t0 = time.perf_counter()
    lexicon = load_lexicon(path)
    elapsed = time.perf_counter() - t0
    budget = "within" if elapsed < 2.0 else "OVER"
    print(f"loaded {lexicon.size} words in {elapsed:.2f} s ({budget} the 2 s budget)")


if __name__ == "__main__":
    main()
