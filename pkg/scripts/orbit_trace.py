#!/usr/bin/env python3
"""Trace the orbit of a word from the balanced staircase.

Usage: python scripts/orbit_trace.py --m 3 --n 5 --word 10011 [--steps 12]

Parking words with gcd(m, n) = 1 settle onto their unique fixed point;
non-parking words blow up, which shows in the norm column.
"""

import argparse

from ratpark import apply_word, norm, staircase_point
from ratpark.serialize import word_from_text


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, required=True)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--word", required=True)
    parser.add_argument("--steps", type=int, default=12)
    args = parser.parse_args()

    w = word_from_text(args.word, args.m, args.n)
    x = staircase_point(args.m, args.n)
    print(f"word {w}  start {x.coords}  norm {norm(x)}")
    for step in range(1, args.steps + 1):
        nxt = apply_word(x, w)
        marker = "  <- fixed" if nxt == x else ""
        print(f"{step:4d}  {nxt.coords}  norm {norm(nxt)}{marker}")
        if nxt == x:
            break
        x = nxt


if __name__ == "__main__":
    main()
