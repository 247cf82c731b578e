#!/usr/bin/env python3
"""Stress the lattice identity and exact-sequence verifiers on random inputs.

Samples irreducible non-permutation 0-1 matrices by rejection and runs every
built-in verifier on each; prints a one-line summary per size.

Usage: verify_random.py [COUNT_PER_SIZE] [SEED]
"""

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ckext import (  # noqa: E402
    ValidationError,
    validate,
    verify_exact_sequence,
    verify_im0_identity,
)


def random_valid(rng, n):
    while True:
        rows = [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]
        try:
            return validate(rows)
        except ValidationError:
            continue


def main():
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 50
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 0
    rng = random.Random(seed)
    all_ok = True
    for n in range(2, 8):
        failures = 0
        for _ in range(count):
            a = random_valid(rng, n)
            rep = verify_exact_sequence(a)
            if not (verify_im0_identity(a) and rep.all_passed()):
                failures += 1
        all_ok = all_ok and failures == 0
        print(f"n={n}: {count} matrices, {failures} verifier failures")
    if not all_ok:
        sys.exit(1)


if __name__ == "__main__":
    main()
