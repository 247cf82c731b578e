import random

import pytest

from ckext import validate
from ckext.corpus import CORPUS
from ckext.invariants import ValidationError


def random_valid_rows(rng: random.Random, n: int):
    """Rejection-sample an irreducible non-permutation 0-1 matrix."""
    while True:
        rows = [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]
        try:
            validate(rows)
        except ValidationError:
            continue
        return rows


def random_unimodular_rows(rng: random.Random, n: int, steps: int = 12):
    """Product of random elementary row operations on the identity."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        op = rng.randrange(3)
        if op == 0 and i != j:
            m[i], m[j] = m[j], m[i]
        elif op == 1:
            m[i] = [-x for x in m[i]]
        elif i != j:
            q = rng.randint(-3, 3)
            m[i] = [a + q * b for a, b in zip(m[i], m[j])]
    return m


@pytest.fixture(scope="session")
def corpus_matrices():
    return [(entry.name, validate(entry.rows)) for entry in CORPUS]
