"""Shared test helpers: seeded word sampling and identity-preserving rewrites."""

import random

import pytest

from braidorder import BraidWord


def random_word(rng, n, max_len=12, min_len=0):
    """A uniform random word on n strands with length in [min_len, max_len]."""
    length = rng.randint(min_len, max_len)
    gens = [k for k in range(1, n)] + [-k for k in range(1, n)]
    return BraidWord(n, tuple(rng.choice(gens) for _ in range(length)))


def insert_identity(rng, w):
    """Insert a trivial chunk at a random spot: a cancelling pair, a braid
    relator, or a far commutator, whichever the strand count allows."""
    n = w.n
    kinds = ["cancel"]
    if n >= 3:
        kinds.append("relator")
    if n >= 4:
        kinds.append("far")
    kind = rng.choice(kinds)
    if kind == "cancel":
        k = rng.randint(1, n - 1) * rng.choice((1, -1))
        chunk = (k, -k)
    elif kind == "relator":
        i = rng.randint(1, n - 2)
        chunk = (i, i + 1, i, -(i + 1), -i, -(i + 1))
    else:
        i = rng.randint(1, n - 3)
        j = rng.randint(i + 2, n - 1)
        chunk = (i, j, -i, -j)
    pos = rng.randint(0, len(w.letters))
    return BraidWord(n, w.letters[:pos] + chunk + w.letters[pos:])


@pytest.fixture
def rng():
    return random.Random(20260819)
