"""Independent ground truth: braid equality through the free-group action.

The braid group acts faithfully on the free group generated by loops
x_1..x_n around the punctures: generator i maps x_i to x_i x_{i+1} x_i^-1,
x_{i+1} to x_i, and fixes the rest.  Two words are equal as braids exactly
when their composed substitutions agree, which reduces equality to freely
reducing words.  None of the cutting-sequence machinery is used here, so
this module can referee it.
"""

from __future__ import annotations

import dataclasses
import itertools
from typing import Iterable, Sequence

from .words import BraidWord, crossing_numbers, permutation_image

FreeWord = tuple[int, ...]  # signed generator indices, always freely reduced

SEARCH_SPACE_LIMIT = 10_000_000


def _basic_image(g: int, k: int) -> FreeWord:
    """Image of the free generator x_k under the single braid letter g."""
    i = abs(g)
    if g > 0:
        if k == i:
            return (i, i + 1, -i)
        if k == i + 1:
            return (i,)
    else:
        if k == i:
            return (i + 1,)
        if k == i + 1:
            return (-(i + 1), i, i + 1)
    return (k,)


def _substitute(g: int, word: FreeWord) -> FreeWord:
    """Apply the letter g's substitution to each symbol, reducing eagerly."""
    out: list[int] = []
    for x in word:
        img = _basic_image(g, abs(x))
        if x < 0:
            img = tuple(-y for y in reversed(img))
        for y in img:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


@dataclasses.dataclass(frozen=True)
class ArtinAutomorphism:
    """The composed substitution of a braid word: images of x_1..x_n."""

    n: int
    images: tuple[FreeWord, ...]

    def is_identity(self) -> bool:
        return all(img == (j + 1,) for j, img in enumerate(self.images))


def artin_action(w: BraidWord) -> ArtinAutomorphism:
    """Compose the letter substitutions in word order (leftmost acts first)."""
    images = [(j,) for j in range(1, w.n + 1)]
    for g in w.letters:
        images = [_substitute(g, img) for img in images]
    return ArtinAutomorphism(w.n, tuple(images))


def braid_equal(a: BraidWord, b: BraidWord) -> bool:
    """Do the two words represent the same braid?"""
    if a.n != b.n:
        raise ValueError(f"strand count mismatch: {a.n} vs {b.n}")
    return artin_action(a * b.inverse()).is_identity()


def enumerate_constrained(
    n: int,
    length: int,
    permutation: Sequence[int] | None = None,
    crossings: dict[tuple[int, int], int] | None = None,
    forbidden: Iterable[int] = (),
) -> list[BraidWord]:
    """All words of the given length whose invariants match the constraints.

    ``permutation`` is the required image tuple, ``crossings`` the required
    algebraic crossing counts (missing pairs are unconstrained), ``forbidden``
    letters are excluded from the alphabet.  The full alphabet has 2(n-1)
    letters; the search is exhaustive and guarded against oversized spaces.
    Words that are equal as braids are all returned; deduplicate through
    :func:`artin_action` if elements are wanted.
    """
    forbidden = set(forbidden)
    alphabet = [
        k
        for k in itertools.chain(range(1, n), range(-(n - 1), 0))
        if k not in forbidden
    ]
    if (2 * (n - 1)) ** length > SEARCH_SPACE_LIMIT:
        raise ValueError(
            f"search space (2(n-1))^length = {(2 * (n - 1)) ** length} "
            f"exceeds the {SEARCH_SPACE_LIMIT} guard"
        )
    want_perm = tuple(permutation) if permutation is not None else None
    want_cross = None
    if crossings is not None:
        want_cross = {(min(i, j), max(i, j)): v for (i, j), v in crossings.items()}
    out = []
    for combo in itertools.product(alphabet, repeat=length):
        w = BraidWord(n, combo)
        if want_perm is not None and permutation_image(w) != want_perm:
            continue
        if want_cross is not None:
            c = crossing_numbers(w)
            if any(c[pair] != v for pair, v in want_cross.items()):
                continue
        out.append(w)
    return out
