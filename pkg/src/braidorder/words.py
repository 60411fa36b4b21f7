"""Braid words over the twist generators, and their elementary invariants.

A word is a sequence of nonzero integers: the letter k > 0 is the positive
half-twist of strands k and k+1, and -k is its inverse.  The empty word is
the identity braid.  Strings are labeled by their starting position, 1..n.
"""

from __future__ import annotations

import dataclasses


class WordError(ValueError):
    """A braid word, or its textual form, is malformed."""


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A word in the twist generators of the braid group on ``n`` strands."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise WordError(f"need at least 2 strands, got {self.n}")
        letters = tuple(self.letters)
        for k in letters:
            if k == 0 or abs(k) > self.n - 1:
                raise WordError(f"letter {k!r} out of range for {self.n} strands")
        object.__setattr__(self, "letters", letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.n != other.n:
            raise WordError(f"strand count mismatch: {self.n} vs {other.n}")
        return BraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-k for k in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)


@dataclasses.dataclass(frozen=True)
class SignResult:
    """Positivity classification of a braid or a word.

    ``kind`` is one of "positive", "negative", "trivial", "inconsistent"
    ("inconsistent" only ever comes out of the syntactic word check); ``index``
    is the relevant generator index, absent for trivial/inconsistent results.
    """

    kind: str
    index: int | None = None

    def __str__(self) -> str:
        if self.index is None:
            return self.kind
        return f"{self.kind} i={self.index}"


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed generator indices ("1 -2").

    The empty string is the identity.  Inverse of :func:`format_word`.
    """
    letters = []
    for token in text.split():
        try:
            letters.append(int(token))
        except ValueError:
            raise WordError(f"not an integer letter: {token!r}") from None
    return BraidWord(strands, tuple(letters))


def format_word(w: BraidWord) -> str:
    """Signed indices separated by single spaces; identity is the empty string."""
    return " ".join(str(k) for k in w.letters)


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent letter/inverse pairs until none remain."""
    out: list[int] = []
    for k in w.letters:
        if out and out[-1] == -k:
            out.pop()
        else:
            out.append(k)
    return BraidWord(w.n, tuple(out))


def permutation_image(w: BraidWord) -> tuple[int, ...]:
    """The induced permutation of {1..n}: entry s-1 is where string s ends up."""
    pos = list(range(1, w.n + 1))  # pos[p] = label of the string at position p+1
    for k in w.letters:
        j = abs(k) - 1
        pos[j], pos[j + 1] = pos[j + 1], pos[j]
    images = [0] * w.n
    for p, label in enumerate(pos):
        images[label - 1] = p + 1
    return tuple(images)


def crossing_numbers(w: BraidWord) -> dict[tuple[int, int], int]:
    """Algebraic crossing counts c(i, j) for all pairs 1 <= i < j <= n.

    Each crossing of the strings starting at positions i and j contributes
    the sign of the letter that crosses them.
    """
    c = {(i, j): 0 for i in range(1, w.n + 1) for j in range(i + 1, w.n + 1)}
    pos = list(range(1, w.n + 1))
    for k in w.letters:
        j = abs(k) - 1
        a, b = pos[j], pos[j + 1]
        c[(min(a, b), max(a, b))] += 1 if k > 0 else -1
        pos[j], pos[j + 1] = pos[j + 1], pos[j]
    return c


def is_sigma_consistent(w: BraidWord) -> SignResult:
    """Does the smallest occurring generator index appear with only one sign?

    Purely syntactic: "positive i=k" / "negative i=k" if generator k (the
    smallest occurring) is used with a single sign, "trivial" for the empty
    word, "inconsistent" otherwise.
    """
    if not w.letters:
        return SignResult("trivial")
    i = min(abs(k) for k in w.letters)
    signs = {k > 0 for k in w.letters if abs(k) == i}
    if len(signs) == 2:
        return SignResult("inconsistent")
    return SignResult("positive" if signs.pop() else "negative", i)
