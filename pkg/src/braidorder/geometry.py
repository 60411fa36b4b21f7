"""Recovering the real-line order of interval crossings, and embeddability.

A reduced cutting sequence does not say in which order multiple crossings of
the same interval (k, k+1) sit on the real axis.  That order is forced by the
requirement that the curves be disjoint: starting at each crossing, walk away
through the upper half plane (and, for ties, the lower one) and compare the
walks' turning behavior.  Exact half-integer arithmetic throughout: every
coordinate is stored doubled, so punctures sit at even values 2k and interval
crossings at odd values 2k+1.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools

from .cutseq import (
    DOWN,
    UP,
    Arrow,
    CuttingSequence,
    Gap,
    Hole,
    is_reduced,
)


class AmbiguityError(ValueError):
    """The comparison walks cannot decide: no disjoint realization exists."""


@dataclasses.dataclass(frozen=True)
class DirectedString:
    """A walk from a crossing letter to the nearest puncture letter.

    ``doubled`` are the visited values on the doubled grid (crossings odd,
    punctures even); ``arrows`` the half-plane excursions between them;
    ``anchor`` the position of the starting letter in the source sequence.
    """

    doubled: tuple[int, ...]
    arrows: tuple[Arrow, ...]
    anchor: int


def _read_string(s: CuttingSequence, pos: int, want: Arrow) -> DirectedString:
    letters = s.letters
    x = letters[pos]
    if not isinstance(x, Gap):
        raise ValueError(f"position {pos} is not an interval crossing")
    # a crossing in a reduced sequence is flanked by one ^ and one v; read in
    # the direction of the requested one
    if letters[pos + 1] is want:
        step = 1
    elif letters[pos - 1] is want:
        step = -1
    else:
        raise ValueError("crossing not flanked by opposite arrows; sequence not reduced?")
    doubled = [2 * x.k + 1]
    arrows: list[Arrow] = []
    j = pos
    while True:
        arrows.append(letters[j + step])
        j += 2 * step
        y = letters[j]
        if isinstance(y, Hole):
            doubled.append(2 * y.k)
            return DirectedString(tuple(doubled), tuple(arrows), pos)
        doubled.append(2 * y.k + 1)


def up_string(s: CuttingSequence, pos: int) -> DirectedString:
    """The walk from the crossing at ``pos`` whose first excursion is upper."""
    return _read_string(s, pos, UP)


def down_string(s: CuttingSequence, pos: int) -> DirectedString:
    """The walk from the crossing at ``pos`` whose first excursion is lower."""
    return _read_string(s, pos, DOWN)


def cyclic_key(d: DirectedString, n: int) -> tuple[int, ...]:
    """Per-excursion turning amounts of the walk, on the doubled grid.

    For an upper excursion from x to y the entry is y - x modulo n+1, for a
    lower one x - y; representatives are chosen strictly between 0 and n+1,
    i.e. doubled in 1..2n+1.  A zero residue would mean two distinct curve
    points coincide modulo the period, which no embedded diagram produces.
    """
    mod = 2 * (n + 1)
    out = []
    for j, arrow in enumerate(d.arrows):
        diff = d.doubled[j + 1] - d.doubled[j]
        if arrow is DOWN:
            diff = -diff
        rep = diff % mod
        if rep == 0:
            raise AmbiguityError("zero cyclic difference in a comparison walk")
        out.append(rep)
    return tuple(out)


def _compare_keys(u: tuple[int, ...], v: tuple[int, ...]) -> int:
    """Lexicographic comparison; proper-prefix agreement never happens for
    walks out of one embedded diagram, so it is flagged rather than ranked."""
    for a, b in zip(u, v):
        if a != b:
            return -1 if a < b else 1
    if len(u) != len(v):
        raise AmbiguityError("one comparison key is a proper prefix of the other")
    return 0


def occurrence_order(s: CuttingSequence, k: int) -> tuple[int, ...]:
    """Positions of the Gap(k) letters, leftmost real coordinate first.

    Pairwise rule: the crossing whose upper walk turns more (larger key) lies
    further left; on upper ties the lower walks decide, with the larger key
    lying further right.  Two crossings agreeing on both walks would be two
    curves through the same points, so that raises.
    """
    if not is_reduced(s):
        raise ValueError("input sequence must be reduced")
    positions = [p for p, x in enumerate(s.letters) if isinstance(x, Gap) and x.k == k]
    if len(positions) < 2:
        return tuple(positions)
    ups = {p: cyclic_key(up_string(s, p), s.n) for p in positions}
    downs = {p: cyclic_key(down_string(s, p), s.n) for p in positions}

    def before(p: int, q: int) -> bool:
        cu = _compare_keys(ups[p], ups[q])
        if cu != 0:
            return cu > 0
        cd = _compare_keys(downs[p], downs[q])
        if cd != 0:
            return cd < 0
        raise AmbiguityError(
            f"crossings of ({k}, {k + 1}) at positions {p} and {q} have identical walks"
        )

    order = sorted(positions, key=functools.cmp_to_key(lambda p, q: -1 if before(p, q) else 1))
    # sorted() trusts the comparator; verify the pairwise relation really is
    # a strict total order before anyone builds coordinates from it
    for a, b in itertools.combinations(order, 2):
        if not before(a, b):
            raise AmbiguityError(f"pairwise order of the ({k}, {k + 1}) crossings is inconsistent")
    return tuple(order)


@dataclasses.dataclass(frozen=True)
class Validation:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _coordinates(s: CuttingSequence) -> dict[int, tuple[int, int]]:
    """Exact sortable coordinate for every number letter: (doubled value,
    rank among same-interval crossings)."""
    coord: dict[int, tuple[int, int]] = {}
    gap_values = set()
    for p, x in enumerate(s.letters):
        if isinstance(x, Hole):
            coord[p] = (2 * x.k, 0)
        elif isinstance(x, Gap):
            gap_values.add(x.k)
    for k in gap_values:
        for rank, p in enumerate(occurrence_order(s, k)):
            coord[p] = (2 * k + 1, rank)
    return coord


def validate(s: CuttingSequence) -> Validation:
    """Does the sequence come from a family of disjoint embedded curves?

    Checks that (1) an interval flanked by consecutively-visited punctures is
    never crossed, and (2) arcs on the same side of the real axis are nested
    or disjoint, using the exact coordinates from :func:`occurrence_order`.
    Only reduced sequences denote diagrams canonically.
    """
    if not is_reduced(s):
        return Validation(False, "sequence is not reduced")
    letters = s.letters
    crossed = {x.k for x in letters if isinstance(x, Gap)}
    for a, b in zip(letters, letters[1:]):
        if isinstance(a, Hole) and isinstance(b, Hole):
            i = min(a.k, b.k)
            if i in crossed:
                return Validation(
                    False,
                    f"punctures {a.k} and {b.k} are joined directly "
                    f"but the interval ({i}, {i + 1}) is crossed",
                )
    try:
        coord = _coordinates(s)
    except AmbiguityError as e:
        return Validation(False, f"no consistent realization: {e}")
    arcs: dict[Arrow, list[tuple[tuple[int, int], tuple[int, int]]]] = {UP: [], DOWN: []}
    for p, x in enumerate(letters):
        if x is UP or x is DOWN:
            ends = sorted((coord[p - 1], coord[p + 1]))
            arcs[x].append((ends[0], ends[1]))
    for side, side_arcs in arcs.items():
        side_arcs.sort()
        for (a, b), (c, d) in itertools.combinations(side_arcs, 2):
            if a < c < b < d:
                return Validation(
                    False,
                    f"two {'upper' if side is UP else 'lower'} arcs cross: "
                    f"({a}, {b}) and ({c}, {d})",
                )
    return Validation(True)
