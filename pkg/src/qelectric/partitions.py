"""Partitions, multipartitions and charged contents.

Partitions are plain tuples of positive weakly decreasing integers and
multipartitions are tuples of partitions, so both hash and compare for free.
Boxes are 1-based ``(row, col, comp)`` triples.  The charged content of a
box is ``delta_comp + col - row``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .charges import ChargeVector, Residue

Partition = tuple  # tuple[int, ...]
Multipartition = tuple  # tuple[Partition, ...]


class Box(NamedTuple):
    row: int
    col: int
    comp: int = 1


class Step(NamedTuple):
    """A signed box: ``sign = +1`` adds ``box``, ``-1`` removes it."""

    sign: int
    box: Box


def make_partition(parts: Iterable[int]) -> Partition:
    p = tuple(int(x) for x in parts if int(x) != 0)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{p} is not weakly decreasing")
    return p


def make_multipartition(components: Sequence[Iterable[int]]) -> Multipartition:
    return tuple(make_partition(c) for c in components)


def empty(level: int) -> Multipartition:
    return ((),) * level


def size(lam) -> int:
    if lam and isinstance(lam[0], tuple):
        return sum(sum(c) for c in lam)
    return sum(lam)


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > c) for c in range(lam[0]))


def boxes(lam: Multipartition) -> list[Box]:
    return [Box(r, c, k)
            for k, comp in enumerate(lam, start=1)
            for r, row in enumerate(comp, start=1)
            for c in range(1, row + 1)]


def contains(lam: Multipartition, b: Box) -> bool:
    comp = lam[b.comp - 1]
    return b.row <= len(comp) and b.col <= comp[b.row - 1]


# -- residues ---------------------------------------------------------------

def content(b: Box, charges: ChargeVector) -> Residue:
    return charges[b.comp].plus(b.col - b.row)


def residue(step: Step, charges: ChargeVector) -> Residue:
    c = content(step.box, charges)
    return c if step.sign > 0 else c.plus(1)


def dual_residue(step: Step, charges: ChargeVector) -> Residue:
    c = content(step.box, charges)
    return c if step.sign > 0 else c.plus(-1)


# -- addable / removable ----------------------------------------------------

def addable_boxes(lam: Multipartition) -> list[Box]:
    out = []
    for k, comp in enumerate(lam, start=1):
        for r in range(1, len(comp) + 2):
            row = comp[r - 1] if r <= len(comp) else 0
            above = comp[r - 2] if r >= 2 else None
            if above is None or above > row:
                out.append(Box(r, row + 1, k))
    return out


def removable_boxes(lam: Multipartition) -> list[Box]:
    out = []
    for k, comp in enumerate(lam, start=1):
        for r in range(1, len(comp) + 1):
            below = comp[r] if r < len(comp) else 0
            if comp[r - 1] > below:
                out.append(Box(r, comp[r - 1], k))
    return out


def addable(lam: Multipartition, i: Residue, charges: ChargeVector) -> list[Box]:
    return [b for b in addable_boxes(lam) if content(b, charges) == i]


def removable(lam: Multipartition, i: Residue, charges: ChargeVector) -> list[Box]:
    return [b for b in removable_boxes(lam) if content(b, charges) == i]


def add_box(lam: Multipartition, b: Box) -> Multipartition:
    comp = list(lam[b.comp - 1])
    if b.row == len(comp) + 1:
        comp.append(0)
    if b.row > len(comp) or comp[b.row - 1] + 1 != b.col:
        raise ValueError(f"{b} is not addable to {lam}")
    if b.row > 1 and comp[b.row - 2] < b.col:
        raise ValueError(f"{b} is not addable to {lam}")
    comp[b.row - 1] += 1
    return lam[:b.comp - 1] + (tuple(comp),) + lam[b.comp:]


def remove_box(lam: Multipartition, b: Box) -> Multipartition:
    comp = list(lam[b.comp - 1])
    if b.row > len(comp) or comp[b.row - 1] != b.col:
        raise ValueError(f"{b} is not removable from {lam}")
    if b.row < len(comp) and comp[b.row] >= b.col:
        raise ValueError(f"{b} is not removable from {lam}")
    comp[b.row - 1] -= 1
    if comp[b.row - 1] == 0:
        comp.pop()
    return lam[:b.comp - 1] + (tuple(comp),) + lam[b.comp:]


def apply_step(lam: Multipartition, step: Step) -> Multipartition:
    return add_box(lam, step.box) if step.sign > 0 else remove_box(lam, step.box)


# -- enumeration ------------------------------------------------------------

@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of ``n`` in reverse lexicographic order: ``(2), (1, 1)``."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_multipartitions(n: int, level: int) -> list[Multipartition]:
    """All ``level``-multipartitions of size ``n``.

    Ordered by the size vector read from the left, largest first component
    first, then by the partitions themselves.
    """
    out: list[Multipartition] = []

    def rec(remaining: int, k: int, acc: tuple):
        if k == level:
            if remaining == 0:
                out.append(acc)
            return
        if k == level - 1:
            sizes = [remaining]
        else:
            sizes = range(remaining, -1, -1)
        for m in sizes:
            for p in partitions_of(m):
                rec(remaining - m, k + 1, acc + (p,))

    rec(n, 0, ())
    return out


def multipartitions_up_to(n: int, level: int) -> list[Multipartition]:
    return [lam for m in range(n + 1) for lam in enumerate_multipartitions(m, level)]


# -- canonical tableau ------------------------------------------------------

def canonical_steps(lam: Multipartition) -> list[Step]:
    """Additions of the canonical tableau: last component first, row by row."""
    steps = []
    for k in range(len(lam), 0, -1):
        for r, row in enumerate(lam[k - 1], start=1):
            for c in range(1, row + 1):
                steps.append(Step(1, Box(r, c, k)))
    return steps


def canonical_residues(lam: Multipartition, charges: ChargeVector) -> list[Residue]:
    return [content(s.box, charges) for s in canonical_steps(lam)]


def as_multi(lam) -> Multipartition:
    """Promote a level-1 partition to a 1-tuple; leave multipartitions alone."""
    if len(lam) == 0:
        return ((),)
    if isinstance(lam[0], tuple):
        return lam
    return (tuple(lam),)
