"""Multi-up-down-tableaux: walks on multipartitions adding or removing one box per step."""

from __future__ import annotations

import itertools
from collections import deque
from functools import lru_cache
from typing import Iterable, Sequence

from .charges import ChargeVector, Residue, differ_by_int
from .partitions import (
    Box,
    Multipartition,
    Step,
    addable_boxes,
    apply_step,
    canonical_steps,
    dual_residue,
    empty,
    enumerate_multipartitions,
    removable_boxes,
    residue,
    size,
)


class TableauError(ValueError):
    """A step sequence is not a legal up-down-tableau."""


class UpDownTableau:
    """Sequence of signed boxes starting from the empty multipartition.

    ``shapes[j]`` is the multipartition after ``j`` steps, so ``shapes[0]`` is
    empty and ``shapes[-1]`` is the shape.
    """

    __slots__ = ("steps", "shapes", "level")

    def __init__(self, steps: Iterable[Step], level: int = 1):
        self.steps = tuple(Step(int(s[0]), Box(*s[1])) for s in steps)
        self.level = level
        shape = empty(level)
        shapes = [shape]
        for j, s in enumerate(self.steps, start=1):
            if not 1 <= s.box.comp <= level:
                raise TableauError(f"step {j}: component {s.box.comp} out of range")
            try:
                shape = apply_step(shape, s)
            except ValueError as exc:
                raise TableauError(f"step {j}: {exc}") from None
            shapes.append(shape)
        self.shapes = tuple(shapes)

    @classmethod
    def canonical(cls, lam: Multipartition) -> UpDownTableau:
        return cls(canonical_steps(lam), level=len(lam))

    @property
    def shape(self) -> Multipartition:
        return self.shapes[-1]

    def __len__(self):
        return len(self.steps)

    def restrict(self, n: int) -> UpDownTableau:
        return UpDownTableau(self.steps[:n], self.level)

    def is_all_additions(self) -> bool:
        return all(s.sign > 0 for s in self.steps)

    def __eq__(self, other):
        return isinstance(other, UpDownTableau) and self.steps == other.steps and self.level == other.level

    def __hash__(self):
        return hash((self.steps, self.level))

    def __repr__(self):
        return f"UpDownTableau({[self._fmt(s) for s in self.steps]})"

    @staticmethod
    def _fmt(s: Step) -> str:
        sign = "+" if s.sign > 0 else "-"
        return f"{sign}({s.box.row},{s.box.col},{s.box.comp})"

    def to_json(self) -> list[dict]:
        return [{"sign": s.sign, "box": [s.box.row, s.box.col, s.box.comp]} for s in self.steps]

    @classmethod
    def from_json(cls, data: Sequence[dict], level: int = 1) -> UpDownTableau:
        return cls((Step(d["sign"], Box(*d["box"])) for d in data), level)


def residue_seq(t: UpDownTableau, charges: ChargeVector) -> tuple[Residue, ...]:
    return tuple(residue(s, charges) for s in t.steps)


def dual_residue_seq(t: UpDownTableau, charges: ChargeVector) -> tuple[Residue, ...]:
    return tuple(dual_residue(s, charges) for s in t.steps)


def match_removals(t: UpDownTableau) -> list[tuple[int, int]]:
    """Pair each removal step with the step that last added the same box.

    Indices are 1-based step positions; pairs are listed by increasing
    removal index.
    """
    alive: dict[Box, int] = {}
    pairs = []
    for j, s in enumerate(t.steps, start=1):
        if s.sign > 0:
            alive[s.box] = j
        else:
            if s.box not in alive:
                raise TableauError(f"step {j} removes {s.box} which is not present")
            pairs.append((alive.pop(s.box), j))
    return pairs


def surviving_steps(t: UpDownTableau) -> list[int]:
    """1-based indices of additions that are never undone."""
    removed = {l for l, _ in match_removals(t)}
    removals = {r for _, r in match_removals(t)}
    return [j for j in range(1, len(t) + 1) if j not in removed and j not in removals]


# -- enumeration ------------------------------------------------------------

def _neighbours(lam: Multipartition) -> list[Step]:
    # deterministic order: additions before removals, then component, row
    adds = sorted(addable_boxes(lam), key=lambda b: (b.comp, b.row))
    rems = sorted(removable_boxes(lam), key=lambda b: (b.comp, b.row))
    return [Step(1, b) for b in adds] + [Step(-1, b) for b in rems]


@lru_cache(maxsize=None)
def _count_paths(m: int, lam: Multipartition) -> int:
    """Number of up-down walks of length ``m`` from empty to ``lam``."""
    if m == 0:
        return int(all(len(c) == 0 for c in lam))
    total = 0
    for s in _neighbours(lam):
        # s leads out of lam; the last step into lam is its reverse
        total += _count_paths(m - 1, apply_step(lam, s))
    return total


def count(m: int, lam: Multipartition) -> int:
    """``|Tud_m(lam)|`` via a memoised walk count."""
    if size(lam) > m or (m - size(lam)) % 2:
        return 0
    return _count_paths(m, lam)


def enumerate_tableaux(m: int, lam: Multipartition, charges: ChargeVector | None = None) -> list[UpDownTableau]:
    """All up-down-tableaux of length ``m`` and shape ``lam``.

    ``charges`` is accepted for interface symmetry; the set of tableaux does
    not depend on it.  Walks are generated backwards from ``lam`` and pruned
    with :func:`count`, so only productive branches are explored.
    """
    level = len(lam)
    out: list[UpDownTableau] = []

    def rec(k: int, shape: Multipartition, suffix: list[Step]):
        if k == 0:
            out.append(UpDownTableau(reversed(suffix), level))
            return
        for s in _neighbours(shape):
            prev = apply_step(shape, s)
            if count(k - 1, prev):
                suffix.append(Step(-s.sign, s.box))
                rec(k - 1, prev, suffix)
                suffix.pop()

    if count(m, lam):
        rec(m, lam, [])
    out.sort(key=_tableau_key)
    return out


def _tableau_key(t: UpDownTableau):
    return tuple((-s.sign, s.box.comp, s.box.row, s.box.col) for s in t.steps)


def enumerate_all(m: int, level: int) -> dict[Multipartition, list[UpDownTableau]]:
    """Tableaux of length ``m`` grouped by shape (breadth-first over shapes)."""
    layer: dict[Multipartition, list[tuple[Step, ...]]] = {empty(level): [()]}
    for _ in range(m):
        nxt: dict[Multipartition, list[tuple[Step, ...]]] = {}
        for lam, walks in layer.items():
            for s in _neighbours(lam):
                mu = apply_step(lam, s)
                nxt.setdefault(mu, []).extend(w + (s,) for w in walks)
        layer = nxt
    return {lam: sorted((UpDownTableau(w, level) for w in walks), key=_tableau_key)
            for lam, walks in sorted(layer.items(), key=lambda kv: _shape_key(kv[0]))}


def _shape_key(lam: Multipartition):
    return (size(lam), tuple(-x for c in lam for x in (len(c),) + c))


def sum_of_squares(m: int, level: int) -> int:
    """``sum_lam |Tud_m(lam)|^2`` over all shapes."""
    total = 0
    for n in range(m % 2, m + 1, 2):
        for lam in enumerate_multipartitions(n, level):
            c = count(m, lam)
            total += c * c
    return total


def double_factorial_odd(m: int) -> int:
    """``(2m-1)!!``."""
    out = 1
    for k in range(1, 2 * m, 2):
        out *= k
    return out


# -- subsequences -------------------------------------------------------------

def _adjacent(a: Residue, b: Residue) -> bool:
    d = differ_by_int(a, b)
    return d is not None and abs(d) == 1


def admissible_permutations(seq: Sequence[Residue]) -> set[tuple[Residue, ...]]:
    """Orbit of ``seq`` under swaps of neighbours ``a, b`` with ``a != b +- 1``.

    Swaps of equal entries are permitted; they do not change the sequence.
    """
    start = tuple(seq)
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for k in range(len(cur) - 1):
            a, b = cur[k], cur[k + 1]
            if a == b or _adjacent(a, b):
                continue
            nxt = cur[:k] + (b, a) + cur[k + 2:]
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def is_standard_subsequence(pattern: Sequence, seq: Sequence) -> bool:
    n = len(pattern)
    pattern = tuple(pattern)
    return any(tuple(seq[k:k + n]) == pattern for k in range(len(seq) - n + 1))


def admissible_subsequence_check(seq: Sequence[Residue], pattern: Sequence[Residue]) -> bool:
    """Is ``pattern`` a standard subsequence of some admissible permutation of ``seq``?"""
    return any(is_standard_subsequence(pattern, p) for p in admissible_permutations(seq))


def braid_avoiding(seq: Sequence[Residue]) -> bool:
    """No subsequence of the form ``(a, a+-1, a)``."""
    for p in admissible_permutations(seq):
        for k in range(len(p) - 2):
            a, b, c = p[k], p[k + 1], p[k + 2]
            if a == c and _adjacent(a, b):
                return False
    return True


def has_repeated_pair(seq: Sequence[Residue]) -> bool:
    """Does ``(a, a)`` occur as a subsequence?"""
    for p in admissible_permutations(seq):
        if any(p[k] == p[k + 1] for k in range(len(p) - 1)):
            return True
    return False


def iter_sequences(alphabet: Sequence[Residue], max_len: int) -> Iterable[tuple[Residue, ...]]:
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)
