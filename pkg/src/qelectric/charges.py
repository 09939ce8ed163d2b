"""Charges and residues.

A residue is either symbolic, ``delta_k + n`` for a component tag ``k``, or a
concrete rational.  Symbolic residues with different tags never differ by an
integer, which makes generic charge vectors generic by construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class GenericityError(ValueError):
    """Two charges of a charge vector differ by an integer."""

    def __init__(self, i: int, j: int):
        super().__init__(f"charges {i} and {j} differ by an integer")
        self.pair = (i, j)


@dataclass(frozen=True)
class Residue:
    """``delta_tag + value`` (symbolic) or the rational ``value`` (``tag is None``)."""

    tag: int | None
    value: Fraction | int

    def __post_init__(self):
        v = Fraction(self.value)
        if self.tag is not None and v.denominator != 1:
            raise ValueError("symbolic residues carry an integer offset")
        object.__setattr__(self, "value", v.numerator if v.denominator == 1 else v)

    @classmethod
    def symbolic(cls, tag: int, offset: int = 0) -> Residue:
        return cls(tag, offset)

    @classmethod
    def concrete(cls, value) -> Residue:
        return cls(None, Fraction(value))

    def plus(self, n: int) -> Residue:
        if n == 0:
            return self
        return Residue(self.tag, self.value + n)

    def __add__(self, n: int) -> Residue:
        if not isinstance(n, int):
            return NotImplemented
        return self.plus(n)

    def __sub__(self, other):
        if isinstance(other, int):
            return self.plus(-other)
        if isinstance(other, Residue):
            return differ_by_int(self, other)
        return NotImplemented

    def sort_key(self):
        return (0 if self.tag is None else 1, self.tag or 0, Fraction(self.value))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if self.tag is None:
            return str(self.value)
        base = f"d{self.tag}"
        if self.value == 0:
            return base
        return f"{base}{self.value:+d}"


def differ_by_int(a: Residue, b: Residue) -> int | None:
    """``a - b`` if it is an integer, else ``None``."""
    if a.tag != b.tag:
        return None
    d = Fraction(a.value) - Fraction(b.value)
    if d.denominator != 1:
        return None
    return d.numerator


def parity(a: Residue, b: Residue) -> int | None:
    """``(a - b) mod 2`` when the difference is an integer."""
    d = differ_by_int(a, b)
    return None if d is None else d % 2


@dataclass(frozen=True)
class ChargeVector:
    charges: tuple[Residue, ...]

    def __post_init__(self):
        object.__setattr__(self, "charges", tuple(self.charges))
        if not self.charges:
            raise ValueError("level must be positive")

    @property
    def level(self) -> int:
        return len(self.charges)

    def __getitem__(self, k: int) -> Residue:
        """1-based component lookup."""
        return self.charges[k - 1]

    @classmethod
    def symbolic(cls, level: int) -> ChargeVector:
        return cls(tuple(Residue.symbolic(k) for k in range(1, level + 1)))

    @classmethod
    def concrete(cls, values: Sequence) -> ChargeVector:
        return cls(tuple(Residue.concrete(v) for v in values))

    def component_of(self, r: Residue) -> int | None:
        """Component ``k`` with ``r - delta_k`` integral (unique if generic)."""
        for k, d in enumerate(self.charges, start=1):
            if differ_by_int(r, d) is not None:
                return k
        return None

    def __str__(self):
        return ",".join(str(c) for c in self.charges)


def validate_generic(c: ChargeVector) -> None:
    """Raise :class:`GenericityError` naming the first offending pair (1-based)."""
    for i in range(c.level):
        for j in range(i + 1, c.level):
            if differ_by_int(c.charges[i], c.charges[j]) is not None:
                raise GenericityError(i + 1, j + 1)


def is_generic(c: ChargeVector) -> bool:
    try:
        validate_generic(c)
    except GenericityError:
        return False
    return True


_SYM = re.compile(r"^d(\d+)([+-]\d+)?$")


def parse_residue(text: str) -> Residue:
    """Parse ``d2``, ``d1+3``, ``d1-1``, ``0``, ``-3/2``."""
    text = text.strip()
    m = _SYM.match(text)
    if m:
        return Residue.symbolic(int(m.group(1)), int(m.group(2) or 0))
    return Residue.concrete(Fraction(text))


def parse_charges(text: str) -> ChargeVector:
    """Parse a ``--charges`` value such as ``"d1,d2"`` or ``"0,1/2"`` and validate it."""
    parts = [p for p in text.split(",") if p.strip()]
    cv = ChargeVector(tuple(parse_residue(p) for p in parts))
    validate_generic(cv)
    return cv
