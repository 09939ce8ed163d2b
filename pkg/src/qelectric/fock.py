"""Fock and dual Fock spaces as semiinfinite q-wedges.

A basis vector ``v_lam`` of charge ``delta`` is the wedge with indices
``lam_j + 1 - j + delta``.  Everything below works with the integer part of
those indices; the charge only relabels generators, so ``E_{delta + n}``
acts through the integer generator ``n``.

An action is computed on the finite wedge of depth ``d`` (the first ``d``
indices), straightened into decreasing order, and terms that would collide
with the vacuum tail are dropped.  Each result is recomputed at depth
``d + 2`` and the two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .charges import ChargeVector, Residue, differ_by_int
from .partitions import Multipartition, Partition, addable_boxes, removable_boxes, size, transpose
from .scalars import ONE, Scalar, q_pow
from .tensor_ops import act_left, act_right, add_into, coideal_element, dual_coideal_element, hecke_a

DEPTH_MARGIN = 4
DEPTH_CAP_MARGIN = 12


class FockError(RuntimeError):
    """Base class for internal-consistency failures of the Fock action."""


class StabilityError(FockError):
    """Depth ``d`` and ``d + 2`` disagree even at the maximal depth."""


class ConventionError(FockError):
    """A coefficient is not a signed q-power, or the support is wrong."""


# -- wedges ------------------------------------------------------------------

def fock_pattern(d: int) -> tuple[int, ...]:
    """``(2, 1, 2, 1, ...)`` of length ``d - 1``."""
    return tuple(2 if m % 2 == 0 else 1 for m in range(d - 1))


def wedge_indices(lam: Partition, delta=0, d: int | None = None) -> tuple:
    """``(lam_1 + delta, lam_2 - 1 + delta, ..., lam_d - d + 1 + delta)``."""
    lam = tuple(lam)
    if d is None:
        d = len(lam)
    if d < len(lam):
        raise ValueError(f"depth {d} is smaller than the length of {lam}")
    parts = lam + (0,) * (d - len(lam))
    if isinstance(delta, Residue):
        return tuple(delta.plus(parts[j] - j) for j in range(d))
    return tuple(parts[j] - j + delta for j in range(d))


def partition_of(idx: Sequence[int]) -> Partition | None:
    """Partition of a decreasing integer index tuple, or ``None`` if it hits the tail."""
    parts = [idx[j] + j for j in range(len(idx))]
    if parts and parts[-1] < 0:
        return None
    return tuple(p for p in parts if p)


@lru_cache(maxsize=200_000)
def _straighten(idx: tuple, dual: bool) -> tuple:
    for k in range(len(idx) - 1):
        i, j = idx[k], idx[k + 1]
        if i == j:
            return ()
        if i < j:
            flavour = 2 if k % 2 == 0 else 1
            a = hecke_a(j, i, flavour) if dual else hecke_a(i, j, flavour)
            swapped = idx[:k] + (j, i) + idx[k + 2:]
            c = -q_pow(a + 1)
            return tuple((t, c * d) for t, d in _straighten(swapped, dual))
    return ((idx, ONE),)


def straighten(terms: Mapping[tuple, Scalar], pattern: Sequence[int] | None = None, dual: bool = False) -> dict:
    """Rewrite a tensor combination in the basis of decreasing wedges.

    Uses the rules forced by ``H_k A = -q A``: equal neighbours give zero
    and an ascending pair ``i < j`` at position ``k`` becomes
    ``-q a_ij`` (``-q a_ji`` for duals) times the swapped tuple.
    """
    out: dict = {}
    for idx, c in terms.items():
        if pattern is not None and tuple(pattern) != fock_pattern(len(idx)):
            raise ValueError("straightening needs the alternating pattern (2, 1, 2, ...)")
        for t, d in _straighten(tuple(idx), dual):
            add_into(out, t, c * d)
    return out


# -- vectors -----------------------------------------------------------------

@dataclass
class FockVector:
    """Finite combination of partitions in the (dual) Fock space of charge ``delta``."""

    delta: Residue
    epsilon: int
    terms: dict = field(default_factory=dict)
    dual: bool = False

    @classmethod
    def basis(cls, lam: Iterable[int], delta: Residue, epsilon: int, dual: bool = False) -> FockVector:
        return cls(delta, epsilon, {tuple(lam): ONE}, dual)

    @classmethod
    def vacuum(cls, delta: Residue, epsilon: int, dual: bool = False) -> FockVector:
        return cls.basis((), delta, epsilon, dual)

    def _like(self, terms) -> FockVector:
        return FockVector(self.delta, self.epsilon, terms, self.dual)

    def _check(self, other: FockVector) -> None:
        if (self.delta, self.epsilon, self.dual) != (other.delta, other.epsilon, other.dual):
            raise ValueError("vectors live in different Fock spaces")

    def __add__(self, other: FockVector) -> FockVector:
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            add_into(out, k, c)
        return self._like(out)

    def __sub__(self, other: FockVector) -> FockVector:
        return self + other.scaled(-1)

    def scaled(self, c) -> FockVector:
        c = c if isinstance(c, Scalar) else Scalar(c)
        out = {}
        for k, x in self.terms.items():
            add_into(out, k, x * c)
        return self._like(out)

    def __rmul__(self, c) -> FockVector:
        return self.scaled(c)

    def __eq__(self, other):
        return (isinstance(other, FockVector) and self.delta == other.delta and self.epsilon == other.epsilon
                and self.dual == other.dual and self.terms == other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def bar_coeffs(self) -> FockVector:
        return self._like({k: c.bar() for k, c in self.terms.items()})

    def to_json(self) -> dict:
        return {"delta": str(self.delta), "epsilon": self.epsilon, "dual": self.dual,
                "terms": [{"partition": list(k), "coeff": c.to_json(), "text": str(c)}
                          for k, c in sorted(self.terms.items(), key=lambda kv: (size(kv[0]), kv[0]))]}

    def __repr__(self):
        body = " + ".join(f"({c})*{'v^' if self.dual else 'v_'}{list(k)}" for k, c in self.terms.items()) or "0"
        return f"FockVector[{self.delta}, eps={self.epsilon}]({body})"


def DualFockVector(delta: Residue, epsilon: int, terms=None) -> FockVector:
    return FockVector(delta, epsilon, dict(terms or {}), True)


# -- single-generator action -----------------------------------------------------

def _offset(i: Residue, delta: Residue) -> int:
    n = differ_by_int(i, delta)
    if n is None:
        raise ValueError(f"generator {i} is not in the charge coset of {delta}")
    return n


def _act_depth(lam: Partition, n: int, epsilon: int, d: int, dual: bool) -> dict:
    idx = wedge_indices(lam, 0, d)
    pattern = fock_pattern(d)
    if dual:
        raw = act_left(dual_coideal_element(n, epsilon), {idx: ONE}, pattern)
    else:
        raw = act_right(coideal_element(n, epsilon), {idx: ONE}, pattern)
    out: dict = {}
    for t, c in straighten(raw, dual=dual).items():
        mu = partition_of(t)
        if mu is not None:
            add_into(out, mu, c)
    return out


def expected_support(lam: Partition, n: int, dual: bool = False) -> set:
    """Partitions reached by adding a box of content ``n`` or removing one of
    content ``n - 1`` (``n + 1`` for the dual action)."""
    lam1 = (tuple(lam),)
    out = set()
    for b in addable_boxes(lam1):
        if b.col - b.row == n:
            out.add(_bump(lam, b.row, 1))
    rem = n + 1 if dual else n - 1
    for b in removable_boxes(lam1):
        if b.col - b.row == rem:
            out.add(_bump(lam, b.row, -1))
    return out


def _bump(lam: Partition, row: int, by: int) -> Partition:
    parts = list(lam) + [0]
    parts[row - 1] += by
    return tuple(p for p in parts if p)


@lru_cache(maxsize=100_000)
def _act_basis(lam: Partition, n: int, epsilon: int, dual: bool) -> tuple:
    d = size(lam) + DEPTH_MARGIN
    cap = size(lam) + DEPTH_CAP_MARGIN
    cur = _act_depth(lam, n, epsilon, d, dual)
    while True:
        nxt = _act_depth(lam, n, epsilon, d + 2, dual)
        if nxt == cur:
            break
        d += 2
        if d + 2 > cap:
            raise StabilityError(f"action of {n} on {lam} not stable up to depth {cap}")
        cur = nxt
    allowed = expected_support(lam, n, dual)
    for mu, c in cur.items():
        if c.monomial() is None:
            raise ConventionError(f"non-monomial coefficient {c} at {mu} for {n} on {lam}")
        if mu not in allowed:
            raise ConventionError(f"unexpected partition {mu} for {n} on {lam}")
    return tuple(sorted(cur.items()))


def act_basis(lam: Partition, n: int, epsilon: int, dual: bool = False) -> dict:
    """Action of the integer generator ``n`` on a basis wedge, as a dict."""
    return dict(_act_basis(tuple(lam), int(n), int(epsilon), bool(dual)))


def act_generator(v: FockVector, i: Residue) -> FockVector:
    """``v . E_i``; on a dual vector this is the dual right action."""
    n = _offset(i, v.delta)
    out: dict = {}
    for lam, c in v.terms.items():
        for mu, d in act_basis(lam, n, v.epsilon, v.dual).items():
            add_into(out, mu, c * d)
    return v._like(out)


def dual_act_generator(v: FockVector, i: Residue) -> FockVector:
    if not v.dual:
        raise ValueError("expected a dual Fock vector")
    return act_generator(v, i)


def act_word(v: FockVector, word: Sequence[Residue]) -> FockVector:
    """Apply generators left to right."""
    for i in word:
        if v.is_zero():
            return v
        v = act_generator(v, i)
    return v


# -- bar involution, tau, pairing -------------------------------------------------

def canonical_word(lam: Partition) -> list[int]:
    """Integer contents of the boxes of ``lam`` row by row."""
    return [c - r for r, row in enumerate(lam, start=1) for c in range(1, row + 1)]


def _as_residues(delta: Residue, word: Sequence[int]) -> list[Residue]:
    return [delta.plus(n) for n in word]


@lru_cache(maxsize=None)
def _triangular(lam: Partition, epsilon: int, src_dual: bool, mode: str) -> tuple:
    """Image of ``v_lam`` (or ``v^lam``) under the bar map or tau, integer model.

    ``v_vac . u = c_lam v_lam + lower``; the image of the vacuum acted on by
    the transformed word, minus the images of the lower terms, divided by the
    transformed leading coefficient.
    """
    delta = Residue.concrete(0)
    if not lam:
        return (((), ONE),)
    word = canonical_word(lam)
    src = act_word(FockVector.vacuum(delta, epsilon, src_dual), _as_residues(delta, word))
    lead = src.terms.get(lam)
    if lead is None or lead.is_zero():
        raise ConventionError(f"leading coefficient of {lam} vanishes")
    tword = word if mode == "bar" else [-n for n in word]
    conj = True
    tgt = act_word(FockVector.vacuum(delta, epsilon, not src_dual), _as_residues(delta, tword))
    for mu, c in src.terms.items():
        if mu == lam:
            continue
        cc = c.bar() if conj else c
        img = dict(_triangular(mu, epsilon, src_dual, mode))
        tgt = tgt - FockVector(delta, epsilon, img, not src_dual).scaled(cc)
    lead_t = lead.bar() if conj else lead
    return tuple(sorted(tgt.scaled(lead_t.inv()).terms.items()))


def _apply_triangular(v: FockVector, mode: str) -> FockVector:
    out: dict = {}
    for lam, c in v.terms.items():
        cc = c.bar()
        for mu, d in _triangular(lam, v.epsilon, v.dual, mode):
            add_into(out, mu, cc * d)
    return FockVector(v.delta, v.epsilon, out, not v.dual)


def bar_fock(lam: Partition, delta: Residue, epsilon: int, dual: bool = False) -> FockVector:
    """Bar image of ``v_lam`` in the dual Fock space (or of ``v^lam`` in the Fock space)."""
    return _apply_triangular(FockVector.basis(lam, delta, epsilon, dual), "bar")


def bar_vector(v: FockVector) -> FockVector:
    """q-antilinear extension of :func:`bar_fock`."""
    return _apply_triangular(v, "bar")


def tau_fock(lam: Partition, delta: Residue, epsilon: int) -> FockVector:
    """``tau(v_lam)``; expected to be ``+-q^c v^{lam^t}``."""
    out = _apply_triangular(FockVector.basis(lam, delta, epsilon), "tau")
    if set(out.terms) != {transpose(tuple(lam))} or next(iter(out.terms.values())).monomial() is None:
        raise ConventionError(f"tau({lam}) = {out} is not a monomial multiple of the transpose")
    return out


def pairing(w: FockVector, v: FockVector) -> Scalar:
    """``(w, v)`` with ``(v^lam, v_mu) = delta_{lam mu}``."""
    if not w.dual or v.dual:
        raise ValueError("pairing takes a dual vector and a Fock vector")
    if w.delta != v.delta or w.epsilon != v.epsilon:
        raise ValueError("pairing needs equal charges and epsilon")
    total = Scalar(0)
    for lam, c in w.terms.items():
        d = v.terms.get(lam)
        if d is not None:
            total = total + c * d
    return total


def sigma_word(word: Sequence[Residue], epsilon: int) -> tuple[Scalar, list[Residue]]:
    """``sigma(E_a1 ... E_ak) = q^(-k eps) E_{ak+1} ... E_{a1+1}``."""
    return q_pow(-epsilon * len(word)), [i.plus(1) for i in reversed(word)]


# -- level l -------------------------------------------------------------------------

@dataclass
class MultiFockVector:
    charges: ChargeVector
    epsilon: int
    terms: dict = field(default_factory=dict)

    @classmethod
    def basis(cls, lam: Multipartition, charges: ChargeVector, epsilon: int) -> MultiFockVector:
        if len(lam) != charges.level:
            raise ValueError("multipartition level does not match the charge vector")
        return cls(charges, epsilon, {tuple(tuple(c) for c in lam): ONE})

    @classmethod
    def vacuum(cls, charges: ChargeVector, epsilon: int) -> MultiFockVector:
        return cls.basis(((),) * charges.level, charges, epsilon)

    def _like(self, terms) -> MultiFockVector:
        return MultiFockVector(self.charges, self.epsilon, terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            add_into(out, k, c)
        return self._like(out)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c) -> MultiFockVector:
        c = c if isinstance(c, Scalar) else Scalar(c)
        out = {}
        for k, x in self.terms.items():
            add_into(out, k, x * c)
        return self._like(out)

    def __eq__(self, other):
        return isinstance(other, MultiFockVector) and self.charges == other.charges and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> dict:
        return {"charges": str(self.charges), "epsilon": self.epsilon,
                "terms": [{"multipartition": [list(c) for c in k], "coeff": c.to_json(), "text": str(c)}
                          for k, c in sorted(self.terms.items())]}


def multi_act(v: MultiFockVector, i: Residue) -> MultiFockVector:
    """Level-1 action in the component whose charge coset contains ``i``.

    Returns the zero vector when ``i`` lies in no coset.
    """
    k = v.charges.component_of(i)
    if k is None:
        return v._like({})
    n = _offset(i, v.charges[k])
    out: dict = {}
    for lam, c in v.terms.items():
        for mu, d in act_basis(lam[k - 1], n, v.epsilon).items():
            add_into(out, lam[:k - 1] + (mu,) + lam[k:], c * d)
    return v._like(out)


def multi_act_word(v: MultiFockVector, word: Sequence[Residue]) -> MultiFockVector:
    for i in word:
        if v.is_zero():
            return v
        v = multi_act(v, i)
    return v


# -- checks ------------------------------------------------------------------------

def is_stable(lam: Partition, n: int, epsilon: int, dual: bool = False, margin: int = DEPTH_MARGIN) -> bool:
    """Do depths ``|lam| + margin`` and ``|lam| + margin + 2`` give the same vector?"""
    d = size(lam) + margin
    return _act_depth(tuple(lam), n, epsilon, d, dual) == _act_depth(tuple(lam), n, epsilon, d + 2, dual)


def relevant_generators(lam: Partition, pad: int = 2) -> range:
    """Integer generators that can act nontrivially near ``lam``, padded."""
    lo = -len(lam) - pad
    hi = (lam[0] if lam else 0) + pad
    return range(lo, hi + 1)


def relation_failures(lam: Partition, epsilon: int, dual: bool = False, distant: bool = True) -> list:
    """Check the defining relations on ``v_lam`` (or ``v^lam``).

    Serre-type relations have right-hand side ``-q^e [2] v E_i`` with
    ``e = epsilon`` on the Fock space and ``e = -epsilon`` on its dual.
    Distant pairs must satisfy ``v E_i E_j = q^b v E_j E_i`` with ``b = b_ij``
    on the Fock space and ``b = -b_ij`` on its dual, the bar image.
    """
    from .scalars import qint
    from .tensor_ops import b_int

    delta = Residue.concrete(0)
    e = -epsilon if dual else epsilon
    two = qint(2)
    v = FockVector.basis(lam, delta, epsilon, dual)
    r = lambda n: delta.plus(n)  # noqa: E731
    bad = []
    gens = relevant_generators(lam)
    for i in gens:
        rhs = act_word(v, [r(i)]).scaled(-q_pow(e) * two)
        for j, (c1, c3) in ((i + 1, (3, -3)), (i - 1, (-3, 3))):
            lhs = (act_word(v, [r(i), r(i), r(j)]).scaled(q_pow(c1))
                   - act_word(v, [r(i), r(j), r(i)]).scaled(two)
                   + act_word(v, [r(j), r(i), r(i)]).scaled(q_pow(c3)))
            if lhs != rhs:
                bad.append(("serre", lam, i, j))
        if distant:
            for j in gens:
                if abs(i - j) > 1:
                    lhs = act_word(v, [r(i), r(j)])
                    rhs2 = act_word(v, [r(j), r(i)]).scaled(q_pow(-b_int(i, j) if dual else b_int(i, j)))
                    if lhs != rhs2:
                        bad.append(("distant", lam, i, j))
    return bad
