"""Operators on mixed tensor powers of the natural module and its dual.

Vectors are dicts ``index tuple -> Scalar``.  A tensor vector carries a
flavour pattern ``(l_1, ..., l_{d-1})`` with ``l_m in {1, 2}``: factor ``m``
and ``m+1`` are joined by the comultiplication ``Delta`` (flavour 1) or its
shifted twin ``Delta'`` (flavour 2), bracketed from the left.

The natural module ``V`` is a right module; its dual is a left module.  Both
are driven by the same coproduct table so the two sides stay transposes of
each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence

from .charges import Residue, differ_by_int
from .scalars import ONE, Scalar, q_pow, qint

Index = tuple  # tuple[int, ...]
Vec = dict  # dict[Index, Scalar]


# -- integer structure constants -------------------------------------------

def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def _sign(n: int) -> int:
    """``(-1)^n`` as an int, also for negative ``n``."""
    return -1 if n % 2 else 1


def pair_beta(i: int, j: int) -> int:
    """``<beta_i, e_j>``."""
    if j == i:
        return 2 * _sign(i)
    if _sign(j) * (j - i) > 0:
        return 4 * _sign(i)
    return 0


def b_int(i: int, j: int) -> int:
    if j in (i, i + 1):
        return -2
    return 4 * _sgn(j - i) * _sign(j - i)


def b_coeff(i: Residue, j: Residue) -> int:
    """``b_ij`` on residues; zero when ``i - j`` is not an integer."""
    d = differ_by_int(j, i)
    if d is None:
        return 0
    if d in (0, 1):
        return -2
    return 4 * _sgn(d) * _sign(d)


def beta_ij(i: int, j: int) -> int:
    """Exponent of the q-commutator ``E_i F_j - q^beta_ij F_j E_i``."""
    if i == j:
        return 0
    if abs(i - j) == 1:
        return 3 * (j - i)
    return -4 * _sgn(j - i) * _sign(j - i)


# -- weights ---------------------------------------------------------------

@dataclass(frozen=True)
class Weight:
    """Integer functional on the lattice spanned by ``e_j``.

    ``parts`` is a tuple of ``(kind, index, coeff, shift)`` with
    ``kind in {"beta", "eps", "explicit"}``; the value at ``e_j`` is the sum
    of ``coeff * base(j + shift)``.  ``alpha_i = eps_{i+1} - eps_i`` and
    ``gamma_i = -beta_{i+1}`` are built from these.  Explicit parts carry
    a tuple of ``(j, value)`` pairs as ``index``.
    """

    parts: tuple = ()
    name: str = field(default="", compare=False)

    def at(self, j: int) -> int:
        total = 0
        for kind, idx, coeff, shift in self.parts:
            jj = j + shift
            if kind == "beta":
                total += coeff * pair_beta(idx, jj)
            elif kind == "eps":
                total += coeff * (jj == idx)
            else:
                total += coeff * dict(idx).get(jj, 0)
        return total

    def __add__(self, other: Weight) -> Weight:
        return Weight(_merge(self.parts + other.parts), f"({self.name}+{other.name})")

    def __neg__(self) -> Weight:
        return Weight(tuple((k, i, -c, s) for k, i, c, s in self.parts), f"-{self.name}")

    def __sub__(self, other: Weight) -> Weight:
        return self + (-other)

    def shifted(self, n: int = 1) -> Weight:
        """``lam'`` with ``<lam', e_j> = <lam, e_{j+n}>``."""
        return Weight(tuple((k, i, c, s + n) for k, i, c, s in self.parts), f"{self.name}'" * n if n > 0 else f"{self.name}^({n})")

    def finite_support(self) -> tuple[int, ...] | None:
        """Support if it is finite (no beta parts after cancellation), else ``None``."""
        if any(k == "beta" for k, *_ in self.parts):
            return None
        sup = set()
        for kind, idx, _c, shift in self.parts:
            if kind == "eps":
                sup.add(idx - shift)
            else:
                sup.update(j - shift for j, _ in idx)
        return tuple(sorted(j for j in sup if self.at(j)))


def _merge(parts):
    acc: dict = {}
    for k, i, c, s in parts:
        acc[(k, i, s)] = acc.get((k, i, s), 0) + c
    return tuple((k, i, c, s) for (k, i, s), c in sorted(acc.items(), key=repr) if c)


def beta(i: int) -> Weight:
    return Weight((("beta", i, 1, 0),), f"beta{i}")


def gamma(i: int) -> Weight:
    return Weight((("beta", i + 1, -1, 0),), f"gamma{i}")


def eps(i: int) -> Weight:
    return Weight((("eps", i, 1, 0),), f"eps{i}")


def alpha(i: int) -> Weight:
    w = eps(i + 1) - eps(i)
    return Weight(w.parts, f"alpha{i}")


def explicit(values: Mapping[int, int]) -> Weight:
    return Weight((("explicit", tuple(sorted(values.items())), 1, 0),), f"w{dict(values)}")


def pair_coroot(w: Weight, j: int) -> int:
    """``<w, alpha_j^vee> = <w, e_{j+1}> - <w, e_j>``."""
    return w.at(j + 1) - w.at(j)


# -- generators and coproducts ---------------------------------------------

@dataclass(frozen=True)
class Gen:
    kind: str  # "E", "F", "K"
    index: int = 0
    weight: Weight | None = None

    def shift(self, n: int) -> Gen:
        """Image under ``shift^n``: ``F_i -> F_{i+n}``, ``E_i -> E_{i+n}``.

        ``K_lam`` goes to ``K_mu`` with ``<mu, e_j> = <lam, e_{j-n}>``; this is
        the direction for which ``shift`` respects ``K_lam F_i K_-lam =
        q^-<lam, alpha_i^vee> F_i``, so ``K_alpha_i -> K_alpha_{i+1}``.
        """
        if self.kind == "K":
            return Gen("K", 0, self.weight.shifted(-n))
        return Gen(self.kind, self.index + n)

    def __str__(self):
        return f"K[{self.weight.name}]" if self.kind == "K" else f"{self.kind}{self.index}"


def F(i: int) -> Gen:
    return Gen("F", i)


def E(i: int) -> Gen:
    return Gen("E", i)


def K(w: Weight) -> Gen:
    return Gen("K", 0, w)


def coproduct(g: Gen, flavour: int) -> list[tuple[Gen | None, Gen | None]]:
    """Two-site coproduct; ``None`` stands for the unit.

    Flavour 1::

        F_i -> F_i (x) K_beta_i + 1 (x) F_i
        E_i -> K_alpha_i (x) E_i + E_i (x) K_(alpha_i - gamma_i)
        K   -> K (x) K

    Flavour 2 conjugates flavour 1 by the shift automorphism, so for
    instance ``Delta'(E_i) = K_alpha_i (x) E_i + E_i (x) K_mu`` with ``mu`` the
    shift of ``alpha_{i-1} - gamma_{i-1}``.
    """
    if flavour == 2:
        return [(None if a is None else a.shift(1), None if b is None else b.shift(1))
                for a, b in coproduct(g.shift(-1), 1)]
    if g.kind == "F":
        return [(g, K(beta(g.index))), (None, g)]
    if g.kind == "E":
        i = g.index
        return [(K(alpha(i)), g), (g, K(alpha(i) - gamma(i)))]
    return [(g, g)]


# -- action on a single factor ---------------------------------------------

def _right_single(g: Gen, j: int) -> list[tuple[int, Scalar]]:
    if g.kind == "F":
        return [(j + 1, ONE)] if j == g.index else []
    if g.kind == "E":
        return [(j - 1, ONE)] if j == g.index + 1 else []
    return [(j, q_pow(g.weight.at(j)))]


def _left_single(g: Gen, j: int) -> list[tuple[int, Scalar]]:
    if g.kind == "F":
        return [(g.index, ONE)] if j == g.index + 1 else []
    if g.kind == "E":
        return [(j + 1, ONE)] if j == g.index else []
    return [(j, q_pow(g.weight.at(j)))]


def _act_tuple(g: Gen | None, idx: Index, pattern: Sequence[int], single) -> list[tuple[Index, Scalar]]:
    if g is None:
        return [(idx, ONE)]
    if g.kind == "K":
        exp = sum(g.weight.at(j) for j in idx)
        return [(idx, q_pow(exp))]
    if len(idx) == 1:
        return [((j,), c) for j, c in single(g, idx[0])]
    out = []
    for left_g, right_g in coproduct(g, pattern[-1]):
        lefts = _act_tuple(left_g, idx[:-1], pattern[:-1], single)
        if not lefts:
            continue
        rights = _act_tuple(right_g, idx[-1:], (), single)
        for li, lc in lefts:
            for ri, rc in rights:
                out.append((li + ri, lc * rc))
    return out


def add_into(acc: Vec, key, c: Scalar) -> None:
    if c.is_zero():
        return
    v = acc.get(key)
    v = c if v is None else v + c
    if v.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = v


def scale(v: Mapping, c) -> Vec:
    c = c if isinstance(c, Scalar) else Scalar(c)
    if c.is_zero():
        return {}
    return {k: x * c for k, x in v.items()}


def vadd(*vs: Mapping) -> Vec:
    out: Vec = {}
    for v in vs:
        for k, c in v.items():
            add_into(out, k, c)
    return out


def vsub(a: Mapping, b: Mapping) -> Vec:
    return vadd(a, scale(b, -1))


def act_gen_right(g: Gen, v: Mapping, pattern: Sequence[int]) -> Vec:
    out: Vec = {}
    for idx, c in v.items():
        for j, d in _act_tuple(g, idx, pattern, _right_single):
            add_into(out, j, c * d)
    return out


def act_gen_left(g: Gen, v: Mapping, pattern: Sequence[int]) -> Vec:
    out: Vec = {}
    for idx, c in v.items():
        for j, d in _act_tuple(g, idx, pattern, _left_single):
            add_into(out, j, c * d)
    return out


# An algebra element is a list of (Scalar, word) with word a tuple of Gens.
Element = list


def element(*terms) -> Element:
    return [(c if isinstance(c, Scalar) else Scalar(c), tuple(w)) for c, w in terms]


def mul(a: Element, b: Element) -> Element:
    return [(c * d, u + w) for c, u in a for d, w in b]


def add(*es: Element) -> Element:
    return [t for e in es for t in e]


def smul(c, a: Element) -> Element:
    c = c if isinstance(c, Scalar) else Scalar(c)
    return [(c * d, w) for d, w in a]


def act_right(x: Element, v: Mapping, pattern: Sequence[int]) -> Vec:
    """``v . x`` for the right module: the word is applied left to right."""
    out: Vec = {}
    for c, word in x:
        w = dict(v)
        for g in word:
            w = act_gen_right(g, w, pattern)
            if not w:
                break
        for k, d in w.items():
            add_into(out, k, c * d)
    return out


def act_left(x: Element, v: Mapping, pattern: Sequence[int]) -> Vec:
    """``x . v`` for the left (dual) module: the word is applied right to left."""
    out: Vec = {}
    for c, word in x:
        w = dict(v)
        for g in reversed(word):
            w = act_gen_left(g, w, pattern)
            if not w:
                break
        for k, d in w.items():
            add_into(out, k, c * d)
    return out


def apply_F(i: int, v: Mapping, pattern: Sequence[int] = ()) -> Vec:
    return act_gen_right(F(i), v, pattern)


def apply_E(i: int, v: Mapping, pattern: Sequence[int] = ()) -> Vec:
    return act_gen_right(E(i), v, pattern)


def apply_K(w: Weight, v: Mapping, pattern: Sequence[int] = ()) -> Vec:
    return act_gen_right(K(w), v, pattern)


def coideal_element(i: int, epsilon: int) -> Element:
    """Image of the generator ``E_i``: ``F_i + q^(eps-1) E_{i-1} K_{-alpha_{i-1}}``."""
    return element((1, (F(i),)), (q_pow(epsilon - 1), (E(i - 1), K(-alpha(i - 1)))))


def coideal_gen(i: int, epsilon: int) -> Callable[[Mapping, Sequence[int]], Vec]:
    x = coideal_element(i, epsilon)
    return lambda v, pattern=(): act_right(x, v, pattern)


def dual_coideal_element(i: int, epsilon: int) -> Element:
    """Element acting on the dual module for the generator ``E_i`` of the
    opposite-sign algebra: ``q^-eps`` times the image of ``E_{i+1}``."""
    return smul(q_pow(-epsilon), coideal_element(i + 1, epsilon))


# -- Hecke operators ---------------------------------------------------------

def hecke_a(i: int, j: int, flavour: int) -> int:
    """Exponent of ``a_ij`` for the connective ``flavour``."""
    if i >= j:
        if (i - flavour) % 2 == 1 and (j - flavour) % 2 == 0:
            return 3
        return -1
    if (i - flavour) % 2 == 0 and (j - flavour) % 2 == 1:
        return -3
    return 1


_QINV_MINUS_Q = q_pow(-1) - q_pow(1)


def apply_H(k: int, v: Mapping, pattern: Sequence[int]) -> Vec:
    """``H_k`` on positions ``k, k+1`` (1-based) of a tensor vector."""
    fl = pattern[k - 1]
    out: Vec = {}
    for idx, c in v.items():
        i, j = idx[k - 1], idx[k]
        swapped = idx[:k - 1] + (j, i) + idx[k + 1:]
        add_into(out, swapped, c * q_pow(hecke_a(i, j, fl)))
        if i < j:
            add_into(out, idx, c * _QINV_MINUS_Q)
    return out


def apply_Hstar(k: int, v: Mapping, pattern: Sequence[int]) -> Vec:
    """``H*_k`` on dual tensors, using ``a_ji``."""
    fl = pattern[k - 1]
    out: Vec = {}
    for idx, c in v.items():
        i, j = idx[k - 1], idx[k]
        swapped = idx[:k - 1] + (j, i) + idx[k + 1:]
        add_into(out, swapped, c * q_pow(hecke_a(j, i, fl)))
        if i < j:
            add_into(out, idx, c * _QINV_MINUS_Q)
    return out


# -- TensorVector ------------------------------------------------------------

@dataclass
class TensorVector:
    """Finite combination of index tuples in a fixed mixed tensor power."""

    pattern: tuple
    terms: dict
    dual: bool = False

    @classmethod
    def basis(cls, idx: Iterable[int], pattern: Sequence[int], dual: bool = False) -> TensorVector:
        idx = tuple(idx)
        if len(pattern) != len(idx) - 1:
            raise ValueError("pattern length must be d - 1")
        return cls(tuple(pattern), {idx: ONE}, dual)

    def __add__(self, other: TensorVector) -> TensorVector:
        return TensorVector(self.pattern, vadd(self.terms, other.terms), self.dual)

    def __sub__(self, other: TensorVector) -> TensorVector:
        return TensorVector(self.pattern, vsub(self.terms, other.terms), self.dual)

    def __rmul__(self, c) -> TensorVector:
        return TensorVector(self.pattern, scale(self.terms, c), self.dual)

    def __eq__(self, other):
        return isinstance(other, TensorVector) and self.pattern == other.pattern and self.terms == other.terms

    def act(self, x: Element) -> TensorVector:
        f = act_left if self.dual else act_right
        return TensorVector(self.pattern, f(x, self.terms, self.pattern), self.dual)

    def hecke(self, k: int) -> TensorVector:
        f = apply_Hstar if self.dual else apply_H
        return TensorVector(self.pattern, f(k, self.terms, self.pattern), self.dual)


# -- verification suites -------------------------------------------------------

@dataclass
class Report:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)
    statement: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, detail) -> None:
        self.checks += 1
        if not ok and len(self.failures) < 50:
            self.failures.append(detail)

    def to_json(self) -> dict:
        return {"suite": self.name, "statement": self.statement, "checks": self.checks,
                "passed": self.passed, "failures": [str(f) for f in self.failures]}


def all_patterns(d: int) -> list[tuple[int, ...]]:
    return list(product((1, 2), repeat=d - 1))


def basis_tuples(d: int, window: int) -> Iterable[Index]:
    return product(range(-window, window + 1), repeat=d)


OpFn = Callable[[Vec], Vec]


def _compose(*ops: OpFn) -> OpFn:
    """Apply ``ops`` left to right."""
    def run(v: Vec) -> Vec:
        for op in ops:
            if not v:
                return v
            v = op(v)
        return v
    return run


def _lin(*terms: tuple) -> OpFn:
    def run(v: Vec) -> Vec:
        return vadd(*(scale(op(v), c) for c, op in terms))
    return run


def _check_ops(report: Report, lhs: OpFn, rhs: OpFn, d: int, window: int, patterns, label) -> None:
    for pat in patterns:
        for idx in basis_tuples(d, window):
            v = {idx: ONE}
            a, b = lhs(v, pat), rhs(v, pat)
            report.record(a == b, (label, pat, idx))


def _right_op(x: Element) -> Callable:
    return lambda v, pat: act_right(x, v, pat)


def _hecke_op(k: int, dual: bool = False) -> Callable:
    f = apply_Hstar if dual else apply_H
    return lambda v, pat: f(k, v, pat)


def _seq(*ops: Callable) -> Callable:
    def run(v, pat):
        for op in ops:
            if not v:
                return v
            v = op(v, pat)
        return v
    return run


def _comb(*terms) -> Callable:
    def run(v, pat):
        return vadd(*(scale(op(v, pat), c) for c, op in terms))
    return run


_ZERO_OP = lambda v, pat: {}  # noqa: E731


def suite_hecke(window: int = 4, dims=(2, 3), dual: bool = False) -> Report:
    rep = Report("hecke" + ("_dual" if dual else ""),
                 statement="Hecke quadratic and braid relations for H" + ("*" if dual else "") + " on mixed tensor powers")
    for d in dims:
        pats = all_patterns(d)
        for k in range(1, d):
            H = _hecke_op(k, dual)
            lhs = _seq(H, H)
            rhs = _comb((ONE, lambda v, p: dict(v)), (_QINV_MINUS_Q, H))
            _check_ops(rep, lhs, rhs, d, window, pats, ("quadratic", k))
        for k in range(1, d - 1):
            H1, H2 = _hecke_op(k, dual), _hecke_op(k + 1, dual)
            _check_ops(rep, _seq(H1, H2, H1), _seq(H2, H1, H2), d, window, pats, ("braid", k))
    return rep


def default_weights() -> list[Weight]:
    return [alpha(0), alpha(1), explicit({0: 1, 2: -3}), explicit({-1: 2, 1: 1, 3: -1})]


def suite_hecke_commute(window: int = 4, dims=(2, 3), gen_range: int = 3, weights=None) -> Report:
    rep = Report("hecke_commute", statement="H_k commutes with the right action of E_i, F_i, K_lam")
    if weights is None:
        weights = [alpha(i) for i in range(-gen_range, gen_range + 1)] + default_weights()[2:]
    gens = [F(i) for i in range(-gen_range, gen_range + 1)] + [E(i) for i in range(-gen_range, gen_range + 1)]
    gens += [K(w) for w in weights]
    for d in dims:
        pats = all_patterns(d)
        for k in range(1, d):
            H = _hecke_op(k)
            for g in gens:
                x = _right_op(element((1, (g,))))
                _check_ops(rep, _seq(H, x), _seq(x, H), d, window, pats, ("commute", k, str(g)))
    return rep


def _gen(g: Gen) -> Callable:
    return _right_op(element((1, (g,))))


def _serre_checks(rep: Report, X: Callable[[int], Callable], indices, d, window, pats, label, rhs_fn=None):
    t = qint(2)
    for i in indices:
        for j in (i + 1, i - 1):
            c_out = q_pow(3) if j == i + 1 else q_pow(-3)
            c_in = q_pow(-3) if j == i + 1 else q_pow(3)
            lhs = _comb((c_out, _seq(X(i), X(i), X(j))), (-t, _seq(X(i), X(j), X(i))), (c_in, _seq(X(j), X(i), X(i))))
            rhs = rhs_fn(i) if rhs_fn else _ZERO_OP
            _check_ops(rep, lhs, rhs, d, window, pats, (label, i, j))
        for j in indices:
            if abs(i - j) > 1:
                lhs = _seq(X(i), X(j))
                rhs = _comb((q_pow(b_int(i, j)), _seq(X(j), X(i))))
                _check_ops(rep, lhs, rhs, d, window, pats, (label + "-distant", i, j))


def suite_uqg(window: int = 4, dims=(1, 2, 3), gen_range: int = 3, weights=None) -> Report:
    rep = Report("uqg", statement="defining relations of the quantum electrical algebra: K products, K conjugation, E/F commutator, Serre-type relations")
    weights = default_weights() if weights is None else weights
    idxs = range(-gen_range, gen_range + 1)
    den_inv = ONE / (q_pow(1) - q_pow(-1))
    for d in dims:
        pats = all_patterns(d)
        # K_a K_b = K_{a+b}, K_0 = 1
        for w1 in weights[:2]:
            for w2 in weights[2:]:
                _check_ops(rep, _seq(_gen(K(w1)), _gen(K(w2))), _gen(K(w1 + w2)), d, window, pats, ("K-product",))
        _check_ops(rep, _gen(K(Weight())), lambda v, p: dict(v), d, window, pats, ("K-zero",))
        # K conjugation
        for w in weights + [beta(0), gamma(1)]:
            for i in idxs:
                n = pair_coroot(w, i)
                _check_ops(rep, _seq(_gen(K(w)), _gen(F(i))), _comb((q_pow(-n), _seq(_gen(F(i)), _gen(K(w))))),
                           d, window, pats, ("K-conj F", w.name, i))
                _check_ops(rep, _seq(_gen(K(w)), _gen(E(i))), _comb((q_pow(n), _seq(_gen(E(i)), _gen(K(w))))),
                           d, window, pats, ("K-conj E", w.name, i))
        # E/F commutator with the beta_ij twist
        for i in idxs:
            for j in idxs:
                lhs = _comb((ONE, _seq(_gen(E(i)), _gen(F(j)))), (-q_pow(beta_ij(i, j)), _seq(_gen(F(j)), _gen(E(i)))))
                if i == j:
                    rhs = _comb((den_inv, _gen(K(alpha(i)))), (-den_inv, _gen(K(-alpha(i)))))
                else:
                    rhs = _ZERO_OP
                _check_ops(rep, lhs, rhs, d, window, pats, ("EF", i, j))
        # Serre-type relations for F and E
        _serre_checks(rep, lambda i: _gen(F(i)), idxs, d, window, pats, "F-serre")
        _serre_checks(rep, lambda i: _gen(E(i)), idxs, d, window, pats, "E-serre")
    return rep


def suite_coideal(window: int = 4, dims=(1, 2, 3), epsilon: int = 1, gen_range: int = 3) -> Report:
    rep = Report("coideal", statement="relations of the q-electrical algebra for the coideal generators")
    idxs = range(-gen_range, gen_range + 1)

    def X(i):
        return _right_op(coideal_element(i, epsilon))

    def rhs(i):
        return _comb((-q_pow(epsilon) * qint(2), X(i)))

    for d in dims:
        _serre_checks(rep, X, idxs, d, window, all_patterns(d), f"eps={epsilon}", rhs)
    return rep


def suite_beta_b(window: int = 5) -> Report:
    rep = Report("beta_b", statement="<beta_i, alpha_j^vee> = b_ji, <gamma_i, alpha_j^vee> = -b_ij, shift invariance")
    rng = range(-window, window + 1)
    for i in rng:
        for j in rng:
            rep.record(pair_coroot(beta(i), j) == b_int(j, i), ("beta", i, j))
            rep.record(pair_coroot(gamma(i), j) == -b_int(i, j), ("gamma", i, j))
            rep.record(b_int(j, i + 1) == b_int(i, j), ("b_j,i+1", i, j))
            rep.record(b_int(i, j) == b_int(i + 1, j + 1), ("shift", i, j))
            rep.record(b_int(i - 1, j) == b_int(j, i), ("b_i-1,j", i, j))
            if abs(i - j) > 1:
                rep.record(b_int(j, i) == -b_int(i, j), ("antisym", i, j))
            rep.record(beta_ij(i, j) == pair_coroot(gamma(i) - alpha(i), j), ("beta_ij", i, j))
    return rep


SUITES = {
    "uqg": suite_uqg,
    "hecke": suite_hecke,
    "hecke_commute": suite_hecke_commute,
    "coideal": suite_coideal,
    "beta_b": suite_beta_b,
}


def verify_suite(name: str, window: int = 4, epsilon: int = 1) -> Report:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if name == "coideal":
        return suite_coideal(window=window, epsilon=epsilon)
    return SUITES[name](window=window)
