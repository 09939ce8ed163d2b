"""Property checks shared by the ``verify`` subcommand and the test suite.

Every function returns a report with ``name``, ``statement``, ``checks``,
``failures`` and ``passed``.  Equalities are exact over Q(q).
"""

from __future__ import annotations

import random
from typing import Callable

from .charges import ChargeVector, Residue
from .fock import (
    ConventionError,
    FockError,
    FockVector,
    MultiFockVector,
    act_basis,
    act_word,
    bar_fock,
    bar_vector,
    expected_support,
    is_stable,
    multi_act,
    multi_act_word,
    pairing,
    relation_failures,
    relevant_generators,
    sigma_word,
    tau_fock,
)
from .klr import (
    CheckReport,
    PsiElement,
    calibrate_orientation,
    cross_check_exponents,
    degree_psi,
    eklr_act,
    relations_gdim_check,
)
from .partitions import enumerate_multipartitions, partitions_of, transpose
from .scalars import q_pow, qint
from .tableaux import double_factorial_odd, enumerate_all, sum_of_squares
from .tensor_ops import (
    Report,
    b_coeff,
    suite_beta_b,
    suite_coideal,
    suite_hecke,
    suite_hecke_commute,
    suite_uqg,
)

ZERO_CHARGE = Residue.concrete(0)


def _merge(name: str, statement: str, parts) -> Report:
    rep = Report(name, statement=statement)
    for p in parts:
        rep.checks += p.checks
        rep.failures.extend(p.failures[: max(0, 50 - len(rep.failures))])
    return rep


def _partitions_up_to(n: int):
    return [lam for m in range(n + 1) for lam in partitions_of(m)]


# -- tensor operators ---------------------------------------------------------------

def check_hecke(window: int = 4) -> Report:
    return _merge("hecke", "Hecke quadratic and braid relations for H and H* on 2 and 3 factors, all flavour patterns",
                  [suite_hecke(window, (2, 3)), suite_hecke(window, (2, 3), dual=True)])


def check_hecke_commute(window: int = 4) -> Report:
    return suite_hecke_commute(window, (2, 3))


def check_uqg(window: int = 4) -> Report:
    return suite_uqg(window, (1, 2, 3))


def check_coideal(window: int = 4, epsilons=(1, -1)) -> Report:
    return _merge("coideal", "Serre-type relations for the coideal generators, right-hand side -q^eps [2] E_i",
                  [suite_coideal(window, (1, 2, 3), e) for e in epsilons])


def check_beta_b(window: int = 5) -> Report:
    return suite_beta_b(window)


# -- Fock space ---------------------------------------------------------------------

def check_fock_relations(max_size: int = 6, distant_max: int = 5, epsilons=(1, -1)) -> Report:
    rep = Report("fock_relations", statement="Serre-type relations on v_lam for |lam| <= 6 and distant "
                 "commutation with q^b_ij for |lam| <= 5, charge 0")
    for e in epsilons:
        for lam in _partitions_up_to(max_size):
            bad = relation_failures(lam, e, distant=sum(lam) <= distant_max)
            rep.record(not bad, (e, lam, bad[:3]))
    return rep


def check_fock_support(max_size: int = 6, epsilons=(1, -1)) -> Report:
    rep = Report("fock_support", statement="v_lam E_i is a sum over add-content-i and remove-content-(i-1) "
                 "partitions with +-q^k coefficients")
    for e in epsilons:
        for lam in _partitions_up_to(max_size):
            for n in relevant_generators(lam):
                try:
                    out = act_basis(lam, n, e)
                except FockError as exc:
                    rep.record(False, (e, lam, n, str(exc)))
                    continue
                ok = set(out) == expected_support(lam, n) and all(c.monomial() is not None for c in out.values())
                rep.record(ok, (e, lam, n))
    return rep


def check_fock_stability(max_size: int = 6, epsilons=(1, -1)) -> Report:
    rep = Report("fock_stability", statement="truncation at depth |lam|+4 and |lam|+6 gives the same action")
    for e in epsilons:
        for lam in _partitions_up_to(max_size):
            for n in relevant_generators(lam):
                rep.record(is_stable(lam, n, e), (e, lam, n))
    return rep


def check_cross(max_size: int = 5, epsilons=(1, -1)) -> Report:
    rep = Report("cross_check", statement="shifts of standards in Delta_lam . P_i match the Fock action exponents")
    cv = ChargeVector((ZERO_CHARGE,))
    for e in epsilons:
        orient = calibrate_orientation(cv, e, max_size)
        for lam in _partitions_up_to(max_size):
            for n in relevant_generators(lam):
                i = ZERO_CHARGE.plus(n)
                ok, klr, fock = cross_check_exponents(lam, i, cv, e, orient)
                if klr or fock:
                    rep.record(ok, (e, lam, n, klr, fock))
    return rep


def check_bar(max_size: int = 4, epsilons=(1, -1)) -> Report:
    rep = Report("bar", statement="bar(v_vac) = v^vac and the two bar maps are mutually inverse")
    for e in epsilons:
        rep.record(bar_fock((), ZERO_CHARGE, e) == FockVector.vacuum(ZERO_CHARGE, e, dual=True), (e, "vacuum"))
        for lam in _partitions_up_to(max_size):
            for dual in (False, True):
                v = FockVector.basis(lam, ZERO_CHARGE, e, dual)
                try:
                    ok = bar_vector(bar_vector(v)) == v
                except FockError as exc:
                    ok, lam = False, (lam, str(exc))
                rep.record(ok, (e, dual, lam))
    return rep


def check_tau(max_size: int = 5, epsilons=(1, -1)) -> Report:
    rep = Report("tau", statement="tau(v_lam) is a +-q^c multiple of v^(lam transpose)")
    for e in epsilons:
        for lam in _partitions_up_to(max_size):
            try:
                out = tau_fock(lam, ZERO_CHARGE, e)
                ok = out.dual and set(out.terms) == {transpose(lam)}
            except ConventionError as exc:
                ok, lam = False, (lam, str(exc))
            rep.record(ok, (e, lam))
    return rep


def check_adjoint(cases: int = 200, seed: int = 7, max_size: int = 4, max_len: int = 4) -> Report:
    rep = Report("adjoint", statement="(w.u, v) = (w, v.sigma(u)) for random generator words")
    rng = random.Random(seed)
    parts = _partitions_up_to(max_size)
    for _ in range(cases):
        e = rng.choice((1, -1))
        lam, mu = rng.choice(parts), rng.choice(parts)
        word = [ZERO_CHARGE.plus(rng.randint(-3, 3)) for _ in range(rng.randint(0, max_len))]
        w = FockVector.basis(lam, ZERO_CHARGE, e, dual=True)
        v = FockVector.basis(mu, ZERO_CHARGE, e)
        c, sw = sigma_word(word, e)
        lhs = pairing(act_word(w, word), v)
        rhs = pairing(w, act_word(v, sw)) * c
        rep.record(lhs == rhs, (e, lam, mu, [str(x) for x in word]))
    return rep


def check_higher_level(max_size: int = 3, epsilons=(1, -1)) -> Report:
    """Relations on a generic level-2 Fock space and agreement with level 1, componentwise."""
    rep = Report("higher_level", statement="level-2 generic Fock space: Serre-type and distant relations, "
                 "componentwise action with level-1 coefficients and matching standard-module shifts")
    cv = ChargeVector.symbolic(2)
    two = qint(2)
    for e in epsilons:
        for n in range(max_size + 1):
            for lam in enumerate_multipartitions(n, 2):
                v = MultiFockVector.basis(lam, cv, e)
                gens = [cv[k].plus(m) for k in (1, 2) for m in relevant_generators(lam[k - 1])]
                for i in gens:
                    rhs = multi_act(v, i).scaled(-q_pow(e) * two)
                    for j, c1, c3 in ((i.plus(1), 3, -3), (i.plus(-1), -3, 3)):
                        lhs = (multi_act_word(v, [i, i, j]).scaled(q_pow(c1))
                               - multi_act_word(v, [i, j, i]).scaled(two)
                               + multi_act_word(v, [j, i, i]).scaled(q_pow(c3)))
                        rep.record(lhs == rhs, ("serre", e, lam, str(i), str(j)))
                    for j in gens:
                        d = j - i
                        if d is not None and abs(d) <= 1:
                            continue
                        lhs = multi_act_word(v, [i, j])
                        rhs2 = multi_act_word(v, [j, i]).scaled(q_pow(b_coeff(i, j)))
                        rep.record(lhs == rhs2, ("distant", e, lam, str(i), str(j)))
                    # componentwise agreement with level 1
                    k = cv.component_of(i)
                    one = act_word(FockVector.basis(lam[k - 1], cv[k], e), [i])
                    lifted = {lam[:k - 1] + (mu,) + lam[k:]: c for mu, c in one.terms.items()}
                    rep.record(multi_act(v, i).terms == lifted, ("componentwise", e, lam, str(i)))
                    # standard-module shifts at level 2
                    klr = {mu: d for mu, d in eklr_act(lam, i, cv, e)}
                    fock = {mu: c.monomial()[1] for mu, c in multi_act(v, i).terms.items()}
                    rep.record(klr == fock, ("shifts", e, lam, str(i), klr, fock))
    return rep


# -- tableaux and KLR ------------------------------------------------------------------

def check_tableaux_dims(level1_max: int = 6, level2_max: int = 4) -> Report:
    rep = Report("tableaux_dims", statement="sum of squares of tableau counts: (2m-1)!! at level 1, "
                 "2^m (2m-1)!! at level 2")
    for m in range(level1_max + 1):
        rep.record(sum_of_squares(m, 1) == double_factorial_odd(m), (1, m))
    for m in range(level2_max + 1):
        rep.record(sum_of_squares(m, 2) == 2 ** m * double_factorial_odd(m), (2, m))
    return rep


def check_degree(cases: int = 500, seed: int = 11, max_len: int = 6, level: int = 1) -> Report:
    rep = Report("degree", statement="deg Psi_t^s does not depend on the pulling order or the moved endpoint")
    rng = random.Random(seed)
    cv = ChargeVector.symbolic(level)
    by_len = {m: [ts for ts in enumerate_all(m, level).values()] for m in range(max_len + 1)}
    for _ in range(cases):
        m = rng.randint(0, max_len)
        ts = rng.choice(by_len[m])
        e = rng.choice((1, -1))
        psi = PsiElement(rng.choice(ts), rng.choice(ts))
        base = degree_psi(psi, cv, e)
        others = {degree_psi(psi, cv, e, random.Random(rng.random())) for _ in range(3)}
        rep.record(others == {base}, (e, psi.t, psi.s, base, sorted(others)))
    return rep


def check_k0(bound: int = 5, epsilons=(1, -1)) -> Report:
    cv = ChargeVector((ZERO_CHARGE,))
    parts = []
    for e in epsilons:
        orient = calibrate_orientation(cv, e)
        parts.append(relations_gdim_check(ChargeVector.symbolic(1), e, bound=bound, orientation=orient))
    rep = _merge("k0_relations", "K0 identities for projectives at the level of graded Hom dimensions", parts)
    return rep



# -- registry -------------------------------------------------------------------------

CHECKS: dict[str, Callable[..., Report | CheckReport]] = {
    "hecke": check_hecke,
    "hecke_commute": check_hecke_commute,
    "uqg": check_uqg,
    "coideal": check_coideal,
    "fock_relations": check_fock_relations,
    "fock_support": check_fock_support,
    "fock_stability": check_fock_stability,
    "cross_check": check_cross,
    "tableaux_dims": check_tableaux_dims,
    "k0_relations": check_k0,
    "bar": check_bar,
    "tau": check_tau,
    "adjoint": check_adjoint,
    "degree": check_degree,
    "beta_b": check_beta_b,
    "higher_level": check_higher_level,
}
