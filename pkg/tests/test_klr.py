import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qelectric.charges import ChargeVector, Residue
from qelectric.klr import (
    DOT_DEGREE,
    DegreeTable,
    PsiElement,
    calibrate_orientation,
    cap_degree,
    cross_check_exponents,
    crossing_degree,
    cup_degree,
    degree_half,
    degree_psi,
    eklr_act,
    graded_hom_dim,
    pair_count,
    projective_in_standards,
    relation_identities,
    relations_gdim_check,
)
from qelectric.partitions import Box, Step, partitions_of, size
from qelectric.scalars import LaurentPoly
from qelectric.tableaux import UpDownTableau, enumerate_all, residue_seq

CV = ChargeVector.symbolic(1)
D = CV[1]
ONE_POLY = LaurentPoly.constant(1)


def walk(*steps):
    return UpDownTableau([Step(s, Box(r, c)) for s, r, c in steps])


def seq(*offsets):
    return [D.plus(n) for n in offsets]


# -- generator degrees ----------------------------------------------------------------------

def test_generator_degrees():
    assert crossing_degree(D, D) == -2
    assert crossing_degree(D, D.plus(1)) == -2
    assert crossing_degree(D, D.plus(2)) == 4
    assert crossing_degree(Residue.symbolic(1), Residue.symbolic(2)) == 0
    for e in (1, -1):
        t = DegreeTable(e)
        assert (t.cap, t.cup, t.dot) == (cap_degree(e), cup_degree(e), DOT_DEGREE) == (e, -e, 2)


@given(st.integers(-8, 8), st.integers(-8, 8))
def test_distant_crossings_are_antisymmetric(a, b):
    x, y = D.plus(a), D.plus(b)
    if b - a not in (-1, 0, 1):
        assert crossing_degree(x, y) + crossing_degree(y, x) == 0


# -- degrees of basis elements ------------------------------------------------------------------

@pytest.mark.parametrize("eps", [1, -1])
def test_degree_half_examples(eps):
    for lam in [(), (1,), (2, 1), (3, 1, 1)]:
        t = UpDownTableau.canonical((lam,))
        assert degree_half(t, CV, eps) == 0 == degree_half(t, CV, eps, "from_canonical")
    assert degree_half(walk((1, 1, 1), (-1, 1, 1)), CV, eps) == eps
    # the cap joins the last two strands, which are adjacent: no crossing is needed
    assert degree_half(walk((1, 1, 1), (1, 1, 2), (-1, 1, 2)), CV, eps) == eps


@pytest.mark.parametrize("eps", [1, -1])
def test_degree_psi_examples(eps):
    t = UpDownTableau.canonical(((2, 1),))
    assert degree_psi(PsiElement(t, t), CV, eps) == 0
    t = walk((1, 1, 1), (-1, 1, 1))
    assert degree_psi(PsiElement(t, t), CV, eps) == 0


def test_psi_needs_equal_shapes():
    with pytest.raises(ValueError):
        PsiElement(UpDownTableau.canonical(((1,),)), UpDownTableau.canonical(((2,),)))


ALL = {m: [t for ts in enumerate_all(m, 1).values() for t in ts] for m in range(7)}


@given(st.integers(0, 6), st.data(), st.sampled_from([1, -1]), st.integers(0, 10 ** 6))
@settings(max_examples=120, deadline=None)
def test_degree_independent_of_pulling_order(m, data, eps, seed):
    t = data.draw(st.sampled_from(ALL[m]))
    for direction in ("to_canonical", "from_canonical"):
        assert degree_half(t, CV, eps, direction, random.Random(seed)) == degree_half(t, CV, eps, direction)


def test_degree_direction_is_validated():
    with pytest.raises(ValueError):
        degree_half(UpDownTableau([]), CV, 1, "sideways")


# -- graded dimensions ----------------------------------------------------------------------

@pytest.mark.parametrize("eps", [1, -1])
def test_gdim_examples(eps):
    assert graded_hom_dim(seq(0), seq(0), CV, eps) == ONE_POLY
    for tgt in ([], seq(0), seq(0, 0), seq(0, 1)):
        assert graded_hom_dim(seq(0, 0), tgt, CV, eps).is_zero()
    p = graded_hom_dim(seq(0, 1, 0), seq(0, 1, 0), CV, eps)
    assert p.at_one() == pair_count(seq(0, 1, 0), seq(0, 1, 0), CV)


words = st.lists(st.integers(-2, 2), min_size=0, max_size=4)


@given(words, words, st.sampled_from([1, -1]))
@settings(max_examples=80, deadline=None)
def test_gdim_at_one_counts_pairs(a, b, eps):
    src, tgt = seq(*a), seq(*b)
    assert graded_hom_dim(src, tgt, CV, eps).at_one() == pair_count(src, tgt, CV)


@given(words, st.integers(-2, 2), words, words)
@settings(max_examples=60, deadline=None)
def test_repeated_residue_kills_everything(a, x, b, tgt):
    src = seq(*a) + seq(x, x) + seq(*b)
    assert graded_hom_dim(src, seq(*tgt), CV, 1).is_zero()
    assert graded_hom_dim(seq(*tgt), src, CV, -1).is_zero()


def test_gdim_level_two_generic():
    cv = ChargeVector.symbolic(2)
    d1, d2 = cv[1], cv[2]
    assert graded_hom_dim([d1, d2], [d1, d2], cv, 1) == graded_hom_dim([d2, d1], [d2, d1], cv, 1)
    # components do not interact, so i j and j i carry the same dimensions
    assert graded_hom_dim([d1, d2], [d2, d1], cv, 1).at_one() == pair_count([d1, d2], [d2, d1], cv)


def test_projective_in_standards():
    for n in range(4):
        for lam in partitions_of(n):
            p = projective_in_standards(lam, CV, 1)
            assert p[(lam,)] == ONE_POLY
            assert all(size(mu) <= n for mu in p)
            assert all(size(mu) < n for mu in p if mu != (lam,))


# -- action on standards -----------------------------------------------------------------------

@pytest.mark.parametrize("eps", [1, -1])
def test_eklr_examples(eps):
    assert eklr_act((), D, CV, eps) == [(((1,),), 0)]
    assert sorted(eklr_act((1,), D.plus(1), CV, eps)) == sorted([(((2,),), 0), (((),), eps)])
    # (2) has no addable box of content d and no removable box of content d - 1
    assert eklr_act((2,), D, CV, eps) == []


def test_calibration_and_cross_check():
    for eps in (1, -1):
        assert calibrate_orientation(CV, eps) == 1
        for lam in [lam for n in range(4) for lam in partitions_of(n)]:
            for k in range(-4, 5):
                ok, _, _ = cross_check_exponents(lam, D.plus(k), CV, eps)
                assert ok


def test_level_two_cross_check_needs_level_one():
    with pytest.raises(ValueError):
        cross_check_exponents(((), ()), D, ChargeVector.symbolic(2), 1)


# -- K0 relations ---------------------------------------------------------------------------------

def test_relation_identity_shapes():
    lhs, rhs = relation_identities(D, D.plus(2), 1, True, 1)
    assert lhs == [(ONE_POLY, (D, D.plus(2)))]
    assert rhs == [(LaurentPoly.monomial(4), (D.plus(2), D))]
    other = Residue.symbolic(2)
    assert relation_identities(D, other, 1, True, 1)[1][0][0] == ONE_POLY


@pytest.mark.parametrize("eps", [1, -1])
def test_relations_gdim_bound_four(eps):
    rep = relations_gdim_check(CV, eps, bound=4)
    assert rep.passed, rep.failures[:3]
    assert rep.notes["orientations_passing"] == [1]


def test_literal_left_shift_fails_for_negative_epsilon():
    assert relations_gdim_check(CV, 1, bound=4, orientation=1, literal=True).passed
    assert not relations_gdim_check(CV, -1, bound=4, orientation=1, literal=True).passed


def test_residue_sequences_of_enumerated_tableaux_have_tableaux():
    from qelectric.klr import tableaux_with_residues
    for t in ALL[4]:
        assert t in tableaux_with_residues(residue_seq(t, CV), CV)
