from hypothesis import given, settings
from hypothesis import strategies as st

from qelectric.charges import ChargeVector
from qelectric.partitions import Box, Step, enumerate_multipartitions
from qelectric.tableaux import (
    UpDownTableau,
    admissible_subsequence_check,
    braid_avoiding,
    count,
    double_factorial_odd,
    dual_residue_seq,
    enumerate_all,
    enumerate_tableaux,
    has_repeated_pair,
    match_removals,
    residue_seq,
    sum_of_squares,
    surviving_steps,
)

cv1 = ChargeVector.symbolic(1)
d = cv1[1]


def walk(*shapes):
    """Tableau from a list of level-1 shapes, starting at the empty partition."""
    steps = []
    prev = ()
    for lam in shapes[1:]:
        if sum(lam) > sum(prev):
            r = next(k for k in range(len(lam)) if k >= len(prev) or lam[k] != prev[k])
            steps.append(Step(1, Box(r + 1, lam[r])))
        else:
            r = next(k for k in range(len(prev)) if k >= len(lam) or lam[k] != prev[k])
            steps.append(Step(-1, Box(r + 1, prev[r])))
        prev = lam
    return UpDownTableau(steps)


def brute_force_walks(m, level):
    """Oracle: walks as frozensets of boxes, no partition arithmetic shared with the library."""
    def neighbours(bx):
        out = []
        cells = set(bx)
        for k in range(1, level + 1):
            for r in range(1, m + 2):
                for c in range(1, m + 2):
                    b = (r, c, k)
                    up = r == 1 or (r - 1, c, k) in cells
                    left = c == 1 or (r, c - 1, k) in cells
                    if b not in cells and up and left:
                        out.append(frozenset(cells | {b}))
                    if b in cells and (r + 1, c, k) not in cells and (r, c + 1, k) not in cells:
                        out.append(frozenset(cells - {b}))
        return out

    layer = {frozenset(): 1}
    for _ in range(m):
        nxt = {}
        for bx, n in layer.items():
            for nb in neighbours(bx):
                nxt[nb] = nxt.get(nb, 0) + n
        layer = nxt
    return layer


def test_enumeration_examples():
    assert len(enumerate_tableaux(0, ((),))) == 1
    ts = enumerate_tableaux(3, ((1,),))
    assert len(ts) == 3
    assert {t.shapes[2] for t in ts} == {((2,),), ((1, 1),), ((),)}
    assert enumerate_tableaux(2, ((),)) == [walk((), (1,), ())]


def test_residue_sequences():
    t = UpDownTableau.canonical(((2,),))
    assert residue_seq(t, cv1) == dual_residue_seq(t, cv1) == (d, d.plus(1))
    t = walk((), (1,), ())
    assert residue_seq(t, cv1) == (d, d.plus(1))
    assert dual_residue_seq(t, cv1) == (d, d.plus(-1))
    cv2 = ChargeVector.symbolic(2)
    assert residue_seq(UpDownTableau.canonical(((1,), (1,))), cv2) == (cv2[2], cv2[1])


def test_match_removals_examples():
    assert match_removals(walk((), (1,), ())) == [(1, 2)]
    assert match_removals(UpDownTableau.canonical(((3, 1),))) == []
    t = walk((), (1,), (2,), (1,), ())
    assert match_removals(t) == [(2, 3), (1, 4)]
    assert surviving_steps(t) == []


def test_braid_avoiding_examples():
    assert not braid_avoiding([d, d.plus(1), d])
    assert braid_avoiding([d, d.plus(1), d.plus(2)])
    # swapping the first two entries (they differ by 2) exposes the window (d, d+1, d)
    assert not braid_avoiding([d, d.plus(2), d.plus(1), d])
    assert admissible_subsequence_check([d, d.plus(2), d.plus(1), d], [d, d.plus(1), d])


def test_repeated_pair():
    assert has_repeated_pair([d, d.plus(3), d])
    assert not has_repeated_pair([d, d.plus(1), d])


def test_double_factorial():
    assert [double_factorial_odd(m) for m in range(7)] == [1, 1, 3, 15, 105, 945, 10395]


def test_sum_of_squares_level_one():
    assert [sum_of_squares(m, 1) for m in range(7)] == [1, 1, 3, 15, 105, 945, 10395]


def test_sum_of_squares_level_two():
    assert [sum_of_squares(m, 2) for m in range(5)] == [2 ** m * double_factorial_odd(m) for m in range(5)]


def test_counts_against_brute_force():
    for level in (1, 2):
        for m in range(6 if level == 1 else 5):
            oracle = brute_force_walks(m, level)
            for n in range(m % 2, m + 1, 2):
                for lam in enumerate_multipartitions(n, level):
                    cells = frozenset((r, c, k) for k, comp in enumerate(lam, 1)
                                      for r, row in enumerate(comp, 1) for c in range(1, row + 1))
                    assert count(m, lam) == oracle.get(cells, 0)


def test_enumerate_all_agrees_with_enumerate():
    for m in range(5):
        for lam, ts in enumerate_all(m, 1).items():
            assert ts == enumerate_tableaux(m, lam)
            assert all(t.shape == lam for t in ts)


@given(st.integers(0, 6), st.data())
@settings(max_examples=40, deadline=None)
def test_restriction_is_a_tableau(m, data):
    shapes = [lam for lam, ts in enumerate_all(m, 1).items()]
    lam = data.draw(st.sampled_from(shapes))
    t = data.draw(st.sampled_from(enumerate_tableaux(m, lam)))
    k = data.draw(st.integers(0, m))
    r = t.restrict(k)
    assert r.shape == t.shapes[k]
    assert UpDownTableau.from_json(t.to_json()) == t


@given(st.integers(0, 6), st.data())
@settings(max_examples=40, deadline=None)
def test_matching_partitions_the_steps(m, data):
    shapes = list(enumerate_all(m, 1))
    t = data.draw(st.sampled_from(enumerate_tableaux(m, data.draw(st.sampled_from(shapes)))))
    pairs = match_removals(t)
    used = [x for p in pairs for x in p] + surviving_steps(t)
    assert sorted(used) == list(range(1, m + 1))
    assert len(surviving_steps(t)) == sum(map(sum, t.shape))
    for l, r in pairs:
        assert t.steps[l - 1].box == t.steps[r - 1].box and l < r
