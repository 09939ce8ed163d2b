from hypothesis import given
from hypothesis import strategies as st

from qelectric.charges import ChargeVector
from qelectric.partitions import (
    Box,
    Step,
    addable,
    addable_boxes,
    boxes,
    canonical_residues,
    canonical_steps,
    content,
    dual_residue,
    enumerate_multipartitions,
    partitions_of,
    removable,
    removable_boxes,
    residue,
    transpose,
)

cv1 = ChargeVector.symbolic(1)
d = cv1[1]


def test_contents():
    assert content(Box(1, 1, 1), cv1) == d
    assert content(Box(2, 1, 1), cv1) == d.plus(-1)
    assert content(Box(1, 3, 1), cv1) == d.plus(2)


def test_residues_of_steps():
    assert residue(Step(1, Box(1, 1)), cv1) == d
    assert residue(Step(-1, Box(1, 1)), cv1) == d.plus(1)
    assert residue(Step(-1, Box(2, 1)), cv1) == d
    assert dual_residue(Step(1, Box(1, 2)), cv1) == d.plus(1)
    assert dual_residue(Step(-1, Box(1, 1)), cv1) == d.plus(-1)
    assert dual_residue(Step(-1, Box(1, 2)), cv1) == d


def test_addable_and_removable():
    assert addable(((),), d, cv1) == [Box(1, 1, 1)]
    assert addable(((2,),), d.plus(-1), cv1) == [Box(2, 1, 1)]
    assert removable(((2, 2),), d, cv1) == [Box(2, 2, 1)]


def test_canonical_filling():
    steps = canonical_steps(((3, 2), (2, 2)))
    assert [s.box.comp for s in steps] == [2] * 4 + [1] * 5
    assert [(s.box.row, s.box.col) for s in steps[:4]] == [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert canonical_steps(((),)) == []
    assert canonical_residues(((2,),), cv1) == [d, d.plus(1)]


def test_enumeration_examples():
    assert partitions_of(2) == ((2,), (1, 1))
    assert enumerate_multipartitions(1, 2) == [((1,), ()), ((), (1,))]
    assert transpose((3, 1)) == (2, 1, 1)


def _partition_count(n):
    # Euler's pentagonal recurrence as an independent oracle
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def test_partition_counts():
    for n in range(12):
        assert len(partitions_of(n)) == _partition_count(n)


partitions = st.integers(0, 9).flatmap(lambda n: st.sampled_from(partitions_of(n)))


@given(partitions)
def test_transpose_involution_and_size(lam):
    assert transpose(transpose(lam)) == lam
    assert sum(transpose(lam)) == sum(lam)


@given(partitions)
def test_addable_minus_removable(lam):
    # a partition always has one more addable box than removable boxes
    assert len(addable_boxes((lam,))) == len(removable_boxes((lam,))) + 1
    assert len(boxes((lam,))) == sum(lam)


@given(partitions)
def test_content_multiset_of_transpose(lam):
    cs = sorted(b.col - b.row for b in boxes((lam,)))
    ct = sorted(b.row - b.col for b in boxes((transpose(lam),)))
    assert cs == ct
