"""Acceptance matrix: sixteen exact property checks over Q(q).

Run under pytest, or directly with ``python3 tests/test_acceptance.py``.  Each
criterion prints one line ``[PASS]`` or ``[FAIL]`` with its check count.
"""

import math
import sys
import time

import pytest

from qelectric import checks
from qelectric.tableaux import sum_of_squares


def _closed_form_dims():
    # independent oracle: (2m-1)!! from the closed product, level 2 scaled by 2^m
    rep = checks.Report("tableaux_dims", statement="sum of squares of tableau counts against (2m-1)!! "
                        "and 2^m (2m-1)!!")
    frozen = [1, 1, 3, 15, 105, 945, 10395]
    for m in range(7):
        closed = math.prod(range(1, 2 * m, 2))
        rep.record(closed == frozen[m] and sum_of_squares(m, 1) == closed, (1, m))
    for m in range(5):
        rep.record(sum_of_squares(m, 2) == 2 ** m * math.prod(range(1, 2 * m, 2)), (2, m))
    return rep


CRITERIA = [
    (1, "Hecke relations, windows [-4,4], d = 2, 3, all flavour patterns", lambda: checks.check_hecke(4)),
    (2, "H_k commutes with E_i, F_i (i in [-3,3]) and K_lam", lambda: checks.check_hecke_commute(4)),
    (3, "defining relations of the quantum group on d <= 3, window 4", lambda: checks.check_uqg(4)),
    (4, "coideal relations on d <= 3, window 4, eps = +-1", lambda: checks.check_coideal(4)),
    (5, "Fock relations on v_lam, |lam| <= 6 (distant: <= 5)", lambda: checks.check_fock_relations(6, 5)),
    (6, "support and monomiality of the Fock action, |lam| <= 6", lambda: checks.check_fock_support(6)),
    (7, "truncation stability at depths |lam|+4 and |lam|+6", lambda: checks.check_fock_stability(6)),
    (8, "standard-module shifts equal Fock exponents, |lam| <= 5", lambda: checks.check_cross(5)),
    (9, "tableaux dimension identities", _closed_form_dims),
    (10, "K0 identities via graded Hom dimensions, length <= 5", lambda: checks.check_k0(5)),
    (11, "bar involution on the Fock space, |lam| <= 4", lambda: checks.check_bar(4)),
    (12, "tau(v_lam) is a monomial multiple of v^(lam^t), |lam| <= 5", lambda: checks.check_tau(5)),
    (13, "pairing adjointness, 200 seeded words", lambda: checks.check_adjoint(200, seed=7)),
    (14, "degree independent of pulling order, 500 seeded cases", lambda: checks.check_degree(500, seed=11)),
    (15, "<beta_i, alpha_j^vee> = b_ji and shift invariance, [-5,5]", lambda: checks.check_beta_b(5)),
    (16, "level-2 generic Fock space relations and componentwise action", lambda: checks.check_higher_level(3)),
]


def run_criterion(number, label, fn, stream=None):
    stream = stream or sys.stdout
    start = time.perf_counter()
    rep = fn()
    status = "PASS" if rep.passed else "FAIL"
    stream.write(f"[{status}] criterion {number:2d}: {label} ({rep.checks} checks, "
                 f"{time.perf_counter() - start:.1f}s)\n")
    stream.flush()
    return rep


@pytest.mark.parametrize("number,label,fn", CRITERIA, ids=[f"criterion_{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, label, fn, capsys):
    with capsys.disabled():
        sys.stdout.write("\n")
        rep = run_criterion(number, label, fn)
    assert rep.checks > 0
    assert rep.passed, rep.failures[:5]


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    sys.exit(0 if all(r.passed for r in results) else 1)
