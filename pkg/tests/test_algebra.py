import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import mult, perm_violations, table
from permbialg.algebra import (PermAlgebra, PermCoalgebra, ad, coproduct_from_dual_algebra,
                               direct_sum, dual_algebra_from_coproduct, is_homomorphism, left_mult,
                               multiply, perm_axiom_defects, right_mult, zero_algebra)
from permbialg.bialgebra import coalgebra_defects
from permbialg.catalog import broken2, entries, lperm2, nilp2
from permbialg.errors import DimensionMismatch
from permbialg.linalg import identity, qarray, zeros
from strategies import vectors

ALGEBRAS = [e.payload for e in entries("algebra") if "perm" in e.properties]


def e(n, i):
    return identity(n)[i]


def test_multiply_examples():
    z = zero_algebra(2)
    assert (multiply(z, qarray([1, 2]), qarray([3, 4])) == 0).all()
    assert (multiply(lperm2(), e(2, 0), e(2, 1)) == e(2, 1)).all()
    assert (multiply(nilp2(), e(2, 0), e(2, 0)) == e(2, 1)).all()


def test_lperm2_table():
    A = lperm2()
    got = {(i, j): tuple(multiply(A, e(2, i), e(2, j))) for i in range(2) for j in range(2)}
    assert got == {(0, 0): (1, 0), (0, 1): (0, 1), (1, 0): (0, 0), (1, 1): (0, 0)}


def test_perm_axioms_examples():
    for n in range(5):
        assert perm_axiom_defects(zero_algebra(n)) == []
    assert perm_axiom_defects(lperm2()) == []
    bad = perm_axiom_defects(broken2())
    # 0-based (1, 2, 2): (e1 e2) e2 = e1 but (e2 e1) e2 = 0
    assert (0, 1, 1) in [d[:3] for d in bad]
    at = next(d for d in bad if d[:3] == (0, 1, 1))
    assert tuple(at[4]) == (1, 0)


@pytest.mark.parametrize("A", ALGEBRAS + [broken2()])
def test_perm_defects_match_oracle(A):
    assert [d[:3] for d in perm_axiom_defects(A)] == perm_violations(table(A.c))


def test_operator_examples():
    for n in (1, 3):
        z = zero_algebra(n)
        for op in (left_mult, right_mult, ad):
            assert (op(z, e(n, 0)) == 0).all()
    A = lperm2()
    assert (left_mult(A, e(2, 0)) == identity(2)).all()
    assert (right_mult(A, e(2, 0)) == qarray([[1, 0], [0, 0]])).all()
    assert (ad(A, e(2, 0)) == qarray([[0, 0], [0, 1]])).all()
    for op in (left_mult, right_mult, ad):
        assert (op(A, zeros(2)) == 0).all()


@pytest.mark.parametrize("A", ALGEBRAS)
def test_operator_columns_match_oracle(A):
    n, c = A.dim, table(A.c)
    for i in range(n):
        x = [int(k == i) for k in range(n)]
        for j in range(n):
            y = [int(k == j) for k in range(n)]
            assert table(left_mult(A, e(n, i))[:, j]) == mult(c, x, y)
            assert table(right_mult(A, e(n, i))[:, j]) == mult(c, y, x)


@pytest.mark.parametrize("A", ALGEBRAS)
def test_left_mult_restates_axioms(A):
    n = A.dim
    for i in range(n):
        for j in range(n):
            Li, Lj = left_mult(A, e(n, i)), left_mult(A, e(n, j))
            Lij = left_mult(A, multiply(A, e(n, i), e(n, j)))
            assert (Lij == Li.dot(Lj)).all() and (Li.dot(Lj) == Lj.dot(Li)).all()


def test_homomorphism_examples():
    A = lperm2()
    assert is_homomorphism(A, A, identity(2)) == []
    assert is_homomorphism(A, A, zeros(2, 2)) == []
    swap = qarray([[0, 1], [1, 0]])
    assert (0, 0) in [d[:2] for d in is_homomorphism(A, A, swap)]
    with pytest.raises(DimensionMismatch):
        is_homomorphism(A, A, identity(3))


def test_direct_sum_examples():
    assert direct_sum(zero_algebra(1), zero_algebra(1)) == zero_algebra(2)
    S = direct_sum(lperm2(), lperm2())
    assert S.dim == 4 and perm_axiom_defects(S) == []
    assert direct_sum(lperm2(), zero_algebra(0)) == lperm2()


@given(st.sampled_from(ALGEBRAS), st.sampled_from(ALGEBRAS))
def test_direct_sum_preserves_perm(A, B):
    assert perm_axiom_defects(direct_sum(A, B)) == []


def test_dual_algebra_examples():
    zero = PermCoalgebra(zeros(2, 2, 2))
    assert dual_algebra_from_coproduct(zero) == zero_algebra(2)
    d = zeros(2, 2, 2)
    d[0, 0, 0] = 1
    C = PermCoalgebra(d)
    D = dual_algebra_from_coproduct(C)
    assert (multiply(D, e(2, 0), e(2, 0)) == e(2, 0)).all()
    assert all((multiply(D, e(2, i), e(2, j)) == 0).all() for i, j in [(0, 1), (1, 0), (1, 1)])
    assert coproduct_from_dual_algebra(D) == C
    assert D.labels == ("e1*", "e2*")


def _coalgebras():
    out = [PermCoalgebra(np.array(A.c.transpose(2, 0, 1))) for A in ALGEBRAS]
    d = zeros(2, 2, 2)
    d[0, 0, 1] = 1
    out.append(PermCoalgebra(d))                      # Delta(e1) = e1 (x) e2, not perm
    out.append(PermCoalgebra(np.array(broken2().c.transpose(2, 0, 1))))
    return out


@pytest.mark.parametrize("C", _coalgebras())
def test_dual_is_perm_iff_coalgebra(C):
    assert (perm_axiom_defects(dual_algebra_from_coproduct(C)) == []) == (coalgebra_defects(C) == [])


def test_construction_errors():
    with pytest.raises(DimensionMismatch):
        PermAlgebra(zeros(2, 2, 3))
    with pytest.raises(ValueError):
        PermAlgebra(zeros(2, 2, 2), ("a", "a"))
    with pytest.raises(TypeError):
        PermAlgebra(np.zeros((1, 1, 1)))


@given(st.sampled_from(ALGEBRAS).flatmap(lambda A: st.tuples(st.just(A), vectors(A.dim), vectors(A.dim))))
def test_multiply_matches_oracle(args):
    A, x, y = args
    assert table(multiply(A, x, y)) == mult(table(A.c), table(x), table(y))
