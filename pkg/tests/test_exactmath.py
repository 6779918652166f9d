import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st

from gogroups.exactmath import (
    IMat, LatticeTransversal, SingularMatrixError, diag, identity,
    qmat, qmat_inverse, qmat_mul, snf, solve_integral, solve_rational,
)


def square(n, lo=-9, hi=9):
    return st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                    min_size=n, max_size=n).map(lambda r: IMat(tuple(map(tuple, r))))


nonsingular = st.integers(1, 4).flatmap(square).filter(lambda a: a.det() != 0)


def test_det_small():
    assert identity(3).det() == 1
    assert diag(2, 3).det() == 6
    assert IMat(((2, 4), (6, 8))).det() == -8
    assert IMat(((1, 2), (2, 4))).det() == 0


def test_snf_identity():
    res = snf(identity(2))
    assert res.D == identity(2)
    assert res.U * res.D * res.V == identity(2)


def test_snf_diag_2_3():
    # elementary row/column reduction gives invariant factors 1, 6
    res = snf(diag(2, 3))
    assert res.diagonal == (1, 6)
    assert res.U * res.D * res.V == diag(2, 3)


def test_snf_known_matrix():
    # d1 = gcd of entries = 2, d1*d2 = |det| = 8
    a = IMat(((2, 4), (6, 8)))
    res = snf(a)
    assert res.diagonal == (2, 4)
    assert res.U * res.D * res.V == a


@settings(max_examples=300, deadline=None)
@given(nonsingular)
def test_snf_properties(a):
    res = snf(a)
    assert res.U * res.D * res.V == a
    assert abs(res.U.det()) == 1
    assert abs(res.V.det()) == 1
    d = res.diagonal
    assert all(x >= 0 for x in d)
    for x, y in zip(d, d[1:]):
        assert x == 0 or y % x == 0
    prod = 1
    for x in d:
        prod *= x
    assert prod == abs(a.det())


def test_solve_integral():
    assert solve_integral(IMat(((2,),)), (4,)) == (2,)
    assert solve_integral(IMat(((2,),)), (3,)) is None
    assert solve_integral(diag(2, 3), (2, 4)) is None
    assert solve_integral(diag(2, 3), (4, 9)) == (2, 3)
    with pytest.raises(SingularMatrixError):
        solve_rational(IMat(((1, 2), (2, 4))), (1, 1))


@settings(max_examples=150, deadline=None)
@given(nonsingular, st.data())
def test_solve_round_trip(a, data):
    x = tuple(data.draw(st.integers(-5, 5)) for _ in range(a.nrows))
    assert solve_integral(a, a.apply(x)) == x


def test_transversal_diag():
    t = LatticeTransversal(diag(2, 3))
    reps = list(t.reps())
    assert len(reps) == 6 == t.index
    assert reps[0] == (0, 0)
    assert sorted(reps) == [(i, j) for i in range(2) for j in range(3)]


def test_transversal_identity():
    t = LatticeTransversal(identity(2))
    assert list(t.reps()) == [(0, 0)]


def test_transversal_decompose_example():
    t = LatticeTransversal(diag(2, 3))
    sigma, h = t.decompose((5, 4))
    assert sigma == (1, 1) and h == (2, 1)
    assert t.decompose((0, 0)) == ((0, 0), (0, 0))


@settings(max_examples=150, deadline=None)
@given(nonsingular, st.data())
def test_transversal_bijection(a, data):
    t = LatticeTransversal(a)
    reps = set(t.reps())
    assert len(reps) == t.index
    g = tuple(data.draw(st.integers(-20, 20)) for _ in range(a.nrows))
    sigma, h = t.decompose(g)
    assert sigma in reps
    assert tuple(s + x for s, x in zip(sigma, a.apply(h))) == g
    # representative of a representative is itself
    s2, h2 = t.decompose(sigma)
    assert s2 == sigma and all(x == 0 for x in h2)


def test_qmat_inverse():
    m = qmat([[3, -4], [4, 3]])
    inv = qmat_inverse(m)
    assert qmat_mul(m, inv) == qmat([[1, 0], [0, 1]])
    assert inv[0][0] == Fraction(3, 25)
