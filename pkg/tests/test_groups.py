import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gogroups.exactmath import IMat, diag
from gogroups.groups import (
    Cyclic, CyclicSemiZ2, FreeAbelian, FreeGroup, GroupError, ImagesMono,
    MatrixMono, ScalarMono, apply_mono, elem_from_str, elem_to_str, elements,
    generators, group_op, identity_elem, inv, mono_decompose, mono_from_images,
    mul, transversal, validate_mono,
)

DESCS = [FreeAbelian(2), Cyclic(6), CyclicSemiZ2(6), FreeGroup(2)]


def elem_strategy(desc):
    if isinstance(desc, FreeAbelian):
        return st.tuples(*([st.integers(-9, 9)] * desc.rank))
    if isinstance(desc, Cyclic):
        return st.integers(0, desc.order - 1)
    if isinstance(desc, CyclicSemiZ2):
        return st.tuples(st.integers(0, desc.order - 1), st.integers(0, 1))
    pool = list(itertools.islice(elements(desc), 60))
    return st.sampled_from(pool)


@pytest.mark.parametrize("desc", DESCS)
@settings(max_examples=120, deadline=None)
@given(data=st.data())
def test_group_axioms(desc, data):
    a = data.draw(elem_strategy(desc))
    b = data.draw(elem_strategy(desc))
    c = data.draw(elem_strategy(desc))
    e = identity_elem(desc)
    assert mul(desc, mul(desc, a, b), c) == mul(desc, a, mul(desc, b, c))
    assert mul(desc, a, e) == a == mul(desc, e, a)
    assert mul(desc, a, inv(desc, a)) == e == mul(desc, inv(desc, a), a)


def test_group_op_examples():
    assert group_op(FreeAbelian(2), (1, 2), (3, -2)) == (4, 0)
    # (a,e)(b,d) law derived from i g i = g^-1
    assert group_op(CyclicSemiZ2(6), (1, 1), (1, 0)) == (0, 1)
    f = FreeGroup(2)
    ab = elem_from_str(f, "a.b")
    ba = elem_from_str(f, "b^-1.a")
    assert group_op(f, ab, ba) == elem_from_str(f, "a^2")


def test_elem_literals_round_trip():
    cases = [
        (FreeAbelian(2), (1, -2), "(1,-2)"),
        (Cyclic(7), 3, "3"),
        (CyclicSemiZ2(6), (3, 1), "(3,1)"),
        (FreeGroup(2), (1, 2, 2, -1), "a.b^2.a^-1"),
        (FreeGroup(2), (), "1"),
    ]
    for desc, elem, text in cases:
        assert elem_to_str(desc, elem) == text
        assert elem_from_str(desc, text) == elem


def test_apply_mono_examples():
    assert apply_mono(ScalarMono(3), (2,)) == (6,)
    m = MatrixMono(IMat(((3, -4), (4, 3))))
    assert apply_mono(m, (1, 0)) == (3, 4)
    gi = ImagesMono(Cyclic(2), CyclicSemiZ2(4), ((2, 0),))
    validate_mono(gi)
    assert apply_mono(gi, 1) == (2, 0)


@settings(max_examples=100, deadline=None)
@given(st.tuples(st.integers(-6, 6), st.integers(-6, 6)),
       st.tuples(st.integers(-6, 6), st.integers(-6, 6)))
def test_mono_homomorphism(a, b):
    m = MatrixMono(IMat(((3, -4), (4, 3))))
    d = FreeAbelian(2)
    assert apply_mono(m, mul(d, a, b)) == mul(d, apply_mono(m, a), apply_mono(m, b))


def test_mono_injectivity_validation():
    with pytest.raises(GroupError):
        validate_mono(ScalarMono(0))
    with pytest.raises(GroupError):
        validate_mono(MatrixMono(IMat(((1, 2), (2, 4)))))
    with pytest.raises(GroupError):
        validate_mono(ImagesMono(Cyclic(4), Cyclic(4), (2,)))  # 2 has order 2
    with pytest.raises(GroupError):
        # relation y x y^-1 = x^-1 fails for x image of full order in plain product
        validate_mono(ImagesMono(CyclicSemiZ2(3), Cyclic(12), (4, 6)))


def test_scalar_transversal_example():
    t = transversal(ScalarMono(3))
    sigma, h = mono_decompose(t, (4,))
    assert sigma == (1,) and h == (1,)
    assert list(t.reps()) == [(0,), (1,), (2,)]
    assert t.is_member((6,)) and not t.is_member((4,))


def test_matrix_transversal_zero():
    t = transversal(MatrixMono(diag(2, 3)))
    assert mono_decompose(t, (0, 0)) == ((0, 0), (0, 0))
    assert t.index == 6


def test_free_suffix_transversal():
    f = FreeGroup(2)
    mono = ImagesMono(FreeAbelian(1), f, ((1,),))  # generator -> a
    t = transversal(mono)
    g = elem_from_str(f, "b.a^2")
    sigma, h = mono_decompose(t, g)
    assert sigma == elem_from_str(f, "b") and h == (2,)
    assert t.is_member(elem_from_str(f, "a^-3"))
    assert not t.is_member(elem_from_str(f, "b"))
    for rep in itertools.islice(t.reps(), 50):
        assert not rep or abs(rep[-1]) != 1


def test_line_in_plane_transversal():
    mono = ImagesMono(FreeAbelian(1), FreeAbelian(2), ((2, 2),))
    t = transversal(mono)
    sigma, h = mono_decompose(t, (4, 4))
    assert sigma == (0, 0) and h == (2,)
    sigma, h = mono_decompose(t, (5, 4))
    assert mul(FreeAbelian(2), sigma, apply_mono(mono, h)) == (5, 4)
    assert not t.is_member((5, 4))


def test_finite_transversal_cosets():
    # index [Z_6 x| Z_2-of-size-12 : image of size 4] = 3
    mono = ImagesMono(CyclicSemiZ2(2), CyclicSemiZ2(6), ((3, 0), (0, 1)))
    t = transversal(mono)
    reps = list(t.reps())
    assert len(reps) == t.index == 3
    assert reps[0] == (0, 0)
    cod = CyclicSemiZ2(6)
    seen = set()
    for g in elements(cod):
        sigma, h = mono_decompose(t, g)
        assert sigma in reps
        assert mul(cod, sigma, apply_mono(mono, h)) == g
        seen.add(g)
    assert len(seen) == 12


@pytest.mark.parametrize("mono", [
    ScalarMono(3),
    MatrixMono(diag(2, 3)),
    ImagesMono(FreeAbelian(1), FreeAbelian(2), ((2, 3),)),
])
@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_decompose_round_trip(mono, data):
    t = transversal(mono)
    cod = t.codomain
    g = data.draw(elem_strategy(cod))
    sigma, h = mono_decompose(t, g)
    assert mul(cod, sigma, apply_mono(mono, h)) == g
    assert t.is_member(g) == (sigma == identity_elem(cod))


def test_mono_from_images_picks_scalar():
    m = mono_from_images(FreeAbelian(1), FreeAbelian(1), ((5,),))
    assert isinstance(m, ScalarMono) and m.factor == 5


def test_generators():
    assert generators(FreeAbelian(2)) == [(1, 0), (0, 1)]
    assert generators(CyclicSemiZ2(4)) == [(1, 0), (0, 1)]
    assert generators(FreeGroup(2)) == [(1,), (2,)]
