import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tckit.errors import FieldMismatchError, ScalarDivisionByZero
from tckit.scalars import QQ, FieldSpec, conjugate, cyclotomic, cyclotomic_reduce, invert, nth_roots, prime_field


def cyc_elements(n):
    fracs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.lists(fracs, min_size=n, max_size=n).map(lambda cs: cyclotomic_reduce(cs, n))


FIELDS = st.sampled_from([3, 4, 5, 8, 12])


@st.composite
def same_field_triples(draw):
    n = draw(FIELDS)
    e = cyc_elements(n)
    return draw(e), draw(e), draw(e)


# field specs -----------------------------------------------------------------


def test_fieldspec_parse_and_str():
    assert FieldSpec.parse("rational") == QQ
    assert FieldSpec.parse("cyclotomic:5") == cyclotomic(5)
    assert FieldSpec.parse("prime:7") == prime_field(7)
    assert str(cyclotomic(8)) == "cyclotomic:8"


def test_fieldspec_rejects_bad_parameters():
    with pytest.raises(ValueError):
        prime_field(6)
    with pytest.raises(ValueError):
        cyclotomic(0)
    with pytest.raises(ValueError):
        FieldSpec.parse("real")


def test_characteristic():
    assert QQ.characteristic == 0
    assert cyclotomic(5).characteristic == 0
    assert prime_field(5).characteristic == 5


# cyclotomic_reduce -------------------------------------------------------------


def test_zeta4_squared_is_minus_one():
    assert cyclotomic_reduce([0, 0, 1], 4) == cyclotomic(4)(-1)


def test_zeta3_cubed_is_one():
    assert cyclotomic_reduce([0, 0, 0, 1], 3) == cyclotomic(3)(1)


def test_sum_of_fifth_roots_is_zero():
    assert cyclotomic_reduce([1, 1, 1, 1, 1], 5).is_zero()


def test_canonical_length_is_totient():
    assert len(cyclotomic(12).one().coefficients()) == 4
    assert len(cyclotomic(5).zeta().coefficients()) == 4


def test_reduction_folds_high_powers():
    K = cyclotomic(5)
    assert cyclotomic_reduce([0] * 7 + [1], 5) == K.zeta(7)
    assert K.zeta(7) == K.zeta(2)


# invert ----------------------------------------------------------------------


def test_invert_rational():
    assert invert(QQ(2)) == QQ(Fraction(1, 2))


def test_invert_zeta8():
    K = cyclotomic(8)
    assert invert(K.zeta()) == K.zeta(7)


def test_invert_prime():
    assert invert(prime_field(5)(2)) == prime_field(5)(3)


def test_invert_zero_raises():
    for fld in (QQ, cyclotomic(5), prime_field(3)):
        with pytest.raises(ScalarDivisionByZero):
            invert(fld.zero())
    with pytest.raises(ZeroDivisionError):
        QQ(1) / QQ(0)


@given(cyc_elements(5))
def test_invert_is_multiplicative_inverse(x):
    if not x.is_zero():
        assert x * invert(x) == x.field.one()
        assert invert(invert(x)) == x


@given(FIELDS.flatmap(cyc_elements))
def test_invert_involution_many_orders(x):
    if not x.is_zero():
        assert invert(invert(x)) == x


# conjugate -------------------------------------------------------------------


def test_conjugate_zeta5():
    K = cyclotomic(5)
    assert conjugate(K.zeta()) == K.zeta(4)


def test_conjugate_rational_is_identity():
    assert conjugate(QQ(Fraction(7, 3))) == QQ(Fraction(7, 3))


def test_conjugate_involution_50_random():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.choice([3, 5, 7, 8, 12])
        x = cyclotomic_reduce([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)], n)
        assert conjugate(conjugate(x)) == x


@given(same_field_triples())
def test_conjugate_is_ring_homomorphism(t):
    a, b, _ = t
    assert conjugate(a + b) == conjugate(a) + conjugate(b)
    assert conjugate(a * b) == conjugate(a) * conjugate(b)


# field axioms ------------------------------------------------------------------


@given(same_field_triples())
def test_cyclotomic_ring_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == a.field.zero()


@given(st.integers(min_value=0, max_value=3), st.lists(st.integers(-50, 50), min_size=3, max_size=3))
def test_prime_field_axioms(pi, vals):
    F = prime_field([2, 3, 5, 7][pi])
    a, b, c = (F(v) for v in vals)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if not a.is_zero():
        assert invert(invert(a)) == a


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_p_copies_of_one_vanish(p):
    F = prime_field(p)
    total = F.zero()
    for _ in range(p):
        total = total + F.one()
    assert total.is_zero()


def test_equality_is_canonical_form_equality():
    K = cyclotomic(5)
    x = K(3) + K.zeta() + K.zeta(4)
    y = cyclotomic_reduce([2, 0, -1, -1], 5)
    assert x == y and x.value == y.value and hash(x) == hash(y)


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        cyclotomic(5).one() + cyclotomic(8).one()


# roots -------------------------------------------------------------------------


def test_nth_roots_rational():
    assert nth_roots(QQ(4), 2) == [QQ(-2), QQ(2)]
    assert nth_roots(QQ(2), 2) == []


def test_nth_roots_cyclotomic_cube_roots_of_one():
    K = cyclotomic(3)
    roots = nth_roots(K.one(), 3)
    assert len(roots) == 3
    assert set(roots) == {K.one(), K.zeta(), K.zeta(2)}


def test_nth_roots_prime():
    F = prime_field(7)
    assert sorted(r.value for r in nth_roots(F(2), 2)) == [3, 4]


def test_display():
    K = cyclotomic(5)
    assert str(K.one() + K.zeta() + K.zeta(3)) == "1 + z5 + z5^3"
    assert str(K.one() + K.zeta() + K.zeta(4)) == "-z5^2 - z5^3"
    assert abs((K(3) + K.zeta() + K.zeta(4)).to_complex() - 3.6180339887) < 1e-9
