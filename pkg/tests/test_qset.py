"""qset 模块测试"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sumsetkit.models import ParseError
from sumsetkit.natset import NatSet, kfold
from sumsetkit.qset import Q_ZERO, QSet, q_kfold, q_make, q_sumset


def ns(*elements: int) -> NatSet:
    return NatSet(elements)


def rationals():
    return st.builds(Fraction, st.integers(0, 12), st.integers(1, 6))


def qsets():
    return st.lists(rationals(), max_size=5).map(q_make)


class TestMake:
    def test_common_denominator(self):
        x = q_make([0, Fraction(1, 2), Fraction(1, 3)])
        assert (x.den, x.num) == (6, ns(0, 2, 3))

    def test_integers(self):
        x = q_make([0, 2, 3])
        assert (x.den, x.num) == (1, ns(0, 2, 3))

    def test_reduces_fractions(self):
        x = q_make([0, Fraction(2, 4)])
        assert (x.den, x.num) == (2, ns(0, 1))

    def test_reduces_common_factor(self):
        x = q_make([0, Fraction(2, 3), Fraction(4, 3)])
        assert (x.den, x.num) == (3, ns(0, 2, 4))

    def test_inserts_zero_unless_strict(self):
        assert q_make([1]) == q_make([0, 1])
        with pytest.raises(ValueError):
            q_make([1], strict=True)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            q_make([0, Fraction(-1, 2)])

    def test_zero_has_unit_denominator(self):
        assert q_make([0]) == Q_ZERO
        assert Q_ZERO.den == 1

    def test_unreduced_form_rejected(self):
        with pytest.raises(ValueError):
            QSet(2, ns(0, 2))
        with pytest.raises(ValueError):
            QSet(3, ns(0))

    def test_parse_and_print(self):
        x = QSet.parse("0,1/2,2/3")
        assert str(x) == "0,1/2,2/3"
        assert x.elements == (0, Fraction(1, 2), Fraction(2, 3))
        assert x.max == Fraction(2, 3)

    @pytest.mark.parametrize("literal, position", [("0,1/0", 1), ("0,a", 1), ("0,0.5", 1)])
    def test_parse_errors(self, literal, position):
        with pytest.raises(ParseError) as info:
            QSet.parse(literal)
        assert info.value.position == position

    def test_membership(self):
        x = QSet.parse("0,1/2,3")
        assert Fraction(1, 2) in x and 3 in x and 1 not in x


class TestArithmetic:
    def test_identity(self):
        x = QSet.parse("0,1/3,5/2")
        assert q_sumset(Q_ZERO, x) == x

    def test_mixed_denominators(self):
        x = q_sumset(QSet(2, ns(0, 1)), QSet(3, ns(0, 1)))
        assert (x.den, x.num) == (6, ns(0, 2, 3, 5))

    def test_renormalizes(self):
        x = QSet(2, ns(0, 1)) + QSet(2, ns(0, 1))
        assert (x.den, x.num) == (2, ns(0, 1, 2))

    def test_kfold_examples(self):
        assert q_kfold(QSet.parse("0,1/2"), 0) == Q_ZERO
        three = q_kfold(QSet(2, ns(0, 1)), 3)
        assert (three.den, three.num) == (2, ns(0, 1, 2, 3))
        two = q_kfold(QSet(6, ns(0, 2, 3)), 2)
        assert (two.den, two.num) == (6, ns(0, 2, 3, 4, 5, 6))

    @settings(deadline=None)
    @given(qsets(), st.integers(0, 12))
    def test_dilation_commutes_with_kfold(self, x, k):
        assert q_kfold(x, k) == QSet.of(x.den, kfold(x.num, k))

    @given(qsets(), qsets())
    def test_max_is_additive(self, x, y):
        assert q_sumset(x, y).max == x.max + y.max

    @given(qsets())
    def test_normalization_idempotent(self, x):
        assert q_make(x.elements) == x
        assert QSet.of(x.den, x.num) == x

    def test_scaled(self):
        x = QSet.parse("0,2,3").scaled(Fraction(1, 2))
        assert str(x) == "0,1,3/2"
