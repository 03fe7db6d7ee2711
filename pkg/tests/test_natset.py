"""natset 模块测试"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sumsetkit.models import ParseError
from sumsetkit.natset import (
    Backend,
    Interval,
    NatSet,
    divide_exact,
    gcd_of,
    kfold,
    kfold_naive,
    reflect,
    scale,
    sumset,
)


def natsets(max_value: int = 30, max_size: int = 8):
    return st.sets(st.integers(1, max_value), max_size=max_size).map(
        lambda s: NatSet({0, *s})
    )


def ns(*elements: int) -> NatSet:
    return NatSet(elements)


class TestConstruction:
    def test_requires_zero(self):
        with pytest.raises(ValueError):
            ns(1, 2)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            ns(0, -1)

    def test_unsorted_duplicates_collapse(self):
        assert ns(3, 0, 3, 2).elements == (0, 2, 3)

    def test_from_bits(self):
        assert NatSet.from_bits(0b1101) == ns(0, 2, 3)
        with pytest.raises(ValueError):
            NatSet.from_bits(0b110)

    def test_parse_and_print(self):
        x = NatSet.parse("0,2,3")
        assert x == ns(0, 2, 3)
        assert str(x) == "0,2,3"

    @pytest.mark.parametrize(
        "literal, position",
        [("0,x,3", 1), ("0,3,2", 2), ("1,2", 0), ("", 0), ("0,-1", 1)],
    )
    def test_parse_errors_report_position(self, literal, position):
        with pytest.raises(ParseError) as info:
            NatSet.parse(literal)
        assert info.value.position == position

    def test_queries(self):
        x = ns(0, 3, 5)
        assert 3 in x and 4 not in x and -1 not in x
        assert len(x) == 3
        assert x.max == 5
        assert x.nonzero == (3, 5)
        assert ns(0).is_zero


class TestSumset:
    def test_identity(self):
        x = ns(0, 4, 7)
        assert sumset(ns(0), x) == x

    def test_pairwise(self):
        assert sumset(ns(0, 1), ns(0, 1)) == ns(0, 1, 2)
        assert sumset(ns(0, 2, 3), ns(0, 2, 3)) == ns(0, 2, 3, 4, 5, 6)

    def test_operator(self):
        assert ns(0, 1) + ns(0, 3) == ns(0, 1, 3, 4)

    @given(natsets(), natsets())
    def test_commutative(self, x, y):
        assert sumset(x, y) == sumset(y, x)

    @given(natsets(15, 5), natsets(15, 5), natsets(15, 5))
    def test_associative(self, x, y, z):
        assert sumset(sumset(x, y), z) == sumset(x, sumset(y, z))

    @given(natsets(), natsets())
    def test_backends_agree(self, x, y):
        assert sumset(x, y, Backend.SORTED) == sumset(x, y, Backend.BITSET)

    @given(natsets(), natsets())
    def test_extremes(self, x, y):
        total = sumset(x, y)
        assert total.max == x.max + y.max
        assert 0 in total
        if not x.is_zero or not y.is_zero:
            minima = [s.nonzero[0] for s in (x, y) if not s.is_zero]
            assert total.nonzero[0] == min(minima)


class TestKfold:
    @pytest.mark.parametrize("k", [0, 1, 2, 7, 64])
    def test_zero_one(self, k):
        assert kfold(ns(0, 1), k) == NatSet(range(k + 1))

    def test_zero_fold(self):
        assert kfold(ns(0, 5, 9), 0) == ns(0)

    def test_three_fold(self):
        assert kfold(ns(0, 2, 3), 3) == NatSet([0, *range(2, 10)])

    def test_negative_k(self):
        with pytest.raises(ValueError):
            kfold(ns(0, 1), -1)

    @settings(max_examples=40, deadline=None)
    @given(natsets(30, 5), st.integers(0, 40))
    def test_doubling_matches_naive(self, x, k):
        assert kfold(x, k) == kfold_naive(x, k)
        assert kfold(x, k, Backend.SORTED) == kfold_naive(x, k)

    @settings(deadline=None)
    @given(natsets(20, 5), st.integers(0, 20))
    def test_monotone(self, x, k):
        small, large = kfold(x, k), kfold(x, k + 1)
        assert set(small) <= set(large)


class TestReflectGcd:
    def test_examples(self):
        assert reflect(ns(0)) == ns(0)
        assert reflect(ns(0, 3, 5)) == ns(0, 2, 5)
        assert reflect(ns(0, 1)) == ns(0, 1)

    @given(natsets())
    def test_involution(self, x):
        assert reflect(reflect(x)) == x

    @given(natsets())
    def test_reflection_keeps_gcd_one(self, x):
        if gcd_of(x) == 1:
            assert gcd_of(reflect(x)) == 1

    def test_gcd(self):
        assert gcd_of(ns(0)) == 0
        assert gcd_of(ns(0, 2, 4)) == 2
        assert gcd_of(ns(0, 6, 10, 15)) == 1

    def test_divide_exact(self):
        assert divide_exact(ns(0, 2, 4), 2) == ns(0, 1, 2)
        assert divide_exact(ns(0, 6, 9), 3) == ns(0, 2, 3)
        with pytest.raises(ValueError):
            divide_exact(ns(0, 2, 3), 2)

    def test_scale_inverts_divide(self):
        assert scale(ns(0, 2, 3), 3) == ns(0, 6, 9)
        assert divide_exact(scale(ns(0, 2, 3), 3), 3) == ns(0, 2, 3)


class TestInterval:
    def test_membership(self):
        interval = Interval(2, 5)
        assert 2 in interval and 5 in interval and 6 not in interval
        assert list(interval) == [2, 3, 4, 5]
        assert interval.bits() == 0b111100

    def test_empty(self):
        interval = Interval(4, 3)
        assert interval.is_empty
        assert len(interval) == 0
        assert interval.bits() == 0


class TestSparse:
    BIG = 2**40

    def test_sorted_backend_keeps_tuple_form(self):
        x = NatSet([0, self.BIG])
        total = sumset(x, ns(0, 1), Backend.SORTED)
        assert total.elements == (0, 1, self.BIG, self.BIG + 1)
        assert self.BIG + 1 in total and self.BIG + 2 not in total
        assert len(total) == 4

    def test_sorted_kfold(self):
        x = NatSet([0, self.BIG])
        assert kfold(x, 3, Backend.SORTED).elements == (
            0, self.BIG, 2 * self.BIG, 3 * self.BIG,
        )

    def test_bitset_falls_back_to_sorted(self):
        x = NatSet.parse(f"0,3,{self.BIG}")
        assert sumset(x, x) == sumset(x, x, Backend.SORTED)
        assert kfold(x, 2).max == 2 * self.BIG

    def test_sparse_reflect(self):
        assert reflect(NatSet([0, 1, self.BIG])).elements == (0, self.BIG - 1, self.BIG)

    def test_mixed_representations_compare_equal(self):
        from_bits = NatSet.from_bits(0b1101)
        from_elements = ns(0, 2, 3)
        assert from_bits == from_elements
        assert hash(from_bits) == hash(from_elements)
        assert NatSet.from_bits(0b1011) != from_elements
