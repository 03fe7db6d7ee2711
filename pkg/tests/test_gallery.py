"""gallery 模块测试"""

import pytest

from sumsetkit.gallery import (
    FPM_SIZE_GUARD,
    ISO_SIZE_GUARD,
    FiniteMonoidTable,
    checked,
    cyclic_group,
    gallery_report,
    is_breakable,
    is_idempotent,
    left_zero_unitization,
    opposite,
    reduced_fpm_table,
    subset_union_table,
    tables_isomorphic,
    trivial_monoid,
    two_element_idempotent,
)
from sumsetkit.models import GuardError


# 单位元 0，但 (1·1)·2 ≠ 1·(1·2)
NON_ASSOCIATIVE = ((0, 1, 2), (1, 2, 1), (2, 1, 1))


class TestTable:
    def test_default_labels(self):
        assert cyclic_group(3).labels == ("0", "1", "2")

    def test_rejects_bad_identity(self):
        with pytest.raises(ValueError):
            FiniteMonoidTable(size=2, identity=1, table=((0, 1), (1, 0)))

    def test_rejects_bad_shape(self):
        with pytest.raises(ValueError):
            FiniteMonoidTable(size=2, identity=0, table=((0, 1),))
        with pytest.raises(ValueError):
            FiniteMonoidTable(size=2, identity=0, table=((0, 1), (1, 2)))

    def test_checked_rejects_non_associative(self):
        m = FiniteMonoidTable(size=3, identity=0, table=NON_ASSOCIATIVE)
        assert not m.is_associative()
        with pytest.raises(ValueError):
            checked(m)

    @pytest.mark.parametrize(
        "operation",
        [reduced_fpm_table, subset_union_table, opposite, is_breakable, is_idempotent],
    )
    def test_operations_reject_non_associative(self, operation):
        m = FiniteMonoidTable(size=3, identity=0, table=NON_ASSOCIATIVE)
        with pytest.raises(ValueError):
            operation(m)

    def test_isomorphism_rejects_non_associative(self):
        m = FiniteMonoidTable(size=3, identity=0, table=NON_ASSOCIATIVE)
        with pytest.raises(ValueError):
            tables_isomorphic(m, cyclic_group(3))
        with pytest.raises(ValueError):
            tables_isomorphic(cyclic_group(2), m)

    def test_properties(self):
        h = left_zero_unitization(2)
        assert h.labels == ("e", "v1", "v2")
        assert h.mul(h.element("v1"), h.element("v2")) == h.element("v1")
        assert not h.is_commutative()
        assert cyclic_group(4).is_commutative()
        assert is_idempotent(two_element_idempotent())
        assert not is_idempotent(cyclic_group(2))
        assert is_breakable(trivial_monoid())
        assert not is_breakable(cyclic_group(3))

    def test_opposite(self):
        h = left_zero_unitization(2)
        h_op = opposite(h)
        assert h_op.mul(1, 2) == 2
        assert opposite(h_op) == h
        assert h_op.is_associative()


class TestReducedFpm:
    def test_labels(self):
        fpm = reduced_fpm_table(left_zero_unitization(2))
        assert fpm.labels == ("{e}", "{e,v1}", "{e,v2}", "{e,v1,v2}")
        assert fpm.identity == 0

    @pytest.mark.parametrize("v", [1, 2, 3, 4])
    def test_size_and_associativity(self, v):
        fpm = reduced_fpm_table(left_zero_unitization(v))
        assert fpm.size == 2**v
        assert fpm.is_associative()
        assert fpm.is_commutative()

    def test_two_element(self):
        fpm = reduced_fpm_table(two_element_idempotent())
        assert fpm.labels == ("{1}", "{0,1}")

    def test_cyclic_is_not_union(self):
        z3 = cyclic_group(3)
        assert reduced_fpm_table(z3) != subset_union_table(z3)

    def test_guard(self):
        with pytest.raises(GuardError):
            reduced_fpm_table(cyclic_group(FPM_SIZE_GUARD + 1))


class TestIsomorphism:
    def test_cyclic(self):
        assert tables_isomorphic(cyclic_group(4), cyclic_group(4))
        assert not tables_isomorphic(cyclic_group(3), cyclic_group(4))

    def test_relabelled(self):
        # Z/2 with identity at index 1
        swapped = FiniteMonoidTable(size=2, identity=1, table=((1, 0), (0, 1)))
        assert tables_isomorphic(cyclic_group(2), swapped)
        assert not tables_isomorphic(cyclic_group(2), two_element_idempotent())

    def test_guard(self):
        with pytest.raises(GuardError):
            tables_isomorphic(cyclic_group(ISO_SIZE_GUARD + 1), cyclic_group(ISO_SIZE_GUARD + 1))


class TestGallery:
    @pytest.mark.parametrize(
        "v, isomorphic", [(1, True), (2, False), (3, False)]
    )
    def test_report(self, v, isomorphic):
        row = gallery_report(v)
        assert row.fpm_equal
        assert row.isomorphic is isomorphic
        assert row.breakable
        assert row.union_table

    def test_json(self):
        assert gallery_report(2).to_json() == (
            '{"v":2,"fpm_equal":true,"isomorphic":false,"breakable":true,"union_table":true}'
        )

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            gallery_report(0)
