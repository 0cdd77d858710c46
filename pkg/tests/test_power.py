import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sgclass import (CayleyTable, PreconditionError, chain_table,
                     cyclic_table, null_table, validate)
from sgclass.power import basic_open, power_semigroup, subset_product


def subsets_of(n):
    return [frozenset(b for b in range(n) if (m >> b) & 1)
            for m in range(1, 1 << n)]


class TestSubsetProduct:
    def test_chain_bottom_absorbs(self, l3):
        assert subset_product(l3, {1, 2}, {0}) == {0}

    def test_group_sums(self, z3):
        assert subset_product(z3, {0, 1}, {0, 1}) == {0, 1, 2}

    def test_singletons(self, t5):
        for x in range(5):
            for y in range(5):
                assert subset_product(t5, {x}, {y}) == {t5.op[x][y]}

    def test_rejects_empty(self, l3):
        with pytest.raises(PreconditionError, match="nonempty"):
            subset_product(l3, frozenset(), {0})


class TestPowerSemigroup:
    def test_two_chain_gives_three_chain(self):
        ps = power_semigroup(chain_table(2))
        assert ps.elements == (frozenset({0}), frozenset({1}), frozenset({0, 1}))
        # {0} <= {0,1} <= {1} under the subset product
        assert ps.table.op == ((0, 0, 0), (0, 1, 2), (0, 2, 2))

    def test_element_count(self, l3):
        assert power_semigroup(l3).table.n == 7

    def test_null_base_collapses(self, n3):
        ps = power_semigroup(n3)
        assert all(ps.table.op[i][j] == ps.index_of({0})
                   for i in range(7) for j in range(7))

    def test_size_guard(self):
        with pytest.raises(PreconditionError, match="order <= 16"):
            power_semigroup(null_table(17))

    def test_table_matches_subset_product(self, corpus3):
        for table in corpus3:
            ps = power_semigroup(table)
            for i, u in enumerate(ps.elements):
                for j, v in enumerate(ps.elements):
                    assert ps.elements[ps.table.op[i][j]] == \
                        subset_product(table, u, v)

    def test_associative_and_commutative_for_commutative_base(self, corpus3):
        for table in corpus3:
            report = validate(power_semigroup(table).table)
            assert report.associative
            assert report.commutative

    def test_noncommutative_base_stays_noncommutative(self, lz2):
        report = validate(power_semigroup(lz2).table)
        assert report.associative
        assert not report.commutative

    def test_singleton_embedding(self, corpus3):
        for table in corpus3:
            ps = power_semigroup(table)
            images = {ps.singleton_index(x) for x in table.elements}
            assert len(images) == table.n
            for x in table.elements:
                for y in table.elements:
                    assert ps.table.op[ps.singleton_index(x)][ps.singleton_index(y)] \
                        == ps.singleton_index(table.op[x][y])


class TestBasicOpen:
    def test_pair(self, l3):
        assert basic_open(l3, {0, 1}) == \
            [frozenset({0}), frozenset({1}), frozenset({0, 1})]

    def test_singleton_is_isolated(self, l3):
        assert basic_open(l3, {2}) == [frozenset({2})]

    def test_full_set(self, l3):
        assert len(basic_open(l3, {0, 1, 2})) == 7

    def test_rejects_empty(self, l3):
        with pytest.raises(PreconditionError):
            basic_open(l3, frozenset())


class TestContinuityLaw:
    def test_exhaustive_small(self, corpus3):
        # members of the basic sets of U and V multiply into the basic set
        # of UV
        for table in corpus3:
            for u in subsets_of(table.n):
                for v in subsets_of(table.n):
                    uv = subset_product(table, u, v)
                    for b1 in basic_open(table, u):
                        for b2 in basic_open(table, v):
                            assert subset_product(table, b1, b2) <= uv

    @settings(max_examples=80)
    @given(st.data())
    def test_sampled_order_4_and_5(self, corpus5, data):
        table = data.draw(st.sampled_from([t for t in corpus5 if t.n >= 4]))
        n = table.n
        mask = st.integers(1, (1 << n) - 1)
        u = data.draw(mask)
        v = data.draw(mask)
        to_set = lambda m: frozenset(b for b in range(n) if (m >> b) & 1)
        b1 = data.draw(mask)
        b2 = data.draw(mask)
        u |= b1  # force b1 <= u, b2 <= v
        v |= b2
        uv = subset_product(table, to_set(u), to_set(v))
        assert subset_product(table, to_set(b1), to_set(b2)) <= uv
