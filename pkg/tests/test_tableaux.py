import itertools
from collections import defaultdict
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from spechtgb.partitions import Filter, Partition, conjugate, dominates, enumerate_partitions
from spechtgb.tableaux import (
    HEAD, TAIL, Tableau, TableauError, column_standardize, enumerate_fillings,
    enumerate_standard, enumerate_tableaux, filter_power, min_w_shape, n_square_profile,
    predicted_initial_exponents, row_indices, shape_below_n, shapes_over, w_statistic,
)

P = Partition

STAB_2_331 = [
    "1 1 2/3 4 5/6", "1 1 2/3 4 6/5", "1 1 2/3 5 6/4", "1 1 3/2 4 5/6", "1 1 3/2 4 6/5",
    "1 1 3/2 5 6/4", "1 1 4/2 3 5/6", "1 1 4/2 3 6/5", "1 1 4/2 5 6/3", "1 1 5/2 3 6/4",
    "1 1 5/2 4 6/3",
]


def hook_count(lam: Partition) -> int:
    conj = conjugate(lam)
    prod = 1
    for i, r in enumerate(lam, 1):
        for j in range(1, r + 1):
            prod *= (r - j) + (conj.part(j) - i) + 1
    return factorial(lam.weight) // prod


def shapes(max_weight):
    for w in range(1, max_weight + 1):
        for l in range(1, w + 1):
            for lam in enumerate_partitions(w, l):
                yield l, lam


class TestTableau:
    def test_validation(self):
        Tableau([[1, 1, 2], [3, 4, 5], [6]], l=2)
        with pytest.raises(TableauError):
            Tableau([[1, 2], [1, 3]], l=2)
        with pytest.raises(TableauError):
            Tableau([[1, 2], [2, 3]], l=1)

    def test_json_round_trip(self):
        T = Tableau([[1, 1, 2], [3, 4, 5], [6]], l=2)
        data = T.to_json()
        assert data == {"shape": [3, 3, 1], "rows": [[1, 1, 2], [3, 4, 5], [6]], "l": 2, "variant": "head"}
        assert Tableau.from_json(data) == T

    def test_swap_variant(self):
        T = Tableau([[1, 1, 2], [3, 4, 5], [6]], l=2)
        S = T.swap_variant()
        assert S.variant == TAIL and S.rows == ((6, 6, 2), (3, 4, 5), (1,))
        assert S.swap_variant() == T


class TestEnumerateStandard:
    def test_eleven(self):
        tabs = enumerate_standard(2, P([3, 3, 1]))
        assert [str(t) for t in tabs] == STAB_2_331

    def test_single_row(self):
        assert len(enumerate_standard(1, P([5]))) == 1

    def test_32(self):
        assert len(enumerate_standard(1, P([3, 2]))) == 5

    def test_collision_error(self):
        with pytest.raises(TableauError, match="repeated label cannot avoid column collision"):
            enumerate_standard(3, P([2, 2]))

    @pytest.mark.parametrize("variant", [HEAD, TAIL])
    def test_matches_brute_force(self, variant):
        for l, lam in shapes(6):
            brute = sorted((t for t in enumerate_fillings(l, lam, variant) if t.is_standard()),
                           key=lambda t: t.reading_word())
            assert enumerate_standard(l, lam, variant) == brute, (l, lam)

    @pytest.mark.parametrize("w", [7, 8])
    def test_hook_length(self, w):
        for lam in enumerate_partitions(w):
            tabs = enumerate_standard(1, lam)
            assert len(tabs) == hook_count(lam)
            assert all(t.is_standard() for t in tabs)

    def test_head_ones_in_first_row(self):
        for l, lam in shapes(7):
            for t in enumerate_tableaux(l, lam):
                assert t.is_column_standard()
                assert all(1 not in r for r in t.rows[1:])

    def test_tail_copies_at_bottom(self):
        for l, lam in shapes(7):
            for t in enumerate_standard(l, lam, TAIL):
                for c in t.columns():
                    assert t.n not in c[:-1]

    def test_enumerate_tableaux_one_per_column_set(self):
        # one representative per f_T: the column sets are pairwise distinct
        for l, lam in shapes(6):
            tabs = enumerate_tableaux(l, lam)
            keys = {frozenset(t.columns()) for t in tabs}
            assert len(keys) == len(tabs)
            brute = {frozenset(column_standardize(t)[0].columns())
                     for t in enumerate_fillings(l, lam)}
            # f_T depends, up to sign, only on the set of columns
            assert keys == brute, (l, lam)


class TestColumnStandardize:
    def test_identity(self):
        T = enumerate_standard(2, P([3, 3, 1]))[0]
        assert column_standardize(T) == (T, 1)

    def test_transposition(self):
        T = Tableau([[1, 1, 2], [3, 4, 5], [6]], l=2)
        S = Tableau([[1, 1, 2], [6, 4, 5], [3]], l=2)
        assert column_standardize(S) == (T, -1)

    def test_intro_tableau(self):
        T = Tableau.from_columns([(4, 5, 6), (3, 2), (1,), (7,)])
        S, sign = column_standardize(T)
        assert S.columns() == [(4, 5, 6), (2, 3), (1,), (7,)]
        assert sign == -1

    def test_degenerate(self):
        T = Tableau([[1, 2], [1, 3]], l=2, allow_degenerate=True)
        with pytest.raises(TableauError, match="degenerate column"):
            column_standardize(T)


class TestRowIndices:
    def test_example(self):
        T = Tableau([[1, 1, 1, 1, 2, 3], [4, 5, 8], [6, 7]], l=4)
        d = row_indices(T)
        assert d[2] == d[3] == 1
        assert d[4] == d[5] == d[8] == 2
        assert d[6] == d[7] == 3
        assert d[1] == (1, 1, 1, 1)
        assert predicted_initial_exponents(T) == (0, 0, 0, 1, 1, 2, 2, 1)

    def test_single_row(self):
        T = Tableau([[1, 2, 3, 4]])
        assert all(v == 1 for k, v in row_indices(T).items() if k != 1)

    def test_single_column(self):
        T = Tableau([[1], [2], [3], [4]])
        assert [row_indices(T)[i] for i in (2, 3, 4)] == [2, 3, 4]


class TestTailStatistics:
    EXAMPLE = Tableau([[1, 2, 3, 5, 8, 8], [4, 6, 8], [7, 8]], l=4, variant=TAIL)

    def test_example(self):
        assert w_statistic(self.EXAMPLE) == 3
        assert shape_below_n(self.EXAMPLE) == P([4, 2, 1])

    def test_trivial(self):
        T = Tableau([[1, 2, 3, 4]], variant=TAIL)
        assert w_statistic(T) == 0 and shape_below_n(T) == P([3])
        col = Tableau([[1], [2], [3], [4]], variant=TAIL)
        assert w_statistic(col) == 3

    def test_head_rejected(self):
        with pytest.raises(TableauError):
            w_statistic(Tableau([[1, 2]]))

    def test_w_depends_only_on_shapes(self):
        for l, lam in shapes(8):
            if lam.weight - l + 1 < 2:
                continue
            seen = defaultdict(set)
            for t in enumerate_standard(l, lam, TAIL):
                mu = shape_below_n(t)
                seen[mu].add(w_statistic(t))
                assert w_statistic(t) == n_square_profile(lam, mu).w
            assert all(len(v) == 1 for v in seen.values())


def brute_shapes_over(mu, n, l):
    out = []
    for lam in enumerate_partitions(n + l - 1):
        rows = range(1, max(len(lam), len(mu)) + 1)
        if all(lam.part(i) >= mu.part(i) for i in rows) and all(
                lam.part(i + 1) <= mu.part(i) for i in rows):
            out.append(lam)
    return out


class TestShapesOver:
    def test_322(self):
        got = {p.lam: p.w for p in shapes_over(P([3, 2, 2]), 8, 2)}
        assert got == {P([5, 2, 2]): 0, P([4, 3, 2]): 1, P([4, 2, 2, 1]): 3,
                       P([3, 3, 2, 1]): 4, P([3, 2, 2, 2]): 6}

    def test_weight_mismatch(self):
        with pytest.raises(TableauError):
            shapes_over(P([3, 2, 2]), 6, 2)

    def test_one(self):
        assert {p.lam for p in shapes_over(P([1]), 2, 1)} == {P([2]), P([1, 1])}

    def test_l1_corners(self):
        for mu in enumerate_partitions(6):
            got = [p.lam for p in shapes_over(mu, 7, 1)]
            corners = 1 + sum(1 for i in range(1, len(mu) + 1) if i == 1 or mu.part(i) < mu.part(i - 1))
            assert len(got) == corners

    def test_matches_brute_force(self):
        for m in range(1, 7):
            for mu in enumerate_partitions(m):
                for l in (1, 2, 3):
                    got = {p.lam for p in shapes_over(mu, m + 1, l)}
                    assert got == set(brute_shapes_over(mu, m + 1, l))

    def test_profile_json(self):
        p = n_square_profile(P([3, 3, 1]), P([3, 2]))
        assert p.to_json()["columns_with_extra"] == [1, 3]


class TestMinWShape:
    def test_example(self):
        assert min_w_shape(P([4, 2, 1]), P([3, 3]), 1) == P([3, 3, 1])

    def test_zero_w(self):
        lam = P([5, 2, 2])
        assert min_w_shape(lam, P([3, 2, 2]), 2) == lam

    def test_empty(self):
        with pytest.raises(TableauError, match="no compatible shape"):
            min_w_shape(P([2, 2, 2, 1]), P([3, 3]), 1)

    def test_exhaustive(self):
        for m in range(1, 8):
            for mu in enumerate_partitions(m):
                for l in (1, 2, 3):
                    profiles = shapes_over(mu, m + 1, l)
                    for lam in enumerate_partitions(m + l, l):
                        X = [p for p in profiles if dominates(lam, p.lam)]
                        if not X:
                            continue
                        best = min(p.w for p in X)
                        winners = [p.lam for p in X if p.w == best]
                        assert winners == [min_w_shape(lam, mu, l)]


class TestFilterPower:
    F = Filter.below(P([3, 3, 1]), 2)

    @pytest.mark.parametrize("k, top", [(0, (1, 1, 1, 1, 1)), (1, (2, 1, 1, 1)), (2, (3, 1, 1)), (3, (3, 2))])
    def test_example(self, k, top):
        assert filter_power(self.F, k).frontier == (P(top),)

    def test_stable(self):
        assert filter_power(self.F, 4).members() == filter_power(self.F, 3).members()
        assert filter_power(self.F, 20).members() == filter_power(self.F, 3).members()

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 6), st.integers(1, 3), st.data())
    def test_closed_downward(self, n, l, data):
        lam = data.draw(st.sampled_from(enumerate_partitions(n + l - 1, l)))
        F = Filter.below(lam, l)
        k = data.draw(st.integers(0, n + l))
        direct = {mu for mu in enumerate_partitions(n - 1)
                  if any(p.w <= k and p.lam in F for p in shapes_over(mu, n, l))}
        for a, b in itertools.product(direct, enumerate_partitions(n - 1)):
            if dominates(a, b):
                assert b in direct
        assert set(filter_power(F, k).members()) == direct
