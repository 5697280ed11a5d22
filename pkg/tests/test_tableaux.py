import itertools
import random

import pytest

from schubert_smt import (
    content,
    distinguished_w,
    enumerate_standard,
    is_standard,
    is_torus_invariant,
    make_index_tuple,
    make_tableau,
    tableau_weight,
)

from helpers import brute_force_standard, tab, tableaux_rows


X1_N3 = [(1, 3, 5), (2, 4, 6)]
Y1_N3 = [(1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 5, 6)]
Y2_N3 = [(1, 2, 4), (1, 3, 5), (2, 3, 6), (4, 5, 6)]


class TestMakeTableau:
    def test_builds_row_lists(self):
        t = tab(X1_N3, 6)
        assert t.shape == (2, 3)
        assert t.row_values() == ((1, 3, 5), (2, 4, 6))

    def test_four_row_tableau(self):
        t = tab(Y1_N3, 6)
        assert t.shape == (4, 3)

    def test_same_n_accepts_repeated_entries_across_rows(self):
        t = make_tableau([make_index_tuple((1, 2), 4), make_index_tuple((1, 3), 4)])
        assert t.shape == (2, 2)

    def test_rejects_heterogeneous_rows(self):
        with pytest.raises(ValueError):
            make_tableau([make_index_tuple((1, 2), 4), make_index_tuple((1, 3), 6)])
        with pytest.raises(ValueError):
            make_tableau([make_index_tuple((1, 2), 4), make_index_tuple((1, 2, 3), 4)])

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            make_tableau([])

    def test_does_not_require_standardness(self):
        t = tab([(1, 4), (2, 3)], 4)
        assert not is_standard(t)


class TestIsStandard:
    def test_bounded_chain(self):
        assert is_standard(tab(X1_N3, 6), distinguished_w(5, 3))

    def test_column_violation(self):
        assert not is_standard(tab([(1, 4), (2, 3)], 4))

    def test_degree_two_witness_is_standard(self):
        assert is_standard(tab(Y2_N3, 6), make_index_tuple((4, 5, 6), 6))

    def test_bound_shape_mismatch(self):
        with pytest.raises(ValueError):
            is_standard(tab(X1_N3, 6), make_index_tuple((1, 2), 4))

    def test_bounded_implies_unbounded(self):
        w4 = distinguished_w(4, 3)
        for t in enumerate_standard(2, 3, 6, bound=w4):
            assert is_standard(t)


class TestContentAndWeight:
    def test_degree_one_content(self):
        assert content(tab(X1_N3, 6)) == (1, 1, 1, 1, 1, 1)

    def test_degree_two_content(self):
        assert content(tab(Y1_N3, 6)) == (2, 2, 2, 2, 2, 2)

    def test_partial_content(self):
        assert content(tab([(1, 2)], 4)) == (1, 1, 0, 0)

    def test_weight_equals_content(self):
        assert tableau_weight(tab(X1_N3, 6)) == (1, 1, 1, 1, 1, 1)
        assert tableau_weight(tab([(1, 3)], 4)) == (1, 0, 1, 0)

    def test_weight_additive_under_concatenation(self):
        rng = random.Random(5)
        rows_pool = list(itertools.combinations(range(1, 7), 3))
        for _ in range(50):
            a = tab(sorted(rng.sample(rows_pool, 2)), 6)
            b = tab(sorted(rng.sample(rows_pool, 2)), 6)
            both = make_tableau(a.rows + b.rows)
            assert content(both) == tuple(
                x + y for x, y in zip(content(a), content(b))
            )

    def test_doubled_tableau_weight(self):
        doubled = make_tableau(tab(X1_N3, 6).rows + tab(X1_N3, 6).rows)
        assert tableau_weight(doubled) == (2, 2, 2, 2, 2, 2)


class TestTorusInvariance:
    def test_degree_one_invariant(self):
        assert is_torus_invariant(tab([(1, 2, 5), (3, 4, 6)], 6))

    def test_missing_value(self):
        assert not is_torus_invariant(tab([(1, 2), (1, 3)], 4))

    def test_degree_two_invariant(self):
        assert is_torus_invariant(tab(Y2_N3, 6))


class TestEnumerateStandard:
    def test_single_rows_are_subsets(self):
        assert len(enumerate_standard(1, 2, 4)) == 6

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_degree_one_invariant_cell_has_five_elements(self, n):
        got = enumerate_standard(
            2, n, 2 * n, bound=distinguished_w(5, n), content=(1,) * (2 * n)
        )
        assert len(got) == 5

    def test_two_by_two_unbounded(self):
        assert len(enumerate_standard(2, 2, 4)) == 20

    def test_canonical_order_is_flattened_lex(self):
        got = enumerate_standard(2, 2, 4)
        flat = [sum(t.row_values(), ()) for t in got]
        assert flat == sorted(flat)

    def test_content_constraint_gives_sublist(self):
        full = tableaux_rows(enumerate_standard(2, 2, 4))
        constrained = tableaux_rows(
            enumerate_standard(2, 2, 4, content=(1, 1, 1, 1))
        )
        assert [r for r in full if r in set(constrained)] == constrained

    def test_bound_monotonicity_along_chain(self):
        chain = [distinguished_w(i, 3) for i in (1, 2, 4, 5)]
        previous: set = set()
        for w in chain:
            current = set(tableaux_rows(enumerate_standard(4, 3, 6, bound=w)))
            assert previous <= current
            previous = current

    def test_rejects_inconsistent_content(self):
        with pytest.raises(ValueError):
            enumerate_standard(2, 2, 4, content=(1, 1, 1))  # wrong length
        with pytest.raises(ValueError):
            enumerate_standard(2, 2, 4, content=(1, 1, 1, 2))  # wrong sum
        with pytest.raises(ValueError):
            enumerate_standard(2, 2, 4, content=(-1, 2, 2, 1))

    def test_rejects_bad_bound_shape(self):
        with pytest.raises(ValueError):
            enumerate_standard(2, 2, 4, bound=make_index_tuple((1, 2, 3), 6))

    @pytest.mark.parametrize(
        "shape_rows,r,n,bound,cont",
        [
            (2, 2, 4, None, None),
            (2, 2, 4, None, (1, 1, 1, 1)),
            (3, 2, 5, None, None),
            (2, 3, 6, (4, 5, 6), (1, 1, 1, 1, 1, 1)),
            (2, 3, 6, (3, 5, 6), None),
            (4, 2, 4, (3, 4), (2, 2, 2, 2)),
            (3, 3, 6, (2, 4, 6), None),
            (4, 3, 6, (4, 5, 6), (2, 2, 2, 2, 2, 2)),
        ],
    )
    def test_matches_brute_force_oracle(self, shape_rows, r, n, bound, cont):
        bound_it = make_index_tuple(bound, n) if bound else None
        got = tableaux_rows(
            enumerate_standard(shape_rows, r, n, bound=bound_it, content=cont)
        )
        expected = brute_force_standard(shape_rows, r, n, bound=bound, content=cont)
        assert got == expected

    def test_every_output_is_standard_with_right_content(self):
        w = distinguished_w(5, 3)
        for t in enumerate_standard(4, 3, 6, bound=w, content=(2,) * 6):
            assert is_standard(t, w)
            assert content(t) == (2,) * 6
