import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idcolor.decide import (
    CASE_CRITICAL,
    CASE_EXCEPTION,
    CASE_FEW_COLUMNS,
    CASE_SINGLE_COLUMN,
    ceil_nth_root,
    distinguishing_number,
    feasible_intervals,
    floor_log,
    has_identity_coloring,
    iterated_log,
    margin_width,
    min_distinct_degree_rows,
)


class TestHelpers:
    def test_margin_width_examples(self):
        assert margin_width(3, 9) == 1
        assert margin_width(2, 3) == 1
        assert margin_width(3, 2) == 0

    def test_margin_width_needs_two_columns(self):
        with pytest.raises(ValueError):
            margin_width(3, 1)

    def test_min_distinct_degree_rows_examples(self):
        assert min_distinct_degree_rows(2, 5) == 4
        assert min_distinct_degree_rows(3, 1) == 0
        assert min_distinct_degree_rows(7, 1) == 0
        assert min_distinct_degree_rows(3, 4) == 2

    def test_two_colors_need_one_less_than_width(self):
        for s in range(1, 30):
            assert min_distinct_degree_rows(2, s) == max(0, s - 1)

    @given(st.integers(2, 5), st.integers(1, 10**6))
    def test_floor_log_is_exact(self, base, n):
        e = floor_log(base, n)
        assert base**e <= n < base ** (e + 1)

    @given(st.integers(1, 10**12), st.integers(1, 8))
    def test_ceil_nth_root_is_exact(self, n, k):
        c = ceil_nth_root(n, k)
        assert c**k >= n
        assert c == 1 or (c - 1) ** k < n

    def test_ceil_nth_root_near_perfect_powers(self):
        assert ceil_nth_root(3**40, 40) == 3
        assert ceil_nth_root(3**40 + 1, 40) == 4
        assert ceil_nth_root(10**30, 3) == 10**10

    def test_iterated_log(self):
        assert iterated_log(2, 1) == 0
        assert iterated_log(2, 2) == 1
        assert iterated_log(2, 5) == 2
        assert iterated_log(3, 531437) == 3


class TestHasIdentityColoring:
    def test_few_columns_exists(self):
        assert has_identity_coloring(3, 2, 8).exists

    def test_supercritical_boundary_excluded(self):
        assert not has_identity_coloring(3, 9, 2).exists

    def test_width_79_three_colors(self):
        assert has_identity_coloring(3, 79, 4).exists
        assert not has_identity_coloring(3, 79, 3).exists

    def test_exceptions(self):
        v = has_identity_coloring(2, 2, 2)
        assert not v.exists and v.case_label == CASE_EXCEPTION
        v = has_identity_coloring(2, 3, 3)
        assert not v.exists and v.case_label == CASE_EXCEPTION

    def test_single_edge_never_identity(self):
        for c in range(2, 6):
            v = has_identity_coloring(c, 1, 1)
            assert not v.exists and v.case_label == CASE_SINGLE_COLUMN

    def test_validates_parameters(self):
        with pytest.raises(ValueError):
            has_identity_coloring(1, 2, 2)
        with pytest.raises(ValueError):
            has_identity_coloring(2, 0, 2)
        with pytest.raises(ValueError):
            has_identity_coloring(2, 2, 0)

    def test_row_count_bound(self):
        for c, s in [(2, 2), (2, 3), (3, 2)]:
            for extra in range(3):
                assert not has_identity_coloring(c, s, c**s + extra).exists

    def test_margin_bound(self):
        # more columns than colors: rows up to the margin width are out,
        # and so are their mirror images
        for c, s in [(2, 5), (2, 9), (3, 10), (3, 28)]:
            x = margin_width(c, s)
            assert x >= 1
            for t in range(1, x + 1):
                assert not has_identity_coloring(c, s, t).exists
                assert not has_identity_coloring(c, s, c**s - t).exists
            assert has_identity_coloring(c, s, x + 2).exists

    def test_symmetry_in_the_two_part_sizes(self):
        for c in (2, 3, 4):
            for s in range(1, 41):
                for t in range(1, 41):
                    assert (
                        has_identity_coloring(c, s, t).exists
                        == has_identity_coloring(c, t, s).exists
                    ), (c, s, t)

    def test_complement_duality(self):
        for c in (2, 3):
            for s in range(2, 7):
                cs = c**s
                for t in range(1, cs):
                    mirror = cs - t
                    if mirror == s or s == t:
                        continue
                    assert (
                        has_identity_coloring(c, s, t).exists
                        == has_identity_coloring(c, s, mirror).exists
                    ), (c, s, t)

    def test_color_monotonicity(self):
        for c in (2, 3, 4):
            for s in range(1, 20):
                for t in range(1, 65):
                    if has_identity_coloring(c, s, t).exists:
                        assert has_identity_coloring(c + 1, s, t).exists, (c, s, t)

    def test_critical_chain_small(self):
        v = has_identity_coloring(2, 3, 2)
        assert v.exists and v.case_label == CASE_CRITICAL
        assert v.recursion_chain == ((2, 3, 2), (2, 2, 3))

    def test_critical_chain_depth_three(self):
        v = has_identity_coloring(2, 6, 3)
        assert v.exists
        assert v.recursion_chain == ((2, 6, 3), (2, 3, 6), (2, 2, 3))
        assert len(v.recursion_chain) <= iterated_log(2, 5) + 1

    def test_critical_boundary_can_be_infeasible(self):
        # at width 14 with two colors the delegated instance is supercritical
        v = has_identity_coloring(2, 14, 4)
        assert v.case_label == CASE_CRITICAL
        assert not v.exists
        assert len(v.recursion_chain) == 2


class TestFeasibleIntervals:
    def test_three_colors_published_style_ranges(self):
        for s in (2, 3):
            assert feasible_intervals(3, s).intervals == ((1, 3**s - 1),)
        for s in range(4, 9):
            assert feasible_intervals(3, s).intervals == ((2, 3**s - 2),)
        for s in range(9, 27):
            assert feasible_intervals(3, s).intervals == ((3, 3**s - 3),)
        assert feasible_intervals(3, 79).intervals == ((4, 3**79 - 4),)

    def test_exceptions_are_carved_out(self):
        assert feasible_intervals(2, 2).intervals == ((1, 1), (3, 3))
        assert feasible_intervals(2, 3).intervals == ((2, 2), (4, 6))

    def test_single_column(self):
        assert feasible_intervals(4, 1).intervals == ((2, 4),)

    def test_intervals_match_pointwise_decisions(self):
        for c in (2, 3):
            for s in range(1, 8):
                summary = feasible_intervals(c, s)
                feasible = set()
                for lo, hi in summary.intervals:
                    feasible.update(range(lo, min(hi, 3000) + 1))
                limit = min(c**s + 2, 3000)
                for t in range(1, limit):
                    assert (t in feasible) == has_identity_coloring(c, s, t).exists, (c, s, t)

    def test_boundary_notes_on_critical_widths(self):
        summary = feasible_intervals(3, 8)
        assert summary.case_label == CASE_CRITICAL
        assert [n.t for n in summary.boundary] == [2, 3**8 - 2]
        assert all(n.exists for n in summary.boundary)
        assert feasible_intervals(3, 2).case_label == CASE_FEW_COLUMNS


class TestDistinguishingNumber:
    def test_known_small_values(self):
        assert distinguishing_number(2, 2).value == 3
        assert distinguishing_number(1, 7).value == 7
        assert distinguishing_number(3, 3).value == 3
        assert distinguishing_number(2, 7).value == 3
        assert distinguishing_number(1, 1).value == 1

    def test_symmetric_in_arguments(self):
        assert distinguishing_number(7, 2).value == 3
        assert distinguishing_number(26, 3).value == distinguishing_number(3, 26).value

    def test_square_values_from_two_color_rule(self):
        # squares of side >= 4 admit two-color identity colorings
        assert distinguishing_number(4, 4).value == 2
        assert distinguishing_number(5, 5).value == 2

    def test_value_is_base_or_base_plus_one(self):
        for s in range(2, 8):
            for t in range(s, 200):
                res = distinguishing_number(s, t)
                assert res.value in (res.base_c, res.base_c + 1), (s, t, res)

    def test_closed_form_cross_check(self):
        # the interior formula misses the (3, 3) square exception; everywhere
        # else a defined closed form agrees with the authoritative search
        for s in range(2, 8):
            for t in range(s, 200):
                res = distinguishing_number(s, t)
                if res.closed_form_value is None:
                    continue
                if (s, t) == (3, 3):
                    assert res.closed_form_value == 2
                    assert res.value == 3
                else:
                    assert res.closed_form_value == res.value, (s, t, res)

    def test_validates_input(self):
        with pytest.raises(ValueError):
            distinguishing_number(0, 3)
        with pytest.raises(ValueError):
            distinguishing_number(3, -1)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4), st.integers(2, 120), st.integers(1, 400))
def test_verdict_is_deterministic(c, s, t):
    a = has_identity_coloring(c, s, t)
    b = has_identity_coloring(c, s, t)
    assert a == b
