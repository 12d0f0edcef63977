from itertools import product

import pytest

from idcolor.automorphisms import distinct_degree_certificate, is_identity_coloring
from idcolor.construct import (
    ConstructionTrace,
    InfeasibleError,
    distinct_degree_matrix,
    identity_coloring,
    square_identity_coloring,
)
from idcolor.decide import has_identity_coloring, min_distinct_degree_rows
from idcolor.matrices import (
    ColorMatrix,
    SizeGuardError,
    column_degrees,
    row_multiset_equal,
)


def both_certificates(m):
    return (
        len(set(m.row_tuples())) == m.rows
        and len(set(column_degrees(m))) == m.cols
    )


class TestSquareIdentityColoring:
    def test_three_colors_side_two(self):
        assert square_identity_coloring(3, 2).row_tuples() == [(0, 1), (0, 2)]

    def test_three_colors_side_three(self):
        assert square_identity_coloring(3, 3).row_tuples() == [
            (0, 1, 2),
            (0, 1, 0),
            (0, 0, 1),
        ]

    def test_two_colors_side_four_block(self):
        assert square_identity_coloring(2, 4).row_tuples() == [
            (0, 1, 0, 1),
            (0, 1, 0, 0),
            (0, 0, 1, 1),
            (0, 0, 0, 1),
        ]

    def test_rejected_parameters(self):
        with pytest.raises(InfeasibleError):
            square_identity_coloring(2, 1)
        with pytest.raises(InfeasibleError):
            square_identity_coloring(5, 1)
        with pytest.raises(InfeasibleError):
            square_identity_coloring(2, 2)
        with pytest.raises(InfeasibleError):
            square_identity_coloring(2, 3)

    def test_every_feasible_square_is_identity(self):
        for c in (2, 3, 4, 5):
            for s in range(2, 10):
                if c == 2 and s in (2, 3):
                    continue
                m = square_identity_coloring(c, s)
                assert m.rows == m.cols == s
                assert is_identity_coloring(m), (c, s)


class TestDistinctDegreeMatrix:
    def test_two_color_two_column_example(self):
        assert distinct_degree_matrix(2, 2, 3).row_tuples() == [
            (0, 1),
            (0, 0),
            (1, 1),
        ]

    def test_single_column_base(self):
        assert distinct_degree_matrix(3, 1, 3).row_tuples() == [(0,), (1,), (2,)]

    def test_two_color_five_columns(self):
        m = distinct_degree_matrix(2, 5, 4)
        assert m.rows == 4 and m.cols == 5
        assert both_certificates(m)

    def test_range_errors(self):
        with pytest.raises(InfeasibleError):
            distinct_degree_matrix(2, 5, 3)  # below the threshold of 4
        with pytest.raises(InfeasibleError):
            distinct_degree_matrix(2, 2, 4)  # complement of the threshold
        with pytest.raises(ValueError):
            distinct_degree_matrix(1, 2, 2)

    def test_cell_guard(self):
        with pytest.raises(SizeGuardError):
            distinct_degree_matrix(17, 8, 10**8)

    def test_deterministic(self):
        a = distinct_degree_matrix(3, 4, 17)
        b = distinct_degree_matrix(3, 4, 17)
        assert a == b

    @pytest.mark.parametrize("c", [2, 3])
    def test_full_range_sweep(self, c):
        for s in range(1, 6):
            r = min_distinct_degree_rows(c, s)
            cs = c**s
            for t in range(r, min(cs - r, 256) + 1):
                m = distinct_degree_matrix(c, s, t)
                assert m.rows == t and m.cols == s
                assert both_certificates(m), (c, s, t)

    @pytest.mark.parametrize("c,s", [(4, 4), (5, 3), (4, 5), (5, 5)])
    def test_wider_alphabets(self, c, s):
        r = min_distinct_degree_rows(c, s)
        cs = c**s
        sample = set(range(r, min(r + 40, cs - r) + 1))
        sample.update(range(max(r, cs - r - 40), cs - r + 1))
        sample.update({cs // 2, cs // 2 + 1, cs // 3})
        for t in sorted(sample):
            if r <= t <= cs - r:
                m = distinct_degree_matrix(c, s, t)
                assert both_certificates(m), (c, s, t)

    @pytest.mark.parametrize("c", [2, 3])
    def test_sharpness_below_threshold(self, c):
        # one row short of the threshold no matrix has pairwise distinct
        # column degrees; exhaust all candidates
        for s in range(1, 6):
            t = min_distinct_degree_rows(c, s) - 1
            if t < 1:
                continue
            for flat in product(range(c), repeat=t * s):
                rows = [flat[i * s : (i + 1) * s] for i in range(t)]
                m = ColorMatrix.from_rows(c, rows, cols=s)
                assert len(set(column_degrees(m))) < s, (c, s, t, rows)


class TestIdentityColoring:
    def test_single_column(self):
        m, trace = identity_coloring(2, 1, 2)
        assert m.row_tuples() == [(0,), (1,)]
        assert trace.steps == ("single-column",)

    def test_wide_instance_via_transpose(self):
        m, trace = identity_coloring(3, 26, 3)
        assert (m.rows, m.cols) == (3, 26)
        assert is_identity_coloring(m)
        assert trace.steps[0] == "transpose-recursion"

    def test_complement_path(self):
        m, trace = identity_coloring(2, 2, 3)
        assert sorted(m.row_tuples()) == [(0, 0), (1, 0), (1, 1)]
        assert "complement-reduction" in trace.steps
        inner, _ = identity_coloring(2, 2, 1)
        from idcolor.matrices import complement

        assert row_multiset_equal(complement(inner), m)

    def test_refuses_exceptional_triples(self):
        for c, s, t in [(2, 2, 2), (2, 3, 3)]:
            with pytest.raises(InfeasibleError):
                identity_coloring(c, s, t)
        for c in range(2, 6):
            with pytest.raises(InfeasibleError):
                identity_coloring(c, 1, 1)

    def test_refuses_out_of_range_rows(self):
        with pytest.raises(InfeasibleError):
            identity_coloring(2, 2, 4)
        with pytest.raises(InfeasibleError):
            identity_coloring(3, 9, 2)

    def test_cell_guard(self):
        with pytest.raises(SizeGuardError):
            identity_coloring(17, 7, 10**8)

    def test_trace_nonempty_and_deterministic(self):
        a, ta = identity_coloring(3, 5, 40)
        b, tb = identity_coloring(3, 5, 40)
        assert isinstance(ta, ConstructionTrace) and ta.steps
        assert a == b and ta == tb

    def test_round_trip_small(self):
        for c in (2, 3, 4, 5):
            for s in range(1, 6):
                cs = c**s
                for t in range(1, min(cs, 220) + 1):
                    if not has_identity_coloring(c, s, t).exists:
                        continue
                    m, _ = identity_coloring(c, s, t)
                    assert (m.rows, m.cols) == (t, s)
                    assert is_identity_coloring(m), (c, s, t)

    def test_round_trip_near_full(self):
        for c, s in [(2, 6), (3, 5), (4, 4), (5, 3)]:
            cs = c**s
            for t in range(cs - 12, cs):
                if t < 1 or not has_identity_coloring(c, s, t).exists:
                    continue
                m, _ = identity_coloring(c, s, t)
                assert is_identity_coloring(m), (c, s, t)

    def test_critical_boundary_witnesses(self):
        # boundary instances settled by the delegation still construct
        for c, s, t in [(2, 3, 2), (2, 6, 3), (2, 6, 61), (3, 8, 2)]:
            assert has_identity_coloring(c, s, t).exists
            m, _ = identity_coloring(c, s, t)
            assert is_identity_coloring(m), (c, s, t)


def test_certificate_on_distinct_degree_output_matches_module_checker():
    m = distinct_degree_matrix(3, 4, 30)
    assert distinct_degree_certificate(m)
