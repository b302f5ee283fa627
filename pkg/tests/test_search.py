from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stacksort import (
    VERDICT_FERTILE,
    VERDICT_PROVEN_INFERTILE,
    VERDICT_UNKNOWN,
    HypothesisViolatedError,
    classify,
    density_lower_bound,
    fertility,
    fertility_histogram,
    matrix_bound_holds,
    nd_fd,
    small_odd_status,
    spectrum,
    valid_compositions,
    witness,
)
from conftest import vhc_table


class TestSpectrum:
    def test_s3(self):
        report = spectrum(3)
        assert report.achieved == frozenset({1, 5})
        assert report.witnesses == {1: (2, 1, 3), 5: (1, 2, 3)}

    def test_matches_histogram(self):
        for n in range(1, 6):
            hist = fertility_histogram(n)
            assert spectrum(n).achieved == frozenset(v for v in hist if v)

    def test_27_present_at_n7(self):
        report = spectrum(7)
        assert 27 in report.achieved
        assert fertility(report.witnesses[27]) == 27

    def test_witnesses_are_lex_least(self):
        report = spectrum(4)
        for value, w in report.witnesses.items():
            candidates = [v for v in vhc_table(4) if fertility(v) == value]
            assert w == min(candidates)

    def test_parallel_matches_sequential(self):
        assert spectrum(5, jobs=2) == spectrum(5, jobs=1)

    def test_bad_n(self):
        with pytest.raises(ValueError):
            spectrum(0)


class TestClassify:
    def test_fertile_via_construction(self):
        result = classify(2, 5)
        assert result.verdict == VERDICT_FERTILE
        assert result.witness == (1, 2)

    def test_zero_is_fertile(self):
        result = classify(0, 2)
        assert result.verdict == VERDICT_FERTILE
        assert result.witness == (2, 1)

    def test_3_proven_infertile_at_4(self):
        result = classify(3, 4)
        assert result.verdict == VERDICT_PROVEN_INFERTILE
        assert result.witness is None
        assert result.searched_n == 4 >= 3 + 1

    def test_unknown_below_the_certificate(self):
        result = classify(3, 2)
        assert result.verdict == VERDICT_UNKNOWN
        assert result.searched_n == 2

    def test_scan_stops_at_f_plus_1(self):
        # a generous n_max must not scan past the certificate length
        result = classify(3, 9)
        assert result.verdict == VERDICT_PROVEN_INFERTILE
        assert result.searched_n == 4

    def test_never_infertile_when_a_witness_exists(self):
        for f in range(0, 30):
            if witness(f).witness is not None:
                result = classify(f, 1)
                assert result.verdict == VERDICT_FERTILE

    def test_monotone_in_n_max(self):
        assert classify(3, 2).verdict == VERDICT_UNKNOWN
        assert classify(3, 3).verdict == VERDICT_UNKNOWN
        assert classify(3, 4).verdict == VERDICT_PROVEN_INFERTILE

    def test_cache_hit_preempts_construction(self):
        result = classify(1, 1, cache={"2 1 3": 1})
        assert result.verdict == VERDICT_FERTILE
        assert result.witness == (2, 1, 3)  # cache witness, not the built (1,)

    def test_lying_cache_is_re_verified(self):
        result = classify(3, 1, cache={"2 1": 3})  # fertility(21) is 0, not 3
        assert result.verdict == VERDICT_UNKNOWN

    def test_irrelevant_cache_is_ignored(self):
        result = classify(3, 4, cache={"2 1 3": 1, "3 1 4 2 5 6 7": 27})
        assert result.verdict == VERDICT_PROVEN_INFERTILE

    def test_parallel_matches_sequential(self):
        assert classify(3, 4, jobs=2) == classify(3, 4, jobs=1)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            classify(1, 0)
        with pytest.raises(ValueError):
            classify(-2, 3)


class TestDensity:
    def test_exact_period_value(self):
        count, ratio = density_lower_bound(10260)
        assert ratio == Fraction(1954, 2565)
        assert count == 7816

    def test_small(self):
        assert density_lower_bound(4) == (3, Fraction(3, 4))
        assert density_lower_bound(108).count == 83

    def test_periodic_increments(self):
        for n in (1, 17, 400):
            a = density_lower_bound(n).count
            b = density_lower_bound(n + 10260).count
            assert b - a == 7816

    def test_bad_n(self):
        with pytest.raises(ValueError):
            density_lower_bound(0)


class TestMatrixBound:
    def test_composition_matrix_of_the_example(self):
        matrix = sorted(valid_compositions((3, 1, 4, 2, 5, 6, 7)))
        n_d, f_d = nd_fd(matrix)
        assert (n_d, f_d) == (7, 27)
        assert matrix_bound_holds(matrix)

    def test_nd_fd_small(self):
        assert nd_fd([[1]]) == (1, 1)
        assert nd_fd([[1, 2], [2, 1]]) == (4, 4)

    def test_single_entry(self):
        assert matrix_bound_holds([[2]])  # N = 2 <= C_2 + 1 = 3

    def test_nd_is_n_and_fd_is_fertility(self):
        for n in range(1, 7):
            for w, (_, comps) in vhc_table(n).items():
                if not comps:
                    continue
                n_d, f_d = nd_fd(sorted(set(comps)))
                assert n_d == n
                assert f_d == fertility(w)

    def test_hypothesis_violation(self):
        with pytest.raises(HypothesisViolatedError):
            matrix_bound_holds([[1]])
        with pytest.raises(HypothesisViolatedError):
            matrix_bound_holds([[1, 2], [1, 2]])

    def test_malformed(self):
        with pytest.raises(ValueError):
            nd_fd([])
        with pytest.raises(ValueError):
            nd_fd([[1, 2], [1]])
        with pytest.raises(ValueError):
            nd_fd([[0, 2]])

    @settings(max_examples=200)
    @given(st.integers(1, 5), st.integers(1, 5), st.data())
    def test_bound_on_random_matrices(self, a, b, data):
        rows = [[data.draw(st.integers(1, 5)) for _ in range(b)] for _ in range(a)]
        for j in range(b):
            if all(row[j] == 1 for row in rows):
                rows[data.draw(st.integers(0, a - 1))][j] = data.draw(st.integers(2, 5))
        assert matrix_bound_holds(rows)


class TestSmallOddStatus:
    def test_table(self):
        assert small_odd_status(7) is False
        assert small_odd_status(27) is True
        assert small_odd_status(31) is None
        assert small_odd_status(4) is None

    def test_consistent_with_classify_and_witness(self):
        assert classify(3, 4).verdict == VERDICT_PROVEN_INFERTILE
        assert small_odd_status(3) is False
        assert witness(27).witness is not None
        assert small_odd_status(27) is True
