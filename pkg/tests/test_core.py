"""Core types: reduction, containment, shifts, statistics, blocks."""

import pytest
from hypothesis import given, strategies as st

from invpat.core import (Block, as_inversion_sequence, as_pattern, avoids,
                         blocks, contains, extends_with_occurrence,
                         format_pattern, format_sequence,
                         is_inversion_sequence, parse_pattern,
                         parse_sequence, reduce_word, shift_positive, stats)

ALL_PATTERNS = ["012", "021", "102", "120", "201", "210",
                "000", "001", "010", "100", "011", "101", "110"]


def all_inversion_sequences(n):
    seqs = [()]
    for i in range(1, n + 1):
        seqs = [s + (v,) for s in seqs for v in range(i)]
    return seqs


def naive_contains(e, p):
    from itertools import combinations
    if len(p) > len(e):
        return False
    return any(reduce_word(sub) == tuple(p) for sub in combinations(e, len(p)))


class TestReduce:
    def test_worked_example(self):
        assert reduce_word((3, 0, 5, 2, 6, 6, 2)) == (2, 0, 3, 1, 4, 4, 1)

    def test_already_reduced(self):
        assert reduce_word((0, 0, 0)) == (0, 0, 0)

    def test_ranks(self):
        assert reduce_word((5, 2, 9)) == (1, 0, 2)

    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="empty word"):
            reduce_word(())

    @given(st.lists(st.integers(min_value=0, max_value=50), min_size=1,
                    max_size=12))
    def test_idempotent(self, word):
        once = reduce_word(word)
        assert reduce_word(once) == once


class TestContains:
    def test_increasing_triple(self):
        assert contains((0, 1, 0, 2), (0, 1, 2))

    def test_no_ascent_pair(self):
        assert not contains((0, 0, 0), (0, 1))

    def test_021_avoider(self):
        e = (0, 1, 0, 1, 0, 2, 5, 7, 7, 7, 9, 0, 10, 11, 12)
        assert avoids(e, (0, 2, 1))

    def test_pattern_longer_than_word(self):
        assert not contains((0,), (0, 1, 2))

    @pytest.mark.parametrize("pattern", ALL_PATTERNS)
    def test_matches_naive_exhaustive(self, pattern):
        p = parse_pattern(pattern)
        for e in all_inversion_sequences(5):
            assert contains(e, p) == naive_contains(e, p), (e, p)

    @given(st.lists(st.integers(0, 8), min_size=1, max_size=9),
           st.sampled_from(ALL_PATTERNS))
    def test_monotone_relabeling_invariance(self, word, pattern):
        # containment only depends on the relative order of the letters
        p = parse_pattern(pattern)
        relabeled = [3 * x + 1 for x in word]
        assert contains(word, p) == contains(relabeled, p)

    @given(st.lists(st.integers(0, 6), min_size=1, max_size=8),
           st.sampled_from(ALL_PATTERNS + ["0", "01", "10", "00", "0110"]))
    def test_incremental_matches_naive(self, word, pattern):
        p = parse_pattern(pattern)
        prefix, last = word[:-1], word[-1]
        expected = any(
            naive_contains(tuple(prefix) + (last,), p) and occ_uses_last
            for occ_uses_last in [True])
        # an occurrence ending at the last letter exists iff the full word
        # contains p through some subsequence ending there
        from itertools import combinations
        idx = range(len(word))
        expected = any(
            reduce_word([word[i] for i in sub]) == p
            for sub in combinations(idx, len(p))
            if sub and sub[-1] == len(word) - 1)
        assert extends_with_occurrence(prefix, last, p) == expected


class TestObservations:
    """Characterizations of the avoidance classes, both directions."""

    @staticmethod
    def positive_entries(e):
        return [x for x in e if x > 0]

    @pytest.mark.parametrize("n", range(9))
    def test_012_weakly_decreasing_positives(self, n):
        for e in all_inversion_sequences(n):
            pos = self.positive_entries(e)
            char = all(a >= b for a, b in zip(pos, pos[1:]))
            assert avoids(e, (0, 1, 2)) == char

    @pytest.mark.parametrize("n", range(9))
    def test_021_weakly_increasing_positives(self, n):
        for e in all_inversion_sequences(n):
            pos = self.positive_entries(e)
            char = all(a <= b for a, b in zip(pos, pos[1:]))
            assert avoids(e, (0, 2, 1)) == char

    @pytest.mark.parametrize("n", range(9))
    def test_210_two_weakly_increasing_subsequences(self, n):
        for e in all_inversion_sequences(n):
            wm = set(stats(e).weak_lr_maxima)
            rest = [e[i - 1] for i in range(1, len(e) + 1) if i not in wm]
            char = all(a <= b for a, b in zip(rest, rest[1:]))
            assert avoids(e, (2, 1, 0)) == char

    @pytest.mark.parametrize("n", range(9))
    def test_001_unimodal_strict_then_weak(self, n):
        for e in all_inversion_sequences(n):
            char = False
            for t in range(1, len(e) + 1):
                head = all(e[i] < e[i + 1] for i in range(t - 1))
                tail = all(e[i] >= e[i + 1] for i in range(t - 1, len(e) - 1))
                if head and tail:
                    char = True
                    break
            if not e:
                char = True
            assert avoids(e, (0, 0, 1)) == char

    @pytest.mark.parametrize("n", range(9))
    def test_011_distinct_positives(self, n):
        for e in all_inversion_sequences(n):
            pos = self.positive_entries(e)
            assert avoids(e, (0, 1, 1)) == (len(pos) == len(set(pos)))

    @pytest.mark.parametrize("n", range(9))
    def test_000_no_entry_thrice(self, n):
        for e in all_inversion_sequences(n):
            char = all(e.count(v) <= 2 for v in set(e))
            assert avoids(e, (0, 0, 0)) == char


class TestShift:
    def test_negative_shift(self):
        assert shift_positive((0, 3, 0, 4), -2) == (0, 1, 0, 2)

    def test_zeros_fixed(self):
        assert shift_positive((0, 0), 5) == (0, 0)

    def test_positive_shift(self):
        assert shift_positive((1, 2), 1) == (2, 3)

    def test_underflow_rejected(self):
        with pytest.raises(ValueError, match="nonpositive"):
            shift_positive((0, 2), -2)

    @given(st.lists(st.integers(0, 20), max_size=10),
           st.integers(1, 10))
    def test_round_trip(self, word, t):
        assert shift_positive(shift_positive(word, t), -t) == tuple(word)


class TestStats:
    def test_zeros_family(self):
        r = stats((0, 1, 0, 1, 0, 2, 5, 7, 7, 7, 9, 0, 10, 11, 12))
        assert r.zeros == 4
        assert r.maximal_entries == 3
        assert r.leading_zeros == 1
        assert r.late_zeros == 3

    def test_ascents(self):
        r = stats((0, 0, 0, 1, 0, 0, 4, 7, 7, 0, 9, 0, 9, 11, 14))
        assert r.ascents == 7

    def test_constant_zero(self):
        r = stats((0,) * 6)
        assert r.ascents == 0
        assert r.zeros == 6
        assert r.distinct_values == 1
        assert r.bottom == -1
        assert r.late_zeros == 0

    def test_empty(self):
        r = stats(())
        assert r.zeros == r.ascents == r.maximal_entries == 0
        assert r.distinct_values == 0
        assert r.bottom == -1

    def test_top_bottom(self):
        r = stats((0, 2, 0, 1))
        assert r.top == 2
        assert r.bottom == 1
        assert r.weak_lr_maxima == (1, 2)

    @given(st.integers(0, 7), st.data())
    def test_zero_split_invariant(self, n, data):
        entries = tuple(data.draw(st.integers(0, i - 1)) if i > 1 else 0
                        for i in range(1, n + 1))
        r = stats(entries)
        assert r.zeros == r.leading_zeros + r.late_zeros
        assert r.ascents <= max(0, n - 1)
        if n:
            assert r.maximal_entries >= 1
        weakly_increasing = all(a <= b for a, b in zip(entries, entries[1:]))
        assert (r.bottom == -1) == weakly_increasing


class TestBlocks:
    def test_worked_example(self):
        d = blocks((0, 1, 0, 1, 0, 2, 5, 7, 7, 7, 9, 0, 10, 11, 12))
        nonempty = {b.value: b for b in d.nonempty()}
        assert nonempty[0].entries == (0,)
        assert nonempty[1].entries == (1, 0, 1, 0)
        assert nonempty[2].entries == (2,)
        assert nonempty[5].entries == (5,)
        assert nonempty[7].entries == (7, 7, 7)
        assert nonempty[9].entries == (9, 0)
        assert nonempty[10].entries == (10,)
        assert nonempty[11].entries == (11,)
        assert nonempty[12].entries == (12,)
        assert sorted(b.value for b in d.nonempty() if b.maximal) == [0, 1, 7]

    def test_single(self):
        d = blocks((0,))
        assert d.blocks == (Block(value=0, start=1, entries=(0,),
                                  maximal=True),)

    def test_non_maximal_block(self):
        d = blocks((0, 0, 2))
        nonempty = {b.value: b for b in d.nonempty()}
        assert nonempty[0].entries == (0, 0)
        assert nonempty[0].maximal
        assert nonempty[2].entries == (2,)
        assert not nonempty[2].maximal

    def test_undefined_on_021(self):
        with pytest.raises(ValueError, match="undefined"):
            blocks((0, 0, 2, 1))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_round_trip_and_counts(self, n):
        for e in all_inversion_sequences(n):
            if contains(e, (0, 2, 1)):
                continue
            d = blocks(e)
            assert d.concatenation() == e
            assert len(d.blocks) == n
            r = stats(e)
            nonzero_blocks = [b for b in d.nonempty() if b.value >= 1]
            assert len(nonzero_blocks) == r.distinct_nonzero_values
            assert sum(1 for b in d.nonempty() if b.maximal) == \
                r.maximal_entries


class TestTextForms:
    def test_sequence_round_trip(self):
        assert parse_sequence("0,1,0,2") == (0, 1, 0, 2)
        assert format_sequence((0, 1, 0, 2)) == "0,1,0,2"
        assert parse_sequence("") == ()

    def test_pattern_forms(self):
        assert parse_pattern("021") == (0, 2, 1)
        assert parse_pattern("0,2,1") == (0, 2, 1)
        assert format_pattern((0, 2, 1)) == "021"
        assert format_pattern(tuple(range(11))) == \
            "0,1,2,3,4,5,6,7,8,9,10"

    def test_pattern_must_be_reduced(self):
        with pytest.raises(ValueError, match="reduced"):
            parse_pattern("12")

    def test_malformed(self):
        with pytest.raises(ValueError):
            parse_sequence("0,x,1")
        with pytest.raises(ValueError):
            parse_pattern("")

    def test_inversion_sequence_validation(self):
        assert is_inversion_sequence((0, 1, 2))
        assert not is_inversion_sequence((1, 0))
        assert not is_inversion_sequence((0, 2))
        with pytest.raises(ValueError):
            as_inversion_sequence((0, 0, 3))
        with pytest.raises(ValueError):
            as_pattern((1, 2))
