from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nanoread.channel import (
    ChannelParams,
    SubstitutionPattern,
    apply_substitutions,
    format_read,
    format_word,
    hamming_distance,
    invert_parity,
    is_t_sub_read_code,
    mod2_prefix,
    parse_read,
    parse_word,
    read_vector,
    reconstruct_from_clean_read,
)

words = st.lists(st.integers(0, 1), min_size=1, max_size=40).map(tuple)
ells = st.integers(1, 12)


def brute_read(x, ell):
    n = len(x)
    pad = lambda j: x[j - 1] if 1 <= j <= n else 0
    return tuple(sum(pad(j) for j in range(i - ell + 1, i + 1)) for i in range(1, n + ell))


class TestReadVector:
    def test_worked_example(self):
        assert read_vector((0, 1, 1, 0, 1, 0), 3) == (0, 1, 2, 2, 2, 1, 1, 0)
        assert read_vector((0, 1, 1, 0, 1, 0), 3)[3] == 2

    def test_all_zero(self):
        assert read_vector((0, 0, 0, 0), 2) == (0, 0, 0, 0, 0)

    def test_all_ones(self):
        assert read_vector((1, 1, 1), 2) == (1, 2, 2, 1)

    @given(words, ells)
    def test_matches_direct_window_sums(self, x, ell):
        assert read_vector(x, ell) == brute_read(x, ell)

    @given(words, ells)
    def test_clean_read_structure(self, x, ell):
        r = read_vector(x, ell)
        assert len(r) == len(x) + ell - 1
        assert r[0] in (0, 1) and r[-1] in (0, 1)
        assert all(abs(a - b) <= 1 for a, b in zip(r, r[1:]))
        assert all(0 <= v <= ell for v in r)
        assert sum(r) == ell * sum(x)

    @given(words)
    def test_window_one_is_identity(self, x):
        assert read_vector(x, 1) == x

    def test_rejects_bad_window(self):
        with pytest.raises(ValueError):
            read_vector((1, 0), 0)


class TestParity:
    def test_mod2_prefix_examples(self):
        assert mod2_prefix((0, 1, 2, 2, 2, 1, 1, 0), 6) == (0, 1, 0, 0, 0, 1)
        assert mod2_prefix((0,) * 7, 5) == (0,) * 5
        assert mod2_prefix((1, 2, 2, 1), 3) == (1, 0, 0)

    def test_mod2_prefix_too_short(self):
        with pytest.raises(ValueError):
            mod2_prefix((1, 2), 3)

    def test_invert_parity_examples(self):
        assert invert_parity((0, 1, 0, 0, 0, 1), 3) == (0, 1, 1, 0, 1, 0)
        assert invert_parity((0, 0, 0, 0), 3) == (0, 0, 0, 0)
        assert invert_parity((1, 0, 0), 2) == (1, 1, 1)
        assert mod2_prefix(read_vector((1, 1, 1), 2), 3) == (1, 0, 0)

    @pytest.mark.parametrize("ell", [1, 2, 3, 5])
    @pytest.mark.parametrize("n", [1, 4, 9])
    def test_parity_map_is_bijection(self, n, ell):
        images = {mod2_prefix(read_vector(x, ell), n) for x in product((0, 1), repeat=n)}
        assert len(images) == 2 ** n

    @given(words, ells)
    def test_round_trip(self, x, ell):
        assert invert_parity(mod2_prefix(read_vector(x, ell), len(x)), ell) == x

    @given(st.integers(1, 30).flatmap(lambda n: st.tuples(
        st.lists(st.integers(0, 1), min_size=n, max_size=n).map(tuple),
        st.lists(st.integers(0, 1), min_size=n, max_size=n).map(tuple))), ells)
    def test_parity_linear(self, xy, ell):
        x, y = xy
        n = len(x)
        z = tuple(a ^ b for a, b in zip(x, y))
        px, py, pz = (mod2_prefix(read_vector(w, ell), n) for w in (x, y, z))
        assert pz == tuple(a ^ b for a, b in zip(px, py))

    @given(words, ells, st.data())
    def test_one_substitution_flips_at_most_one_parity(self, x, ell, data):
        r = read_vector(x, ell)
        pos = data.draw(st.integers(1, len(r)))
        sym = data.draw(st.integers(0, ell))
        r2 = apply_substitutions(r, SubstitutionPattern(((pos, sym),)), ell)
        n = len(x)
        assert hamming_distance(mod2_prefix(r, n), mod2_prefix(r2, n)) <= 1


class TestSubstitutions:
    r = (0, 1, 2, 2, 2, 1, 1, 0)

    def test_two_edits_give_example_pair(self):
        out = apply_substitutions(self.r, SubstitutionPattern(((1, 1), (7, 0))), 3)
        assert out == (1, 1, 2, 2, 2, 1, 0, 0)
        assert out == read_vector((1, 0, 1, 1, 0, 0), 3)

    def test_empty_and_noop(self):
        assert apply_substitutions(self.r, SubstitutionPattern()) == self.r
        pat = SubstitutionPattern(((3, 2),))
        assert apply_substitutions(self.r, pat, 3) == self.r
        assert pat.noop_count(self.r) == 1

    def test_changes_exactly_effective_positions(self):
        pat = SubstitutionPattern(((2, 1), (4, 0), (8, 3)))
        out = apply_substitutions(self.r, pat, 3)
        changed = {i + 1 for i in range(len(out)) if out[i] != self.r[i]}
        assert changed == {4, 8}
        assert len(pat) - pat.noop_count(self.r) == 2

    @pytest.mark.parametrize("edits", [((0, 1),), ((9, 1),), ((2, 4),), ((2, -1),)])
    def test_out_of_range(self, edits):
        with pytest.raises(ValueError):
            apply_substitutions(self.r, SubstitutionPattern(edits), 3)

    def test_duplicate_positions(self):
        with pytest.raises(ValueError):
            SubstitutionPattern(((1, 0), (1, 1)))


class TestDistanceAndCodes:
    def test_hamming(self):
        assert hamming_distance((0, 1, 2, 2, 2, 1, 1, 0), (1, 1, 2, 2, 2, 1, 0, 0)) == 2
        assert hamming_distance((3, 1), (3, 1)) == 0
        assert hamming_distance((0, 0), (1, 2)) == 2
        with pytest.raises(ValueError):
            hamming_distance((0,), (0, 1))

    def test_example_pair_not_a_code(self):
        ok, witness = is_t_sub_read_code([(0, 1, 1, 0, 1, 0), (1, 0, 1, 1, 0, 0)], ChannelParams(3, 1, 6))
        assert not ok
        assert witness[2] == 2

    def test_singleton_is_code(self):
        assert is_t_sub_read_code([(1, 0, 1)], ChannelParams(2, 5, 3)) == (True, None)

    def test_full_space_not_a_code(self):
        full = list(product((0, 1), repeat=3))
        ok, (x, y, d) = is_t_sub_read_code(full, ChannelParams(2, 1, 3))
        assert not ok
        assert hamming_distance(read_vector(x, 2), read_vector(y, 2)) == d <= 2
        # brute force agrees that some pair is within 2
        assert min(hamming_distance(read_vector(a, 2), read_vector(b, 2))
                   for a in full for b in full if a != b) <= 2

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            is_t_sub_read_code([(0, 1), (0, 1, 1)], ChannelParams(2, 1, 2))

    def test_params_validation(self):
        for bad in ((0, 1, 1), (1, -1, 1), (1, 1, 0)):
            with pytest.raises(ValueError):
                ChannelParams(*bad)


class TestReconstruct:
    def test_examples(self):
        assert reconstruct_from_clean_read((0, 1, 2, 2, 2, 1, 1, 0), 3) == (0, 1, 1, 0, 1, 0)
        assert reconstruct_from_clean_read((0,) * 6, 3) == (0,) * 4
        assert reconstruct_from_clean_read((0, 2, 0), 2) is None

    @pytest.mark.parametrize("ell", [2, 3])
    def test_exhaustive_round_trip(self, ell):
        for n in range(1, 11):
            for x in product((0, 1), repeat=n):
                assert reconstruct_from_clean_read(read_vector(x, ell), ell) == x

    @settings(max_examples=50)
    @given(st.lists(st.integers(0, 1), min_size=15, max_size=200).map(tuple), st.integers(2, 8))
    def test_random_round_trip_long(self, x, ell):
        assert reconstruct_from_clean_read(read_vector(x, ell), ell) == x

    @given(st.lists(st.integers(0, 3), min_size=3, max_size=12).map(tuple))
    def test_invalid_reads_rejected(self, r):
        x = reconstruct_from_clean_read(r, 3)
        valid = any(read_vector(w, 3) == r for w in product((0, 1), repeat=len(r) - 2))
        assert (x is not None) == valid


class TestSerialization:
    def test_word_round_trip(self):
        assert parse_word("011010") == (0, 1, 1, 0, 1, 0)
        assert format_word((0, 1, 1)) == "011"

    def test_read_round_trip(self):
        r = (0, 10, 11, 3)
        assert parse_read(format_read(r)) == r
        assert format_read(r) == "0,10,11,3"

    @pytest.mark.parametrize("bad", ["", "012", "ab"])
    def test_bad_words(self, bad):
        with pytest.raises(ValueError):
            parse_word(bad)

    @pytest.mark.parametrize("bad", ["", "1,,2", "1,-2", "x"])
    def test_bad_reads(self, bad):
        with pytest.raises(ValueError):
            parse_read(bad)
