from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nanoread.permutation import PermSpec, apply_pi, f_pi, invert_pi


def specs(max_n=40):
    return st.builds(PermSpec, st.integers(1, max_n), st.integers(1, 4), st.integers(2, 7))


def test_worked_example_index_map():
    assert f_pi(PermSpec(6, 2, 3)) == (1, 2, 4, 5, 3, 6)


@pytest.mark.parametrize("n,p,ell", [(4, 1, 2), (8, 2, 2), (13, 3, 2)])
def test_even_two_column_layout_is_identity(n, p, ell):
    assert f_pi(PermSpec(n, p, ell)) == tuple(range(1, n + 1))


def test_hand_built_layout():
    # n=12, p=1, ell=4: rows (1..4), (5..8), (9..12); sub-blocks 1x2 left to right, top to bottom
    assert f_pi(PermSpec(12, 1, 4)) == (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12)
    # n=8, p=2, ell=4: 2x4 matrix, left 2x2 block rows then right 2x2 block rows
    assert f_pi(PermSpec(8, 2, 4)) == (1, 2, 5, 6, 3, 4, 7, 8)
    # odd ell drops the right column into the tail
    assert f_pi(PermSpec(7, 1, 3)) == (1, 2, 4, 5, 3, 6, 7)


def test_apply_examples():
    spec = PermSpec(6, 2, 3)
    assert apply_pi((0, 1, 1, 0, 1, 0), spec) == (0, 1, 0, 1, 1, 0)
    assert apply_pi((1, 0, 1, 1, 0, 0), spec) == (1, 0, 1, 0, 1, 0)
    assert apply_pi((0,) * 6, spec) == (0,) * 6


def test_invert_examples():
    spec = PermSpec(6, 2, 3)
    assert invert_pi((0, 1, 0, 1, 1, 0), spec) == (0, 1, 1, 0, 1, 0)
    ident = PermSpec(6, 1, 2)
    assert invert_pi((1, 1, 0, 1, 0, 0), ident) == (1, 1, 0, 1, 0, 0)


@given(specs())
def test_index_map_is_bijection(spec):
    assert sorted(f_pi(spec)) == list(range(1, spec.n + 1))


@given(specs(), st.data())
def test_round_trip(spec, data):
    x = tuple(data.draw(st.lists(st.integers(0, 1), min_size=spec.n, max_size=spec.n)))
    assert invert_pi(apply_pi(x, spec), spec) == x
    assert apply_pi(invert_pi(x, spec), spec) == x


@given(specs())
def test_apply_uses_index_map(spec):
    x = tuple(range(spec.n))
    assert apply_pi(x, spec) == tuple(c - 1 for c in f_pi(spec))


@given(specs())
def test_covered_prefix(spec):
    f = f_pi(spec)
    covered = spec.covered
    assert covered == 2 * spec.p * (spec.ell // 2) * (spec.n // (spec.p * spec.ell))
    rows = spec.p * spec.ell * (spec.n // (spec.p * spec.ell))
    # the interleaved prefix comes from the matrix, never from the right column of odd ell
    assert all(c <= rows for c in f[:covered])
    if spec.ell % 2:
        assert all(c % spec.ell != 0 for c in f[:covered])
    assert list(f[covered:]) == sorted(f[covered:])


def test_rejects_bad_specs():
    for args in ((0, 1, 2), (4, 0, 2), (4, 1, 1)):
        with pytest.raises(ValueError):
            PermSpec(*args)


def _alpha_runs(y, p, covered, within_block):
    """(start, alpha, length) of maximal alpha-runs starting on 2p-block boundaries."""
    for start in range(0, covered, 2 * p):
        limit = start + 2 * p if within_block else covered
        for alpha in ((0, 1), (1, 0)):
            length = 0
            while start + 2 * length + 2 <= limit and tuple(y[start + 2 * length:start + 2 * length + 2]) == alpha:
                length += 1
            if length:
                yield start, alpha, length


@pytest.mark.parametrize("n,p,ell", [(8, 2, 2), (12, 2, 3), (12, 3, 2), (12, 2, 4), (12, 3, 4), (12, 1, 3), (10, 2, 5)])
def test_adjacent_pair_sum_inside_alternating_run(n, p, ell):
    spec = PermSpec(n, p, ell)
    f = f_pi(spec)
    # the identity holds for runs inside one column pair; runs that leave the
    # pair (possible only when there are two or more pairs) are excluded
    within_block = ell // 2 > 1
    checked = 0
    for x in product((0, 1), repeat=n):
        y = apply_pi(x, spec)
        for start, _, length in _alpha_runs(y, p, spec.covered, within_block):
            for i in range(1, length):
                r = f[start + 2 * i - 1]
                assert x[r - 1] + x[r + ell - 2] == 1, (x, start, i)
                checked += 1
    assert checked > 0


def test_worked_example_pair_sum():
    spec = PermSpec(6, 2, 3)
    r = f_pi(spec)[1]
    assert r == 2
    for x in ((0, 1, 1, 0, 1, 0), (1, 0, 1, 1, 0, 0)):
        assert x[r - 1] + x[r + 3 - 2] == 1
