import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import _oracle
from pixscramble import (
    ChannelPlane,
    PositionPermutation,
    ShapeError,
    reshape_column_major,
    scramble_permutation,
    scramble_plane,
    transpose,
    unscramble_plane,
)

WORKED = ChannelPlane([[1, 2, 3], [4, 5, 6]])
# transpose to 3x2, read down columns (1..6), refill 2x3 down columns
WORKED_SCRAMBLED = [[1, 3, 5], [2, 4, 6]]


@st.composite
def planes(draw, max_side=16):
    m = draw(st.integers(1, max_side))
    n = draw(st.integers(1, max_side))
    seed = draw(st.integers(0, 2**32 - 1))
    return ChannelPlane(np.random.default_rng(seed).integers(0, 256, size=(m, n)))


def test_transpose_examples(rng):
    assert transpose(WORKED).tolist() == [[1, 4], [2, 5], [3, 6]]
    assert transpose(ChannelPlane([[9]])).tolist() == [[9]]
    p = ChannelPlane(rng.integers(0, 256, size=(4, 7)))
    assert transpose(transpose(p)) == p


def test_reshape_column_major_examples():
    assert reshape_column_major(ChannelPlane([[1, 4], [2, 5], [3, 6]]), 2, 3).tolist() == [
        [1, 3, 5],
        [2, 4, 6],
    ]
    assert reshape_column_major(WORKED, 2, 3) == WORKED
    row = ChannelPlane([[1, 2, 3, 4, 5, 6]])
    assert reshape_column_major(row, 6, 1).tolist() == [[1], [2], [3], [4], [5], [6]]


def test_reshape_count_mismatch():
    with pytest.raises(ShapeError):
        reshape_column_major(WORKED, 4, 2)


def test_reshape_matches_oracle(rng):
    values = rng.integers(0, 256, size=(3, 8)).tolist()
    got = reshape_column_major(ChannelPlane(values), 6, 4).tolist()
    assert got == _oracle.fill_column_major(_oracle.flatten_column_major(values), 6, 4)


def test_scramble_worked_example():
    assert _oracle.scramble(WORKED.tolist()) == WORKED_SCRAMBLED
    assert scramble_plane(WORKED).tolist() == WORKED_SCRAMBLED
    assert unscramble_plane(ChannelPlane(WORKED_SCRAMBLED)) == WORKED


def test_scramble_square_is_transpose():
    assert scramble_plane(ChannelPlane([[1, 2], [3, 4]])).tolist() == [[1, 3], [2, 4]]


@pytest.mark.parametrize("shape", [(1, 9), (9, 1), (1, 1)])
def test_vector_planes_fixed(rng, shape):
    p = ChannelPlane(rng.integers(0, 256, size=shape))
    assert scramble_plane(p) == p
    assert unscramble_plane(p) == p


def test_constant_plane_unchanged():
    p = ChannelPlane(np.full((5, 3), 77))
    assert scramble_plane(p) == p
    assert unscramble_plane(p) == p


def test_scramble_permutation_small_cases():
    assert scramble_permutation(1, 5).map == (0, 1, 2, 3, 4)
    assert scramble_permutation(2, 2).map == (0, 2, 1, 3)
    assert scramble_permutation(2, 3).map == (0, 3, 1, 4, 2, 5)


def test_permutation_apply_worked_example():
    assert scramble_permutation(2, 3).apply(WORKED).tolist() == WORKED_SCRAMBLED


def test_permutation_inverse_and_cycles():
    perm = scramble_permutation(3, 5)
    inv = perm.inverse()
    flat = np.arange(15)
    np.testing.assert_array_equal(inv.apply_flat(perm.apply_flat(flat)), flat)
    cycles = perm.cycles()
    assert sorted(k for c in cycles for k in c) == list(range(15))
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            assert perm.map[a] == b


def test_permutation_rejects_bad_input():
    with pytest.raises(ShapeError):
        scramble_permutation(0, 3)
    with pytest.raises(ShapeError):
        PositionPermutation(2, 2, (0, 1, 2))
    with pytest.raises(ShapeError):
        scramble_permutation(2, 3).apply(ChannelPlane([[1, 2], [3, 4]]))


@pytest.mark.parametrize("m", range(1, 65, 7))
@pytest.mark.parametrize("n", range(1, 65, 9))
def test_bijective(m, n):
    perm = scramble_permutation(m, n)
    assert perm.is_bijection()
    assert list(perm.map) == _oracle.closed_form_map(m, n)


def test_bijective_exhaustive_to_64():
    for m in range(1, 65):
        for n in range(1, 65):
            assert sorted(scramble_permutation(m, n).map) == list(range(m * n))


@settings(max_examples=200, deadline=None)
@given(planes())
def test_round_trip(p):
    assert unscramble_plane(scramble_plane(p)) == p
    assert scramble_plane(unscramble_plane(p)) == p


@settings(max_examples=200, deadline=None)
@given(planes())
def test_multiset_conserved(p):
    s = scramble_plane(p)
    assert s.shape == p.shape
    assert sorted(s.values.ravel().tolist()) == sorted(p.values.ravel().tolist())


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 16), st.integers(0, 2**32 - 1))
def test_square_is_involution(k, seed):
    p = ChannelPlane(np.random.default_rng(seed).integers(0, 256, size=(k, k)))
    assert scramble_plane(p) == transpose(p)
    assert scramble_plane(scramble_plane(p)) == p


def test_oracle_equivalence_all_small_shapes(rng):
    for m in range(1, 9):
        for n in range(1, 9):
            values = rng.integers(0, 256, size=(m, n)).tolist()
            expected = _oracle.scramble(values)
            assert scramble_plane(ChannelPlane(values)).tolist() == expected
            assert scramble_permutation(m, n).apply(ChannelPlane(values)).tolist() == expected
