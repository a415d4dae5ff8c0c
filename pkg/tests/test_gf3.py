import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

import oracles
from ternlrc.constructions import HAMMING_13, MDS_4_2_3
from ternlrc.gf3 import (
    Gf3Matrix,
    iter_span,
    kronecker,
    message_block,
    null_space,
    rank,
    rref,
    rref_with_pivots,
    row_basis,
)


def matrices(max_rows=6, max_cols=8, min_rows=1):
    shape = st.tuples(st.integers(min_rows, max_rows), st.integers(1, max_cols))
    return shape.flatmap(lambda s: arrays(np.int64, s, elements=st.integers(0, 2))).map(Gf3Matrix)


def test_entries_reduced_mod_3_and_immutable():
    m = Gf3Matrix([[3, 4, -1]])
    assert m.tolist() == [[0, 1, 2]]
    with pytest.raises(ValueError):
        m.array[0, 0] = 1
    with pytest.raises(AttributeError):
        m.foo = 1


def test_rejects_non_2d_and_float():
    with pytest.raises(ValueError):
        Gf3Matrix([1, 2, 3])
    with pytest.raises(TypeError):
        Gf3Matrix([[0.5, 1.0]])


def test_field_arithmetic():
    a = Gf3Matrix([[1, 2], [2, 2]])
    assert (a + a).tolist() == [[2, 1], [1, 1]]
    assert (a - a).is_zero()
    assert (-a).tolist() == [[2, 1], [1, 1]]
    assert (a @ Gf3Matrix.identity(2)) == a
    assert a.scale(2) == -a
    # every nonzero element is its own inverse
    assert (Gf3Matrix([[2]]) @ Gf3Matrix([[2]])).tolist() == [[1]]


def test_rank_examples():
    assert rank(Gf3Matrix.identity(3)) == 3
    assert rank(HAMMING_13) == 3
    assert rank(Gf3Matrix([[1, 2, 0, 1], [2, 1, 0, 2]])) == 1


def test_rref_examples():
    assert rref(Gf3Matrix.identity(4)) == Gf3Matrix.identity(4)
    assert rref(Gf3Matrix([[1, 1, 1], [2, 2, 2]])).tolist() == [[1, 1, 1], [0, 0, 0]]
    assert rref(MDS_4_2_3).tolist() == [[1, 0, 1, 2], [0, 1, 1, 1]]


def test_rref_pivots_leftmost_and_scaled():
    m, piv = rref_with_pivots(Gf3Matrix([[0, 2, 1], [0, 1, 1], [0, 0, 0]]))
    assert piv == (1, 2)
    assert m.tolist() == [[0, 1, 0], [0, 0, 1], [0, 0, 0]]


def test_null_space_examples():
    assert null_space(Gf3Matrix.ones(1, 3)).rows == 2
    ns = null_space(Gf3Matrix.identity(3))
    assert ns.shape == (0, 3)
    # the [4,2,3] code: eight codewords of weight 3
    words = np.vstack(list(iter_span(null_space(MDS_4_2_3).array)))
    assert np.bincount(np.count_nonzero(words, axis=1), minlength=5).tolist() == [1, 0, 0, 8, 0]


def test_kronecker_examples():
    k = kronecker(Gf3Matrix.identity(3), Gf3Matrix.ones(1, 3))
    assert k.tolist() == [
        [1, 1, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 1, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 1, 1],
    ]
    m = Gf3Matrix([[1, 2], [0, 1]])
    assert kronecker(Gf3Matrix.identity(1), m) == m
    row = kronecker(Gf3Matrix.ones(1, 3), Gf3Matrix([[0, 1, 2]]))
    assert row.tolist() == [[0, 1, 2, 0, 1, 2, 0, 1, 2]]


@pytest.mark.parametrize("a,b", [(1, 1), (2, 3), (3, 2), (4, 4)])
def test_kronecker_of_identities(a, b):
    assert kronecker(Gf3Matrix.identity(a), Gf3Matrix.identity(b)) == Gf3Matrix.identity(a * b)


def test_message_block_order():
    block = message_block(0, 9, 2)
    assert block.tolist() == [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [1, 2], [2, 0], [2, 1], [2, 2]]
    assert message_block(5, 6, 3).tolist() == [[0, 1, 2]]


def test_iter_span_chunks_cover_everything():
    basis = np.array([[1, 0, 2], [0, 1, 1]], dtype=np.uint8)
    whole = np.vstack(list(iter_span(basis, chunk=4)))
    assert whole.shape == (9, 3)
    assert len({tuple(r) for r in whole}) == 9


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_invariants(m):
    r = rank(m)
    assert r <= min(m.rows, m.cols)
    assert r == rank(rref(m)) == rank(m.T)
    assert r == oracles.rank_mod3(list(m.array))


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel(m):
    ns = null_space(m)
    assert rank(m) + ns.rows == m.cols
    assert (m @ ns.T).is_zero()
    assert rank(ns) == ns.rows


@settings(max_examples=100, deadline=None)
@given(matrices(max_cols=7))
def test_null_space_matches_exhaustive_kernel(m):
    ns = null_space(m)
    expected = {tuple(int(x) for x in v) for v in oracles.kernel(m.array)}
    got = {tuple(int(x) for x in v) for v in np.vstack(list(iter_span(ns.array)))} if ns.rows else {(0,) * m.cols}
    assert got == expected


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_rref_is_canonical(m):
    r, piv = rref_with_pivots(m)
    assert rref(r) == r
    for i, p in enumerate(piv):
        col = r.array[:, p]
        assert col[i] == 1 and np.count_nonzero(col) == 1
        assert not r.array[i, :p].any()
    # row space preserved
    assert rank(Gf3Matrix(np.vstack([m.array, r.array]))) == rank(m)
    assert row_basis(m).rows == len(piv)
