import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from dcaldpc import gf2
from dcaldpc.gf2 import Gf2Matrix, TrivialCodeError
from dcaldpc.pbibd import parity_check
from dcaldpc.analysis import weight6_witness

import oracles


def small_matrices(max_rows=64, max_cols=64):
    return st.tuples(st.integers(1, max_rows), st.integers(1, max_cols)).flatmap(
        lambda s: arrays(np.uint8, s, elements=st.integers(0, 1))
    )


def test_pack_roundtrip_across_word_boundary():
    rng = np.random.default_rng(5)
    a = rng.integers(0, 2, size=(7, 130), dtype=np.uint8)
    m = Gf2Matrix.from_dense(a)
    assert m.words.shape == (7, 3)
    assert np.array_equal(m.to_dense(), a)
    assert m.get(3, 129) == a[3, 129]


def test_rank_identity_and_zero():
    assert gf2.rank(Gf2Matrix.identity(5)) == 5
    assert gf2.rank(Gf2Matrix.zeros(4, 7)) == 0


def test_rank_does_not_mutate():
    h = parity_check(3).to_gf2()
    before = h.words.copy()
    gf2.rank(h)
    assert np.array_equal(h.words, before)


def test_rank_of_h6():
    assert gf2.rank(parity_check(6).to_gf2()) == 34


def test_null_space_examples():
    assert gf2.null_space_basis(Gf2Matrix.identity(3)) == []
    (v,) = gf2.null_space_basis(Gf2Matrix.from_dense([[1, 1]]))
    assert v.tolist() == [1, 1]
    assert len(gf2.null_space_basis(parity_check(6).to_gf2())) == 98


def test_rref_examples():
    r, piv = gf2.rref(Gf2Matrix.identity(4))
    assert r == Gf2Matrix.identity(4) and piv == [0, 1, 2, 3]
    r, piv = gf2.rref(Gf2Matrix.from_dense([[1, 1], [1, 1]]))
    assert r.to_dense().tolist() == [[1, 1], [0, 0]] and piv == [0]
    _, piv = gf2.rref(parity_check(3).to_gf2())
    assert len(piv) == 16


def test_systematic_generator_parity_example():
    g, perm = gf2.systematic_generator(Gf2Matrix.from_dense([[1, 1]]))
    assert g.to_dense().tolist() == [[1, 1]]
    assert perm == [0, 1]


def test_systematic_generator_rejects_full_rank():
    with pytest.raises(TrivialCodeError):
        gf2.systematic_generator(Gf2Matrix.identity(3))


@pytest.mark.parametrize("n", range(3, 11))
def test_generator_rows_are_codewords(n):
    h = parity_check(n)
    g, perm = gf2.systematic_generator(h.to_gf2())
    assert g.shape == (4 * n * n - 8 * n + 2, h.cols)
    rows = np.zeros(g.shape, dtype=np.uint8)
    rows[:, perm] = g.to_dense()
    # plain integer product, independent of the packed routines
    prod = (h.to_dense().astype(np.int64) @ rows.T.astype(np.int64)) % 2
    assert not prod.any()
    assert oracles.int_rank(rows.tolist()) == g.rows


def test_generator_spans_null_space():
    h = parity_check(4).to_gf2()
    g, perm = gf2.systematic_generator(h)
    rows = np.zeros(g.shape, dtype=np.uint8)
    rows[:, perm] = g.to_dense()
    basis = np.array(gf2.null_space_basis(h))
    both = np.vstack([rows, basis])
    assert gf2.rank(Gf2Matrix.from_dense(both)) == g.rows


def test_mat_vec_examples():
    v = np.array([1, 0, 1, 1], dtype=np.uint8)
    assert gf2.mat_vec(Gf2Matrix.identity(4), v).tolist() == v.tolist()
    assert gf2.mat_vec(Gf2Matrix.from_dense([[1, 1], [0, 1]]), [1, 1]).tolist() == [0, 1]
    h = parity_check(5)
    w = np.zeros(h.cols, dtype=np.uint8)
    w[weight6_witness(5)] = 1
    assert not gf2.mat_vec(h.to_gf2(), w).any()
    with pytest.raises(ValueError):
        gf2.mat_vec(Gf2Matrix.identity(3), [1, 0])


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rank_matches_transpose_and_oracle(a):
    m = Gf2Matrix.from_dense(a)
    r = gf2.rank(m)
    assert r == gf2.rank(m.transpose())
    assert r == oracles.int_rank(a.tolist())
    assert 0 <= r <= min(a.shape)


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rank_nullity(a):
    m = Gf2Matrix.from_dense(a)
    basis = gf2.null_space_basis(m)
    assert gf2.rank(m) + len(basis) == m.cols
    for v in basis:
        assert not gf2.mat_vec(m, v).any()
    if basis:
        assert gf2.rank(Gf2Matrix.from_dense(np.array(basis))) == len(basis)


@settings(max_examples=60, deadline=None)
@given(small_matrices(20, 90))
def test_rref_idempotent(a):
    r, piv = gf2.rref(Gf2Matrix.from_dense(a))
    r2, piv2 = gf2.rref(r)
    assert r2 == r and piv2 == piv
    dense = r.to_dense()
    for i, p in enumerate(piv):
        assert dense[:, p].tolist() == [1 if k == i else 0 for k in range(dense.shape[0])]


@settings(max_examples=40, deadline=None)
@given(small_matrices(16, 40), st.data())
def test_vec_mat_matches_integer_product(a, data):
    m = Gf2Matrix.from_dense(a)
    v = np.array(data.draw(st.lists(st.integers(0, 1), min_size=a.shape[0], max_size=a.shape[0])), dtype=np.uint8)
    assert gf2.vec_mat(v, m).tolist() == ((v.astype(int) @ a.astype(int)) % 2).tolist()
    w = np.array(data.draw(st.lists(st.integers(0, 1), min_size=a.shape[1], max_size=a.shape[1])), dtype=np.uint8)
    assert gf2.mat_vec(m, w).tolist() == ((a.astype(int) @ w.astype(int)) % 2).tolist()
